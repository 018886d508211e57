"""Corpus windowing, optimization, metrics, and checkpoint persistence.

Training runs in float64 throughout; checkpoints store parameters as
little-endian float32 to halve file size.  To keep generation bitwise
reproducible across a save/load cycle, :func:`train` rounds the final
parameters through float32 before building the returned checkpoint, so
the in-memory artifact and the reloaded one hold identical values.
"""

from __future__ import annotations

import math
import random
import struct
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .model import (
    DEFAULT_HIDDEN,
    PARAM_ORDER,
    LstmParams,
    ModelDims,
    ModelParams,
    get_param,
    init_model_params,
    iter_params,
    set_param,
    teacher_forced_loss_and_grads,
    zero_gradients,
)
from .pianoroll import DEFAULT_GRID, VOCAB_SIZE, TokenSequence

CHECKPOINT_MAGIC = b"MFCK"
CHECKPOINT_VERSION = 1


class EmptyCorpus(ValueError):
    pass


class SequenceTooShort(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class InvalidConfig(ValueError):
    pass


class TrainingDiverged(RuntimeError):
    """An optimizer step produced NaN or Inf parameters."""


class CheckpointError(ValueError):
    pass


class BadMagic(CheckpointError):
    pass


class VersionUnsupported(CheckpointError):
    pass


class DimensionMismatch(CheckpointError):
    pass


class TruncatedFile(CheckpointError):
    pass


@dataclass(frozen=True)
class TrainingConfig:
    window_len: int = 64
    stride: int = 32
    epochs_max: int = 300
    accuracy_stop: float = 0.93
    learning_rate: float = 1e-3
    batch_size: int = 32
    hidden: int = DEFAULT_HIDDEN
    rng_seed: int = 0
    clip_norm: float = 5.0

    def __post_init__(self):
        if self.window_len < 2:
            raise InvalidConfig(f"window_len must be >= 2, got {self.window_len}")
        # zero is allowed (and met immediately, since accuracy >= 0):
        # it gives a one-epoch run without a special "no early stop" flag
        if not 0.0 <= self.accuracy_stop <= 1.0:
            raise InvalidConfig(f"accuracy_stop must be in [0, 1], got {self.accuracy_stop}")
        if self.learning_rate <= 0:
            raise InvalidConfig(f"learning_rate must be positive, got {self.learning_rate}")
        if self.stride < 1:
            raise InvalidConfig(f"stride must be >= 1, got {self.stride}")
        if self.batch_size < 1:
            raise InvalidConfig(f"batch_size must be >= 1, got {self.batch_size}")
        if self.epochs_max < 1:
            raise InvalidConfig(f"epochs_max must be >= 1, got {self.epochs_max}")
        if self.hidden < 1:
            raise InvalidConfig(f"hidden must be >= 1, got {self.hidden}")


@dataclass(frozen=True)
class EpochMetrics:
    epoch: int
    loss: float
    accuracy: float
    seconds: float


@dataclass
class ModelCheckpoint:
    version: int
    params: ModelParams
    vocab_size: int
    grid: float
    epochs_run: int
    final_loss: float
    final_accuracy: float


Window = tuple[list[int], list[int]]


def _tokens_of(seq) -> list[int]:
    if isinstance(seq, TokenSequence):
        return list(seq.tokens)
    return list(seq)


def make_windows(seq, window_len: int, stride: int) -> list[Window]:
    """Slice one sequence into (input, target) pairs shifted by one token.

    Window k starts at ``k * stride``; the target is the input shifted
    right by one position.  Any trailing partial window is dropped.
    """
    tokens = _tokens_of(seq)
    if window_len < 2 or stride < 1:
        raise InvalidConfig(f"window_len={window_len}, stride={stride}")
    if len(tokens) < window_len + 1:
        raise SequenceTooShort(
            f"sequence of {len(tokens)} tokens cannot fill a "
            f"{window_len}-token window plus its shifted target"
        )
    windows = []
    for start in range(0, len(tokens) - window_len, stride):
        windows.append(
            (tokens[start : start + window_len], tokens[start + 1 : start + window_len + 1])
        )
    return windows


def token_accuracy(distributions, targets: Sequence[int]) -> float:
    """Fraction of steps whose argmax prediction equals the target.

    Argmax ties resolve to the lowest index.
    """
    distributions = np.asarray(distributions)
    if len(distributions) != len(targets):
        raise LengthMismatch(
            f"{len(distributions)} distributions vs {len(targets)} targets"
        )
    if len(targets) == 0:
        return 0.0
    predicted = np.argmax(distributions, axis=1)
    return float(np.mean(predicted == np.asarray(targets)))


def clip_gradients(grads: dict[str, np.ndarray], max_norm: float) -> float:
    """Scale the whole gradient dict so its global L2 norm is at most
    ``max_norm``.  Returns the pre-clip norm."""
    total = 0.0
    for g in grads.values():
        total += float(np.sum(g * g))
    norm = math.sqrt(total)
    if norm > max_norm and norm > 0:
        scale = max_norm / norm
        for g in grads.values():
            g *= scale
    return norm


class AdamOptimizer:
    """Adam with bias correction; updates parameter arrays in place."""

    def __init__(
        self,
        learning_rate: float,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
    ):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.t = 0
        self._m: dict[str, np.ndarray] = {}
        self._v: dict[str, np.ndarray] = {}

    def step(self, params: dict[str, np.ndarray], grads: dict[str, np.ndarray]) -> None:
        self.t += 1
        for name, p in params.items():
            g = grads[name]
            m = self._m.setdefault(name, np.zeros_like(p))
            v = self._v.setdefault(name, np.zeros_like(p))
            m += (1 - self.beta1) * (g - m)
            v += (1 - self.beta2) * (g * g - v)
            m_hat = m / (1 - self.beta1**self.t)
            v_hat = v / (1 - self.beta2**self.t)
            p -= self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)


def _round_through_f32(params: ModelParams) -> None:
    for name in PARAM_ORDER:
        arr = get_param(params, name)
        set_param(params, name, arr.astype(np.float32).astype(np.float64))


def train(
    corpus: Sequence,
    config: TrainingConfig,
    initial_params: ModelParams | None = None,
    progress: Callable[[EpochMetrics], None] | None = None,
) -> tuple[ModelCheckpoint, list[EpochMetrics]]:
    """Teacher-forced training over all windows of all corpus sequences.

    Windows are reshuffled every epoch by a generator seeded with
    ``config.rng_seed``; gradients are averaged within each batch,
    clipped by global norm, and applied with Adam.  Training stops when
    epoch accuracy reaches ``config.accuracy_stop`` or after
    ``config.epochs_max`` epochs.  ``progress`` (if given) receives each
    epoch's metrics as soon as the epoch finishes.
    """
    if not corpus:
        raise EmptyCorpus("training corpus is empty")
    windows: list[Window] = []
    for seq in corpus:
        windows.extend(make_windows(seq, config.window_len, config.stride))

    if initial_params is None:
        dims = ModelDims(vocab=VOCAB_SIZE, hidden=config.hidden)
        params = init_model_params(dims, np.random.default_rng(config.rng_seed))
    else:
        params = initial_params
    param_dict = {name: arr for name, arr in iter_params(params)}

    optimizer = AdamOptimizer(config.learning_rate)
    shuffler = random.Random(config.rng_seed)
    metrics: list[EpochMetrics] = []

    for epoch in range(1, config.epochs_max + 1):
        started = time.perf_counter()
        order = list(range(len(windows)))
        shuffler.shuffle(order)

        loss_sum = 0.0
        correct = 0
        step_count = 0
        for batch_start in range(0, len(order), config.batch_size):
            batch = order[batch_start : batch_start + config.batch_size]
            batch_grads = zero_gradients(params)
            for index in batch:
                inputs, targets = windows[index]
                loss, distributions, grads = teacher_forced_loss_and_grads(
                    inputs, targets, params
                )
                loss_sum += loss
                correct += int(
                    np.sum(np.argmax(distributions, axis=1) == np.asarray(targets))
                )
                step_count += len(targets)
                for name in batch_grads:
                    batch_grads[name] += grads[name]
            for g in batch_grads.values():
                g /= len(batch)
            clip_gradients(batch_grads, config.clip_norm)
            optimizer.step(param_dict, batch_grads)
            for name, arr in param_dict.items():
                if not np.all(np.isfinite(arr)):
                    raise TrainingDiverged(
                        f"non-finite values in {name} after epoch {epoch} update"
                    )

        record = EpochMetrics(
            epoch=epoch,
            loss=loss_sum / len(windows),
            accuracy=correct / step_count,
            seconds=time.perf_counter() - started,
        )
        metrics.append(record)
        if progress is not None:
            progress(record)
        if record.accuracy >= config.accuracy_stop:
            break

    _round_through_f32(params)
    checkpoint = ModelCheckpoint(
        version=CHECKPOINT_VERSION,
        params=params,
        vocab_size=VOCAB_SIZE,
        grid=DEFAULT_GRID,
        epochs_run=len(metrics),
        final_loss=metrics[-1].loss,
        final_accuracy=metrics[-1].accuracy,
    )
    return checkpoint, metrics


def smoothed_losses(losses: Sequence[float], window: int = 10) -> list[float]:
    """Trailing moving average; shorter prefixes average what exists."""
    out = []
    for i in range(len(losses)):
        lo = max(0, i - window + 1)
        out.append(sum(losses[lo : i + 1]) / (i + 1 - lo))
    return out


# ---------------------------------------------------------------------------
# Checkpoint file format
# ---------------------------------------------------------------------------
#
#   bytes 0..3   magic "MFCK"
#   bytes 4..5   format version, little-endian u16
#   bytes 6..9   metadata length N, little-endian u32
#   N bytes      UTF-8 "key=value" lines (vocab, hidden, grid,
#                epochs_run, final_loss, final_accuracy)
#   rest         parameter arrays as row-major little-endian float32,
#                concatenated in PARAM_ORDER


def save_checkpoint(checkpoint: ModelCheckpoint) -> bytes:
    meta_lines = [
        f"vocab={checkpoint.vocab_size}",
        f"hidden={checkpoint.params.dims.hidden}",
        f"grid={checkpoint.grid!r}",
        f"epochs_run={checkpoint.epochs_run}",
        f"final_loss={checkpoint.final_loss!r}",
        f"final_accuracy={checkpoint.final_accuracy!r}",
    ]
    meta = "\n".join(meta_lines).encode("utf-8")
    parts = [CHECKPOINT_MAGIC, struct.pack("<H", checkpoint.version)]
    parts.append(struct.pack("<I", len(meta)))
    parts.append(meta)
    for _, arr in iter_params(checkpoint.params):
        parts.append(np.ascontiguousarray(arr, dtype="<f4").tobytes())
    return b"".join(parts)


def load_checkpoint(data: bytes) -> ModelCheckpoint:
    if len(data) < 4:
        raise TruncatedFile(f"{len(data)} bytes is too short for the magic")
    if data[:4] != CHECKPOINT_MAGIC:
        raise BadMagic(f"expected {CHECKPOINT_MAGIC!r}, found {data[:4]!r}")
    if len(data) < 10:
        raise TruncatedFile("header cut off before metadata length")
    (version,) = struct.unpack_from("<H", data, 4)
    if version != CHECKPOINT_VERSION:
        raise VersionUnsupported(f"version {version} (supported: {CHECKPOINT_VERSION})")
    (meta_len,) = struct.unpack_from("<I", data, 6)
    if len(data) < 10 + meta_len:
        raise TruncatedFile("metadata block cut off")
    meta: dict[str, str] = {}
    for line in data[10 : 10 + meta_len].decode("utf-8").splitlines():
        if line:
            key, _, value = line.partition("=")
            meta[key] = value
    try:
        vocab = int(meta["vocab"])
        hidden = int(meta["hidden"])
        grid = float(meta["grid"])
        epochs_run = int(meta["epochs_run"])
        final_loss = float(meta["final_loss"])
        final_accuracy = float(meta["final_accuracy"])
    except (KeyError, ValueError) as exc:
        raise DimensionMismatch(f"unusable metadata block: {exc}") from exc
    if vocab < 2 or hidden < 1:
        raise DimensionMismatch(f"vocab={vocab}, hidden={hidden}")

    dims = ModelDims(vocab=vocab, hidden=hidden)
    params = _empty_params(dims)
    offset = 10 + meta_len
    for name in PARAM_ORDER:
        shape = get_param(params, name).shape
        count = int(np.prod(shape))
        end = offset + 4 * count
        if end > len(data):
            raise TruncatedFile(f"array {name} cut off at byte {len(data)}")
        arr = np.frombuffer(data[offset:end], dtype="<f4").reshape(shape)
        set_param(params, name, arr.astype(np.float64))
        offset = end
    if offset != len(data):
        raise DimensionMismatch(f"{len(data) - offset} unexpected trailing bytes")
    return ModelCheckpoint(
        version=version,
        params=params,
        vocab_size=vocab,
        grid=grid,
        epochs_run=epochs_run,
        final_loss=final_loss,
        final_accuracy=final_accuracy,
    )


def _empty_params(dims: ModelDims) -> ModelParams:
    def cell(input_size: int, hidden_size: int) -> LstmParams:
        w = lambda: np.zeros((hidden_size, input_size))
        u = lambda: np.zeros((hidden_size, hidden_size))
        b = lambda: np.zeros(hidden_size)
        return LstmParams(w(), w(), w(), w(), u(), u(), u(), u(), b(), b(), b(), b())

    h, hd = dims.hidden, dims.decoder_hidden
    return ModelParams(
        dims=dims,
        encoder_fwd=cell(dims.vocab, h),
        encoder_bwd=cell(dims.vocab, h),
        decoder=cell(dims.vocab + hd, hd),
        W_a=np.zeros((hd, 2 * h)),
        W_c=np.zeros((hd, 2 * h + hd)),
        W_out=np.zeros((dims.vocab, hd)),
        b_out=np.zeros(dims.vocab),
    )
