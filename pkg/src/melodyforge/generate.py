"""Autoregressive melody generation from a seed.

The seed runs through the encoder once; the decoder then extends it one
grid step at a time, feeding each sampled token (and its attentional
vector) back in.  Output length is controlled externally: tokens are
emitted until the sequence covers the requested duration at the given
tempo and grid, with the END token masked out of every sampling step and
appended once afterwards.

Sampling uses :class:`random.Random` (Mersenne Twister) rather than a
platform-dependent source, so a fixed ``rng_seed`` reproduces the same
sequence on any machine.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, decoder_step, encode_bidirectional, initial_decoder_state
from .pianoroll import (
    DEFAULT_GRID,
    END,
    REST,
    TokenSequence,
    decode_tokens,
    name_to_pitch,
)
from .smf import serialize_smf

DEFAULT_TARGET_SECONDS = 120.0
DEFAULT_TEMPO_BPM = 120.0


class InvalidRequest(ValueError):
    pass


class InvalidSeedToken(InvalidRequest):
    pass


class DegenerateDistribution(ValueError):
    pass


@dataclass(frozen=True)
class GenerationRequest:
    seed_tokens: tuple[int, ...]
    target_seconds: float = DEFAULT_TARGET_SECONDS
    temperature: float = 1.0
    tempo_bpm: float = DEFAULT_TEMPO_BPM
    rng_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "seed_tokens", tuple(self.seed_tokens))
        if not self.seed_tokens:
            raise InvalidSeedToken("seed must contain at least one token")
        for token in self.seed_tokens:
            if not 0 <= token <= REST:  # pitches and REST; END cannot be seeded
                raise InvalidSeedToken(f"seed token {token} outside [0, {REST}]")
        if not self.target_seconds > 0:
            raise InvalidRequest(f"target_seconds must be positive, got {self.target_seconds}")
        if self.temperature < 0:
            raise InvalidRequest(f"temperature must be >= 0, got {self.temperature}")
        if not self.tempo_bpm > 0:
            raise InvalidRequest(f"tempo_bpm must be positive, got {self.tempo_bpm}")


def parse_seed(text: str) -> tuple[int, ...]:
    """Comma-separated seed: note names ("A4,C5"), integer tokens, "REST"."""
    tokens = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if item.upper() == "REST":
            tokens.append(REST)
        elif item.lstrip("-").isdigit():
            tokens.append(int(item))
        else:
            try:
                tokens.append(name_to_pitch(item))
            except ValueError as exc:
                raise InvalidSeedToken(str(exc)) from exc
    if not tokens:
        raise InvalidSeedToken(f"no seed notes in {text!r}")
    return tuple(tokens)


def step_seconds(grid: float, tempo_bpm: float) -> float:
    """Duration of one grid step: ``grid`` quarters at ``tempo_bpm``."""
    return grid * 60.0 / tempo_bpm


def sample_token(
    distribution: np.ndarray, temperature: float, rng: random.Random
) -> int:
    """Draw one token; temperature 0 is greedy (ties go to the lowest index).

    For positive temperatures the distribution is sharpened or flattened
    as p^(1/T) and renormalized, equivalent to softmax(log p / T).
    """
    p = np.asarray(distribution, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise DegenerateDistribution(f"need a 1-d distribution, got shape {p.shape}")
    total = p.sum()
    if not np.isfinite(total) or total <= 0 or np.any(p < 0):
        raise DegenerateDistribution("no probability mass to sample from")
    if temperature == 0:
        return int(np.argmax(p))
    # dividing by the max first keeps p**(1/T) from underflowing to
    # all-zero at small temperatures
    weights = (p / p.max()) ** (1.0 / temperature)
    cumulative = np.cumsum(weights)
    draw = rng.random() * cumulative[-1]
    return int(np.searchsorted(cumulative, draw, side="right").clip(0, p.size - 1))


def generate(request: GenerationRequest, params: ModelParams) -> TokenSequence:
    """Extend the seed to the requested duration; returns seed + continuation + END.

    The sequence holds ``ceil(target_seconds / step_seconds)`` sounding
    (pitch or rest) tokens in total, so the nominal duration lands within
    one grid step of the target regardless of seed length.  A seed
    already longer than that is returned unshortened.
    """
    seed = list(request.seed_tokens)
    grid = DEFAULT_GRID
    total_steps = math.ceil(request.target_seconds / step_seconds(grid, request.tempo_bpm))
    rng = random.Random(request.rng_seed)

    tokens = list(seed)
    remaining = total_steps - len(seed)
    if remaining > 0:
        inputs = np.zeros((len(seed), params.dims.vocab))
        inputs[np.arange(len(seed)), seed] = 1.0
        enc = encode_bidirectional(inputs, params)
        state = initial_decoder_state(enc)
        prev = seed[-1]
        for _ in range(remaining):
            x = np.zeros(params.dims.vocab)
            x[prev] = 1.0
            distribution, state, _ = decoder_step(x, state, enc, params)
            masked = distribution.copy()
            masked[END] = 0.0  # length is controlled here, not by the model
            token = sample_token(masked, request.temperature, rng)
            tokens.append(token)
            prev = token
    tokens.append(END)
    return TokenSequence(tokens=tokens, grid=grid)


def generate_to_midi(request: GenerationRequest, params: ModelParams) -> bytes:
    """Generate and serialize to Standard MIDI File bytes."""
    sequence = generate(request, params)
    midi = decode_tokens(sequence, tempo_bpm=request.tempo_bpm)
    return serialize_smf(midi)


def nominal_duration_seconds(sequence: TokenSequence, tempo_bpm: float) -> float:
    """Duration implied by the token count (END excluded) at the tempo."""
    count = sum(1 for t in sequence.tokens if t != END)
    return count * step_seconds(sequence.grid, tempo_bpm)
