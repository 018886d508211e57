"""Encoder-decoder network for melody continuation.

Architecture: a bi-directional LSTM encoder reads the one-hot token
sequence; a single-layer LSTM decoder attends over the encoder states
with the multiplicative ("general") Luong score ``h_t' W_a h_s`` and is
fed its own attentional vector back as part of the next input (input
feeding).  The decoder's initial state is the concatenation of the two
final encoder states, so the decoder is twice as wide as each encoder
direction.

All math is float64; every backward pass here is checked against central
differences in the test suite.  Parameters are plain numpy arrays held in
dataclasses; nothing in this module mutates them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ops import (
    ShapeMismatch,
    cross_entropy,
    sigmoid,
    softmax,
    softmax_cross_entropy_backward,
    tanh,
)
from .pianoroll import VOCAB_SIZE

DEFAULT_HIDDEN = 128


class EmptySequence(ValueError):
    pass


@dataclass
class LstmParams:
    """One LSTM cell: input weights W, recurrent weights U, biases b.

    Gate order throughout: i (input), f (forget), o (output), g (cell
    candidate).  Shapes: W_* is (hidden, input), U_* is (hidden, hidden),
    b_* is (hidden,).
    """

    W_i: np.ndarray
    W_f: np.ndarray
    W_o: np.ndarray
    W_g: np.ndarray
    U_i: np.ndarray
    U_f: np.ndarray
    U_o: np.ndarray
    U_g: np.ndarray
    b_i: np.ndarray
    b_f: np.ndarray
    b_o: np.ndarray
    b_g: np.ndarray

    @property
    def hidden_size(self) -> int:
        return self.W_i.shape[0]

    @property
    def input_size(self) -> int:
        return self.W_i.shape[1]


@dataclass(frozen=True)
class ModelDims:
    vocab: int = VOCAB_SIZE
    hidden: int = DEFAULT_HIDDEN  # per encoder direction

    @property
    def decoder_hidden(self) -> int:
        # decoder state is initialized from the two concatenated
        # encoder finals, so it is twice the directional width
        return 2 * self.hidden


@dataclass
class ModelParams:
    dims: ModelDims
    encoder_fwd: LstmParams
    encoder_bwd: LstmParams
    decoder: LstmParams
    W_a: np.ndarray  # attention score weight (decoder_hidden, 2*hidden)
    W_c: np.ndarray  # attentional combine ((2*hidden + decoder_hidden) -> decoder_hidden)
    W_out: np.ndarray  # output projection (vocab, decoder_hidden)
    b_out: np.ndarray


@dataclass
class EncoderStates:
    """Per-step concatenated [forward || backward] states plus finals."""

    states: np.ndarray  # (S, 2*hidden)
    final_h: np.ndarray  # (2*hidden,)
    final_c: np.ndarray  # (2*hidden,)


@dataclass
class DecoderState:
    h: np.ndarray
    c: np.ndarray
    h_tilde: np.ndarray  # attentional vector fed into the next input


def _glorot(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    limit = np.sqrt(6.0 / (rows + cols))
    return rng.uniform(-limit, limit, size=(rows, cols))


def init_lstm_params(input_size: int, hidden_size: int, rng: np.random.Generator) -> LstmParams:
    def w():
        return _glorot(rng, hidden_size, input_size)

    def u():
        return _glorot(rng, hidden_size, hidden_size)

    return LstmParams(
        W_i=w(), W_f=w(), W_o=w(), W_g=w(),
        U_i=u(), U_f=u(), U_o=u(), U_g=u(),
        b_i=np.zeros(hidden_size),
        b_f=np.ones(hidden_size),  # positive forget bias keeps memory open early
        b_o=np.zeros(hidden_size),
        b_g=np.zeros(hidden_size),
    )


def init_model_params(dims: ModelDims, rng: np.random.Generator) -> ModelParams:
    h, hd = dims.hidden, dims.decoder_hidden
    return ModelParams(
        dims=dims,
        encoder_fwd=init_lstm_params(dims.vocab, h, rng),
        encoder_bwd=init_lstm_params(dims.vocab, h, rng),
        decoder=init_lstm_params(dims.vocab + hd, hd, rng),
        W_a=_glorot(rng, hd, 2 * h),
        W_c=_glorot(rng, hd, 2 * h + hd),
        W_out=_glorot(rng, dims.vocab, hd),
        b_out=np.zeros(dims.vocab),
    )


# ---------------------------------------------------------------------------
# LSTM cell
# ---------------------------------------------------------------------------


def lstm_cell_step(
    x: np.ndarray, h: np.ndarray, c: np.ndarray, p: LstmParams
) -> tuple[np.ndarray, np.ndarray]:
    """One LSTM step: gates i/f/o with sigmoid, candidate g with tanh."""
    if x.shape[-1] != p.input_size or h.shape[-1] != p.hidden_size:
        raise ShapeMismatch(
            f"input {x.shape} / state {h.shape} do not match cell "
            f"({p.hidden_size}, {p.input_size})"
        )
    i = sigmoid(p.W_i @ x + p.U_i @ h + p.b_i)
    f = sigmoid(p.W_f @ x + p.U_f @ h + p.b_f)
    o = sigmoid(p.W_o @ x + p.U_o @ h + p.b_o)
    g = tanh(p.W_g @ x + p.U_g @ h + p.b_g)
    c_new = f * c + i * g
    h_new = o * tanh(c_new)
    return h_new, c_new


@dataclass
class _LstmStepCache:
    x: np.ndarray
    h_prev: np.ndarray
    c_prev: np.ndarray
    i: np.ndarray
    f: np.ndarray
    o: np.ndarray
    g: np.ndarray
    c_new: np.ndarray
    tanh_c: np.ndarray


def _lstm_step_cached(x, h, c, p: LstmParams) -> tuple[np.ndarray, np.ndarray, _LstmStepCache]:
    i = sigmoid(p.W_i @ x + p.U_i @ h + p.b_i)
    f = sigmoid(p.W_f @ x + p.U_f @ h + p.b_f)
    o = sigmoid(p.W_o @ x + p.U_o @ h + p.b_o)
    g = tanh(p.W_g @ x + p.U_g @ h + p.b_g)
    c_new = f * c + i * g
    tanh_c = tanh(c_new)
    h_new = o * tanh_c
    return h_new, c_new, _LstmStepCache(x, h, c, i, f, o, g, c_new, tanh_c)


def _lstm_step_backward(
    d_h: np.ndarray,
    d_c: np.ndarray,
    cache: _LstmStepCache,
    p: LstmParams,
    grads: dict[str, np.ndarray],
    prefix: str,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Backprop one step; accumulates parameter grads under ``prefix``.

    Returns (d_x, d_h_prev, d_c_prev).
    """
    d_o = d_h * cache.tanh_c
    d_c = d_c + d_h * cache.o * (1.0 - cache.tanh_c**2)
    d_f = d_c * cache.c_prev
    d_i = d_c * cache.g
    d_g = d_c * cache.i
    d_c_prev = d_c * cache.f

    d_pre_i = d_i * cache.i * (1.0 - cache.i)
    d_pre_f = d_f * cache.f * (1.0 - cache.f)
    d_pre_o = d_o * cache.o * (1.0 - cache.o)
    d_pre_g = d_g * (1.0 - cache.g**2)

    d_x = np.zeros_like(cache.x)
    d_h_prev = np.zeros_like(cache.h_prev)
    for gate, d_pre, W, U in (
        ("i", d_pre_i, p.W_i, p.U_i),
        ("f", d_pre_f, p.W_f, p.U_f),
        ("o", d_pre_o, p.W_o, p.U_o),
        ("g", d_pre_g, p.W_g, p.U_g),
    ):
        grads[f"{prefix}.W_{gate}"] += np.outer(d_pre, cache.x)
        grads[f"{prefix}.U_{gate}"] += np.outer(d_pre, cache.h_prev)
        grads[f"{prefix}.b_{gate}"] += d_pre
        d_x += W.T @ d_pre
        d_h_prev += U.T @ d_pre
    return d_x, d_h_prev, d_c_prev


# ---------------------------------------------------------------------------
# Encoder
# ---------------------------------------------------------------------------


@dataclass
class _EncoderCache:
    fwd_steps: list[_LstmStepCache]
    bwd_steps: list[_LstmStepCache]  # indexed by position, computed right-to-left


def _encode(
    inputs: np.ndarray, params: ModelParams, keep_cache: bool
) -> tuple[EncoderStates, _EncoderCache | None]:
    if inputs.ndim != 2 or inputs.shape[0] == 0:
        raise EmptySequence("encoder needs at least one input step")
    length = inputs.shape[0]
    hidden = params.dims.hidden
    fwd = np.zeros((length, hidden))
    bwd = np.zeros((length, hidden))
    fwd_caches: list[_LstmStepCache] = []
    bwd_caches: list[_LstmStepCache | None] = [None] * length

    h = np.zeros(hidden)
    c = np.zeros(hidden)
    for s in range(length):
        h, c, cache = _lstm_step_cached(inputs[s], h, c, params.encoder_fwd)
        fwd[s] = h
        if keep_cache:
            fwd_caches.append(cache)
    final_fwd_h, final_fwd_c = h, c

    h = np.zeros(hidden)
    c = np.zeros(hidden)
    for s in reversed(range(length)):
        h, c, cache = _lstm_step_cached(inputs[s], h, c, params.encoder_bwd)
        bwd[s] = h
        if keep_cache:
            bwd_caches[s] = cache
    final_bwd_h, final_bwd_c = h, c

    states = EncoderStates(
        states=np.concatenate([fwd, bwd], axis=1),
        final_h=np.concatenate([final_fwd_h, final_bwd_h]),
        final_c=np.concatenate([final_fwd_c, final_bwd_c]),
    )
    cache = _EncoderCache(fwd_caches, bwd_caches) if keep_cache else None  # type: ignore[arg-type]
    return states, cache


def encode_bidirectional(inputs: np.ndarray, params: ModelParams) -> EncoderStates:
    """Run both directions over one-hot rows ``inputs`` of shape (S, vocab).

    Step ``s`` of the result concatenates the forward state after reading
    ``x_1..x_s`` with the backward state after reading ``x_S..x_s``; the
    final state concatenates the two directional finals.
    """
    states, _ = _encode(inputs, params, keep_cache=False)
    return states


def _encoder_backward(
    d_states: np.ndarray,
    d_final_h: np.ndarray,
    d_final_c: np.ndarray,
    cache: _EncoderCache,
    params: ModelParams,
    grads: dict[str, np.ndarray],
) -> None:
    hidden = params.dims.hidden
    length = d_states.shape[0]

    # forward direction: last computed state is at position S-1
    d_h = d_final_h[:hidden].copy()
    d_c = d_final_c[:hidden].copy()
    for s in reversed(range(length)):
        d_h += d_states[s, :hidden]
        _, d_h, d_c = _lstm_step_backward(
            d_h, d_c, cache.fwd_steps[s], params.encoder_fwd, grads, "encoder_fwd"
        )

    # backward direction: computed right-to-left, so its recurrence
    # carries from position s+1 into s; unroll in the opposite order
    d_h = d_final_h[hidden:].copy()
    d_c = d_final_c[hidden:].copy()
    for s in range(length):
        d_h += d_states[s, hidden:]
        _, d_h, d_c = _lstm_step_backward(
            d_h, d_c, cache.bwd_steps[s], params.encoder_bwd, grads, "encoder_bwd"
        )


# ---------------------------------------------------------------------------
# Attention
# ---------------------------------------------------------------------------


def luong_attention(
    h_t: np.ndarray, enc: EncoderStates, W_a: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Multiplicative ("general") attention.

    score_s = h_t' W_a h_s; weights = softmax(scores); context is the
    weight-averaged encoder state.  Returns (context, weights).
    """
    if W_a.shape != (h_t.shape[0], enc.states.shape[1]):
        raise ShapeMismatch(
            f"W_a {W_a.shape} does not map encoder width {enc.states.shape[1]} "
            f"to decoder width {h_t.shape[0]}"
        )
    v = W_a.T @ h_t  # (2*hidden,)
    scores = enc.states @ v  # (S,)
    weights = softmax(scores)
    context = weights @ enc.states
    return context, weights


# ---------------------------------------------------------------------------
# Decoder
# ---------------------------------------------------------------------------


def initial_decoder_state(enc: EncoderStates) -> DecoderState:
    return DecoderState(
        h=enc.final_h.copy(),
        c=enc.final_c.copy(),
        h_tilde=np.zeros_like(enc.final_h),
    )


def decoder_step(
    prev_token_one_hot: np.ndarray,
    state: DecoderState,
    enc: EncoderStates,
    params: ModelParams,
) -> tuple[np.ndarray, DecoderState, np.ndarray]:
    """One autoregressive step.

    The LSTM consumes [previous token one-hot || previous attentional
    vector]; attention runs on the new hidden state; the attentional
    vector tanh(W_c [context || h]) feeds the output projection.
    Returns (distribution over the vocabulary, new state, attentional
    vector).
    """
    x = np.concatenate([prev_token_one_hot, state.h_tilde])
    h, c = lstm_cell_step(x, state.h, state.c, params.decoder)
    context, _ = luong_attention(h, enc, params.W_a)
    h_tilde = tanh(params.W_c @ np.concatenate([context, h]))
    distribution = softmax(params.W_out @ h_tilde + params.b_out)
    return distribution, DecoderState(h, c, h_tilde), h_tilde


# ---------------------------------------------------------------------------
# Teacher-forced loss and gradients
# ---------------------------------------------------------------------------


@dataclass
class _DecoderStepCache:
    lstm: _LstmStepCache
    h: np.ndarray
    weights: np.ndarray
    v: np.ndarray  # W_a' h, reused in the score backward
    z: np.ndarray  # [context || h]
    h_tilde: np.ndarray
    distribution: np.ndarray
    target: int


def _one_hot_rows(tokens: list[int], vocab: int) -> np.ndarray:
    rows = np.zeros((len(tokens), vocab))
    rows[np.arange(len(tokens)), tokens] = 1.0
    return rows


def _decode_teacher_forced(
    input_tokens: list[int],
    target_tokens: list[int],
    enc: EncoderStates,
    params: ModelParams,
    keep_cache: bool,
) -> tuple[float, np.ndarray, list[_DecoderStepCache]]:
    vocab = params.dims.vocab
    steps = len(target_tokens)
    state = initial_decoder_state(enc)
    caches: list[_DecoderStepCache] = []
    distributions = np.zeros((steps, vocab))
    total_loss = 0.0
    prev = input_tokens[-1]  # decoding starts from the window's last token
    for t in range(steps):
        x_tok = np.zeros(vocab)
        x_tok[prev] = 1.0
        x = np.concatenate([x_tok, state.h_tilde])
        h, c, lstm_cache = _lstm_step_cached(x, state.h, state.c, params.decoder)
        v = params.W_a.T @ h
        weights = softmax(enc.states @ v)
        context = weights @ enc.states
        z = np.concatenate([context, h])
        h_tilde = tanh(params.W_c @ z)
        distribution = softmax(params.W_out @ h_tilde + params.b_out)
        distributions[t] = distribution
        total_loss += cross_entropy(distribution, target_tokens[t])
        if keep_cache:
            caches.append(
                _DecoderStepCache(
                    lstm_cache, h, weights, v, z, h_tilde, distribution, target_tokens[t]
                )
            )
        state = DecoderState(h, c, h_tilde)
        prev = target_tokens[t]
    return total_loss / steps, distributions, caches


def forward_teacher_forced(
    input_tokens: list[int],
    target_tokens: list[int],
    params: ModelParams,
) -> tuple[float, np.ndarray]:
    """Mean cross-entropy and per-step distributions for one window.

    The encoder reads the input window; the decoder is fed the previous
    target token at each step, starting from the last input token.
    """
    if len(input_tokens) != len(target_tokens):
        raise ShapeMismatch(
            f"input window {len(input_tokens)} != target window {len(target_tokens)}"
        )
    if not input_tokens:
        raise EmptySequence("empty training window")
    enc, _ = _encode(_one_hot_rows(input_tokens, params.dims.vocab), params, keep_cache=False)
    loss, distributions, _ = _decode_teacher_forced(
        input_tokens, target_tokens, enc, params, keep_cache=False
    )
    return loss, distributions


def zero_gradients(params: ModelParams) -> dict[str, np.ndarray]:
    return {name: np.zeros_like(value) for name, value in iter_params(params)}


def teacher_forced_loss_and_grads(
    input_tokens: list[int],
    target_tokens: list[int],
    params: ModelParams,
) -> tuple[float, np.ndarray, dict[str, np.ndarray]]:
    """Loss, distributions and full BPTT gradients for one window."""
    if len(input_tokens) != len(target_tokens):
        raise ShapeMismatch(
            f"input window {len(input_tokens)} != target window {len(target_tokens)}"
        )
    if not input_tokens:
        raise EmptySequence("empty training window")
    vocab = params.dims.vocab
    hd = params.dims.decoder_hidden
    steps = len(target_tokens)

    inputs = _one_hot_rows(input_tokens, vocab)
    enc, enc_cache = _encode(inputs, params, keep_cache=True)
    loss, distributions, caches = _decode_teacher_forced(
        input_tokens, target_tokens, enc, params, keep_cache=True
    )

    grads = zero_gradients(params)
    d_enc_states = np.zeros_like(enc.states)
    d_h_rec = np.zeros(hd)
    d_c_rec = np.zeros(hd)
    d_h_tilde_feed = np.zeros(hd)

    for t in reversed(range(steps)):
        cache = caches[t]
        d_logits = softmax_cross_entropy_backward(cache.distribution, cache.target) / steps
        grads["W_out"] += np.outer(d_logits, cache.h_tilde)
        grads["b_out"] += d_logits
        d_h_tilde = params.W_out.T @ d_logits + d_h_tilde_feed

        # combine: h_tilde = tanh(W_c z)
        d_pre = d_h_tilde * (1.0 - cache.h_tilde**2)
        grads["W_c"] += np.outer(d_pre, cache.z)
        d_z = params.W_c.T @ d_pre
        d_context = d_z[: enc.states.shape[1]]
        d_h = d_z[enc.states.shape[1] :].copy()

        # attention: context = weights @ enc_states, weights = softmax(enc_states @ W_a' h)
        d_weights = enc.states @ d_context
        d_enc_states += np.outer(cache.weights, d_context)
        d_scores = cache.weights * (d_weights - cache.weights @ d_weights)
        u = enc.states.T @ d_scores
        grads["W_a"] += np.outer(cache.h, u)
        d_h += params.W_a @ u
        d_enc_states += np.outer(d_scores, cache.v)

        d_h += d_h_rec
        d_x, d_h_rec, d_c_rec = _lstm_step_backward(
            d_h, d_c_rec, cache.lstm, params.decoder, grads, "decoder"
        )
        d_h_tilde_feed = d_x[vocab:]  # the input-feeding slice; token part is data

    _encoder_backward(d_enc_states, d_h_rec, d_c_rec, enc_cache, params, grads)
    return loss, distributions, grads


# ---------------------------------------------------------------------------
# Parameter traversal (fixed order shared by optimizer and checkpoints)
# ---------------------------------------------------------------------------

_LSTM_FIELDS = ["W_i", "W_f", "W_o", "W_g", "U_i", "U_f", "U_o", "U_g", "b_i", "b_f", "b_o", "b_g"]

PARAM_ORDER = (
    [f"encoder_fwd.{f}" for f in _LSTM_FIELDS]
    + [f"encoder_bwd.{f}" for f in _LSTM_FIELDS]
    + [f"decoder.{f}" for f in _LSTM_FIELDS]
    + ["W_a", "W_c", "W_out", "b_out"]
)


def iter_params(params: ModelParams):
    """Yield (name, array) pairs in the documented fixed order."""
    for name in PARAM_ORDER:
        yield name, get_param(params, name)


def get_param(params: ModelParams, name: str) -> np.ndarray:
    if "." in name:
        cell_name, field_name = name.split(".")
        return getattr(getattr(params, cell_name), field_name)
    return getattr(params, name)


def set_param(params: ModelParams, name: str, value: np.ndarray) -> None:
    if "." in name:
        cell_name, field_name = name.split(".")
        setattr(getattr(params, cell_name), field_name, value)
    else:
        setattr(params, name, value)
