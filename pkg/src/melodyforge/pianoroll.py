"""Note-event <-> token conversion and pitch arithmetic.

The model-facing alphabet has 130 symbols: tokens 0-127 are MIDI pitches,
128 is REST (a silent grid step) and 129 is END (sequence terminator).
Time is quantized to a fixed grid, by default a sixteenth note (1/4 of a
quarter).  Polyphony is reduced to a melody line with the skyline rule:
the highest pitch sounding in a grid step wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .smf import (
    EndOfTrack,
    MidiFile,
    NoteEvent,
    NoteOff,
    NoteOn,
    SetTempo,
    TrackEvent,
)

VOCAB_SIZE = 130
REST = 128
END = 129
DEFAULT_GRID = 0.25  # fraction of a quarter note: a sixteenth

_NOTE_NAMES = ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"]
_NAME_TO_SEMITONE = {
    "C": 0, "C#": 1, "DB": 1, "D": 2, "D#": 3, "EB": 3, "E": 4, "F": 5,
    "F#": 6, "GB": 6, "G": 7, "G#": 8, "AB": 8, "A": 9, "A#": 10, "BB": 10, "B": 11,
}


class EmptyInput(ValueError):
    pass


class TokenOutOfRange(ValueError):
    pass


class PitchOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Vocabulary:
    size: int = VOCAB_SIZE
    grid: float = DEFAULT_GRID


@dataclass
class TokenSequence:
    tokens: list[int] = field(default_factory=list)
    grid: float = DEFAULT_GRID


def _snap(ticks: float, step_ticks: float) -> int:
    # deterministic half-up rounding; round() would round half to even
    return int(math.floor(ticks / step_ticks + 0.5))


def to_token_sequence(
    notes: list[NoteEvent], division: int, grid: float = DEFAULT_GRID
) -> TokenSequence:
    """Quantize notes onto the grid and reduce to one token per step.

    Each note is snapped to grid steps (occupying at least one step);
    steps where several notes sound keep only the highest pitch, silent
    steps emit REST, and a trailing END closes the sequence.  ``notes``
    must be sorted by onset.
    """
    if not notes:
        raise EmptyInput("no notes to encode")
    step_ticks = division * grid
    spans = []
    total = 0
    for note in notes:
        start = _snap(note.onset_tick, step_ticks)
        end = _snap(note.onset_tick + note.duration_tick, step_ticks)
        if end <= start:
            end = start + 1
        spans.append((start, end, note.pitch))
        total = max(total, end)
    tokens = [REST] * total
    for start, end, pitch in spans:
        for step in range(start, end):
            if tokens[step] == REST or pitch > tokens[step]:
                tokens[step] = pitch
    tokens.append(END)
    return TokenSequence(tokens, grid)


def one_hot(token: int, vocab: Vocabulary = Vocabulary()) -> np.ndarray:
    """Length-``vocab.size`` indicator vector for ``token``."""
    if not 0 <= token < vocab.size:
        raise TokenOutOfRange(f"token {token} outside [0, {vocab.size})")
    vec = np.zeros(vocab.size)
    vec[token] = 1.0
    return vec


def decode_tokens(
    seq: TokenSequence, tempo_bpm: float = 120.0, division: int = 480
) -> MidiFile:
    """Reverse of :func:`to_token_sequence`: tokens back to a MIDI file.

    Consecutive equal pitch tokens merge into one sustained note, REST
    advances time, END terminates.  The single output track carries a
    SetTempo for ``tempo_bpm``; notes use velocity 80 on channel 0.
    """
    step_ticks = max(1, round(division * seq.grid))
    uspq = round(60_000_000 / tempo_bpm)
    events = [TrackEvent(0, SetTempo(uspq))]
    current: int | None = None  # sounding pitch
    start = 0
    tick = 0
    for token in seq.tokens:
        if token == END:
            break
        pitch = token if token < REST else None
        if pitch != current:
            if current is not None:
                events.append(TrackEvent(tick, NoteOff(0, current, 0)))
            if pitch is not None:
                events.append(TrackEvent(tick, NoteOn(0, pitch, 80)))
            current = pitch
            start = tick
        tick += step_ticks
    if current is not None:
        events.append(TrackEvent(tick, NoteOff(0, current, 0)))
    events.append(TrackEvent(tick, EndOfTrack()))
    return MidiFile(format=0, division=division, tracks=[events])


def pitch_to_frequency(pitch: int) -> float:
    """Equal-temperament frequency in Hz, anchored at A4 (pitch 69) = 440 Hz."""
    if not 0 <= pitch <= 127:
        raise PitchOutOfRange(f"pitch {pitch} outside [0, 127]")
    return 440.0 * 2.0 ** ((pitch - 69) / 12)


def pitch_to_name(pitch: int) -> str:
    """Note name with octave, C4 = MIDI 60 (so A4 = 69)."""
    if not 0 <= pitch <= 127:
        raise PitchOutOfRange(f"pitch {pitch} outside [0, 127]")
    return f"{_NOTE_NAMES[pitch % 12]}{pitch // 12 - 1}"


def name_to_pitch(name: str) -> int:
    """Inverse of :func:`pitch_to_name`; accepts sharps and flats ("Bb3")."""
    text = name.strip().upper()
    for split in (2, 1):
        letter, octave_str = text[:split], text[split:]
        if letter in _NAME_TO_SEMITONE:
            try:
                octave = int(octave_str)
            except ValueError:
                continue
            pitch = _NAME_TO_SEMITONE[letter] + (octave + 1) * 12
            if 0 <= pitch <= 127:
                return pitch
            raise PitchOutOfRange(f"{name!r} maps to pitch {pitch} outside [0, 127]")
    raise PitchOutOfRange(f"unrecognized note name {name!r}")


def tokens_to_text(seq: TokenSequence) -> str:
    """Newline-delimited integer dump for debugging."""
    return "\n".join(str(t) for t in seq.tokens) + "\n"


def tokens_from_text(text: str, grid: float = DEFAULT_GRID) -> TokenSequence:
    tokens = [int(line) for line in text.split() if line.strip()]
    for token in tokens:
        if not 0 <= token < VOCAB_SIZE:
            raise TokenOutOfRange(f"token {token} outside [0, {VOCAB_SIZE})")
    return TokenSequence(tokens, grid)
