"""A bundled corpus of traditional melodies for demos and smoke tests.

Each tune is hand-encoded as ``NAME:STEPS`` tokens (sixteenth-note
steps; ``R`` marks a rest) and rendered to a one-track MIDI file at
120 BPM.  The tunes are old folk and classical themes, transcribed
monophonically and occasionally simplified or repeated so every file
comfortably spans a default 64-step training window.  They are training
material, not performance editions.
"""

from __future__ import annotations

from pathlib import Path

from .pianoroll import name_to_pitch
from .smf import EndOfTrack, MidiFile, NoteOff, NoteOn, SetTempo, TrackEvent, serialize_smf

DIVISION = 480
STEP_TICKS = DIVISION // 4  # one sixteenth
_TEMPO_120_BPM = 500_000

# fmt: off
DEMO_MELODIES: dict[str, str] = {
    "twinkle_twinkle": """
        C4:4 C4:4 G4:4 G4:4 A4:4 A4:4 G4:8 F4:4 F4:4 E4:4 E4:4 D4:4 D4:4 C4:8
        G4:4 G4:4 F4:4 F4:4 E4:4 E4:4 D4:8 G4:4 G4:4 F4:4 F4:4 E4:4 E4:4 D4:8
        C4:4 C4:4 G4:4 G4:4 A4:4 A4:4 G4:8 F4:4 F4:4 E4:4 E4:4 D4:4 D4:4 C4:8
    """,
    "mary_had_a_little_lamb": """
        E4:4 D4:4 C4:4 D4:4 E4:4 E4:4 E4:8 D4:4 D4:4 D4:8 E4:4 G4:4 G4:8
        E4:4 D4:4 C4:4 D4:4 E4:4 E4:4 E4:4 E4:4 D4:4 D4:4 E4:4 D4:4 C4:16
    """,
    "ode_to_joy": """
        E4:4 E4:4 F4:4 G4:4 G4:4 F4:4 E4:4 D4:4 C4:4 C4:4 D4:4 E4:4 E4:6 D4:2 D4:8
        E4:4 E4:4 F4:4 G4:4 G4:4 F4:4 E4:4 D4:4 C4:4 C4:4 D4:4 E4:4 D4:6 C4:2 C4:8
        D4:4 D4:4 E4:4 C4:4 D4:4 E4:2 F4:2 E4:4 C4:4 D4:4 E4:2 F4:2 E4:4 D4:4 C4:4 D4:4 G3:8
        E4:4 E4:4 F4:4 G4:4 G4:4 F4:4 E4:4 D4:4 C4:4 C4:4 D4:4 E4:4 D4:6 C4:2 C4:8
    """,
    "frere_jacques": """
        C4:4 D4:4 E4:4 C4:4 C4:4 D4:4 E4:4 C4:4
        E4:4 F4:4 G4:8 E4:4 F4:4 G4:8
        G4:2 A4:2 G4:2 F4:2 E4:4 C4:4 G4:2 A4:2 G4:2 F4:2 E4:4 C4:4
        C4:4 G3:4 C4:8 C4:4 G3:4 C4:8
    """,
    "london_bridge": """
        G4:6 A4:2 G4:4 F4:4 E4:4 F4:4 G4:8 D4:4 E4:4 F4:8 E4:4 F4:4 G4:8
        G4:6 A4:2 G4:4 F4:4 E4:4 F4:4 G4:8 D4:8 G4:8 E4:4 C4:8 R:4
    """,
    "row_your_boat": """
        C4:6 C4:6 C4:4 D4:2 E4:6 E4:4 D4:2 E4:4 F4:2 G4:12
        C5:2 C5:2 C5:2 G4:2 G4:2 G4:2 E4:2 E4:2 E4:2 C4:2 C4:2 C4:2
        G4:4 F4:2 E4:4 D4:2 C4:12
        C4:6 C4:6 C4:4 D4:2 E4:6 E4:4 D4:2 E4:4 F4:2 G4:12
        C5:2 C5:2 C5:2 G4:2 G4:2 G4:2 E4:2 E4:2 E4:2 C4:2 C4:2 C4:2
        G4:4 F4:2 E4:4 D4:2 C4:12
    """,
    "yankee_doodle": """
        C4:4 C4:4 D4:4 E4:4 C4:4 E4:4 D4:4 G3:4
        C4:4 C4:4 D4:4 E4:4 C4:8 B3:8
        C4:4 C4:4 D4:4 E4:4 F4:4 E4:4 D4:4 C4:4
        B3:4 G3:4 A3:4 B3:4 C4:8 C4:8
        A3:4 B3:2 A3:2 G3:4 A3:4 B3:4 C4:8
        G3:4 A3:2 G3:2 F3:4 E3:4 G3:8
        A3:4 B3:2 A3:2 G3:4 A3:4 B3:4 C4:4 A3:4
        G3:4 C4:4 B3:4 D4:4 C4:8 C4:8
    """,
    "amazing_grace": """
        G3:4 C4:8 E4:2 C4:2 E4:8 D4:4 C4:8 A3:4 G3:8 R:4
        G3:4 C4:8 E4:2 C4:2 E4:8 D4:4 G4:12 R:4
        E4:4 G4:8 E4:2 G4:2 E4:8 C4:4 G3:8 A3:4 C4:8 A3:2 C4:2
        G3:8 R:4 G3:4 C4:8 E4:2 C4:2 E4:8 D4:4 C4:12
    """,
    "greensleeves": """
        A3:4 C4:8 D4:4 E4:6 F4:2 E4:4 D4:8 B3:4 G3:6 A3:2 B3:4
        C4:8 A3:4 A3:6 G3:2 A3:4 B3:8 G3:4 E3:8 R:4
        A3:4 C4:8 D4:4 E4:6 F4:2 E4:4 D4:8 B3:4 G3:6 A3:2 B3:4
        C4:6 B3:2 A3:4 G3:6 F3:2 G3:4 A3:12 R:4
    """,
    "scarborough_fair": """
        D4:8 D4:4 A4:8 A4:4 E4:4 F4:2 E4:2 D4:8 R:4
        A4:4 C5:4 D5:4 C5:8 A4:4 B4:4 G4:8 A4:8 R:4
        D5:8 D5:4 C5:8 A4:4 A4:4 G4:2 F4:2 E4:4 D4:2 C4:2
        D4:8 A3:4 D4:4 C4:4 A3:2 G3:2 A3:4 D4:12
    """,
    "auld_lang_syne": """
        C4:4 F4:6 F4:2 F4:4 A4:4 G4:6 F4:2 G4:4 A4:2 G4:2
        F4:6 F4:2 A4:4 C5:4 D5:12 D5:4
        C5:6 A4:2 A4:4 F4:4 G4:6 F4:2 G4:4 A4:2 G4:2
        F4:6 D4:2 D4:4 C4:4 F4:12 R:4
    """,
    "oh_susanna": """
        C4:2 D4:2 E4:4 G4:4 G4:6 A4:2 G4:4 E4:4 C4:6 D4:2
        E4:4 E4:4 D4:4 C4:4 D4:12 R:4
        C4:2 D4:2 E4:4 G4:4 G4:6 A4:2 G4:4 E4:4 C4:6 D4:2
        E4:4 E4:4 D4:4 D4:4 C4:12 R:4
        F4:8 F4:4 A4:8 A4:4 G4:4 G4:4 E4:4 C4:4 D4:12 R:4
        C4:2 D4:2 E4:4 G4:4 G4:6 A4:2 G4:4 E4:4 C4:6 D4:2
        E4:4 E4:4 D4:4 D4:4 C4:12 R:4
    """,
    "when_the_saints": """
        C4:4 E4:4 F4:4 G4:16 C4:4 E4:4 F4:4 G4:16
        C4:4 E4:4 F4:4 G4:8 E4:8 C4:8 E4:8 D4:16
        E4:4 E4:4 D4:8 C4:8 C4:4 E4:8 G4:8 G4:4 F4:8
        E4:4 F4:4 G4:8 E4:8 C4:8 D4:8 C4:16
    """,
    "fur_elise": """
        E5:2 D#5:2 E5:2 D#5:2 E5:2 B4:2 D5:2 C5:2 A4:8 R:2 C4:2 E4:2 A4:2
        B4:8 R:2 E4:2 G#4:2 B4:2 C5:8 R:2 E4:2
        E5:2 D#5:2 E5:2 D#5:2 E5:2 B4:2 D5:2 C5:2 A4:8 R:2 C4:2 E4:2 A4:2
        B4:8 R:2 E4:2 C5:2 B4:2 A4:8 R:4
    """,
    "minuet_in_g": """
        D5:4 G4:2 A4:2 B4:2 C5:2 D5:4 G4:4 G4:4
        E5:4 C5:2 D5:2 E5:2 F#5:2 G5:4 G4:4 G4:4
        C5:4 D5:2 C5:2 B4:2 A4:2 B4:4 C5:2 B4:2 A4:2 G4:2
        F#4:4 G4:2 A4:2 B4:2 G4:2 A4:12
    """,
    "jingle_bells": """
        E4:4 E4:4 E4:8 E4:4 E4:4 E4:8 E4:4 G4:4 C4:6 D4:2 E4:16
        F4:4 F4:4 F4:6 F4:2 F4:4 E4:4 E4:4 E4:2 E4:2
        E4:4 D4:4 D4:4 E4:4 D4:8 G4:8
        E4:4 E4:4 E4:8 E4:4 E4:4 E4:8 E4:4 G4:4 C4:6 D4:2 E4:16
        F4:4 F4:4 F4:6 F4:2 F4:4 E4:4 E4:4 E4:2 E4:2
        G4:4 G4:4 F4:4 D4:4 C4:16
    """,
    "silent_night": """
        G4:6 A4:2 G4:4 E4:12 G4:6 A4:2 G4:4 E4:12
        D5:8 D5:4 B4:12 C5:8 C5:4 G4:12
        A4:8 A4:4 C5:6 B4:2 A4:4 G4:6 A4:2 G4:4 E4:12
        A4:8 A4:4 C5:6 B4:2 A4:4 G4:6 A4:2 G4:4 E4:12
        D5:8 D5:4 F5:6 D5:2 B4:4 C5:12 E5:12
        C5:4 G4:4 E4:4 G4:6 F4:2 D4:4 C4:16
    """,
    "hot_cross_buns": """
        E4:4 D4:4 C4:8 E4:4 D4:4 C4:8
        C4:2 C4:2 C4:2 C4:2 D4:2 D4:2 D4:2 D4:2 E4:4 D4:4 C4:8
        E4:4 D4:4 C4:8 E4:4 D4:4 C4:8
        C4:2 C4:2 C4:2 C4:2 D4:2 D4:2 D4:2 D4:2 E4:4 D4:4 C4:8
    """,
    "this_old_man": """
        G4:4 E4:4 G4:8 G4:4 E4:4 G4:8
        A4:4 G4:4 F4:4 E4:4 D4:4 E4:4 F4:8
        E4:2 F4:2 G4:4 C4:4 C4:4 C4:2 C4:2 C4:2 C4:2 C4:4 D4:4
        E4:4 F4:4 G4:8 G4:4 D4:4 F4:4 E4:4 D4:4 C4:12
    """,
    "camptown_races": """
        G4:4 G4:4 E4:4 G4:4 A4:4 G4:4 E4:8 E4:4 D4:8 E4:4 D4:8
        G4:4 G4:4 E4:4 G4:4 A4:4 G4:4 E4:8 D4:4 E4:4 C4:12
        C4:4 E4:8 G4:4 G4:8 A4:4 C5:8 A4:4 G4:12
        G4:4 G4:4 E4:4 G4:4 A4:4 G4:4 E4:8 D4:4 E4:4 C4:12
    """,
    "michael_row_the_boat": """
        C4:4 E4:6 E4:2 G4:8 E4:2 G4:2 A4:8 G4:16
        E4:4 G4:6 G4:2 A4:4 G4:8 E4:4 D4:12
        C4:4 E4:6 E4:2 G4:8 E4:2 G4:2 A4:8 G4:16
        E4:4 D4:6 D4:2 C4:4 D4:8 C4:4 C4:12
    """,
    "the_first_noel": """
        E4:2 D4:2 C4:6 D4:2 E4:2 F4:2 G4:8 A4:2 B4:2
        C5:4 B4:4 A4:4 G4:8 A4:2 B4:2 C5:4 B4:4 A4:4
        G4:4 A4:4 B4:4 C5:4 G4:4 F4:4 E4:8 R:4
        E4:2 D4:2 C4:6 D4:2 E4:2 F4:2 G4:8 A4:2 B4:2
        C5:4 B4:4 A4:4 G4:8 A4:2 B4:2 C5:4 B4:4 A4:4
        G4:4 A4:4 B4:4 C5:4 G4:4 F4:4 E4:12
    """,
}
# fmt: on


def melody_to_midi(notation: str) -> MidiFile:
    """Render ``NAME:STEPS`` notation to a one-track MIDI file."""
    events = [TrackEvent(0, SetTempo(_TEMPO_120_BPM))]
    tick = 0
    for item in notation.split():
        name, _, steps_text = item.partition(":")
        steps = int(steps_text)
        if steps < 1:
            raise ValueError(f"non-positive duration in {item!r}")
        if name.upper() != "R":
            pitch = name_to_pitch(name)
            events.append(TrackEvent(tick, NoteOn(0, pitch, 80)))
            events.append(TrackEvent(tick + steps * STEP_TICKS, NoteOff(0, pitch, 0)))
        tick += steps * STEP_TICKS
    events.append(TrackEvent(tick, EndOfTrack()))
    return MidiFile(format=0, division=DIVISION, tracks=[events])


def demo_corpus() -> dict[str, bytes]:
    """All bundled tunes as serialized MIDI, keyed by tune name."""
    return {
        name: serialize_smf(melody_to_midi(notation))
        for name, notation in DEMO_MELODIES.items()
    }


def write_demo_corpus(directory: Path | str) -> list[Path]:
    """Write every bundled tune as ``<name>.mid`` under ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, data in sorted(demo_corpus().items()):
        path = directory / f"{name}.mid"
        path.write_bytes(data)
        paths.append(path)
    return paths
