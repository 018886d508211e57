"""Standard MIDI File (SMF) codec.

Parses ``.mid`` bytes into a value-typed :class:`MidiFile`, serializes it
back, and extracts sounded notes with tempo-aware timing.  The subset
modelled explicitly covers note on/off, tempo, program change and time
signature; everything else is preserved as raw bytes so that
parse -> serialize -> parse is the identity on values.

Only PPQ (ticks-per-quarter-note) time division is supported; SMPTE
division is rejected loudly.  Serialization re-encodes delta times
minimally and writes explicit status bytes, so byte-level equality with
third-party files is not promised -- value-level equality is.

Layout reference: MIDI 1.0 file spec,
https://www.cs.cmu.edu/~music/cmsip/readings/Standard-MIDI-file-format-updated.pdf
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

__all__ = [
    "SmfError",
    "BadMagic",
    "TruncatedChunk",
    "UnsupportedSmpteDivision",
    "TrackCountMismatch",
    "UnterminatedVlq",
    "UnexpectedEof",
    "ValueTooLarge",
    "InvariantViolation",
    "NoteOn",
    "NoteOff",
    "SetTempo",
    "ProgramChange",
    "TimeSignature",
    "EndOfTrack",
    "OtherMeta",
    "OtherChannel",
    "TrackEvent",
    "MidiFile",
    "NoteEvent",
    "read_vlq",
    "write_vlq",
    "parse_smf",
    "serialize_smf",
    "extract_notes",
    "tempo_map",
    "tick_to_seconds",
    "DEFAULT_TEMPO_USPQ",
]

DEFAULT_TEMPO_USPQ = 500_000  # microseconds per quarter note, i.e. 120 BPM

VLQ_MAX = 1 << 28  # 4 VLQ bytes of 7 payload bits each

# Data-byte counts for channel statuses we keep as raw passthrough.
_CHANNEL_DATA_LEN = {0xA0: 2, 0xB0: 2, 0xD0: 1, 0xE0: 2}
_SYSTEM_DATA_LEN = {0xF1: 1, 0xF2: 2, 0xF3: 1, 0xF6: 0}


class SmfError(Exception):
    """Base class for SMF codec failures."""


class BadMagic(SmfError):
    pass


class TruncatedChunk(SmfError):
    pass


class UnsupportedSmpteDivision(SmfError):
    pass


class TrackCountMismatch(SmfError):
    pass


class UnterminatedVlq(SmfError):
    pass


class UnexpectedEof(SmfError):
    pass


class ValueTooLarge(SmfError):
    pass


class InvariantViolation(SmfError):
    pass


@dataclass(frozen=True)
class NoteOn:
    channel: int
    pitch: int
    velocity: int  # always > 0 after parsing; velocity 0 parses as NoteOff


@dataclass(frozen=True)
class NoteOff:
    channel: int
    pitch: int
    velocity: int


@dataclass(frozen=True)
class SetTempo:
    microseconds_per_quarter: int


@dataclass(frozen=True)
class ProgramChange:
    channel: int
    program: int


@dataclass(frozen=True)
class TimeSignature:
    numerator: int
    denominator_power: int  # denominator is 2**denominator_power


@dataclass(frozen=True)
class EndOfTrack:
    pass


@dataclass(frozen=True)
class OtherMeta:
    """Any meta event we do not model, kept verbatim for round-tripping."""

    type_byte: int
    data: bytes


@dataclass(frozen=True)
class OtherChannel:
    """Unmodelled channel/system event.

    ``status`` 0xF0/0xF7 marks sysex payloads (serialized with a VLQ
    length prefix); all other statuses are followed directly by ``data``.
    """

    status: int
    data: bytes


Payload = (
    NoteOn
    | NoteOff
    | SetTempo
    | ProgramChange
    | TimeSignature
    | EndOfTrack
    | OtherMeta
    | OtherChannel
)


@dataclass(frozen=True)
class TrackEvent:
    tick: int  # absolute time in ticks, non-negative
    payload: Payload


@dataclass
class MidiFile:
    format: int  # 0, 1 or 2
    division: int  # ticks per quarter note, > 0
    tracks: list[list[TrackEvent]] = field(default_factory=list)


@dataclass(frozen=True)
class NoteEvent:
    """A sounded note: paired NoteOn/NoteOff."""

    pitch: int
    onset_tick: int
    duration_tick: int
    velocity: int
    channel: int


# ---------------------------------------------------------------------------
# Variable-length quantities
# ---------------------------------------------------------------------------


def read_vlq(data: bytes, pos: int = 0) -> tuple[int, int]:
    """Read a variable-length quantity starting at ``pos``.

    Returns ``(value, consumed)`` where ``consumed`` is 1..4 bytes.
    Raises :class:`UnexpectedEof` if the stream ends mid-quantity and
    :class:`UnterminatedVlq` if four continuation bytes appear in a row.
    """
    value = 0
    for i in range(4):
        if pos + i >= len(data):
            raise UnexpectedEof("stream ended inside a variable-length quantity")
        byte = data[pos + i]
        value = (value << 7) | (byte & 0x7F)
        if not byte & 0x80:
            return value, i + 1
    raise UnterminatedVlq("no terminating byte within 4 bytes")


def write_vlq(value: int) -> bytes:
    """Encode ``value`` (< 2**28) as a minimal-length VLQ."""
    if value < 0 or value >= VLQ_MAX:
        raise ValueTooLarge(f"VLQ value out of range: {value}")
    groups = [value & 0x7F]
    value >>= 7
    while value:
        groups.append(0x80 | (value & 0x7F))
        value >>= 7
    return bytes(reversed(groups))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _Reader:
    """Bounded cursor over bytes; raises TruncatedChunk on over-read."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def remaining(self) -> int:
        return len(self.data) - self.pos

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise TruncatedChunk(
                f"needed {n} bytes at offset {self.pos}, have {self.remaining()}"
            )
        out = self.data[self.pos : self.pos + n]
        self.pos += n
        return out

    def byte(self) -> int:
        return self.take(1)[0]

    def vlq(self) -> int:
        try:
            value, consumed = read_vlq(self.data, self.pos)
        except UnexpectedEof as exc:
            raise TruncatedChunk(str(exc)) from exc
        self.pos += consumed
        return value


def _parse_meta(reader: _Reader) -> Payload:
    meta_type = reader.byte()
    length = reader.vlq()
    data = reader.take(length)
    if meta_type == 0x2F and length == 0:
        return EndOfTrack()
    if meta_type == 0x51 and length == 3:
        uspq = (data[0] << 16) | (data[1] << 8) | data[2]
        if uspq > 0:
            return SetTempo(uspq)
    if meta_type == 0x58 and length >= 2:
        return TimeSignature(numerator=data[0], denominator_power=data[1])
    return OtherMeta(meta_type, data)


def _parse_channel(reader: _Reader, status: int) -> Payload:
    kind = status & 0xF0
    channel = status & 0x0F
    if kind == 0x90:
        pitch, velocity = reader.take(2)
        if velocity == 0:
            # velocity-0 NoteOn is the conventional NoteOff spelling
            return NoteOff(channel, pitch, 0)
        return NoteOn(channel, pitch, velocity)
    if kind == 0x80:
        pitch, velocity = reader.take(2)
        return NoteOff(channel, pitch, velocity)
    if kind == 0xC0:
        return ProgramChange(channel, reader.byte())
    return OtherChannel(status, reader.take(_CHANNEL_DATA_LEN[kind]))


def _parse_track(data: bytes) -> list[TrackEvent]:
    reader = _Reader(data)
    events: list[TrackEvent] = []
    tick = 0
    running_status: int | None = None
    while reader.remaining() > 0:
        tick += reader.vlq()
        status = reader.byte()
        if status < 0x80:
            if running_status is None:
                raise TruncatedChunk("data byte with no running status")
            reader.pos -= 1  # re-read as the first data byte
            status = running_status
        payload: Payload
        if status == 0xFF:
            running_status = None
            payload = _parse_meta(reader)
        elif status in (0xF0, 0xF7):
            running_status = None
            payload = OtherChannel(status, reader.take(reader.vlq()))
        elif status >= 0xF0:
            running_status = None
            payload = OtherChannel(status, reader.take(_SYSTEM_DATA_LEN.get(status, 0)))
        else:
            running_status = status
            payload = _parse_channel(reader, status)
        events.append(TrackEvent(tick, payload))
        if isinstance(payload, EndOfTrack):
            break  # lenient: ignore any bytes after end-of-track
    if not events or not isinstance(events[-1].payload, EndOfTrack):
        events.append(TrackEvent(tick, EndOfTrack()))
    return events


def parse_smf(data: bytes) -> MidiFile:
    """Parse SMF bytes into a :class:`MidiFile`.

    Delta ticks are accumulated to absolute ticks, running status is
    resolved, and velocity-0 NoteOn events are normalized to NoteOff.
    """
    if data[:4] != b"MThd":
        raise BadMagic(f"expected MThd chunk, got {data[:4]!r}")
    if len(data) < 14:
        raise TruncatedChunk("header chunk shorter than 14 bytes")
    header_len, fmt, declared_tracks, division = struct.unpack(">IHHH", data[4:14])
    if header_len < 6:
        raise TruncatedChunk(f"header declares length {header_len}, need 6")
    if fmt not in (0, 1, 2):
        raise BadMagic(f"unknown SMF format {fmt}")
    if division & 0x8000:
        raise UnsupportedSmpteDivision("SMPTE time division is not supported")
    if division == 0:
        raise InvariantViolation("division must be positive")

    tracks: list[list[TrackEvent]] = []
    pos = 8 + header_len
    while pos < len(data):
        if pos + 8 > len(data):
            raise TruncatedChunk("trailing bytes too short for a chunk header")
        tag = data[pos : pos + 4]
        (length,) = struct.unpack(">I", data[pos + 4 : pos + 8])
        if pos + 8 + length > len(data):
            raise TruncatedChunk(f"chunk {tag!r} declares {length} bytes past EOF")
        if tag == b"MTrk":
            tracks.append(_parse_track(data[pos + 8 : pos + 8 + length]))
        # unknown ("alien") chunks are skipped per the SMF spec
        pos += 8 + length
    if len(tracks) != declared_tracks:
        raise TrackCountMismatch(
            f"header declares {declared_tracks} tracks, found {len(tracks)}"
        )
    return MidiFile(format=fmt, division=division, tracks=tracks)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise InvariantViolation(f"{name} {value} outside [{lo}, {hi}]")


def _encode_payload(payload: Payload) -> bytes:
    if isinstance(payload, NoteOn):
        _check_range("channel", payload.channel, 0, 15)
        _check_range("pitch", payload.pitch, 0, 127)
        _check_range("velocity", payload.velocity, 1, 127)
        return bytes([0x90 | payload.channel, payload.pitch, payload.velocity])
    if isinstance(payload, NoteOff):
        _check_range("channel", payload.channel, 0, 15)
        _check_range("pitch", payload.pitch, 0, 127)
        _check_range("velocity", payload.velocity, 0, 127)
        return bytes([0x80 | payload.channel, payload.pitch, payload.velocity])
    if isinstance(payload, SetTempo):
        uspq = payload.microseconds_per_quarter
        _check_range("microseconds_per_quarter", uspq, 1, 0xFFFFFF)
        return bytes([0xFF, 0x51, 0x03, uspq >> 16 & 0xFF, uspq >> 8 & 0xFF, uspq & 0xFF])
    if isinstance(payload, ProgramChange):
        _check_range("channel", payload.channel, 0, 15)
        _check_range("program", payload.program, 0, 127)
        return bytes([0xC0 | payload.channel, payload.program])
    if isinstance(payload, TimeSignature):
        _check_range("numerator", payload.numerator, 0, 255)
        _check_range("denominator_power", payload.denominator_power, 0, 255)
        # clocks-per-click / 32nds-per-quarter written with their defaults
        return bytes([0xFF, 0x58, 0x04, payload.numerator, payload.denominator_power, 24, 8])
    if isinstance(payload, EndOfTrack):
        return bytes([0xFF, 0x2F, 0x00])
    if isinstance(payload, OtherMeta):
        _check_range("meta type", payload.type_byte, 0, 127)
        return bytes([0xFF, payload.type_byte]) + write_vlq(len(payload.data)) + payload.data
    if isinstance(payload, OtherChannel):
        _check_range("status", payload.status, 0x80, 0xFE)
        if payload.status in (0xF0, 0xF7):
            return bytes([payload.status]) + write_vlq(len(payload.data)) + payload.data
        return bytes([payload.status]) + payload.data
    raise InvariantViolation(f"unknown payload type {type(payload).__name__}")


def serialize_smf(file: MidiFile) -> bytes:
    """Serialize a :class:`MidiFile` back to SMF bytes.

    Every track is terminated with EndOfTrack (appended if absent) and
    delta times are re-encoded minimally with explicit status bytes.
    """
    if file.format not in (0, 1, 2):
        raise InvariantViolation(f"format must be 0, 1 or 2, got {file.format}")
    if not 0 < file.division <= 0x7FFF:
        raise InvariantViolation(f"division {file.division} outside (0, 32767]")
    chunks = [b"MThd" + struct.pack(">IHHH", 6, file.format, len(file.tracks), file.division)]
    for index, track in enumerate(file.tracks):
        body = bytearray()
        tick = 0
        ended = False
        for event in track:
            if ended:
                raise InvariantViolation(f"track {index} has events after EndOfTrack")
            if event.tick < tick:
                raise InvariantViolation(
                    f"track {index} ticks decrease: {event.tick} after {tick}"
                )
            body += write_vlq(event.tick - tick)
            body += _encode_payload(event.payload)
            tick = event.tick
            ended = isinstance(event.payload, EndOfTrack)
        if not ended:
            body += write_vlq(0) + _encode_payload(EndOfTrack())
        chunks.append(b"MTrk" + struct.pack(">I", len(body)) + bytes(body))
    return b"".join(chunks)


# ---------------------------------------------------------------------------
# Note extraction and timing
# ---------------------------------------------------------------------------


def extract_notes(file: MidiFile) -> list[NoteEvent]:
    """Pair NoteOn/NoteOff events into :class:`NoteEvent` values.

    Overlapping same-pitch notes pair FIFO (first on, first off).  Notes
    still open at the end of their track close at the track's final tick;
    zero-duration pairs are dropped.  Orphan NoteOff events are ignored.
    Result is sorted by ``(onset_tick, pitch, channel)``.
    """
    notes: list[NoteEvent] = []
    for track in file.tracks:
        open_notes: dict[tuple[int, int], list[tuple[int, int]]] = {}
        end_tick = track[-1].tick if track else 0
        for event in track:
            payload = event.payload
            if isinstance(payload, NoteOn):
                key = (payload.channel, payload.pitch)
                open_notes.setdefault(key, []).append((event.tick, payload.velocity))
            elif isinstance(payload, NoteOff):
                key = (payload.channel, payload.pitch)
                queue = open_notes.get(key)
                if queue:
                    onset, velocity = queue.pop(0)
                    if event.tick > onset:
                        notes.append(
                            NoteEvent(payload.pitch, onset, event.tick - onset,
                                      velocity, payload.channel)
                        )
        for (channel, pitch), queue in open_notes.items():
            for onset, velocity in queue:
                if end_tick > onset:
                    notes.append(NoteEvent(pitch, onset, end_tick - onset, velocity, channel))
    notes.sort(key=lambda n: (n.onset_tick, n.pitch, n.channel, n.duration_tick))
    return notes


def tempo_map(file: MidiFile) -> list[tuple[int, int]]:
    """All SetTempo events across tracks as ``(tick, us_per_quarter)``, sorted."""
    entries = [
        (event.tick, event.payload.microseconds_per_quarter)
        for track in file.tracks
        for event in track
        if isinstance(event.payload, SetTempo)
    ]
    entries.sort()
    return entries


def tick_to_seconds(tick: int, tempo: list[tuple[int, int]], division: int) -> float:
    """Convert an absolute tick to seconds under a tempo map.

    ``tempo`` is a list of ``(tick, us_per_quarter)`` entries sorted by
    tick; the default tempo of 500000 us/quarter applies before the first
    entry.  Accumulation is piecewise-linear across tempo segments.
    """
    if division <= 0:
        raise InvariantViolation("division must be positive")
    seconds = 0.0
    current_tick = 0
    current_uspq = DEFAULT_TEMPO_USPQ
    for change_tick, uspq in tempo:
        if change_tick >= tick:
            break
        if change_tick > current_tick:
            seconds += (change_tick - current_tick) * current_uspq / (division * 1e6)
            current_tick = change_tick
        current_uspq = uspq
    seconds += (tick - current_tick) * current_uspq / (division * 1e6)
    return seconds
