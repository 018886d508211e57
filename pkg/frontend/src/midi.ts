/**
 * Minimal Standard MIDI File reader for the subset the generation
 * service emits (format 0/1, NoteOn/NoteOff, SetTempo), tolerant of
 * everything else: unknown meta events, sysex, and other channel
 * messages are skipped. The bytes are never re-encoded — playback and
 * download both work from the original buffer.
 */

export interface MidiNote {
  midi: number;
  onsetSeconds: number;
  durationSeconds: number;
}

export interface Song {
  notes: MidiNote[];
  durationSeconds: number;
}

export class MidiParseError extends Error {}

const DEFAULT_TEMPO_USPQ = 500000;

interface RawNote {
  midi: number;
  onsetTick: number;
  durationTick: number;
}

class ByteReader {
  private pos = 0;

  constructor(private data: Uint8Array) {}

  get offset(): number {
    return this.pos;
  }

  get remaining(): number {
    return this.data.length - this.pos;
  }

  u8(): number {
    if (this.pos >= this.data.length) {
      throw new MidiParseError(`unexpected end of data at byte ${this.pos}`);
    }
    return this.data[this.pos++];
  }

  peek(): number {
    if (this.pos >= this.data.length) {
      throw new MidiParseError(`unexpected end of data at byte ${this.pos}`);
    }
    return this.data[this.pos];
  }

  u16(): number {
    return (this.u8() << 8) | this.u8();
  }

  u32(): number {
    return ((this.u8() << 24) | (this.u8() << 16) | (this.u8() << 8) | this.u8()) >>> 0;
  }

  bytes(count: number): Uint8Array {
    if (this.remaining < count) {
      throw new MidiParseError(`expected ${count} bytes at ${this.pos}, have ${this.remaining}`);
    }
    const slice = this.data.subarray(this.pos, this.pos + count);
    this.pos += count;
    return slice;
  }

  skip(count: number): void {
    this.bytes(count);
  }

  vlq(): number {
    let value = 0;
    for (let i = 0; i < 4; i++) {
      const byte = this.u8();
      value = (value << 7) | (byte & 0x7f);
      if ((byte & 0x80) === 0) {
        return value;
      }
    }
    throw new MidiParseError("variable-length quantity longer than 4 bytes");
  }
}

function ascii(bytes: Uint8Array): string {
  return String.fromCharCode(...bytes);
}

interface TrackResult {
  notes: RawNote[];
  tempoChanges: Array<{ tick: number; uspq: number }>;
  endTick: number;
}

function parseTrack(data: Uint8Array): TrackResult {
  const reader = new ByteReader(data);
  const notes: RawNote[] = [];
  const tempoChanges: Array<{ tick: number; uspq: number }> = [];
  // open notes per (channel << 8 | pitch), FIFO so overlapping repeats pair up
  const open = new Map<number, number[]>();
  let tick = 0;
  let runningStatus = 0;

  const closeNote = (channel: number, pitch: number) => {
    const key = (channel << 8) | pitch;
    const onsets = open.get(key);
    if (onsets && onsets.length > 0) {
      const onset = onsets.shift() as number;
      notes.push({ midi: pitch, onsetTick: onset, durationTick: tick - onset });
    }
  };

  while (reader.remaining > 0) {
    tick += reader.vlq();
    let status = reader.peek();
    if (status < 0x80) {
      if (runningStatus === 0) {
        throw new MidiParseError(`data byte ${status} with no running status`);
      }
      status = runningStatus;
    } else {
      reader.skip(1);
    }

    if (status === 0xff) {
      const type = reader.u8();
      const length = reader.vlq();
      const payload = reader.bytes(length);
      runningStatus = 0;
      if (type === 0x51 && length === 3) {
        tempoChanges.push({ tick, uspq: (payload[0] << 16) | (payload[1] << 8) | payload[2] });
      } else if (type === 0x2f) {
        break; // end of track
      }
    } else if (status === 0xf0 || status === 0xf7) {
      reader.skip(reader.vlq());
      runningStatus = 0;
    } else {
      runningStatus = status;
      const kind = status & 0xf0;
      const channel = status & 0x0f;
      const a = reader.u8();
      if (kind === 0xc0 || kind === 0xd0) {
        continue; // program change / channel pressure: one data byte, ignored
      }
      const b = reader.u8();
      if (kind === 0x90 && b > 0) {
        const key = (channel << 8) | a;
        if (!open.has(key)) {
          open.set(key, []);
        }
        (open.get(key) as number[]).push(tick);
      } else if (kind === 0x80 || (kind === 0x90 && b === 0)) {
        closeNote(channel, a);
      }
      // other two-byte messages (controller, pitch bend, ...) are ignored
    }
  }
  return { notes, tempoChanges, endTick: tick };
}

function tickToSeconds(
  tick: number,
  tempoChanges: Array<{ tick: number; uspq: number }>,
  division: number,
): number {
  let seconds = 0;
  let currentTick = 0;
  let uspq = DEFAULT_TEMPO_USPQ;
  for (const change of tempoChanges) {
    if (change.tick >= tick) {
      break;
    }
    seconds += ((change.tick - currentTick) * uspq) / division / 1e6;
    currentTick = change.tick;
    uspq = change.uspq;
  }
  return seconds + ((tick - currentTick) * uspq) / division / 1e6;
}

/** Parse SMF bytes into a note list with second-resolution timing. */
export function parseSmf(data: Uint8Array): Song {
  const reader = new ByteReader(data);
  if (ascii(reader.bytes(4)) !== "MThd") {
    throw new MidiParseError("not a MIDI file (missing MThd)");
  }
  const headerLength = reader.u32();
  if (headerLength < 6) {
    throw new MidiParseError(`header chunk too short (${headerLength})`);
  }
  reader.u16(); // format: 0 and 1 read identically here
  const trackCount = reader.u16();
  const division = reader.u16();
  reader.skip(headerLength - 6);
  if ((division & 0x8000) !== 0) {
    throw new MidiParseError("SMPTE division is not supported");
  }
  if (division === 0) {
    throw new MidiParseError("division must be positive");
  }

  const rawNotes: RawNote[] = [];
  const tempoChanges: Array<{ tick: number; uspq: number }> = [];
  let endTick = 0;
  for (let i = 0; i < trackCount; i++) {
    if (ascii(reader.bytes(4)) !== "MTrk") {
      throw new MidiParseError(`track ${i} missing MTrk header`);
    }
    const result = parseTrack(reader.bytes(reader.u32()));
    rawNotes.push(...result.notes);
    tempoChanges.push(...result.tempoChanges);
    endTick = Math.max(endTick, result.endTick);
  }

  tempoChanges.sort((left, right) => left.tick - right.tick);
  rawNotes.sort((left, right) => left.onsetTick - right.onsetTick);
  const notes = rawNotes.map((note) => {
    const onsetSeconds = tickToSeconds(note.onsetTick, tempoChanges, division);
    const offSeconds = tickToSeconds(note.onsetTick + note.durationTick, tempoChanges, division);
    return { midi: note.midi, onsetSeconds, durationSeconds: offSeconds - onsetSeconds };
  });
  let duration = tickToSeconds(endTick, tempoChanges, division);
  for (const note of notes) {
    duration = Math.max(duration, note.onsetSeconds + note.durationSeconds);
  }
  return { notes, durationSeconds: duration };
}
