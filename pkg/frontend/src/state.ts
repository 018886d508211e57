/**
 * Pure studio state helpers: form parsing and validation (mirroring the
 * server's rules so bad requests never leave the browser), URL query
 * round-tripping for shareable settings, and the piano highlighting
 * function.
 */

import { MidiNote } from "./midi.js";

export interface FormState {
  seedNotes: string;
  seconds: number;
  temperature: number;
  rngSeed: number;
}

export const DEFAULT_FORM: FormState = {
  seedNotes: "A4",
  seconds: 120,
  temperature: 1,
  rngSeed: 0,
};

/** Server-side generation cap mirrored client-side. */
export const MAX_SECONDS = 300;

export const REST_TOKEN = 128;

export const PIANO_LOW = 21; // A0
export const PIANO_HIGH = 108; // C8

export type PlaybackStatus = "idle" | "loading" | "playing" | "paused";

const NAME_TO_SEMITONE: Record<string, number> = {
  C: 0, "C#": 1, DB: 1, D: 2, "D#": 3, EB: 3, E: 4, F: 5,
  "F#": 6, GB: 6, G: 7, "G#": 8, AB: 8, A: 9, "A#": 10, BB: 10, B: 11,
};

export class SeedError extends Error {}

function nameToPitch(name: string): number {
  const text = name.trim().toUpperCase();
  for (const split of [2, 1]) {
    const letter = text.slice(0, split);
    const octaveText = text.slice(split);
    if (letter in NAME_TO_SEMITONE && /^-?\d+$/.test(octaveText)) {
      const pitch = NAME_TO_SEMITONE[letter] + (parseInt(octaveText, 10) + 1) * 12;
      if (pitch >= 0 && pitch <= 127) {
        return pitch;
      }
      throw new SeedError(`"${name}" maps to pitch ${pitch} outside [0, 127]`);
    }
  }
  throw new SeedError(`unrecognized note name "${name}"`);
}

/**
 * Comma-separated seed: note names ("A4,C5"), integer tokens, "REST".
 * Matches the service's parser token for token.
 */
export function parseSeedNotes(text: string): number[] {
  const tokens: number[] = [];
  for (const piece of text.split(",")) {
    const item = piece.trim();
    if (item === "") {
      continue;
    }
    if (item.toUpperCase() === "REST") {
      tokens.push(REST_TOKEN);
    } else if (/^-?\d+$/.test(item)) {
      const value = parseInt(item, 10);
      if (value < 0 || value > REST_TOKEN) {
        throw new SeedError(`seed token ${value} outside [0, ${REST_TOKEN}]`);
      }
      tokens.push(value);
    } else {
      tokens.push(nameToPitch(item));
    }
  }
  if (tokens.length === 0) {
    throw new SeedError(`no seed notes in "${text}"`);
  }
  return tokens;
}

/** First validation problem as a message, or null when the form is fine. */
export function validateForm(form: FormState): string | null {
  try {
    parseSeedNotes(form.seedNotes);
  } catch (error) {
    return (error as Error).message;
  }
  if (!Number.isFinite(form.seconds) || form.seconds <= 0) {
    return "seconds must be positive";
  }
  if (form.seconds > MAX_SECONDS) {
    return `seconds must be at most ${MAX_SECONDS}`;
  }
  if (!Number.isFinite(form.temperature) || form.temperature < 0) {
    return "temperature must be zero or more";
  }
  if (!Number.isInteger(form.rngSeed)) {
    return "rng seed must be an integer";
  }
  return null;
}

export function formToQuery(form: FormState): string {
  const query = new URLSearchParams();
  query.set("seed", form.seedNotes);
  query.set("seconds", String(form.seconds));
  query.set("temperature", String(form.temperature));
  query.set("rngSeed", String(form.rngSeed));
  return query.toString();
}

function numberOr(text: string | null, fallback: number): number {
  if (text === null || text.trim() === "") {
    return fallback;
  }
  const value = Number(text);
  return Number.isFinite(value) ? value : fallback;
}

/** Inverse of formToQuery; missing or garbled fields fall back to defaults. */
export function formFromQuery(query: string): FormState {
  const params = new URLSearchParams(query);
  return {
    seedNotes: params.get("seed") ?? DEFAULT_FORM.seedNotes,
    seconds: numberOr(params.get("seconds"), DEFAULT_FORM.seconds),
    temperature: numberOr(params.get("temperature"), DEFAULT_FORM.temperature),
    rngSeed: numberOr(params.get("rngSeed"), DEFAULT_FORM.rngSeed),
  };
}

/**
 * Keys sounding at the playhead: onset <= t < onset + duration, limited
 * to the 88 keys of the piano. Pure — same inputs, same set.
 */
export function pressedKeys(notes: MidiNote[], playheadSeconds: number): Set<number> {
  const pressed = new Set<number>();
  for (const note of notes) {
    if (
      note.midi >= PIANO_LOW &&
      note.midi <= PIANO_HIGH &&
      note.onsetSeconds <= playheadSeconds &&
      playheadSeconds < note.onsetSeconds + note.durationSeconds
    ) {
      pressed.add(note.midi);
    }
  }
  return pressed;
}

export function clampPlayhead(playheadSeconds: number, durationSeconds: number): number {
  return Math.min(Math.max(playheadSeconds, 0), durationSeconds);
}

export function midiToFrequency(midi: number): number {
  return 440 * Math.pow(2, (midi - 69) / 12);
}
