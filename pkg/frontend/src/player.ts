/**
 * Playback: a Player that turns a parsed song into scheduled tones and
 * a moving playhead. The clock and tone synthesis live behind a small
 * scheduler interface so the logic is testable without an AudioContext;
 * the WebAudio implementation plays one sine oscillator per note —
 * fidelity is not the point, hearing the structure is.
 */

import { Song } from "./midi.js";
import { midiToFrequency } from "./state.js";

export interface ToneScheduler {
  /** Current time in seconds on the scheduler's own clock. */
  now(): number;
  /** Play a tone at an absolute scheduler time. */
  tone(midi: number, when: number, durationSeconds: number): void;
  /** Silence everything scheduled so far. */
  cancelAll(): void;
}

export class WebAudioScheduler implements ToneScheduler {
  private context: AudioContext | null = null;
  private active: Array<{ oscillator: OscillatorNode; gain: GainNode }> = [];

  private ensureContext(): AudioContext {
    if (this.context === null) {
      this.context = new AudioContext();
    }
    if (this.context.state === "suspended") {
      void this.context.resume();
    }
    return this.context;
  }

  now(): number {
    return this.ensureContext().currentTime;
  }

  tone(midi: number, when: number, durationSeconds: number): void {
    const context = this.ensureContext();
    const oscillator = context.createOscillator();
    const gain = context.createGain();
    oscillator.type = "sine";
    oscillator.frequency.value = midiToFrequency(midi);
    // short attack/release ramps avoid clicks at note boundaries
    const attack = Math.min(0.01, durationSeconds / 4);
    gain.gain.setValueAtTime(0, when);
    gain.gain.linearRampToValueAtTime(0.18, when + attack);
    gain.gain.setValueAtTime(0.18, when + durationSeconds - attack);
    gain.gain.linearRampToValueAtTime(0, when + durationSeconds);
    oscillator.connect(gain);
    gain.connect(context.destination);
    oscillator.start(when);
    oscillator.stop(when + durationSeconds);
    const entry = { oscillator, gain };
    this.active.push(entry);
    oscillator.onended = () => {
      this.active = this.active.filter((candidate) => candidate !== entry);
      gain.disconnect();
    };
  }

  cancelAll(): void {
    for (const { oscillator, gain } of this.active) {
      try {
        oscillator.onended = null;
        oscillator.stop();
      } catch {
        // already stopped
      }
      gain.disconnect();
    }
    this.active = [];
  }
}

export type PlayerStatus = "idle" | "playing" | "paused";

export class Player {
  private song: Song | null = null;
  private status: PlayerStatus = "idle";
  private offset = 0; // song position when the clock was last anchored
  private anchor = 0; // scheduler time of that anchoring

  constructor(private scheduler: ToneScheduler) {}

  load(song: Song): void {
    this.stop();
    this.song = song;
  }

  get loaded(): boolean {
    return this.song !== null;
  }

  get state(): PlayerStatus {
    return this.status;
  }

  get duration(): number {
    return this.song === null ? 0 : this.song.durationSeconds;
  }

  /** Current position in seconds; advances only while playing. */
  playhead(): number {
    if (this.status === "playing") {
      return Math.min(this.offset + (this.scheduler.now() - this.anchor), this.duration);
    }
    return this.offset;
  }

  play(): void {
    if (this.song === null || this.status === "playing") {
      return;
    }
    if (this.offset >= this.duration) {
      this.offset = 0;
    }
    const from = this.offset;
    const start = this.scheduler.now();
    for (const note of this.song.notes) {
      const end = note.onsetSeconds + note.durationSeconds;
      if (end <= from) {
        continue;
      }
      // notes already sounding at the start point play their remainder
      const when = start + Math.max(note.onsetSeconds - from, 0);
      const duration = end - Math.max(note.onsetSeconds, from);
      this.scheduler.tone(note.midi, when, duration);
    }
    this.anchor = start;
    this.status = "playing";
  }

  pause(): void {
    if (this.status !== "playing") {
      return;
    }
    this.offset = this.playhead();
    this.scheduler.cancelAll();
    this.status = "paused";
  }

  stop(): void {
    this.scheduler.cancelAll();
    this.status = "idle";
    this.offset = 0;
  }

  /** Jump to a position; past the end stops playback entirely. */
  seek(seconds: number): void {
    if (this.song === null) {
      return;
    }
    if (seconds >= this.duration) {
      this.stop();
      this.offset = this.duration;
      return;
    }
    const wasPlaying = this.status === "playing";
    this.scheduler.cancelAll();
    this.status = "paused";
    this.offset = Math.max(seconds, 0);
    if (wasPlaying) {
      this.play();
    }
  }

  /** Advance bookkeeping; returns true while playback continues. */
  tick(): boolean {
    if (this.status !== "playing") {
      return false;
    }
    if (this.playhead() >= this.duration) {
      this.status = "idle";
      this.offset = this.duration;
      return false;
    }
    return true;
  }
}
