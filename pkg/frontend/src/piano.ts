/**
 * The 88-key piano strip: built once as DOM nodes, updated by toggling
 * a "pressed" class from the pure pressedKeys() set.
 */

import { PIANO_HIGH, PIANO_LOW } from "./state.js";

const BLACK_PITCH_CLASSES = new Set([1, 3, 6, 8, 10]);

export interface PianoView {
  update(pressed: Set<number>): void;
}

export function renderPiano(container: HTMLElement): PianoView {
  container.textContent = "";
  const keys = new Map<number, HTMLElement>();
  for (let midi = PIANO_LOW; midi <= PIANO_HIGH; midi++) {
    const key = container.ownerDocument.createElement("div");
    const black = BLACK_PITCH_CLASSES.has(midi % 12);
    key.className = black ? "key black" : "key white";
    key.dataset.midi = String(midi);
    container.appendChild(key);
    keys.set(midi, key);
  }
  let lastPressed = new Set<number>();
  return {
    update(pressed: Set<number>): void {
      for (const midi of lastPressed) {
        if (!pressed.has(midi)) {
          keys.get(midi)?.classList.remove("pressed");
        }
      }
      for (const midi of pressed) {
        if (!lastPressed.has(midi)) {
          keys.get(midi)?.classList.add("pressed");
        }
      }
      lastPressed = pressed;
    },
  };
}
