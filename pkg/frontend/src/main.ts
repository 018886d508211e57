/**
 * Studio wiring: form in, MIDI bytes out, piano lit up in between.
 *
 * Everything effectful (fetch, audio clock, animation frames) is
 * injectable so the whole flow runs under a test DOM; the browser entry
 * point at the bottom passes the real implementations.
 */

import { parseSmf, Song } from "./midi.js";
import { Player, ToneScheduler, WebAudioScheduler } from "./player.js";
import { renderPiano } from "./piano.js";
import {
  DEFAULT_FORM,
  FormState,
  formFromQuery,
  formToQuery,
  pressedKeys,
  validateForm,
} from "./state.js";

export interface StudioOptions {
  fetchFn?: typeof fetch;
  scheduler?: ToneScheduler;
  requestFrame?: (callback: () => void) => void;
}

export interface StudioHandle {
  player: Player;
  form(): FormState;
  song(): Song | null;
  bytes(): Uint8Array | null;
  generate(): Promise<void>;
  /** Run one animation-frame update by hand (tests drive time themselves). */
  frame(): void;
}

function formatSeconds(seconds: number): string {
  const minutes = Math.floor(seconds / 60);
  const rest = seconds - minutes * 60;
  return `${minutes}:${rest.toFixed(1).padStart(4, "0")}`;
}

export function initStudio(doc: Document, options: StudioOptions = {}): StudioHandle {
  const fetchFn = options.fetchFn ?? fetch.bind(globalThis);
  const scheduler = options.scheduler ?? new WebAudioScheduler();
  const view = doc.defaultView;
  const requestFrame =
    options.requestFrame ??
    ((callback: () => void) => view?.requestAnimationFrame(() => callback()));

  const element = <T extends HTMLElement>(id: string): T => {
    const found = doc.getElementById(id);
    if (found === null) {
      throw new Error(`studio markup is missing #${id}`);
    }
    return found as T;
  };

  const seedInput = element<HTMLInputElement>("seed-notes");
  const secondsInput = element<HTMLInputElement>("seconds");
  const temperatureInput = element<HTMLInputElement>("temperature");
  const rngSeedInput = element<HTMLInputElement>("rng-seed");
  const generateButton = element<HTMLButtonElement>("generate");
  const playButton = element<HTMLButtonElement>("play-pause");
  const downloadButton = element<HTMLButtonElement>("download");
  const seekSlider = element<HTMLInputElement>("seek");
  const banner = element<HTMLElement>("banner");
  const songInfo = element<HTMLElement>("song-info");
  const timeLabel = element<HTMLElement>("time");
  const healthLabel = element<HTMLElement>("health");

  const piano = renderPiano(element("piano"));
  const player = new Player(scheduler);

  let song: Song | null = null;
  let bytes: Uint8Array<ArrayBuffer> | null = null;
  let inFlight = false;

  const fillForm = (form: FormState) => {
    seedInput.value = form.seedNotes;
    secondsInput.value = String(form.seconds);
    temperatureInput.value = String(form.temperature);
    rngSeedInput.value = String(form.rngSeed);
  };

  const readForm = (): FormState => ({
    seedNotes: seedInput.value,
    seconds: Number(secondsInput.value),
    temperature: Number(temperatureInput.value),
    rngSeed: Number(rngSeedInput.value),
  });

  const showBanner = (message: string) => {
    banner.textContent = message;
    banner.hidden = message === "";
  };

  const syncQuery = () => {
    view?.history.replaceState(null, "", "?" + formToQuery(readForm()));
  };

  const updateTransport = () => {
    const status = player.state;
    playButton.textContent = status === "playing" ? "Pause" : "Play";
    playButton.disabled = song === null;
    downloadButton.disabled = bytes === null;
    seekSlider.disabled = song === null;
  };

  const paintFrame = () => {
    if (song === null) {
      return;
    }
    const playhead = player.playhead();
    piano.update(pressedKeys(song.notes, playhead));
    timeLabel.textContent = `${formatSeconds(playhead)} / ${formatSeconds(player.duration)}`;
    if (player.duration > 0) {
      seekSlider.value = String(Math.round((playhead / player.duration) * 1000));
    }
  };

  const pump = () => {
    paintFrame();
    if (player.tick()) {
      requestFrame(pump);
    } else {
      updateTransport();
    }
  };

  const generate = async (): Promise<void> => {
    if (inFlight) {
      return;
    }
    showBanner("");
    const form = readForm();
    const problem = validateForm(form);
    if (problem !== null) {
      showBanner(problem);
      return;
    }
    inFlight = true;
    generateButton.disabled = true;
    songInfo.textContent = "generating…";
    try {
      const response = await fetchFn("api/generate", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({
          seed_notes: form.seedNotes,
          seconds: form.seconds,
          temperature: form.temperature,
          rng_seed: form.rngSeed,
        }),
      });
      if (!response.ok) {
        let detail = `request failed (${response.status})`;
        try {
          const body = await response.json();
          if (typeof body.detail === "string") {
            detail = body.detail;
          }
        } catch {
          // keep the generic message
        }
        if (response.status === 429) {
          detail = "server busy — try again in a moment";
        } else if (response.status === 503) {
          detail = "no model loaded on the server";
        }
        showBanner(detail);
        songInfo.textContent = "";
        return;
      }
      const received = new Uint8Array(await response.arrayBuffer());
      const parsed = parseSmf(received);
      bytes = received;
      song = parsed;
      player.load(parsed);
      songInfo.textContent = `${parsed.notes.length} notes · ${parsed.durationSeconds.toFixed(1)} s`;
      paintFrame();
    } catch {
      showBanner("service unavailable");
      songInfo.textContent = "";
    } finally {
      inFlight = false;
      generateButton.disabled = false;
      updateTransport();
    }
  };

  const download = () => {
    if (bytes === null || view === null) {
      return;
    }
    const url = view.URL.createObjectURL(new Blob([bytes], { type: "audio/midi" }));
    const anchor = doc.createElement("a");
    anchor.href = url;
    anchor.download = "melody.mid";
    doc.body.appendChild(anchor);
    anchor.click();
    doc.body.removeChild(anchor);
    view.setTimeout(() => view.URL.revokeObjectURL(url), 1000);
  };

  generateButton.addEventListener("click", () => void generate());
  playButton.addEventListener("click", () => {
    if (player.state === "playing") {
      player.pause();
    } else {
      player.play();
      requestFrame(pump);
    }
    updateTransport();
  });
  downloadButton.addEventListener("click", download);
  seekSlider.addEventListener("input", () => {
    player.seek((Number(seekSlider.value) / 1000) * player.duration);
    paintFrame();
    updateTransport();
  });
  for (const input of [seedInput, secondsInput, temperatureInput, rngSeedInput]) {
    input.addEventListener("change", syncQuery);
  }

  fillForm(view ? formFromQuery(view.location.search) : DEFAULT_FORM);
  updateTransport();
  showBanner("");

  void (async () => {
    try {
      const response = await fetchFn("api/health");
      const body = await response.json();
      healthLabel.textContent = body.model_loaded
        ? `model ready (hidden ${body.dims.hidden})`
        : "no model loaded";
    } catch {
      healthLabel.textContent = "service unreachable";
    }
  })();

  return {
    player,
    form: readForm,
    song: () => song,
    bytes: () => bytes,
    generate,
    frame: pump,
  };
}

// browser entry point; tests build their own DOM and call initStudio directly
if (typeof document !== "undefined" && document.getElementById("studio") !== null) {
  initStudio(document);
}
