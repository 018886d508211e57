"""Command-line entry points: train, generate, inspect, serve, demo.

Exit codes: 0 success; 2 unusable input (empty corpus, bad checkpoint,
unparseable MIDI); 3 unparseable seed note.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .demo import write_demo_corpus
from .generate import (
    GenerationRequest,
    InvalidRequest,
    InvalidSeedToken,
    generate,
    nominal_duration_seconds,
    parse_seed,
)
from .pianoroll import (
    EmptyInput,
    decode_tokens,
    pitch_to_frequency,
    pitch_to_name,
    to_token_sequence,
)
from .report import render_training_figures, write_metrics_csv
from .service import ServiceConfig, run as run_service
from .smf import SmfError, extract_notes, parse_smf, serialize_smf, tempo_map, tick_to_seconds
from .training import (
    CheckpointError,
    EpochMetrics,
    TrainingConfig,
    load_checkpoint,
    save_checkpoint,
    train,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_BAD_SEED = 3


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_corpus(directory: Path, window_len: int):
    """Tokenize every parseable .mid file; skip and count the rest."""
    files = sorted(
        p for p in directory.iterdir() if p.suffix.lower() in (".mid", ".midi")
    )
    if not files:
        return None, 0
    corpus = []
    skipped = 0
    for path in files:
        try:
            midi = parse_smf(path.read_bytes())
            notes = extract_notes(midi)
            seq = to_token_sequence(notes, midi.division)
        except (SmfError, EmptyInput, OSError) as exc:
            _warn(f"skipping {path.name}: {exc}")
            skipped += 1
            continue
        if len(seq.tokens) < window_len + 1:
            _warn(
                f"skipping {path.name}: {len(seq.tokens)} tokens is shorter "
                f"than one {window_len}-token window plus target"
            )
            skipped += 1
            continue
        corpus.append(seq)
    return corpus, skipped


def cmd_train(args: argparse.Namespace) -> int:
    data_dir = Path(args.data)
    if not data_dir.is_dir():
        return _fail(f"{data_dir} is not a directory", EXIT_BAD_INPUT)
    loaded = _load_corpus(data_dir, args.window)
    if loaded[0] is None:
        return _fail("no MIDI files found", EXIT_BAD_INPUT)
    corpus, skipped = loaded
    if skipped:
        print(f"skipped {skipped} unusable file(s)", file=sys.stderr)
    if not corpus:
        return _fail("no usable MIDI files in corpus", EXIT_BAD_INPUT)
    print(f"training on {len(corpus)} file(s), window {args.window}, hidden {args.hidden}")

    config = TrainingConfig(
        window_len=args.window,
        epochs_max=args.epochs,
        accuracy_stop=args.stop_acc,
        learning_rate=args.lr,
        batch_size=args.batch,
        hidden=args.hidden,
        rng_seed=args.seed,
    )

    def report(m: EpochMetrics) -> None:
        print(
            f"epoch {m.epoch:4d}  loss {m.loss:.4f}  accuracy {m.accuracy:.4f}"
            f"  ({m.seconds:.1f}s)",
            flush=True,
        )

    checkpoint, metrics = train(corpus, config, progress=report)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(save_checkpoint(checkpoint))
    stem = out.stem
    csv_path = out.parent / f"{stem}.metrics.csv"
    write_metrics_csv(metrics, csv_path)
    figures = render_training_figures(metrics, out.parent, stem=stem)
    print(f"stopped after epoch {metrics[-1].epoch} at accuracy {metrics[-1].accuracy:.4f}")
    print(f"wrote {out}")
    print(f"wrote {csv_path}")
    for path in figures:
        print(f"wrote {path}")
    return EXIT_OK


def _resolve_model_path(flag_value: str | None) -> str | None:
    return os.environ.get("MELODYFORGE_MODEL") or flag_value


def cmd_generate(args: argparse.Namespace) -> int:
    model_path = _resolve_model_path(args.model)
    if not model_path:
        return _fail("no checkpoint given (--model or MELODYFORGE_MODEL)", EXIT_BAD_INPUT)
    try:
        checkpoint = load_checkpoint(Path(model_path).read_bytes())
    except (CheckpointError, OSError) as exc:
        return _fail(f"cannot load checkpoint {model_path}: {exc}", EXIT_BAD_INPUT)
    try:
        seed = parse_seed(args.seed_notes)
        request = GenerationRequest(
            seed_tokens=seed,
            target_seconds=args.seconds,
            temperature=args.temperature,
            rng_seed=args.rng_seed,
        )
    except InvalidSeedToken as exc:
        return _fail(f"bad seed note: {exc}", EXIT_BAD_SEED)
    except InvalidRequest as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)

    sequence = generate(request, checkpoint.params)
    midi = decode_tokens(sequence, tempo_bpm=request.tempo_bpm)
    data = serialize_smf(midi)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(data)
    notes = extract_notes(midi)
    duration = nominal_duration_seconds(sequence, request.tempo_bpm)
    print(f"wrote {out}: {len(notes)} notes, {duration:.1f} s nominal")
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    path = Path(args.file)
    try:
        midi = parse_smf(path.read_bytes())
    except (SmfError, OSError) as exc:
        return _fail(f"{type(exc).__name__}: {exc}", EXIT_BAD_INPUT)
    notes = extract_notes(midi)
    tempos = tempo_map(midi)
    event_count = sum(len(track) for track in midi.tracks)
    last_tick = max((e.tick for track in midi.tracks for e in track), default=0)
    duration = tick_to_seconds(last_tick, tempos, midi.division)

    print(f"format {midi.format}, division {midi.division} ticks/quarter")
    print(f"{len(midi.tracks)} track(s), {event_count} event(s)")
    print(f"{len(notes)} notes, {duration:.1f} s")
    print("tempo map:")
    for tick, uspq in tempos:
        print(f"  tick {tick}: {uspq} us/quarter ({60_000_000 / uspq:.1f} BPM)")
    if notes:
        print("first notes:")
        for note in notes[:16]:
            name = pitch_to_name(note.pitch)
            freq = pitch_to_frequency(note.pitch)
            print(
                f"  {note.pitch:3d} {name:4s} {freq:8.2f} Hz"
                f"  tick {note.onset_tick} for {note.duration_tick}"
            )
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    model_path = _resolve_model_path(args.model)
    if not model_path:
        return _fail("no checkpoint given (--model or MELODYFORGE_MODEL)", EXIT_BAD_INPUT)
    try:
        config = ServiceConfig(
            checkpoint_path=Path(model_path),
            host=args.host,
            port=args.port,
            max_concurrent=args.max_concurrent,
            max_seconds=args.max_seconds,
            static_dir=Path(args.static) if args.static else None,
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    if not Path(model_path).is_file():
        return _fail(f"checkpoint {model_path} not found", EXIT_BAD_INPUT)
    run_service(config)
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    paths = write_demo_corpus(Path(args.out))
    print(f"wrote {len(paths)} files to {Path(args.out)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="melodyforge",
        description="Train a melody model on MIDI files and generate new pieces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a model on a directory of .mid files")
    p_train.add_argument("--data", required=True, help="directory of MIDI files")
    p_train.add_argument("--out", required=True, help="checkpoint output path")
    p_train.add_argument("--epochs", type=int, default=300, help="epoch cap")
    p_train.add_argument("--window", type=int, default=64, help="training window length")
    p_train.add_argument("--hidden", type=int, default=128, help="encoder width per direction")
    p_train.add_argument("--lr", type=float, default=1e-3, help="learning rate")
    p_train.add_argument("--batch", type=int, default=32, help="windows per batch")
    p_train.add_argument("--seed", type=int, default=0, help="training rng seed")
    p_train.add_argument("--stop-acc", type=float, default=0.93, help="early-stop accuracy")
    p_train.set_defaults(func=cmd_train)

    p_gen = sub.add_parser("generate", help="generate a melody from a checkpoint")
    p_gen.add_argument("--model", help="checkpoint path (MELODYFORGE_MODEL overrides)")
    p_gen.add_argument("--out", required=True, help="output .mid path")
    p_gen.add_argument("--seed-notes", default="A4", help='seed, e.g. "A4,C5,E5"')
    p_gen.add_argument("--seconds", type=float, default=120.0, help="target duration")
    p_gen.add_argument("--temperature", type=float, default=1.0, help="0 = greedy")
    p_gen.add_argument("--rng-seed", type=int, default=0, help="sampling rng seed")
    p_gen.set_defaults(func=cmd_generate)

    p_inspect = sub.add_parser("inspect", help="summarize a MIDI file")
    p_inspect.add_argument("file", help=".mid file to inspect")
    p_inspect.set_defaults(func=cmd_inspect)

    p_serve = sub.add_parser("serve", help="run the HTTP generation service")
    p_serve.add_argument("--model", help="checkpoint path (MELODYFORGE_MODEL overrides)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8643)
    p_serve.add_argument("--max-concurrent", type=int, default=4)
    p_serve.add_argument("--max-seconds", type=float, default=300.0)
    p_serve.add_argument("--static", help="directory of built studio UI files")
    p_serve.set_defaults(func=cmd_serve)

    p_demo = sub.add_parser("demo", help="write the bundled demo corpus")
    p_demo.add_argument("--out", required=True, help="directory for .mid files")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
