"""Training reports: delimited metrics plus rendered figures.

The CSV is the machine-readable record (``epoch,loss,accuracy,seconds``,
one row per epoch); the PNGs are the human-readable accuracy and loss
curves, each with a 10-epoch smoothed overlay.  Rendering uses the Agg
backend so it works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .training import EpochMetrics, smoothed_losses

CSV_HEADER = ["epoch", "loss", "accuracy", "seconds"]


class MalformedMetrics(ValueError):
    pass


def write_metrics_csv(metrics: Sequence[EpochMetrics], path: Path | str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_HEADER)
        for m in metrics:
            writer.writerow([m.epoch, repr(m.loss), repr(m.accuracy), repr(m.seconds)])


def read_metrics_csv(path: Path | str) -> list[EpochMetrics]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedMetrics(f"{path}: empty file") from None
        if header != CSV_HEADER:
            raise MalformedMetrics(f"{path}: unexpected header {header!r}")
        out = []
        for row in reader:
            if not row:
                continue
            if len(row) != 4:
                raise MalformedMetrics(f"{path}: bad row {row!r}")
            try:
                out.append(
                    EpochMetrics(
                        epoch=int(row[0]),
                        loss=float(row[1]),
                        accuracy=float(row[2]),
                        seconds=float(row[3]),
                    )
                )
            except ValueError as exc:
                raise MalformedMetrics(f"{path}: bad row {row!r}: {exc}") from exc
    return out


def _render_curve(
    epochs: list[int],
    values: list[float],
    smoothed: list[float],
    title: str,
    ylabel: str,
    path: Path,
) -> None:
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(epochs, values, color="#4878cf", alpha=0.55, label="per epoch")
    ax.plot(epochs, smoothed, color="#d1495b", linewidth=2, label="10-epoch mean")
    ax.set_xlabel("epoch")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_training_figures(
    metrics: Sequence[EpochMetrics], directory: Path | str, stem: str = "training"
) -> list[Path]:
    """Write ``<stem>.accuracy.png`` and ``<stem>.loss.png``; returns the paths."""
    if not metrics:
        raise MalformedMetrics("no metrics to plot")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    epochs = [m.epoch for m in metrics]
    accuracy_path = directory / f"{stem}.accuracy.png"
    loss_path = directory / f"{stem}.loss.png"
    _render_curve(
        epochs,
        [m.accuracy for m in metrics],
        smoothed_losses([m.accuracy for m in metrics]),
        "Training accuracy",
        "token accuracy",
        accuracy_path,
    )
    _render_curve(
        epochs,
        [m.loss for m in metrics],
        smoothed_losses([m.loss for m in metrics]),
        "Training loss",
        "mean cross-entropy",
        loss_path,
    )
    return [accuracy_path, loss_path]
