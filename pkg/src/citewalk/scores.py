"""Pair-score records and their CSV serialization.

One row per scored node pair.  ``walk_length`` is the number of walk steps
for walk-based measures (and the matrix power behind the spectral one) and
0 for the shortest-path measures, where it does not apply.
``is_zero_estimate`` marks sampled estimates that recorded no visit, which
is an estimation failure rather than a true zero.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError

MEASURES = ("walk_exact", "walk_estimate", "path_length", "path_weight", "spectral")

PROVENANCES = ("collab", "coclass", "synthetic")

_HEADER = ["source_id", "target_id", "measure", "walk_length", "value", "is_zero_estimate"]

_PAIR_HEADER = ["a", "b", "label"]


@dataclass(frozen=True)
class PairScore:
    source_id: str
    target_id: str
    measure: str
    walk_length: int
    value: float
    is_zero_estimate: bool = False


def write_scores(path: str | Path, scores, force: bool = False) -> None:
    """Write score rows as CSV; refuses to overwrite unless ``force``."""
    p = Path(path)
    if p.exists() and not force:
        raise FileExistsError(f"{p} exists; pass force=True to overwrite")
    with open(p, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_HEADER)
        for s in scores:
            writer.writerow(
                [
                    s.source_id,
                    s.target_id,
                    s.measure,
                    s.walk_length,
                    repr(s.value),
                    "true" if s.is_zero_estimate else "false",
                ]
            )


def read_scores(path: str | Path) -> list[PairScore]:
    p = Path(path)
    try:
        fh = open(p, newline="")
    except OSError as exc:
        raise ParseError(f"cannot read scores {p}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != _HEADER:
            raise ParseError(f"{p}: unexpected header {header!r}")
        out = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(_HEADER):
                raise ParseError(f"{p}:{lineno}: expected {len(_HEADER)} fields, got {len(row)}")
            try:
                out.append(
                    PairScore(
                        source_id=row[0],
                        target_id=row[1],
                        measure=row[2],
                        walk_length=int(row[3]),
                        value=float(row[4]),
                        is_zero_estimate=row[5] == "true",
                    )
                )
            except ValueError as exc:
                raise ParseError(f"{p}:{lineno}: {exc}") from exc
    return out


@dataclass(frozen=True)
class LabeledPairSet:
    """Entity pairs labeled positive/negative for a prediction task.

    Collaboration and co-classification sets are balanced by construction;
    that balance is part of the contract, not a convention.
    """

    pairs: tuple[tuple[str, str, str], ...]
    provenance: str

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}, got {self.provenance!r}")
        seen = set()
        n_pos = 0
        for a, b, label in self.pairs:
            if label not in ("positive", "negative"):
                raise ValueError(f"bad label {label!r} for pair ({a}, {b})")
            if a == b:
                raise ValueError(f"self-pair ({a}, {b}) not allowed")
            key = (a, b) if a <= b else (b, a)
            if key in seen:
                raise ValueError(f"duplicate unordered pair ({a}, {b})")
            seen.add(key)
            n_pos += label == "positive"
        if self.provenance in ("collab", "coclass") and n_pos * 2 != len(self.pairs):
            raise ValueError(
                f"{self.provenance} sets must be balanced; "
                f"got {n_pos} positives of {len(self.pairs)} pairs"
            )

    @property
    def positives(self) -> list[tuple[str, str]]:
        return [(a, b) for a, b, label in self.pairs if label == "positive"]

    @property
    def negatives(self) -> list[tuple[str, str]]:
        return [(a, b) for a, b, label in self.pairs if label == "negative"]


def write_pair_set(path: str | Path, pair_set: LabeledPairSet, force: bool = False) -> None:
    p = Path(path)
    if p.exists() and not force:
        raise FileExistsError(f"{p} exists; pass force=True to overwrite")
    with open(p, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_PAIR_HEADER)
        writer.writerows(pair_set.pairs)


def read_pair_set(path: str | Path, provenance: str = "synthetic") -> LabeledPairSet:
    p = Path(path)
    try:
        fh = open(p, newline="")
    except OSError as exc:
        raise ParseError(f"cannot read pair set {p}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != _PAIR_HEADER:
            raise ParseError(f"{p}: unexpected header {header!r}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 3:
                raise ParseError(f"{p}:{lineno}: expected 3 fields, got {len(row)}")
            rows.append((row[0], row[1], row[2]))
    try:
        return LabeledPairSet(pairs=tuple(rows), provenance=provenance)
    except ValueError as exc:
        raise ParseError(f"{p}: {exc}") from exc
