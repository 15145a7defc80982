"""Author-level similarity built from paper-level similarity.

An author is represented by the papers they first- or last-authored in a
fixed window of calendar years ending at the focal year (solo authorship
counts as both positions).  Similarity between two authors is the mean
paper-pair similarity over the cross product of their profiles; papers
both authors wrote enter as self-pairs unless excluded.

The collaboration-prediction task labels author pairs positive when they
first co-author in the year after the focal year, and matches them with
an equal number of random non-collaborating pairs drawn from authors who
stay active in the following three years.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .errors import ParseError
from .scores import LabeledPairSet

DEFAULT_WINDOW_YEARS = 5
PROFILE_POSITIONS = ("first", "last")


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    year: int
    authors: tuple[str, ...]
    labels: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if not self.authors:
            raise ValueError(f"paper {self.paper_id}: author list is empty")


@dataclass(frozen=True, eq=False)
class AuthorCorpus:
    papers: tuple[PaperRecord, ...]
    by_id: dict[str, PaperRecord]
    author_index: dict[str, tuple[tuple[str, str], ...]]

    @classmethod
    def from_papers(cls, papers: Iterable[PaperRecord]) -> AuthorCorpus:
        papers = tuple(papers)
        by_id: dict[str, PaperRecord] = {}
        for p in papers:
            if p.paper_id in by_id:
                raise ValueError(f"duplicate paper id {p.paper_id}")
            by_id[p.paper_id] = p
        index: dict[str, list[tuple[str, str]]] = {}
        for p in papers:
            for author, position in _positions(p.authors).items():
                index.setdefault(author, []).append((p.paper_id, position))
        return cls(
            papers=papers,
            by_id=by_id,
            author_index={a: tuple(entries) for a, entries in index.items()},
        )

    def authors(self) -> list[str]:
        return sorted(self.author_index)


def _positions(authors: tuple[str, ...]) -> dict[str, str]:
    """Author -> position for one paper; ends win over middle appearances."""
    out = {a: "middle" for a in authors}
    out[authors[-1]] = "last"
    out[authors[0]] = "first"
    return out


def load_corpus(path: str | Path, delimiter: str | None = None) -> AuthorCorpus:
    """Read a paper table: paper_id, year, authors, labels (optional).

    Author and label fields hold semicolon-separated lists.  Lines starting
    with '#' and blank lines are skipped.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read corpus {p}: {exc}") from exc
    papers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if delimiter is None:
            delimiter = "\t" if "\t" in line else ","
        fields = next(csv.reader([line], delimiter=delimiter))
        if len(fields) < 3:
            raise ParseError(f"{p}:{lineno}: expected at least 3 fields, got {len(fields)}")
        try:
            year = int(fields[1])
        except ValueError:
            raise ParseError(f"{p}:{lineno}: year {fields[1]!r} is not an integer") from None
        authors = tuple(a.strip() for a in fields[2].split(";") if a.strip())
        labels = frozenset(
            l.strip() for l in (fields[3].split(";") if len(fields) > 3 else []) if l.strip()
        )
        try:
            papers.append(
                PaperRecord(paper_id=fields[0].strip(), year=year, authors=authors, labels=labels)
            )
        except ValueError as exc:
            raise ParseError(f"{p}:{lineno}: {exc}") from exc
    try:
        return AuthorCorpus.from_papers(papers)
    except ValueError as exc:
        raise ParseError(f"{p}: {exc}") from exc


@dataclass(frozen=True)
class AuthorProfile:
    author_id: str
    focal_year: int
    paper_ids: tuple[str, ...]

    @property
    def empty(self) -> bool:
        return not self.paper_ids


def select_author_papers(
    corpus: AuthorCorpus,
    author: str,
    focal_year: int,
    window_years: int = DEFAULT_WINDOW_YEARS,
    positions: tuple[str, ...] = PROFILE_POSITIONS,
) -> AuthorProfile:
    """Papers the author wrote in qualifying positions within the window.

    The window spans ``window_years`` calendar years ending at and
    including ``focal_year``.  The profile may come out empty; callers
    decide whether that disqualifies the author.
    """
    if author not in corpus.author_index:
        raise ValueError(f"unknown author {author!r}")
    if window_years < 1:
        raise ValueError("window_years must be >= 1")
    lo = focal_year - window_years + 1
    selected = sorted(
        paper_id
        for paper_id, position in corpus.author_index[author]
        if position in positions and lo <= corpus.by_id[paper_id].year <= focal_year
    )
    return AuthorProfile(author_id=author, focal_year=focal_year, paper_ids=tuple(selected))


def author_similarity(
    a: AuthorProfile,
    b: AuthorProfile,
    sim: Callable[[str, str], float],
    include_shared: bool = True,
) -> float:
    """Mean paper-pair similarity over the two profiles' cross product."""
    if a.empty or b.empty:
        who = a.author_id if a.empty else b.author_id
        raise ValueError(f"empty profile for {who!r}; cannot aggregate")
    values = [
        sim(p, q)
        for p in a.paper_ids
        for q in b.paper_ids
        if include_shared or p != q
    ]
    if not values:
        raise ValueError(
            f"profiles of {a.author_id!r} and {b.author_id!r} share all papers "
            "and shared pairs are excluded"
        )
    return float(np.mean(values))


def derive_collaborations(corpus: AuthorCorpus) -> list[tuple[str, str, int]]:
    """(author, author, year) co-authorship records implied by the corpus."""
    out = []
    for p in corpus.papers:
        distinct = sorted(set(p.authors))
        for i in range(len(distinct)):
            for j in range(i + 1, len(distinct)):
                out.append((distinct[i], distinct[j], p.year))
    return out


def load_collaborations(path: str | Path, delimiter: str | None = None) -> list[tuple[str, str, int]]:
    """Read externally supplied collaboration records: author, author, year."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read collaborations {p}: {exc}") from exc
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if delimiter is None:
            delimiter = "\t" if "\t" in line else ","
        fields = [f.strip() for f in line.split(delimiter)]
        if len(fields) != 3:
            raise ParseError(f"{p}:{lineno}: expected 3 fields, got {len(fields)}")
        try:
            out.append((fields[0], fields[1], int(fields[2])))
        except ValueError:
            raise ParseError(f"{p}:{lineno}: year {fields[2]!r} is not an integer") from None
    return out


def build_collab_pairs(
    corpus: AuthorCorpus,
    collaborations: Iterable[tuple[str, str, int]],
    focal_year: int,
    window_years: int = DEFAULT_WINDOW_YEARS,
    seed: int = 0,
    attempts_per_pair: int = 200,
) -> LabeledPairSet:
    """Label author pairs for next-year collaboration prediction.

    Positives: no co-authorship in the window ending at ``focal_year``, at
    least one in ``focal_year + 1``, both profiles non-empty.  Negatives:
    an equal number of uniformly matched pairs among authors active in the
    three years after the focal year, with no co-authorship in the window
    or in the following year.
    """
    window_lo = focal_year - window_years + 1
    collab_years: dict[tuple[str, str], set[int]] = {}
    active_after: set[str] = set()
    for a, b, year in collaborations:
        if a == b:
            continue
        key = (a, b) if a <= b else (b, a)
        collab_years.setdefault(key, set()).add(year)
        if focal_year < year <= focal_year + 3:
            active_after.add(a)
            active_after.add(b)

    profile_ok: dict[str, bool] = {}

    def has_profile(author: str) -> bool:
        if author not in profile_ok:
            profile_ok[author] = (
                author in corpus.author_index
                and not select_author_papers(corpus, author, focal_year, window_years).empty
            )
        return profile_ok[author]

    def collab_in(key: tuple[str, str], lo: int, hi: int) -> bool:
        years = collab_years.get(key, ())
        return any(lo <= y <= hi for y in years)

    positives = sorted(
        key
        for key, years in collab_years.items()
        if focal_year + 1 in years
        and not collab_in(key, window_lo, focal_year)
        and has_profile(key[0])
        and has_profile(key[1])
    )

    eligible = sorted(a for a in active_after if has_profile(a))
    rng = np.random.default_rng(seed)
    negatives: list[tuple[str, str]] = []
    taken = set(positives)
    attempts_left = attempts_per_pair * max(len(positives), 1)
    if positives and len(eligible) < 2:
        raise ValueError("fewer than 2 eligible authors; cannot match negatives")
    while len(negatives) < len(positives):
        if attempts_left <= 0:
            raise ValueError(
                f"could not draw {len(positives)} negative pairs from "
                f"{len(eligible)} eligible authors; corpus too small"
            )
        attempts_left -= 1
        i, j = rng.integers(0, len(eligible), size=2)
        if i == j:
            continue
        a, b = eligible[int(i)], eligible[int(j)]
        key = (a, b) if a <= b else (b, a)
        if key in taken:
            continue
        if collab_in(key, window_lo, focal_year + 1):
            continue
        taken.add(key)
        negatives.append(key)
    pairs = [(a, b, "positive") for a, b in positives]
    pairs += [(a, b, "negative") for a, b in negatives]
    return LabeledPairSet(pairs=tuple(pairs), provenance="collab")
