"""Evaluation harness: AUC with bootstrap CIs, the co-classification task,
and the diagnostic statistics (block-pair mean matrix, degree correlation,
piecewise regression, histogram export).

AUC is the Mann-Whitney rank statistic: the probability that a random
positive pair outscores a random negative one, ties counting one half.
It depends on ranks only, so any strictly increasing transform of the
scores leaves it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .scores import LabeledPairSet, PairScore


def _as_finite_or_inf(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if np.any(np.isnan(arr)):
        raise ValueError(f"{name} contains NaN")
    return arr


def auc_score(pos, neg) -> float:
    """Rank-sum AUC with average-rank tie handling."""
    pos = _as_finite_or_inf(pos, "positives")
    neg = _as_finite_or_inf(neg, "negatives")
    if len(pos) == 0 or len(neg) == 0:
        raise ValueError("need at least one positive and one negative score")
    ranks = rankdata(np.concatenate([pos, neg]))
    rank_sum = ranks[: len(pos)].sum()
    return float((rank_sum - len(pos) * (len(pos) + 1) / 2.0) / (len(pos) * len(neg)))


@dataclass(frozen=True)
class AUCResult:
    auc: float
    ci_low: float
    ci_high: float
    replicates: int


def bootstrap_auc(
    pos, neg, replicates: int = 1000, seed: int = 0, alpha: float = 0.05
) -> AUCResult:
    """Percentile bootstrap CI, resampling labeled pairs with replacement.

    A resample that loses one class entirely is redrawn; each replicate
    has its own seed, so results are independent of evaluation order.
    """
    pos = _as_finite_or_inf(pos, "positives")
    neg = _as_finite_or_inf(neg, "negatives")
    point = auc_score(pos, neg)
    values = np.concatenate([pos, neg])
    is_pos = np.zeros(len(values), dtype=bool)
    is_pos[: len(pos)] = True
    n = len(values)
    stats = np.empty(replicates, dtype=np.float64)
    for rep in range(replicates):
        rng = np.random.default_rng([seed, rep])
        for _ in range(100):
            idx = rng.integers(0, n, size=n)
            take = is_pos[idx]
            if take.any() and not take.all():
                break
        else:
            raise ValueError("bootstrap resampling kept collapsing to a single class")
        stats[rep] = auc_score(values[idx][take], values[idx][~take])
    lo, hi = np.quantile(stats, [alpha / 2.0, 1.0 - alpha / 2.0])
    return AUCResult(auc=point, ci_low=float(lo), ci_high=float(hi), replicates=replicates)


def log_transform(values) -> np.ndarray:
    """Natural log of positive values; zeros map to a rank-preserving sentinel.

    The sentinel sits strictly below every finite log value so zero records
    keep their place at the bottom of the ranking instead of being dropped.
    """
    arr = np.asarray(values, dtype=np.float64)
    if np.any(arr < 0):
        raise ValueError("log transform requires nonnegative values")
    out = np.empty_like(arr)
    positive = arr > 0
    out[positive] = np.log(arr[positive])
    if np.any(~positive):
        finite = out[positive][np.isfinite(out[positive])]
        sentinel = float(finite.min()) - 1.0 if finite.size else -745.0
        out[~positive] = sentinel
    return out


def align_scores(pair_set: LabeledPairSet, scores) -> tuple[np.ndarray, np.ndarray]:
    """Match score rows to a labeled pair set, order-insensitively per pair.

    Returns (values, is_positive) aligned to ``pair_set.pairs``.  Every
    labeled pair must be covered by exactly one score row (either node
    order); extras are ignored.
    """
    table: dict[tuple[str, str], PairScore] = {}
    for s in scores:
        table[(s.source_id, s.target_id)] = s
    values = np.empty(len(pair_set.pairs), dtype=np.float64)
    is_pos = np.empty(len(pair_set.pairs), dtype=bool)
    for row, (a, b, label) in enumerate(pair_set.pairs):
        rec = table.get((a, b)) or table.get((b, a))
        if rec is None:
            raise ValueError(f"no score row for labeled pair ({a}, {b})")
        values[row] = rec.value
        is_pos[row] = label == "positive"
    return values, is_pos


def coclass_pairs(labels: dict[str, str], sample_size: int, seed: int = 0) -> LabeledPairSet:
    """Balanced same-discipline vs cross-discipline pair sample.

    Positives are stratified so every discipline contributes the same
    number of same-discipline pairs; negatives cycle round-robin through
    discipline pairs.  The effective size is the largest balanced count
    not exceeding ``sample_size``.
    """
    by_tag: dict[str, list[str]] = {}
    for entity, tag in labels.items():
        by_tag.setdefault(tag, []).append(entity)
    tags = sorted(by_tag)
    if len(tags) < 2:
        raise ValueError(f"need at least 2 disciplines, got {len(tags)}")
    for tag in tags:
        by_tag[tag].sort()
        if len(by_tag[tag]) < 2:
            raise ValueError(f"discipline {tag!r} has fewer than 2 members")
    quota = (sample_size // 2) // len(tags)
    if quota < 1:
        raise ValueError(
            f"sample_size {sample_size} too small for {len(tags)} disciplines"
        )
    rng = np.random.default_rng(seed)
    pairs: list[tuple[str, str, str]] = []
    seen: set[tuple[str, str]] = set()
    for tag in tags:
        members = by_tag[tag]
        distinct_pairs = len(members) * (len(members) - 1) // 2
        if quota > distinct_pairs:
            raise ValueError(
                f"discipline {tag!r} has only {distinct_pairs} distinct pairs, need {quota}"
            )
        got = 0
        attempts = 0
        while got < quota:
            attempts += 1
            if attempts > 200 * quota + 1000:
                raise ValueError(f"could not sample {quota} pairs within {tag!r}")
            i, j = rng.integers(0, len(members), size=2)
            if i == j:
                continue
            a, b = members[int(i)], members[int(j)]
            key = (a, b) if a <= b else (b, a)
            if key in seen:
                continue
            seen.add(key)
            pairs.append((key[0], key[1], "positive"))
            got += 1
    n_pos = quota * len(tags)
    tag_pairs = [(ta, tb) for i, ta in enumerate(tags) for tb in tags[i + 1 :]]
    slot = 0
    attempts = 0
    negatives = 0
    while negatives < n_pos:
        attempts += 1
        if attempts > 200 * n_pos + 1000:
            raise ValueError("could not sample enough cross-discipline pairs")
        ta, tb = tag_pairs[slot % len(tag_pairs)]
        a = by_tag[ta][int(rng.integers(0, len(by_tag[ta])))]
        b = by_tag[tb][int(rng.integers(0, len(by_tag[tb])))]
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            continue
        seen.add(key)
        pairs.append((key[0], key[1], "negative"))
        negatives += 1
        slot += 1
    return LabeledPairSet(pairs=tuple(pairs), provenance="coclass")


def discipline_matrix(pair_tags, values, ordering) -> np.ndarray:
    """Mean similarity per discipline pair, as a symmetric matrix.

    ``pair_tags`` holds (tag_a, tag_b) per scored pair; ``ordering`` fixes
    the row/column order and must cover every tag that occurs.
    """
    values = _as_finite_or_inf(values, "values")
    if len(pair_tags) != len(values):
        raise ValueError("pair_tags and values must have equal length")
    index = {tag: i for i, tag in enumerate(ordering)}
    d = len(ordering)
    sums = np.zeros((d, d), dtype=np.float64)
    counts = np.zeros((d, d), dtype=np.int64)
    for (ta, tb), v in zip(pair_tags, values):
        if ta not in index or tb not in index:
            missing = ta if ta not in index else tb
            raise ValueError(f"tag {missing!r} not in ordering")
        ia, ib = index[ta], index[tb]
        sums[ia, ib] += v
        counts[ia, ib] += 1
        if ia != ib:
            sums[ib, ia] += v
            counts[ib, ia] += 1
    if np.any(counts == 0):
        ia, ib = np.argwhere(counts == 0)[0]
        raise ValueError(f"no sampled pairs for cell ({ordering[ia]}, {ordering[ib]})")
    return sums / counts


def degree_correlation(values, target_degrees) -> float:
    """Pearson correlation between pair scores and target-node degree."""
    values = _as_finite_or_inf(values, "values")
    degrees = np.asarray(target_degrees, dtype=np.float64)
    if len(values) != len(degrees):
        raise ValueError("values and target_degrees must have equal length")
    if len(values) < 3:
        raise ValueError("need at least 3 pairs")
    if np.ptp(values) == 0.0 or np.ptp(degrees) == 0.0:
        raise ValueError("zero variance; correlation undefined")
    vc = values - values.mean()
    dc = degrees - degrees.mean()
    return float((vc * dc).sum() / np.sqrt((vc**2).sum() * (dc**2).sum()))


@dataclass(frozen=True)
class PiecewiseFit:
    slope_low: float
    intercept_low: float
    slope_high: float
    intercept_high: float
    split_value: float


def piecewise_fit(x, y) -> PiecewiseFit:
    """Two independent OLS lines, split at the median of ``x``."""
    x = _as_finite_or_inf(x, "x")
    y = _as_finite_or_inf(y, "y")
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    split = float(np.median(x))
    halves = []
    for mask in (x <= split, x > split):
        xs, ys = x[mask], y[mask]
        if len(xs) < 2:
            raise ValueError(f"fewer than 2 points on one side of the median {split}")
        if np.ptp(xs) == 0.0:
            raise ValueError("constant x on one side of the median; fit is degenerate")
        slope, intercept = np.polyfit(xs, ys, 1)
        halves.append((float(slope), float(intercept)))
    return PiecewiseFit(
        slope_low=halves[0][0],
        intercept_low=halves[0][1],
        slope_high=halves[1][0],
        intercept_high=halves[1][1],
        split_value=split,
    )


def histogram_bins(values, bins: int = 50) -> tuple[np.ndarray, np.ndarray]:
    """Binned distribution for plotting elsewhere: (counts, bin edges)."""
    values = np.asarray(values, dtype=np.float64)
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        raise ValueError("no finite values to bin")
    counts, edges = np.histogram(finite, bins=bins)
    return counts, edges
