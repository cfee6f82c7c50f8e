"""Integer lamination coordinates on the punctured disk and growth rates.

A lamination on the disk with m punctures is encoded by 2m-4 integers,
grouped as pairs (a_i, b_i) for i = 1..m-2 attached to the interior
punctures.  Braid generators act by exact piecewise-linear maps touching
only the pairs i-1 and i; the rules were derived from the curve model
(cyclic free-group words under the Artin action) by exact fitting against
intersection-number extraction and hold as identities on the whole lattice,
not just on vectors realized by curves.

The chart convention: the curve enclosing punctures j and j+1 has
a_j = 1, b_j = 0 (when j <= m-2) and a_{j-1} = 0, b_{j-1} = 1 (when
j >= 2), all other entries zero.  The all-zero vector encodes no curve
and is rejected.

Growth rates: iterating a pseudo-Anosov braid multiplies coordinate norms
by its dilatation asymptotically, so the averaged log-increment of the
1-norm converges to log(lambda).  That number is estimated per seed curve
and maximized over the standard seeds; convergence is judged on trailing
windows of ten iterations.  The classification is evidence, never a
certificate.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Optional, Sequence

from .words import BraidWord, entropy_family_word


@dataclasses.dataclass(frozen=True)
class LamCoords:
    """Coordinates of an integral lamination on the m-punctured disk."""

    punctures: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.punctures < 3:
            raise ValueError("lamination coordinates need at least 3 punctures")
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != 2 * self.punctures - 4:
            raise ValueError(
                f"need {2 * self.punctures - 4} coordinates for "
                f"{self.punctures} punctures, got {len(self.coords)}"
            )
        if all(x == 0 for x in self.coords):
            raise ValueError("the zero vector does not encode a curve")

    def pair(self, i: int) -> tuple[int, int]:
        """The pair (a_i, b_i), 1-indexed."""
        return self.coords[2 * i - 2], self.coords[2 * i - 1]

    def norm(self) -> int:
        return sum(abs(x) for x in self.coords)


def seed_curves(punctures: int) -> list[LamCoords]:
    """The m-1 adjacent-pair curves; together they fill the disk."""
    m = punctures
    out = []
    for j in range(1, m):
        coords = [0] * (2 * m - 4)
        if j >= 2:
            coords[2 * (j - 1) - 1] = 1  # b_{j-1} = 1
        if j <= m - 2:
            coords[2 * j - 2] = 1        # a_j = 1
        out.append(LamCoords(m, tuple(coords)))
    return out


def _act_letter(m: int, c: list[int], letter: int) -> None:
    """Apply one generator in place; rightmost-first composition is handled
    by the caller.  Pairs are (a, b) = (c[2i-2], c[2i-1])."""
    k = abs(letter)
    last = m - 2
    if letter > 0:
        if k == 1:
            a, b = c[0], c[1]
            c[0] = a - b
            c[1] = a - abs(a - b)
        elif k == m - 1:
            a, b = c[2 * last - 2], c[2 * last - 1]
            c[2 * last - 2] = a - 2 * min(b, 0)
            c[2 * last - 1] = a + abs(b)
        else:
            p = 2 * (k - 1) - 2
            q = 2 * k - 2
            ap, bp, aq, bq = c[p], c[p + 1], c[q], c[q + 1]
            na = ap + max(0, min(2 * (bq - bp), aq - bp))
            nq = ap + aq - bq
            nb = min(bq, 2 * aq - bq, bp + aq - bq)
            np_ = na + nq - nb - ap + bp - aq + bq
            c[p], c[p + 1], c[q], c[q + 1] = na, np_, nq, nb
    else:
        if k == 1:
            a, b = c[0], c[1]
            c[0] = b + abs(a)
            c[1] = b - 2 * min(a, 0)
        elif k == m - 1:
            a, b = c[2 * last - 2], c[2 * last - 1]
            c[2 * last - 2] = b - abs(a - b)
            c[2 * last - 1] = b - a
        else:
            p = 2 * (k - 1) - 2
            q = 2 * k - 2
            ap, bp, aq, bq = c[p], c[p + 1], c[q], c[q + 1]
            na = min(-ap + bp + aq, -ap + 2 * bp, ap)
            np_ = -ap + bp + bq
            nq = max(ap - aq + bq, ap - 2 * bp + aq + bq, -ap + aq + bq)
            nb = na + nq - np_ - ap + bp - aq + bq
            c[p], c[p + 1], c[q], c[q + 1] = na, np_, nq, nb


def act(word: BraidWord, lam: LamCoords) -> LamCoords:
    """Image of the lamination under the braid, rightmost letter first."""
    if word.strands != lam.punctures:
        raise ValueError(
            f"strand count {word.strands} does not match "
            f"{lam.punctures} punctures"
        )
    c = list(lam.coords)
    for letter in reversed(word.letters):
        _act_letter(lam.punctures, c, letter)
    return LamCoords(lam.punctures, tuple(c))


@dataclasses.dataclass(frozen=True)
class EntropyReport:
    """Growth-rate estimate for one braid word."""

    word_length: int
    strands: int
    iterations: int
    log_lambda: float
    window_estimates: tuple[float, ...]
    converged: bool
    classification: str  # exponential | sub-exponential | inconclusive


_WINDOW = 10


def _estimate_seed(
    word: BraidWord,
    seed: LamCoords,
    max_iterations: int,
    tolerance: float,
) -> tuple[float, tuple[float, ...], bool, int]:
    """Iterate one seed; return (estimate, window means, converged, iters)."""
    m = word.strands
    c = list(seed.coords)
    letters = tuple(reversed(word.letters))
    prev_log = math.log(sum(abs(x) for x in c))
    increments: list[float] = []
    windows: list[float] = []
    converged = False
    iterations = 0
    for k in range(1, max_iterations + 1):
        for letter in letters:
            _act_letter(m, c, letter)
        iterations = k
        norm = sum(abs(x) for x in c)
        cur_log = math.log(norm)
        increments.append(cur_log - prev_log)
        prev_log = cur_log
        if k % _WINDOW == 0:
            windows.append(sum(increments[-_WINDOW:]) / _WINDOW)
            if len(windows) >= 2:
                delta = abs(windows[-1] - windows[-2])
                if delta <= tolerance * max(abs(windows[-1]), 1e-12):
                    converged = True
                    break
    estimate = windows[-1] if windows else (increments[-1] if increments else 0.0)
    return max(estimate, 0.0), tuple(windows), converged, iterations


def _classify(windows: Sequence[float], estimate: float, converged: bool) -> str:
    if converged and estimate > 1e-3 and len(windows) >= 5:
        tail = windows[-5:]
        if all(w > 1e-3 for w in tail):
            return "exponential"
    # polynomial growth: increments behave like alpha/k, so W * k is flat
    if len(windows) >= 5:
        tail = list(windows[-5:])
        mids = [(_WINDOW * (len(windows) - 5 + i) + _WINDOW / 2) for i in range(5)]
        scaled = [w * k for w, k in zip(tail, mids)]
        if all(w < 1e-3 for w in tail):
            return "sub-exponential"
        center = sum(scaled) / 5
        if center > 0 and max(abs(s - center) for s in scaled) < 0.25 * center and tail[-1] < tail[0]:
            return "sub-exponential"
    if converged and estimate <= 1e-3:
        return "sub-exponential"
    return "inconclusive" if not converged else "exponential"


def entropy_estimate(
    word: BraidWord,
    max_iterations: int = 200,
    tolerance: float = 1e-8,
    seeds: Optional[Iterable[LamCoords]] = None,
) -> EntropyReport:
    """Growth rate of lamination coordinates under iteration of the braid.

    Iterates every seed curve, averages log-norm increments over trailing
    windows, and reports the maximum over seeds.  Non-convergence is
    reported as such, never a fabricated value.
    """
    if word.strands < 3:
        raise ValueError("entropy estimation needs at least 3 strands")
    seed_list = list(seeds) if seeds is not None else seed_curves(word.strands)
    best = -1.0
    best_windows: tuple[float, ...] = ()
    best_converged = False
    all_converged = True
    total_iters = 0
    classifications = []
    for seed in seed_list:
        est, windows, conv, iters = _estimate_seed(
            word, seed, max_iterations, tolerance
        )
        total_iters += iters
        all_converged = all_converged and conv
        classifications.append(_classify(windows, est, conv))
        if est > best:
            best = est
            best_windows = windows
            best_converged = conv
    best_class = _classify(best_windows, best, best_converged)
    if best_class != "exponential" and all(c == "sub-exponential" for c in classifications):
        best_class = "sub-exponential"
    return EntropyReport(
        word_length=len(word),
        strands=word.strands,
        iterations=total_iters,
        log_lambda=max(best, 0.0),
        window_estimates=best_windows[-5:],
        converged=all_converged,
        classification=best_class,
    )


def penner_lower_bound(punctures: int) -> float:
    """log 2 / (4m - 12), the universal lower bound for pseudo-Anosov
    entropy on the m-punctured sphere, m >= 4."""
    if punctures < 4:
        raise ValueError("the lower bound needs at least 4 punctures")
    return math.log(2.0) / (4 * punctures - 12)


@dataclasses.dataclass(frozen=True)
class SweepRecord:
    """One row of a normalized-entropy sweep."""

    family: str
    n: int
    strands: int
    log_lambda: float
    normalized: float
    penner_bound: float
    converged: bool


def family_sweep(
    which: str,
    n_range: Iterable[int],
    max_iterations: int = 4000,
    tolerance: float = 1e-8,
) -> list[SweepRecord]:
    """Sweep the stabilized family, one record per index n.

    The record's normalized entropy is strands * log_lambda; every emitted
    estimate is checked against the Penner bound with 1e-6 slack.  The
    values are disk estimates; for small n the spherical entropy may
    differ, which downstream consumers must keep in mind.
    """
    records = []
    for n in n_range:
        word = entropy_family_word(which, n)
        report = entropy_estimate(word, max_iterations=max_iterations, tolerance=tolerance)
        bound = penner_lower_bound(word.strands)
        if report.converged:
            assert report.log_lambda >= bound - 1e-6, (
                f"estimate {report.log_lambda} below the universal bound {bound}"
            )
        records.append(
            SweepRecord(
                family=which,
                n=n,
                strands=word.strands,
                log_lambda=report.log_lambda,
                normalized=word.strands * report.log_lambda,
                penner_bound=bound,
                converged=report.converged,
            )
        )
    return records
