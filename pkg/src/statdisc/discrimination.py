"""Two-hypothesis state discrimination: exact bound and interference strategy.

The Helstrom bound is the ceiling for any physical measurement; the beam
splitter strategy measures only arm counts and decides by maximum posterior
probability.  Reports carry both numbers so the gap is always visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DensityMatrix, matrix_rank, symmetric_projector, trace_norm
from .multiport import (MultiportUnitary, OutcomeDistribution, Pattern,
                        Statistics, interfere)

PRIOR_TOL = 1e-12
REPORT_TOL = 1e-10

LABELS = ("H0", "H1")


@dataclass(frozen=True, eq=False)
class Hypothesis:
    """One arm of the binary decision problem."""

    label: str
    state: DensityMatrix
    prior: float

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise ValueError(f"label must be one of {LABELS}")
        if not 0.0 <= self.prior <= 1.0:
            raise ValueError(f"prior must lie in [0, 1], got {self.prior}")


def _check_pair(h0: Hypothesis, h1: Hypothesis) -> None:
    if h0.label == h1.label:
        raise ValueError("hypotheses must carry distinct labels")
    if h0.state.dim != h1.state.dim:
        raise ValueError("hypotheses must live on the same register")
    if abs(h0.prior + h1.prior - 1.0) > PRIOR_TOL:
        raise ValueError("priors must sum to one")


def helstrom_bound(h0: Hypothesis, h1: Hypothesis) -> float:
    """Best possible success probability over all measurements.

    Equals (1 + || p0 rho0 - p1 rho1 ||_1) / 2, computed by exact
    eigendecomposition of the weighted difference.
    """
    _check_pair(h0, h1)
    gamma = h0.prior * h0.state.matrix - h1.prior * h1.state.matrix
    return 0.5 * (1.0 + trace_norm(gamma))


def aligned_vs_mixed_bound(n: int) -> float:
    """Closed-form ceiling for aligned-direction vs maximally mixed, equal priors.

    The aligned state succeeds with certainty on its own subspace; the mixed
    state is caught with probability (d - d_s)/d, where d_s is the symmetric
    subspace dimension.  Both dimensions are read off the projector, not
    hardcoded, and the result equals 1 - (n + 1) / 2**(n + 1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    projector = symmetric_projector(n)
    d_s = matrix_rank(projector)
    d = projector.shape[0]
    return 0.5 * (1.0 + (d - d_s) / d)


def map_strategy(d0: OutcomeDistribution, d1: OutcomeDistribution,
                 priors: tuple[float, float] = (0.5, 0.5)
                 ) -> tuple[dict[Pattern, str], float]:
    """Maximum-posterior decision rule over arm-count patterns.

    Returns the per-pattern guess and the total success probability.  Ties
    go to H0, which never changes the success probability.
    """
    if d0.n_arms != d1.n_arms:
        raise ValueError("distributions must share one outcome space")
    p0, p1 = priors
    if not (0.0 <= p0 <= 1.0 and 0.0 <= p1 <= 1.0):
        raise ValueError("priors must lie in [0, 1]")
    if abs(p0 + p1 - 1.0) > PRIOR_TOL:
        raise ValueError("priors must sum to one")
    strategy: dict[Pattern, str] = {}
    success = 0.0
    for pattern in sorted(set(d0.probabilities) | set(d1.probabilities)):
        w0 = p0 * d0.probabilities.get(pattern, 0.0)
        w1 = p1 * d1.probabilities.get(pattern, 0.0)
        if w1 > w0:
            strategy[pattern] = "H1"
            success += w1
        else:
            strategy[pattern] = "H0"
            success += w0
    return strategy, success


@dataclass(frozen=True)
class DiscriminationReport:
    """Outcome of one discrimination task.

    Invariant: 1/2 <= p_bs <= p_helstrom <= 1 up to 1e-10; the arm-count
    strategy can never beat the optimal measurement.
    """

    n: int
    statistics: Statistics
    p_helstrom: float
    p_bs: float
    gap: float
    strategy: dict[Pattern, str] = field(repr=False)

    def __post_init__(self) -> None:
        if self.p_bs < 0.5 - REPORT_TOL:
            raise ValueError(f"strategy success {self.p_bs} below 1/2")
        if self.p_bs > self.p_helstrom + REPORT_TOL:
            raise ValueError(f"strategy success {self.p_bs} exceeds the "
                             f"Helstrom bound {self.p_helstrom}")
        if self.p_helstrom > 1.0 + REPORT_TOL:
            raise ValueError(f"bound {self.p_helstrom} exceeds one")


def beam_splitter_discrimination(h0: Hypothesis, h1: Hypothesis,
                                 statistics: Statistics,
                                 unitary: MultiportUnitary | None = None
                                 ) -> DiscriminationReport:
    """Run both hypotheses through the multiport and decide from arm counts."""
    _check_pair(h0, h1)
    shape = h0.state.factor_shape
    if shape != h1.state.factor_shape or any(d != 2 for d in shape):
        raise ValueError("hypotheses must be states of n qubits each")
    n = len(shape)
    dist0 = interfere(h0.state, statistics, unitary)
    dist1 = interfere(h1.state, statistics, unitary)
    strategy, p_bs = map_strategy(dist0, dist1, (h0.prior, h1.prior))
    p_h = helstrom_bound(h0, h1)
    return DiscriminationReport(n=n, statistics=statistics, p_helstrom=p_h,
                                p_bs=p_bs, gap=p_h - p_bs, strategy=strategy)
