"""Uses of the interference primitive beyond plain discrimination.

Entanglement detection compares two copies of an unknown marginal against
the aligned mixture; purification projects two copies onto the symmetric
subspace; the classical model replays the whole game with probabilities
instead of amplitudes; the scan probes whether the arm-count strategy
stays optimal as the particle number grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .core import DensityMatrix, partial_trace, symmetric_projector, tensor
from .discrimination import (DiscriminationReport, Hypothesis,
                             aligned_vs_mixed_bound,
                             beam_splitter_discrimination)
from .multiport import Statistics
from .states import aligned_mixture, maximally_mixed

# Exact enumeration and dense Fock evolution stay comfortable up to here.
MAX_EXACT_N = 8


class CapacityError(Exception):
    """Raised when a request exceeds the exact-enumeration budget."""


@dataclass(frozen=True, eq=False)
class TwoQubitPureState:
    """Pure state of one qubit pair, kept as four amplitudes."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if v.size != 4:
            raise ValueError("expected four amplitudes")
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise ValueError("amplitudes must be normalized")
        v.setflags(write=False)
        object.__setattr__(self, "amplitudes", v)

    @property
    def schmidt_lambda(self) -> float:
        """Smaller squared Schmidt coefficient, in [0, 1/2]."""
        s = np.linalg.svd(self.amplitudes.reshape(2, 2), compute_uv=False)
        return float(min(s) ** 2)

    @classmethod
    def from_schmidt(cls, lam: float) -> "TwoQubitPureState":
        if not 0.0 <= lam <= 0.5:
            raise ValueError(f"schmidt weight must lie in [0, 1/2], got {lam}")
        return cls(np.array([math.sqrt(1.0 - lam), 0.0, 0.0, math.sqrt(lam)]))

    def density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes,
                                      self.amplitudes.conj()), (2, 2))


def detect_entanglement(psi: TwoQubitPureState,
                        statistics: Statistics) -> float:
    """Success probability of telling two copies of psi's marginal apart
    from a separable pair.

    Two halves of two copies of ``psi`` interfere at a two-port.  If psi is
    a product state its halves are aligned pure states; if it is maximally
    entangled they are independently maximally mixed.  The comparison
    hypothesis is therefore the aligned mixture.
    """
    marginal = partial_trace(psi.density(), keep=(1,))
    pair = tensor(marginal, marginal)
    h0 = Hypothesis("H0", aligned_mixture(2), 0.5)
    h1 = Hypothesis("H1", pair, 0.5)
    return beam_splitter_discrimination(h0, h1, statistics).p_bs


def purify_symmetric(rho: DensityMatrix) -> tuple[DensityMatrix, float]:
    """Project two copies of a qubit onto the symmetric subspace.

    Returns the single-qubit marginal of the projected state and the
    success probability.  The Bloch direction is preserved and the Bloch
    length never decreases.
    """
    if rho.factor_shape != (2,):
        raise ValueError("purification expects a single qubit")
    proj = symmetric_projector(2)
    joint = tensor(rho, rho).matrix
    projected = proj @ joint @ proj
    success = float(np.trace(projected).real)
    # success = (3 + r^2)/4 >= 3/4 for any qubit, so this cannot fire
    if success <= 0.0:
        raise ValueError("projection annihilated the state")
    normalized = DensityMatrix(projected / success, (2, 2))
    return partial_trace(normalized, keep=(0,)), success


def _group_routings(n_arms: int, size: int, cap: int) -> list[tuple[int, ...]]:
    """All arm assignments of one same-spin group, at most ``cap`` per arm."""
    if cap == 1:
        return list(permutations(range(n_arms), size))
    routings = []
    for routing in product(range(n_arms), repeat=size):
        counts = [0] * n_arms
        ok = True
        for arm in routing:
            counts[arm] += 1
            if counts[arm] > cap:
                ok = False
                break
        if ok:
            routings.append(routing)
    return routings


def classical_pauli_success(n: int, interpretation: str = "standard") -> float:
    """Classical particles with an exclusion rule instead of amplitudes.

    Each particle carries a binary internal label and is routed uniformly
    at random, except that routings violating the exclusion rule are thrown
    away and the rest renormalized per spin assignment.  The guess is
    "aligned" exactly when all arms differ.  ``standard`` forbids two equal
    labels per arm; ``literal`` forbids three.  Probabilities are exact
    fractions from full enumeration over spin assignments and routings.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_EXACT_N:
        raise CapacityError(f"exact enumeration is limited to n <= "
                            f"{MAX_EXACT_N}; use the quantum scan or a "
                            "Monte Carlo estimate beyond that")
    if interpretation not in ("standard", "literal"):
        raise ValueError("interpretation must be 'standard' or 'literal'")
    cap = 1 if interpretation == "standard" else 2

    distinct_given_ups: dict[int, Fraction] = {}
    for ups in range(n + 1):
        group_up = _group_routings(n, ups, cap)
        group_down = _group_routings(n, n - ups, cap)
        allowed = 0
        distinct = 0
        for a in group_up:
            for b in group_down:
                allowed += 1
                if len(set(a + b)) == n:
                    distinct += 1
        distinct_given_ups[ups] = Fraction(distinct, allowed)

    # aligned hypothesis: every particle carries the same label
    p_correct_aligned = distinct_given_ups[0]
    # mixed hypothesis: labels independently uniform; correct when arms repeat
    p_correct_mixed = Fraction(0)
    for labels in product((0, 1), repeat=n):
        p_correct_mixed += (1 - distinct_given_ups[sum(labels)])
    p_correct_mixed /= 2 ** n
    return float(p_correct_aligned / 2 + p_correct_mixed / 2)


def classical_comparison(n_max: int = 6) -> list[dict]:
    """Side-by-side table of both exclusion readings against the exact bound."""
    if not 2 <= n_max <= MAX_EXACT_N:
        raise ValueError(f"n_max must lie in [2, {MAX_EXACT_N}]")
    rows = []
    for n in range(2, n_max + 1):
        standard = classical_pauli_success(n, "standard")
        literal = classical_pauli_success(n, "literal")
        bound = aligned_vs_mixed_bound(n)
        rows.append({"n": n, "standard": standard, "literal": literal,
                     "bound": bound,
                     "standard_deviation": standard - bound,
                     "literal_deviation": literal - bound})
    return rows


@dataclass(frozen=True)
class ScanRecord:
    """One particle number's worth of the optimality probe."""

    n: int
    statistics: Statistics
    p_bs: float
    p_helstrom: float
    gap: float
    pattern_count: int

    def __post_init__(self) -> None:
        if self.gap < -1e-10:
            raise ValueError(f"arm counts cannot beat the bound, gap {self.gap}")


def scan_discrimination(n_max: int, statistics: Statistics) -> list[ScanRecord]:
    """Aligned-vs-mixed discrimination for every particle number up to n_max.

    For two fermions, three fermions and two bosons the arm-count strategy
    meets the Helstrom bound exactly; beyond that the gap is recorded as
    data, not asserted, since whether interference stays optimal for larger
    registers is an open question.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > MAX_EXACT_N:
        raise CapacityError(f"exact Fock evolution is limited to n_max <= "
                            f"{MAX_EXACT_N}")
    records = []
    for n in range(1, n_max + 1):
        h0 = Hypothesis("H0", aligned_mixture(n), 0.5)
        h1 = Hypothesis("H1", maximally_mixed(n), 0.5)
        report: DiscriminationReport = beam_splitter_discrimination(
            h0, h1, statistics)
        records.append(ScanRecord(n=n, statistics=statistics,
                                  p_bs=report.p_bs,
                                  p_helstrom=report.p_helstrom,
                                  gap=report.gap,
                                  pattern_count=len(report.strategy)))
    return records
