"""Existence thresholds and Chern-class obstructions for maps into C^N.

Two query kinds are supported.  For a totally real immersion ``M^n -> C^N``
a complement ``Q`` of rank ``N - n`` must exist with ``c(Q) = c(C(x)TM)^-1``;
for an independent map a kernel ``B`` of rank ``n - N`` must exist with
``c(B) = c(C(x)TM)``.  Vanishing of Chern classes above the rank turns the
top nonzero degree of those classes into a rank lower bound.

Existence comes from jet transversality: the bad 1-jets form a determinantal
locus whose codimension must exceed ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .catalog import ManifoldDescriptor, chern_complexified
from .errors import UnsupportedQuery
from .ring import invert_unit, top_nonzero_degree


class QueryKind(enum.Enum):
    TOTALLY_REAL = "tri"
    INDEPENDENT = "indep"

    @classmethod
    def parse(cls, text: str) -> QueryKind:
        aliases = {"tri": cls.TOTALLY_REAL, "totallyreal": cls.TOTALLY_REAL, "totally_real": cls.TOTALLY_REAL,
                   "indep": cls.INDEPENDENT, "independent": cls.INDEPENDENT}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown query kind {text!r} (expected tri or indep)") from None


@dataclass(frozen=True)
class NRange:
    """Inclusive integer range; ``hi=None`` means unbounded above."""

    lo: int
    hi: Optional[int]

    @property
    def empty(self) -> bool:
        return self.hi is not None and self.lo > self.hi

    def __contains__(self, n: int) -> bool:
        return not self.empty and n >= self.lo and (self.hi is None or n <= self.hi)

    def to_json(self):
        if self.empty:
            return None
        return {"min": self.lo, "max": self.hi}

    def __str__(self):
        if self.empty:
            return "none"
        if self.hi is None:
            return f"N >= {self.lo}"
        if self.lo == self.hi:
            return f"N = {self.lo}"
        if self.lo <= 1:
            return f"N <= {self.hi}"
        return f"{self.lo} <= N <= {self.hi}"


@dataclass(frozen=True)
class ObstructionReport:
    query_kind: QueryKind
    manifold: str
    n: int
    impossible: NRange
    impossible_reason: str
    exists: NRange
    exists_reason: str
    unknown: NRange
    witness: Optional[str] = None
    witness_top_degree: Optional[int] = None
    trace: tuple[str, ...] = field(default_factory=tuple)

    def verdict(self, N: int) -> str:
        if N in self.impossible:
            return "impossible"
        if N in self.exists:
            return "exists"
        return "unknown"


def existence_threshold(n: int, kind: QueryKind) -> int:
    if kind is QueryKind.TOTALLY_REAL:
        if n < 2:
            raise UnsupportedQuery("totally real existence threshold is undefined for n < 2")
        return 3 * n // 2
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return (n + 1) // 2


def determinantal_codim(rows: int, cols: int, rank: int) -> int:
    """Codimension of the matrices of rank <= ``rank`` among ``rows x cols`` ones."""
    if rank >= min(rows, cols):
        return 0
    return (rows - rank) * (cols - rank)


@dataclass(frozen=True)
class TransversalityCheck:
    applies: bool
    dim_m: int
    codim_sigma: int


def transversality_check(n: int, N: int, kind: QueryKind) -> TransversalityCheck:
    """Does the bad-jet locus have codimension above ``n``?

    Totally real: the 1-jet ``A`` is a complex-linear map ``C^n -> C^N``
    after extending scalars, and ``rank(A, JA) < 2n`` is the complex
    rank-``(n-1)`` locus of ``N x n`` matrices; real codimension is twice
    the complex one.  Independent: ``N`` complex differentials of ``n``
    variables, bad when the ``N x n`` complex matrix has rank ``< N``.
    """
    if n < 1 or N < 1:
        raise ValueError("n and N must be >= 1")
    if kind is QueryKind.TOTALLY_REAL:
        codim = 2 * determinantal_codim(N, n, n - 1)
    else:
        codim = 2 * determinantal_codim(N, n, N - 1)
    return TransversalityCheck(n < codim, n, codim)


def min_complement_rank(m: ManifoldDescriptor) -> int:
    top = top_nonzero_degree(invert_unit(chern_complexified(m)))
    return top // 2


def min_kernel_rank(m: ManifoldDescriptor) -> int:
    top = top_nonzero_degree(chern_complexified(m))
    return top // 2


def obstruction_report(m: ManifoldDescriptor, kind: QueryKind) -> ObstructionReport:
    from .dim4 import classify4

    n = m.dimension
    trace: list[str] = []
    witness = top = None
    rank_bound = None
    if m.has_integral_data:
        c = chern_complexified(m)
        cls = invert_unit(c) if kind is QueryKind.TOTALLY_REAL else c
        witness = str(cls)
        top = top_nonzero_degree(cls)
        rank_bound = top // 2
        label = "c(Q) = c(C(x)TM)^-1" if kind is QueryKind.TOTALLY_REAL else "c(B) = c(C(x)TM)"
        trace.append(f"{label} = {witness}; top nonzero degree {top}, so rank >= {rank_bound}")
    elif n != 4:
        raise UnsupportedQuery(
            f"no decision route for {m.canonical_name}: integral Chern data unavailable and dimension {n} != 4")

    dim4 = classify4(m) if n == 4 else None
    if dim4 is not None:
        trace.extend(f"classify4: {line}" for line in dim4.trace)

    if kind is QueryKind.TOTALLY_REAL:
        imp_hi, imp_reason = n - 1, "dimension bound: complement rank N - n >= 0"
        if rank_bound:
            imp_hi, imp_reason = n + rank_bound - 1, f"Chern obstruction: complement rank >= {rank_bound}"
        if n >= 2:
            ex_lo, ex_reason = existence_threshold(n, kind), "transversality threshold N >= [3n/2]"
        else:
            ex_lo, ex_reason = None, "threshold undefined for n = 1"
            trace.append("totally real threshold undefined for n = 1; upper range left unknown")
        if dim4 is not None:
            c1, c2 = dim4.value(1), dim4.value(2)
            if c2 is True and (ex_lo is None or ex_lo > 4):
                ex_lo, ex_reason = 4, "dim 4: totally real immersion into C^4 (condition 2)"
            elif c1 is True and (ex_lo is None or ex_lo > 5):
                ex_lo, ex_reason = 5, "dim 4: totally real immersion into C^5 (condition 1)"
            if c1 is False and imp_hi < 5:
                imp_hi, imp_reason = 5, "dim 4: no totally real immersion into C^5 (condition 1)"
            elif c2 is False and imp_hi < 4:
                imp_hi, imp_reason = 4, "dim 4: no totally real immersion into C^4 (condition 2)"
        impossible = NRange(1, imp_hi)
        exists = NRange(ex_lo, None) if ex_lo is not None else NRange(1, 0)
        unknown = NRange(imp_hi + 1, ex_lo - 1 if ex_lo is not None else None)
    else:
        imp_lo, imp_reason = n + 1, "dimension bound: kernel rank n - N >= 0"
        if rank_bound:
            imp_lo, imp_reason = n - rank_bound + 1, f"Chern obstruction: kernel rank >= {rank_bound}"
        ex_hi, ex_reason = existence_threshold(n, kind), "transversality threshold N <= [(n+1)/2]"
        if dim4 is not None:
            c3, c4 = dim4.value(3), dim4.value(4)
            if c4 is True and ex_hi < 4:
                ex_hi, ex_reason = 4, "dim 4: independent map into C^4 (condition 4)"
            elif c3 is True and ex_hi < 3:
                ex_hi, ex_reason = 3, "dim 4: independent map into C^3 (condition 3)"
            if c3 is False and imp_lo > 3:
                imp_lo, imp_reason = 3, "dim 4: no independent map into C^3 (condition 3)"
            elif c4 is False and imp_lo > 4:
                imp_lo, imp_reason = 4, "dim 4: no independent map into C^4 (condition 4)"
        impossible = NRange(imp_lo, None)
        exists = NRange(1, ex_hi)
        unknown = NRange(ex_hi + 1, imp_lo - 1)

    if not impossible.empty and not exists.empty:
        overlap = (impossible.hi is None or exists.lo <= impossible.hi) and \
                  (exists.hi is None or impossible.lo <= exists.hi)
        if overlap:
            raise AssertionError(f"contradictory report for {m.canonical_name}: {impossible} vs {exists}")
    trace.append(f"impossible: {impossible} ({imp_reason})")
    trace.append(f"exists: {exists} ({ex_reason})")
    trace.append(f"unknown: {unknown}")
    return ObstructionReport(
        query_kind=kind,
        manifold=m.canonical_name,
        n=n,
        impossible=impossible,
        impossible_reason=imp_reason,
        exists=exists,
        exists_reason=ex_reason,
        unknown=unknown,
        witness=witness,
        witness_top_degree=top,
        trace=tuple(trace),
    )
