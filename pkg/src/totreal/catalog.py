"""Catalog manifolds with their cohomology rings and characteristic classes.

Supported primitives are ``CPn``, ``RPn``, ``Sn``, ``Tn`` (torus) and ``Rn``
(Euclidean space).  Products are built from a flat list of primitive
factors, so ``(A*B)*C`` and ``A*(B*C)`` yield the same descriptor.  Connected
sums keep only characteristic numbers, which are additive.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from .errors import SemanticError, UnsupportedQuery
from .ring import (
    GradedElement,
    Generator,
    Mode,
    Monomial,
    RingPresentation,
    invert_unit,
    make_presentation,
    pair_fundamental,
    reduce_mod2,
)

FAMILIES = ("CP", "RP", "S", "T", "R")


@dataclass(frozen=True)
class _GenSpec:
    base: str
    degree: int
    nilpotence: int
    torsion: int = 0


@dataclass(frozen=True)
class _Factor:
    """Raw data of one primitive, written against local generator indices."""

    family: str
    n: int
    dimension: int
    orientable: bool
    closed: bool
    mod2_gens: tuple[_GenSpec, ...]
    # builders receive the list of local generators as ring elements
    w: Callable[[list[GradedElement]], GradedElement]
    fundamental: Optional[Monomial]
    int_gens: Optional[tuple[_GenSpec, ...]]
    c: Optional[Callable[[list[GradedElement]], GradedElement]] = None
    # image of each integral generator, as a function of the mod-2 generators
    images: tuple[Callable[[list[GradedElement]], GradedElement], ...] = ()

    @property
    def name(self) -> str:
        return f"{self.family}{self.n}"


def _is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def _factor(family: str, n: int) -> _Factor:
    if family not in FAMILIES:
        raise SemanticError(f"unknown manifold family {family!r}")
    if n < 1:
        raise SemanticError(f"{family}{n}: dimension index must be >= 1")
    if family == "CP":
        return _Factor(
            family, n, 2 * n, True, True,
            mod2_gens=(_GenSpec("a", 2, n + 1),),
            w=lambda g: (1 + g[0]) ** (n + 1),
            fundamental=(n,),
            int_gens=(_GenSpec("a", 2, n + 1),),
            c=lambda g: (1 - g[0] ** 2) ** (n + 1),
            images=(lambda m: m[0],),
        )
    if family == "RP":
        if n == 2:
            int_gens = (_GenSpec("b", 2, 2, torsion=2),)
            c = lambda g: 1 + 3 * g[0]  # noqa: E731
            images = (lambda m: m[0] ** 2,)
        elif _is_power_of_two(n + 1):
            # (1+b)^(n+1) with 2b = 0 collapses to 1 when n+1 is a power of two
            int_gens, c, images = (), None, ()
        else:
            int_gens, c, images = None, None, ()
        return _Factor(
            family, n, n, n % 2 == 1, True,
            mod2_gens=(_GenSpec("x", 1, n + 1),),
            w=lambda g: (1 + g[0]) ** (n + 1),
            fundamental=(n,),
            int_gens=int_gens, c=c, images=images,
        )
    if family == "S":
        return _Factor(
            family, n, n, True, True,
            mod2_gens=(_GenSpec("s", n, 2),),
            w=lambda g: g[0] ** 0,
            fundamental=(1,),
            int_gens=(),
        )
    if family == "T":
        return _Factor(
            family, n, n, True, True,
            mod2_gens=tuple(_GenSpec("t", 1, 2) for _ in range(n)),
            w=lambda g: g[0] ** 0,
            fundamental=(1,) * n,
            int_gens=(),
        )
    return _Factor(
        family, n, n, True, False,
        mod2_gens=(),
        w=lambda g: g[0] ** 0,
        fundamental=None,
        int_gens=(),
    )


def _assign_names(specs: list[_GenSpec]) -> list[str]:
    counts = Counter(s.base for s in specs)
    seen: Counter = Counter()
    names = []
    for s in specs:
        if counts[s.base] == 1:
            names.append(s.base)
        else:
            seen[s.base] += 1
            names.append(f"{s.base}{seen[s.base]}")
    return names


def _presentation(specs: list[_GenSpec], truncation: int, mode: Mode) -> RingPresentation:
    names = _assign_names(specs)
    return make_presentation(
        [Generator(nm, s.degree, s.nilpotence, s.torsion if mode is Mode.INTEGER else 0)
         for nm, s in zip(names, specs)],
        truncation, mode)


def _embed_gens(pres: RingPresentation, offset: int, count: int) -> list[GradedElement]:
    return [pres.gen(pres.generators[offset + i].name) for i in range(count)]


def _build(factor: _Factor, gens: list[GradedElement], pres: RingPresentation) -> GradedElement:
    if not gens:
        return pres.one()
    return factor.w(gens)


@dataclass(frozen=True)
class CharNumbers4:
    w2_sq: int
    dual_w2_sq: int
    p1_number: Optional[int] = None


@dataclass(frozen=True, eq=False)
class ManifoldDescriptor:
    kind: str  # "primitive" | "product" | "connected_sum"
    dimension: int
    orientable: bool
    closed: bool
    canonical_name: str
    factors: tuple[_Factor, ...] = ()
    left: Optional[ManifoldDescriptor] = None
    right: Optional[ManifoldDescriptor] = None
    connected: bool = True
    mod2_ring: Optional[RingPresentation] = None
    w_total: Optional[GradedElement] = None
    integral_ring: Optional[RingPresentation] = None
    c_complexified: Optional[GradedElement] = None
    image_table: dict = field(default_factory=dict)
    fundamental_mod2: Optional[Monomial] = None

    def __str__(self):
        return self.canonical_name

    @property
    def is_connected_sum(self) -> bool:
        return self.kind == "connected_sum"

    @property
    def has_integral_data(self) -> bool:
        return self.c_complexified is not None

    @cached_property
    def sw_numbers(self) -> dict[tuple[int, ...], int]:
        """Stiefel-Whitney numbers, keyed by partitions of the dimension."""
        return self._numbers(dual=False)

    @cached_property
    def dual_sw_numbers(self) -> dict[tuple[int, ...], int]:
        return self._numbers(dual=True)

    @cached_property
    def p1_number(self) -> Optional[int]:
        """Pontryagin number of a closed oriented 4-manifold, when computable."""
        if self.dimension != 4 or not self.closed or not self.orientable:
            return None
        if self.is_connected_sum:
            a, b = self.left.p1_number, self.right.p1_number
            return None if a is None or b is None else a + b
        if not self.has_integral_data:
            return None
        pres = self.integral_ring
        top = tuple(g.nilpotence - 1 for g in pres.generators)
        if pres.degree_of(top) != pres.truncation:
            # no degree-4 integral monomial at all, so c2 vanishes in top degree
            return 0
        return -pair_fundamental(self.c_complexified.component(4), top)

    def _numbers(self, dual: bool) -> dict[tuple[int, ...], int]:
        if not self.closed:
            raise UnsupportedQuery(f"{self.canonical_name} is not closed: no characteristic numbers")
        if self.is_connected_sum:
            lhs = self.left._numbers(dual)
            rhs = self.right._numbers(dual)
            return {k: (lhs[k] + rhs[k]) % 2 for k in lhs}
        total = dual_sw_total(self) if dual else sw_total(self)
        comps = [total.component(i) for i in range(self.dimension + 1)]
        out = {}
        for part in partitions(self.dimension):
            prod = self.mod2_ring.one()
            for i in part:
                prod = prod * comps[i]
                if not prod:
                    break
            out[part] = pair_fundamental(prod, self.fundamental_mod2)
        return out

    def char_numbers4(self) -> CharNumbers4:
        if self.dimension != 4 or not self.closed:
            raise UnsupportedQuery("CharNumbers4 exist only for closed 4-manifolds")
        return CharNumbers4(self.sw_numbers[(2, 2)], self.dual_sw_numbers[(2, 2)], self.p1_number)


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def _assemble(factors: tuple[_Factor, ...]) -> ManifoldDescriptor:
    dim = sum(f.dimension for f in factors)
    mod2_specs = [s for f in factors for s in f.mod2_gens]
    mod2 = _presentation(mod2_specs, dim, Mode.MOD2)

    w = mod2.one()
    mod2_offsets = []
    off = 0
    for f in factors:
        gens = _embed_gens(mod2, off, len(f.mod2_gens))
        mod2_offsets.append(gens)
        w = w * _build(f, gens, mod2)
        off += len(f.mod2_gens)

    closed = all(f.closed for f in factors)
    fundamental = None
    if closed:
        fundamental = tuple(e for f in factors for e in f.fundamental)

    integral = c = None
    images: dict[str, GradedElement] = {}
    if all(f.int_gens is not None for f in factors):
        int_specs = [s for f in factors for s in f.int_gens]
        integral = _presentation(int_specs, dim, Mode.INTEGER)
        c = integral.one()
        off = 0
        for f, m2 in zip(factors, mod2_offsets):
            gens = _embed_gens(integral, off, len(f.int_gens))
            if gens:
                c = c * f.c(gens)
                for i, img in enumerate(f.images):
                    images[integral.generators[off + i].name] = img(m2)
            off += len(f.int_gens)
        bridge = reduce_mod2(c, images, target=mod2)
        if bridge != w * w:
            raise AssertionError(f"complexification bridge fails for {_name(factors)}: {bridge} != {w * w}")

    return ManifoldDescriptor(
        kind="primitive" if len(factors) == 1 else "product",
        dimension=dim,
        orientable=all(f.orientable for f in factors),
        closed=closed,
        canonical_name=_name(factors),
        factors=factors,
        mod2_ring=mod2,
        w_total=w,
        integral_ring=integral,
        c_complexified=c,
        image_table=images,
        fundamental_mod2=fundamental,
    )


def _name(factors) -> str:
    return "*".join(f.name for f in factors)


def primitive(family: str, n: int) -> ManifoldDescriptor:
    return _assemble((_factor(family, n),))


def product(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    if a.is_connected_sum or b.is_connected_sum:
        raise SemanticError("products involving connected sums are not supported")
    return _assemble(a.factors + b.factors)


def connected_sum(a: ManifoldDescriptor, b: ManifoldDescriptor) -> ManifoldDescriptor:
    for m in (a, b):
        if not m.closed:
            raise SemanticError(f"connected sum needs closed summands; {m.canonical_name} is open")
    if a.dimension != b.dimension:
        raise SemanticError(
            f"connected sum of different dimensions: {a.canonical_name} ({a.dimension}) "
            f"and {b.canonical_name} ({b.dimension})")
    if a.dimension < 1:
        raise SemanticError("connected sum needs dimension >= 1")
    rname = b.canonical_name
    if b.is_connected_sum:
        rname = f"({rname})"
    return ManifoldDescriptor(
        kind="connected_sum",
        dimension=a.dimension,
        orientable=a.orientable and b.orientable,
        closed=True,
        canonical_name=f"{a.canonical_name} # {rname}",
        left=a,
        right=b,
    )


def _ringwise(m: ManifoldDescriptor, what: str):
    if m.is_connected_sum:
        raise UnsupportedQuery(f"{what} is not available ring-wise for the connected sum {m.canonical_name}")


def sw_total(m: ManifoldDescriptor) -> GradedElement:
    _ringwise(m, "w")
    return m.w_total


def dual_sw_total(m: ManifoldDescriptor) -> GradedElement:
    _ringwise(m, "dual w")
    return invert_unit(m.w_total)


def chern_complexified(m: ManifoldDescriptor) -> GradedElement:
    _ringwise(m, "c(C(x)TM)")
    if m.c_complexified is None:
        missing = [f.name for f in m.factors if f.int_gens is None]
        raise UnsupportedQuery(
            f"integral Chern data unavailable for {m.canonical_name} (no integral model for {', '.join(missing)})")
    return m.c_complexified
