"""Truncated graded-commutative rings with exact coefficients.

A ring is presented by generators ``g`` with a cohomological degree, a
nilpotence order ``e`` (``g**e == 0``) and an optional torsion flag.  Every
class of degree above the truncation vanishes.  Elements are sparse maps from
exponent tuples to nonzero integers.

Two coefficient modes are supported:

* ``Mode.INTEGER``: arbitrary-precision integers.  A monomial that contains a
  torsion-2 generator has additive order 2, so its coefficient is stored
  reduced mod 2.
* ``Mode.MOD2``: all coefficients live in Z/2.

All generators commute.  Odd-degree generators are only accepted in
``Mode.MOD2``, where signs do not exist.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


class Mode(enum.Enum):
    INTEGER = "z"
    MOD2 = "z2"


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    nilpotence: int
    torsion: int = 0

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"bad generator name {self.name!r}")
        if self.degree < 1:
            raise ValueError(f"generator {self.name}: degree must be >= 1")
        if self.nilpotence < 1:
            raise ValueError(f"generator {self.name}: nilpotence must be >= 1")
        if self.torsion not in (0, 2):
            raise ValueError(f"generator {self.name}: torsion must be 0 or 2")


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple[Generator, ...]
    truncation: int
    mode: Mode

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate generator name(s): {', '.join(dup)}")
        if self.truncation < 0:
            raise ValueError("truncation must be non-negative")
        if self.mode is Mode.INTEGER:
            odd = [g.name for g in self.generators if g.degree % 2]
            if odd:
                raise ValueError(f"odd-degree generators need Mod2 mode: {', '.join(odd)}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise KeyError(name)

    def degree_of(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def admits(self, mono: Monomial) -> bool:
        """True if ``mono`` is a nonzero monomial of this ring."""
        if len(mono) != self.ngens:
            return False
        for e, g in zip(mono, self.generators):
            if e < 0 or e >= g.nilpotence:
                return False
        return self.degree_of(mono) <= self.truncation

    def is_torsion(self, mono: Monomial) -> bool:
        return any(e and g.torsion == 2 for e, g in zip(mono, self.generators))

    def unit_monomial(self) -> Monomial:
        return (0,) * self.ngens

    def element(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()) -> GradedElement:
        return GradedElement(self, terms)

    def zero(self) -> GradedElement:
        return GradedElement(self, {})

    def one(self) -> GradedElement:
        return GradedElement(self, {self.unit_monomial(): 1})

    def constant(self, c: int) -> GradedElement:
        return GradedElement(self, {self.unit_monomial(): c})

    def gen(self, name: str) -> GradedElement:
        i = self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.ngens))
        return GradedElement(self, {mono: 1})

    def gens(self) -> tuple[GradedElement, ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomials(self, degree: int | None = None) -> list[Monomial]:
        """All admissible monomials, optionally only those of one degree."""
        out: list[Monomial] = [()]
        for g in self.generators:
            out = [m + (e,) for m in out for e in range(g.nilpotence)]
        out = [m for m in out if self.degree_of(m) <= self.truncation]
        if degree is not None:
            out = [m for m in out if self.degree_of(m) == degree]
        return sorted(out, key=self._order_key)

    def _order_key(self, mono: Monomial):
        # graded lex: by degree, then larger exponents on earlier generators first
        return (self.degree_of(mono), tuple(-e for e in mono))

    def render_monomial(self, mono: Monomial) -> str:
        parts = []
        for e, g in zip(mono, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts)


def make_presentation(gens: Iterable[Generator], truncation: int, mode: Mode) -> RingPresentation:
    return RingPresentation(tuple(gens), truncation, mode)


def _normalize(pres: RingPresentation, terms) -> dict[Monomial, int]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    out: dict[Monomial, int] = {}
    for mono, c in items:
        mono = tuple(mono)
        if not pres.admits(mono):
            continue
        out[mono] = out.get(mono, 0) + c
    mod2 = pres.mode is Mode.MOD2
    result = {}
    for mono, c in out.items():
        if mod2 or pres.is_torsion(mono):
            c %= 2
        if c:
            result[mono] = c
    return result


class GradedElement:
    """An immutable element of a :class:`RingPresentation`."""

    __slots__ = ("presentation", "terms", "_hash")

    def __init__(self, presentation: RingPresentation, terms=()):
        self.presentation = presentation
        self.terms: dict[Monomial, int] = _normalize(presentation, terms)
        self._hash = None

    def _coerce(self, other) -> GradedElement:
        if isinstance(other, GradedElement):
            if other.presentation != self.presentation:
                raise ValueError("presentation mismatch")
            return other
        if isinstance(other, int):
            return self.presentation.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement(self.presentation, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.presentation.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.presentation.constant(other)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.presentation, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GradedElement({self})"

    def __str__(self):
        return render(self)

    def constant_term(self) -> int:
        return self.terms.get(self.presentation.unit_monomial(), 0)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def is_homogeneous(self, degree: int) -> bool:
        return all(self.presentation.degree_of(m) == degree for m in self.terms)

    def component(self, d: int) -> GradedElement:
        return component(self, d)

    def inverse(self) -> GradedElement:
        return invert_unit(self)


def _check_same(u: GradedElement, v: GradedElement):
    if u.presentation != v.presentation:
        raise ValueError("presentation mismatch")


def add(u: GradedElement, v: GradedElement) -> GradedElement:
    _check_same(u, v)
    terms = dict(u.terms)
    for m, c in v.terms.items():
        terms[m] = terms.get(m, 0) + c
    return GradedElement(u.presentation, terms)


def mul(u: GradedElement, v: GradedElement) -> GradedElement:
    _check_same(u, v)
    pres = u.presentation
    nilp = [g.nilpotence for g in pres.generators]
    trunc = pres.truncation
    vt = [(m, c, pres.degree_of(m)) for m, c in v.terms.items()]
    out: dict[Monomial, int] = {}
    for m1, c1 in u.terms.items():
        d1 = pres.degree_of(m1)
        for m2, c2, d2 in vt:
            if d1 + d2 > trunc:
                continue
            mono = tuple(a + b for a, b in zip(m1, m2))
            if any(e >= n for e, n in zip(mono, nilp)):
                continue
            out[mono] = out.get(mono, 0) + c1 * c2
    return GradedElement(pres, out)


def invert_unit(u: GradedElement) -> GradedElement:
    """Multiplicative inverse of an element with constant term +1 or -1.

    Writes ``u = e*(1 + n)`` with ``n`` nilpotent and sums the finite
    geometric series ``e * (1 - n + n^2 - ...)``.
    """
    pres = u.presentation
    e = u.constant_term()
    if pres.mode is Mode.MOD2:
        if e % 2 != 1:
            raise ValueError("element is not a unit: constant term is 0 mod 2")
        e = 1
    elif e not in (1, -1):
        raise ValueError(f"element is not a unit: constant term {e}")
    n = u * e - 1
    result = pres.one()
    power = pres.one()
    sign = 1
    while True:
        power = power * n
        if not power:
            break
        sign = -sign
        result = result + power * sign
    return result * e


def component(u: GradedElement, d: int) -> GradedElement:
    pres = u.presentation
    if not 0 <= d <= pres.truncation:
        raise ValueError(f"degree {d} outside 0..{pres.truncation}")
    return GradedElement(pres, {m: c for m, c in u.terms.items() if pres.degree_of(m) == d})


def top_nonzero_degree(u: GradedElement) -> int | None:
    if not u.terms:
        return None
    return max(u.presentation.degree_of(m) for m in u.terms)


def reduce_mod2(u: GradedElement, image_table: Mapping[str, GradedElement],
                target: RingPresentation | None = None) -> GradedElement:
    """Ring homomorphism from an Integer-mode ring into a Mod2 ring.

    ``image_table`` maps every generator name of ``u``'s presentation to a
    homogeneous Mod2 element of the same degree.  ``target`` is only required
    when the source has no generators.
    """
    src = u.presentation
    if src.mode is not Mode.INTEGER:
        raise ValueError("reduce_mod2 expects an Integer-mode element")
    if target is not None and target.mode is not Mode.MOD2:
        raise ValueError("target must be a Mod2 presentation")
    images = []
    for g in src.generators:
        if g.name not in image_table:
            raise ValueError(f"no image for generator {g.name}")
        img = image_table[g.name]
        if img.presentation.mode is not Mode.MOD2:
            raise ValueError(f"image of {g.name} is not in a Mod2 ring")
        if target is None:
            target = img.presentation
        elif img.presentation != target:
            raise ValueError("images live in different presentations")
        if not img.is_homogeneous(g.degree):
            raise ValueError(f"image of {g.name} does not have degree {g.degree}")
        images.append(img)
    if target is None:
        raise ValueError("source ring has no generators; pass target explicitly")
    return _apply_images(u, images, target)


def _apply_images(u: GradedElement, images: list[GradedElement], target: RingPresentation) -> GradedElement:
    result = target.zero()
    powers: dict[tuple[int, int], GradedElement] = {}
    for mono, c in u.terms.items():
        if c % 2 == 0:
            continue
        term = target.one()
        for i, e in enumerate(mono):
            if e:
                if (i, e) not in powers:
                    powers[(i, e)] = images[i] ** e
                term = term * powers[(i, e)]
        result = result + term
    return result


def pair_fundamental(u: GradedElement, fundamental: Monomial) -> int:
    """Evaluate ``u`` on the fundamental class: the coefficient of the top monomial."""
    pres = u.presentation
    fundamental = tuple(fundamental)
    if len(fundamental) != pres.ngens or pres.degree_of(fundamental) != pres.truncation:
        raise ValueError("fundamental monomial must have degree equal to the truncation")
    return u.coefficient(fundamental)


def render(u: GradedElement) -> str:
    pres = u.presentation
    if not u.terms:
        return "0"
    out = []
    for mono in sorted(u.terms, key=pres._order_key):
        c = u.terms[mono]
        body = pres.render_monomial(mono)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(("+ " if c > 0 else "- ") + text)
    return " ".join(out)
