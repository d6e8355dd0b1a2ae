"""Seven-condition classification of 4-manifolds.

Conditions, in order:

1. totally real immersion into C^5
2. totally real immersion into C^4
3. independent map into C^3
4. independent map into C^4
5. C(x)TM is trivial
6. the first dual Pontryagin class vanishes
7. the first Pontryagin class vanishes

The classifier only applies proven implications.  Anything they do not
settle comes back as ``None`` (unknown) with a trace line saying so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .catalog import ManifoldDescriptor
from .errors import SemanticError

CONDITION_NAMES = (
    "totally real immersion into C^5",
    "totally real immersion into C^4",
    "independent map into C^3",
    "independent map into C^4",
    "C(x)TM trivial",
    "dual Pontryagin class p1bar vanishes",
    "Pontryagin class p1 vanishes",
)


@dataclass(frozen=True)
class TriState:
    value: Optional[bool]
    reason: str

    def render(self) -> str:
        return {True: "true", False: "false", None: "unknown"}[self.value]


@dataclass(frozen=True)
class Classify4Report:
    manifold: str
    conditions: tuple[TriState, ...]
    trace: tuple[str, ...]

    def value(self, index: int) -> Optional[bool]:
        """Value of condition ``index`` (1-based, as in the list above)."""
        return self.conditions[index - 1].value

    def to_json(self) -> list[dict]:
        return [
            {"index": i, "name": CONDITION_NAMES[i - 1], "value": c.render(), "reason": c.reason}
            for i, c in enumerate(self.conditions, start=1)
        ]


def _require_dim4(m: ManifoldDescriptor):
    if m.dimension != 4:
        raise SemanticError(f"{m.canonical_name} has dimension {m.dimension}, not 4")


def pontryagin_vanishes(m: ManifoldDescriptor) -> TriState:
    _require_dim4(m)
    if not m.closed:
        return TriState(True, "open 4-manifold: H^4(M;Z) = 0")
    if m.orientable:
        p1 = m.p1_number
        if p1 is None:
            return TriState(None, "closed orientable without integral Chern data: p1 undetermined")
        if m.is_connected_sum:
            return TriState(p1 == 0, f"p1 number adds over connected sum: <p1,[M]> = {p1}")
        return TriState(p1 == 0, f"p1 = -c2(C(x)TM), <p1,[M]> = {p1}")
    w2sq = m.sw_numbers[(2, 2)]
    return TriState(w2sq == 0, f"non-orientable: p1 reduces to w2^2 on H^4 = Z/2, <w2^2,[M]> = {w2sq}")


def dual_pontryagin_vanishes(m: ManifoldDescriptor) -> TriState:
    _require_dim4(m)
    if not m.closed:
        return TriState(True, "open 4-manifold: H^4(M;Z) = 0")
    if m.orientable:
        p = pontryagin_vanishes(m)
        if p.value is None:
            return TriState(None, "closed orientable: p1bar = 0 iff p1 = 0, and p1 is undetermined")
        return TriState(p.value, f"closed orientable: p1bar = 0 iff p1 = 0 ({p.reason})")
    dual = m.dual_sw_numbers[(2, 2)]
    return TriState(dual == 0, f"non-orientable: p1bar reduces to w2bar^2, <w2bar^2,[M]> = {dual}")


def c1_nonzero(m: ManifoldDescriptor) -> Optional[bool]:
    """Whether c1(C(x)TM) is nonzero, or None if the data cannot tell.

    For a connected sum in dimension >= 3, H^2 splits as the sum of the
    summands' H^2 and the tangent bundle restricts to each punctured summand.
    """
    if m.is_connected_sum:
        if m.dimension < 3:
            return None
        parts = (c1_nonzero(m.left), c1_nonzero(m.right))
        if True in parts:
            return True
        return False if parts == (False, False) else None
    if m.c_complexified is None:
        return None
    return bool(m.c_complexified.component(2))


def classify4(m: ManifoldDescriptor) -> Classify4Report:
    _require_dim4(m)
    trace: list[str] = []
    cond: dict[int, TriState] = {}

    cond[6] = dual_pontryagin_vanishes(m)
    trace.append(f"(6) {cond[6].render()}: {cond[6].reason}")
    cond[7] = pontryagin_vanishes(m)
    trace.append(f"(7) {cond[7].render()}: {cond[7].reason}")
    cond[1] = TriState(cond[6].value, "(1) <=> (6) for all 4-manifolds")
    cond[3] = TriState(cond[7].value, "(3) <=> (7) for all 4-manifolds")
    trace.append(f"(1) {cond[1].render()} from (6); (3) {cond[3].render()} from (7)")

    if m.orientable:
        v = cond[7].value
        if v is None:
            reason = "orientable: all seven conditions equivalent, but none decided"
        else:
            reason = "orientable: all seven conditions equivalent to (7)"
        for i in (2, 4, 5):
            cond[i] = TriState(v, reason)
        trace.append(f"(2)(4)(5) {cond[2].render()}: {reason}")
        if v is None:
            # nothing decided, so (1)(3)(6) stay aligned with (7)
            for i in (1, 3, 6):
                cond[i] = TriState(None, reason)
    else:
        value: Optional[bool] = None
        c1 = c1_nonzero(m)
        if c1 is True:
            value = False
            reason = "c1(C(x)TM) != 0, so C(x)TM is not trivial"
        elif cond[1].value is False or cond[3].value is False:
            value = False
            reason = "(2)(4)(5) imply (1) and (3), and one of those fails"
        else:
            reason = "non-orientable closed case with c1 = 0 or unknown: no rule decides (2)(4)(5)"
        for i in (2, 4, 5):
            cond[i] = TriState(value, reason)
        trace.append(f"(2)(4)(5) {TriState(value, reason).render()}: {reason}")

    report = Classify4Report(m.canonical_name, tuple(cond[i] for i in range(1, 8)), tuple(trace))
    check_report(report, m.orientable)
    return report


def check_report(report: Classify4Report, orientable: bool):
    v = report.value
    if not (v(2) == v(4) == v(5)):
        raise AssertionError("conditions (2), (4), (5) disagree")
    if v(1) != v(6) or v(3) != v(7):
        raise AssertionError("(1) != (6) or (3) != (7)")
    if v(5) is True and not all(v(i) is True for i in range(1, 8)):
        raise AssertionError("(5) holds but some condition fails")
    if orientable and len({v(i) for i in range(1, 8)}) != 1:
        raise AssertionError("orientable manifold with unequal conditions")
