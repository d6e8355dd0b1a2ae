import pytest

from totreal.dim4 import classify4, dual_pontryagin_vanishes, pontryagin_vanishes
from totreal.dsl import manifold
from totreal.errors import SemanticError

T, F, U = True, False, None


def values(expr):
    rep = classify4(manifold(expr))
    return tuple(rep.value(i) for i in range(1, 8))


@pytest.mark.parametrize("expr, expected", [("RP4", T), ("CP2", F), ("RP4 # RP2*RP2", F), ("T4", T), ("R4", T)])
def test_pontryagin_vanishes(expr, expected):
    assert pontryagin_vanishes(manifold(expr)).value is expected


@pytest.mark.parametrize("expr, expected", [("RP4", F), ("RP4 # RP2*RP2", T), ("T4", T), ("CP2", F)])
def test_dual_pontryagin_vanishes(expr, expected):
    assert dual_pontryagin_vanishes(manifold(expr)).value is expected


def test_dimension_check():
    with pytest.raises(SemanticError):
        classify4(manifold("CP1"))
    with pytest.raises(SemanticError):
        pontryagin_vanishes(manifold("S5"))


@pytest.mark.parametrize("expr, expected", [
    ("RP4", (F, F, T, F, F, F, T)),
    ("RP4 # RP2*RP2", (T, F, F, F, F, T, F)),
    ("RP2*S2", (T, F, T, F, F, T, T)),
    ("RP2*R2", (T, F, T, F, F, T, T)),
    ("T4", (T,) * 7),
    ("CP2", (F,) * 7),
    ("CP2 # CP2", (F,) * 7),
    ("S2*S2", (T,) * 7),
    ("RP3*S1", (T,) * 7),
    ("RP2*RP2", (F, F, F, F, F, F, F)),
])
def test_classify4_table(expr, expected):
    assert values(expr) == expected


def test_unknown_when_no_rule_decides():
    # orientable and closed but p1 has no integral model here
    rep = classify4(manifold("RP3*S1 # RP3*S1"))
    assert rep.value(7) is True  # p1 numbers add: 0 + 0
    rep = classify4(manifold("CP2 # RP3*S1"))
    assert [rep.value(i) for i in range(1, 8)] == [False] * 7


def test_unknown_for_nonorientable_sum_passing_both_tests():
    # both Pontryagin numbers vanish, but RP4 has no integral model for c1
    rep = classify4(manifold("RP4 # RP4"))
    assert rep.value(1) is True and rep.value(3) is True
    assert rep.value(5) is None
    assert rep.conditions[4].render() == "unknown"
    assert "no rule" in rep.conditions[4].reason


def test_c1_detected_through_connected_sum():
    assert values("RP2*S2 # S4") == values("RP2*S2")
    assert values("RP2*S2 # CP2") == (F,) * 7


def test_json_rows():
    rows = classify4(manifold("RP4")).to_json()
    assert [r["index"] for r in rows] == list(range(1, 8))
    assert rows[2]["value"] == "true" and rows[0]["value"] == "false"
    assert all(r["reason"] for r in rows)
