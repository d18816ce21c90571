"""State embedding, restrictions, the sandwich map and its concurrence law."""

import json
import math
import random

import pytest

from biquat.biquaternion import BiQuat, norm_h
from biquat.entanglement import (ADMISSIBLE_P_SUPPORTS, RestrictionError,
                                 StateAmp, Variant, check_restrictions,
                                 concurrence, embed_state, entangle,
                                 entangle_map, predicted_concurrence, support)
from biquat.quaternion import Quat

INV_SQRT2 = 1.0 / math.sqrt(2.0)
I_SQRT2 = 1j * INV_SQRT2

# The eight admissible pairings used across the law tests.
CASES = (
    (Variant.V12, (1, 3)), (Variant.V12, (2, 4)),
    (Variant.V34, (1, 3)), (Variant.V34, (2, 4)),
    (Variant.V13, (1, 2)), (Variant.V13, (3, 4)),
    (Variant.V24, (1, 2)), (Variant.V24, (3, 4)),
)


def _rotor(sup, ai, aj) -> Quat:
    c = [0.0] * 4
    c[sup[0] - 1] = ai
    c[sup[1] - 1] = aj
    return Quat(*c)


def _close(p: BiQuat, q: BiQuat, tol=1e-12) -> bool:
    return all(abs(a - b) <= tol for a, b in zip(p, q))


# --- embedding and support ---------------------------------------------

def test_variants_cover_the_admissible_pairs():
    assert {v.positions for v in Variant} == {(1, 2), (3, 4), (1, 3), (2, 4)}
    assert ADMISSIBLE_P_SUPPORTS == frozenset(
        {frozenset(v.positions) for v in Variant})


def test_embed_state_positions():
    q = embed_state(StateAmp(I_SQRT2, -I_SQRT2, Variant.V12))
    assert q == BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    q = embed_state(StateAmp(0.6, 0.8j, Variant.V24))
    assert q == BiQuat(0, 0.6, 0, 0.8j)


def test_embed_state_requires_normalization():
    with pytest.raises(ValueError, match="not normalized"):
        embed_state(StateAmp(1.0, 1.0, Variant.V12))


def test_support():
    assert support(BiQuat(1, 0, 0, 0)) == frozenset({1})
    assert support(BiQuat(0.5, 0, 1e-12, 0.5j)) == frozenset({1, 4})
    assert support(BiQuat(0, 0, 0, 0)) == frozenset()


# --- concurrence ---------------------------------------------------------

def test_concurrence_values():
    assert concurrence(BiQuat(INV_SQRT2, 0, 0, INV_SQRT2)) == pytest.approx(1.0)
    assert concurrence(BiQuat(INV_SQRT2, INV_SQRT2, 0, 0)) == 0.0
    assert concurrence(BiQuat(0.5, 0.5, 0.5, 0.5)) == 0.0
    assert concurrence(BiQuat(0.5, 0.5, 0.5, -0.5)) == pytest.approx(1.0)


def test_concurrence_requires_normalization():
    with pytest.raises(ValueError, match="normalized"):
        concurrence(BiQuat(1, 1, 0, 0))


def test_concurrence_bounds():
    rng = random.Random(72)
    for _ in range(10_000):
        parts = [rng.gauss(0.0, 1.0) for _ in range(8)]
        n = math.sqrt(sum(x * x for x in parts))
        if n < 1e-3:
            continue
        q = BiQuat(*(complex(parts[k], parts[k + 4]) / n for k in range(4)))
        c = concurrence(q)
        assert -1e-12 <= c <= 1.0 + 1e-12


# --- restrictions ---------------------------------------------------------

def test_restrictions_pass_on_golden_inputs():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    report = check_restrictions(p, q)
    assert report.passed
    assert report.detail == "ok"
    assert report.p_support == frozenset({1, 3})
    assert report.q_support == frozenset({1, 2})
    assert report.concurrence_p == 0.0


def test_restriction_r2_rejects_basis_rotor():
    report = check_restrictions(Quat(0, 1, 0, 0), BiQuat(1, 0, 0, 0))
    assert not report.r2_pass
    assert not report.passed
    assert "single basis direction" in report.detail


def test_restriction_r3_rejects_full_support():
    p = Quat(0.5, 0.5, 0.5, 0.5)
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    report = check_restrictions(p, q)
    assert report.r1_pass and report.r2_pass and not report.r3_pass
    assert "need exactly 1" in report.detail


def test_restriction_r1_rejects_entangled_rotor():
    report = check_restrictions(Quat(INV_SQRT2, 0, 0, INV_SQRT2),
                                BiQuat(I_SQRT2, -I_SQRT2, 0, 0))
    assert not report.r1_pass
    assert not report.r3_pass  # {1,4} is not an admissible pair either
    assert "entangled" in report.detail


def test_restriction_r3_rejects_disjoint_support():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = embed_state(StateAmp(I_SQRT2, I_SQRT2, Variant.V24))
    report = check_restrictions(p, q)
    assert not report.r3_pass
    assert "shares 0 directions" in report.detail


def test_check_restrictions_validates_inputs():
    with pytest.raises(ValueError, match="unit quaternion"):
        check_restrictions(Quat(1, 1, 0, 0), BiQuat(1, 0, 0, 0))
    with pytest.raises(ValueError, match="normalized"):
        check_restrictions(Quat(1, 0, 0, 0), BiQuat(1, 1, 0, 0))


def test_report_serializes():
    report = check_restrictions(Quat(0, 1, 0, 0), BiQuat(1, 0, 0, 0))
    d = json.loads(json.dumps(report.to_dict()))
    assert d["passed"] is False
    assert d["p_support"] == [2]
    assert d["q_support"] == [1]


# --- the map itself ---------------------------------------------------------

def test_entangle_map_identity_rotor():
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    assert entangle_map(Quat(1, 0, 0, 0), q) == q


def test_entangle_map_basis_rotor_reflects():
    # A single-direction rotor permutes and flips coefficients but
    # cannot change any magnitude, which is why R2 exists.
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    for k in range(4):
        c = [0.0] * 4
        c[k] = 1.0
        out = entangle_map(Quat(*c), q)
        got = sorted(abs(x) for x in out)
        want = sorted(abs(x) for x in q)
        assert got == pytest.approx(want, abs=1e-12)
        assert concurrence(out) == pytest.approx(0.0, abs=1e-12)


def test_entangle_map_requires_unit_rotor():
    with pytest.raises(ValueError, match="unit quaternion"):
        entangle_map(Quat(1, 1, 0, 0), BiQuat(1, 0, 0, 0))


def test_entangle_map_is_isometry():
    rng = random.Random(73)
    for _ in range(500):
        while True:
            p = Quat(*(rng.gauss(0.0, 1.0) for _ in range(4)))
            n = math.sqrt(sum(x * x for x in p))
            if n > 1e-3:
                break
        p = Quat(*(c / n for c in p))
        w = BiQuat(*(complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                     for _ in range(4)))
        assert norm_h(entangle_map(p, w)) == pytest.approx(
            norm_h(w), rel=1e-12)


def test_golden_example_one():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    out = entangle(p, q)
    assert _close(out.result, BiQuat(0, -I_SQRT2, I_SQRT2, 0))
    assert out.concurrence_before == 0.0
    assert out.concurrence_after == pytest.approx(1.0, abs=1e-12)
    assert out.report.passed


def test_golden_example_three():
    p = Quat(0, 0, INV_SQRT2, INV_SQRT2)
    q = BiQuat(0, I_SQRT2, 0, I_SQRT2)
    out = entangle(p, q)
    assert _close(out.result, BiQuat(0, I_SQRT2, -I_SQRT2, 0))
    assert out.concurrence_after == pytest.approx(1.0, abs=1e-12)


def test_entangle_rejects_with_report():
    p = Quat(0.5, 0.5, 0.5, 0.5)
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    with pytest.raises(RestrictionError) as err:
        entangle(p, q)
    assert not err.value.report.r3_pass
    assert "rotor rejected" in str(err.value)


def test_entangle_notes_degenerate_amplitudes():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = embed_state(StateAmp(1j, 0.0, Variant.V12))
    out = entangle(p, q)
    assert "degenerate amplitudes" in out.report.detail
    assert out.concurrence_after == pytest.approx(0.0, abs=1e-12)


def test_outcome_serializes():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = BiQuat(I_SQRT2, -I_SQRT2, 0, 0)
    d = json.loads(json.dumps(entangle(p, q).to_dict()))
    assert d["result"]["im"][1] == pytest.approx(-INV_SQRT2)
    assert d["concurrence_after"] == pytest.approx(1.0)
    assert d["report"]["passed"] is True


# --- the concurrence law -----------------------------------------------------

def test_predicted_concurrence_spot():
    p = Quat(INV_SQRT2, INV_SQRT2, 0, 0)
    q = embed_state(StateAmp(I_SQRT2, I_SQRT2, Variant.V13))
    assert predicted_concurrence(p, q) == pytest.approx(1.0, abs=1e-12)
    assert concurrence(entangle_map(p, q)) == pytest.approx(1.0, abs=1e-12)


def test_predicted_concurrence_degenerate_is_zero():
    p = Quat(INV_SQRT2, 0, INV_SQRT2, 0)
    q = embed_state(StateAmp(1j, 0.0, Variant.V12))
    assert predicted_concurrence(p, q) == 0.0


def test_predicted_concurrence_rejects_like_entangle():
    with pytest.raises(RestrictionError):
        predicted_concurrence(Quat(0.5, 0.5, 0.5, 0.5),
                              BiQuat(I_SQRT2, -I_SQRT2, 0, 0))


def test_concurrence_law_all_cases():
    """C(p q p) = 4|alpha beta a_i a_j| across the eight pairings."""
    rng = random.Random(74)
    for variant, sup in CASES:
        for _ in range(50):
            while True:
                parts = [rng.uniform(-1, 1) for _ in range(4)]
                n = math.sqrt(sum(x * x for x in parts))
                if n > 1e-3:
                    break
            alpha = complex(parts[0], parts[1]) / n
            beta = complex(parts[2], parts[3]) / n
            t = rng.uniform(0.0, 2.0 * math.pi)
            p = _rotor(sup, math.cos(t), math.sin(t))
            q = embed_state(StateAmp(alpha, beta, variant))
            got = concurrence(entangle_map(p, q))
            want = predicted_concurrence(p, q)
            assert abs(got - want) <= 1e-10
            law = 4.0 * abs(alpha) * abs(beta) * abs(math.cos(t) * math.sin(t))
            assert abs(got - law) <= 1e-10
