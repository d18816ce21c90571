"""Mechanical verification of the entangling-map law.

Two independent routes are compared for each of the eight admissible
(state variant, rotor support) pairings:

(a) an exact polynomial-identity check - the structure-constant oracle
    evaluates p q p at deterministic rational points and must equal the
    tabulated closed form coordinate by coordinate, with no rounding
    anywhere; and
(b) a floating-point check of the concurrence law C = 4|alpha beta
    a_i a_j| at seeded random normalized points, run through the primary
    (float) implementation.

The tabulated reference forms carry two known misprints, kept as data
rather than silently fixed: case 2 lists five entries with a repeated
a2 factor, and case 6's k-component sign is flipped (the same flip shows
up in golden example 2).  Bare alpha/beta entries in the reference table
implicitly assume a_i^2 + a_j^2 = 1; the evaluated forms restore that
factor so each identity is polynomial and holds off the unit circle too.

Reports are deterministic: a fixed seed yields byte-identical text and
dict renderings.  Case checks are independent (each draws from its own
generator keyed by seed and case id), so they could run in any order or
in parallel and merge by case id without changing the report.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .biquaternion import BiQuat
from .entanglement import StateAmp, Variant, concurrence, embed_state, entangle_map
from .exact import ExactBiQuat, ExactScalar, oracle_mul, random_rational
from .quaternion import Quat

__all__ = [
    "EntangleCase",
    "CaseResult",
    "TheoremReport",
    "ExampleResult",
    "ExamplesReport",
    "ENTANGLE_CASES",
    "GOLDEN_EXAMPLES",
    "IDENTITY_POINTS",
    "LAW_TOL",
    "closed_form_product",
    "verify_theorem",
    "verify_examples",
]

# Deterministic rational points per identity check.  The coordinates of
# p q p are polynomials of total degree <= 3 in the six real symbols, so
# this many spread points is far beyond what distinguishing any two of
# the candidate forms requires (the contract asks for at least 9).
IDENTITY_POINTS = 20

LAW_TOL = 1e-10

_TABLE_NOTE = ("bare alpha/beta entries in the reference forms carry an "
               "implicit (a_i^2 + a_j^2) factor, restored here so each "
               "identity is polynomial")


@dataclass(frozen=True)
class EntangleCase:
    """One admissible pairing and its closed-form expansion."""

    case_id: int
    variant: Variant
    p_support: tuple[int, int]
    closed_form: str
    predicted_c: str
    stated_form: str | None = None
    note: str = ""


def _case(case_id, variant, sup, form, pred, stated=None, note=""):
    return EntangleCase(case_id, variant, sup, form, pred, stated, note)


ENTANGLE_CASES: tuple[EntangleCase, ...] = (
    _case(1, Variant.V12, (1, 3),
          "(alpha*(a1^2-a3^2), beta*(a1^2+a3^2), 2*alpha*a1*a3, 0)",
          "4*|alpha*beta*a1*a3|"),
    _case(2, Variant.V12, (2, 4),
          "(-alpha*(a2^2+a4^2), -beta*(a2^2-a4^2), 0, -2*beta*a2*a4)",
          "4*|alpha*beta*a2*a4|",
          stated="(-alpha, -beta*(a2^2-a4^2), 0, -2*beta*a2*a2, 0)",
          note="reference form lists five entries and repeats the a2 "
               "factor; read as the four-entry form with -2*beta*a2*a4, "
               "confirmed exactly by the oracle"),
    _case(3, Variant.V34, (1, 3),
          "(-2*alpha*a1*a3, 0, alpha*(a1^2-a3^2), beta*(a1^2+a3^2))",
          "4*|alpha*beta*a1*a3|"),
    _case(4, Variant.V34, (2, 4),
          "(0, -2*beta*a2*a4, alpha*(a2^2+a4^2), beta*(a2^2-a4^2))",
          "4*|alpha*beta*a2*a4|"),
    _case(5, Variant.V13, (1, 2),
          "(alpha*(a1^2-a2^2), 2*alpha*a1*a2, beta*(a1^2+a2^2), 0)",
          "4*|alpha*beta*a1*a2|"),
    _case(6, Variant.V13, (3, 4),
          "(-alpha*(a3^2+a4^2), 0, beta*(a4^2-a3^2), -2*beta*a3*a4)",
          "4*|alpha*beta*a3*a4|",
          stated="(-alpha, 0, -beta*a3^2+beta*a4^2, 2*beta*a3*a4)",
          note="reference k-component sign (+2*beta*a3*a4) flips to "
               "-2*beta*a3*a4 under exact recomputation - the same flip "
               "flagged in golden example 2; the concurrence is "
               "unaffected"),
    _case(7, Variant.V24, (1, 2),
          "(-2*alpha*a1*a2, alpha*(a1^2-a2^2), 0, beta*(a1^2+a2^2))",
          "4*|alpha*beta*a1*a2|"),
    _case(8, Variant.V24, (3, 4),
          "(0, alpha*(a3^2+a4^2), -2*beta*a3*a4, beta*(a3^2-a4^2))",
          "4*|alpha*beta*a3*a4|"),
)

_ZERO = ExactScalar.of(0)


def closed_form_product(case_id: int, alpha: ExactScalar, beta: ExactScalar,
                        a: tuple) -> ExactBiQuat:
    """Evaluate the tabulated expansion of p q p for one case.

    Purely polynomial in the six rational symbols; the rotor pair ``a``
    need not be normalized.
    """
    ai, aj = (Fraction(x) for x in a)
    n2 = ai * ai + aj * aj
    d2 = ai * ai - aj * aj
    x2 = 2 * ai * aj
    forms = {
        1: (alpha * d2, beta * n2, alpha * x2, _ZERO),
        2: (-(alpha * n2), -(beta * d2), _ZERO, -(beta * x2)),
        3: (-(alpha * x2), _ZERO, alpha * d2, beta * n2),
        4: (_ZERO, -(beta * x2), alpha * n2, beta * d2),
        5: (alpha * d2, alpha * x2, beta * n2, _ZERO),
        6: (-(alpha * n2), _ZERO, -(beta * d2), -(beta * x2)),
        7: (-(alpha * x2), alpha * d2, _ZERO, beta * n2),
        8: (_ZERO, alpha * n2, -(beta * x2), beta * d2),
    }
    try:
        return ExactBiQuat.from_scalars(forms[case_id])
    except KeyError:
        raise ValueError(f"invalid case id: {case_id}") from None


def _exact_state(variant: Variant, alpha: ExactScalar,
                 beta: ExactScalar) -> ExactBiQuat:
    c = [_ZERO] * 4
    i, j = variant.positions
    c[i - 1] = alpha
    c[j - 1] = beta
    return ExactBiQuat.from_scalars(c)


def _exact_rotor(sup: tuple[int, int], ai: Fraction,
                 aj: Fraction) -> ExactBiQuat:
    c = [_ZERO] * 4
    c[sup[0] - 1] = ExactScalar.of(ai)
    c[sup[1] - 1] = ExactScalar.of(aj)
    return ExactBiQuat.from_scalars(c)


def _float_rotor(sup: tuple[int, int], ai: float, aj: float) -> Quat:
    c = [0.0] * 4
    c[sup[0] - 1] = ai
    c[sup[1] - 1] = aj
    return Quat(*c)


def _identity_points() -> list:
    # Fixed internal seed: the identity check is the same in every run
    # regardless of the caller's seed, which only drives the float law.
    rng = random.Random("identity-points-v1")
    pts = []
    for _ in range(IDENTITY_POINTS):
        alpha = ExactScalar(random_rational(rng), random_rational(rng))
        beta = ExactScalar(random_rational(rng), random_rational(rng))
        pts.append((alpha, beta, random_rational(rng), random_rational(rng)))
    return pts


@dataclass(frozen=True)
class CaseResult:
    case_id: int
    variant: str
    p_support: tuple[int, int]
    closed_form: str
    predicted_c: str
    identity_pass: bool
    identity_points: int
    identity_failures: tuple[str, ...]
    law_pass: bool
    law_samples: int
    law_max_error: float
    stated_form: str | None
    note: str

    @property
    def passed(self) -> bool:
        return self.identity_pass and self.law_pass

    def to_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "q_variant": self.variant,
            "p_support": list(self.p_support),
            "closed_form": self.closed_form,
            "predicted_concurrence": self.predicted_c,
            "stated_form": self.stated_form,
            "note": self.note,
            "identity": {
                "pass": self.identity_pass,
                "points": self.identity_points,
                "failures": list(self.identity_failures),
            },
            "law": {
                "pass": self.law_pass,
                "samples": self.law_samples,
                "max_error": self.law_max_error,
                "tolerance": LAW_TOL,
            },
            "pass": self.passed,
        }


@dataclass(frozen=True)
class TheoremReport:
    samples: int
    seed: int
    identity_points: int
    cases: tuple[CaseResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "identity_points": self.identity_points,
            "table_note": _TABLE_NOTE,
            "cases": [c.to_dict() for c in self.cases],
            "passed_cases": sum(c.passed for c in self.cases),
            "all_pass": self.all_pass,
        }

    def to_text(self) -> str:
        lines = [
            "entangling-map law verification",
            f"identity points per case: {self.identity_points} (exact "
            "rational arithmetic)",
            f"law samples per case: {self.samples}   seed: {self.seed}   "
            f"tolerance: {LAW_TOL:g}",
            f"note: {_TABLE_NOTE}",
            "",
        ]
        for c in self.cases:
            idl = ("PASS" if c.identity_pass else "FAIL")
            lwl = ("PASS" if c.law_pass else "FAIL")
            lines.append(
                f"case {c.case_id}  q={c.variant} p={{{c.p_support[0]},"
                f"{c.p_support[1]}}}  identity: {idl} "
                f"({c.identity_points - len(c.identity_failures)}/"
                f"{c.identity_points} exact)  law: {lwl} "
                f"(max err {c.law_max_error:.3e})")
            if c.note:
                lines.append(f"        note: {c.note}")
            for f in c.identity_failures:
                lines.append(f"        counterexample: {f}")
        lines.append("")
        lines.append(f"overall: {sum(c.passed for c in self.cases)}/"
                     f"{len(self.cases)} cases pass")
        return "\n".join(lines)


def verify_theorem(samples: int = 1000, seed: int = 7) -> TheoremReport:
    """Run both verification routes for all eight cases.

    Failures are recorded in the report (with exact counterexamples for
    route (a)), never raised.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    points = _identity_points()
    results = []
    for case in ENTANGLE_CASES:
        failures = []
        for k, (alpha, beta, ai, aj) in enumerate(points):
            p = _exact_rotor(case.p_support, ai, aj)
            q = _exact_state(case.variant, alpha, beta)
            got = oracle_mul(oracle_mul(p, q), p)
            want = closed_form_product(case.case_id, alpha, beta, (ai, aj))
            if got != want:
                failures.append(
                    f"point {k}: alpha={alpha} beta={beta} a=({ai},{aj}) "
                    f"oracle={got} closed-form={want}")

        rng = random.Random(f"{seed}/{case.case_id}")
        max_err = 0.0
        for _ in range(samples):
            while True:
                parts = [rng.uniform(-1.0, 1.0) for _ in range(4)]
                n = math.sqrt(sum(x * x for x in parts))
                if n > 1e-3:
                    break
            alpha_f = complex(parts[0], parts[1]) / n
            beta_f = complex(parts[2], parts[3]) / n
            t = rng.uniform(0.0, 2.0 * math.pi)
            ai_f, aj_f = math.cos(t), math.sin(t)
            q_f = embed_state(StateAmp(alpha_f, beta_f, case.variant))
            p_f = _float_rotor(case.p_support, ai_f, aj_f)
            c = concurrence(entangle_map(p_f, q_f))
            predicted = 4.0 * abs(alpha_f) * abs(beta_f) * abs(ai_f * aj_f)
            err = abs(c - predicted)
            if err > max_err:
                max_err = err

        results.append(CaseResult(
            case_id=case.case_id,
            variant=case.variant.name,
            p_support=case.p_support,
            closed_form=case.closed_form,
            predicted_c=case.predicted_c,
            identity_pass=not failures,
            identity_points=len(points),
            identity_failures=tuple(failures),
            law_pass=max_err <= LAW_TOL,
            law_samples=samples,
            law_max_error=max_err,
            stated_form=case.stated_form,
            note=case.note,
        ))
    return TheoremReport(samples, seed, len(points), tuple(results))


# --- golden examples ------------------------------------------------

# Scaled by sqrt(2) per factor so everything is an exact integer:
# p = P/sqrt(2), q = Q/sqrt(2)  =>  p q p = (P Q P) / (2*sqrt(2)),
# and a stated output L/sqrt(2) matches iff P Q P = 2 L.
_I = ExactScalar.of(0, 1)
_MINUS_I = ExactScalar.of(0, -1)


@dataclass(frozen=True)
class _GoldenExample:
    example_id: int
    p_support: tuple[int, int]
    variant: Variant
    alpha: ExactScalar
    beta: ExactScalar
    stated_scaled: ExactBiQuat  # 2 L, same scaling as the recomputation
    p_text: str
    q_text: str
    stated_text: str


GOLDEN_EXAMPLES: tuple[_GoldenExample, ...] = (
    _GoldenExample(
        1, (1, 3), Variant.V12, _I, _MINUS_I,
        ExactBiQuat((0, 0, 0, 0, 0, -2, 2, 0)),
        "(1, 0, 1, 0)/sqrt(2)", "(i, -i, 0, 0)/sqrt(2)",
        "(0, -i, i, 0)/sqrt(2)"),
    _GoldenExample(
        2, (3, 4), Variant.V13, _I, _MINUS_I,
        ExactBiQuat((0, 0, 0, 0, -2, 0, 0, -2)),
        "(0, 0, 1, 1)/sqrt(2)", "(i, 0, -i, 0)/sqrt(2)",
        "(-i, 0, 0, -i)/sqrt(2)"),
    _GoldenExample(
        3, (3, 4), Variant.V24, _I, _I,
        ExactBiQuat((0, 0, 0, 0, 0, 2, -2, 0)),
        "(0, 0, 1, 1)/sqrt(2)", "(0, i, 0, i)/sqrt(2)",
        "(0, i, -i, 0)/sqrt(2)"),
)


@dataclass(frozen=True)
class ExampleResult:
    example_id: int
    p_text: str
    q_text: str
    stated_text: str
    computed: ExactBiQuat   # scaled by 2*sqrt(2), exact
    stated_scaled: ExactBiQuat
    exact_match: bool
    magnitude_match: bool
    sign_mismatch_components: tuple[int, ...]
    concurrence_one: bool
    note: str

    def to_dict(self) -> dict:
        return {
            "example_id": self.example_id,
            "p": self.p_text,
            "q": self.q_text,
            "stated": self.stated_text,
            "computed_scaled": str(self.computed),
            "stated_scaled": str(self.stated_scaled),
            "scale": "2*sqrt(2)",
            "exact_match": self.exact_match,
            "magnitude_match": self.magnitude_match,
            "sign_mismatch_components": list(self.sign_mismatch_components),
            "concurrence_one": self.concurrence_one,
            "note": self.note,
        }

    @property
    def passed(self) -> bool:
        # An exactly reproduced example passes outright; a flagged one
        # passes the audit when only signs disagree.
        return self.concurrence_one and (self.exact_match
                                         or self.magnitude_match)


@dataclass(frozen=True)
class ExamplesReport:
    examples: tuple[ExampleResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.examples)

    def to_dict(self) -> dict:
        return {
            "examples": [e.to_dict() for e in self.examples],
            "all_pass": self.all_pass,
        }

    def to_text(self) -> str:
        lines = ["golden example audit (exact arithmetic, values scaled "
                 "by 2*sqrt(2))", ""]
        for e in self.examples:
            lines.append(f"example {e.example_id}: p = {e.p_text}, "
                         f"q = {e.q_text}")
            lines.append(f"  stated   {e.stated_scaled}")
            lines.append(f"  computed {e.computed}")
            status = "exact match" if e.exact_match else (
                "magnitudes match, sign differs at component(s) "
                + ",".join(str(k) for k in e.sign_mismatch_components)
                if e.magnitude_match else "MISMATCH")
            lines.append(f"  {status}; concurrence "
                         f"{'= 1 exactly' if e.concurrence_one else 'NOT 1'}")
            if e.note:
                lines.append(f"  note: {e.note}")
        lines.append("")
        lines.append("overall: " + ("pass" if self.all_pass else "FAIL"))
        return "\n".join(lines)


def verify_examples() -> ExamplesReport:
    """Recompute the three golden examples with the exact oracle.

    Examples 1 and 3 must reproduce coordinate by coordinate.  Example
    2's recomputation differs from its stated output in the sign of the
    fourth component only; the report flags the discrepancy (magnitudes
    and concurrence still agree) instead of rewriting either side.
    """
    results = []
    for ex in GOLDEN_EXAMPLES:
        p = _exact_rotor(ex.p_support, Fraction(1), Fraction(1))
        q = _exact_state(ex.variant, ex.alpha, ex.beta)
        computed = oracle_mul(oracle_mul(p, q), p)

        exact = computed == ex.stated_scaled
        mags_ok = True
        signs = []
        for k in (1, 2, 3, 4):
            got = computed.component(k)
            want = ex.stated_scaled.component(k)
            if got.abs2() != want.abs2():
                mags_ok = False
            elif got != want and got.abs2() != 0:
                signs.append(k)

        # Concurrence of the normalized result: the scale factor drops
        # out of 4*|c1*c4 - c2*c3|^2 / (sum |ck|^2)^2, all rational.
        s = computed.scalars()
        delta = s[0] * s[3] - s[1] * s[2]
        total = sum(sc.abs2() for sc in s)
        c_squared = 4 * delta.abs2() / (total * total)

        note = ""
        if not exact and mags_ok:
            note = ("stated sign differs from the exact recomputation; "
                    "kept as data, not corrected")
        results.append(ExampleResult(
            example_id=ex.example_id,
            p_text=ex.p_text,
            q_text=ex.q_text,
            stated_text=ex.stated_text,
            computed=computed,
            stated_scaled=ex.stated_scaled,
            exact_match=exact,
            magnitude_match=mags_ok,
            sign_mismatch_components=tuple(signs),
            concurrence_one=c_squared == 1,
            note=note,
        ))
    return ExamplesReport(tuple(results))
