"""Command-line interface.

    biquat entangle --p <quat> --q <biquat>     checked entangling map
    biquat concurrence <biquat>                 concurrence of a state
    biquat check --p <quat> --q <biquat>        restriction report only
    biquat rotate --map <kind> --q ... --x ...  apply a rotation map
    biquat polar <quat>                         polar decomposition
    biquat verify-theorem [--samples N --seed S]
    biquat verify-examples
    biquat sweep [--grid N] [--out PATH]        concurrence CSV sweep

A biquaternion is written as four comma-separated complex literals
("0.5+0.5i, -0.5i, 0, 1"), or as a JSON object {"re": [...], "im":
[...]}; a quaternion is the same with real entries.  `-` makes
``concurrence`` read its argument from stdin.  ``--json`` switches any
command to structured output.

Exit codes: 0 success, 1 parse or usage error, 2 restriction rejection,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys

from . import verify as _verify
from .biquaternion import BiQuat, from_quat, is_real
from .entanglement import (RestrictionError, StateAmp, Variant,
                           check_restrictions, concurrence, embed_state,
                           entangle, entangle_map)
from .quaternion import Quat, polar
from .rotations import (complex_rotation, conjugate_rotation, lorentz_map,
                        rotate_biquat, rotate_onesided)

__all__ = ["ParseError", "parse_biquat", "parse_quat", "format_biquat",
           "format_complex", "build_parser", "main"]

MAXIMAL_TOL = 1e-9


class ParseError(ValueError):
    """Malformed input text; ``position`` is a character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


_NUM = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_RE_REAL = re.compile(rf"({_NUM})\Z")
_RE_IMAG = re.compile(rf"({_NUM})i\Z")
_RE_BOTH = re.compile(rf"({_NUM})([+-]{_UNSIGNED})i\Z")


def _parse_complex(token: str, position: int) -> complex:
    m = _RE_REAL.match(token)
    if m:
        return complex(float(m.group(1)), 0.0)
    m = _RE_IMAG.match(token)
    if m:
        return complex(0.0, float(m.group(1)))
    m = _RE_BOTH.match(token)
    if m:
        return complex(float(m.group(1)), float(m.group(2)))
    raise ParseError(f"malformed complex literal {token!r}", position)


def _parse_json_biquat(text: str) -> BiQuat:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.pos) from None
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        raise ParseError('JSON form needs exactly the keys "re" and "im"')
    re_, im = obj["re"], obj["im"]
    if (not isinstance(re_, list) or not isinstance(im, list)
            or len(re_) != 4 or len(im) != 4):
        raise ParseError('"re" and "im" must be arrays of 4 numbers')
    try:
        return BiQuat(*(complex(float(r), float(i))
                        for r, i in zip(re_, im)))
    except (TypeError, ValueError):
        raise ParseError('"re" and "im" entries must be numbers') from None


def parse_biquat(text: str) -> BiQuat:
    """Parse the comma-separated or JSON form of a biquaternion."""
    if text.lstrip().startswith("{"):
        return _parse_json_biquat(text)
    pieces = []
    start = 0
    while True:
        cut = text.find(",", start)
        seg = text[start:] if cut < 0 else text[start:cut]
        stripped = seg.strip()
        offset = start + len(seg) - len(seg.lstrip())
        pieces.append((stripped.replace(" ", "").replace("\t", ""), offset))
        if cut < 0:
            break
        start = cut + 1
    if len(pieces) != 4:
        raise ParseError(f"expected 4 components, found {len(pieces)}")
    return BiQuat(*(_parse_complex(tok, off) for tok, off in pieces))


def parse_quat(text: str) -> Quat:
    """Parse a real quaternion (a biquaternion with no imaginary parts)."""
    q = parse_biquat(text)
    if not is_real(q, 0.0):
        raise ParseError("expected a real quaternion, found imaginary parts")
    return Quat(q.c1.real, q.c2.real, q.c3.real, q.c4.real)


def _fmt_float(x: float) -> str:
    # repr round-trips exactly; integral values lose the trailing ".0".
    if x == 0.0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _json_num(x: float):
    return int(x) if x == int(x) and abs(x) < 1e16 else x


def format_complex(c: complex) -> str:
    c = complex(c)
    if c.imag == 0.0:
        return _fmt_float(c.real)
    if c.real == 0.0:
        return _fmt_float(c.imag) + "i"
    sign = "+" if c.imag > 0 else "-"
    return f"{_fmt_float(c.real)}{sign}{_fmt_float(abs(c.imag))}i"


def format_biquat(q: BiQuat, style: str = "plain") -> str:
    """Render a biquaternion; the plain style parses back bit-exactly."""
    if style == "plain":
        return ", ".join(format_complex(c) for c in q)
    if style == "json":
        return json.dumps({"re": [_json_num(complex(c).real) for c in q],
                           "im": [_json_num(complex(c).imag) for c in q]})
    if style == "unicode":
        units = ("", "î", "ĵ", "k̂")
        parts = []
        for c, u in zip(q, units):
            lit = format_complex(c)
            parts.append(f"({lit}){u}" if u else lit)
        return " + ".join(parts)
    raise ValueError(f"unknown style: {style!r}")


def _biquat_json(q: BiQuat) -> dict:
    return {"re": [complex(c).real for c in q],
            "im": [complex(c).imag for c in q]}


# --- command handlers -------------------------------------------------

def _cmd_entangle(ns) -> int:
    p = parse_quat(ns.p)
    q = parse_biquat(ns.q)
    try:
        out = entangle(p, q)
    except RestrictionError as e:
        if ns.json:
            print(json.dumps({"rejected": True,
                              "report": e.report.to_dict()}, indent=2))
        else:
            print("rejected: " + e.report.detail)
            _print_report(e.report)
        return 2
    if ns.json:
        print(json.dumps(out.to_dict(), indent=2))
    else:
        print("result: " + format_biquat(out.result))
        print(f"concurrence before: {_fmt_float(out.concurrence_before)}")
        print(f"concurrence after: {_fmt_float(out.concurrence_after)}")
        _print_report(out.report)
    return 0


def _cmd_concurrence(ns) -> int:
    text = sys.stdin.readline() if ns.state == "-" else ns.state
    c = concurrence(parse_biquat(text))
    if ns.json:
        print(json.dumps({"concurrence": c}))
    else:
        print(_fmt_float(c))
    return 0


def _print_report(report) -> None:
    for name, ok in (("R1", report.r1_pass), ("R2", report.r2_pass),
                     ("R3", report.r3_pass)):
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    print(f"rotor support: {sorted(report.p_support)}   "
          f"state support: {sorted(report.q_support)}")
    print(f"rotor concurrence: {_fmt_float(report.concurrence_p)}")
    print(f"detail: {report.detail}")


def _cmd_check(ns) -> int:
    report = check_restrictions(parse_quat(ns.p), parse_biquat(ns.q))
    if ns.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        _print_report(report)
    return 0 if report.passed else 2


def _require_real(q: BiQuat, flag: str) -> Quat:
    if not is_real(q, 0.0):
        raise ParseError(f"{flag} must be a real quaternion for this map")
    return Quat(q.c1.real, q.c2.real, q.c3.real, q.c4.real)


def _cmd_rotate(ns) -> int:
    qb = parse_biquat(ns.q)
    xb = parse_biquat(ns.x)
    kind = ns.map
    if kind in ("left", "right"):
        r = rotate_onesided(_require_real(qb, "--q"), _require_real(xb, "--x"),
                            kind)
        result = from_quat(r)
    elif kind == "conj":
        r = conjugate_rotation(_require_real(qb, "--q"),
                               _require_real(xb, "--x"))
        result = from_quat(r)
    elif kind == "psi":
        result = rotate_biquat(qb, xb)
    elif kind == "lorentz":
        result = lorentz_map(qb, xb)
    else:  # mu
        result = complex_rotation(qb, xb)
    if ns.json:
        print(json.dumps({"map": kind, "result": _biquat_json(result)},
                         indent=2))
    else:
        print(format_biquat(result))
    return 0


def _cmd_polar(ns) -> int:
    form = polar(parse_quat(ns.value))
    if ns.json:
        print(json.dumps({"magnitude": form.magnitude,
                          "axis": list(form.axis),
                          "angle": form.angle,
                          "degenerate": form.degenerate}, indent=2))
    else:
        print(f"magnitude: {_fmt_float(form.magnitude)}")
        print(f"angle: {_fmt_float(form.angle)}")
        print("axis: " + ", ".join(_fmt_float(a) for a in form.axis))
        print(f"degenerate: {'yes' if form.degenerate else 'no'}")
    return 0


def _cmd_verify_theorem(ns) -> int:
    report = _verify.verify_theorem(samples=ns.samples, seed=ns.seed)
    print(json.dumps(report.to_dict(), indent=2) if ns.json
          else report.to_text())
    return 0 if report.all_pass else 3


def _cmd_verify_examples(ns) -> int:
    report = _verify.verify_examples()
    print(json.dumps(report.to_dict(), indent=2) if ns.json
          else report.to_text())
    return 0 if report.all_pass else 3


def _cmd_sweep(ns) -> int:
    n = ns.grid
    if n < 1:
        raise ParseError("--grid must be at least 1")
    half_pi = math.pi / 2.0
    mix = [half_pi * k / (n - 1) for k in range(n)] if n > 1 else [half_pi / 2]
    phase = [2.0 * math.pi * k / n for k in range(n)]

    out = sys.stdout if ns.out == "-" else open(ns.out, "w", newline="")
    rows = 0
    maximal = 0
    try:
        w = csv.writer(out)
        w.writerow(["alpha", "beta", "a_i", "a_j", "concurrence", "maximal"])
        for tq in mix:
            ma, mb = math.cos(tq), math.sin(tq)
            for pa in phase:
                alpha = ma * complex(math.cos(pa), math.sin(pa))
                for pb in phase:
                    beta = mb * complex(math.cos(pb), math.sin(pb))
                    qv = embed_state(StateAmp(alpha, beta, Variant.V12))
                    for tp in mix:
                        ai, aj = math.cos(tp), math.sin(tp)
                        p = Quat(ai, 0.0, aj, 0.0)
                        c = concurrence(entangle_map(p, qv))
                        is_max = c >= 1.0 - MAXIMAL_TOL
                        w.writerow([format_complex(alpha),
                                    format_complex(beta),
                                    repr(ai), repr(aj), repr(c),
                                    1 if is_max else 0])
                        rows += 1
                        maximal += is_max
    finally:
        if out is not sys.stdout:
            out.close()
    if ns.json:
        print(json.dumps({"rows": rows, "maximal_rows": maximal,
                          "out": ns.out}))
    elif ns.out != "-":
        print(f"wrote {rows} rows ({maximal} maximal) to {ns.out}")
    return 0


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit code 1 here, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="biquat", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    top.add_argument("--json", action="store_true", default=False,
                     help="structured JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    # The flag works in both positions; SUPPRESS keeps a subcommand
    # occurrence from clobbering one given before the command name.
    def cmd(name, handler, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true",
                       default=argparse.SUPPRESS)
        p.set_defaults(func=handler)
        return p

    p = cmd("entangle", _cmd_entangle, "run the checked entangling map")
    p.add_argument("--p", required=True, metavar="QUAT",
                   help="real unit rotor quaternion")
    p.add_argument("--q", required=True, metavar="BIQUAT",
                   help="embedded product state")

    p = cmd("concurrence", _cmd_concurrence,
            "concurrence of a normalized state")
    p.add_argument("state", metavar="BIQUAT", help="state, or - for stdin")

    p = cmd("check", _cmd_check, "evaluate restrictions R1-R3 only")
    p.add_argument("--p", required=True, metavar="QUAT")
    p.add_argument("--q", required=True, metavar="BIQUAT")

    p = cmd("rotate", _cmd_rotate, "apply a rotation map")
    p.add_argument("--map", required=True,
                   choices=["left", "right", "conj", "psi", "lorentz", "mu"])
    p.add_argument("--q", required=True, metavar="(BI)QUAT")
    p.add_argument("--x", required=True, metavar="(BI)QUAT")

    p = cmd("polar", _cmd_polar, "polar decomposition of a quaternion")
    p.add_argument("value", metavar="QUAT")

    p = cmd("verify-theorem", _cmd_verify_theorem,
            "verify the eight-case entangling law (exit 3 on failure)")
    p.add_argument("--samples", type=int, default=1000,
                   help="float-law samples per case (default 1000)")
    p.add_argument("--seed", type=int, default=7,
                   help="seed for the float-law samples (default 7)")

    cmd("verify-examples", _cmd_verify_examples,
        "recompute the three golden examples (exit 3 on failure)")

    p = cmd("sweep", _cmd_sweep, "CSV concurrence sweep over an N^4 grid")
    p.add_argument("--grid", type=int, default=5, metavar="N",
                   help="points per axis (default 5)")
    p.add_argument("--out", default="-", metavar="PATH",
                   help="output file, - for stdout (default)")

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return ns.func(ns)
    except ParseError as e:
        print(f"biquat: parse error: {e}", file=sys.stderr)
        return 1
    except RestrictionError as e:
        print(f"biquat: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"biquat: error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"biquat: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
