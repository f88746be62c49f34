"""Command line interface.

    python -m tempered_fd ds-char --sigma 2,2,2 --m 5/4
    python -m tempered_fd delimits --sigma 2,2,2 --m0 1
    python -m tempered_fd tempered --sigma 2,2 --m0 1/2 --segments "[-1,0]"
    python -m tempered_fd formal-degree --sigma 1 --m 3/4
    python -m tempered_fd verify-example

Exit codes: 0 success, 1 failed check or internal inconsistency, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .characters import WCharacter
from .checks import (
    DEFAULT_TS,
    CheckResult,
    ConstantConfig,
    InvariantConfig,
    verify_constants,
    verify_example,
    verify_invariants,
)
from .formal_degree import (
    FdReport,
    HeckeParams,
    Point,
    ep_formal_degree,
    ep_value,
    e_count,
    mixed_character,
    mixed_coords,
    positive_coords,
    product_core,
)
from .notation import character_to_json, format_partition, parse_partition, parse_rational
from .qfield import ParamPoly
from .tempered import (
    Window,
    balanced_hooks,
    character_at,
    delimits,
    ds_character,
    tempered_character,
)


class InputError(ValueError):
    pass


_SEG = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_segments(text: Optional[str]):
    if not text:
        return []
    found = _SEG.findall(text)
    rest = _SEG.sub("", text).replace(";", "").replace(",", "").strip()
    if rest:
        raise InputError(f"cannot parse segments {text!r}")
    segs = [(int(a), int(b)) for a, b in found]
    if any(lo > hi for lo, hi in segs):
        raise InputError(f"segment with lo > hi in {text!r}")
    return segs


def _fmt_seg(s) -> str:
    return f"[{s[0]},{s[1]}]"


def _table(rows: List[Sequence[str]], header: Sequence[str]) -> str:
    cols = list(zip(*([header] + [list(map(str, r)) for r in rows]))) if rows else [[h] for h in header]
    widths = [max(len(x) for x in c) for c in cols]
    line = lambda r: "  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()
    out = [line(header), line(["─" * w for w in widths])]
    out += [line(r) for r in rows]
    return "\n".join(out)


def _character_table(ch: WCharacter) -> str:
    return _table([(c, b) for b, c in ch], ("coeff", "bipartition"))


# ---------------------------------------------------------------------------

def _window_from_args(args) -> tuple:
    if args.m is not None and args.m0 is not None:
        raise InputError("give either --m or --m0, not both")
    if args.m is not None:
        m = parse_rational(args.m)
        sigma = parse_partition(args.sigma)
        ch, critical = character_at(sigma, m)
        w = Window.at(m) if critical else Window.containing(m)
        return w, critical
    if args.m0 is not None:
        m0 = parse_rational(args.m0)
        w = Window.at(m0)
        if args.side == "below":
            w = w.below()
        return w, False
    raise InputError("one of --m or --m0 is required")


def cmd_ds_char(args):
    sigma = parse_partition(args.sigma)
    w, critical = _window_from_args(args)
    ch = ds_character(sigma, w)
    data = {"sigma": format_partition(sigma), "window": str(w), "critical": critical,
            "character": character_to_json(ch)}
    text = f"sigma = {format_partition(sigma)}, window {w}" + (" (limit from above)" if critical else "")
    return data, text + "\n" + _character_table(ch), 0


def cmd_delimits(args):
    sigma = parse_partition(args.sigma)
    if args.m0 is None:
        raise InputError("--m0 is required")
    m0 = parse_rational(args.m0)
    items = delimits(sigma, m0)
    data = {"sigma": format_partition(sigma), "m0": str(m0),
            "hooks": [_fmt_seg(h) for h in balanced_hooks(sigma, m0)],
            "delimits": [{"subset": [_fmt_seg(h) for h in sub], "character": character_to_json(ch)}
                         for sub, ch in items]}
    text = [f"sigma = {format_partition(sigma)}, m0 = {m0}, {len(items)} delimits"]
    for sub, ch in items:
        text.append(f"\nS = {{{', '.join(_fmt_seg(h) for h in sub)}}}")
        text.append(_character_table(ch))
    return data, "\n".join(text), 0


def cmd_tempered(args):
    sigma = parse_partition(args.sigma)
    if args.m0 is None:
        raise InputError("--m0 is required")
    m0 = parse_rational(args.m0)
    if (2 * m0).denominator != 1:
        raise InputError("--m0 must be a multiple of 1/2")
    hooks = parse_segments(args.subset)
    bh = balanced_hooks(sigma, m0)
    if any(h not in bh for h in hooks):
        raise InputError(f"subset must consist of balanced hooks {bh}")
    extra = parse_segments(args.segments)
    target = -2 * m0
    if any(lo + hi != target for lo, hi in extra):
        raise InputError(f"segments must be balanced along {m0} (lo + hi = {target})")
    if len({hi - lo for lo, hi in extra}) != len(extra):
        raise InputError("balanced segments must have distinct lengths")
    ch = tempered_character(extra, sigma, m0, hooks)
    data = {"sigma": format_partition(sigma), "m0": str(m0),
            "subset": [_fmt_seg(h) for h in hooks], "segments": [_fmt_seg(s) for s in extra],
            "character": character_to_json(ch)}
    return data, _character_table(ch), 0


def _q_power(t: Fraction, m: Fraction) -> Optional[Fraction]:
    """q^m with q = t^4, or None when it is irrational."""
    x = 4 * m
    return t ** int(x) if x.denominator == 1 else None


def _points(m_plus: Fraction, m_minus: Fraction) -> List[Point]:
    return [Point(t, m_plus, m_minus) for t in DEFAULT_TS]


def cmd_formal_degree(args):
    if args.sigma1 is not None or args.sigma2 is not None:
        s1 = parse_partition(args.sigma1 or "")
        s2 = parse_partition(args.sigma2 or "")
        if not s1:
            raise InputError("--sigma1 must be nonempty for a mixed central character")
        if args.mplus is None or args.mminus is None:
            raise InputError("--mplus and --mminus are required")
        mp, mm = parse_rational(args.mplus), parse_rational(args.mminus)
        n = s1.size + s2.size
        m1, m2 = (mp - mm) / 2, (mp + mm) / 2
        if (4 * m1).denominator != 1 or (4 * m2).denominator != 1:
            raise InputError("(m+ -+ m-)/2 must be multiples of 1/4")
        if (2 * m1).denominator == 1 or (2 * m2).denominator == 1:
            raise InputError("parameters are not generic: m+ +- m- must not be integers")
        params = HeckeParams()
        char = mixed_character(s1, s2, mp, mm)
        coords = mixed_coords(s1, s2, params)
        label = f"{format_partition(s1)} | {format_partition(s2)}"
        pnames = {"m+": str(mp), "m-": str(mm)}
    else:
        if args.sigma is None or args.m is None:
            raise InputError("--sigma and --m are required")
        sigma = parse_partition(args.sigma)
        m = parse_rational(args.m)
        if (4 * m).denominator != 1:
            raise InputError("--m must be a multiple of 1/4")
        if (2 * m).denominator == 1:
            raise InputError("--m must not be critical (a multiple of 1/2)")
        mp = mm = m
        params = HeckeParams.equal()
        char = ds_character(sigma, Window.containing(m))
        coords = positive_coords(sigma)
        label = format_partition(sigma)
        pnames = {"m": str(m)}
        n = sigma.size
    core = product_core(coords, params)
    pts = _points(mp, mm)
    ratios = [ep_value(char, params, p) / p.eval(core) for p in pts]
    constant = ratios[0] if len(set(ratios)) == 1 else None
    # e-counts of the numeric central character at the first sample point
    p0 = pts[0]
    s_num = [ParamPoly.monomial(e, sign).eval(p0.t, mp, mm) for sign, e in coords]
    counts = {kind: e_count(kind, s_num, _q_power(p0.t, m)) for kind, m in
              (("C", mp), ("B", mp / 2), ("D", Fraction(0)))}
    ep = None
    sym = None
    if n <= args.symbolic_max_n:
        ep = ep_formal_degree(char, params)
        sym = (ep / core).is_constant()
    report = FdReport(label, pnames, constant, counts, ep, core if ep is not None else None)
    data = report.to_json()
    data["ratios"] = [str(r) for r in ratios]
    if ep is not None:
        data["symbolic_constant"] = None if sym is None else str(sym)
        if sym != constant:
            data["error"] = "symbolic and numeric constants disagree"
    if constant is None:
        data["error"] = "ratio ep/core is not constant across sample points"
    text = _table([("sigma", label), *pnames.items(),
                   ("constant", data["constant"]),
                   ("ratios at t=" + ",".join(map(str, DEFAULT_TS)), ", ".join(data["ratios"])),
                   ("symbolic constant", data.get("symbolic_constant", "not computed")),
                   ("e-counts (C,B,D)", f"{counts['C']},{counts['B']},{counts['D']}")],
                  ("field", "value"))
    ok = constant is not None and "error" not in data
    return data, text, 0 if ok else 1


def _report(results: List[CheckResult]):
    data = {"ok": all(r.ok for r in results), "checks": [r.to_json() for r in results]}
    rows = [("PASS" if r.ok else "FAIL", r.name, r.detail) for r in results]
    text = _table(rows, ("status", "check", "detail"))
    for r in results:
        for f in r.failures[:5]:
            text += f"\n  {r.name}: {f}"
    return data, text, 0 if data["ok"] else 1


def cmd_verify_example(args):
    return _report([verify_example()])


def cmd_verify_constants(args):
    cfg = ConstantConfig(max_n=args.max_n or 4, mixed_max_n=args.max_n or 4, seed=args.seed)
    return _report(verify_constants(cfg))


def cmd_verify_invariants(args):
    return _report(verify_invariants(InvariantConfig(max_n=args.max_n or 8)))


COMMANDS = {
    "ds-char": cmd_ds_char,
    "delimits": cmd_delimits,
    "tempered": cmd_tempered,
    "formal-degree": cmd_formal_degree,
    "verify-example": cmd_verify_example,
    "verify-constants": cmd_verify_constants,
    "verify-invariants": cmd_verify_invariants,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tempered_fd", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", help="partition, e.g. 2,2,2")
    common.add_argument("--m", help="parameter m, e.g. 5/4")
    common.add_argument("--m0", help="critical value in (1/2)Z")
    common.add_argument("--side", choices=("above", "below"), default="above")
    common.add_argument("--format", choices=("table", "json"), default="json")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, dest="max_n")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "tempered":
            p.add_argument("--subset", help="balanced hooks of the delimit, e.g. '[-2,0][-1,-1]'")
            p.add_argument("--segments", help="balanced multisegment to induce from, e.g. '[-1,0]'")
        if name == "formal-degree":
            p.add_argument("--sigma1", help="partition with eigenvalue sign -1")
            p.add_argument("--sigma2", help="partition with eigenvalue sign +1")
            p.add_argument("--mplus")
            p.add_argument("--mminus")
            p.add_argument("--symbolic-max-n", type=int, default=3, dest="symbolic_max_n",
                           help="also compute symbolic ep and core up to this rank")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text, code = COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    output = json.dumps(data, indent=2) if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
