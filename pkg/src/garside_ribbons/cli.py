"""Command-line front end.

One monoid per invocation, chosen by ``--spec FILE``, ``--artin TYPE`` or
``--dual N``. Results go to stdout (or ``--out``) as JSON by default.
Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GarsideError, InvalidSpec
from .expr import format_fraction, parse_atom, parse_element, parse_expr, parse_fraction, parse_parabolic
from .groups import (
    GroupFraction,
    conjugate_parabolics,
    is_standard_subgroup,
    minimal_standardizer,
    ParabolicSubgroup,
    z_of,
)
from .lattice import delta_automorphism_order, validate_garside
from .monoid import GarsideMonoid
from .parabolic import (
    all_parabolics,
    head_and_tail,
    parabolic_names,
    right_head_and_tail,
)
from .presentations import (
    build_artin,
    build_dual,
    check_assumption_1,
    check_factors_are_left_divisors,
    check_square_free,
    load_spec,
)
from .ribbon import make_ribbon, ribbon_category_graph, ribbon_failure, ribbon_prefix, v_s_P

EXIT_OK, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2
CONVENTION = "p^-1 q"


class UsageError(GarsideError):
    code = "usage_error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _is_dual(M: GarsideMonoid) -> bool:
    return hasattr(M.lattice, "transpositions")


def _fraction(M: GarsideMonoid, x: GroupFraction) -> dict:
    return {"num": M.format(x.num), "den": M.format(x.den), "convention": CONVENTION,
            "text": format_fraction(M, x)}


def _element(M: GarsideMonoid, g) -> dict:
    return {"word": M.format(g), "factors": [M.format((x,)) for x in g],
            "atom_length": M.atom_length(g)}


# -- commands ------------------------------------------------------------------------


def cmd_build(M, args) -> tuple[dict, int]:
    lat = M.lattice
    report = validate_garside(lat)
    a1 = check_assumption_1(M)
    checks = {"validate": report.ok, "assumption_1": a1.ok}
    if _is_dual(M):
        checks["square_free"] = check_square_free(M).ok
        checks["factors_are_left_divisors"] = check_factors_are_left_divisors(M).ok
    out = {
        "name": lat.name,
        "kind": "dual" if _is_dual(M) else "artin",
        "simples": lat.n,
        "atoms": list(lat.atom_names),
        "delta": M.format(M.simple(M.delta)),
        "delta_length": lat.length[M.delta],
        "delta_automorphism_order": delta_automorphism_order(lat),
        "standard_parabolics": len(all_parabolics(M)),
        "checks": checks,
    }
    if not report.ok:
        out["validation"] = {"axiom": report.axiom, "witness": report.witness}
    return out, EXIT_OK if all(checks.values()) else EXIT_VERIFY


def cmd_nf(M, args):
    x = parse_expr(M, args.expr)
    if isinstance(x, GroupFraction):
        return {"input": args.expr, "fraction": _fraction(M, x)}, EXIT_OK
    return {"input": args.expr, "normal_form": _element(M, x)}, EXIT_OK


def _binary(M, args, left_fn, right_fn):
    g = parse_element(M, args.e1)
    h = parse_element(M, args.e2)
    fn = left_fn if args.side == "left" else right_fn
    return {"side": args.side, "result": _element(M, fn(g, h))}, EXIT_OK


def cmd_gcd(M, args):
    return _binary(M, args, M.left_gcd, M.right_gcd)


def cmd_lcm(M, args):
    # the left lcm is a common *left* multiple; the right lcm a common right multiple
    return _binary(M, args, M.left_lcm, M.right_lcm)


def cmd_head(M, args):
    g = parse_element(M, args.expr)
    if args.parabolic is None:
        head, tail = M.head(g), M.tail(g)
        return {"head": M.format(head), "tail": M.format(tail)}, EXIT_OK
    P = parse_parabolic(M, args.parabolic)
    if args.side == "right":
        head, rest = right_head_and_tail(M, P, g)
        return {"parabolic": parabolic_names(M, P), "side": "right",
                "head": M.format(head), "rest": M.format(rest)}, EXIT_OK
    head, tail = head_and_tail(M, P, g)
    return {"parabolic": parabolic_names(M, P), "side": "left",
            "head": M.format(head), "tail": M.format(tail)}, EXIT_OK


def cmd_vsp(M, args):
    P = parse_parabolic(M, args.parabolic)
    s = parse_atom(M, args.atom)
    v = v_s_P(M, P, s)
    r = make_ribbon(M, P, v)
    return {"parabolic": parabolic_names(M, P), "atom": args.atom, "v": M.format(v),
            "target": parabolic_names(M, r.target)}, EXIT_OK


def cmd_ribbon(M, args):
    P = parse_parabolic(M, args.parabolic)
    g = parse_element(M, args.expr)
    reason = ribbon_failure(M, P, g)
    out = {"parabolic": parabolic_names(M, P), "element": M.format(g), "ribbon": reason is None}
    if reason is None:
        r = make_ribbon(M, P, g)
        out["target"] = parabolic_names(M, r.target)
        out["atom_map"] = {M.lattice.atom_name(a): M.lattice.atom_name(b) for a, b in r.atom_map}
    else:
        out["reason"] = reason
    return out, EXIT_OK


def cmd_rp(M, args):
    P = parse_parabolic(M, args.parabolic)
    g = parse_element(M, args.expr)
    R, rest, Q = ribbon_prefix(M, P, g)
    return {"parabolic": parabolic_names(M, P), "ribbon_prefix": M.format(R),
            "remainder": M.format(rest), "target": parabolic_names(M, Q)}, EXIT_OK


def cmd_standardize(M, args):
    P = parse_parabolic(M, args.parabolic)
    b = parse_element(M, args.expr)
    st = minimal_standardizer(M, P, b)
    return {"parabolic": parabolic_names(M, P), "b": M.format(b),
            "head": M.format(st.head), "ribbon": M.format(st.ribbon),
            "minimal_standardizer": M.format(st.minimal),
            "target": parabolic_names(M, st.target),
            "z": _fraction(M, st.z), "standard": st.z.is_positive}, EXIT_OK


def cmd_zk(M, args):
    P = parse_parabolic(M, args.parabolic)
    g = parse_fraction(M, args.conj)
    K = ParabolicSubgroup(P, g)
    return {"parabolic": parabolic_names(M, P), "conjugator": _fraction(M, g),
            "central_exponent": P.central_exponent, "z": _fraction(M, z_of(M, K)),
            "standard": is_standard_subgroup(M, K)}, EXIT_OK


def cmd_conj(M, args):
    P = parse_parabolic(M, args.P)
    Q = parse_parabolic(M, args.Q)
    r = conjugate_parabolics(M, P, Q)
    return {"source": parabolic_names(M, P), "target": parabolic_names(M, Q),
            "ribbon": M.format(r.word)}, EXIT_OK


def cmd_graph(M, args):
    P = parse_parabolic(M, args.parabolic)
    return ribbon_category_graph(M, P, args.atoms_only).to_dot(M), EXIT_OK


def cmd_verify(M, args):
    from .lemmas import lemma_suite
    from .oracle import oracle_equivalence

    sections = {"validate": validate_garside(M.lattice).ok,
                "assumption_1": check_assumption_1(M).to_dict()}
    if _is_dual(M):
        sections["square_free"] = check_square_free(M).to_dict()
    eq = oracle_equivalence(M, args.oracle_bound)
    suite = lemma_suite(M, args.bound)
    sections["oracle_equivalence"] = [r.to_dict() for r in eq]
    sections["lemmas"] = suite.to_dict()["lemmas"]
    ok = (sections["validate"] and sections["assumption_1"]["ok"]
          and sections.get("square_free", {"ok": True})["ok"]
          and all(r.ok for r in eq) and suite.ok)
    out = {"instance": M.lattice.name, "bound": args.bound, "ok": ok, **sections}
    return out, EXIT_OK if ok else EXIT_VERIFY


def cmd_conjecture_scan(M, args):
    from .lemmas import conjecture_scan

    scan = conjecture_scan(M, args.bound)
    out = {"instance": M.lattice.name, **scan.to_dict()}
    if scan.witnesses and args.witness_file:
        Path(args.witness_file).write_text(json.dumps(out, indent=2) + "\n")
        out["witness_file"] = args.witness_file
    return out, EXIT_OK


# -- plumbing -------------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = _Parser(add_help=False)
    src = p.add_argument_group("monoid")
    src.add_argument("--spec", default=d, help="JSON spec file")
    src.add_argument("--artin", default=d, help="Artin type, e.g. A3, B2, I2(5)")
    src.add_argument("--dual", type=int, default=d, help="dual braid monoid of S_n")
    p.add_argument("--format", choices=["json", "text"], default=d if suppress else "json")
    p.add_argument("--out", default=d, help="write the result to this file")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="garside-ribbons", parents=[_common(False)],
                     description="Garside monoids, parabolic submonoids and ribbons")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common(True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    add("build", cmd_build, "summarise and validate the monoid")
    add("nf", cmd_nf, "normal form of an expression").add_argument("expr", nargs="?", default="")
    for name, fn in (("gcd", cmd_gcd), ("lcm", cmd_lcm)):
        p = add(name, fn, f"{name} of two elements")
        p.add_argument("e1")
        p.add_argument("e2")
        p.add_argument("--side", choices=["left", "right"], default="left")
    p = add("head", cmd_head, "head (or P-head with --parabolic)")
    p.add_argument("expr")
    p.add_argument("--parabolic", "-P")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p = add("vsp", cmd_vsp, "v(s, P)")
    p.add_argument("parabolic")
    p.add_argument("atom")
    for name, fn, help_ in (("ribbon", cmd_ribbon, "test whether an element is a P-ribbon"),
                            ("rp", cmd_rp, "maximal ribbon prefix of a P-reduced element"),
                            ("standardize", cmd_standardize, "minimal standardizer of G_P^b")):
        p = add(name, fn, help_)
        p.add_argument("parabolic")
        p.add_argument("expr")
    p = add("zk", cmd_zk, "z_K for K = G_P^g")
    p.add_argument("parabolic")
    p.add_argument("conj", help="conjugator, positive word or inv(W).W")
    p = add("conj", cmd_conj, "ribbon conjugating P onto Q")
    p.add_argument("P")
    p.add_argument("Q")
    p = add("graph", cmd_graph, "ribbon category reachable from P, as DOT")
    p.add_argument("parabolic")
    p.add_argument("--atoms-only", action="store_true")
    p = add("verify", cmd_verify, "oracle equivalence and lemma suite")
    p.add_argument("--bound", type=int, default=2, help="Garside length bound for the lemma suite")
    p.add_argument("--oracle-bound", type=int, default=4, help="atom length bound for the oracle")
    p = add("conjecture-scan", cmd_conjecture_scan, "search for counterexamples to the conjecture")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--witness-file", default="conjecture_witnesses.json")
    return parser


def load_monoid(args) -> GarsideMonoid:
    given = [k for k in ("spec", "artin", "dual") if getattr(args, k, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --spec, --artin, --dual")
    if args.spec is not None:
        return load_spec(args.spec)
    if args.artin is not None:
        return build_artin(args.artin)
    if args.dual < 2:
        raise InvalidSpec("--dual needs n >= 2")
    return build_dual(args.dual)


def _text(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(v, indent + "  ") if isinstance(v, (dict, list))
                         else f"{indent}- {_scalar(v)}" for v in obj)
    return f"{indent}{_scalar(obj)}"


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return ", ".join(_scalar(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, dict) and not v:
        return "{}"
    return str(v)


def _emit(result, args) -> None:
    if isinstance(result, str):
        text = result
    elif getattr(args, "format", "json") == "text":
        text = _text(result) + "\n"
    else:
        text = json.dumps(result, indent=2) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        M = load_monoid(args)
        result, code = args.fn(M, args)
    except GarsideError as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return EXIT_ERROR
    _emit(result, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
