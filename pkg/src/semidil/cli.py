"""Command-line interface.

Exit status: 0 on success, 1 on bad input, 2 when a ``verify`` run finds a
violated identity.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from contextlib import nullcontext

from . import __version__
from .classify import (
    almost_symmetric_routes,
    canonical_reduction_data,
    classify,
    trace_ideal,
    verify_section3,
)
from .core import (
    NumericalSemigroup,
    apery_set,
    enumerate_by_genus,
    from_gaps,
    from_generators,
    invariants,
    iter_semigroups,
)
from .dilatation import (
    apery_of_dilatation,
    contract,
    contraction_candidates,
    dilatation_domain,
    dilate,
    generators_of_dilatation,
    transfer_report,
    valid_shifts,
)
from .errors import ParseError, SemigroupError
from .presentation import betti_contributions, scan_pairs

_LITERAL = re.compile(r"^(gaps:)?\d+(,\d+)*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``4,7,9`` (generators) or ``gaps:1,2,4,7``."""
    text = text.strip().replace(" ", "")
    if not _LITERAL.match(text):
        raise ParseError(f"malformed semigroup literal {text!r}")
    if text.startswith("gaps:"):
        return from_gaps(int(x) for x in text[5:].split(","))
    return from_generators(int(x) for x in text.split(","))


def _sg_json(S: NumericalSemigroup | None):
    if S is None:
        return None
    return {"generators": list(S.minimal_generators), "gaps": list(S.gaps)}


def _fmt(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, S, result: dict, lines: list[str]):
        if self.as_json:
            json.dump({"semigroup": _sg_json(S), "result": result}, self.stream, ensure_ascii=False)
            self.stream.write("\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_info(args, out):
    S = parse_semigroup(args.semigroup)
    inv = invariants(S)
    result = inv.as_dict() | {"gaps": list(S.gaps), "generators": list(S.minimal_generators), "members": S.as_set().to_json()}
    out.emit(S, result, [
        f"S = <{','.join(map(str, S.minimal_generators))}> = {S}",
        f"F={inv.frobenius} g={inv.genus} e={inv.multiplicity} n={inv.sporadic_count} "
        f"t={inv.type} ν={inv.embedding_dimension} r={inv.reduction_number}",
        f"gaps {_fmt(S.gaps)}",
    ])
    return 0


def cmd_apery(args, out):
    S = parse_semigroup(args.semigroup)
    ap = apery_set(S, args.mod)
    out.emit(S, {"modulus": args.mod, "apery": ap}, [f"Ap(S,{args.mod}) = {_fmt(ap)}"])
    return 0


def cmd_dilate(args, out):
    S = parse_semigroup(args.semigroup)
    T = dilate(S, args.a)
    result = {"a": args.a, "dilatation": _sg_json(T), "members": T.as_set().to_json()}
    lines = [f"S+{args.a} = {T}"]
    if args.show == "generators":
        gens = list(T.minimal_generators)
        result["generators"] = gens
        lines.append(f"generators ({len(gens)}): {_fmt(gens)}")
        if args.a > 0 and args.a in S:
            result["generators_from_base"] = generators_of_dilatation(S, args.a)
    elif args.show == "apery":
        s = args.mod if args.mod is not None else S.multiplicity
        ap = apery_set(T, s + args.a)
        result["modulus"] = s + args.a
        result["apery"] = ap
        lines.append(f"Ap(T,{s + args.a}) = {_fmt(ap)}")
        if args.a > 0 and args.a in S:
            result["apery_from_base"] = apery_of_dilatation(S, args.a, s)
    elif args.show == "invariants":
        inv = invariants(T)
        result["invariants"] = inv.as_dict()
        lines.append(
            f"F={inv.frobenius} g={inv.genus} e={inv.multiplicity} n={inv.sporadic_count} "
            f"t={inv.type} ν={inv.embedding_dimension} r={inv.reduction_number}"
        )
    else:
        lines.append(f"generators {_fmt(T.minimal_generators)}")
    out.emit(S, result, lines)
    return 0


def cmd_contract(args, out):
    T = parse_semigroup(args.semigroup)
    if args.a is None:
        cands = contraction_candidates(T)
        result = {"candidates": cands, "contractions": {str(a): _sg_json(contract(T, a)) for a in cands}}
        lines = [f"contraction candidates {_fmt(cands)}"]
        lines += [f"  T-{a} = <{','.join(map(str, contract(T, a).minimal_generators))}>" for a in cands]
        out.emit(T, result, lines)
        return 0
    S = contract(T, args.a)
    out.emit(T, {"a": args.a, "contraction": _sg_json(S)}, [f"T-{args.a} = <{','.join(map(str, S.minimal_generators))}> = {S}"])
    return 0


def cmd_domain(args, out):
    S = parse_semigroup(args.semigroup)
    D = dilatation_domain(S)
    out.emit(S, {"domain": D.to_json()}, [f"M-2M = {D}"])
    return 0


def cmd_classify(args, out):
    S = parse_semigroup(args.semigroup)
    c = classify(S)
    rd = canonical_reduction_data(S)
    result = c.as_dict() | {
        "canonical_ideal": S.canonical_ideal().to_json(),
        "trace_ideal": trace_ideal(S).to_json(),
        "reduction_number": rd.reduction_number,
        "excess": rd.excess,
    }
    lines = [f"{k:18s} {v}" for k, v in c.as_dict().items()]
    lines += [f"canonical ideal    {S.canonical_ideal()}", f"trace ideal        {trace_ideal(S)}",
              f"reduction data     ({rd.reduction_number}, {rd.excess})"]
    out.emit(S, result, lines)
    return 0


def cmd_presentation(args, out):
    S = parse_semigroup(args.semigroup)
    p = betti_contributions(S)
    result = {"betti_contributions": {str(k): v for k, v in sorted(p.betti_contributions.items())}, "mu": p.mu}
    lines = [f"n={n}: {c}" for n, c in sorted(p.betti_contributions.items())] + [f"mu = {p.mu}"]
    out.emit(S, result, lines)
    return 0


def _verify_section2(S, a_max):
    bad = []
    checks = 0
    for a in valid_shifts(S, a_max):
        checks += 1
        rep = transfer_report(S, a)
        if not rep.passed:
            bad.append({"a": a, "failed": rep.failures()})
        if a == 0 or a not in S:
            continue
        T = dilate(S, a)
        checks += 1
        if generators_of_dilatation(S, a) != list(T.minimal_generators):
            bad.append({"a": a, "failed": ["generators_of_dilatation"]})
        for s in range(S.multiplicity, S.frobenius + S.multiplicity + 1):
            if s in S:
                checks += 1
                if apery_of_dilatation(S, a, s) != apery_set(T, s + a):
                    bad.append({"a": a, "s": s, "failed": ["apery_of_dilatation"]})
    return checks, bad


def _verify_section3(S, a_max):
    bad = []
    shifts = valid_shifts(S, a_max)
    for a in shifts:
        rep = verify_section3(S, a)
        if not rep.passed:
            bad.append({"a": a, "failed": rep.failures()})
    return len(shifts), bad


def _verify_disjointness(S, a_max):
    c = classify(S)
    failed = []
    if c.almost_symmetric and not c.nearly_gorenstein:
        failed.append("almost_symmetric_implies_nearly_gorenstein")
    if c.two_agl and c.nearly_gorenstein:
        failed.append("two_agl_and_nearly_gorenstein")
    if c.two_agl and c.almost_symmetric:
        failed.append("two_agl_and_almost_symmetric")
    if len(set(almost_symmetric_routes(S))) != 1:
        failed.append("almost_symmetric_routes")
    if not c.wilf:
        failed.append("wilf")
    return 1, ([{"failed": failed}] if failed else [])


_VERIFIERS = {"section2": _verify_section2, "section3": _verify_section3, "disjointness": _verify_disjointness}


def cmd_verify(args, out):
    fn = _VERIFIERS[args.what]
    total = 0
    violations = []
    family = list(iter_semigroups(args.max_genus))
    for S in family:
        n, bad = fn(S, args.max_a)
        total += n
        for b in bad:
            violations.append({"generators": list(S.minimal_generators)} | b)
    result = {"suite": args.what, "max_genus": args.max_genus, "max_a": args.max_a,
              "semigroups": len(family), "checks": total, "violations": violations}
    lines = [f"{args.what}: {len(family)} semigroups, {total} checks, {len(violations)} violations"]
    lines += [f"  VIOLATION {v}" for v in violations]
    out.emit(None, result, lines)
    return 2 if violations else 0


def cmd_scan(args, out):
    family = iter_semigroups(args.max_genus)
    ctx = open(args.log, "w", encoding="utf-8") if args.log else nullcontext(None)
    with ctx as log:
        recs = scan_pairs(family, args.max_a, members_only=args.members_only, log=log)
    nonzero = [r for r in recs if r.gap != 0]
    result = {"pairs": len(recs), "nonzero": [r.as_dict() for r in nonzero],
              "records": [r.as_dict() for r in recs]}
    lines = [r.log_line() for r in recs] if not args.log else []
    lines.append(f"{len(recs)} pairs, {len(nonzero)} nonzero gaps")
    out.emit(None, result, lines)
    return 0


def cmd_enumerate(args, out):
    group = enumerate_by_genus(args.genus).get(args.genus, [])
    result = {"genus": args.genus, "count": len(group), "semigroups": [_sg_json(S) for S in group]}
    lines = [f"<{','.join(map(str, S.minimal_generators))}>  gaps {_fmt(S.gaps)}" for S in group]
    lines.append(f"{len(group)} semigroups of genus {args.genus}")
    out.emit(None, result, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semidil", description="Numerical semigroups and their dilatations.")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sg(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("semigroup", help="generators '4,7,9' or 'gaps:1,2,4,7'")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    sg("info", cmd_info, "invariants of S")
    sp = sg("apery", cmd_apery, "Apéry set")
    sp.add_argument("--mod", type=int, required=True)
    sp = sg("dilate", cmd_dilate, "S + a")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--show", choices=["generators", "apery", "invariants"])
    sp.add_argument("--mod", type=int, help="s for --show apery (default e(S))")
    sp = sg("contract", cmd_contract, "T - a, or all contraction candidates")
    sp.add_argument("--a", type=int)
    sg("domain", cmd_domain, "admissible shifts M - 2M")
    sg("classify", cmd_classify, "Gorenstein-adjacent classes")
    sg("presentation", cmd_presentation, "minimal presentation size")

    sp = sub.add_parser("verify", help="exhaustive identity checks")
    sp.add_argument("what", choices=sorted(_VERIFIERS))
    sp.add_argument("--max-genus", type=int, default=8)
    sp.add_argument("--max-a", type=int, default=6)
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="presentation-size gap scan")
    sp.add_argument("what", choices=["q28"])
    sp.add_argument("--max-genus", type=int, default=8)
    sp.add_argument("--max-a", type=int, default=6)
    sp.add_argument("--log")
    sp.add_argument("--members-only", action="store_true", help="only shifts that lie in S")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("enumerate", help="all semigroups of a given genus")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_enumerate)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, _Out(args.json, stdout))
    except (UsageError, SemigroupError) as exc:
        stderr.write(f"semidil: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
