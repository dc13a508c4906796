"""Command-line entry point: ``orelab analyze | verify | i1 ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import oresets as ore
from .bitset import to_list
from .corpus import corpus_names, corpus_spec, load_corpus
from .finring import FiniteRing, RingError
from .oracle import EnumerationBudget, MICRO_SIZE, mutated_join, verify_paper_identities
from .ringspec import RingSpecError, parse_ring

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4

SIDE_CHOICES = {"left": ("left",), "right": ("right",), "both": ("left", "right"),
                "two": ("two-sided",), "all": ("left", "right", "two-sided")}
_SIDE_KEY = {"left": "left", "right": "right", "two-sided": "two_sided"}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_spec(ref: str) -> str:
    path = Path(ref)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    stem = path.name[:-5] if path.name.endswith(".ring") else path.name
    if stem in corpus_names():
        return corpus_spec(stem)
    raise CliError(f"no such ring file or corpus entry: {ref}", EXIT_PARSE)


def _load_ring(ref: str) -> tuple[FiniteRing, str]:
    text = _read_spec(ref)
    try:
        return parse_ring(text), text.strip()
    except RingSpecError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from exc
    except RingError as exc:
        raise CliError(f"ring axiom '{exc.axiom}' fails: witness {exc.witness}", EXIT_PARSE) from exc


def _budget(args) -> EnumerationBudget:
    return EnumerationBudget(max_ring_size_full=args.max_enum, seed=args.seed)


def _hom_targets(R: FiniteRing) -> list[FiniteRing]:
    if R.size > MICRO_SIZE:
        return []
    return [Q for Q in load_corpus().values() if Q.size <= MICRO_SIZE]


def _ideal_list(ideals) -> list[list[int]]:
    return [to_list(I.members) for I in ideals]


def analysis_report(R: FiniteRing, spec: str, sides, budget: EnumerationBudget,
                    lattice: bool = False, verify: bool = True) -> dict:
    report: dict = {
        "tool": "orelab",
        "version": __version__,
        "ring": {"label": R.label, "spec": spec, "size": R.size,
                 "commutative": R.is_commutative, "units": to_list(R.units_mask)},
        "budget": {"max_enum": budget.max_ring_size_full, "seed": budget.seed,
                   "full_enumeration": budget.full(R),
                   "sample_count": None if budget.full(R) else budget.sample_count},
        "sides": [_SIDE_KEY[s] for s in sides],
    }
    for side in sides:
        key = _SIDE_KEY[side]
        ass = ore.enumerate_ass(R, side)
        largest = []
        for a in ass:
            S = ore.largest_denominator_set(R, a, side)
            largest.append({"ideal": to_list(a.members), "set": S.elements()})
        report[f"Ass_{key}"] = _ideal_list(ass)
        report[f"largest_{key}"] = largest
        report[f"maxDen_{key}"] = [S.elements() for S in ore.max_denominator_sets(R, side)]
        report[f"radical_{key}"] = to_list(ore.localization_radical(R, side).members)
        report[f"localization_maximal_{key}"] = ore.is_localization_maximal(R, side)
    if lattice:
        try:
            L = ore.den0_lattice(R)
        except ore.BudgetExceeded as exc:
            raise CliError(f"budget refusal: {exc}", EXIT_BUDGET) from exc
        report["den0_lattice"] = {"nodes": [to_list(m) for m in L.nodes],
                                  "join": [list(r) for r in L.join],
                                  "meet": [list(r) for r in L.meet]}
    if verify:
        v = verify_paper_identities(R, budget, hom_targets=_hom_targets(R))
        report["verification"] = {"ok": v.ok,
                                  "checks": {c.name: c.status for c in v.checks}}
    return report


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _text_report(rep: dict) -> str:
    lines = [f"ring {rep['ring']['label']} (size {rep['ring']['size']})"]
    for key in rep["sides"]:
        lines.append(f"[{key}]")
        lines.append(f"  Ass     = {rep[f'Ass_{key}']}")
        for entry in rep[f"largest_{key}"]:
            lines.append(f"  S_a     a={entry['ideal']} -> {entry['set']}")
        lines.append(f"  maxDen  = {rep[f'maxDen_{key}']}")
        lines.append(f"  radical = {rep[f'radical_{key}']}")
        lines.append(f"  localization-maximal = {str(rep[f'localization_maximal_{key}']).lower()}")
    if "den0_lattice" in rep:
        lines.append(f"den0 lattice: {len(rep['den0_lattice']['nodes'])} nodes")
        for i, node in enumerate(rep["den0_lattice"]["nodes"]):
            lines.append(f"  {i}: {node}")
    if "verification" in rep:
        v = rep["verification"]
        lines.append(f"verification: {'PASS' if v['ok'] else 'FAIL'}")
        for name in sorted(v["checks"]):
            lines.append(f"  {v['checks'][name]:4} {name}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    R, spec = _load_ring(args.ring)
    rep = analysis_report(R, spec, SIDE_CHOICES[args.side], _budget(args),
                          lattice=args.lattice, verify=not args.no_verify)
    _emit(_dumps(rep) if args.out == "json" else _text_report(rep), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    R, _ = _load_ring(args.ring)
    join_impl = mutated_join if args.inject_fault else None
    rep = verify_paper_identities(R, _budget(args), join_impl=join_impl,
                                  hom_targets=_hom_targets(R))
    if args.out == "json":
        _emit(_dumps(rep.to_dict(timing=False)), args.output)
    else:
        lines = [f"{R.label}: {'PASS' if rep.ok else 'FAIL'}"]
        for c in rep.checks:
            line = f"  {c.status:4} {c.name}"
            if c.status in ("FAIL", "INFO") and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        _emit("\n".join(lines), args.output)
    return EXIT_OK if rep.ok else EXIT_VERIFY_FAIL


# -- i1 -----------------------------------------------------------------------

_MEMBER_SETS = {"S0": "S_0", "Sl0": "S_l0", "Sr0": "S_r0"}


def cmd_i1(args) -> int:
    from . import i1

    def el(text: str):
        return i1.parse_element(text)

    def b1(text: str):
        return i1.b1_normalize(text)

    sub = args.i1cmd
    if sub == "normalize":
        print(el(args.expr))
    elif sub == "mul":
        print(el(args.a) * el(args.b))
    elif sub == "star":
        print(i1.star(el(args.expr)))
    elif sub == "fredholm":
        f = i1.fredholm(el(args.expr))
        print(f"ker={f.kernel_dim} coker={f.cokernel_dim} index={f.index}")
    elif sub == "member":
        print(str(i1.s_membership(el(args.expr), _MEMBER_SETS[args.set])).lower())
    elif sub == "factor":
        v, w = i1.m_factor(el(args.expr))
        print(f"v = {v}")
        print(f"w = {w}")
    elif sub == "ore":
        a, b = b1(args.a), b1(args.b)
        res = i1.ore_multipliers(a, b, cap=args.cap)
        print(f"u = {res.u}")
        print(f"v = {res.v}")
        print(f"u*{args.a} == v*{args.b} : {str(res.check(a, b)).lower()}")
    elif sub == "act":
        print(i1.format_qx(i1.act(el(args.expr), _parse_qx(args.poly))))
    return EXIT_OK


def _parse_qx(text: str):
    """A polynomial in ``x`` in the operator grammar, read off by applying it to 1."""
    from . import i1
    return i1.act(i1.parse_element(text), {0: 1})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orelab", description=__doc__)
    p.add_argument("--version", action="version", version=f"orelab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def ring_common(sp):
        sp.add_argument("ring", help="ring spec file, or the name of a bundled corpus ring")
        sp.add_argument("--max-enum", type=int, default=12,
                        help="largest ring size for exhaustive multiplicative-set enumeration")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", choices=["json", "text"], default="text")
        sp.add_argument("-o", "--output", help="write the report to this file")

    a = sub.add_parser("analyze", help="Ass, largest denominator sets, maxDen and radicals")
    ring_common(a)
    a.add_argument("--side", choices=sorted(SIDE_CHOICES), default="both")
    a.add_argument("--lattice", action="store_true", help="include the Den0 lattice")
    a.add_argument("--no-verify", action="store_true", help="skip the verification summary")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the identity checks")
    ring_common(v)
    v.add_argument("--suite", choices=["paper"], default="paper")
    v.add_argument("--inject-fault", action="store_true",
                   help="self-test: run the join check against a deliberately wrong join")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("corpus", help="list bundled rings")
    c.set_defaults(func=lambda args: (print("\n".join(f"{n}: {corpus_spec(n)}" for n in corpus_names())), 0)[1])

    i = sub.add_parser("i1", help="integro-differential operator calculator")
    isub = i.add_subparsers(dest="i1cmd", required=True)
    for name in ("normalize", "star", "fredholm", "factor"):
        s = isub.add_parser(name)
        s.add_argument("expr")
    s = isub.add_parser("mul")
    s.add_argument("a")
    s.add_argument("b")
    s = isub.add_parser("member")
    s.add_argument("expr")
    s.add_argument("--set", choices=sorted(_MEMBER_SETS), required=True)
    s = isub.add_parser("ore")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--cap", type=int, default=12, help="largest D-degree window to try")
    s = isub.add_parser("act")
    s.add_argument("expr")
    s.add_argument("poly", help="polynomial in x, e.g. '1 + x^2'")
    i.set_defaults(func=cmd_i1)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"orelab: {exc}", file=sys.stderr)
        return exc.code
    except Exception as exc:  # noqa: BLE001 - mapped to documented exit codes
        from .i1 import ExprSyntaxError, OreWindowExceeded, PreconditionError
        if isinstance(exc, ExprSyntaxError):
            print(f"orelab: parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        if isinstance(exc, PreconditionError):
            print(f"orelab: precondition violated: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        if isinstance(exc, OreWindowExceeded):
            print(f"orelab: budget refusal: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        if isinstance(exc, ValueError) and getattr(args, "command", "") == "i1":
            print(f"orelab: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        raise


if __name__ == "__main__":
    sys.exit(main())
