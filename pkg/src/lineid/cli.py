"""Command-line interface.

Every analysis command prints one JSON certificate record on stdout and a
one-line human summary on stderr. Exit codes: 0 affirmative or valid,
1 negative with witness, 2 inapplicable or precondition failure, 3 budget
exhausted, 64 unparseable arguments or input.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from . import arccodes, engine, generators, structure
from .digraph import Digraph, closed_in_neighborhood_set, digons, find_tt3, is_strongly_connected, semigirth
from .errors import BudgetExhausted, DigraphError, PreconditionError
from .kautz import factorization, k2k_identifying_code
from .line import arcs_to_line_vertices, heuchenne_check, iterated_line_digraph, line_digraph
from .textio import (
    arc_record,
    certificate,
    format_digraph,
    parse_arc_list,
    parse_digraph,
    parse_vertex_list,
    vertex_record,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INAPPLICABLE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3, 64


@dataclass(frozen=True)
class RunConfig:
    ell_cap: int = engine.DEFAULT_ELL_CAP
    hamiltonian_bound: int = arccodes.DEFAULT_HAMILTONIAN_BOUND
    oracle_order_bound: int = 12
    seed: int = 0
    tie_break: str = "lookahead"
    fallback_oracle: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> Digraph:
    try:
        return parse_digraph(_read(path))
    except DigraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _violation_record(graph: Digraph, violation) -> dict:
    rec = {"kind": violation.kind, "X": vertex_record(graph, violation.x)}
    if violation.kind == "not-separating":
        rec["Y"] = vertex_record(graph, violation.y)
        rec["closed_in_neighborhood"] = vertex_record(
            graph, closed_in_neighborhood_set(graph, violation.x))
    return rec


def _forbidden_record(graph: Digraph, witness: structure.ForbiddenWitness) -> dict:
    x, y = witness.separation_pair()
    return {
        "config": witness.kind,
        "binding": {name: graph.label(v) for name, v in sorted(witness.binding.items())},
        "binding_ids": dict(sorted(witness.binding.items())),
        "X": vertex_record(graph, x),
        "Y": vertex_record(graph, y),
        "closed_in_neighborhood": vertex_record(graph, closed_in_neighborhood_set(graph, x)),
    }


def _hypothesis_record(report: structure.HypothesisReport) -> dict:
    return {
        "line_digraph": report.is_line_digraph,
        "strongly_connected": report.strongly_connected,
        "four_cycle": report.is_four_cycle,
        "in_degree_one_on_digon": report.in_degree_one_on_digon,
        "applicable": report.applicable,
    }


# subcommand handlers: each returns (exit status, stdout text, stderr summary)


def cmd_gen(args, cfg):
    fam = args.family
    if fam == "kautz":
        g = generators.kautz(args.d, args.k)
    elif fam == "complete":
        g = generators.complete_symmetric(args.n)
    elif fam == "cycle":
        g = generators.directed_cycle(args.n)
    elif fam == "random":
        g = generators.random_strongly_connected(
            args.n, args.p, seed=args.seed, min_in=args.min_in, oriented=args.oriented)
    else:
        g = generators.fixture(args.name)
    return EXIT_OK, format_digraph(g), f"generated {fam}: order {g.order}, size {g.size}"


def cmd_line(args, cfg):
    g = _load(args.input)
    it = iterated_line_digraph(g, args.iterations)
    lineage = it.stages[-1].lineage if it.stages else None
    return EXIT_OK, format_digraph(it.graph, lineage), f"L^{args.iterations}: order {it.graph.order}"


def _semigirth_or_none(g):
    if g.order >= 2 and is_strongly_connected(g):
        return semigirth(g)
    return None


def cmd_info(args, cfg):
    g = _load(args.input)
    heu = heuchenne_check(g)
    tt3 = find_tt3(g)
    dg = digons(g)
    report = {
        "order": g.order,
        "size": g.size,
        "min_in_degree": g.min_in_degree,
        "min_out_degree": g.min_out_degree,
        "strongly_connected": g.order > 0 and is_strongly_connected(g),
        "oriented": not dg,
        "digons": len(dg),
        "line_digraph": heu is None,
        "heuchenne_witness": vertex_record(g, heu) if heu else None,
        "tt3_free": tt3 is None,
        "tt3_witness": vertex_record(g, tt3) if tt3 else None,
        "semigirth": _semigirth_or_none(g),
    }
    out = certificate(args.argv, g, "report", info=report)
    return EXIT_OK, out, f"order {g.order}, size {g.size}, line digraph: {heu is None}"


def cmd_semigirth(args, cfg):
    g = _load(args.input)
    value = semigirth(g)
    return EXIT_OK, certificate(args.argv, g, "value", semigirth=value), f"semigirth {value}"


def cmd_verify(args, cfg):
    g = _load(args.input)
    code = parse_vertex_list(_read(args.code), g)
    t0 = time.perf_counter()
    violation = engine.verify_identifying_code(g, code, args.ell, cfg.ell_cap)
    elapsed = time.perf_counter() - t0
    fields = {"ell": args.ell, "code": vertex_record(g, code)}
    if violation is None:
        out = certificate(args.argv, g, "valid", **fields)
        return EXIT_OK, out, f"valid (1,<={args.ell})-identifying code of size {len(code)} [{elapsed:.3f}s]"
    out = certificate(args.argv, g, "invalid", violation=_violation_record(g, violation), **fields)
    return EXIT_NEGATIVE, out, f"invalid: {violation.kind} [{elapsed:.3f}s]"


def cmd_admits(args, cfg):
    g = _load(args.input)
    violation = engine.admissibility_witness(g, args.ell, cfg.ell_cap)
    if violation is None:
        return EXIT_OK, certificate(args.argv, g, "admits", ell=args.ell), f"admits ell={args.ell}"
    out = certificate(args.argv, g, "does-not-admit", ell=args.ell,
                      violation=_violation_record(g, violation))
    return EXIT_NEGATIVE, out, f"does not admit ell={args.ell}"


def cmd_min_code(args, cfg):
    g = _load(args.input)
    t0 = time.perf_counter()
    try:
        res = engine.min_identifying_code(g, args.ell, args.budget, cfg.ell_cap)
    except engine.InfeasibleError as exc:
        out = certificate(args.argv, g, "infeasible", ell=args.ell,
                          violation=_violation_record(g, exc.violation))
        return EXIT_NEGATIVE, out, f"no (1,<={args.ell})-identifying code exists"
    elapsed = time.perf_counter() - t0
    counters = {"nodes_explored": res.nodes_explored}
    if not res.exact:
        out = certificate(args.argv, g, "budget-exhausted", ell=args.ell, counters=counters,
                          lower_bound=res.lower_bound, upper_bound=res.upper_bound, exact=False)
        return EXIT_BUDGET, out, f"budget exhausted; minimum lies in [{res.lower_bound}, {res.upper_bound}]"
    out = certificate(args.argv, g, "minimum", ell=args.ell, identifying_number=res.identifying_number,
                      code=vertex_record(g, res.code), counters=counters, exact=True)
    return EXIT_OK, out, f"identifying number {res.identifying_number} [{elapsed:.3f}s]"


def cmd_decide(args, cfg):
    g = _load(args.input)
    ell = args.ell
    fields: dict = {"ell": ell}
    if ell == 2:
        decision = structure.theorem1_decide(g)
        fields["hypotheses"] = _hypothesis_record(decision.hypotheses)
        if decision.applicable:
            fields["method"] = "forbidden-configurations"
            if decision.admits2:
                return EXIT_OK, certificate(args.argv, g, "admits", **fields), "admits ell=2"
            fields["witness"] = _forbidden_record(g, decision.witness)
            return (EXIT_NEGATIVE, certificate(args.argv, g, "does-not-admit", **fields),
                    f"does not admit ell=2 (configuration {decision.witness.kind})")
    else:
        report = structure.classify_capabilities(g, args.iterations, oracle_order_bound=-1)
        fields["rationale"] = list(report.rationale)
        if ell <= report.guaranteed:
            fields["method"] = "structure"
            return EXIT_OK, certificate(args.argv, g, "admits", **fields), f"admits ell={ell}"
        if report.impossible_from is not None and ell >= report.impossible_from:
            fields["method"] = "structure"
            w = report.witness
            if isinstance(w, structure.ForbiddenWitness):
                fields["witness"] = _forbidden_record(g, w)
            elif w is not None:
                fields["witness"] = _violation_record(g, w)
            return EXIT_NEGATIVE, certificate(args.argv, g, "does-not-admit", **fields), \
                f"does not admit ell={ell}"
    if not cfg.fallback_oracle:
        return EXIT_INAPPLICABLE, certificate(args.argv, g, "inapplicable", **fields), \
            "structure results do not apply; rerun with --fallback-oracle"
    fields["method"] = "oracle"
    violation = engine.admissibility_witness(g, ell, cfg.ell_cap)
    if violation is None:
        return EXIT_OK, certificate(args.argv, g, "admits", **fields), f"admits ell={ell} (oracle)"
    fields["witness"] = _violation_record(g, violation)
    return EXIT_NEGATIVE, certificate(args.argv, g, "does-not-admit", **fields), \
        f"does not admit ell={ell} (oracle)"


def _arc_code_fields(g, code):
    ld = line_digraph(g)
    line_code = arcs_to_line_vertices(ld.lineage, code.arcs)
    fields = {
        "provenance": code.provenance,
        "size": len(code.arcs),
        "arcs": arc_record(g, code.arcs),
        "line_digraph_code": vertex_record(ld.graph, line_code),
        "arc_verification": "valid" if arccodes.verify_arc_identifying_code(g, code) is None else "invalid",
        "line_verification": "valid" if engine.verify_identifying_code(ld.graph, line_code, 1) is None
        else "invalid",
    }
    if g.min_in_degree >= 2 and is_strongly_connected(g):
        fields["lower_bound"] = arccodes.lower_bound_line_idnumber(g)
    return fields


def cmd_construct(args, cfg):
    g = _load(args.input)
    if args.method == "algo1":
        budget = arccodes.DEFAULT_ALGO1_BUDGET if args.budget is None else args.budget
        res = arccodes.algorithm1(g, cfg.tie_break, budget)
        fields = _arc_code_fields(g, res.code)
        fields["predicted_size"] = res.predicted_size
        fields["u_minus"] = vertex_record(g, res.u_minus)
        if args.trace:
            fields["trace"] = [dict(step) for step in res.trace]
        return EXIT_OK, certificate(args.argv, g, "constructed", **fields), \
            f"greedy arc construction: {len(res.code.arcs)} arcs (predicted {res.predicted_size})"
    cycle = arccodes.find_hamiltonian_cycle(g, args.budget, cfg.hamiltonian_bound)
    if cycle is None:
        return EXIT_INAPPLICABLE, certificate(args.argv, g, "inapplicable", reason="no Hamiltonian cycle"), \
            "method inapplicable: no Hamiltonian cycle"
    code = arccodes.hamiltonian_code(g, cycle)
    fields = _arc_code_fields(g, code)
    fields["hamiltonian_cycle"] = {"ids": list(cycle)}
    if g.labels is not None:
        fields["hamiltonian_cycle"]["labels"] = [g.label(v) for v in cycle]
    return EXIT_OK, certificate(args.argv, g, "constructed", **fields), \
        f"Hamiltonian complement: {len(code.arcs)} arcs"


def cmd_arc_verify(args, cfg):
    g = _load(args.input)
    code = parse_arc_list(_read(args.code), g)
    violation = arccodes.verify_arc_identifying_code(g, code)
    fields = {"arcs": arc_record(g, code)}
    if violation is None:
        return EXIT_OK, certificate(args.argv, g, "valid", **fields), f"valid arc-identifying code ({len(code)} arcs)"
    fields["violation"] = {"kind": violation.kind, "arcs": arc_record(g, violation.arcs)}
    return EXIT_NEGATIVE, certificate(args.argv, g, "invalid", **fields), f"invalid: {violation.kind}"


def cmd_factorize(args, cfg):
    factors = factorization(args.d, args.k)
    g = generators.kautz(args.d, args.k)
    rec = [{"index": f.index, "arcs": arc_record(g, f.arcs)} for f in factors]
    return EXIT_OK, certificate(args.argv, g, "factorization", d=args.d, k=args.k, factors=rec), \
        f"K({args.d},{args.k}) split into {len(factors)} 1-factors"


def cmd_kautz_code(args, cfg):
    d, k = args.d, args.k
    if d == 2:
        code = k2k_identifying_code(k)
        graph, vertices, method = code.graph, code.vertices, "factor-F1"
    else:
        parent = generators.kautz(d, k - 1) if k >= 2 else None
        if parent is None:
            raise PreconditionError("needs k >= 2")
        cycle = arccodes.find_hamiltonian_cycle(parent, args.budget, cfg.hamiltonian_bound)
        if cycle is None:
            return EXIT_INAPPLICABLE, certificate(args.argv, None, "inapplicable"), "no Hamiltonian cycle"
        arc_code = arccodes.hamiltonian_code(parent, cycle)
        ld = line_digraph(parent)
        graph, vertices, method = ld.graph, arcs_to_line_vertices(ld.lineage, arc_code.arcs), "hamiltonian"
    violation = engine.verify_identifying_code(graph, vertices, 1)
    expected = arccodes.kautz_identifying_number(d, k)
    fields = {
        "d": d, "k": k, "method": method, "size": len(vertices),
        "identifying_number": expected,
        "code": vertex_record(graph, vertices),
        "verification": "valid" if violation is None else "invalid",
    }
    status = EXIT_OK if violation is None and len(vertices) == expected else EXIT_NEGATIVE
    outcome = "valid" if status == EXIT_OK else "invalid"
    return status, certificate(args.argv, graph, outcome, **fields), \
        f"K({d},{k}) code of size {len(vertices)} ({outcome})"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lineid", description="Identifying codes in line digraphs and Kautz digraphs.")
    p.add_argument("--ell-cap", type=int, default=engine.DEFAULT_ELL_CAP)
    p.add_argument("--hamiltonian-bound", type=int, default=arccodes.DEFAULT_HAMILTONIAN_BOUND)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a digraph")
    gsub = gen.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gsub.add_parser("kautz")
    g.add_argument("-d", type=int, required=True)
    g.add_argument("-k", type=int, required=True)
    gsub.add_parser("complete").add_argument("-n", type=int, required=True)
    gsub.add_parser("cycle").add_argument("-n", type=int, required=True)
    g = gsub.add_parser("random")
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-p", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--min-in", type=int, default=0)
    g.add_argument("--oriented", action="store_true")
    gsub.add_parser("fixture").add_argument("name", choices=generators.FIXTURES)
    gen.set_defaults(func=cmd_gen)

    s = sub.add_parser("line", help="iterated line digraph with lineage")
    s.add_argument("--iterations", "-k", type=int, default=1)
    s.add_argument("input")
    s.set_defaults(func=cmd_line)

    for name, func in (("info", cmd_info), ("semigirth", cmd_semigirth)):
        s = sub.add_parser(name)
        s.add_argument("input")
        s.set_defaults(func=func)

    s = sub.add_parser("verify", help="check a (1,<=l)-identifying code")
    s.add_argument("--code", required=True)
    s.add_argument("--ell", type=int, default=1)
    s.add_argument("input")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("admits", help="does any (1,<=l)-identifying code exist")
    s.add_argument("--ell", type=int, default=1)
    s.add_argument("input")
    s.set_defaults(func=cmd_admits)

    s = sub.add_parser("min-code", help="exact minimum identifying code")
    s.add_argument("--ell", type=int, default=1)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("input")
    s.set_defaults(func=cmd_min_code)

    s = sub.add_parser("decide", help="decide admissibility from structure results")
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--iterations", type=int, default=None,
                   help="k when the input is known to be L^k of some digraph")
    s.add_argument("--fallback-oracle", action="store_true")
    s.add_argument("input")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("construct", help="build an arc-identifying code")
    s.add_argument("--method", choices=("algo1", "hamiltonian"), required=True)
    s.add_argument("--tie-break", choices=arccodes.TIE_BREAKS, default="lookahead")
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--trace", action="store_true")
    s.add_argument("input")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("arc-verify", help="check an arc-identifying code")
    s.add_argument("--code", required=True)
    s.add_argument("input")
    s.set_defaults(func=cmd_arc_verify)

    s = sub.add_parser("factorize", help="1-factorization of K(d,k)")
    s.add_argument("-d", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_factorize)

    s = sub.add_parser("kautz-code", help="minimum identifying code of K(d,k)")
    s.add_argument("-d", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_kautz_code)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    args.argv = argv
    cfg = RunConfig(
        ell_cap=args.ell_cap,
        hamiltonian_bound=args.hamiltonian_bound,
        tie_break=getattr(args, "tie_break", "lookahead"),
        fallback_oracle=getattr(args, "fallback_oracle", False),
    )
    try:
        status, out, summary = args.func(args, cfg)
    except UsageError as exc:
        print(f"lineid: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        stdout.write(certificate(argv, None, "budget-exhausted",
                                 counters={"nodes_explored": exc.nodes_explored}))
        print(f"budget exhausted: {exc}", file=stderr)
        return EXIT_BUDGET
    except (PreconditionError, DigraphError) as exc:
        stdout.write(certificate(argv, None, "inapplicable", reason=str(exc)))
        print(f"inapplicable: {exc}", file=stderr)
        return EXIT_INAPPLICABLE
    stdout.write(out)
    print(summary, file=stderr)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
