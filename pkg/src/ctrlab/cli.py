"""Command-line surface: parse inputs, dispatch verdicts, serialize reports.

Subcommands cover the five ring families::

    ctrlab schubert --index gamma.json      Schubert cycle by index
    ctrlab cycle    --n 9                   cycle-graph Ehrhart ring
    ctrlab hibi     --poset p.json          Hibi ring of a poset
    ctrlab perfect  --graph g.json          perfect-graph Ehrhart ring
    ctrlab perfect  --poset p.json          ... via the comparability graph
    ctrlab det      --m 2 --n 3 --t 2       generic determinantal ring
    ctrlab verify   report.json             re-validate an emitted report

Exit codes: 0 = verdict computed, 2 = invalid input, 3 = honest
semidecision (inconclusive or certified only at the stated bounds; scripts
can escalate ``--degree-bound`` / ``--power-bound``).

JSON reports are canonical — sorted keys, integers only, no timing — so
identical inputs and flags produce byte-identical output; ``--format text``
adds the human-readable kappa tables, witness vectors and timing.  The
environment variable ``CTRLAB_THREADS`` caps internal parallelism (scans
currently run sequentially, which trivially honors any cap).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Optional

from .cycles import CycleError, cycle_ctr_verdict, cycle_system, minimal_prime_member
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    comparability_graph,
    maximal_cliques,
    necessary_condition,
    perfect_system,
)
from .lattice import (
    DecompositionWitness,
    LatticeError,
    LatticePoint,
    check_membership,
    decompose,
)
from .posets import Poset, PosetError, build_poset, hibi_ctr_scan, order_polytope_system
from .schubert import SchubertError, SchubertIndex, determinantal_ctr, schubert_verdict
from .verdicts import (
    Bounds,
    CliqueGapCertificate,
    DeterminantalCertificate,
    GorensteinWitness,
    RadicalWitness,
    ScanCertificate,
    SchubertCertificate,
    Verdict,
    VerdictKind,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_INCONCLUSIVE = 3


class InputError(Exception):
    """Schema violation or unusable input; maps to exit code 2."""


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_json(path: str) -> Any:
    text = _read_source(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _string_list(obj: Any, field: str) -> list[str]:
    if not isinstance(obj, list) or not all(isinstance(x, str) for x in obj):
        raise InputError(f"field {field!r} must be a list of strings")
    return obj


def _pair_list(obj: Any, field: str) -> list[tuple[str, str]]:
    if not isinstance(obj, list):
        raise InputError(f"field {field!r} must be a list of pairs")
    out = []
    for i, item in enumerate(obj):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise InputError(f"{field}[{i}]: expected a pair of element ids")
        out.append((item[0], item[1]))
    return out


def parse_poset_json(data: Any, source: str = "<input>") -> Poset:
    if not isinstance(data, dict):
        raise InputError(f"{source}: poset input must be a JSON object")
    elements = _string_list(data.get("elements"), "elements")
    covers = _pair_list(data.get("covers", []), "covers")
    try:
        return build_poset(elements, covers)
    except PosetError as exc:
        raise InputError(f"{source}: {exc}") from exc


def parse_graph_json(data: Any, source: str = "<input>") -> Graph:
    if not isinstance(data, dict):
        raise InputError(f"{source}: graph input must be a JSON object")
    vertices = _string_list(data.get("vertices"), "vertices")
    edges = _pair_list(data.get("edges", []), "edges")
    try:
        return build_graph(vertices, edges)
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from exc


def parse_schubert_json(data: Any, source: str = "<input>") -> SchubertIndex:
    if not isinstance(data, dict):
        raise InputError(f"{source}: index input must be a JSON object")
    m, n, gamma = data.get("m"), data.get("n"), data.get("gamma")
    if not isinstance(m, int) or not isinstance(n, int):
        raise InputError(f"{source}: fields 'm' and 'n' must be integers")
    if not isinstance(gamma, list) or not all(isinstance(x, int) for x in gamma):
        raise InputError(f"{source}: field 'gamma' must be a list of integers")
    try:
        return SchubertIndex.of(m, n, gamma)
    except SchubertError as exc:
        raise InputError(f"{source}: {exc}") from exc


def parse_input(path: str, schema: str):
    """Parse a poset/graph/schubert JSON document from a path or ``-``."""
    data = _load_json(path)
    if schema == "poset":
        return parse_poset_json(data, path)
    if schema == "graph":
        return parse_graph_json(data, path)
    if schema == "schubert":
        return parse_schubert_json(data, path)
    raise InputError(f"unknown schema {schema!r}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _point_json(p: LatticePoint) -> dict:
    return {"values": {k: v for k, v in p.values}, "degree": p.degree}


def _point_from_json(obj: dict) -> LatticePoint:
    return LatticePoint.of(obj["values"], obj["degree"])


def _decomposition_json(w: DecompositionWitness) -> dict:
    return {
        "eta": _point_json(w.eta),
        "zeta": _point_json(w.zeta),
        "power": w.power,
    }


def witness_json(witness: object) -> dict:
    if isinstance(witness, GorensteinWitness):
        return {"type": "unit_decomposition", **_decomposition_json(witness.decomposition)}
    if isinstance(witness, RadicalWitness):
        out: dict[str, Any] = {"type": "radical_monomial", "mu": _point_json(witness.mu)}
        if witness.power is not None:
            out["power"] = witness.power
        if witness.decomposition is not None:
            out["eta"] = _point_json(witness.decomposition.eta)
            out["zeta"] = _point_json(witness.decomposition.zeta)
        if witness.prime_indices:
            out["prime_indices"] = list(witness.prime_indices)
        return out
    if isinstance(witness, ScanCertificate):
        return {
            "type": "scan",
            "degree_bound": witness.degree_bound,
            "power_bound": witness.power_bound,
            "candidates": witness.candidates,
            "decomposed": witness.decomposed,
            "gorenstein_excluded": witness.gorenstein_excluded,
        }
    if isinstance(witness, SchubertCertificate):
        out = {"type": "kappa", "gamma": list(witness.entries)}
        if witness.degenerate:
            out["degenerate"] = True
            return out
        out.update(
            kappa=list(witness.kappa),
            kappa_max=witness.kappa_max,
            kappa_min=witness.kappa_min,
            max_indices=list(witness.max_indices),
            min_indices=list(witness.min_indices),
            enter_max=list(witness.enter_max),
            enter_min=list(witness.enter_min),
        )
        if witness.sigmas:
            out["sigmas"] = [list(s) for s in witness.sigmas]
        if witness.trace_degree is not None:
            out["trace_degree"] = witness.trace_degree
            out["power"] = witness.power
        return out
    if isinstance(witness, DeterminantalCertificate):
        return {
            "type": "determinantal_trace",
            "minor_size": witness.minor_size,
            "power": witness.power,
        }
    if isinstance(witness, CliqueGapCertificate):
        out = {
            "type": "clique_gap",
            "k": witness.k,
            "k_prime": witness.k_prime,
            "cliques": [list(c) for c in witness.cliques],
        }
        if witness.scan_candidates is not None:
            out["scan_candidates"] = witness.scan_candidates
            out["scan_nondecomposable"] = witness.scan_nondecomposable
        return out
    raise TypeError(f"unserializable witness {type(witness).__name__}")


@dataclass
class Report:
    family: str
    input_echo: dict
    bounds: Bounds
    verdict: Verdict
    flags: dict
    timing_ms: int

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "input": self.input_echo,
            "bounds": {"degree": self.bounds.degree, "power": self.bounds.power},
            "verdict": self.verdict.kind.value,
            "at_bound": self.verdict.is_semidecision,
            "witness": witness_json(self.verdict.witness),
            "flags": self.flags,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"family : {self.family}", f"verdict: {self.verdict.kind.value}"]
        if self.verdict.is_semidecision:
            lines.append(
                f"         (certified only at degree bound {self.bounds.degree}, "
                f"power bound {self.bounds.power})"
            )
        w = self.verdict.witness
        if isinstance(w, SchubertCertificate) and not w.degenerate:
            lines.append("kappa  : " + " ".join(f"k{i}={v}" for i, v in enumerate(w.kappa)))
            lines.append(f"         max={w.kappa_max} min={w.kappa_min} gap={w.kappa_max - w.kappa_min}")
        for name, point in _witness_points(w):
            lines.append(f"{name:7s}: deg {point.degree}, " + " ".join(
                f"{k}={v}" for k, v in point.values
            ))
        lines.append(f"timing : {self.timing_ms} ms")
        return "\n".join(lines) + "\n"


def _witness_points(w: object):
    if isinstance(w, GorensteinWitness):
        yield "eta", w.decomposition.eta
        yield "zeta", w.decomposition.zeta
    elif isinstance(w, RadicalWitness):
        yield "mu", w.mu
        if w.decomposition is not None:
            yield "eta", w.decomposition.eta
            yield "zeta", w.decomposition.zeta


# ---------------------------------------------------------------------------
# family runners
# ---------------------------------------------------------------------------


def _poset_echo(p: Poset) -> dict:
    return {"elements": list(p.elements), "covers": [list(c) for c in p.covers]}


def _graph_echo(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def run_schubert(index: SchubertIndex, oracle: bool) -> Report:
    start = time.perf_counter()
    verdict = schubert_verdict(index)
    return Report(
        family="schubert",
        input_echo={"m": index.m, "n": index.n, "gamma": list(index.entries)},
        bounds=Bounds(),
        verdict=verdict,
        flags={"oracle": oracle},
        timing_ms=int((time.perf_counter() - start) * 1000),
    )


def run_cycle(n: int, degree_bound: int, oracle: bool) -> Report:
    start = time.perf_counter()
    verdict = cycle_ctr_verdict(n, degree_bound, use_oracle=oracle)
    return Report(
        family="cycle",
        input_echo={"n": n},
        bounds=Bounds(degree=degree_bound),
        verdict=verdict,
        flags={"oracle": oracle},
        timing_ms=int((time.perf_counter() - start) * 1000),
    )


def run_hibi(poset: Poset, degree_bound: int, power_bound: Optional[int], oracle: bool) -> Report:
    start = time.perf_counter()
    if power_bound is None:
        power_bound = len(poset.elements) + 2
    verdict = hibi_ctr_scan(poset, degree_bound, power_bound, use_oracle=oracle)
    return Report(
        family="hibi",
        input_echo=_poset_echo(poset),
        bounds=Bounds(degree=degree_bound, power=power_bound),
        verdict=verdict,
        flags={"oracle": oracle},
        timing_ms=int((time.perf_counter() - start) * 1000),
    )


def run_perfect(
    graph: Graph,
    degree_bound: int,
    power_bound: Optional[int],
    oracle: bool,
    deep: bool,
) -> Report:
    start = time.perf_counter()
    if power_bound is None:
        power_bound = len(graph.vertices) + 2
    verdict = necessary_condition(
        graph,
        k_max=power_bound,
        deep_scan_degree_bound=degree_bound if deep else None,
        use_oracle=oracle,
    )
    return Report(
        family="perfect",
        input_echo=_graph_echo(graph),
        bounds=Bounds(degree=degree_bound, power=power_bound),
        verdict=verdict,
        flags={
            "oracle": oracle,
            "assumed_perfect": not graph.certified_perfect,
            "deep_scan": deep,
        },
        timing_ms=int((time.perf_counter() - start) * 1000),
    )


def run_det(m: int, n: int, t: int) -> Report:
    start = time.perf_counter()
    verdict = determinantal_ctr(m, n, t)
    return Report(
        family="determinantal",
        input_echo={"m": m, "n": n, "t": t},
        bounds=Bounds(),
        verdict=verdict,
        flags={"oracle": False},
        timing_ms=int((time.perf_counter() - start) * 1000),
    )


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _recompute_report(report: dict) -> Report:
    family = report["family"]
    flags = report.get("flags", {})
    bounds = report.get("bounds", {})
    oracle = bool(flags.get("oracle", False))
    if family == "schubert":
        echo = report["input"]
        return run_schubert(parse_schubert_json(echo, "<report>"), oracle)
    if family == "cycle":
        return run_cycle(report["input"]["n"], bounds.get("degree") or 2, oracle)
    if family == "hibi":
        poset = parse_poset_json(report["input"], "<report>")
        return run_hibi(poset, bounds.get("degree") or 2, bounds.get("power"), oracle)
    if family == "perfect":
        graph = parse_graph_json(report["input"], "<report>")
        if not flags.get("assumed_perfect", True):
            graph = build_graph(graph.vertices, graph.edges, certified_perfect=True)
        return run_perfect(
            graph,
            bounds.get("degree") or 2,
            bounds.get("power"),
            oracle,
            bool(flags.get("deep_scan", False)),
        )
    if family == "determinantal":
        echo = report["input"]
        return run_det(echo["m"], echo["n"], echo["t"])
    raise InputError(f"unknown family {family!r}")


def _revalidate_decompositions(report: dict) -> list[str]:
    """Independent re-check of any lattice points in the witness: rebuild
    the family's system and run the membership predicates directly."""
    family = report["family"]
    witness = report.get("witness", {})
    problems: list[str] = []
    if family == "schubert" or family == "determinantal":
        return problems  # combinatorial certificates, re-derived by recompute
    if family == "cycle":
        system = cycle_system(report["input"]["n"])
    elif family == "hibi":
        system = order_polytope_system(parse_poset_json(report["input"], "<report>"))
    elif family == "perfect":
        system = perfect_system(parse_graph_json(report["input"], "<report>"))
    else:
        return [f"unknown family {family!r}"]

    kind = witness.get("type")
    if kind == "unit_decomposition":
        eta = _point_from_json(witness["eta"])
        zeta = _point_from_json(witness["zeta"])
        if not check_membership(system, 1, eta):
            problems.append("eta fails shift +1 membership")
        if not check_membership(system, -1, zeta):
            problems.append("zeta fails shift -1 membership")
        if not (eta + zeta).is_zero():
            problems.append("eta + zeta is not the zero monomial")
    elif kind == "radical_monomial":
        mu = _point_from_json(witness["mu"])
        if not check_membership(system, 0, mu):
            problems.append("mu fails shift 0 membership")
        elif decompose(system, mu) is not None:
            problems.append("mu decomposes after all")
        if "eta" in witness:
            eta = _point_from_json(witness["eta"])
            zeta = _point_from_json(witness["zeta"])
            power = witness.get("power", 1)
            if not check_membership(system, 1, eta):
                problems.append("power eta fails shift +1 membership")
            if not check_membership(system, -1, zeta):
                problems.append("power zeta fails shift -1 membership")
            if eta + zeta != mu.scale(power):
                problems.append("eta + zeta != power * mu")
        for i in witness.get("prime_indices", []):
            if not minimal_prime_member(report["input"]["n"], i, mu):
                problems.append(f"mu not in minimal prime {i}")
    return problems


def run_verify(path: str) -> int:
    report = _load_json(path)
    if not isinstance(report, dict):
        raise InputError(f"{path}: report must be a JSON object")
    problems = _revalidate_decompositions(report)
    recomputed = _recompute_report(report).to_json_obj()
    original = dict(report)
    if recomputed != original:
        problems.append("recomputed report differs from the stored one")
    if problems:
        for p in problems:
            print(f"verify: FAIL: {p}")
        return EXIT_INVALID_INPUT
    print("verify: OK")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctrlab",
        description="CTR classification of combinatorial rings with machine-checkable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, degree_default: int = 2):
        p.add_argument("--degree-bound", type=int, default=degree_default,
                       help="degree bound for certificate scans (default %(default)s)")
        p.add_argument("--power-bound", type=int, default=None,
                       help="power bound for radical searches (default: ground size + 2)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--oracle", action="store_true",
                       help="force the brute-force enumeration engine")

    p = sub.add_parser("schubert", help="classify a Schubert cycle by its index")
    p.add_argument("--index", required=True, metavar="PATH",
                   help="JSON {\"m\":..,\"n\":..,\"gamma\":[..]} (or - for stdin)")
    common(p)

    p = sub.add_parser("cycle", help="classify the Ehrhart ring of an n-cycle")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("hibi", help="bounded classification of a Hibi ring")
    p.add_argument("--poset", required=True, metavar="PATH",
                   help="JSON {\"elements\":[..],\"covers\":[[x,y],..]} (or - for stdin)")
    common(p)

    p = sub.add_parser("perfect", help="clique-gap classification for a perfect graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="PATH",
                     help="JSON {\"vertices\":[..],\"edges\":[[u,v],..]} (assumed perfect)")
    src.add_argument("--poset", metavar="PATH",
                     help="poset JSON; its comparability graph is certified perfect")
    p.add_argument("--no-deep-scan", action="store_true",
                   help="skip the bounded radical-vs-trace scan in the gap-1 case")
    common(p)

    p = sub.add_parser("det", help="classify a generic determinantal ring")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="re-validate an emitted JSON report")
    p.add_argument("report", metavar="REPORT", help="path to a report emitted by this tool")

    return parser


def execute(args: argparse.Namespace) -> tuple[Optional[Report], int]:
    if args.command == "schubert":
        index = parse_input(args.index, "schubert")
        report = run_schubert(index, args.oracle)
    elif args.command == "cycle":
        try:
            report = run_cycle(args.n, args.degree_bound, args.oracle)
        except CycleError as exc:
            raise InputError(str(exc)) from exc
    elif args.command == "hibi":
        poset = parse_input(args.poset, "poset")
        report = run_hibi(poset, args.degree_bound, args.power_bound, args.oracle)
    elif args.command == "perfect":
        if args.poset is not None:
            graph = comparability_graph(parse_input(args.poset, "poset"))
        else:
            graph = parse_input(args.graph, "graph")
        report = run_perfect(
            graph, args.degree_bound, args.power_bound, args.oracle,
            deep=not args.no_deep_scan,
        )
    elif args.command == "det":
        try:
            report = run_det(args.m, args.n, args.t)
        except SchubertError as exc:
            raise InputError(str(exc)) from exc
    else:
        raise InputError(f"unknown command {args.command!r}")
    code = EXIT_INCONCLUSIVE if report.verdict.is_semidecision else EXIT_OK
    return report, code


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args.report)
        report, code = execute(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (LatticeError, PosetError, GraphError, SchubertError, CycleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
