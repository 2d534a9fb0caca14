"""Command line interface.

Exit codes: 0 success, 1 verification failed, 2 malformed input,
3 internal cross-check failure (for instance the two Mycielskian
adjacency formulas disagreeing).
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, config
from . import io as qio
from .chromatic import chi_loc_exact, monotonicity_harness, verify_coloring
from .clique import (
    HomomorphismWitness,
    motzkin_straus,
    omega_exact_classical,
    verify_clique_witness,
    verify_homomorphism,
)
from .errors import (
    AxiomViolation,
    CommutativityFailure,
    DimensionMismatch,
    FormulaMismatch,
    InvalidCertificate,
    LambdaNotPSD,
    LemmaViolation,
    MalformedInput,
    NotAState,
    NotClassical,
    NotDeltaForm,
    NotFaithful,
    NotIrreflexive,
    NotIsometry,
    QGraphError,
    SelfLoop,
    UnknownGenerator,
    ValueAtLeastOne,
    ZeroVector,
)
from .generators import generate
from .mycielski import embedding_residuals, lift_coloring, mycielskian
from .qgraph import check_axioms, is_classical, operator_space
from .qspace import rel_residual

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_INTERNAL = 0, 1, 2, 3

_MALFORMED = (
    MalformedInput, NotAState, NotFaithful, NotDeltaForm, DimensionMismatch, SelfLoop,
    UnknownGenerator, FileNotFoundError, IsADirectoryError, UnicodeDecodeError,
)
_FAILED = (
    AxiomViolation, NotIrreflexive, NotIsometry, LambdaNotPSD, InvalidCertificate,
    CommutativityFailure, LemmaViolation, ZeroVector, ValueAtLeastOne, NotClassical,
)


@dataclass
class Report:
    input_digest: str = ""
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def add(self, name, passed, residual=None, tolerance=None, elapsed=0.0):
        self.checks.append({
            "name": name,
            "passed": bool(passed),
            "residual": None if residual is None else float(residual),
            "tolerance": None if tolerance is None else float(tolerance),
            "elapsed": round(float(elapsed), 6),
        })

    def timed(self, name, fn, tolerance=None):
        t0 = time.perf_counter()
        passed, residual = fn()
        self.add(name, passed, residual, tolerance, time.perf_counter() - t0)
        return passed

    @property
    def verdict(self):
        return all(c["passed"] for c in self.checks)

    def to_dict(self):
        return {
            "format_version": qio.FORMAT_VERSION,
            "kind": "report",
            "tool_version": __version__,
            "input_digest": self.input_digest,
            "verdict": "pass" if self.verdict else "fail",
            "checks": self.checks,
            "values": self.values,
        }

    def to_text(self):
        lines = [f"qmycielski {__version__}  input sha256 {self.input_digest or '-'}"]
        for c in self.checks:
            res = "-" if c["residual"] is None else f"{c['residual']:.3e}"
            tol = "-" if c["tolerance"] is None else f"{c['tolerance']:.1e}"
            flag = "PASS" if c["passed"] else "FAIL"
            lines.append(f"  [{flag}] {c['name']:<28} residual {res:>10}  tol {tol}  ({c['elapsed']:.3f}s)")
        for k, v in self.values.items():
            lines.append(f"  {k} = {v}")
        lines.append(f"verdict: {'pass' if self.verdict else 'fail'}")
        return "\n".join(lines)


def _emit(report, args):
    if getattr(args, "json", False):
        print(qio.dumps(report.to_dict()))
    else:
        print(report.to_text())
    if getattr(args, "report_out", None):
        qio.write_json(args.report_out, report.to_dict())


def _axiom_checks(report, g, tol):
    t0 = time.perf_counter()
    ax = check_axioms(g, tol)
    elapsed = time.perf_counter() - t0
    gns = g.gns
    r_delta = rel_residual(gns.mult @ gns.comult, g.delta_squared * np.eye(g.dim),
                           scale=g.delta_squared * np.sqrt(g.dim))
    report.add("delta_form", r_delta < tol, r_delta, tol)
    for name, res in ax.items():
        report.add(name, res.passed, res.residual, tol, elapsed / 3)
    report.values["reflexivity"] = ax.reflexivity.kind
    report.values["delta_squared"] = g.delta_squared
    report.values["dim"] = g.dim
    return ax


def _load(path, args, unchecked=None):
    unchecked = getattr(args, "unchecked", False) if unchecked is None else unchecked
    return qio.read_graph(path, unchecked=unchecked, tol=args.tol)


def cmd_generate(args):
    g = generate(args.name, *args.params)
    if args.format == "edges":
        qio.write_edge_list(args.output, g.dim, qio.edge_list_of(g))
    else:
        qio.write_graph(args.output, g)
    print(f"wrote {args.output}: {g!r}")
    return EXIT_OK


def cmd_check(args):
    g = _load(args.graph, args, unchecked=True)
    report = Report(qio.digest(args.graph))
    ax = _axiom_checks(report, g, args.tol)
    if ax.passed:
        report.values["operator_space_dim"] = operator_space(g, args.tol).dim
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_mycielski(args):
    g = _load(args.graph, args)
    res = mycielskian(g, args.r, args.tol)
    qio.write_graph(args.output, res.graph)
    report = Report(qio.digest(args.output))
    report.add("formula_cross_check", True, res.graph.metadata["formula_residual"], args.tol)
    _axiom_checks(report, res.graph, args.tol)
    iso, total = embedding_residuals(res)
    report.add("embeddings_orthonormal", iso < args.tol, iso, args.tol)
    report.add("embeddings_resolve_identity", total < args.tol, total, args.tol)
    report.values["r"] = args.r
    if args.iota1:
        qio.write_json(args.iota1, qio.isometry_to_dict(
            HomomorphismWitness(
                res.embeddings[1])))
    if not args.report_out:
        args.report_out = str(Path(args.output).with_suffix("")) + ".report.json"
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_chromatic(args):
    g = _load(args.graph, args)
    report = Report(qio.digest(args.graph))
    classical = is_classical(g, args.tol)
    cert = None
    if args.verify:
        cert = qio.certificate_from_dict(qio.read_json(args.verify))
        res = verify_coloring(g, cert, args.tol)
        report.add("coloring_certificate", res.valid, res.worst_residual, args.tol)
        report.values["certificate_colors"] = cert.colors
    if classical:
        exact = chi_loc_exact(g)
        report.values["chi_loc"] = exact.chi
        print(exact.chi)
        if args.certificate_out:
            qio.write_json(args.certificate_out, qio.certificate_to_dict(exact.certificate))
    elif not args.verify:
        raise NotClassical("χ_loc can only be computed for classical graphs; pass --verify CERT")
    if args.compare_mycielski:
        r = args.compare_mycielski
        if classical:
            (row,) = monotonicity_harness(g, [r], args.tol)
            report.values["chi_loc_mycielski"] = row.chi_mu
            report.values["bounds"] = f"{row.chi_g} <= {row.chi_mu} <= {row.chi_g + 1} (tight: {row.tight})"
            report.add("chromatic_sandwich", row.lower_ok and row.upper_ok)
        elif cert is not None and report.verdict:
            lifted = lift_coloring(g, r, cert, args.tol)
            mu = mycielskian(g, r, args.tol).graph
            res = verify_coloring(mu, lifted, args.tol)
            report.add("lifted_certificate", res.valid, res.worst_residual, args.tol)
            report.values["bounds"] = (
                f"chi(G) <= chi(mu_{r - 1}(G)) <= {cert.colors + 1} (lifted certificate)"
            )
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_clique(args):
    g = _load(args.graph, args)
    report = Report(qio.digest(args.graph))
    if args.witness:
        w = qio.witness_from_dict(qio.read_json(args.witness))
        res = verify_clique_witness(g, w, args.tol)
        report.add("clique_witness", res.valid, res.worst_residual, args.tol)
        report.values["witness_size"] = len(w)
    if is_classical(g, args.tol):
        exact = omega_exact_classical(g)
        report.values["omega"] = exact.omega
        report.values["clique"] = [v + 1 for v in exact.vertices]
        print(exact.omega)
        if args.witness_out:
            qio.write_json(args.witness_out, qio.witness_to_dict(exact.witness))
    elif not args.witness:
        raise NotClassical("ω can only be computed for classical graphs; pass --witness W")
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_motzkin_straus(args):
    g = _load(args.graph, args)
    report = Report(qio.digest(args.graph))
    res = motzkin_straus(g, args.cone, args.restarts, args.iters, args.seed, args.tol)
    report.values["cone"] = args.cone
    report.values["value"] = res.value
    report.values["omega_ms"] = res.omega_ms
    if res.certified is not None:
        report.values["omega_exact"] = res.exact_omega
        report.add("motzkin_straus_identity", res.certified, abs(res.value - (1 - 1 / res.exact_omega)), 1e-6)
    else:
        report.values["note"] = "best value found; global optimality not certified"
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_hom(args):
    g = _load(args.source, args)
    f = _load(args.target, args)
    lam = qio.matrix_from_file(args.lam) if args.lam else None
    w = qio.isometry_from_dict(qio.read_json(args.isometry), lam)
    report = Report(qio.digest(args.isometry))
    res = verify_homomorphism(g, f, w, args.tol)
    report.add("homomorphism", res.valid, res.worst_residual, args.tol)
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_report(args):
    args.json = True
    g = _load(args.graph, args, unchecked=True)
    report = Report(qio.digest(args.graph))
    ax = _axiom_checks(report, g, args.tol)
    if ax.passed:
        report.values["operator_space_dim"] = operator_space(g, args.tol).dim
        for r in (1, 2, 3):
            t0 = time.perf_counter()
            res = mycielskian(g, r, args.tol)
            mu_ax = check_axioms(res.graph, args.tol)
            worst = max(v.residual for _, v in mu_ax.items())
            report.add(f"mycielski_r{r}_axioms", mu_ax.passed, worst, args.tol, time.perf_counter() - t0)
            report.add(f"mycielski_r{r}_formula", True, res.graph.metadata["formula_residual"], args.tol)
            if ax.reflexivity.kind == "irreflexive":
                hom = verify_homomorphism(
                    g, res.graph,
                    HomomorphismWitness(
                        res.embeddings[1]),
                    args.tol)
                report.add(f"mycielski_r{r}_subgraph", hom.valid, hom.worst_residual, args.tol)
        if is_classical(g, args.tol):
            report.values["chi_loc"] = chi_loc_exact(g).chi
            report.values["omega"] = omega_exact_classical(g).omega
            if ax.reflexivity.kind == "irreflexive":
                rows = monotonicity_harness(g, [1, 2, 3], args.tol)
                report.values["chi_loc_mycielski"] = {f"r{row.r}": row.chi_mu for row in rows}
    if args.output:
        qio.write_json(args.output, report.to_dict())
    _emit(report, args)
    return EXIT_OK if report.verdict else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--report-out", help="also write the JSON report here")

    p = argparse.ArgumentParser(prog="qmycielski", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", parents=[common], help="write a named graph")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--format", choices=("json", "edges"), default="json")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("check", parents=[common], help="run the axiom battery")
    s.add_argument("graph")
    s.add_argument("--unchecked", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("mycielski", parents=[common], help="build mu_{R-1}(G)")
    s.add_argument("graph")
    s.add_argument("-r", type=int, required=True)
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--iota1", help="write the embedding of copy 1 as an isometry file")
    s.set_defaults(func=cmd_mycielski)

    s = sub.add_parser("chromatic", parents=[common], help="exact chi_loc or certificate check")
    s.add_argument("graph")
    s.add_argument("--verify", metavar="CERT")
    s.add_argument("--compare-mycielski", type=int, metavar="R")
    s.add_argument("--certificate-out")
    s.set_defaults(func=cmd_chromatic)

    s = sub.add_parser("clique", parents=[common], help="exact omega or witness check")
    s.add_argument("graph")
    s.add_argument("--witness")
    s.add_argument("--witness-out")
    s.set_defaults(func=cmd_clique)

    s = sub.add_parser("motzkin-straus", parents=[common], help="Motzkin-Straus clique program")
    s.add_argument("graph")
    s.add_argument("--cone", choices=("simplex", "psd"), default="simplex")
    s.add_argument("--restarts", type=int, default=50)
    s.add_argument("--iters", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_motzkin_straus)

    s = sub.add_parser("hom", parents=[common], help="verify a homomorphism witness G -> F")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--isometry", required=True)
    s.add_argument("--lambda", dest="lam")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("report", parents=[common], help="full battery as one JSON document")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FormulaMismatch as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _MALFORMED as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except _FAILED as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except QGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
