"""Command-line front end.

Subcommands: energy, spectrum, certify, generate, power, complement,
version.  Files use the `.hg` format; ``-`` reads from stdin.  Exit codes:
0 success / certification pass, 1 certification failure, 2 input error,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import __version__, certify, constructions, energy
from ._fmt import g6, g17
from .errors import (
    HyperenergyError,
    NegativeGramEigenvalue,
    NoConvergence,
)
from .hypergraph import (
    Hypergraph,
    complement,
    complete_k_graph,
    disjoint_edges,
    format_hg,
    parse_hg,
    random_uniform,
)
from .spectra import DEFAULT_TOLERANCES, Tolerances, sym_eigenvalues

EXIT_OK = 0
EXIT_CERT_FAIL = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _read_hypergraph(path: str) -> Hypergraph:
    if path == "-":
        return parse_hg(sys.stdin.read())
    return parse_hg(Path(path).read_text(encoding="utf-8"))


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def _tolerances(args: argparse.Namespace) -> Tolerances:
    if getattr(args, "tol", None) is None:
        return DEFAULT_TOLERANCES
    return dataclasses.replace(DEFAULT_TOLERANCES, check_rel=args.tol)


def _energy_text(report: energy.EnergyReport) -> str:
    lines = [
        f"n = {report.n}",
        f"m = {report.m}",
        f"k = {report.k}",
        f"be = {g6(report.be)}",
        f"qe = {g6(report.qe)}",
        f"line_energy = {g6(report.line_energy)}",
        f"omega = {report.omega}",
        f"avg_degree = {g6(report.avg_degree)}",
        f"spectral_radius_q = {g6(report.spectral_radius_q)}",
        f"zagreb = {report.zagreb}",
        f"zfrak = {g6(report.zfrak)}",
        f"parity = {report.parity}",
    ]
    return "\n".join(lines) + "\n"


def _energy_csv(report: energy.EnergyReport) -> str:
    header = (
        "n,m,k,be,qe,line_energy,omega,avg_degree,"
        "spectral_radius_q,zagreb,zfrak,parity"
    )
    row = ",".join(
        [
            str(report.n),
            str(report.m),
            str(report.k),
            g17(report.be),
            g17(report.qe),
            g17(report.line_energy),
            str(report.omega),
            g17(report.avg_degree),
            g17(report.spectral_radius_q),
            str(report.zagreb),
            g17(report.zfrak),
            report.parity,
        ]
    )
    return header + "\n" + row + "\n"


def _cmd_energy(args: argparse.Namespace) -> int:
    h = _read_hypergraph(args.path)
    report = energy.energy_report(h, _tolerances(args))
    if args.format == "json":
        _write_output(energy.report_json(report) + "\n", args.out)
    elif args.format == "csv":
        _write_output(_energy_csv(report), args.out)
    else:
        _write_output(_energy_text(report), args.out)
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    h = _read_hypergraph(args.path)
    tol = _tolerances(args)
    builders = {
        "Q": constructions.signless_laplacian,
        "AL": constructions.line_multigraph,
        "AC": constructions.clique_multigraph,
        "AS": constructions.subdivision_adjacency,
    }
    spectrum = sym_eigenvalues(builders[args.which](h), tol)
    _write_output("".join(g17(v) + "\n" for v in spectrum.values), args.out)
    return EXIT_OK


def _certify_text(report: certify.CertificationReport) -> str:
    lines = [f"instance: {report.instance}"]
    for c in report.checks:
        if c.skipped_reason is not None:
            lines.append(f"{c.name}: SKIP ({c.skipped_reason})")
            continue
        status = "ok" if c.holds else "FAIL"
        eq = " equality-expected" if c.equality_expected else ""
        lines.append(
            f"{c.name}: {status} {g6(c.lhs)} {c.relation} {g6(c.rhs)} "
            f"slack={g6(c.slack)}{eq}"
        )
    lines.append(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _cmd_certify(args: argparse.Namespace) -> int:
    h = _read_hypergraph(args.path)
    power = None
    if args.s is not None or args.r is not None:
        if args.s is None or args.r is None:
            raise HyperenergyError("power checks need both --s and --r")
        power = (args.s, args.r)
    report = certify.run_all(h, power_params=power, tol=_tolerances(args))
    if args.format == "json":
        _write_output(certify.report_json(report) + "\n", args.out)
    elif args.format == "csv":
        _write_output(certify.report_csv(report), args.out)
    else:
        _write_output(_certify_text(report), args.out)
    return EXIT_OK if report.overall_pass else EXIT_CERT_FAIL


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "random":
        h = random_uniform(args.n, args.k, args.p, args.seed)
    elif args.kind == "complete":
        h = complete_k_graph(args.n, args.k)
    else:
        h = disjoint_edges(args.k, args.m, args.isolated)
    _write_output(format_hg(h), args.out)
    return EXIT_OK


def _cmd_power(args: argparse.Namespace) -> int:
    h = _read_hypergraph(args.path)
    _write_output(format_hg(constructions.power_hypergraph(h, args.s, args.r)), args.out)
    return EXIT_OK


def _cmd_complement(args: argparse.Namespace) -> int:
    h = _read_hypergraph(args.path)
    _write_output(format_hg(complement(h)), args.out)
    return EXIT_OK


def _cmd_version(_args: argparse.Namespace) -> int:
    sys.stdout.write(f"hyperenergy {__version__}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperenergy",
        description="Energies of k-uniform hypergraphs: reports, spectra, and "
        "numeric certification of their known bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats: bool = True) -> None:
        if formats:
            p.add_argument(
                "--format", choices=("json", "csv", "text"), default="json"
            )
        p.add_argument("--tol", type=float, default=None, help="override the relative check tolerance")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_energy = sub.add_parser("energy", help="scalar invariants of one hypergraph")
    p_energy.add_argument("path", help="`.hg` file, or - for stdin")
    add_common(p_energy)
    p_energy.set_defaults(func=_cmd_energy)

    p_spectrum = sub.add_parser("spectrum", help="eigenvalues of a derived matrix")
    p_spectrum.add_argument("path")
    p_spectrum.add_argument("which", choices=("Q", "AL", "AC", "AS"))
    add_common(p_spectrum, formats=False)
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_certify = sub.add_parser("certify", help="run every applicable certified check")
    p_certify.add_argument("path")
    p_certify.add_argument("--s", type=int, default=None, help="blow-up factor for power checks")
    p_certify.add_argument("--r", type=int, default=None, help="target uniformity for power checks")
    add_common(p_certify)
    p_certify.set_defaults(func=_cmd_certify)

    p_generate = sub.add_parser("generate", help="write a canonical `.hg` instance")
    gen_sub = p_generate.add_subparsers(dest="kind", required=True)
    g_random = gen_sub.add_parser("random", help="each k-subset kept with probability p")
    g_random.add_argument("n", type=int)
    g_random.add_argument("k", type=int)
    g_random.add_argument("p", type=float)
    g_random.add_argument("--seed", type=int, default=0)
    add_common(g_random, formats=False)
    g_random.set_defaults(func=_cmd_generate, kind="random")
    g_complete = gen_sub.add_parser("complete", help="every k-subset is an edge")
    g_complete.add_argument("n", type=int)
    g_complete.add_argument("k", type=int)
    add_common(g_complete, formats=False)
    g_complete.set_defaults(func=_cmd_generate, kind="complete")
    g_disjoint = gen_sub.add_parser("disjoint", help="m pairwise-disjoint k-edges")
    g_disjoint.add_argument("k", type=int)
    g_disjoint.add_argument("m", type=int)
    g_disjoint.add_argument("isolated", type=int, nargs="?", default=0)
    add_common(g_disjoint, formats=False)
    g_disjoint.set_defaults(func=_cmd_generate, kind="disjoint")

    p_power = sub.add_parser("power", help="blow up vertices and pad edges")
    p_power.add_argument("path")
    p_power.add_argument("--s", type=int, required=True)
    p_power.add_argument("--r", type=int, required=True)
    add_common(p_power, formats=False)
    p_power.set_defaults(func=_cmd_power)

    p_complement = sub.add_parser("complement", help="complement within the complete k-graph")
    p_complement.add_argument("path")
    add_common(p_complement, formats=False)
    p_complement.set_defaults(func=_cmd_complement)

    p_version = sub.add_parser("version", help="print the package version")
    p_version.set_defaults(func=_cmd_version)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NoConvergence, NegativeGramEigenvalue) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (HyperenergyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
