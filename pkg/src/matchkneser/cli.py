"""Command-line driver: generate instances, solve them, verify the claims.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
3 timeout (result unknown). Identical invocations produce byte-identical
output; the only environment influence is MATCHKNESER_TIMEOUT overriding
the default time budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .coloring import DEFAULT_TIME_BUDGET, chromatic_number
from .errors import (
    Deadline,
    GraphConstructionError,
    KneserSizeError,
    ParameterError,
    SearchTimeout,
    VerificationError,
)
from .families import FamilyParams, gap_graph, gap_tree, matching_graph, petersen
from .graphs import read_edgelist, write_edgelist, edgelist_lines
from .homcert import certify_family, hom_witness_lines
from .kneser import DEFAULT_MATCHING_CAP, build_matching_kneser, write_kneser_files
from .report import gap_report, reports_json, reports_table
from .turan import min_deletion_set
from .verify import TARGETS, run_target

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

TIMEOUT_ENV_VAR = "MATCHKNESER_TIMEOUT"


@dataclass
class CliConfig:
    """Validated invocation parameters for one subcommand run."""

    subcommand: str
    r: int | None = None
    theta: int | None = None
    gamma: int | None = None
    l: int | None = None
    family: str | None = None
    infile: Path | None = None
    out: Path | None = None
    fmt: str = "text"
    timeout: float | None = DEFAULT_TIME_BUDGET
    kneser_cap: int = DEFAULT_MATCHING_CAP
    targets: tuple[str, ...] = ()


def _default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV_VAR)
    if raw is None:
        return DEFAULT_TIME_BUDGET
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_TIME_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchkneser",
        description="Exact chromatic numbers, Turán numbers, and certificates "
        "for matching Kneser graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text", dest="fmt")
        p.add_argument("--timeout", type=float, default=_default_timeout(), metavar="SECONDS")
        p.add_argument("--kneser-cap", type=int, default=DEFAULT_MATCHING_CAP, metavar="N")

    gen = sub.add_parser("gen", help="write a family instance in edge-list format")
    gen.add_argument("--family", required=True, choices=("matching", "gap", "tree", "petersen"))
    gen.add_argument("--l", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--theta", type=int)
    gen.add_argument("--gamma", type=int)
    gen.add_argument("--out", type=Path)
    add_common(gen)

    kne = sub.add_parser("kneser", help="build the matching Kneser graph of a graph file")
    kne.add_argument("--in", dest="infile", type=Path, required=True)
    kne.add_argument("--r", type=int, required=True)
    kne.add_argument("--out", type=Path, required=True, help="base path for .edges/.matchings files")
    add_common(kne)

    chi = sub.add_parser("chi", help="exact chromatic number of a graph file")
    chi.add_argument("--in", dest="infile", type=Path, required=True)
    chi.add_argument("--out", type=Path, help="write the certificate as JSON")
    add_common(chi)

    tur = sub.add_parser("turan", help="minimum deletion set and ex(G, rK2) of a graph file")
    tur.add_argument("--in", dest="infile", type=Path, required=True)
    tur.add_argument("--r", type=int, required=True)
    tur.add_argument("--out", type=Path, help="write the certificate as JSON")
    add_common(tur)

    gap = sub.add_parser("gap", help="gap report (chi vs removal bound) of a graph file")
    gap.add_argument("--in", dest="infile", type=Path, required=True)
    gap.add_argument("--r", type=int, required=True)
    gap.add_argument("--out", type=Path, help="write the report as JSON")
    add_common(gap)

    cert = sub.add_parser("certify", help="full family pipeline: certified chi plus gap report")
    cert.add_argument("--r", type=int, required=True)
    cert.add_argument("--theta", type=int, required=True)
    cert.add_argument("--gamma", type=int, required=True)
    cert.add_argument("--out", type=Path, help="base path for .json/.forward.txt/.backward.txt")
    add_common(cert)

    ver = sub.add_parser("verify", help="run verification targets")
    ver.add_argument(
        "targets",
        nargs="+",
        choices=tuple(TARGETS) + ("all",),
        metavar="TARGET",
        help=f"one of {', '.join(TARGETS)} or 'all'",
    )
    add_common(ver)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=args.subcommand,
        r=getattr(args, "r", None),
        theta=getattr(args, "theta", None),
        gamma=getattr(args, "gamma", None),
        l=getattr(args, "l", None),
        family=getattr(args, "family", None),
        infile=getattr(args, "infile", None),
        out=getattr(args, "out", None),
        fmt=getattr(args, "fmt", "text"),
        timeout=getattr(args, "timeout", DEFAULT_TIME_BUDGET),
        kneser_cap=getattr(args, "kneser_cap", DEFAULT_MATCHING_CAP),
        targets=tuple(getattr(args, "targets", ())),
    )


def _require(cfg: CliConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ParameterError(f"--{name} is required for this invocation")


def _emit(text: str, out: Path | None) -> None:
    if out is not None:
        out.write_text(text + "\n")
    print(text)


def _run_gen(cfg: CliConfig) -> int:
    if cfg.family == "matching":
        _require(cfg, "l")
        G = matching_graph(cfg.l)
    elif cfg.family == "gap":
        _require(cfg, "r", "theta", "gamma")
        G = gap_graph(FamilyParams(r=cfg.r, theta=cfg.theta, gamma=cfg.gamma))
    elif cfg.family == "tree":
        _require(cfg, "r", "theta")
        G = gap_tree(cfg.r, cfg.theta)
    else:
        G = petersen()
    text = "\n".join(edgelist_lines(G))
    if cfg.out is not None:
        write_edgelist(G, cfg.out)
        print(f"wrote {cfg.out} ({G.n} vertices, {G.m} edges)")
    else:
        print(text)
    return EXIT_OK


def _run_kneser(cfg: CliConfig) -> int:
    G = read_edgelist(cfg.infile)
    mkg = build_matching_kneser(G, cfg.r, cap=cfg.kneser_cap)
    graph_path, sidecar_path = write_kneser_files(mkg, cfg.out)
    print(f"wrote {graph_path} ({mkg.graph.n} vertices, {mkg.graph.m} edges) and {sidecar_path}")
    return EXIT_OK


def _run_chi(cfg: CliConfig) -> int:
    G = read_edgelist(cfg.infile)
    cert = chromatic_number(G, deadline=Deadline(cfg.timeout))
    payload = json.dumps(cert.to_json_dict(), indent=2)
    if cfg.out is not None:
        cfg.out.write_text(payload + "\n")
    if cfg.fmt == "json":
        print(payload)
    else:
        print(f"chi = {cert.k} (witness {cert.witness.kind})")
    return EXIT_OK


def _run_turan(cfg: CliConfig) -> int:
    G = read_edgelist(cfg.infile)
    cert = min_deletion_set(G, cfg.r, deadline=Deadline(cfg.timeout))
    payload = json.dumps(cert.to_json_dict(), indent=2)
    if cfg.out is not None:
        cfg.out.write_text(payload + "\n")
    if cfg.fmt == "json":
        print(payload)
    else:
        deleted = " ".join(f"({u},{v})" for u, v in cert.deleted)
        status = "optimal" if cert.optimal else "upper bound only (timed out)"
        print(f"removal = {cert.size} ({status}), ex = {G.m - cert.size}, deleted: {deleted}")
    return EXIT_OK if cert.optimal else EXIT_UNKNOWN


def _run_gap(cfg: CliConfig) -> int:
    G = read_edgelist(cfg.infile)
    rep = gap_report(
        G,
        cfg.r,
        instance=cfg.infile.stem,
        deadline=Deadline(cfg.timeout),
        kneser_cap=cfg.kneser_cap,
    )
    if cfg.out is not None:
        cfg.out.write_text(reports_json([rep]) + "\n")
    print(reports_json([rep]) if cfg.fmt == "json" else reports_table([rep]))
    return EXIT_UNKNOWN if rep.verdict == "UNKNOWN" else EXIT_OK


def _run_certify(cfg: CliConfig) -> int:
    params = FamilyParams(r=cfg.r, theta=cfg.theta, gamma=cfg.gamma)
    deadline = Deadline(cfg.timeout)
    certification = certify_family(params, deadline=deadline, cap=cfg.kneser_cap)
    G = gap_graph(params)
    rep = gap_report(
        G,
        cfg.r,
        instance=f"gap(r={cfg.r},theta={cfg.theta},gamma={cfg.gamma})",
        chi_certificate=certification.chi_certificate,
        deadline=deadline,
        kneser_cap=cfg.kneser_cap,
    )
    if cfg.out is not None:
        base = cfg.out
        Path(str(base) + ".json").write_text(reports_json([rep]) + "\n")
        Path(str(base) + ".forward.txt").write_text(
            "\n".join(hom_witness_lines(certification.forward)) + "\n"
        )
        Path(str(base) + ".backward.txt").write_text(
            "\n".join(hom_witness_lines(certification.backward)) + "\n"
        )
    if cfg.fmt == "json":
        print(reports_json([rep]))
    else:
        print(f"certified chi = {certification.chi_certificate.k} "
              f"({certification.n_matchings} r-matchings, "
              f"{certification.pairs_checked} pairs checked"
              + ("" if certification.exhaustive else ", sampled") + ")")
        print(reports_table([rep]))
    return EXIT_UNKNOWN if rep.verdict == "UNKNOWN" else EXIT_OK


def _run_verify(cfg: CliConfig) -> int:
    names = list(TARGETS) if "all" in cfg.targets else list(dict.fromkeys(cfg.targets))
    results = [run_target(name, Deadline(cfg.timeout)) for name in names]
    if cfg.fmt == "json":
        print(
            json.dumps(
                [
                    {
                        "target": r.target,
                        "ok": r.ok,
                        "unknown": r.unknown,
                        "checks": [
                            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in r.checks
                        ],
                    }
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        for r in results:
            print("\n".join(r.lines()))
    if any(r.unknown for r in results):
        return EXIT_UNKNOWN
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


_RUNNERS = {
    "gen": _run_gen,
    "kneser": _run_kneser,
    "chi": _run_chi,
    "turan": _run_turan,
    "gap": _run_gap,
    "certify": _run_certify,
    "verify": _run_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    cfg = _config_from_args(args)
    try:
        return _RUNNERS[cfg.subcommand](cfg)
    except (ParameterError, GraphConstructionError, KneserSizeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
