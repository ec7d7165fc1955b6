"""File-driven command line front end.

Matroid files are line oriented; ``#`` starts a comment and blank lines are
skipped.  The first meaningful line must be ``n: <int>``, followed by
exactly one generator clause::

    bases: 1,2 1,3 2,3        # space-separated bases, comma-separated labels
    uniform: <k> <n>
    graph: 1-2 2-3 3-1        # edges become ground set 1..m in listed order

and an optional ``rank: <int>`` that is validated against the computed rank.

Reports are line oriented and byte-stable: subsets print sorted by
cardinality then numeric value, and the command echo omits anything (thread
counts, file paths) that does not affect the result.  Exit codes: 0 on
success, 1 on a verification mismatch, 2 on parse or validation errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import dataclass, field

from .bitset import elements_of, format_subset, mask_of
from .catalog import full_catalog
from .decomposition import (
    decompose_base_polytope,
    decompose_independent_polytope,
    decompose_truncation_flag,
)
from .errors import MatvolError, ParseError, RankMismatch
from .invariants import beta, gamma, signed_beta, signed_gamma, tutte
from .matroid import Graph, Matroid, coconnected_flats, from_bases, graphic, is_connected, uniform
from .verify import verify_matroid
from .volume import (
    orbit_degree,
    volume_base_polytope,
    volume_independent_polytope,
    volume_truncation_flag,
)


@dataclass
class Report:
    command: str
    digest: str | None
    lines: list[str] = field(default_factory=list)
    status: int = 0

    def render(self) -> str:
        header = [f"# command: {self.command}"]
        if self.digest is not None:
            header.append(f"# input: sha256:{self.digest}")
        return "\n".join(header + self.lines)


# ---------------------------------------------------------------------------
# matroid file grammar
# ---------------------------------------------------------------------------

def parse_matroid_file(text: str) -> Matroid:
    n: int | None = None
    generator: tuple[str, str, int] | None = None
    declared_rank: tuple[int, int] | None = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", lineno)
        key = key.strip()
        rest = rest.strip()
        if key == "n":
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno)
            n = _parse_int(rest, "ground set size", lineno)
        elif key in ("bases", "uniform", "graph"):
            if n is None:
                raise ParseError("'n: <int>' must come first", lineno)
            if generator is not None:
                raise ParseError("only one generator clause is allowed", lineno)
            generator = (key, rest, lineno)
        elif key == "rank":
            if n is None:
                raise ParseError("'n: <int>' must come first", lineno)
            if declared_rank is not None:
                raise ParseError("duplicate 'rank' line", lineno)
            declared_rank = (_parse_int(rest, "rank", lineno), lineno)
        else:
            raise ParseError(f"unknown key {key!r}", lineno)

    if n is None:
        raise ParseError("missing 'n: <int>' line")
    if generator is None:
        raise ParseError("missing generator clause (bases / uniform / graph)")

    kind, rest, lineno = generator
    if kind == "bases":
        m = _parse_bases(n, rest, lineno)
    elif kind == "uniform":
        m = _parse_uniform(n, rest, lineno)
    else:
        m = _parse_graph(n, rest, lineno)

    if declared_rank is not None and declared_rank[0] != m.rank_value:
        raise RankMismatch(
            f"declared rank {declared_rank[0]} but computed rank {m.rank_value}"
        )
    return m


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None


def _parse_bases(n: int, rest: str, lineno: int) -> Matroid:
    tokens = rest.split()
    if not tokens:
        raise ParseError("bases clause needs at least one basis", lineno)
    masks = []
    for token in tokens:
        elements = []
        for piece in token.split(","):
            e = _parse_int(piece, "element label", lineno)
            if not 1 <= e <= n:
                raise ParseError(f"element {e} outside 1..{n}", lineno)
            elements.append(e)
        if len(set(elements)) != len(elements):
            raise ParseError(f"repeated element in basis {token!r}", lineno)
        masks.append(mask_of(elements))
    return from_bases(n, masks)


def _parse_uniform(n: int, rest: str, lineno: int) -> Matroid:
    tokens = rest.split()
    if len(tokens) != 2:
        raise ParseError("uniform clause needs '<k> <n>'", lineno)
    k = _parse_int(tokens[0], "uniform rank", lineno)
    n2 = _parse_int(tokens[1], "uniform size", lineno)
    if n2 != n:
        raise ParseError(f"uniform size {n2} disagrees with n = {n}", lineno)
    return uniform(k, n)


def _parse_graph(n: int, rest: str, lineno: int) -> Matroid:
    tokens = rest.split()
    if not tokens:
        raise ParseError("graph clause needs at least one edge", lineno)
    if len(tokens) != n:
        raise ParseError(f"{len(tokens)} edges disagree with n = {n}", lineno)
    edges = []
    for token in tokens:
        parts = token.split("-")
        if len(parts) != 2:
            raise ParseError(f"edge {token!r} must look like 'u-v'", lineno)
        u = _parse_int(parts[0], "vertex", lineno)
        v = _parse_int(parts[1], "vertex", lineno)
        if u < 1 or v < 1:
            raise ParseError("vertices are positive integers", lineno)
        edges.append((u, v))
    vertices = max(max(u, v) for u, v in edges)
    return graphic(Graph(vertices, tuple(edges)))


def serialize_matroid(m: Matroid) -> str:
    """Canonical file form; parse(serialize(M)) reproduces M."""
    if m.rank_value == 0:
        return f"n: {m.n}\nuniform: 0 {m.n}\n"
    tokens = [",".join(str(e) for e in elements_of(b)) for b in sorted(m.bases)]
    return f"n: {m.n}\nbases: {' '.join(tokens)}\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _load(path: str) -> tuple[Matroid, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    return parse_matroid_file(data.decode("utf-8")), digest


def cmd_decompose(m: Matroid, digest: str, polytope: str) -> Report:
    maker = {
        "base": decompose_base_polytope,
        "indep": decompose_independent_polytope,
        "flag": decompose_truncation_flag,
    }[polytope]
    d = maker(m)
    report = Report(f"decompose --polytope {polytope}", digest)
    report.lines.append(f"family: {d.family}")
    for mask, c in d.sorted_items():
        report.lines.append(f"y[{format_subset(mask)}] = {c}")
    return report


def cmd_volume(m: Matroid, digest: str, polytope: str, threads: int, degree: bool) -> Report:
    compute = {
        "base": volume_base_polytope,
        "indep": volume_independent_polytope,
        "flag": volume_truncation_flag,
    }[polytope]
    vol = compute(m, threads)
    command = f"volume --polytope {polytope}" + (" --degree" if degree else "")
    report = Report(command, digest)
    report.lines.append(f"volume = {vol}")
    if degree:
        _, normalized = orbit_degree(m)
        report.lines.append(f"normalized_volume = {normalized}")
    return report


def cmd_invariants(m: Matroid, digest: str) -> Report:
    report = Report("invariants", digest)
    t = tutte(m)
    report.lines.append(f"n = {m.n}")
    report.lines.append(f"rank = {m.rank_value}")
    report.lines.append(f"bases = {len(m.bases)}")
    report.lines.append(f"connected = {'true' if is_connected(m) else 'false'}")
    for (i, j), c in sorted(t.coeffs):
        report.lines.append(f"tutte b[{i},{j}] = {c}")
    report.lines.append(f"beta = {beta(m)}")
    report.lines.append(f"signed_beta = {signed_beta(m)}")
    report.lines.append(f"gamma = {gamma(m)}")
    report.lines.append(f"signed_gamma = {signed_gamma(m)}")
    flats = " ".join(format_subset(a) for a in coconnected_flats(m))
    report.lines.append(f"coconnected_flats = {flats}")
    return report


def cmd_verify(args) -> Report:
    if args.catalog:
        command = f"verify --catalog --max-n {args.max_n}"
        targets = [(e.name, e.matroid) for e in full_catalog(args.max_n)]
        digest = None
    else:
        if args.file is None:
            raise ParseError("verify needs a matroid file unless --catalog is given")
        m, digest = _load(args.file)
        command = "verify"
        targets = [("input", m)]
    report = Report(command, digest)
    total = 0
    for name, m in targets:
        checks, mismatches = verify_matroid(m, name)
        total += checks
        if mismatches:
            first = mismatches[0]
            report.lines.append(f"FAIL {first.matroid_name}: {first.check}")
            report.lines.append(f"  {first.detail}")
            report.lines.append("  reproduce with:")
            for line in serialize_matroid(m).strip().splitlines():
                report.lines.append(f"    {line}")
            report.status = 1
            return report
    report.lines.append(f"OK ({total} checks)")
    return report


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matvol",
        description="Exact decompositions and volumes of matroid polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="signed simplex decomposition of a polytope")
    p.add_argument("file")
    p.add_argument("--polytope", choices=["base", "indep", "flag"], default="base")

    p = sub.add_parser("volume", help="lattice-normalized volume")
    p.add_argument("file")
    p.add_argument("--polytope", choices=["base", "indep", "flag"], default="base")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--degree", action="store_true",
                   help="also print (n-1)! times the base polytope volume")

    p = sub.add_parser("invariants", help="rank, connectivity, Tutte and friends")
    p.add_argument("file")

    p = sub.add_parser("verify", help="formula engines against the geometric oracle")
    p.add_argument("file", nargs="?")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "decompose":
            m, digest = _load(args.file)
            report = cmd_decompose(m, digest, args.polytope)
        elif args.command == "volume":
            if args.degree and args.polytope != "base":
                parser.error("--degree applies to the base polytope only")
            m, digest = _load(args.file)
            report = cmd_volume(m, digest, args.polytope, args.threads, args.degree)
        elif args.command == "invariants":
            m, digest = _load(args.file)
            report = cmd_invariants(m, digest)
        else:
            report = cmd_verify(args)
    except MatvolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.render())
    return report.status


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
