"""Command-line surface: values, tables, verification suites, enumeration, b-files.

Exit codes are a stable contract: 0 success, 1 verification failure, 2
usage/input error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from . import bijection, closedform, enumeration, graphs, numtheory
from .closedform import MemoStore
from .errors import InvalidParametersError, MalformedInputError, ResourceLimitError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

MEMO_HEADER = "compolab-memo v1"


@dataclass
class OutputRecord:
    """One computed value, ready for text or JSON rendering."""

    n: int
    value: str  # exact decimal
    method: str
    m: Optional[int] = None
    j: Optional[int] = None

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.m is not None:
            out["m"] = self.m
        if self.j is not None:
            out["j"] = self.j
        out["value"] = self.value
        out["method"] = self.method
        return out


# ---------------------------------------------------------------------------
# Persistent memo cache
# ---------------------------------------------------------------------------

def load_memo_file(path: Path) -> MemoStore:
    """Load a memo cache, returning an empty store when the file is missing,
    malformed, or fails spot revalidation (never trusted blindly)."""
    store = MemoStore()
    if not path.exists():
        return store
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return store
    if not lines or lines[0].strip() != MEMO_HEADER:
        print(f"warning: ignoring cache {path}: bad header", file=sys.stderr)
        return store
    cells: dict[tuple[int, int], int] = {}
    for raw in lines[1:]:
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            print(f"warning: ignoring cache {path}: bad line {line!r}", file=sys.stderr)
            return store
        try:
            n, m, value = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            print(f"warning: ignoring cache {path}: bad line {line!r}", file=sys.stderr)
            return store
        if n < 0 or m < 0 or m > n or value < 1 or (n == m and value != 1):
            print(f"warning: ignoring cache {path}: implausible cell {line!r}", file=sys.stderr)
            return store
        cells[(n, m)] = value
    # Revalidation, ruling out single-cell corruption: recompute one randomly
    # chosen dependency of each cell from scratch (shared fresh store,
    # independent of the cache), then re-derive the cell from its dependency
    # sum, preferring cached dependency values so already-checked cells anchor
    # the later ones.  Any mismatch discards the whole cache.
    fresh = MemoStore()
    rng = random.Random()

    def dep_value(a: int, b: int) -> int:
        if a == b:
            return 1
        if (a, b) in cells:
            return cells[(a, b)]
        return closedform.comp_count_recursive(a, b, memo=fresh)

    for (n, m), value in sorted(cells.items()):
        if n == m:
            continue
        pi = rng.randrange(n - m)
        pj = rng.randrange(m + 1)
        probe = (pi + pj, pj)
        honest = closedform.comp_count_recursive(probe[0], probe[1], memo=fresh)
        if probe in cells and cells[probe] != honest:
            print(
                f"warning: ignoring cache {path}: cell {probe} fails revalidation",
                file=sys.stderr,
            )
            return store
        derived = sum(
            numtheory.binomial(n - m - 1, i)
            * sum(
                numtheory.binomial(m, j) * dep_value(i + j, j)
                for j in range(m + 1)
            )
            for i in range(n - m)
        )
        if derived != value:
            print(
                f"warning: ignoring cache {path}: cell ({n}, {m}) fails revalidation",
                file=sys.stderr,
            )
            return store
    for (n, m), value in cells.items():
        store.put(n, m, value)
    return store


def save_memo_file(store: MemoStore, path: Path) -> None:
    lines = [MEMO_HEADER]
    lines.extend(f"{n} {m} {value}" for (n, m), value in store.items())
    path.write_text("\n".join(lines) + "\n")


def _open_store(args: argparse.Namespace) -> tuple[MemoStore, Optional[Path]]:
    cache = getattr(args, "cache", None)
    if cache is None:
        return MemoStore(), None
    path = Path(cache)
    return load_memo_file(path), path


def _close_store(store: MemoStore, path: Optional[Path]) -> None:
    if path is not None:
        save_memo_file(store, path)


# ---------------------------------------------------------------------------
# value
# ---------------------------------------------------------------------------

def _require(args: argparse.Namespace, *names: str) -> list[int]:
    got = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise InvalidParametersError(f"kind {args.kind!r} requires -{name}")
        got.append(value)
    return got


def _comp_value(args: argparse.Namespace, method: str, store: MemoStore) -> int:
    n, m = _require(args, "n", "m")
    if method == "recursive":
        return closedform.comp_count_recursive(n, m, memo=store)
    if method == "explicit":
        return closedform.comp_count_explicit(n, m)
    if method == "paper-literal":
        return closedform.comp_count_paper_literal(n, m)
    if method == "brute":
        g = graphs.complete_minus_clique(n, m)
        return enumeration.composition_count_brute(
            g, cap=args.max_brute_n, workers=args.workers
        )
    raise InvalidParametersError(f"method {method!r} not available for comp")


_VALUE_METHODS = {
    "comp": ("recursive", ("recursive", "explicit", "brute", "paper-literal")),
    "minimax": ("formula", ("formula", "brute")),
    "maximin": ("formula", ("formula",)),
    "k1": ("formula", ("formula", "brute")),
    "kj": ("brute", ("brute",)),
    "bell": ("formula", ("formula",)),
    "stirling2": ("formula", ("formula",)),
    "binomial": ("formula", ("formula",)),
}


def cmd_value(args: argparse.Namespace) -> int:
    default, allowed = _VALUE_METHODS[args.kind]
    method = args.method or default
    if args.paper_literal:
        if args.kind != "comp":
            raise InvalidParametersError("--paper-literal only applies to kind 'comp'")
        method = "paper-literal"
    if method not in allowed:
        raise InvalidParametersError(
            f"method {method!r} not available for kind {args.kind!r}"
        )
    store, cache_path = _open_store(args)
    kind = args.kind
    m_out: Optional[int] = None
    j_out: Optional[int] = None
    if kind == "comp":
        value = _comp_value(args, method, store)
        m_out = args.m
    elif kind == "minimax":
        n, m = _require(args, "n", "m")
        m_out = m
        if method == "formula":
            value = closedform.minimax_count_formula(n, m)
        else:
            value = enumeration.minimax_count_brute(n, m, cap=args.max_brute_n)
    elif kind == "maximin":
        n, m = _require(args, "n", "m")
        m_out = m
        value = closedform.maximin_count_formula(n, m)
    elif kind == "k1":
        n, m = _require(args, "n", "m")
        m_out = m
        if method == "formula":
            value = closedform.k1_count_formula(n, m)
        else:
            value = enumeration.kj_count_brute(n, m, 1, cap=args.max_brute_n)
    elif kind == "kj":
        n, m, j = _require(args, "n", "m", "j")
        m_out, j_out = m, j
        value = enumeration.kj_count_brute(n, m, j, cap=args.max_brute_n)
    elif kind == "bell":
        (n,) = _require(args, "n")
        value = numtheory.bell(n)
    elif kind == "stirling2":
        n, m = _require(args, "n", "m")
        m_out = m
        value = numtheory.stirling2(n, m)
    else:  # binomial
        n, m = _require(args, "n", "m")
        m_out = m
        value = numtheory.binomial(n, m)
    record = OutputRecord(n=args.n, m=m_out, j=j_out, value=str(value), method=method)
    if args.format == "json":
        print(json.dumps(record.to_json_dict()))
    else:
        print(record.value)
    _close_store(store, cache_path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_cells(args: argparse.Namespace, store: MemoStore) -> list[OutputRecord]:
    cells: list[OutputRecord] = []
    if args.kind == "comp":
        if args.max_n < 0:
            raise InvalidParametersError("--max-n must be >= 0 for the comp table")
        method = args.method or "recursive"
        if args.paper_literal:
            method = "paper-literal"
        rows = range(0, args.max_n + 1)
    else:  # k1
        if args.max_n < 1:
            raise InvalidParametersError("--max-n must be >= 1 for the k1 table")
        method = args.method or "formula"
        if method not in ("formula", "brute"):
            raise InvalidParametersError(f"method {method!r} not available for k1 table")
        rows = range(1, args.max_n + 1)
    for n in rows:
        for m in range(n + 1):
            if args.kind == "comp":
                if method == "recursive":
                    value = closedform.comp_count_recursive(n, m, memo=store)
                elif method == "explicit":
                    value = closedform.comp_count_explicit(n, m)
                elif method == "paper-literal":
                    value = closedform.comp_count_paper_literal(n, m)
                elif method == "brute":
                    value = enumeration.composition_count_brute(
                        graphs.complete_minus_clique(n, m),
                        cap=args.max_brute_n,
                        workers=args.workers,
                    )
                else:
                    raise InvalidParametersError(
                        f"method {method!r} not available for comp table"
                    )
            else:
                if method == "formula":
                    value = closedform.k1_count_formula(n, m)
                else:
                    value = enumeration.kj_count_brute(n, m, 1, cap=args.max_brute_n)
            cells.append(OutputRecord(n=n, m=m, value=str(value), method=method))
    return cells


def _render_table(cells: list[OutputRecord], fmt: str, max_n: int) -> str:
    by_row: dict[int, list[OutputRecord]] = {}
    for cell in cells:
        by_row.setdefault(cell.n, []).append(cell)
    rows = sorted(by_row)
    if fmt == "json":
        return json.dumps([c.to_json_dict() for c in cells], indent=2)
    if fmt == "csv":
        header = "n," + ",".join(f"m{m}" for m in range(max_n + 1))
        lines = [header]
        for n in rows:
            lines.append(",".join([str(n)] + [c.value for c in by_row[n]]))
        return "\n".join(lines)
    # text: aligned lower-triangular grid
    width = max(
        [len(c.value) for c in cells] + [len(str(max_n)), len(f"m{max_n}"), 3]
    )
    header = " " * (width + 3) + " ".join(f"m{m}".rjust(width) for m in range(max_n + 1))
    lines = [header.rstrip()]
    for n in rows:
        lines.append(
            str(n).rjust(width)
            + " | "
            + " ".join(c.value.rjust(width) for c in by_row[n])
        )
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    store, cache_path = _open_store(args)
    cells = _table_cells(args, store)
    print(_render_table(cells, args.format, args.max_n))
    _close_store(store, cache_path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_rowsum(n_max: int, args, store: MemoStore) -> list[tuple[str, bool]]:
    checks = []
    for n in range(n_max + 1):
        lhs = closedform.row_sum(n, memo=store)
        rhs = numtheory.bell(n + 1)
        checks.append((f"row_sum({n}) = {lhs} = bell({n + 1})", lhs == rhs))
    return checks


def _verify_threeway(n_max: int, args, store: MemoStore) -> list[tuple[str, bool]]:
    checks = []
    for n in range(n_max + 1):
        for m in range(n + 1):
            rec = closedform.comp_count_recursive(n, m, memo=store)
            exp = closedform.comp_count_explicit(n, m)
            brute = enumeration.composition_count_brute(
                graphs.complete_minus_clique(n, m),
                cap=args.max_brute_n,
                workers=args.workers,
            )
            checks.append(
                (
                    f"comp({n},{m}): recursive={rec} explicit={exp} brute={brute}",
                    rec == exp == brute,
                )
            )
    return checks


def _verify_bijection(n_max: int, args, store: MemoStore) -> list[tuple[str, bool]]:
    checks = []
    for n in range(n_max + 1):
        for m in range(n + 1):
            report = bijection.verify(n, m, cap=args.max_brute_n)
            expected = closedform.comp_count_recursive(n, m, memo=store)
            checks.append(
                (
                    f"bijection({n},{m}): lhs={report.lhs_count} rhs={report.rhs_count} "
                    f"expected={expected} round_trip={report.round_trip_ok} "
                    f"injective={report.injective_ok}",
                    report.ok and report.lhs_count == expected,
                )
            )
    return checks


def _verify_k1(n_max: int, args, store: MemoStore) -> list[tuple[str, bool]]:
    checks = []
    for n in range(1, n_max + 1):
        for m in range(n + 1):
            formula = closedform.k1_count_formula(n, m)
            brute = enumeration.kj_count_brute(n, m, 1, cap=args.max_brute_n)
            checks.append(
                (f"k1({n},{m}): formula={formula} brute={brute}", formula == brute)
            )
    return checks


def _verify_reflection(n_max: int, args, store: MemoStore) -> list[tuple[str, bool]]:
    checks = []
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            maximin = closedform.maximin_count_formula(n, n + 1 - m)
            formula = closedform.minimax_count_formula(n, m)
            brute = enumeration.minimax_count_brute(n, m, cap=args.max_brute_n)
            checks.append(
                (
                    f"minimax({n},{m}): reflected-maximin={maximin} "
                    f"formula={formula} brute={brute}",
                    maximin == formula == brute,
                )
            )
    return checks


_SUITES: dict[str, Callable] = {
    "rowsum": _verify_rowsum,
    "threeway": _verify_threeway,
    "bijection": _verify_bijection,
    "k1": _verify_k1,
    "reflection": _verify_reflection,
}

# Largest vertex count a brute-backed suite enumerates, relative to n_max.
_SUITE_BRUTE_OFFSET = {"threeway": 0, "bijection": 1, "k1": 0, "reflection": 0}


def cmd_verify(args: argparse.Namespace) -> int:
    offset = _SUITE_BRUTE_OFFSET.get(args.suite)
    if offset is not None:
        limit = (
            enumeration.BRUTE_FORCE_CAP
            if args.max_brute_n is None
            else args.max_brute_n
        )
        if args.n_max + offset > limit:
            raise ResourceLimitError(
                f"suite {args.suite!r} with --n-max {args.n_max} would enumerate "
                f"{args.n_max + offset} vertices, above the brute-force cap of {limit}"
            )
    store, cache_path = _open_store(args)
    checks = _SUITES[args.suite](args.n_max, args, store)
    failures = 0
    for description, passed in checks:
        print(f"{'ok  ' if passed else 'FAIL'} {description}")
        failures += 0 if passed else 1
    print(
        f"{args.suite}: {len(checks) - failures}/{len(checks)} identities hold"
    )
    _close_store(store, cache_path)
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    path = Path(args.graph_file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    g = graphs.parse_graph_file(text)
    for comp in enumeration.compositions(g, cap=args.max_brute_n):
        print(comp)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bfile
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    fields = text.split("..")
    if len(fields) != 2:
        raise InvalidParametersError(f"range must look like A..B, got {text!r}")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise InvalidParametersError(f"range must look like A..B, got {text!r}") from None


def parse_bfile(text: str) -> dict[int, int]:
    """Parse b-file text: optional '#' comments, then 'index value' lines."""
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedInputError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            out[int(fields[0])] = int(fields[1])
        except ValueError:
            raise MalformedInputError(
                f"line {lineno}: expected integers, got {line!r}"
            ) from None
    return out


def cmd_bfile(args: argparse.Namespace) -> int:
    start, end = _parse_range(args.range)
    store, cache_path = _open_store(args)
    terms: list[tuple[int, int]] = []
    for index in range(start, end + 1):
        if args.kind == "rowsum":
            terms.append((index, closedform.row_sum(index, memo=store)))
        else:  # k1zero
            terms.append((index, closedform.k1_count_formula(index, 0)))
    for index, value in terms:
        print(f"{index} {value}")
    _close_store(store, cache_path)
    if args.compare is None:
        return EXIT_OK
    try:
        reference = parse_bfile(Path(args.compare).read_text())
    except OSError as exc:
        raise MalformedInputError(f"cannot read {args.compare}: {exc}") from exc
    mismatches = 0
    for index, value in terms:
        if index not in reference:
            print(f"MISMATCH index {index}: missing from reference", file=sys.stderr)
            mismatches += 1
        elif reference[index] != value:
            print(
                f"MISMATCH index {index}: computed {value}, reference {reference[index]}",
                file=sys.stderr,
            )
            mismatches += 1
    return EXIT_OK if mismatches == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, *, brute: bool = False, cache: bool = False) -> None:
    if brute:
        parser.add_argument(
            "--max-brute-n",
            type=int,
            default=None,
            metavar="N",
            help="override the brute-force enumeration cap (default %d)"
            % enumeration.BRUTE_FORCE_CAP,
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=1,
            metavar="W",
            help="worker processes for brute-force counting (totals are identical)",
        )
    if cache:
        parser.add_argument(
            "--cache",
            metavar="PATH",
            default=None,
            help="persistent memo cache file for the recursive count",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compolab",
        description=(
            "Exact counting and enumeration of graph compositions for the "
            "complete-minus-clique family, and minimax statistics of set partitions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="compute one count")
    p_value.add_argument("kind", choices=sorted(_VALUE_METHODS))
    p_value.add_argument("-n", type=int, required=True)
    p_value.add_argument("-m", "--m", "--k", dest="m", type=int, default=None)
    p_value.add_argument("-j", type=int, default=None)
    p_value.add_argument("--method", choices=("recursive", "explicit", "brute", "formula", "paper-literal"), default=None)
    p_value.add_argument("--format", choices=("text", "json"), default="text")
    p_value.add_argument("--paper-literal", action="store_true", help="use the literal printed form of the explicit formula (documents a known erratum)")
    _add_common(p_value, brute=True, cache=True)
    p_value.set_defaults(func=cmd_value)

    p_table = sub.add_parser("table", help="render a lower-triangular value table")
    p_table.add_argument("kind", choices=("comp", "k1"))
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_table.add_argument("--method", choices=("recursive", "explicit", "brute", "formula", "paper-literal"), default=None)
    p_table.add_argument("--paper-literal", action="store_true", help="use the literal printed form of the explicit formula (documents a known erratum)")
    _add_common(p_table, brute=True, cache=True)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a cross-validation suite")
    p_verify.add_argument("suite", choices=sorted(_SUITES))
    p_verify.add_argument("--n-max", type=int, required=True)
    _add_common(p_verify, brute=True, cache=True)
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="stream the compositions of a graph file")
    p_enum.add_argument("graph_file")
    _add_common(p_enum, brute=True)
    p_enum.set_defaults(func=cmd_enumerate)

    p_bfile = sub.add_parser("bfile", help="emit an integer sequence as b-file lines")
    p_bfile.add_argument("kind", choices=("rowsum", "k1zero"))
    p_bfile.add_argument("--range", required=True, metavar="A..B")
    p_bfile.add_argument("--compare", metavar="FILE", default=None, help="diff against a local reference b-file")
    _add_common(p_bfile, cache=True)
    p_bfile.set_defaults(func=cmd_bfile)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParametersError, MalformedInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
