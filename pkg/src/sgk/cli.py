"""Command-line front end.

Loads Matrix Market or TSV edge-list files, runs a primitive or a graph
algorithm, and prints a JSON object `{"command": ..., "result": ...,
"elapsed_ms": ...}` to stdout (or plain TSV with --format tsv).  Vertex
indices in all output are 0-based, regardless of the 1-based Matrix
Market encoding on disk.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input
data, 3 algorithm precondition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import algorithms
from .containers import (
    CompressedMatrix,
    SparseVector,
    is_symmetric,
    nvals,
    to_compressed,
    to_tuples,
    vector_entries,
    vector_from_entries,
)
from .errors import (
    DimensionMismatchError,
    DomainMismatchError,
    DuplicateIndexError,
    IndexRangeError,
    ParseError,
    PreconditionError,
    UnknownSemiringError,
    UnserializableDomainError,
    UnsupportedDomainError,
    UsageError,
)
from .io_formats import read_edge_list, read_matrix_market, write_matrix_market
from .kernels import mxm, mxv
from .semirings import registry_get


class _DataError(Exception):
    """Marks errors raised while loading input files, so malformed data
    maps to exit code 2 no matter which error class the reader used."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_paths: tuple
    output_format: str = "json"
    semiring: str | None = None
    sources: tuple = ()
    source: int | None = None
    alpha: float = 0.85
    tol: float = 1e-8
    max_iters: int = 100
    output_path: str | None = None
    direction: str | None = None
    transpose: bool = False
    undirected: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _comma_indices(text: str) -> tuple:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise UsageError(f"--source expects integers, got {part!r}") from None
    return tuple(out)


def _build_parser() -> _Parser:
    p = _Parser(
        prog="sgk",
        description="Sparse semiring graph kernels. Vertex indices in "
        "output are 0-based; Matrix Market files are 1-based on disk.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def common(sp, files=1):
        names = ["file"] if files == 1 else ["file_a", "file_b"]
        for name in names:
            sp.add_argument(name, help="input matrix (Matrix Market or TSV edge list)")
        sp.add_argument("--format", choices=("json", "tsv"), default="json",
                        dest="output_format", help="output format (default json)")
        sp.add_argument("--undirected", action="store_true",
                        help="mirror edges when reading a TSV edge list")

    sp = sub.add_parser("info", help="dimensions, entry count, symmetry, domain")
    common(sp)

    sp = sub.add_parser("degrees", help="per-vertex in or out degrees")
    sp.add_argument("--dir", choices=("in", "out"), required=True)
    common(sp)

    sp = sub.add_parser("bfs", help="breadth-first search levels")
    sp.add_argument("--source", required=True, type=_comma_indices,
                    help="source vertex, or comma-separated list")
    common(sp)

    sp = sub.add_parser("sssp", help="single-source shortest path distances")
    sp.add_argument("--source", required=True, type=int)
    common(sp)

    sp = sub.add_parser("cc", help="connected component labels")
    common(sp)

    sp = sub.add_parser("triangles", help="triangle count")
    common(sp)

    sp = sub.add_parser("clustering", help="local clustering coefficients")
    common(sp)

    sp = sub.add_parser("pagerank", help="PageRank by power iteration")
    sp.add_argument("--alpha", type=float, default=0.85)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--max-iters", type=int, default=100)
    common(sp)

    sp = sub.add_parser("mxm", help="matrix-matrix multiply over a semiring")
    sp.add_argument("--semiring", required=True,
                    help='name like "min_plus" or "plus_times/float-double"')
    common(sp, files=2)
    sp.add_argument("-o", "--output", required=True, dest="output_path",
                    help="destination Matrix Market file")

    sp = sub.add_parser("mxv", help="matrix-vector multiply over a semiring")
    sp.add_argument("--semiring", required=True)
    sp.add_argument("--transpose", action="store_true",
                    help="multiply by the transpose of the matrix")
    common(sp, files=2)

    sp = sub.add_parser("convert", help="rewrite any input as Matrix Market")
    common(sp)
    sp.add_argument("-o", "--output", required=True, dest="output_path",
                    help="destination Matrix Market file")

    return p


def _config_from(ns: argparse.Namespace) -> CliConfig:
    paths = tuple(
        getattr(ns, k) for k in ("file", "file_a", "file_b") if hasattr(ns, k)
    )
    src = getattr(ns, "source", None)
    return CliConfig(
        command=ns.command,
        input_paths=paths,
        output_format=getattr(ns, "output_format", "json"),
        semiring=getattr(ns, "semiring", None),
        sources=src if isinstance(src, tuple) else (),
        source=src if isinstance(src, int) else None,
        alpha=getattr(ns, "alpha", 0.85),
        tol=getattr(ns, "tol", 1e-8),
        max_iters=getattr(ns, "max_iters", 100),
        output_path=getattr(ns, "output_path", None),
        direction=getattr(ns, "dir", None),
        transpose=getattr(ns, "transpose", False),
        undirected=getattr(ns, "undirected", False),
    )


def _check_threads_env() -> None:
    raw = os.environ.get("SGK_THREADS")
    if raw is None:
        return
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"SGK_THREADS must be a positive integer, got {raw!r}") from None
    if k < 1:
        raise UsageError(f"SGK_THREADS must be a positive integer, got {raw!r}")


def _load_matrix(path: str, undirected: bool) -> CompressedMatrix:
    """Read a file as Matrix Market (sniffed from the banner) or as a TSV
    edge list (weighted when the first data line has three columns)."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as e:
        raise _DataError(f"{path}: {e.strerror or e}") from e
    first = lines[0] if lines else ""
    try:
        if first.lower().startswith("%%matrixmarket"):
            if undirected:
                raise UsageError(
                    "--undirected applies to TSV edge lists, not Matrix Market"
                )
            coo, _desc = read_matrix_market(lines)
        else:
            weighted = False
            for raw in lines:
                text = raw.strip()
                if not text or text.startswith("#"):
                    continue
                weighted = len(text.split()) == 3
                break
            coo = read_edge_list(lines, weighted=weighted, undirected=undirected)
        return to_compressed(coo)
    except (ParseError, IndexRangeError, DuplicateIndexError, DomainMismatchError) as e:
        raise _DataError(f"{path}: {e}") from e


def _load_vector(path: str) -> SparseVector:
    m = _load_matrix(path, undirected=False)
    if m.ncols != 1:
        raise PreconditionError(
            f"{path}: vector input must be a single-column matrix, "
            f"got {m.nrows}x{m.ncols}"
        )
    entries = [(r, v) for r, _c, v in to_tuples(m).triples]
    return vector_from_entries(m.nrows, entries, m.domain)


def _resolve_semiring(name: str, domain):
    if "/" in name:
        try:
            return registry_get(name)
        except (UnknownSemiringError, UnsupportedDomainError) as e:
            raise UsageError(str(e)) from e
    try:
        return registry_get(f"{name}/{domain.kind}")
    except UnknownSemiringError as e:
        raise UsageError(str(e)) from e


def _json_value(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _pairs(v: SparseVector) -> list:
    return [[i, _json_value(x)] for i, x in vector_entries(v)]


def _run_command(cfg: CliConfig):
    if cfg.command == "info":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        sym = is_symmetric(m) if m.nrows == m.ncols else False
        return {
            "nrows": m.nrows,
            "ncols": m.ncols,
            "nnz": nvals(m),
            "symmetric": sym,
            "domain": m.domain.kind,
        }
    if cfg.command == "degrees":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        d = algorithms.degrees(m, cfg.direction)
        return {"direction": cfg.direction, "degrees": _pairs(d)}
    if cfg.command == "bfs":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        res = algorithms.bfs(m, list(cfg.sources))
        return {"levels": _pairs(res.levels), "reached": res.reached_count}
    if cfg.command == "sssp":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        dist = algorithms.sssp_minplus(m, cfg.source)
        return {"distances": _pairs(dist)}
    if cfg.command == "cc":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        labels = algorithms.connected_components(m)
        distinct = {x for _i, x in vector_entries(labels)}
        return {"labels": _pairs(labels), "components": len(distinct)}
    if cfg.command == "triangles":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        return algorithms.triangle_count(m)
    if cfg.command == "clustering":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        c = algorithms.clustering_coefficients(m)
        return {"coefficients": _pairs(c)}
    if cfg.command == "pagerank":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        res = algorithms.pagerank(m, cfg.alpha, cfg.max_iters, cfg.tol)
        return {
            "ranks": _pairs(res.ranks),
            "iterations": res.iterations,
            "residual": res.residual,
        }
    if cfg.command == "mxm":
        a = _load_matrix(cfg.input_paths[0], cfg.undirected)
        b = _load_matrix(cfg.input_paths[1], cfg.undirected)
        s = _resolve_semiring(cfg.semiring, a.domain)
        c = mxm(a, b, s)
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            write_matrix_market(to_tuples(c), fh)
        return {
            "output": cfg.output_path,
            "nrows": c.nrows,
            "ncols": c.ncols,
            "nnz": nvals(c),
        }
    if cfg.command == "mxv":
        a = _load_matrix(cfg.input_paths[0], cfg.undirected)
        v = _load_vector(cfg.input_paths[1])
        s = _resolve_semiring(cfg.semiring, a.domain)
        w = mxv(a, v, s, transpose_input=cfg.transpose)
        return {"length": w.length, "entries": _pairs(w)}
    if cfg.command == "convert":
        m = _load_matrix(cfg.input_paths[0], cfg.undirected)
        coo = to_tuples(m)
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            write_matrix_market(coo, fh)
        return {
            "output": cfg.output_path,
            "nrows": m.nrows,
            "ncols": m.ncols,
            "nnz": nvals(m),
        }
    raise UsageError(f"unknown command {cfg.command!r}")


def _render_tsv(result) -> str:
    if not isinstance(result, dict):
        return f"{result}\n"
    out = []
    for key, value in result.items():
        if isinstance(value, list):
            for item in value:
                if isinstance(item, list):
                    out.append("\t".join(str(x) for x in [key, *item]))
                else:
                    out.append(f"{key}\t{item}")
        else:
            out.append(f"{key}\t{value}")
    return "".join(line + "\n" for line in out)


def run(argv=None) -> int:
    """Parse argv, execute one command, print its result; returns the
    process exit code instead of raising."""
    try:
        try:
            ns = _build_parser().parse_args(argv)
        except SystemExit as e:  # --help and --version exit via argparse
            return int(e.code or 0)
        _check_threads_env()
        cfg = _config_from(ns)
        started = time.perf_counter()
        result = _run_command(cfg)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        if cfg.output_format == "tsv":
            sys.stdout.write(_render_tsv(result))
        else:
            payload = {
                "command": cfg.command,
                "result": result,
                "elapsed_ms": round(elapsed_ms, 3),
            }
            sys.stdout.write(json.dumps(payload) + "\n")
        return 0
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (_DataError, ParseError, UnserializableDomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (
        PreconditionError,
        DimensionMismatchError,
        DomainMismatchError,
        IndexRangeError,
        DuplicateIndexError,
        UnsupportedDomainError,
        UnknownSemiringError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
