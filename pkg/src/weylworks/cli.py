"""Command-line entry point.

One executable, ``weylworks``, exposing characters, explicit modules,
the exterior-power bimodule, lattice strata, finite-field point counts,
and a cross-validation driver that runs the independent constructions
on the same data and compares the numbers.

JSON is the stable machine contract (schema_version 1); TSV is a plain
human-readable table.  Integers that may not survive a double-precision
round trip (|x| >= 2^53) are emitted as decimal strings, as are all
polynomial coefficients and matrix entries.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import characters, glmodules, lattice, skewhowe, springercount
from .errors import WeylworksError
from .linalg import RatMat
from .weights import as_partition, compositions, conjugate

SCHEMA_VERSION = 1

_HONESTY_NOTES = """\
honesty notes:
  * `lattice mv-cycles` counts are derived from character data (they equal
    weight-space dimensions), not computed geometrically; no cycle geometry
    is constructed anywhere in this package.
  * matrix entries of raising operators between fixed weight spaces are
    basis-dependent and are not certified by the test suite; for the induced
    module with highest weight (2,1,0) at n=m=3 only the rank (= 1) of E_1
    from the (1,1,1) weight space to the (2,0,1) weight space is verified,
    because the rank does not depend on the basis choice.
  * point counts assume the chain varieties are paved by affine cells; the
    interpolated polynomial must have nonnegative integer coefficients and
    its leading coefficient is cross-checked against a Kostka number, so a
    failure of the assumption cannot pass silently.
"""

_EPILOG = _HONESTY_NOTES + """
environment:
  WEYLWORKS_MAX_DIM   cap on constructed module dimensions (default 1000000)

exit codes:
  0  success (and, for springer/crossval, all cross-checks agree)
  1  computation error or cross-check mismatch
  2  usage error
"""


def _jnum(x: int):
    """JSON-safe integer: plain int when exact in a double, else a string."""
    return x if -(2**53) < x < 2**53 else str(x)


def _ints_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _fmt_vec(vec) -> str:
    return ",".join(str(x) for x in vec)


def _canon(value):
    """Wire shape -> config shape: lists become tuples, recursively."""
    if isinstance(value, dict):
        return {k: _canon(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return tuple(_canon(v) for v in value)
    return value


def _thaw(value):
    """Config shape -> wire shape: tuples become lists, recursively."""
    if isinstance(value, dict):
        return {k: _thaw(v) for k, v in value.items()}
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation; round-trips exactly through to_dict/from_dict."""

    command: str
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    size_guard: int | None = None
    primes: tuple[int, ...] | None = None
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "params", _canon(self.params))
        if self.fmt not in ("json", "tsv"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "params": _thaw(self.params),
            "format": self.fmt,
            "size_guard": self.size_guard,
            "primes": None if self.primes is None else list(self.primes),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        primes = data.get("primes")
        return cls(
            command=data["command"],
            params=data.get("params", {}),
            fmt=data.get("format", "json"),
            size_guard=data.get("size_guard"),
            primes=None if primes is None else tuple(int(p) for p in primes),
            seed=int(data.get("seed", 0)),
        )

    def guard_kwargs(self) -> dict:
        return {} if self.size_guard is None else {"size_guard": self.size_guard}


# ---------------------------------------------------------------------------
# cross-validation driver


@dataclass(frozen=True)
class CrossvalRow:
    mu: tuple[int, ...]
    kostka: int
    skewhowe: int
    springer: int
    lattice_mv: int

    @property
    def match(self) -> bool:
        return self.kostka == self.skewhowe == self.springer == self.lattice_mv


@dataclass(frozen=True)
class CrossvalReport:
    lam: tuple[int, ...]
    n: int
    m: int
    rows: tuple[CrossvalRow, ...]

    @property
    def match(self) -> bool:
        return all(row.match for row in self.rows)


def cross_validate(lam, n: int, m: int, *,
                   size_guard: int | None = characters.DEFAULT_SIZE_GUARD,
                   max_dim: int | None = None) -> CrossvalReport:
    """Compare four independent computations of the same multiplicities.

    For every composition mu of |lam| into n parts, the Kostka number
    kostka(conjugate(lam), mu) is computed combinatorially, as the hom
    space dimension inside the exterior-power bimodule, as the leading
    coefficient of the finite-field point-count polynomial for Jordan
    type lam, and as the lattice-model cycle count for conjugate(lam).
    The four never disagree unless something is broken; the report keeps
    all values so a disagreement is visible rather than asserted away.
    """
    shape = as_partition(lam)
    if shape and shape[0] > n:
        raise ValueError(f"largest part of {shape} exceeds n={n}")
    if len(shape) > m:
        raise ValueError(f"{shape} has more than m={m} parts")
    total = sum(shape)
    shape_conj = conjugate(shape)
    bim = skewhowe.build_bimodule(n, m, total, max_dim=max_dim)
    rows = []
    for mu in compositions(total, n):
        try:
            combinatorial = characters.kostka(shape_conj, mu, size_guard=size_guard)
            hom_dim = skewhowe.hom_space(bim, shape, mu).dim
            leading = springercount.point_count_table(shape, mu, n).leading_coefficient
            cycles = lattice.mv_cycle_count(shape_conj, mu, n, size_guard=size_guard)
        except WeylworksError as err:
            raise WeylworksError(f"cross-validation failed at mu={mu}: {err}") from err
        rows.append(
            CrossvalRow(
                mu=mu,
                kostka=combinatorial,
                skewhowe=hom_dim,
                springer=leading,
                lattice_mv=cycles,
            )
        )
    return CrossvalReport(lam=shape, n=n, m=m, rows=tuple(rows))


# ---------------------------------------------------------------------------
# module expressions for `decompose`


def parse_module_expr(text: str, n: int, *, max_dim: int | None = None):
    """Build an ExplicitModule from a tiny expression language.

    Grammar: std | det | adjoint | sym(K) | ext(K) | irrep(P1,P2,...)
    | tensor(EXPR, EXPR).  Whitespace is ignored.
    """
    pos = 0

    def error(msg: str) -> ValueError:
        return ValueError(f"bad module expression at position {pos}: {msg}")

    def skip() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip()
        if pos >= len(text) or text[pos] != ch:
            raise error(f"expected {ch!r}")
        pos += 1

    def name() -> str:
        nonlocal pos
        skip()
        start = pos
        while pos < len(text) and text[pos].isalpha():
            pos += 1
        if start == pos:
            raise error("expected a constructor name")
        return text[start:pos]

    def integer() -> int:
        nonlocal pos
        skip()
        start = pos
        if pos < len(text) and text[pos] == "-":
            pos += 1
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos or text[start:pos] == "-":
            raise error("expected an integer")
        return int(text[start:pos])

    def int_args() -> list[int]:
        expect("(")
        vals = [integer()]
        skip()
        while pos < len(text) and text[pos] == ",":
            expect(",")
            vals.append(integer())
            skip()
        expect(")")
        return vals

    def expr():
        head = name().lower()
        if head in ("std", "standard"):
            return glmodules.standard_module(n)
        if head == "det":
            return glmodules.ext_power(n, n, max_dim=max_dim)
        if head == "adjoint":
            return glmodules.adjoint_module(n)
        if head == "sym":
            (k,) = int_args()
            return glmodules.sym_power(k, n, max_dim=max_dim)
        if head == "ext":
            (k,) = int_args()
            return glmodules.ext_power(k, n, max_dim=max_dim)
        if head == "irrep":
            return glmodules.irrep_plucker(int_args(), n, max_dim=max_dim)
        if head == "tensor":
            expect("(")
            left = expr()
            expect(",")
            right = expr()
            expect(")")
            return glmodules.tensor(left, right, max_dim=max_dim)
        raise error(f"unknown constructor {head!r}")

    module = expr()
    skip()
    if pos != len(text):
        raise error("trailing input")
    return module


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (payload, tsv rows, exit code)


def _weight_table(mod) -> list[tuple[tuple[int, ...], int]]:
    counts: dict[tuple[int, ...], int] = {}
    for w in mod.basis_weights:
        counts[w] = counts.get(w, 0) + 1
    return [(w, counts[w]) for w in sorted(counts, reverse=True)]


def _matrix_json(mat: RatMat) -> dict:
    return {
        "rows": mat.nrows,
        "cols": mat.ncols,
        "entries": [[r, c, str(Fraction(v))] for r, c, v in mat.entries()],
    }


def _run_character(cfg: RunConfig):
    lam = cfg.params["lam"]
    n = cfg.params["n"]
    table = characters.character_table(lam, n, **cfg.guard_kwargs())
    entries = table.sorted_entries()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "character",
        "lambda": list(lam),
        "n": n,
        "dim": _jnum(table.dim()),
        "entries": [
            {"mu": list(mu), "multiplicity": _jnum(mult)} for mu, mult in entries
        ],
    }
    rows = [["mu", "multiplicity"]]
    rows += [[_fmt_vec(mu), str(mult)] for mu, mult in entries]
    return payload, rows, 0


def _run_decompose(cfg: RunConfig):
    n = cfg.params["n"]
    text = cfg.params["module"]
    module = parse_module_expr(text, n)
    result = glmodules.decompose(module, **cfg.guard_kwargs())
    mults = sorted(result.multiplicities.items(), reverse=True)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "module": text,
        "n": n,
        "dim": _jnum(module.dim),
        "multiplicities": [
            {"lambda": list(w), "multiplicity": _jnum(m)} for w, m in mults
        ],
    }
    rows = [["lambda", "multiplicity"]]
    rows += [[_fmt_vec(w), str(m)] for w, m in mults]
    return payload, rows, 0


def _run_irrep(cfg: RunConfig):
    lam = cfg.params["lam"]
    n = cfg.params["n"]
    module = glmodules.irrep_plucker(lam, n)
    table = _weight_table(module)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "irrep",
        "lambda": list(lam),
        "n": n,
        "dim": _jnum(module.dim),
        "weights": [
            {"mu": list(mu), "multiplicity": _jnum(mult)} for mu, mult in table
        ],
    }
    if cfg.params.get("emit_matrices"):
        payload["generators"] = {
            "E": [_matrix_json(mat) for mat in module.E],
            "F": [_matrix_json(mat) for mat in module.F],
        }
    rows = [["mu", "multiplicity"]]
    rows += [[_fmt_vec(mu), str(mult)] for mu, mult in table]
    return payload, rows, 0


def _run_skewhowe(cfg: RunConfig):
    n = cfg.params["n"]
    m = cfg.params["m"]
    big_n = cfg.params["N"]
    lam = cfg.params.get("lam")
    if lam is None:
        pairs = skewhowe.decompose_howe(n, m, big_n)
        entries = []
        for wn, wm in pairs:
            entries.append(
                {
                    "gln": list(wn),
                    "glm": list(wm),
                    "dim_gln": _jnum(characters.dim_irrep(wn, n, **cfg.guard_kwargs())),
                    "dim_glm": _jnum(characters.dim_irrep(wm, m, **cfg.guard_kwargs())),
                }
            )
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "skewhowe",
            "n": n,
            "m": m,
            "N": big_n,
            "dim": _jnum(comb(n * m, big_n)),
            "pairs": entries,
        }
        rows = [["gln", "glm", "dim_gln", "dim_glm"]]
        rows += [
            [
                _fmt_vec(e["gln"]),
                _fmt_vec(e["glm"]),
                str(e["dim_gln"]),
                str(e["dim_glm"]),
            ]
            for e in entries
        ]
        return payload, rows, 0
    bim = skewhowe.build_bimodule(n, m, big_n)
    module = skewhowe.induced_gln_module(bim, lam)
    table = _weight_table(module)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "skewhowe",
        "n": n,
        "m": m,
        "N": big_n,
        "lambda": list(lam),
        "dim": _jnum(module.dim),
        "weights": [
            {"mu": list(mu), "multiplicity": _jnum(mult)} for mu, mult in table
        ],
    }
    rows = [["mu", "multiplicity"]]
    rows += [[_fmt_vec(mu), str(mult)] for mu, mult in table]
    return payload, rows, 0


def _load_subspace(cfg: RunConfig) -> lattice.LatticeSubspace:
    path = cfg.params.get("subspace")
    mu = cfg.params.get("mu")
    if (path is None) == (mu is None):
        raise ValueError("give exactly one of --mu and --subspace")
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            return lattice.LatticeSubspace.from_dict(json.load(handle))
    n = cfg.params.get("n")
    if n is None:
        n = len(mu)
    return lattice.fixed_point(mu, n)


def _run_lattice(cfg: RunConfig):
    op = cfg.params["operation"]
    if op == "mv-cycles":
        lam = cfg.params["lam"]
        mu = cfg.params["mu"]
        n = cfg.params["n"]
        count = lattice.mv_cycle_count(lam, mu, n, **cfg.guard_kwargs())
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "lattice mv-cycles",
            "lambda": list(lam),
            "mu": list(mu),
            "n": n,
            "count": _jnum(count),
            "derivation": "character data (weight multiplicity), not geometry",
        }
        rows = [["lambda", "mu", "count"], [_fmt_vec(lam), _fmt_vec(mu), str(count)]]
        return payload, rows, 0
    sub = _load_subspace(cfg)
    jt = lattice.jordan_type(sub)
    if op == "jordan":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "lattice jordan",
            "n": sub.n,
            "D": sub.D,
            "dim": sub.dim,
            "jordan_type": list(jt),
        }
        rows = [["n", "D", "dim", "jordan_type"]]
        rows += [[str(sub.n), str(sub.D), str(sub.dim), _fmt_vec(jt)]]
        return payload, rows, 0
    if op == "stratum":
        lam = cfg.params["lam"]
        location = lattice.stratum_membership(sub, lam)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "lattice stratum",
            "lambda": list(as_partition(lam)),
            "jordan_type": list(jt),
            "location": location.value,
        }
        rows = [["lambda", "jordan_type", "location"]]
        rows += [[_fmt_vec(as_partition(lam)), _fmt_vec(jt), location.value]]
        return payload, rows, 0
    raise ValueError(f"unknown lattice operation {op!r}")


def _run_springer(cfg: RunConfig):
    nu = cfg.params["nu"]
    mu = cfg.params["mu"]
    n = cfg.params["n"]
    table = springercount.point_count_table(nu, mu, n, primes=cfg.primes)
    expected = characters.kostka(
        conjugate(table.nu), table.mu, **cfg.guard_kwargs()
    )
    lead = table.leading_coefficient
    match = lead == expected
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "springer",
        "nu": list(table.nu),
        "mu": list(table.mu),
        "n": n,
        "counts": {str(q): _jnum(c) for q, c in table.evaluations},
        "poly": [str(c) for c in table.coefficients],
        "leading": _jnum(lead),
        "kostka": _jnum(expected),
        "match": match,
    }
    rows = [["q", "count"]]
    rows += [[str(q), str(c)] for q, c in table.evaluations]
    rows += [
        ["poly", " ".join(str(c) for c in table.coefficients)],
        ["leading", str(lead)],
        ["kostka", str(expected)],
        ["match", "true" if match else "false"],
    ]
    return payload, rows, 0 if match else 1


def _run_crossval(cfg: RunConfig):
    lam = cfg.params["lam"]
    n = cfg.params["n"]
    m = cfg.params["m"]
    report = cross_validate(lam, n, m, **cfg.guard_kwargs())
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "crossval",
        "lambda": list(report.lam),
        "n": n,
        "m": m,
        "rows": [
            {
                "mu": list(row.mu),
                "kostka": _jnum(row.kostka),
                "skewhowe": _jnum(row.skewhowe),
                "springer": _jnum(row.springer),
                "lattice_mv": _jnum(row.lattice_mv),
                "match": row.match,
            }
            for row in report.rows
        ],
        "match": report.match,
    }
    rows = [["mu", "kostka", "skewhowe", "springer", "lattice-mv", "match"]]
    rows += [
        [
            _fmt_vec(row.mu),
            str(row.kostka),
            str(row.skewhowe),
            str(row.springer),
            str(row.lattice_mv),
            "true" if row.match else "false",
        ]
        for row in report.rows
    ]
    return payload, rows, 0 if report.match else 1


_HANDLERS = {
    "character": _run_character,
    "decompose": _run_decompose,
    "irrep": _run_irrep,
    "skewhowe": _run_skewhowe,
    "lattice": _run_lattice,
    "springer": _run_springer,
    "crossval": _run_crossval,
}


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("json", "tsv"),
        default="json",
        help="output format (json is the machine contract, tsv is for reading)",
    )
    sub.add_argument(
        "--size-guard",
        type=int,
        default=None,
        metavar="SIZE",
        help="override the partition-size guard on tableau enumeration",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylworks",
        description=(
            "Exact computations with irreducible GL_n representations: "
            "character tables, explicit modules with raising/lowering "
            "operators, the exterior-power bimodule, lattice strata, and "
            "finite-field point counts, all cross-validated against each "
            "other."
        ),
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed recorded in the run configuration (commands are deterministic)",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")

    p = commands.add_parser(
        "character", help="weight multiplicities of one irreducible"
    )
    p.add_argument("--lambda", dest="lam", type=_ints_arg, required=True,
                   help="highest weight, comma-separated (use --lambda=… if negative)")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    _add_common(p)

    p = commands.add_parser(
        "decompose", help="decompose a constructed module into irreducibles"
    )
    p.add_argument("--module", required=True,
                   help="expression: std, det, adjoint, sym(K), ext(K), "
                        "irrep(...), tensor(A,B)")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    _add_common(p)

    p = commands.add_parser(
        "irrep", help="build one irreducible inside a tensor product of "
                      "exterior powers"
    )
    p.add_argument("--lambda", dest="lam", type=_ints_arg, required=True)
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("--emit-matrices", nargs="?", const="json", choices=("json",),
                   default=None,
                   help="include raising/lowering matrices in the JSON output")
    _add_common(p)

    p = commands.add_parser(
        "skewhowe", help="decompose the exterior power of C^n (x) C^m, or "
                         "build the induced module for one factor"
    )
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("-m", "--m", dest="m", type=int, required=True)
    p.add_argument("-N", "--N", dest="N", type=int, required=True,
                   help="exterior power degree")
    p.add_argument("--lambda", dest="lam", type=_ints_arg, default=None,
                   help="emit the induced module for this partition instead")
    _add_common(p)

    p = commands.add_parser("lattice", help="shift-stable subspace queries")
    lattice_ops = p.add_subparsers(dest="operation", metavar="operation")

    q = lattice_ops.add_parser("jordan", help="Jordan type of the shift operator")
    q.add_argument("--mu", type=_ints_arg, default=None,
                   help="build the monomial subspace for this vector")
    q.add_argument("-n", "--n", dest="n", type=int, default=None)
    q.add_argument("--subspace", default=None, metavar="FILE",
                   help="JSON file holding a subspace instead of --mu")
    _add_common(q)

    q = lattice_ops.add_parser("stratum", help="locate a subspace relative to "
                                               "a stratum closure")
    q.add_argument("--lambda", dest="lam", type=_ints_arg, required=True)
    q.add_argument("--mu", type=_ints_arg, default=None)
    q.add_argument("-n", "--n", dest="n", type=int, default=None)
    q.add_argument("--subspace", default=None, metavar="FILE")
    _add_common(q)

    q = lattice_ops.add_parser(
        "mv-cycles",
        help="cycle count of a given weight (derived from character data, "
             "not computed geometrically)",
    )
    q.add_argument("--lambda", dest="lam", type=_ints_arg, required=True)
    q.add_argument("--mu", type=_ints_arg, required=True)
    q.add_argument("-n", "--n", dest="n", type=int, required=True)
    _add_common(q)

    p = commands.add_parser(
        "springer", help="finite-field point counts and their polynomial"
    )
    p.add_argument("--nu", type=_ints_arg, required=True, help="Jordan type")
    p.add_argument("--mu", type=_ints_arg, required=True, help="dimension jumps")
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("--primes", type=_ints_arg, default=None,
                   help="primes to evaluate at (default: smallest primes)")
    _add_common(p)

    p = commands.add_parser(
        "crossval", help="run all constructions on one partition and compare"
    )
    p.add_argument("--lambda", dest="lam", type=_ints_arg, required=True)
    p.add_argument("-n", "--n", dest="n", type=int, required=True)
    p.add_argument("-m", "--m", dest="m", type=int, required=True)
    _add_common(p)

    return parser


_CONFIG_SKIP = {"command", "operation", "format", "size_guard", "primes", "seed"}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in _CONFIG_SKIP and value is not None
    }
    if getattr(args, "operation", None) is not None:
        params["operation"] = args.operation
    return RunConfig(
        command=args.command,
        params=params,
        fmt=getattr(args, "format", "json"),
        size_guard=getattr(args, "size_guard", None),
        primes=getattr(args, "primes", None),
        seed=args.seed,
    )


def run(cfg: RunConfig, out=None) -> int:
    """Execute one configuration, writing the result to ``out`` (stdout)."""
    out = sys.stdout if out is None else out
    handler = _HANDLERS.get(cfg.command)
    if handler is None:
        raise ValueError(f"unknown command {cfg.command!r}")
    payload, rows, code = handler(cfg)
    if cfg.fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for row in rows:
            out.write("\t".join(row) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.command == "lattice" and getattr(args, "operation", None) is None:
        print(
            "error: lattice needs an operation: jordan | stratum | mv-cycles",
            file=sys.stderr,
        )
        return 2
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except (WeylworksError, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
