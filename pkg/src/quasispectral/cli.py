"""
Command-line front end.

    quasispectral table 3
    quasispectral verify qc-jacobi 1
    quasispectral zeros --family jacobi --alpha 0.1 --beta -0.4 --n 8 --gamma sol:1
    quasispectral chain --family laguerre --alpha -0.5 --gamma sol:1 --point 0 --n 10
    quasispectral opuc --point i --n 5

Exit status: 0 success, 1 bad configuration, 2 numeric failure, 3 table mismatch.
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import math
import operator
import sys
from dataclasses import dataclass, field

import numpy as np

from . import tables
from .chains import chain_sequence, quasi_chain_sequence
from .classical import jacobi_recurrence, laguerre_recurrence
from .errors import (
    DegenerateParameterError,
    DomainError,
    ExistenceError,
    MissingCoefficientError,
    NotOrthogonalizableError,
    NumericFailure,
    ShapeError,
)
from .jacobi_matrix import commutation_residual, intertwiner, truncate
from .opuc import (
    VerblunskySequence,
    christoffel_opuc_poly,
    classify_unit_disc,
    quasi_christoffel_opuc_poly,
    szego_sequence,
    verblunsky_from,
)
from .poly_core import RecurrenceCoefficients, build_sequence
from .quasi import (
    Family,
    QuasiCoefficientFamily,
    compact_form_residual,
    gamma_closed_form,
    orthogonality_residual,
    quasi_coeffs,
    quasi_recurrence,
    transformed_base,
)
from .spectral import ChristoffelFamily, christoffel_recurrence, geronimus_recurrence, jacobi_geronimus_family
from .zeros import classify_support, general_roots, interlace, ops_zeros

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_MISMATCH = 0, 1, 2, 3

VERIFY_GRID = (-0.9, -0.35, 0.45, 1.3, 3.0)
VERIFY_N = 50
COMPACT_N = 15
COMPACT_POINTS = 20
MATRIX_N = 20


class ConfigError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.12g}"


# ----------------------------------------------------------------------
# parameter specs


def parse_gamma(spec: str | None, family: str, alpha: float, beta: float | None) -> QuasiCoefficientFamily | None:
    """const:<v> | sol:<id> | file:<path> (one gamma per line, gamma_1 first)."""
    if spec is None:
        return None
    kind, _, rest = spec.partition(":")
    if kind == "const":
        return QuasiCoefficientFamily.constant(_float(rest, "--gamma"))
    if kind == "sol":
        if family not in ("jacobi", "laguerre", "qg-jacobi"):
            raise ConfigError(f"closed-form gamma needs family jacobi, laguerre or qg-jacobi, not {family}")
        fam = {"jacobi": Family.QC_JACOBI, "laguerre": Family.QC_LAGUERRE, "qg-jacobi": Family.QG_JACOBI}[family]
        return gamma_closed_form(fam, int(_float(rest, "--gamma")), alpha, beta)
    if kind == "file":
        return QuasiCoefficientFamily.table(_read_numbers(rest))
    raise ConfigError(f"--gamma must be const:<v>, sol:<id> or file:<path>, got {spec!r}")


def _float(text: str, flag: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{flag}: cannot read {text!r} as a number") from None


def _read_numbers(path: str) -> list[float]:
    try:
        with open(path) as fh:
            return [float(t) for line in fh for t in line.replace(",", " ").split()]
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    if t in ("i", "+i"):
        return 1j
    if t == "-i":
        return -1j
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        raise ConfigError(f"cannot read {text!r} as a complex number") from None


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def _eval_node(node, n):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, n)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
        return node.value
    if isinstance(node, ast.Name):
        if node.id == "n":
            return n
        if node.id in ("i", "j"):
            return 1j
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left, n), _eval_node(node.right, n))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
        return _UNOPS[type(node.op)](_eval_node(node.operand, n))
    raise ConfigError(f"unsupported element in a_n expression: {ast.dump(node)}")


def parse_an(spec: str | None):
    """const:<complex> | expr:<arithmetic in n and i> | file:<path>."""
    if spec is None:
        return None
    kind, _, rest = spec.partition(":")
    if kind == "const":
        v = parse_complex(rest)
        return lambda n: v
    if kind == "expr":
        # "2i" style literals are not Python; insert the product
        src = "".join(("*i" if ch == "i" and k and (rest[k - 1].isdigit() or rest[k - 1] in ".)") else ch) for k, ch in enumerate(rest))
        try:
            tree = ast.parse(src, mode="eval")
        except SyntaxError:
            raise ConfigError(f"cannot parse a_n expression {rest!r}") from None
        _eval_node(tree, 1)
        return lambda n: complex(_eval_node(tree, n))
    if kind == "file":
        path = rest
        try:
            with open(path) as fh:
                vals = [parse_complex(t) for t in fh.read().split()]
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc.strerror}") from None

        def table(n):
            if not 1 <= n <= len(vals):
                raise ConfigError(f"a_{n} missing from {path}")
            return vals[n - 1]

        return table
    raise ConfigError(f"--an must be const:<v>, expr:<e> or file:<path>, got {spec!r}")


def read_custom_recurrence(path: str) -> RecurrenceCoefficients:
    """CSV with header c,lam; row k holds c_k and lambda_k (lambda_1 unused)."""
    try:
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    if not rows or "c" not in rows[0] or "lam" not in rows[0]:
        raise ConfigError(f"{path}: need a header with columns c and lam")
    c = [float(r["c"]) for r in rows]
    lam = [float(r["lam"]) for r in rows[1:]]
    return RecurrenceCoefficients.from_arrays(c, lam, label=f"custom[{path}]")


# ----------------------------------------------------------------------
# configuration


@dataclass
class RunConfig:
    command: str
    family: str = "jacobi"
    alpha: float = 0.0
    beta: float | None = None
    n: int | None = None
    solution: int | None = None
    gamma: str | None = None
    point: str | None = None
    an: str | None = None
    transform: str | None = None
    against: str = "next"
    boundary: float | None = None
    table_id: int | None = None
    errata: bool = False
    recurrence: str | None = None
    fmt: str = "table"
    tol: float | None = None
    extra: dict = field(default_factory=dict)

    def need(self, *names):
        missing = [k for k in names if getattr(self, k) is None]
        if missing:
            raise ConfigError(f"{self.command}: missing --{', --'.join(missing)}")


def _base_recurrence(cfg: RunConfig) -> RecurrenceCoefficients:
    if cfg.family == "jacobi":
        cfg.need("beta")
        return jacobi_recurrence((cfg.alpha, cfg.beta))
    if cfg.family == "laguerre":
        return laguerre_recurrence(cfg.alpha)
    if cfg.family == "custom":
        cfg.need("recurrence")
        return read_custom_recurrence(cfg.recurrence)
    raise ConfigError(f"family {cfg.family} has no real-line recurrence")


def _default_point(cfg: RunConfig) -> float:
    if cfg.point is not None:
        return _float(cfg.point, "--point")
    if cfg.family == "jacobi":
        return -1.0
    if cfg.family == "laguerre":
        return 0.0
    raise ConfigError("--point is required for a custom recurrence")


def _gamma_family(cfg: RunConfig) -> str:
    if cfg.transform == "geronimus":
        return "qg-jacobi"
    return cfg.family


def _transformed(cfg: RunConfig, N: int) -> RecurrenceCoefficients:
    """The recurrence the quasi combination is built on."""
    transform = cfg.transform or "christoffel"
    base = _base_recurrence(cfg)
    if transform == "none":
        return base
    a = _default_point(cfg)
    if transform == "christoffel":
        if cfg.point is None and cfg.family in ("jacobi", "laguerre"):
            fam = Family.QC_JACOBI if cfg.family == "jacobi" else Family.QC_LAGUERRE
            return transformed_base(fam, cfg.alpha, cfg.beta)
        return christoffel_recurrence(ChristoffelFamily(base, a), N + 1)
    if transform == "geronimus":
        if cfg.family != "jacobi" or a != -1.0:
            raise ConfigError("the Geronimus transform is calibrated for Jacobi at a = -1 only")
        return geronimus_recurrence(jacobi_geronimus_family(cfg.alpha, cfg.beta), N + 1)
    raise ConfigError(f"unknown transform {transform}")


def _gamma(cfg: RunConfig):
    spec = cfg.gamma
    if spec is None and cfg.solution is not None:
        spec = f"sol:{cfg.solution}"
    if spec is not None and spec.startswith("sol:") and cfg.point is not None:
        default = -1.0 if cfg.family == "jacobi" else 0.0
        if _float(cfg.point, "--point") != default:
            raise ConfigError("closed-form gamma families are tied to a = -1 (Jacobi) or a = 0 (Laguerre)")
    return parse_gamma(spec, _gamma_family(cfg), cfg.alpha, cfg.beta)


# ----------------------------------------------------------------------
# output


@dataclass
class Result:
    rows: list
    summary: dict
    status: int = EXIT_OK


def _cell(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return fmt(float(v))
    return v


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (float, np.floating)):
        f = float(v)
        return float(fmt(f)) if math.isfinite(f) else str(f)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


def render(res: Result, form: str) -> str:
    if form == "json":
        return json.dumps(_jsonable({"summary": res.summary, "rows": res.rows}), indent=2, sort_keys=True) + "\n"
    if not res.rows:
        keys = []
    else:
        keys = list(res.rows[0].keys())
    if form == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for r in res.rows:
            w.writerow([_cell(r[k]) for k in keys])
        return buf.getvalue()
    cells = [[str(_cell(r[k])) for k in keys] for r in res.rows]
    widths = [max([len(k)] + [len(c[i]) for c in cells]) for i, k in enumerate(keys)]
    lines = ["  ".join(k.rjust(w) for k, w in zip(keys, widths))] if keys else []
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    for k, v in res.summary.items():
        lines.append(f"# {k}: {_cell(v) if not isinstance(v, (dict, list)) else json.dumps(_jsonable(v), sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _root_rows(roots) -> list[dict]:
    return [{"index": k, "re": float(z.real), "im": float(z.imag)} for k, z in enumerate(roots, start=1)]


# ----------------------------------------------------------------------
# commands


def cmd_table(cfg: RunConfig) -> Result:
    cfg.need("table_id")
    if cfg.table_id not in tables.TABLES:
        raise ConfigError(f"table id must be 1..10, got {cfg.table_id}")
    tr = tables.compute_table(cfg.table_id, errata=cfg.errata, tol=cfg.tol or tables.TABLE_TOL)
    rows = []
    for c in tr.cells:
        rows.append({
            "table": c.table_id, "row": c.row, "col": c.col,
            "ref_re": c.reference.real, "ref_im": c.reference.imag,
            "re": c.computed.real, "im": c.computed.imag,
            "delta": c.delta, "ok": c.ok, "corrected": c.corrected,
        })
    summary = {
        "table": tr.table_id, "title": tr.title, "cells": len(tr.cells),
        "failures": len(tr.failures()), "max_delta": tr.max_delta, "tol": tr.tol, "errata": cfg.errata,
    }
    return Result(rows, summary, EXIT_OK if tr.ok else EXIT_MISMATCH)


def _chebyshev(k: int) -> np.ndarray:
    return np.cos((2 * np.arange(k) + 1) * np.pi / (2 * k))


def verify_family(family, solution: int, grid=VERIFY_GRID, *, n_max=VERIFY_N, compact_n=COMPACT_N, matrix_n=MATRIX_N) -> dict:
    """Maximum residuals of one closed-form family over a parameter grid."""
    family = Family.parse(family)
    pairs = [(a, b) for a in grid for b in grid] if family.is_jacobi else [(a, None) for a in grid]
    x = _chebyshev(COMPACT_POINTS)
    if not family.is_jacobi:
        x = 20 * (x + 1)
    worst = {"residual": 0.0, "compact": 0.0, "commutation": 0.0}
    where = {}
    for a, b in pairs:
        gamma = gamma_closed_form(family, solution, a, b)
        base = transformed_base(family, a, b)
        r = max(abs(orthogonality_residual(base, gamma, n)) for n in range(2, n_max + 1))
        cf = max(compact_form_residual(family, solution, a, b, n, x, relative=True) for n in range(1, compact_n + 1))
        qr = quasi_recurrence(base, gamma, matrix_n)
        cm = commutation_residual(truncate(qr, matrix_n), truncate(base, matrix_n), intertwiner(gamma, matrix_n))
        for key, v in (("residual", r), ("compact", cf), ("commutation", cm)):
            if v >= worst[key]:
                worst[key] = v
                where[key] = {"alpha": a, "beta": b}
    return {"family": family.value, "solution": solution, "grid": list(grid), "points": len(pairs), **worst, "argmax": where}


def cmd_verify(cfg: RunConfig) -> Result:
    fam = cfg.extra.get("verify_family") or cfg.family
    try:
        family = Family.parse(fam)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None
    sol = cfg.solution
    if sol is None:
        raise ConfigError("verify: missing solution id")
    if sol not in family.solutions:
        raise ConfigError(f"{family.value} has solutions {family.solutions}")
    tol = cfg.tol or 1e-9
    rep = verify_family(family, sol)
    rep["tol"] = tol
    rep["ok"] = max(rep["residual"], rep["compact"], rep["commutation"]) < tol
    rows = [{"quantity": k, "max": rep[k]} for k in ("residual", "compact", "commutation")]
    return Result(rows, rep, EXIT_OK if rep["ok"] else EXIT_MISMATCH)


def _real_line_zeros(cfg: RunConfig):
    cfg.need("n")
    gamma = _gamma(cfg)
    if gamma is None and cfg.transform in (None, "none"):
        rc = _base_recurrence(cfg)
        return ops_zeros(rc, cfg.n), rc
    base = _transformed(cfg, cfg.n)
    if gamma is None:
        return ops_zeros(base, cfg.n), base
    return general_roots(quasi_coeffs(base, gamma, cfg.n)), base


def _support(cfg: RunConfig):
    return {"jacobi": (-1.0, 1.0), "laguerre": (0.0, math.inf)}.get(cfg.family)


def _opuc_poly(cfg: RunConfig):
    cfg.need("n")
    g = parse_complex(cfg.point) if cfg.point is not None else 1.0
    an = parse_an(cfg.an)
    v = VerblunskySequence.lebesgue()
    if an is None:
        return christoffel_opuc_poly(v, g, cfg.n), g
    return quasi_christoffel_opuc_poly(v, g, an, cfg.n), g


def cmd_zeros(cfg: RunConfig) -> Result:
    if cfg.family == "opuc":
        p, g = _opuc_poly(cfg)
        rep = classify_unit_disc(p)
        summary = {"family": "opuc", "point": [g.real, g.imag] if isinstance(g, complex) else [g, 0.0], "n": cfg.n,
                   "inside_disc": rep.inside_disc, "on_circle": rep.on_circle, "outside_disc": rep.outside_disc}
        return Result(_root_rows(rep.roots), summary)
    zs, _ = _real_line_zeros(cfg)
    summary = {"family": cfg.family, "n": cfg.n, "method": zs.method, "max_residual": float(np.max(zs.residuals))}
    support = _support(cfg)
    if support is not None and zs.is_real():
        summary["support"] = classify_support(zs, support).as_dict()
    return Result(_root_rows(zs.roots), summary)


def cmd_interlace(cfg: RunConfig) -> Result:
    """Compare the configured zero set with a second one chosen by --against.

    next: same configuration at degree n+1; classical: P_n of the family;
    christoffel: the transformed polynomial of degree n; qg: quasi-Geronimus
    solution 1 at degree n (Jacobi only).
    """
    cfg.need("n")
    first, _ = _real_line_zeros(cfg)
    against = cfg.against
    if against == "next":
        cfg2 = RunConfig(**{**cfg.__dict__, "n": cfg.n + 1})
        second, _ = _real_line_zeros(cfg2)
    elif against == "classical":
        second = ops_zeros(_base_recurrence(cfg), cfg.n)
    elif against == "christoffel":
        second = ops_zeros(_transformed(RunConfig(**{**cfg.__dict__, "transform": "christoffel"}), cfg.n), cfg.n)
    elif against == "qg":
        if cfg.family != "jacobi":
            raise ConfigError("--against qg needs the Jacobi family")
        cfg2 = RunConfig(**{**cfg.__dict__, "transform": "geronimus", "gamma": "sol:1"})
        second, _ = _real_line_zeros(cfg2)
    else:
        raise ConfigError(f"unknown --against {against}")
    boundary = cfg.boundary
    if boundary is None and (cfg.gamma or "").startswith("sol:1"):
        boundary = 1.0 if cfg.family == "jacobi" else 0.0
    rep = interlace(first, second, boundary=boundary)
    rows = [{"set": "a", "value": float(v)} for v in first.real] + [{"set": "b", "value": float(v)} for v in second.real]
    summary = {"strict": rep.strict, "pattern": rep.pattern, "removed": rep.removed, "against": against, "boundary": boundary}
    return Result(rows, summary)


def cmd_chain(cfg: RunConfig) -> Result:
    cfg.need("n")
    t = _float(cfg.point, "--point") if cfg.point is not None else 0.0
    gamma = _gamma(cfg)
    if gamma is None:
        data = chain_sequence(_base_recurrence(cfg), t, cfg.n)
    else:
        base = _transformed(cfg, cfg.n + 3)
        data = quasi_chain_sequence(base, gamma, t, cfg.n)
    recon = data.reconstruction_residuals()
    rows = []
    for k in sorted(set(data.s) | set(data.m)):
        rows.append({"n": k, "s": data.s.get(k, float("nan")), "m": data.m.get(k, float("nan"))})
    summary = {"t": t, "start_index": data.start_index, "max_reconstruction": max(recon.values(), default=0.0)}
    return Result(rows, summary)


def cmd_jacobimatrix(cfg: RunConfig) -> Result:
    N = cfg.n or MATRIX_N
    gamma = _gamma(cfg)
    if gamma is None:
        raise ConfigError("jacobimatrix needs --gamma or --solution")
    base = _transformed(cfg, N)
    qr = quasi_recurrence(base, gamma, N)
    Jq, Jc, M = truncate(qr, N), truncate(base, N), intertwiner(gamma, N)
    res = commutation_residual(Jq, Jc, M)
    rows = []
    for k in range(N):
        rows.append({
            "k": k + 1, "c": Jc.diag[k], "lam": Jc.sub[k - 1] if k else float("nan"),
            "c_quasi": Jq.diag[k], "lam_quasi": Jq.sub[k - 1] if k else float("nan"),
            "gamma": gamma.at(k + 1),
        })
    return Result(rows, {"N": N, "commutation_residual": res})


def cmd_opuc(cfg: RunConfig) -> Result:
    """Zeros, disc classification and Verblunsky coefficients of Phi_n(z; g[, a_n])."""
    p, g = _opuc_poly(cfg)
    rep = classify_unit_disc(p)
    rows = _root_rows(rep.roots)
    for r, z in zip(rows, rep.roots):
        r["modulus"] = float(abs(z))
    m = cfg.n if cfg.an is None else cfg.n - 1
    # Verblunsky coefficients of the transformed measure, read back from its Szego polynomials
    phis = [christoffel_opuc_poly(VerblunskySequence.lebesgue(), g, k) for k in range(m + 1)]
    alphas = verblunsky_from(phis)
    summary = {
        "n": cfg.n, "point": [complex(g).real, complex(g).imag],
        "inside_disc": rep.inside_disc, "on_circle": rep.on_circle, "outside_disc": rep.outside_disc,
        "verblunsky": [[a.real, a.imag] for a in alphas],
    }
    return Result(rows, summary)


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "zeros": cmd_zeros,
    "interlace": cmd_interlace,
    "chain": cmd_chain,
    "jacobimatrix": cmd_jacobimatrix,
    "opuc": cmd_opuc,
}


# ----------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--family", default="jacobi", choices=["jacobi", "laguerre", "opuc", "custom"])
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--solution", type=int)
    p.add_argument("--gamma", help="const:<v> | sol:<id> | file:<path>")
    p.add_argument("--point", help="transform point a, chain point t, or circle point (e.g. 1, i)")
    p.add_argument("--an", help="a_n for the circle: const:<v> | expr:<e in n, i> | file:<path>")
    p.add_argument("--transform", choices=["none", "christoffel", "geronimus"])
    p.add_argument("--recurrence", help="CSV with columns c,lam for --family custom")
    p.add_argument("--format", dest="fmt", default="table", choices=["json", "csv", "table"])
    p.add_argument("--tol", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasispectral", description="Quasi-Christoffel and quasi-Geronimus polynomials of order one.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="recompute a reference table and compare cell by cell")
    p.add_argument("table_id", type=int)
    p.add_argument("--errata", action="store_true", help="apply the corrections in data/errata.csv")
    _common(p)

    p = sub.add_parser("verify", help="residual sweep for a closed-form family")
    p.add_argument("verify_family", choices=[f.value for f in Family])
    p.add_argument("verify_solution", type=int)
    _common(p)

    for name, helptext in (
        ("zeros", "zeros of a classical, transformed or quasi polynomial"),
        ("interlace", "interlacing verdict between two zero sets"),
        ("chain", "chain sequence and minimal parameter sequence at a point"),
        ("jacobimatrix", "truncated Jacobi matrices and the commutation residual"),
        ("opuc", "circle polynomials: zeros and Verblunsky coefficients"),
    ):
        p = sub.add_parser(name, help=helptext)
        _common(p)
        if name == "interlace":
            p.add_argument("--against", default="next", choices=["next", "classical", "christoffel", "qg"])
            p.add_argument("--boundary", type=float)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command, family=ns.family, alpha=ns.alpha, beta=ns.beta, n=ns.n, solution=ns.solution,
        gamma=ns.gamma, point=ns.point, an=ns.an, transform=ns.transform, recurrence=ns.recurrence,
        fmt=ns.fmt, tol=ns.tol,
    )
    if ns.command == "table":
        cfg.table_id = ns.table_id
        cfg.errata = ns.errata
    if ns.command == "verify":
        cfg.extra["verify_family"] = ns.verify_family
        cfg.solution = ns.verify_solution
    if ns.command == "interlace":
        cfg.against = ns.against
        cfg.boundary = ns.boundary
    if cfg.n is not None and cfg.n < 1 and ns.command != "verify":
        raise ConfigError("--n must be at least 1")
    return cfg


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        res = COMMANDS[cfg.command](cfg)
    except (ConfigError, DomainError, ShapeError, MissingCoefficientError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CONFIG
    except (NumericFailure, ExistenceError, DegenerateParameterError, NotOrthogonalizableError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=err)
        return EXIT_NUMERIC
    out.write(render(res, cfg.fmt))
    return res.status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
