"""Command-line entry point ``fqc``.

Exit codes: 0 all checks pass, 1 usage or bad input, 2 a mathematical check
failed, 3 IO error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import battery
from .census import CensusSpec, FILTERS, census, census_partition, figure_csv, figure_data
from .constructions import (
    FcParams,
    QPlusOneParams,
    build_fc,
    build_qplus1,
    default_multiplicities,
    search_line_free_c,
)
from .curves import (
    PlaneCurve,
    count_points,
    curve_report,
    line_components,
    missing_points,
    singular_points_ext,
    sziklai_bound,
    sziklai_classify,
)
from .errors import FqcError
from .gf import FieldSpec, extension, format_poly_t, parse_field
from .ideals import (
    complement_points,
    gens_affine,
    gens_complement,
    gens_full_projective,
    minimal_degree_scan,
    verify_ideal_equals_vanishing,
    zero_locus,
)
from .projspace import enumerate_proj, theta

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    field: FieldSpec | None
    format: str = "text"
    output: str | None = None
    jobs: int = 1
    budget: int | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


@dataclass
class Result:
    text: str
    data: object
    csv: str | None = None
    ok: bool = True


def _elems(F: FieldSpec, text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    return tuple(F.parse(x) for x in text.split(",") if x.strip())


def _mult(F: FieldSpec, text: str | None) -> dict[int, int] | None:
    """``alpha:e,alpha:e,...``"""
    if text is None:
        return None
    out = {}
    for item in text.split(","):
        a, _, e = item.partition(":")
        if not e:
            raise UsageError(f"multiplicity entries look like alpha:e, got {item!r}")
        out[F.parse(a.strip())] = int(e)
    return out


def _pts(F: FieldSpec, points) -> list[str]:
    return ["(" + ":".join(F.format(x) for x in P) + ")" for P in points]


# -- subcommands ------------------------------------------------------------


def cmd_field(cfg: RunConfig, args) -> Result:
    F = cfg.field
    gen = int(F.exp_table[1]) if F.q > 2 else 1
    data = {
        "p": F.p,
        "e": F.e,
        "q": F.q,
        "modulus": list(F.modulus),
        "generator": F.format(gen),
        "elements": [F.format(a) for a in F.elements()],
    }
    lines = [
        f"F_{F.q} = F_{F.p}[t]/({format_poly_t(F.modulus)})" if F.e > 1 else f"F_{F.q}",
        f"generator: {data['generator']}",
        "elements: " + ", ".join(data["elements"]),
        f"theta_q(2) = {theta(F.q, 2)}",
    ]
    return Result("\n".join(lines), data)


def _gens(F, n, k, which):
    if which == "complement":
        return gens_complement(F, n, k)
    if which == "full":
        return gens_full_projective(F, n)
    return gens_affine(F, n)


def cmd_ideal(cfg: RunConfig, args) -> Result:
    F, n, k = cfg.field, args.n, args.k
    if n < 1:
        raise UsageError("-n must be >= 1")
    if args.action == "gens":
        G = _gens(F, n, k, args.which)
        text = "\n".join(f"{lab}: {g.to_text()}" for lab, g in zip(G.labels, G.gens))
        return Result(text, {"n": n, "k": k, "q": F.q, "generators": G.to_json()})
    G = gens_complement(F, n, k)
    S = complement_points(F, n, k)
    locus_ok = zero_locus(G, enumerate_proj(F, n)) == S
    rep = verify_ideal_equals_vanishing(G, S, d_max=args.dmax, k=k, strict_locus=False)
    ok = locus_ok and rep.passed
    data = rep.to_json()
    data["zero_locus_ok"] = locus_ok
    data["passed"] = ok
    lines = [f"P^{n}(F_{F.q}) minus P^{k - 1}: {len(S)} points, zero locus {'ok' if locus_ok else 'MISMATCH'}"]
    for c in rep.per_degree:
        lines.append(f"d={c.d}: dim I_d={c.ideal_dim} dim vanishing_d={c.vanishing_dim} {'ok' if c.equal else 'MISMATCH'}")
    lines.append("PASS" if ok else "FAIL")
    return Result("\n".join(lines), data, ok=ok)


def cmd_mindegree(cfg: RunConfig, args) -> Result:
    F = cfg.field
    rep = minimal_degree_scan(F, args.n, budget=cfg.budget)
    lines = [f"q={F.q} n={args.n}: threshold (q-1)n+1 = {rep.threshold}"]
    for s in rep.scans:
        lines.append(f"d={s.d}: {s.classes_scanned} classes, {s.hits} hits")
    lines.append(f"witness {rep.witness}: {'ok' if rep.witness_ok else 'FAILED'}")
    lines.append("PASS" if rep.passed else "FAIL")
    return Result("\n".join(lines), rep.to_json(), ok=rep.passed)


def cmd_curve(cfg: RunConfig, args) -> Result:
    F = cfg.field
    C = PlaneCurve.parse(args.poly, F)
    act = args.action
    if act == "count":
        N = count_points(C)
        return Result(f"N_q(C) = {N}", {"q": F.q, "d": C.d, "N": N})
    if act == "lines":
        L = [l.to_text() for l in line_components(C)]
        return Result("\n".join(L) if L else "no F_q-line components", {"line_components": L})
    if act == "missing":
        miss, col = missing_points(C)
        pts = _pts(F, miss)
        text = f"{len(pts)} missing points, collinear={col}\n" + " ".join(pts)
        return Result(text, {"missing_points": miss.to_json(), "collinear": col})
    if act == "singular":
        K, _ = extension(F, args.ext)
        sing = singular_points_ext(C, args.ext)
        text = f"{len(sing)} singular points over F_{K.q}\n" + " ".join(_pts(K, sing))
        return Result(text, {"q": F.q, "m": args.ext, "singular_points": [list(P) for P in sing]})
    if act == "sziklai":
        status = sziklai_classify(C)
        N = count_points(C)
        text = f"N_q(C) = {N}, (d-1)q+1 = {sziklai_bound(C.d, F.q)}: {status}"
        return Result(text, {"N": N, "bound": sziklai_bound(C.d, F.q), "status": status})
    rep = curve_report(C, singular_ext=tuple(range(1, args.ext + 1)) if args.ext else ())
    return Result(json.dumps(rep.to_json(), indent=2), rep.to_json())


def _construct_text(C: PlaneCurve, rep, extra: dict) -> str:
    head = ", ".join(f"{k}={v}" for k, v in extra.items())
    return f"{C.F.to_text()}\n{head}\nN_q(C) = {rep['N']}, line components: {len(rep['line_components'])}"


def cmd_construct(cfg: RunConfig, args) -> Result:
    F = cfg.field
    q = F.q
    kind = args.kind
    extra: dict = {}
    if kind == "qplus1":
        if args.degree is not None and args.degree != q + 1:
            raise UsageError(f"qplus1 has degree q+1 = {q + 1}")
        if args.matrix is not None:
            m = _elems(F, args.matrix)
            if len(m) != 6:
                raise UsageError("--matrix needs a0,a1,a2,b0,b1,b2")
            params = QPlusOneParams(F, m[:3], m[3:])
        else:
            params = QPlusOneParams.default(F)
        C = build_qplus1(params)
        expected = q * q
        extra["matrix"] = [F.format(x) for x in params.a + params.b]
    else:
        if args.degree is None:
            raise UsageError("--degree is required")
        d = args.degree
        if kind == "fc":
            alphas = _elems(F, args.alphas)
            mult = None
            expected = q * q + d - q + 1
        else:
            alphas = None
            mult = _mult(F, args.mult) or default_multiplicities(F, d)
            expected = theta(q, 2) - 1
        c = _elems(F, args.c)
        if args.search_c:
            c = search_line_free_c(F, d, alphas=alphas, multiplicities=mult)
            if c is None:
                data = {"q": q, "d": d, "c": None, "passed": False}
                return Result(f"no c gives a curve free of F_q-lines (q={q}, d={d})", data, ok=False)
        C = build_fc(FcParams(F, d, alphas=alphas, multiplicities=mult, c=c))
        extra["c"] = [F.format(x) for x in (c or (0,) * (d - q))]
    rep = curve_report(C).to_json()
    ok = rep["N"] == expected and (not args.search_c or not rep["line_components"])
    extra["expected_N"] = expected
    data = {"construction": kind, **extra, "report": rep, "passed": ok}
    return Result(_construct_text(C, rep, extra), data, ok=ok)


def cmd_search(cfg: RunConfig, args) -> Result:
    spec = CensusSpec(cfg.field, args.degree, args.filter, budget=cfg.budget)
    if args.parts is not None or args.part is not None:
        if args.parts is None or args.part is None:
            raise UsageError("--parts and --part go together")
        rep = census_partition(spec, args.part, args.parts)
    else:
        rep = census(spec, jobs=cfg.jobs)
    F = cfg.field
    lines = [
        f"q={F.q} d={args.degree} filter={args.filter}: scanned {rep.scanned}, kept {rep.examined}",
        "spectrum: " + ", ".join(f"{n}:{c}" for n, c in sorted(rep.spectrum.items())),
        f"M_q(d) = {rep.M}, 2M_q(d) = {rep.M2}",
    ]
    return Result("\n".join(lines), rep.to_json(F), csv=rep.spectrum_csv())


def cmd_figure(cfg: RunConfig, args) -> Result:
    q = cfg.field.q
    rows = figure_data(q, q + 1, args.dmax)
    data = [{"d": d, "N": N, "status": s} for d, N, s in rows]
    text = "\n".join(f"d={d} N={N} {s}" for d, N, s in rows)
    return Result(text, data, csv=figure_csv(q, args.dmax))


def cmd_main_theorem(cfg: RunConfig, args) -> Result:
    checks = battery.main_theorem(cfg.field, jobs=cfg.jobs)
    ok = all(c.passed for c in checks if c.required)
    text = "\n".join(c.line() for c in checks) + ("\nPASS" if ok else "\nFAIL")
    return Result(text, {"q": cfg.field.q, "checks": [c.to_json() for c in checks], "passed": ok}, ok=ok)


COMMANDS = {
    "field": cmd_field,
    "ideal": cmd_ideal,
    "mindegree": cmd_mindegree,
    "curve": cmd_curve,
    "construct": cmd_construct,
    "search": cmd_search,
    "figure": cmd_figure,
    "main-theorem": cmd_main_theorem,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", required=True, help="p, p^e or q")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", "-o", help="write the report to this path")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int, help="candidate budget (default FQC_BUDGET or 2e7)")

    p = _Parser(prog="fqc", description="Exact computations with curves and vanishing ideals over finite fields.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("field", parents=[common], help="field tables")

    s = sub.add_parser("ideal", parents=[common], help="vanishing-ideal generators")
    s.add_argument("action", choices=("gens", "verify"))
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-k", type=int, default=1)
    s.add_argument("--dmax", type=int)
    s.add_argument("--which", choices=("complement", "full", "affine"), default="complement")

    s = sub.add_parser("mindegree", parents=[common], help="least degree missing one point")
    s.add_argument("-n", type=int, required=True)

    s = sub.add_parser("curve", parents=[common], help="analyse one plane curve")
    s.add_argument("action", choices=("count", "lines", "missing", "singular", "sziklai", "report"))
    s.add_argument("--poly", required=True)
    s.add_argument("--ext", type=int, default=1, help="extension degree for singular points")

    s = sub.add_parser("construct", parents=[common], help="extremal curve families")
    s.add_argument("kind", choices=("fc", "remark", "qplus1"))
    s.add_argument("--degree", type=int)
    s.add_argument("--alphas")
    s.add_argument("--mult", help="alpha:e,... for the remark variant")
    s.add_argument("--matrix", help="a0,a1,a2,b0,b1,b2 for qplus1")
    s.add_argument("--c", help="coefficients c_1..c_{d-q}")
    s.add_argument("--search-c", action="store_true")

    s = sub.add_parser("search", parents=[common], help="exhaustive census")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--filter", choices=FILTERS, default="line-free")
    s.add_argument("--parts", type=int)
    s.add_argument("--part", type=int)

    s = sub.add_parser("figure", parents=[common], help="M_q(d) and 2M_q(d) table")
    s.add_argument("--dmax", type=int, required=True)

    sub.add_parser("main-theorem", parents=[common], help="second-largest count battery")
    return p


def _render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res.data, indent=2) + "\n"
    if fmt == "csv":
        if res.csv is None:
            raise UsageError("this command has no CSV output")
        return res.csv
    return res.text + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(args.command, parse_field(args.field), args.format, args.output, args.jobs, args.budget)
        res = COMMANDS[args.command](cfg, args)
        out = _render(res, cfg.format)
    except UsageError as exc:
        print(f"fqc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FqcError, ValueError, LookupError) as exc:
        print(f"fqc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    except OSError as exc:
        print(f"fqc: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if res.ok else EXIT_FAIL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
