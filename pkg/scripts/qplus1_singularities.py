"""Singular points of the degree q+1 family over F_q, F_{q^2}, F_{q^3}."""

import argparse
from dataclasses import dataclass

from fqcurves.constructions import QPlusOneParams, build_qplus1
from fqcurves.curves import count_points, embed_point, singular_points_ext
from fqcurves.errors import BudgetExceeded
from fqcurves.gf import parse_field
from fqcurves.projspace import ProjPoint


@dataclass
class Config:
    qs: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)
    m_max: int = 3


def main(cfg: Config) -> None:
    for q in cfg.qs:
        F = parse_field(str(q))
        params = QPlusOneParams.default(F, a2=1, b2=q - 1)
        C = build_qplus1(params)
        P0 = ProjPoint.of(params.singular_point(), F).coords
        line = [f"q={q}: N={count_points(C)} expected node {P0}"]
        for m in range(1, cfg.m_max + 1):
            try:
                sing = singular_points_ext(C, m)
            except BudgetExceeded:
                line.append(f"m={m}: over budget")
                continue
            ok = sing == [embed_point(P0, C, m)]
            line.append(f"m={m}: {len(sing)} point(s){'' if ok else ' UNEXPECTED'}")
        print("  ".join(line))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=3)
    main(Config(m_max=ap.parse_args().m_max))
