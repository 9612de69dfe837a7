"""Does the F_c family (and its multiplicity variant) contain line-free
members for q in {2, 3}, where no guarantee is given?  Also times the
search for the q > 3 cases."""

import argparse
import time
from dataclasses import dataclass

from fqcurves.constructions import FcParams, build_fc, default_multiplicities, search_line_free_c
from fqcurves.curves import count_points, line_components
from fqcurves.gf import parse_field


@dataclass
class Config:
    q_max: int = 9


def run(q: int, d: int) -> str:
    F = parse_field(str(q))
    mult = default_multiplicities(F, d) if d >= 2 * q else None
    t0 = time.perf_counter()
    c = search_line_free_c(F, d, multiplicities=mult)
    dt = time.perf_counter() - t0
    if c is None:
        return f"q={q} d={d}: no line-free c among {q ** (d - q)} ({dt:.2f}s)"
    C = build_fc(FcParams(F, d, multiplicities=mult, c=c))
    assert not line_components(C)
    return f"q={q} d={d}: c={c} N={count_points(C)} ({dt:.2f}s)"


def main(cfg: Config) -> None:
    for q in (2, 3, 4, 5, 7, 8, 9):
        if q > cfg.q_max:
            break
        for d in range(q + 2, 2 * q + 2):
            if q ** (d - q) > 10**7:
                print(f"q={q} d={d}: skipped (search space {q ** (d - q)})")
                continue
            print(run(q, d))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-max", type=int, default=9)
    main(Config(ap.parse_args().q_max))
