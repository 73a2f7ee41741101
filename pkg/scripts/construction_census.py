"""Check T_u0, D_r(T_u0) and h(T_u0) against the oracle or the U-multiset test, per m."""
import argparse
import math
import time
from dataclasses import dataclass

import numpy as np

from hyperbent.dickson import dickson_construction
from hyperbent.gf2n import make_field
from hyperbent.psap import balanced_compose, make_ugroup, t_construction
from hyperbent.vectorial import check_condition3, is_vectorial_hyperbent_oracle


@dataclass
class Config:
    m_max: int = 5
    oracle_max_m: int = 3
    r_max: int = 30
    seed: int = 0


def run(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    for m in range(2, cfg.m_max + 1):
        ctx = make_field(2 * m)
        U = make_ugroup(ctx)
        check = is_vectorial_hyperbent_oracle if m <= cfg.oracle_max_m else (lambda F: check_condition3(F, U))
        rs = [r for r in range(1, cfg.r_max + 1) if math.gcd(r, (1 << (2 * m)) - 1) == 1]
        t0 = time.perf_counter()
        tally = {"T": [0, 0], "dickson": [0, 0], "balanced": [0, 0]}
        for u0 in U.elements[1:]:
            T = t_construction(ctx, u0)
            tally["T"][check(T)] += 1
            for r in rs:
                tally["dickson"][check(dickson_construction(ctx, u0, r))] += 1
            k = int(rng.integers(1, m + 1))
            h = np.concatenate([[0], rng.permutation(np.repeat(np.arange(1 << k), 1 << (m - k))[1:])])
            tally["balanced"][check(balanced_compose(h, T, k))] += 1
        how = "oracle" if m <= cfg.oracle_max_m else "multiset"
        summary = ", ".join(f"{name} {ok}/{ok + bad}" for name, (bad, ok) in tally.items())
        print(f"m={m} ({how}) {summary}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m-max", type=int, default=Config.m_max)
    p.add_argument("--oracle-max-m", type=int, default=Config.oracle_max_m)
    p.add_argument("--r-max", type=int, default=Config.r_max)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.m_max, a.oracle_max_m, a.r_max, a.seed))
