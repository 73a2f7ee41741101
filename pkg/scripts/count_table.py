"""Print N(m, k) from the closed formula, next to exhaustive counts where the guard allows."""
import argparse
import time
from dataclasses import dataclass

from hyperbent.enumeration import EXHAUSTIVE_LIMIT, count_formula, exhaustive_count_oracle


@dataclass
class Config:
    max_m: int = 5
    exhaustive_limit: int = EXHAUSTIVE_LIMIT


def run(cfg: Config):
    print(f"{'m':>2} {'k':>2} {'formula':>24} {'exhaustive':>12} {'sec':>6}")
    for m in range(1, cfg.max_m + 1):
        for k in range(1, m + 1):
            formula = count_formula(m, k).formula_count
            exh, secs = "-", 0.0
            if (1 << k) ** ((1 << m) + 1) <= cfg.exhaustive_limit:
                t0 = time.perf_counter()
                value = exhaustive_count_oracle(m, k).formula_count
                secs = time.perf_counter() - t0
                exh = str(value)
                assert value == formula
            print(f"{m:>2} {k:>2} {formula:>24} {exh:>12} {secs:6.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-m", type=int, default=Config.max_m)
    p.add_argument("--exhaustive-limit", type=int, default=1 << 20)
    a = p.parse_args()
    run(Config(a.max_m, a.exhaustive_limit))
