"""For each three-valued decimation d and each u0 != 1, the first lambda giving a hyper-bent function.

Lambda is reported as a word of the standalone field GF(2^m).
"""
import argparse
from collections import Counter
from dataclasses import dataclass, field

from hyperbent.gf2n import make_field, subfield_embedding
from hyperbent.msequence import corollary2_search, known_decimations
from hyperbent.psap import make_ugroup


@dataclass
class Config:
    ms: list[int] = field(default_factory=lambda: [3, 5])
    verify: bool = False


def run(cfg: Config):
    for m in cfg.ms:
        ctx = make_field(2 * m)
        U = make_ugroup(ctx)
        emb = subfield_embedding(ctx, m)
        for d in sorted({e.d for e in known_decimations(m)}):
            words = [int(emb.to_small[corollary2_search(ctx, u0, d, verify=cfg.verify).bits])
                     for u0 in U.elements[1:]]
            hist = dict(sorted(Counter(words).items()))
            print(f"m={m} d={d:<4} lambda words per u0 index: {words}")
            print(f"{'':>10} histogram {hist}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m", type=int, nargs="+", default=[3, 5])
    p.add_argument("--verify", action="store_true", help="re-check each hit with the definitional oracle")
    a = p.parse_args()
    run(Config(a.m, a.verify))
