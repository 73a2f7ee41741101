"""Crosscorrelation spectra of every catalogue decimation for a range of m."""
import argparse
from dataclasses import dataclass

from hyperbent.gf2n import make_field
from hyperbent.msequence import decimation_catalogue, spectrum


@dataclass
class Config:
    m_min: int = 2
    m_max: int = 10
    show_excluded: bool = False


def run(cfg: Config):
    for m in range(cfg.m_min, cfg.m_max + 1):
        ctx = make_field(m)
        for e in decimation_catalogue(m):
            label = f"m={m:<2} {e.family:<28} d={e.d:<5}"
            if e.excluded:
                if cfg.show_excluded:
                    print(f"{label} excluded: {e.excluded}")
                continue
            spec = spectrum(ctx, e.d)
            flag = "ok" if spec.is_three_valued and spec.contains_minus_one else "UNEXPECTED"
            print(f"{label} {spec.values} {flag}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m-min", type=int, default=Config.m_min)
    p.add_argument("--m-max", type=int, default=Config.m_max)
    p.add_argument("--show-excluded", action="store_true")
    a = p.parse_args()
    run(Config(a.m_min, a.m_max, a.show_excluded))
