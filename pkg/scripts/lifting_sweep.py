"""Random cylindrical liftings and perturbed near-liftings in dimension 3.

Every lifting must reach equality in van der Corput's bound and yield a
certificate that rebuilds it; every perturbed body must stay strictly below.
"""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from multitile.exactgeom import volume
from multitile.sweeps import random_extremal_base, random_lifting, random_unimodular, shrink_vertex_pair
from multitile.vdc import build_lifting, classify_symmetric, detect_lifting, vdc_check


@dataclass
class Config:
    cases: int = 200
    seed: int = 0
    max_den: int = 8
    entry_bound: int = 5
    shrink: Fraction = Fraction(7, 8)


def run(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    bad_lift = bad_pert = 0
    t0 = time.perf_counter()
    for _ in range(cfg.cases):
        C, (B, a, m, U) = random_lifting(rng, cfg.max_den, cfg.entry_bound)
        S = classify_symmetric(C)
        cert = detect_lifting(S)
        if not (vdc_check(S).equality and cert and cert.validate(C)):
            bad_lift += 1
            print("lifting failed:", B.vertices, a, m, U)
    t1 = time.perf_counter()
    gaps = []
    for _ in range(cfg.cases):
        B = random_extremal_base(rng, cfg.max_den)
        Bs = shrink_vertex_pair(B, rng.randrange(len(B.vertices)), cfg.shrink)
        m = rng.choice((2, 3, 4))
        C = build_lifting(Bs, (0, 0), m, U=random_unimodular(rng, 3, cfg.entry_bound))
        r = vdc_check(classify_symmetric(C))
        gaps.append(r.bound - volume(C))
        if r.equality:
            bad_pert += 1
    t2 = time.perf_counter()
    print(f"liftings:  {cfg.cases - bad_lift}/{cfg.cases} certified ({t1 - t0:.1f} s)")
    print(f"perturbed: {cfg.cases - bad_pert}/{cfg.cases} strict, smallest gap {min(gaps)} ({t2 - t1:.1f} s)")
    return 0 if bad_lift == bad_pert == 0 else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--cases", type=int, default=Config.cases)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    raise SystemExit(run(Config(cases=args.cases, seed=args.seed)))
