"""Time the table kernels under both backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--groups "PGL(2,7)" S4xZ2]

The compiled module is skipped with a note when it was not built.
"""
import argparse
import timeit

import numpy as np

from centlab.kernels import _pycore
from centlab.spec import realize
from centlab.isoclinism import generating_sequence

try:
    from centlab.kernels import _ccore
except ImportError:
    _ccore = None


def cases(g):
    t = g.table
    gens = generating_sequence(g)
    imgs = list(gens)
    rng = np.random.default_rng(0)
    a, b, c = (rng.integers(0, g.order, 20000) for _ in range(3))
    out = {
        "closure": lambda m: m.closure(t, gens[:1], g.identity),
        "closure(all gens)": lambda m: m.closure(t, gens, g.identity),
        "extend_hom(id)": lambda m: m.extend_hom(t, t, gens, imgs, g.identity, g.identity),
        "commute_matrix": lambda m: m.commute_matrix(t),
        "assoc_violation(20k)": lambda m: m.assoc_violation(t, a, b, c),
    }
    if g.order <= 64:
        out["assoc_violation_all"] = lambda m: m.assoc_violation_all(t)
    return out


def best(fn, repeat):
    timer = timeit.Timer(fn)
    loops, _ = timer.autorange()
    return min(timer.repeat(repeat, loops)) / loops


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--groups", nargs="+", default=["Q8xZ2", "S4xZ2", "A5", "PGL(2,7)"])
    args = ap.parse_args(argv)
    backends = [("python", _pycore)] + ([("cython", _ccore)] if _ccore else [])
    if _ccore is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'group':<10} {'kernel':<22}" + "".join(f"{name:>14}" for name, _ in backends) + "   speedup")
    for spec in args.groups:
        g = realize(spec)
        for name, fn in cases(g).items():
            times = [best(lambda m=m: fn(m), args.repeat) for _, m in backends]
            cols = "".join(f"{t * 1e6:>12.1f}us" for t in times)
            speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
            print(f"{spec:<10} {name:<22}{cols}{speed}")


if __name__ == "__main__":
    main()
