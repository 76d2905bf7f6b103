"""Compare the compiled and pure-Python face-pair kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""
import argparse
import time

from vtpoly import kernel
from vtpoly.candmap import build_candidate_map
from vtpoly.catalog import NAMED_MAPS
from vtpoly.realize import integral_positions, place_vertices, search_realizations, verify_realization


def _m1_verify():
    verify_realization(build_candidate_map(NAMED_MAPS["M1"]), (1, 2, 6))


def _m2_pairs():
    m = build_candidate_map(NAMED_MAPS["M2"])
    coords = integral_positions(place_vertices(m, (2, 3, 7)).positions)
    kernel.pair_classes(coords, m.faces)


def _m1_search():
    search_realizations(build_candidate_map(NAMED_MAPS["M1"]), 4)


CASES = [
    ("verify M1 at (1,2,6)", _m1_verify),
    ("all face pairs of M2", _m2_pairs),
    ("search M1, bound 4", _m1_search),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = ["python"]
    if kernel.BACKEND == "cython":
        backends.insert(0, "cython")
    else:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'case':<26}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, fn in CASES:
        row = {}
        for b in backends:
            kernel.use_backend(b)
            row[b] = best_of(fn, args.repeat)
        line = f"{label:<26}" + "".join(f"{row[b] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['python'] / row['cython']:>11.1f}x"
        print(line)
    kernel.use_backend(backends[0])


if __name__ == "__main__":
    main()
