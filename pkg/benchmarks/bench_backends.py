"""Compare the compiled and pure-Python kernels on every activity method.

    python benchmarks/bench_backends.py [--repetitions N]

Prints per-size median wall times for both backends, the doubling ratio
within each backend and the compiled speedup.
"""
import argparse

from rule150 import _backend, bench

SIZES = {
    "iteration": [1 << 16, 1 << 17, 1 << 18],
    "simulate": [1 << 12, 1 << 13, 1 << 14],
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repetitions", type=int, default=5)
    args = parser.parse_args()
    if _backend.compiled is None:
        parser.exit(1, "compiled kernels are not built; run `pip install -e .` first\n")

    print(f"{'method':<10} {'size':>8} {'compiled s':>12} {'ratio':>6} "
          f"{'pure s':>12} {'ratio':>6} {'speedup':>8}")
    every = []
    for method, sizes in SIZES.items():
        results = {}
        for backend in ("compiled", "pure"):
            results[backend] = bench.run([method], sizes, args.repetitions, (backend,))
            every += results[backend]
        for c, p in zip(results["compiled"], results["pure"]):
            _, _, size, c_s, c_r = c
            p_s, p_r = p[3], p[4]
            fmt = lambda r: f"{r:6.2f}" if r else f"{'':>6}"
            print(f"{method:<10} {size:>8} {c_s:12.6f} {fmt(c_r)} "
                  f"{p_s:12.6f} {fmt(p_r)} {p_s / c_s:7.1f}x")
    failures = bench.check(every)
    for failure in failures:
        print("out of band:", failure)


if __name__ == "__main__":
    main()
