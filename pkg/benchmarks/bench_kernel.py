"""Compare the compiled enumeration kernel against the pure-Python twin.

Usage: python3 benchmarks/bench_kernel.py [--volumes 101,202,303] [--repeat 3]
"""

import argparse
import time

from empty4.kernel import available_backends, get_backend


def time_backend(mod, volumes, repeat):
    best = {}
    for V in volumes:
        samples = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            rows = mod.enumerate_empty_chunk(V, 0, V)
            samples.append(time.perf_counter() - t0)
        best[V] = (min(samples), len(rows))
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--volumes", default="60,120,240,419")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    volumes = [int(v) for v in args.volumes.split(",")]

    names = available_backends()
    print("backends:", ", ".join(names))
    results = {name: time_backend(get_backend(name), volumes, args.repeat)
               for name in names}

    print("%8s %12s %12s %9s %8s" % ("V", "python[s]", "cython[s]", "speedup", "classes"))
    for V in volumes:
        py_t, py_n = results["python"][V]
        if "cython" in results:
            cy_t, cy_n = results["cython"][V]
            assert py_n == cy_n, "backend disagreement at V=%d" % V
            print("%8d %12.4f %12.4f %8.1fx %8d" % (V, py_t, cy_t, py_t / cy_t, py_n))
        else:
            print("%8d %12.4f %12s %9s %8d" % (V, py_t, "-", "-", py_n))


if __name__ == "__main__":
    main()
