"""Time the compiled kernels against the pure-Python fallback on quotient braces.

    python3 benchmarks/bench_kernels.py [--moduli 3 5 7] [--repeat 3]
"""

import argparse
import time

from onebrace import QuotientSpec, build_quotient, derive_solution
from onebrace import kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--moduli", type=int, nargs="+", default=[3, 5, 7])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernels unavailable; timing the Python fallback only")
    identities = ["assoc_mul", "brace_law", "star_of_sum", "lambda_conjugation"]

    print(f"{'brace':<10}{'kernel':<22}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for m in args.moduli:
        brace = build_quotient(QuotientSpec("d3", m))
        tables = brace.index_tables()
        r = derive_solution(brace)
        jobs = [(name, lambda b, name=name: kernels.run_identity_kernel(name, tables, b))
                for name in identities]
        jobs.append(("braid", lambda b: kernels.first_braid_violation(r.U, r.V, b)))
        for name, job in jobs:
            times, results = [], []
            for b in backends:
                t, res = best_of(lambda: job(b), args.repeat)
                times.append(t)
                results.append(res)
            assert len(set(results)) == 1, f"backends disagree on {name}"
            speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
            print(f"{'d3/' + str(m):<10}{name:<22}" + "".join(f"{t:>11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
