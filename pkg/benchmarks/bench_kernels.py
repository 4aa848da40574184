"""Compare the compiled and pure-Python kernels on random inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Both implementations must return identical results; timings are the best of
``--repeat`` runs.
"""

import argparse
import random
import timeit

from cxlab._kernels import _ckernels, _pykernels


def random_graph(n, p, rng):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def random_cover(n_sets, universe, size, rng):
    return [sum(1 << x for x in rng.sample(range(universe), size)) for _ in range(n_sets)]


def cases(rng):
    for n, p in [(20, 0.5), (40, 0.3), (60, 0.5), (64, 0.7)]:
        yield f"cliques n={n} p={p}", "maximal_cliques", (random_graph(n, p, rng),)
    for k, u, s in [(20, 30, 5), (40, 60, 6), (60, 40, 4)]:
        yield f"nerve sets={k} universe={u} size={s}", "nerve_maximal_families", \
            (random_cover(k, u, s, rng), 10**7)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rng = random.Random(args.seed)
    print(f"{'case':38s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for label, fn, inputs in cases(rng):
        py, c = getattr(_pykernels, fn), getattr(_ckernels, fn)
        a, b = py(*inputs), c(*inputs)
        if sorted(a[0] if isinstance(a, tuple) else a) != sorted(b[0] if isinstance(b, tuple) else b):
            raise SystemExit(f"{label}: implementations disagree")
        tp = min(timeit.repeat(lambda: py(*inputs), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: c(*inputs), number=1, repeat=args.repeat))
        print(f"{label:38s} {tp:10.4f} {tc:11.5f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
