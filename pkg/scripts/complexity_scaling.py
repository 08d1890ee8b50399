"""Operation counts and wall time of the trellis algorithms on growing unrollings."""

import argparse
import time

import numpy as np

from stabtrellis import ConvolutionalSpec, OpCounter, build_wolf_trellis, min_sum, sum_product, unroll
from stabtrellis.channel import PauliChannel
from stabtrellis.convolutional import memory


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pattern", default="YZZY")
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400, 800, 1600, 3200])
    args = parser.parse_args()

    spec = ConvolutionalSpec.from_strings(1, 0, [args.pattern])
    rng = np.random.default_rng(0)
    print(f"pattern {args.pattern}")
    print(f"{'n':>6s} {'m':>3s} {'|V|':>8s} {'|E|':>8s} {'minsum ops':>11s} {'sumprod ops':>12s} "
          f"{'build s':>8s} {'minsum s':>9s} {'sumprod s':>10s}")
    for n in args.sizes:
        code = unroll(spec, n)
        ch = PauliChannel(rng.dirichlet(np.ones(4), size=n))
        t0 = time.perf_counter()
        t = build_wolf_trellis(code, (0,) * code.r)
        t1 = time.perf_counter()
        c1 = OpCounter()
        min_sum(t, ch, counter=c1)
        t2 = time.perf_counter()
        c2 = OpCounter()
        sum_product(t, ch, counter=c2)
        t3 = time.perf_counter()
        print(f"{n:6d} {memory(code):3d} {t.num_vertices:8d} {t.num_edges:8d} {c1.ops:11d} {c2.ops:12d} "
              f"{t1 - t0:8.3f} {t2 - t1:9.3f} {t3 - t2:10.3f}")


if __name__ == "__main__":
    main()
