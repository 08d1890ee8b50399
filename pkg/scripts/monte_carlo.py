"""Decoding failure rate of Min-Sum versus depolarizing strength."""

import argparse

import numpy as np

from stabtrellis import ConvolutionalSpec, StabilizerCode, depolarizing, unroll
from stabtrellis.simulate import simulate


def codes(n_conv):
    yield "five_qubit", StabilizerCode.from_strings(["ZXIII", "XZXII", "IXZXI", "IIXZX"])
    yield f"YZZY_n{n_conv}", unroll(ConvolutionalSpec.from_strings(1, 0, ["YZZY"]), n_conv)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--shards", type=int, default=4)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--n-conv", type=int, default=30)
    parser.add_argument("--ps", type=float, nargs="+", default=list(np.round(np.linspace(0.01, 0.15, 8), 3)))
    args = parser.parse_args()

    print(f"{'code':>14s} {'p':>6s} {'fail':>6s} {'rate':>8s} {'ci95':>21s} {'sec':>6s}")
    for name, code in codes(args.n_conv):
        for p in args.ps:
            rep = simulate(code, depolarizing(code.n, p), args.trials, args.seed,
                           shards=args.shards, workers=args.workers)
            print(f"{name:>14s} {p:6.3f} {rep.decode_failures:6d} {rep.failure_rate:8.4f} "
                  f"[{rep.ci_low:.4f}, {rep.ci_high:.4f}] {rep.seconds:6.2f}")


if __name__ == "__main__":
    main()
