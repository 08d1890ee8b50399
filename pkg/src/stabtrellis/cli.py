"""Command-line front end.

Exit status is 0 on success, 1 for unreadable or malformed input files, and
2 for domain errors such as anticommuting generators.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .algorithms import min_sum, sum_product, weight_enumerator
from .channel import PauliChannel, depolarizing
from .convolutional import column_activity, memory, unroll
from .io import ParseError, format_code, parse_channel, parse_code, parse_spec, read_text
from .pauli import StabilizerCode, parse_syndrome, syndrome, validate
from .simulate import simulate
from .trellis import build_wolf_trellis, export_dot, state_profile, trellis_oriented_form


def _load_code(args) -> StabilizerCode:
    code = parse_code(read_text(args.code), source=args.code)
    validate(code)
    return code


def _load_channel(args, n: int) -> PauliChannel:
    if args.depolarizing is not None:
        return depolarizing(n, args.depolarizing)
    if args.channel is None:
        raise ValueError("give --channel FILE or --depolarizing P")
    return parse_channel(read_text(args.channel), n, source=args.channel)


def _syndrome(args, code: StabilizerCode):
    if args.syndrome is None:
        return (0,) * code.r
    return parse_syndrome(args.syndrome, code.r)


def cmd_validate(args) -> list[str]:
    code = _load_code(args)
    return [f"ok n={code.n} k={code.k}"]


def cmd_tof(args) -> list[str]:
    return [format_code(trellis_oriented_form(_load_code(args))).rstrip("\n")]


def cmd_trellis(args) -> list[str]:
    code = _load_code(args)
    t = build_wolf_trellis(code, _syndrome(args, code))
    if args.format == "dot":
        return [export_dot(t).rstrip("\n")]
    if args.format == "xi":
        return [str(state_profile(t))]
    return [",".join(map(str, t.sizes))]


def cmd_decode(args) -> list[str]:
    code = _load_code(args)
    s = _syndrome(args, code)
    res = min_sum(build_wolf_trellis(code, s), _load_channel(args, code.n), seed=args.tie_seed)
    if syndrome(code, res.error) != s:
        raise RuntimeError("decoded error does not reproduce the syndrome")
    return [f"error {res.error}", f"weight {res.weight:.17g}"]


def cmd_marginals(args) -> list[str]:
    code = _load_code(args)
    t = build_wolf_trellis(code, _syndrome(args, code))
    return sum_product(t, _load_channel(args, code.n)).lines()


def cmd_enumerator(args) -> list[str]:
    code = _load_code(args)
    A = weight_enumerator(build_wolf_trellis(code, (0,) * code.r))
    return [f"# A(x,y,z) = {A}", *A.lines()]


def cmd_memory(args) -> list[str]:
    code = _load_code(args)
    out = [str(memory(code))]
    if args.format == "text":
        out.append("activity " + ",".join(map(str, column_activity(code))))
    return out


def cmd_unroll(args) -> list[str]:
    spec = parse_spec(read_text(args.spec), source=args.spec)
    return [format_code(unroll(spec, args.n)).rstrip("\n")]


def cmd_simulate(args) -> list[str]:
    code = _load_code(args)
    ch = _load_channel(args, code.n)
    rep = simulate(code, ch, args.trials, args.seed, shards=args.shards, workers=args.workers)
    if args.timing:
        print(f"seconds {rep.seconds:.3f}", file=sys.stderr)
    return rep.lines()


def cmd_oracle(args) -> list[str]:
    code = _load_code(args)
    s = _syndrome(args, code)
    if args.what == "enumerator":
        return oracle.brute_enumerator(code).lines()
    if args.what == "bound":
        return [",".join(str(oracle.brute_profile_bound(code, i)) for i in range(code.n + 1))]
    ch = _load_channel(args, code.n)
    if args.what == "mle":
        res = oracle.brute_mle(code, s, ch)
        return [f"error {res.error}", f"weight {res.weight:.17g}"]
    return oracle.brute_marginals(code, s, ch).lines()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stabtrellis", description="Trellis tools for stabilizer codes.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, *, channel=False, synd=False, **kw):
        p = sub.add_parser(name, help=help_, **kw)
        p.set_defaults(func=func)
        if name != "unroll":
            p.add_argument("--code", required=True, metavar="FILE")
        if synd:
            p.add_argument("--syndrome", metavar="BITS", help="e.g. 0011; defaults to all zeros")
        if channel:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--channel", metavar="FILE")
            g.add_argument("--depolarizing", type=float, metavar="P")
        return p

    add("validate", cmd_validate, "check commutation and independence")
    add("tof", cmd_tof, "rewrite the generators in trellis-oriented form")
    p = add("trellis", cmd_trellis, "build the syndrome trellis", synd=True)
    p.add_argument("--format", choices=["profile", "xi", "dot"], default="profile")
    p = add("decode", cmd_decode, "most likely error (Min-Sum)", channel=True, synd=True)
    p.add_argument("--tie-seed", type=int, default=None, help="break ties at random with this seed")
    add("marginals", cmd_marginals, "per-qubit error marginals (Sum-Product)", channel=True, synd=True)
    add("enumerator", cmd_enumerator, "weight enumerator of S-perp")
    p = add("memory", cmd_memory, "memory of the generator set")
    p.add_argument("--format", choices=["int", "text"], default="int")
    p = add("unroll", cmd_unroll, "unroll a convolutional spec to n qubits")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--n", type=int, required=True)
    p = add("simulate", cmd_simulate, "Monte Carlo decoding failure rate", channel=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="report wall time on stderr")
    p = add("oracle", cmd_oracle, argparse.SUPPRESS, channel=True, synd=True)
    p.add_argument("--what", choices=["mle", "marginals", "enumerator", "bound"], default="mle")
    # keep the fixture generator out of the help listing
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle"]
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
