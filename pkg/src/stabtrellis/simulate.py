"""Seeded Monte Carlo decoding runs."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.stats import binomtest

from . import _gf2
from .algorithms import min_sum
from .channel import PauliChannel, sample_error
from .pauli import StabilizerCode, syndrome
from .trellis import Trellis, build_wolf_trellis

_CACHE_LIMIT = 4096


@dataclass(frozen=True)
class SimReport:
    trials: int
    decode_failures: int
    ci_low: float
    ci_high: float
    seconds: float

    @property
    def failure_rate(self) -> float:
        return self.decode_failures / self.trials if self.trials else 0.0

    def lines(self) -> list[str]:
        return [
            f"trials {self.trials}",
            f"decode_failures {self.decode_failures}",
            f"failure_rate {self.failure_rate:.6g}",
            f"ci95 {self.ci_low:.6g} {self.ci_high:.6g}",
        ]


def _run_shard(code: StabilizerCode, ch: PauliChannel, trials: int, seq: np.random.SeedSequence) -> int:
    rng = np.random.default_rng(seq)
    cache: dict[tuple[int, ...], Trellis] = {}
    echelon, pivots = _gf2.rref(g.as_int() for g in code.generators)
    failures = 0
    for _ in range(trials):
        e = sample_error(ch, rng)
        s = syndrome(code, e)
        t = cache.get(s)
        if t is None:
            t = build_wolf_trellis(code, s)
            if len(cache) < _CACHE_LIMIT:
                cache[s] = t
        est = min_sum(t, ch).error
        if syndrome(code, est) != s:
            raise AssertionError("decoder returned an estimate with the wrong syndrome")
        # success iff the residual is a stabilizer
        failures += not _gf2.in_span((e + est).as_int(), echelon, pivots)
    return failures


def simulate(
    code: StabilizerCode,
    ch: PauliChannel,
    trials: int,
    seed: int,
    *,
    shards: int = 1,
    workers: int = 1,
) -> SimReport:
    """Sample errors, decode with Min-Sum, and count residuals outside S.

    Shard ``k`` draws from the ``k``-th child of ``SeedSequence(seed)`` and
    runs ``trials // shards`` trials (the first ``trials % shards`` shards
    run one extra), so the result depends on ``(seed, trials, shards)`` only.
    """
    if trials < 0 or shards < 1:
        raise ValueError("need trials >= 0 and shards >= 1")
    if ch.n != code.n:
        raise ValueError(f"channel has {ch.n} qubits, code has n={code.n}")
    seqs = np.random.SeedSequence(seed).spawn(shards)
    counts = [trials // shards + (k < trials % shards) for k in range(shards)]
    start = time.perf_counter()
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(_run_shard, [code] * shards, [ch] * shards, counts, seqs))
    else:
        failures = sum(_run_shard(code, ch, c, q) for c, q in zip(counts, seqs))
    elapsed = time.perf_counter() - start
    if trials:
        ci = binomtest(failures, trials).proportion_ci(confidence_level=0.95, method="wilson")
        lo, hi = float(ci.low), float(ci.high)
    else:
        lo, hi = 0.0, 1.0
    return SimReport(trials, failures, lo, hi, elapsed)
