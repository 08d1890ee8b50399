"""Random stabilizer codes for property tests and experiments."""

from __future__ import annotations

import numpy as np

from . import _gf2
from .pauli import PauliString, StabilizerCode, star


def random_code(rng: np.random.Generator | int, n: int, k: int | None = None, max_tries: int = 10_000) -> StabilizerCode:
    """Uniform rejection sampling of commuting, independent generators."""
    rng = np.random.default_rng(rng)
    if k is None:
        k = int(rng.integers(0, n))
    gens: list[PauliString] = []
    for _ in range(max_tries):
        if len(gens) == n - k:
            return StabilizerCode(n, k, tuple(gens))
        x, z = (int(v) for v in rng.integers(0, 1 << n, size=2))
        g = PauliString(n, x, z)
        if g.is_identity() or any(star(g, h) for h in gens):
            continue
        if _gf2.rank([h.as_int() for h in gens] + [g.as_int()]) == len(gens) + 1:
            gens.append(g)
    raise RuntimeError(f"could not sample an ({n}, {k}) code in {max_tries} tries")
