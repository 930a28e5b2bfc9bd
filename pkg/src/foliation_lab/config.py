"""Run configuration: solver window, cohomology window, computation budgets."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .groebner import Budget

ENV_BUDGET_DEG = "FOLIATION_LAB_BUDGET_DEG"


@dataclass(frozen=True)
class Config:
    """User-facing knobs; unset values resolve from the form's twist e."""

    dmax: int | None = None            # unfolding solver degree window
    window: tuple | None = None        # cohomology twist window (lo, hi)
    budget_pairs: int = 200_000
    budget_deg: int | None = None      # reduction degree cap
    decompose: bool = True
    fmt: str = "json"

    def resolved_dmax(self, e: int) -> int:
        return self.dmax if self.dmax is not None else 2 * e + 2

    def resolved_window(self, e: int) -> tuple:
        return self.window if self.window is not None else (-2 * e, 2 * e)

    def resolved_budget(self, e: int) -> Budget:
        deg = self.budget_deg
        env = os.environ.get(ENV_BUDGET_DEG)
        if env is not None:
            deg = int(env)
        if deg is None:
            deg = 4 * e
        if self.dmax is not None:
            deg = max(deg, self.dmax + e + 2)
        return Budget(max_pairs=self.budget_pairs, max_degree=deg)


DEFAULT_CONFIG = Config()
