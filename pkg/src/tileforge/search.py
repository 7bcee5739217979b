"""Outcomes shared by the budgeted searches (tilings, spectra)."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_BUDGET = 1_000_000
BUDGET_ENV = "TILEFORGE_BUDGET_DEFAULT"


@dataclass(frozen=True)
class NotFound:
    """The search space was exhausted without a witness."""

    nodes: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class BudgetExhausted:
    """The node budget ran out before the search could decide."""

    nodes: int
    budget: int

    def __bool__(self) -> bool:
        return False


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def resolve_budget(budget: int | None) -> int:
    if budget is None:
        return default_budget()
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    return int(budget)
