"""End-to-end query-weighted totals, crossover ratios, and switching budgets.

Cost chain, identical for both encodings: the coefficient one-norm alpha
fixes the query count Q = alpha * t + log2(1 / eps_sim); the per-call
accuracy budget is eps_be = eps_sim / Q; the per-call non-Clifford count
evaluated at that budget, times Q, gives the total.  The ratio of the two
totals exceeds one exactly when the d-level route is cheaper, and the
saving divided by (qudit queries * switches per query) bounds the
affordable per-switch conversion overhead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .costmodel import DEFAULT_MODEL, SynthesisModel, rz_cost
from .grid import FieldGrid, make_grid
from .lcu import (
    fixed_encoding_call_rotations,
    qubit_blockencoding_cost,
    qubit_normalization,
    qudit_hybrid_call_cost,
)
from .pauli import beta_closed_form


class CostChain(NamedTuple):
    """One encoding's chain: queries, per-call budget, per-call cost, total."""

    queries: float
    eps_be: float
    per_call: float
    total: float


def query_count(alpha: float, t: float, eps_sim: float, *, ceil: bool = False) -> float:
    """Block-encoding queries needed: alpha * t + log2(1 / eps_sim).

    Deliberately a real number; pass ceil=True for an integer query count
    (not used by any of the reported comparisons).
    """
    if alpha < 0:
        raise ValueError(f"normalization must be nonnegative, got {alpha}")
    if t < 0:
        raise ValueError(f"evolution time must be nonnegative, got {t}")
    if not 0.0 < eps_sim < 1.0:
        raise ValueError(f"simulation accuracy must lie in (0, 1), got {eps_sim}")
    q = alpha * t + math.log2(1.0 / eps_sim)
    return float(math.ceil(q)) if ceil else q


def qudit_normalization(grid: FieldGrid) -> float:
    """Coefficient one-norm of the d-level route (identity term excluded)."""
    return beta_closed_form(grid).lambda_norm


def total_cost_qubit(grid: FieldGrid, t: float, eps_sim: float) -> CostChain:
    """Qubit baseline chain: normalization -> queries -> budget -> per call -> total."""
    q = query_count(qubit_normalization(grid), t, eps_sim)
    eps_be = eps_sim / q
    per_call = float(qubit_blockencoding_cost(grid, eps_be).t_count_per_call)
    return CostChain(q, eps_be, per_call, q * per_call)


def total_cost_qudit_hybrid(
    grid: FieldGrid, t: float, eps_sim: float, model: SynthesisModel = DEFAULT_MODEL
) -> CostChain:
    """Hybrid d-level chain with the per-call rotation budget split uniformly.

    Per call: L * (synthesis cost at eps_be / L) + 4 n_b direct T gates,
    with L = 2 (2^n_b - 1) + n_b synthesized rotations.
    """
    q = query_count(qudit_normalization(grid), t, eps_sim)
    eps_be = eps_sim / q
    hybrid = qudit_hybrid_call_cost(grid.d)
    rotations = hybrid.rz_rotations_per_call
    per_call = rotations * rz_cost(eps_be / rotations, model) + hybrid.t_gates
    return CostChain(q, eps_be, per_call, q * per_call)


@dataclass(frozen=True)
class ResourceReport:
    """Full side-by-side cost report for one local dimension."""

    d: int
    n_b: int
    t: float
    eps_sim: float
    k: int
    alpha_qb: float
    alpha_qd: float
    q_qb: float
    q_qd: float
    eps_be_qb: float
    eps_be_qd: float
    per_call_qb: float
    per_call_qd: float
    t_tot_qb: float
    t_tot_qd: float
    ratio: float
    delta_tot: float
    budget_per_switch: float


def ratio_and_budget(
    grid: FieldGrid,
    t: float,
    eps_sim: float,
    k: int = 2,
    model: SynthesisModel = DEFAULT_MODEL,
) -> ResourceReport:
    """Build the full report: totals, ratio, absolute saving, per-switch budget.

    k is the number of directional encoding switches per query (two for the
    hybrid round trip).  ratio > 1, delta_tot > 0, and a positive budget
    are all equivalent statements that the d-level route is cheaper.
    """
    if k < 1:
        raise ValueError(f"switch count must be at least 1, got {k}")
    qb = total_cost_qubit(grid, t, eps_sim)
    qd = total_cost_qudit_hybrid(grid, t, eps_sim, model)
    delta = qb.total - qd.total
    return ResourceReport(
        d=grid.d,
        n_b=grid.n_b,
        t=t,
        eps_sim=eps_sim,
        k=k,
        alpha_qb=qubit_normalization(grid),
        alpha_qd=qudit_normalization(grid),
        q_qb=qb.queries,
        q_qd=qd.queries,
        eps_be_qb=qb.eps_be,
        eps_be_qd=qd.eps_be,
        per_call_qb=qb.per_call,
        per_call_qd=qd.per_call,
        t_tot_qb=qb.total,
        t_tot_qd=qd.total,
        ratio=qb.total / qd.total,
        delta_tot=delta,
        budget_per_switch=delta / (qd.queries * k),
    )


def lcu_fixed_encoding_thresholds(
    grid: FieldGrid,
    t: float,
    eps_sim: float,
    model: SynthesisModel = DEFAULT_MODEL,
) -> tuple[float, float]:
    """Fixed-encoding break-even prefactors (a_max, a_rz) for the block-encoding route.

    a_max = qubit total / (qudit queries * L * log2(L / eps_be_qd)) with the
    uniform rotation bound L = 3d - 3; a_rz is the effective prefactor of
    qubit Z-rotation synthesis at the same primitive precision eps_be_qd / L.
    """
    qb = total_cost_qubit(grid, t, eps_sim)
    qd = total_cost_qudit_hybrid(grid, t, eps_sim, model)
    rotations = fixed_encoding_call_rotations(grid.d)
    log_term = math.log2(rotations / qd.eps_be)
    a_max = qb.total / (qd.queries * rotations * log_term)
    a_rz = rz_cost(qd.eps_be / rotations, model) / log_term
    return a_max, a_rz


def scan_reports(
    phi_max: float,
    t: float,
    eps_sim: float,
    d_values: list[int],
    k: int = 2,
    model: SynthesisModel = DEFAULT_MODEL,
) -> list[ResourceReport]:
    """Reports for a sequence of local dimensions, in the order given."""
    return [
        ratio_and_budget(make_grid(phi_max, d), t, eps_sim, k, model)
        for d in d_values
    ]
