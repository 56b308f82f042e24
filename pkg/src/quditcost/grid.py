"""Symmetric uniform discretization of a bounded field amplitude.

The on-site field operator is diagonal on a grid of d = 2M + 1 equally
spaced eigenvalues spanning [-phi_max, +phi_max].  Every other module
consumes this grid, so construction validates the structural invariants
up front: odd local dimension, positive amplitude bound, and the exact
spacing relation delta_phi = 2 * phi_max / (d - 1).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldGrid:
    """Symmetric amplitude truncation with d = 2M + 1 levels.

    Attributes:
        phi_max: largest field amplitude on the grid (grid endpoint).
        d: local dimension, i.e. number of grid points (odd).
        half_width: M = (d - 1) / 2, points on either side of zero.
        delta_phi: grid spacing, 2 * phi_max / (d - 1).
        lambdas: the d field eigenvalues, -phi_max + n * delta_phi.
        n_b: qubit register width covering d levels, ceil(log2(d)).
    """

    phi_max: float
    d: int
    half_width: int
    delta_phi: float
    lambdas: tuple[float, ...]
    n_b: int


def make_grid(phi_max: float, d: int) -> FieldGrid:
    """Build and validate the symmetric field-amplitude grid.

    Args:
        phi_max: amplitude bound, must be positive.
        d: local dimension, must be odd and at least 3.

    Raises:
        ValueError: for even d, d < 3, or non-positive phi_max.
    """
    if phi_max <= 0:
        raise ValueError(f"phi_max must be positive, got {phi_max}")
    if d < 3:
        raise ValueError(f"local dimension must be at least 3, got {d}")
    if d % 2 == 0:
        raise ValueError(f"symmetric truncation requires odd d, got {d}")
    half_width = (d - 1) // 2
    delta_phi = 2.0 * phi_max / (d - 1)
    lambdas = tuple(-phi_max + n * delta_phi for n in range(d))
    # exact ceil(log2 d); odd d is never a power of two
    n_b = (d - 1).bit_length()
    return FieldGrid(
        phi_max=float(phi_max),
        d=d,
        half_width=half_width,
        delta_phi=delta_phi,
        lambdas=lambdas,
        n_b=n_b,
    )


def squared_mean(grid: FieldGrid) -> float:
    """Mean of the squared eigenvalues, (1/d) * sum_n lambda_n^2.

    Computed by direct summation; for the symmetric grid this equals
    phi_max^2 * (d + 1) / (3 * (d - 1)), which the tests cross-check.
    """
    return sum(lam * lam for lam in grid.lambdas) / grid.d
