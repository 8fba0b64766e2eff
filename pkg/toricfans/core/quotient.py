# This file is part of toricfans.
#
# toricfans is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# toricfans is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with toricfans. If not, see <https://www.gnu.org/licenses/>.

__author__ = "Lukas Reiter"
__copyright__ = "Copyright (C) 2024 Lukas Reiter"
__license__ = "GPLv3"

import math
import logging
from ..models.flags import FanMatrix
from ..models.matrix import IntMatrix
from ..models.quotient import CoxPresentation, PinnedTransforms, QuotientReport
from ..utils import InputError, InternalError, NotFanMatrixError
from .exactla import det_exact, hnf_pivots, hnf_rows, invariant_factors, snf, unimodular_inverse
from .matrices import check_F, check_W, gale_dual, weight_matrix_of

logger = logging.getLogger(__name__)


def _as_matrix(V: FanMatrix | IntMatrix) -> IntMatrix:
    return V.V if isinstance(V, FanMatrix) else V


def universal_covering(V: FanMatrix | IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """
    Returns the positive REF weight matrix Q of V and the CF fan matrix V̂ = G(Q) of the universal 1-covering.
    """
    V = _as_matrix(V)
    flags = check_F(V).flags
    if not flags.is_F:
        raise NotFanMatrixError(f"The matrix is not an F-matrix: failed {flags.failed}.")
    Q = weight_matrix_of(V)
    return Q, gale_dual(Q)


def _pipeline(V: IntMatrix, Vhat: IntMatrix) -> dict[str, IntMatrix]:
    """
    β = U^-1·β_H·Û relates V and V̂ through their Hermite normal forms, with β_H the pivot columns of HNF(V).
    """
    H, U = hnf_rows(V)
    H_hat, U_hat = hnf_rows(Vhat)
    beta_H = H.columns(hnf_pivots(V))
    beta = unimodular_inverse(U) @ beta_H @ U_hat
    Delta, mu, nu = snf(beta)
    return {"H": H, "U": U, "H_hat": H_hat, "U_hat": U_hat, "beta_H": beta_H, "beta": beta, "Delta": Delta,
            "mu": mu, "nu": nu}


def _factors(Delta: IntMatrix) -> tuple[int, ...]:
    return tuple(item for item in (Delta.entry(i, i) for i in range(Delta.rows)) if item > 1)


def torsion_invariants(V: FanMatrix | IntMatrix) -> tuple[int, ...]:
    """
    Returns the orders of the cyclic factors of the torsion of the class group.
    """
    V = _as_matrix(V)
    _, Vhat = universal_covering(V)
    factors = _factors(_pipeline(V, Vhat)["Delta"])
    if math.prod(factors) != math.prod(invariant_factors(V)):
        raise InternalError(f"The torsion {factors} disagrees with the invariant factors of V.")
    return factors


def _check_pinned(V: IntMatrix, s: int, pinned: PinnedTransforms, trace: dict[str, IntMatrix]) -> None:
    """
    Checks the shapes and unimodularity of the pinned transforms, μ·β·ν = Δ and W·(^sV′)^T = HNF((^sV′)^T).
    """
    n, m = V.rows, V.cols
    shapes = {"mu": (pinned.mu, n), "nu": (pinned.nu, n), "W": (pinned.W, m), "U_G": (pinned.U_G, m - s)}
    for name, (matrix, size) in shapes.items():
        if (matrix.rows, matrix.cols) != (size, size):
            raise InputError(f"The pinned transform {name} is {matrix.rows}x{matrix.cols}, expected {size}x{size}.")
        if abs(det_exact(matrix)) != 1:
            raise InputError(f"The pinned transform {name} is not unimodular.")
    if pinned.mu @ trace["beta"] @ pinned.nu != trace["Delta"]:
        raise InputError("The pinned transforms mu and nu do not bring β to its Smith normal form.")
    block = (pinned.mu @ V).upper(s).T
    if pinned.W @ block != hnf_rows(block)[0]:
        raise InputError("The pinned transform W does not bring (^sV′)^T to its Hermite normal form.")


def _pinned_gamma(V: IntMatrix, Vhat: IntMatrix, s: int, pinned: PinnedTransforms,
                  trace: dict[str, IntMatrix]) -> list[list[int]]:
    _check_pinned(V, s, pinned, trace)
    V_prime = pinned.mu @ V
    Vhat_prime = unimodular_inverse(pinned.nu) @ Vhat
    lower_W = pinned.W.lower(pinned.W.rows - s)
    G = Vhat_prime.lower(s) @ lower_W.T
    if pinned.U_G @ G.T != hnf_rows(G.T)[0]:
        raise InputError("The pinned transform U_G does not bring G^T to its Hermite normal form.")
    trace.update({"V_prime": V_prime, "Vhat_prime": Vhat_prime, "W": pinned.W, "G": G, "U_G": pinned.U_G})
    return (pinned.U_G.upper(s) @ lower_W).tolist()


def torsion_matrix_gamma(
        V: FanMatrix | IntMatrix,
        pinned: PinnedTransforms | None = None,
        trace: dict[str, IntMatrix] | None = None
) -> tuple[tuple[int, ...], ...]:
    """
    Returns Γ, one row per nontrivial torsion factor τ_i with the exponent of ε_i on each Cox coordinate.

    Without pinned transforms, row i is the i-th coordinate of the class map x ↦ ν^T·x of the Smith normal form
    μ·V·ν of V, so Γ·V^T vanishes mod τ_i. With pinned transforms, Γ = ^sU_G·_(n+r-s)W as traced through V′ = μ·V,
    V̂′ = ν^-1·V̂ and G = _sV̂′·(_(n+r-s)W)^T.
    """
    V = _as_matrix(V)
    trace = {} if trace is None else trace
    _, Vhat = universal_covering(V)
    trace.update(_pipeline(V, Vhat))
    factors = _factors(trace["Delta"])
    s = len(factors)
    if s == 0:
        return ()
    if pinned is not None:
        rows = _pinned_gamma(V, Vhat, s, pinned, trace)
    else:
        D, mu, nu = snf(V)
        diagonal = [D.entry(i, i) for i in range(min(D.rows, D.cols))]
        trace.update({"V_prime": mu @ V, "Vhat_prime": unimodular_inverse(trace["nu"]) @ Vhat, "class_map": nu.T})
        rows = [list(nu.col(i)) for i, item in enumerate(diagonal) if item > 1]
        factors = tuple(item for item in diagonal if item > 1)
        if len(rows) > 1:
            logger.warning("Γ with more than one torsion factor is experimental.")
    return tuple(tuple(item % factor for item in row) for row, factor in zip(rows, factors))


def quotient_report(V: FanMatrix | IntMatrix, pinned: PinnedTransforms | None = None) -> QuotientReport:
    V = _as_matrix(V)
    Q, Vhat = universal_covering(V)
    trace: dict[str, IntMatrix] = {}
    gamma = torsion_matrix_gamma(V, pinned, trace)
    factors = torsion_invariants(V)
    logger.info(f"Torsion {factors} with Γ = {gamma}.")
    return QuotientReport(
        V=check_F(V),
        Q=check_W(Q),
        Vhat=check_F(Vhat),
        torsion_factors=factors,
        Gamma=gamma,
        pinned=pinned is not None and bool(factors),
        trace=trace
    )


def cox_presentation(V: FanMatrix | IntMatrix, pinned: PinnedTransforms | None = None) -> CoxPresentation:
    return quotient_report(V, pinned).presentation
