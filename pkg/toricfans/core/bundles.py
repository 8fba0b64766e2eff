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
import sympy
from typing import Sequence
from ..models.bundle import BaseCase, BundleDecomposition, Contractibility, CoverData, Tower, TowerStage, WptwbData
from ..models.collection import PrimitiveCollection
from ..models.cone import Cone, Vector
from ..models.fan import Chamber
from ..models.flags import FanMatrix
from ..models.matrix import IntMatrix, RatMatrix
from ..utils import CoveringError, InputError, InternalError
from .cones import cone_from_generators
from .exactla import det_exact, dot, hnf_rows, integer_kernel_rows, integer_solve, lcm_of, primitive_vector, rank, \
    rank_of, saturation, solve_rational
from .matrices import check_F, check_W, gale_dual, positive_ref, transform_bordering
from .primitive import maxbord_normals, recursive_descent
from .secfan import bunch_of_point, fan_of_bunch

logger = logging.getLogger(__name__)


def _cone_of(chamber: Chamber | Cone) -> Cone:
    return chamber.cone if isinstance(chamber, Chamber) else chamber


def _fibre_start(Q: IntMatrix) -> int:
    """
    Returns the number of leading zeros of the bottom row, checking that all later entries are positive.
    """
    bottom = Q.row(Q.rows - 1)
    start = next((j for j, item in enumerate(bottom) if item != 0), Q.cols)
    if start == 0 or start == Q.cols or any(item <= 0 for item in bottom[start:]):
        raise InputError(f"The bottom row {bottom} is not of the form (0, ..., 0, w_0, ..., w_s) with w_k > 0.")
    return start


def split_weight_matrix(Q_norm: IntMatrix) -> tuple[IntMatrix, IntMatrix, tuple[int, ...]]:
    """
    Splits a normalized weight matrix into the base block Q', the block Q'' above the fibre weights and the
    weights W = (w_0, ..., w_s).
    """
    if Q_norm.rows < 2:
        raise InputError("Only weight matrices of rank at least 2 split into base and fibre.")
    start = _fibre_start(Q_norm)
    upper = Q_norm.upper(Q_norm.rows - 1)
    return upper.columns(range(start)), upper.columns(range(start, Q_norm.cols)), Q_norm.row(Q_norm.rows - 1)[start:]


def normalize_fibre_block(Q_norm: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """
    Adds the least multiples of the bottom row to the upper rows that leave no positive entry above the fibre
    weights. Returns the row transformation T and T·Q.
    """
    start = _fibre_start(Q_norm)
    rows = Q_norm.tolist()
    bottom = rows[-1]
    transform = IntMatrix.identity(Q_norm.rows).tolist()
    for i in range(Q_norm.rows - 1):
        shift = max([0] + [-((-rows[i][j]) // bottom[j]) for j in range(start, Q_norm.cols)])
        if shift:
            rows[i] = [a - shift * b for a, b in zip(rows[i], bottom)]
            transform[i][-1] = -shift
    return IntMatrix.from_rows(transform), IntMatrix.from_rows(rows)


def classify_base_case(Qprime: IntMatrix) -> BaseCase:
    """
    Case a: Q' is a reduced W-matrix. Case b: a non reduced W-matrix. Case c: Q' fails only cotorsion freeness.
    """
    if Qprime.cols <= Qprime.rows:
        return BaseCase.not_W
    flags = check_W(Qprime).flags
    if flags.is_W:
        return BaseCase.a if flags.is_reduced else BaseCase.b
    if flags.full_rank and not flags.cotorsion_free:
        saturated = saturation(Qprime)
        if check_W(saturated).flags.is_W:
            return BaseCase.c
    return BaseCase.not_W


def _solve_left(target: IntMatrix, source: IntMatrix) -> sympy.Matrix:
    """
    Returns the rational square matrix A with A·source = target for a full row rank source.
    """
    chosen = []
    for j in range(source.cols):
        if rank_of([source.col(k) for k in chosen + [j]]) > len(chosen):
            chosen.append(j)
        if len(chosen) == source.rows:
            break
    A = target.columns(chosen).to_sympy() * source.columns(chosen).to_sympy().inv()
    if A * source.to_sympy() != target.to_sympy():
        raise InternalError("The row lattices are not related by a rational transformation.")
    return A


def _block_diagonal(upper: sympy.Matrix, corner) -> sympy.Matrix:
    return sympy.diag(upper, sympy.Matrix([[corner]]))


def covering_reduction(Q: IntMatrix, V: IntMatrix, case: BaseCase) -> CoverData:
    """
    Replaces a weight matrix in the shape (Q', Q''; 0, W) by the weight matrix Q̃ = A·Q·B of a toric cover whose
    base block is a reduced W-matrix. V must be the fan matrix with the columns in the same order as Q.
    """
    start = _fibre_start(Q)
    identity = IntMatrix.identity(Q.cols)
    if case == BaseCase.a:
        return CoverData(A=RatMatrix.from_int(IntMatrix.identity(Q.rows)), B=identity,
                         C=IntMatrix.identity(V.rows), index=1, Q_tilde=Q, V_tilde=V)
    if case == BaseCase.not_W:
        raise InputError("No toric cover reduces a base block that is not a W-matrix.")
    if not check_F(V).flags.is_CF:
        raise CoveringError("The fan matrix is not a CF-matrix, so the covering morphism need not exist.")
    Qprime, Qsecond, _ = split_weight_matrix(Q)
    scaling = [1] * start
    current = saturation(Qprime)
    while True:
        dual = gale_dual(current)
        column = next((j for j in range(start) if math.gcd(*dual.col(j)) > 1), None)
        if column is None:
            break
        scaling[column] *= math.gcd(*dual.col(column))
        current = saturation(Qprime @ IntMatrix.diagonal(scaling))
    reduced = positive_ref(current)
    A_base = _solve_left(reduced, Qprime @ IntMatrix.diagonal(scaling))
    fibre = A_base * Qsecond.to_sympy()
    t = lcm_of([sympy.Rational(item).q for item in fibre])
    A = _block_diagonal(A_base, sympy.Rational(1, t))
    B = IntMatrix.diagonal(scaling + [t] * (Q.cols - start))
    Q_tilde = RatMatrix.from_sympy(A * Q.to_sympy() * B.to_sympy())
    if not Q_tilde.is_integral:
        raise InternalError("The covered weight matrix is not integral.")
    Q_tilde = Q_tilde.to_int()
    V_tilde = gale_dual(Q_tilde)
    target = B @ V_tilde.T
    columns = []
    for j in range(target.cols):
        solution = solve_rational(V.T.tolist(), target.col(j))
        if solution is None or any(item.q != 1 for item in solution):
            raise CoveringError(f"Column {j} of B·Ṽ^T has no integral preimage under V^T.")
        columns.append([int(item) for item in solution])
    C = IntMatrix.from_columns(columns)
    index = abs(det_exact(C))
    logger.debug(f"Case {case} cover with exponents {B.entries[::Q.cols + 1]} and index {index}.")
    return CoverData(A=RatMatrix.from_sympy(A), B=B, C=C, index=index, Q_tilde=Q_tilde, V_tilde=V_tilde)


def cover_coordinate_map(B: IntMatrix, column_order: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """
    Reads a cover on Cox coordinates as Y_j = X_j^(b_j). Returns (original column index, b_j) pairs.
    """
    order = list(column_order) if column_order is not None else list(range(B.rows))
    return sorted((order[k], B.entry(k, k)) for k in range(B.rows))


def ramification(B: IntMatrix, column_order: Sequence[int] | None = None) -> list[int]:
    """
    Returns the columns whose invariant divisor the cover ramifies along.
    """
    return [j for j, exponent in cover_coordinate_map(B, column_order) if exponent > 1]


def cartier_index(Vbase: IntMatrix, fan_cones: Sequence[Sequence[int]], coeffs: Sequence[int]) -> int:
    """
    Returns the least l ≥ 1 such that l·Σ coeffs_j·D_j is Cartier, that is for every maximal cone I the system
    V_I^T·m = l·coeffs_I has an integral solution.
    """
    if len(coeffs) != Vbase.cols:
        raise InputError(f"{len(coeffs)} coefficients do not match {Vbase.cols} divisors.")
    if not any(coeffs):
        return 1
    denominators = []
    for cone in fan_cones:
        solution = solve_rational(Vbase.columns(cone).T.tolist(), [coeffs[j] for j in cone])
        if solution is None:
            raise InternalError(f"The cone {tuple(cone)} is not simplicial of full dimension.")
        denominators.extend(item.q for item in solution)
    return lcm_of(denominators)


def wps_fan_generators(W: Sequence[int]) -> tuple[Vector, ...]:
    """
    Returns integer vectors e_0..e_s with Σ w_k·e_k = 0, read off the Hermite basis of the kernel of W.
    """
    kernel = integer_kernel_rows(IntMatrix.from_rows([list(W)]))
    if kernel is None:
        return ()
    return tuple(kernel.col(k) for k in range(kernel.cols))


def build_fibred_fan(Vbase: IntMatrix | None, classes: IntMatrix | None, W: Sequence[int]) -> FanMatrix:
    """
    Builds the fan matrix (V', 0; E·a, E) of the weighted projective toric bundle of the divisors with
    coefficient rows a over the base with fan matrix V'. Without a base this is the fan matrix of the WPS.
    """
    if len(W) < 2:
        raise InputError("A weighted projective bundle needs at least two fibre weights.")
    E = IntMatrix.from_columns(wps_fan_generators(W))
    if Vbase is None:
        return check_F(E)
    if classes is None or classes.rows != len(W) or classes.cols != Vbase.cols:
        raise InputError(f"The divisor classes must form a {len(W)}x{Vbase.cols} matrix.")
    lower = E @ classes
    rows = [list(Vbase.row(i)) + [0] * len(W) for i in range(Vbase.rows)]
    rows += [list(lower.row(i)) + list(E.row(i)) for i in range(E.rows)]
    return check_F(IntMatrix.from_rows(rows))


def wptwb_tower(W: Sequence[int], l: Sequence[int], Q: IntMatrix | None = None) -> WptwbData:
    """
    Computes the weighted projective toric bundle covered by the weak bundle whose divisors E_k have Cartier
    indices l_k. If the normalized weight matrix Q of the weak bundle is given, Λ is sized to it and the lattice
    inclusion Φ is computed.
    """
    if len(W) != len(l):
        raise InputError(f"{len(W)} weights but {len(l)} Cartier indices.")
    scaled = [a * b for a, b in zip(l, W)]
    lam = math.gcd(*scaled)
    scaled = [item // lam for item in scaled]
    d = []
    for k in range(len(W)):
        others = scaled[:k] + scaled[k + 1:]
        d.append(math.gcd(*others) if others else 1)
    a = math.prod(d)
    a_vec = [a // item for item in d]
    eta = [l[k] * d[k] for k in range(len(W))]
    reduced = [scaled[k] // a_vec[k] for k in range(len(W))]
    base_columns = Q.cols - len(W) if Q is not None else 0
    Lambda = IntMatrix.diagonal([1] * base_columns + eta)
    Phi = None
    if Q is not None:
        Delta = sympy.diag(*([1] * (Q.rows - 1) + [sympy.Rational(1, lam * a)]))
        bundle = RatMatrix.from_sympy(Delta * Q.to_sympy() * Lambda.to_sympy())
        if not bundle.is_integral:
            raise InternalError("The weight matrix of the covered bundle is not integral.")
        V = gale_dual(Q)
        _, U = hnf_rows(V.T)
        Phi = U.upper(V.rows) @ Lambda @ gale_dual(bundle.to_int()).T
    return WptwbData(
        l=tuple(l),
        lambda_=lam,
        d=tuple(d),
        a_vec=tuple(a_vec),
        a=a,
        eta=tuple(eta),
        W_reduced=tuple(reduced),
        galois_order=math.prod(l) // lam,
        Lambda=Lambda,
        Phi=Phi,
        ramification=tuple(eta)
    )


def _base_chamber(cone: Cone, transform: sympy.Matrix, normal: Sequence[int]) -> Cone:
    """
    Maps the face of the chamber on the hyperplane into the base coordinates, dropping the last coordinate.
    """
    rays = []
    for ray in cone.rays:
        if dot(normal, ray) != 0:
            continue
        image = transform * sympy.Matrix(ray)
        if image[-1] != 0:
            raise InternalError(f"The ray {ray} on the facet is not mapped into x_r = 0.")
        multiplier = lcm_of([sympy.Rational(item).q for item in image])
        rays.append(tuple(int(item * multiplier) for item in list(image)[:-1]))
    return cone_from_generators(rays, transform.rows - 1)


def decompose(V: IntMatrix, Q: IntMatrix, chamber: Chamber | Cone, normal: Sequence[int]) -> BundleDecomposition:
    """
    Normalizes the weight matrix for a facet of the Gale dual cone, splits it into base and fibre and, for a
    chamber maxbord w.r.t. the facet, computes the toric cover, the base chamber and the Cartier indices of the
    fibre divisors.
    """
    cone = _cone_of(chamber)
    normal = primitive_vector(list(normal))
    alpha, beta, Q_new = transform_bordering(Q, normal)
    order = tuple(next(j for j in range(beta.rows) if beta.entry(j, k) == 1) for k in range(beta.cols))
    shift, Q_normal = normalize_fibre_block(Q_new)
    Qprime, Qsecond, W = split_weight_matrix(Q_normal)
    maxbord = rank_of([ray for ray in cone.rays if dot(normal, ray) == 0]) == Q.rows - 1
    case = classify_base_case(Qprime)
    failed = tuple(check_W(Qprime).flags.failed) if Qprime.cols > Qprime.rows else ("full_rank",)
    fields = dict(hyperplane=normal, maxbord=maxbord, alpha=shift @ alpha, column_order=order, Q_normal=Q_normal,
                  Qprime=Qprime, Qsecond=Qsecond, W=W, case=case, failed_conditions=failed)
    if not maxbord or case == BaseCase.not_W:
        logger.info(f"No bundle structure along {normal}: maxbord={maxbord}, case={case}.")
        return BundleDecomposition(**fields)
    cover = covering_reduction(Q_new, V.columns(order), case)
    _, Q_weak = normalize_fibre_block(cover.Q_tilde)
    base_Q, fibre_block, _ = split_weight_matrix(Q_weak)
    base_V = gale_dual(base_Q)
    base_cone = _base_chamber(cone, cover.A.to_sympy() * alpha.to_sympy(), normal)
    sample = tuple(sum(column) for column in zip(*base_cone.rays))
    base_fan = fan_of_bunch(bunch_of_point(base_Q, sample), base_Q.cols, True, "base")
    indices = []
    for k in range(fibre_block.cols):
        divisor = integer_solve(base_Q, [-item for item in fibre_block.col(k)])
        if divisor is None:
            raise InternalError(f"The class of E_{k} is not a combination of the base divisors.")
        indices.append(cartier_index(base_V, base_fan.maximal_cones, divisor))
    wptwb = wptwb_tower(W, indices, Q_weak) if any(item > 1 for item in indices) else None
    logger.info(f"Bundle structure along {normal}: case {case}, W={W}, Cartier indices {indices}.")
    return BundleDecomposition(
        **fields,
        cover=cover if case != BaseCase.a else None,
        base_weight_matrix=base_Q,
        base_fan_matrix=base_V,
        base_chamber=base_cone,
        base_fan=base_fan,
        cartier_indices=tuple(indices),
        wptwb=wptwb
    )


def recursive_decomposition(chamber: Chamber | Cone, V: IntMatrix, Q: IntMatrix) -> Tower:
    """
    Descends a recursively maxbord chamber through bundle decompositions down to a weighted projective space.
    """
    cone = _cone_of(chamber)
    if recursive_descent(cone, Q) is None:
        raise InputError("The chamber is not recursively maxbord.")
    stages = []
    level = 0
    while Q.rows > 1:
        chosen = None
        for normal in maxbord_normals(cone, Q):
            try:
                decomposition = decompose(V, Q, cone, normal)
            except CoveringError as ex:
                logger.debug(f"Skipping {normal}: {ex.message}")
                continue
            if decomposition.base_chamber is None:
                continue
            base_Q = decomposition.base_weight_matrix
            if base_Q.rows == 1 or recursive_descent(decomposition.base_chamber, base_Q) is not None:
                chosen = decomposition
                break
        if chosen is None:
            raise InternalError(f"The recursive descent stalls at level {level}.")
        stages.append(TowerStage(level=level, chamber=cone, weight_matrix=Q, decomposition=chosen))
        V, Q, cone = chosen.base_fan_matrix, chosen.base_weight_matrix, chosen.base_chamber
        level += 1
    stages.append(TowerStage(level=level, chamber=cone, weight_matrix=Q))
    return Tower(stages=tuple(stages))


def contractibility(
        collection: PrimitiveCollection | Sequence[int],
        chamber: Chamber | Cone,
        V: IntMatrix,
        Q: IntMatrix
) -> Contractibility:
    """
    Decides whether a numerically effective class is contractible, pseudo-contractible (contractible on a toric
    cover) or neither.
    """
    numerical = collection.numerical_class if isinstance(collection, PrimitiveCollection) else tuple(collection)
    if numerical is None or any(dot(numerical, Q.col(j)) < 0 for j in range(Q.cols)):
        raise InputError(f"The class {numerical} is not numerically effective.")
    cone = _cone_of(chamber)
    normal = primitive_vector(numerical)
    if normal not in maxbord_normals(cone, Q):
        return Contractibility.neither
    decomposition = decompose(V, Q, cone, normal)
    if decomposition.is_bundle:
        return Contractibility.contractible
    return Contractibility.pseudo_contractible
