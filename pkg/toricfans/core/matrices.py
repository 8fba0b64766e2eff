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
import itertools
from typing import Sequence
from ..models.cone import Cone, Vector
from ..models.flags import FanMatrix, FanMatrixFlags, WeightMatrix, WeightMatrixFlags
from ..models.matrix import IntMatrix
from ..utils import InputError, InternalError, NotFacetError, NotFanMatrixError, NotStronglyConvexError, \
    NotWeightMatrixError
from .cones import cone_from_generators
from .exactla import det_exact, dot, hnf_rows, in_row_lattice, integer_kernel_rows, invariant_factors, \
    primitive_vector, rank, rank_of

logger = logging.getLogger(__name__)


def _is_pointed(columns: Sequence[Vector]) -> bool:
    """
    Returns True if the nonzero vectors lie in an open half-space, that is their cone is strongly convex.
    """
    if any(not any(column) for column in columns):
        return False
    try:
        cone_from_generators(columns, len(columns[0]))
    except NotStronglyConvexError:
        return False
    return True


def check_F(V: IntMatrix) -> FanMatrix:
    """
    Checks the F-matrix conditions one by one, plus the CF and reducedness properties.
    """
    if V.cols <= V.rows:
        raise InputError(f"A fan matrix needs more columns than rows, got {V.rows}x{V.cols}.")
    columns = V.column_list()
    full_rank = rank(V) == V.rows
    nonzero_columns = all(any(column) for column in columns)
    primitive = [primitive_vector(column) for column in columns]
    no_proportional_columns = len(set(primitive)) == len(primitive)
    complete = False
    if full_rank and nonzero_columns:
        kernel = integer_kernel_rows(V)
        complete = kernel is not None and _is_pointed(kernel.column_list())
    factors = tuple(invariant_factors(V))
    flags = FanMatrixFlags(
        full_rank=full_rank,
        complete=complete,
        nonzero_columns=nonzero_columns,
        no_proportional_columns=no_proportional_columns,
        is_F=full_rank and complete and nonzero_columns and no_proportional_columns,
        is_CF=full_rank and all(item == 1 for item in factors),
        is_reduced=all(math.gcd(*column) == 1 for column in columns),
        invariant_factors=factors
    )
    logger.debug(f"F-matrix check of a {V.rows}x{V.cols} matrix: failed conditions {flags.failed}")
    return FanMatrix(V=V, flags=flags)


def _opposite_pair_witness(Q: IntMatrix) -> tuple[int, ...] | None:
    """
    Searches the row lattice for a vector supported on two coordinates whose entries have opposite signs.
    """
    for i, j in itertools.combinations(range(Q.cols), 2):
        others = Q.complement([i, j])
        kernel = integer_kernel_rows(others.T) if others.cols else IntMatrix.identity(Q.rows)
        if kernel is None:
            continue
        combinations = [kernel.row(k) for k in range(kernel.rows)]
        images = [(dot(combination, Q.col(i)), dot(combination, Q.col(j))) for combination in combinations]
        image_rank = rank_of(images)
        if image_rank == 0:
            continue
        if image_rank == 1:
            index = next(k for k, image in enumerate(images) if any(image))
            a, b = images[index]
            if a * b >= 0:
                continue
            coefficients = combinations[index]
        else:
            # A full rank lattice in the plane meets every open quadrant; (det, -det) lies in it.
            first, second = [k for k in range(len(images)) if any(images[k])][:2]
            u, v = images[first], images[second]
            if rank_of([u, v]) < 2:
                second = next(k for k in range(len(images)) if rank_of([u, images[k]]) == 2)
                v = images[second]
            # x*u + y*v = (det, -det) by Cramer's rule.
            x, y = v[0] + v[1], -(u[0] + u[1])
            coefficients = tuple(x * p + y * q for p, q in zip(combinations[first], combinations[second]))
        witness = tuple(dot(coefficients, Q.col(k)) for k in range(Q.cols))
        return witness
    return None


def echelon_pivots(Q: IntMatrix) -> tuple[int, ...] | None:
    """
    Returns pivot columns p_1..p_r with Q[i][p_i] > 0 and Q[k][p_i] = 0 for k > i, or None if the matrix is not in
    row echelon form up to a column permutation.
    """
    pivots = [0] * Q.rows
    used = set()
    for i in reversed(range(Q.rows)):
        candidates = [j for j in range(Q.cols) if j not in used and Q.entry(i, j) > 0
                      and all(Q.entry(k, j) == 0 for k in range(i + 1, Q.rows))]
        if not candidates:
            return None
        pivots[i] = candidates[0]
        used.add(candidates[0])
    return tuple(pivots)


def is_strict_echelon(Q: IntMatrix) -> bool:
    """
    Returns True if the matrix is in row echelon form without permuting columns.
    """
    leading = []
    for i in range(Q.rows):
        nonzero = [j for j in range(Q.cols) if Q.entry(i, j) != 0]
        if not nonzero:
            return False
        leading.append(nonzero[0])
    return all(a < b for a, b in zip(leading, leading[1:]))


def check_W(Q: IntMatrix) -> WeightMatrix:
    """
    Checks the W-matrix conditions (a) to (f) one by one.
    """
    if Q.cols <= Q.rows:
        raise InputError(f"A weight matrix needs more columns than rows, got {Q.rows}x{Q.cols}.")
    columns = Q.column_list()
    full_rank = rank(Q) == Q.rows
    factors = invariant_factors(Q)
    cotorsion_free = full_rank and all(item == 1 for item in factors)
    nonzero_columns = all(any(column) for column in columns)
    positive_basis = full_rank and _is_pointed(columns)
    no_unit_vectors = not any(
        in_row_lattice(tuple(1 if k == j else 0 for k in range(Q.cols)), Q) for j in range(Q.cols)
    )
    witness = _opposite_pair_witness(Q) if full_rank else None
    is_w = full_rank and cotorsion_free and positive_basis and nonzero_columns and no_unit_vectors \
        and witness is None
    is_reduced = False
    if full_rank:
        dual = integer_kernel_rows(Q)
        is_reduced = dual is not None and all(math.gcd(*column) == 1 for column in dual.column_list())
    nonnegative = all(item >= 0 for item in Q.entries)
    pivots = echelon_pivots(Q) if nonnegative else None
    flags = WeightMatrixFlags(
        full_rank=full_rank,
        cotorsion_free=cotorsion_free,
        positive_basis=positive_basis,
        nonzero_columns=nonzero_columns,
        no_unit_vectors=no_unit_vectors,
        no_opposite_pairs=witness is None,
        opposite_pair_witness=witness,
        is_W=is_w,
        is_reduced=is_reduced,
        is_positive_REF=pivots is not None
    )
    logger.debug(f"W-matrix check of a {Q.rows}x{Q.cols} matrix: failed conditions {flags.failed}")
    return WeightMatrix(Q=Q, flags=flags, pivots=pivots)


def gale_dual(M: IntMatrix) -> IntMatrix:
    """
    Returns a Hermite row basis D of the integer kernel of M, so that D·M^T = 0 and the row lattice of D is
    saturated.
    """
    if rank(M) != M.rows:
        raise InputError(f"The Gale dual needs a full row rank matrix, got rank {rank(M)} for {M.rows} rows.")
    dual = integer_kernel_rows(M)
    if dual is None:
        raise InputError(f"The {M.rows}x{M.cols} matrix has a trivial kernel.")
    return dual


def weight_matrix_of(V: IntMatrix) -> IntMatrix:
    """
    Returns the canonical positive REF weight matrix Gale dual to a fan matrix.
    """
    return positive_ref(gale_dual(V))


def _minimal_face(cone: Cone, columns: Sequence[Vector], members: Sequence[int]) -> tuple[frozenset, int]:
    """
    Returns the column indices and the dimension of the smallest face of the cone containing the given columns.
    """
    tight = [normal for normal in cone.facet_normals
             if all(dot(normal, columns[j]) == 0 for j in members)]
    face = frozenset(j for j, column in enumerate(columns) if all(dot(normal, column) == 0 for normal in tight))
    return face, rank_of([columns[j] for j in face]) if face else 0


def face_flag(Q: IntMatrix, facet_normal: Sequence[int] | None = None) -> list[frozenset]:
    """
    Builds a complete flag of faces F_1 ⊂ ... ⊂ F_r of the cone generated by the columns, each given by the indices
    of the columns it contains. At each step the lowest index column that raises the dimension by one is taken. If
    a facet normal is given, F_(r-1) is that facet.
    """
    columns = Q.column_list()
    cone = cone_from_generators(columns, Q.rows)
    allowed = set(range(Q.cols))
    if facet_normal is not None:
        allowed = {j for j, column in enumerate(columns) if dot(facet_normal, column) == 0}
    flag = []
    current: frozenset = frozenset()
    for level in range(1, Q.rows + 1):
        if level == Q.rows:
            flag.append(frozenset(range(Q.cols)))
            break
        for j in sorted(allowed - current):
            face, dim = _minimal_face(cone, columns, sorted(current | {j}))
            if dim == level and face <= allowed:
                current = face
                break
        else:
            raise InternalError(f"No face of dimension {level} extends the flag {flag}.")
        flag.append(current)
    return flag


def _levels(flag: list[frozenset], count: int) -> list[int]:
    return [next(level for level, face in enumerate(flag) if j in face) for j in range(count)]


def _positive_echelon(Q: IntMatrix, flag: list[frozenset]) -> tuple[IntMatrix, IntMatrix, list[int]]:
    """
    Computes a positive row basis adapted to the flag: row k vanishes on the columns of F_(k-1) and is non-negative
    everywhere. Returns (alpha, Q_new, levels) with Q_new = alpha·Q in the original column order.
    """
    levels = _levels(flag, Q.cols)
    order = sorted(range(Q.cols), key=lambda j: levels[j])
    h, u = hnf_rows(Q.columns(order))
    rows = [list(h.row(i)) for i in range(Q.rows)]
    transform = [list(u.row(i)) for i in range(Q.rows)]
    position = {j: k for k, j in enumerate(order)}
    for k in reversed(range(Q.rows - 1)):
        for level in range(k + 1, Q.rows):
            shift = 0
            for j in range(Q.cols):
                if levels[j] != level:
                    continue
                value, base = rows[k][position[j]], rows[level][position[j]]
                if base <= 0:
                    raise InternalError(f"Row {level} is not positive on the columns of level {level}.")
                if value < 0:
                    shift = max(shift, -(value // base))
            if shift:
                rows[k] = [a + shift * b for a, b in zip(rows[k], rows[level])]
                transform[k] = [a + shift * b for a, b in zip(transform[k], transform[level])]
    result = [[row[position[j]] for j in range(Q.cols)] for row in rows]
    if any(item < 0 for row in result for item in row):
        raise InternalError("The adapted row basis is not positive.")
    return IntMatrix.from_rows(transform), IntMatrix.from_rows(result), levels


def positive_ref(Q: IntMatrix) -> IntMatrix:
    """
    Returns a positive row basis of the row lattice in row echelon form up to a column permutation. A matrix that
    is already non-negative and in row echelon form is returned unchanged.
    """
    columns = Q.column_list()
    if rank(Q) != Q.rows or not _is_pointed(columns):
        raise NotWeightMatrixError("The row lattice admits no basis of positive vectors.")
    if all(item >= 0 for item in Q.entries) and is_strict_echelon(Q):
        return Q
    _, result, _ = _positive_echelon(Q, face_flag(Q))
    return result


def transform_bordering(Q: IntMatrix, H_normal: Sequence[int]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Normalizes a weight matrix with respect to a facet of its cone: returns (alpha, beta_perm, Q_new) with alpha
    unimodular, beta_perm a permutation matrix and Q_new = alpha·Q·beta_perm positive, in row echelon form up to a
    column permutation, the columns on the facet first and the bottom row vanishing exactly on them.
    """
    columns = Q.column_list()
    cone = cone_from_generators(columns, Q.rows)
    normal = primitive_vector([int(item) for item in H_normal])
    if normal not in cone.facet_normals:
        raise NotFacetError(f"The hyperplane with normal {normal} does not cut out a facet of the weight cone.")
    on_facet = [j for j, column in enumerate(columns) if dot(normal, column) == 0]
    off_facet = [j for j in range(Q.cols) if j not in on_facet]
    if all(item >= 0 for item in Q.entries) and is_strict_echelon(Q) and on_facet == list(range(len(on_facet))) \
            and all(Q.entry(Q.rows - 1, j) == 0 for j in on_facet) \
            and all(Q.entry(Q.rows - 1, j) > 0 for j in off_facet):
        return IntMatrix.identity(Q.rows), IntMatrix.identity(Q.cols), Q
    alpha, result, levels = _positive_echelon(Q, face_flag(Q, normal))
    order = sorted(range(Q.cols), key=lambda j: levels[j])
    beta = IntMatrix.from_rows([[1 if order[k] == j else 0 for k in range(Q.cols)] for j in range(Q.cols)])
    q_new = result.columns(order)
    if any(q_new.entry(Q.rows - 1, k) != 0 for k in range(len(on_facet))):
        raise InternalError("The bottom row does not vanish on the facet.")
    logger.debug(f"Normalized the weight matrix for the facet with normal {normal}: column order {order}")
    return alpha, beta, q_new


def reduce(V: IntMatrix) -> tuple[FanMatrix, WeightMatrix]:
    """
    Divides every column by the gcd of its entries and returns the reduced fan matrix with its positive REF Gale
    dual.
    """
    fan = check_F(V)
    if not fan.flags.is_F:
        raise NotFanMatrixError(f"The matrix is not an F-matrix: failed {fan.flags.failed}.")
    reduced = IntMatrix.from_columns([primitive_vector(column) for column in V.column_list()])
    return check_F(reduced), check_W(weight_matrix_of(reduced))


def determinant_constant(V: IntMatrix, Q: IntMatrix) -> int:
    """
    Returns the constant δ with |det V^J| = δ·|det Q_J| for every r-subset J of columns, where V^J are the columns
    outside J.
    """
    constant = None
    for subset in itertools.combinations(range(Q.cols), Q.rows):
        q_det = abs(det_exact(Q.columns(subset)))
        v_det = abs(det_exact(V.complement(subset)))
        if q_det == 0:
            if v_det != 0:
                raise InternalError(f"det Q_J vanishes but det V^J = {v_det} for J = {subset}.")
            continue
        if v_det % q_det != 0:
            raise InternalError(f"det V^J = {v_det} is not a multiple of det Q_J = {q_det} for J = {subset}.")
        if constant is None:
            constant = v_det // q_det
        elif constant != v_det // q_det:
            raise InternalError(f"The determinant ratio is not constant for J = {subset}.")
    return constant or 1
