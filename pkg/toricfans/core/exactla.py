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
import numpy as np
import sympy
from typing import Sequence
from ..models.matrix import IntMatrix
from ..utils import InputError

logger = logging.getLogger(__name__)


def exgcd(a: int, b: int) -> np.ndarray:
    """
    Extended GCD algorithm.

    Returns a 2x2 integer matrix M of determinant 1 so that M @ [a, b] = [gcd(a, b), 0]. If a divides b, M[0, 1]
    is 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign
    # Euclid's algorithm on the column [a, b], tracking the row operations by augmenting with the identity.
    m = np.array([[a, 1, 0],
                  [b, 0, 1]], dtype=object)
    m = m[::-1]
    while m[1, 0] != 0:
        q = m[0, 0] // m[1, 0]
        m[0] -= q * m[1]
        m = m[::-1]
    g = m[0, 0]
    m = m[:, 1:].copy()
    m *= np.array([a_sign, b_sign], dtype=object)
    # Fix the sign of the determinant using m[0, 0] * a + m[0, 1] * b = g.
    if g != 0:
        m[1] = [-b_sign * b // g, a_sign * a // g]
    return m


def normal_form(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Diagonalizes an integer matrix without divisibility guarantees.

    Returns (D, mu, nu) with mu @ a @ nu == D, D diagonal and mu, nu unimodular.
    """
    d = a.copy().astype(object)
    mu = np.eye(d.shape[0], dtype=int).astype(object)
    nu = np.eye(d.shape[1], dtype=int).astype(object)

    def clear_row(i: int) -> bool:
        if all(item == 0 for item in d[i, i + 1:]):
            return False
        for j in range(i + 1, d.shape[1]):
            m = exgcd(d[i, i], d[i, j]).T
            d[:, [i, j]] = d[:, [i, j]].dot(m)
            nu[:, [i, j]] = nu[:, [i, j]].dot(m)
        return True

    def clear_col(i: int) -> bool:
        if all(item == 0 for item in d[i + 1:, i]):
            return False
        for j in range(i + 1, d.shape[0]):
            m = exgcd(d[i, i], d[j, i])
            d[[i, j]] = m.dot(d[[i, j]])
            mu[[i, j]] = m.dot(mu[[i, j]])
        return True

    for i in range(min(*d.shape)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass
    return d, mu, nu


def hnf_array(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Row Hermite normal form of an integer array: returns (H, U) with U @ a == H.
    """
    h = a.copy().astype(object)
    rows, cols = h.shape
    u = np.eye(rows, dtype=int).astype(object)
    pivot = 0
    for c in range(cols):
        if pivot == rows:
            break
        if all(h[i, c] == 0 for i in range(pivot, rows)):
            continue
        for i in range(pivot + 1, rows):
            if h[i, c] != 0:
                m = exgcd(h[pivot, c], h[i, c])
                h[[pivot, i]] = m.dot(h[[pivot, i]])
                u[[pivot, i]] = m.dot(u[[pivot, i]])
        if h[pivot, c] < 0:
            h[pivot] = -h[pivot]
            u[pivot] = -u[pivot]
        for k in range(pivot):
            q = h[k, c] // h[pivot, c]
            if q:
                h[k] = h[k] - q * h[pivot]
                u[k] = u[k] - q * u[pivot]
        pivot += 1
    return h, u


def hnf_rows(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """
    Row-style Hermite normal form: returns (H, U) with U unimodular and H = U·M. Pivots are positive, entries above
    a pivot lie in [0, pivot) and zero rows come last.
    """
    h, u = hnf_array(m.array())
    return IntMatrix.from_array(h), IntMatrix.from_array(u)


def hnf_pivots(m: IntMatrix) -> list[int]:
    """
    Returns the pivot columns of the row Hermite normal form of the matrix.
    """
    h, _ = hnf_rows(m)
    pivots = []
    for i in range(h.rows):
        row = h.row(i)
        nonzero = [j for j, item in enumerate(row) if item != 0]
        if nonzero:
            pivots.append(nonzero[0])
    return pivots


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form: returns (D, mu, nu) with mu, nu unimodular, D = mu·M·nu diagonal, non-negative and
    d_1 | d_2 | ... with zero entries last.
    """
    d, mu, nu = normal_form(m.array())
    size = min(d.shape)
    while True:
        pair = None
        for i in range(size):
            for j in range(i + 1, size):
                if (d[i, i] == 0 and d[j, j] != 0) or (d[i, i] != 0 and d[j, j] % d[i, i] != 0):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        d[:, i] = d[:, i] + d[:, j]
        nu[:, i] = nu[:, i] + nu[:, j]
        d, mu2, nu2 = normal_form(d)
        mu = mu2.dot(mu)
        nu = nu.dot(nu2)
    for i in range(size):
        if d[i, i] < 0:
            d[i] = -d[i]
            mu[i] = -mu[i]
    return IntMatrix.from_array(d), IntMatrix.from_array(mu), IntMatrix.from_array(nu)


def invariant_factors(m: IntMatrix) -> list[int]:
    """
    Returns the nonzero invariant factors of the matrix.
    """
    d, _, _ = snf(m)
    return [item for item in (d.entry(i, i) for i in range(min(d.rows, d.cols))) if item != 0]


def integer_kernel_rows(m: IntMatrix) -> IntMatrix | None:
    """
    Returns a row basis K, in Hermite normal form, of the saturated lattice {x in Z^cols : M·x = 0}, or None if the
    kernel is trivial.
    """
    h, u = hnf_rows(m.T)
    rank = sum(1 for i in range(h.rows) if any(h.row(i)))
    if rank == u.rows:
        return None
    kernel = u.lower(u.rows - rank)
    return hnf_rows(kernel)[0]


def det_exact(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """
    Exact determinant by fraction-free Bareiss elimination.
    """
    rows = m.tolist() if isinstance(m, IntMatrix) else [list(row) for row in m]
    size = len(rows)
    if size == 0:
        return 1
    if any(len(row) != size for row in rows):
        raise InputError(f"The determinant needs a square matrix, got {size}x{len(rows[0])}.")
    a = [list(row) for row in rows]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[size - 1][size - 1]


def rank_of(rows: Sequence[Sequence[int]]) -> int:
    """
    Returns the rank of an integer matrix given as a list of rows.
    """
    rows = [list(row) for row in rows if any(row)]
    if not rows:
        return 0
    h, _ = hnf_array(np.array(rows, dtype=object))
    return sum(1 for row in h if any(item != 0 for item in row))


def rank(m: IntMatrix) -> int:
    return rank_of(m.tolist())


def lattice_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """
    Decides whether the row lattices of two matrices coincide by comparing their Hermite normal forms.
    """
    if a.cols != b.cols:
        raise InputError(f"Cannot compare row lattices in Z^{a.cols} and Z^{b.cols}.")
    return _nonzero_rows(hnf_rows(a)[0]) == _nonzero_rows(hnf_rows(b)[0])


def _nonzero_rows(m: IntMatrix) -> list[tuple[int, ...]]:
    return [m.row(i) for i in range(m.rows) if any(m.row(i))]


def primitive_vector(vector: Sequence[int]) -> tuple[int, ...]:
    """
    Divides an integer vector by the gcd of its entries, keeping the sign.
    """
    g = math.gcd(*vector)
    return tuple(vector) if g in (0, 1) else tuple(item // g for item in vector)


def kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """
    Returns the vector of signed maximal minors of a (d-1)×d matrix, which spans its kernel when the rank is d-1
    and is zero otherwise.
    """
    width = len(rows[0]) if rows else 1
    result = []
    for k in range(width):
        minor = [[row[j] for j in range(width) if j != k] for row in rows]
        result.append((-1) ** k * det_exact(minor))
    return tuple(result)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def lcm_of(values: Sequence[int]) -> int:
    return math.lcm(*values) if values else 1


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    inverse = m.to_sympy().inv()
    return IntMatrix.from_rows([[int(item) for item in row] for row in inverse.tolist()])


def solve_rational(a: Sequence[Sequence[int]], b: Sequence) -> list[sympy.Rational] | None:
    """
    Returns one rational solution x of a·x = b (free parameters set to 0), or None if the system is inconsistent.
    """
    matrix = sympy.Matrix([list(row) for row in a])
    target = sympy.Matrix([sympy.Rational(item) for item in b])
    try:
        solution, parameters = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    if parameters.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in parameters})
    return [sympy.Rational(item) for item in solution]


def integer_solve(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """
    Returns an integer solution x of a·x = b, or None if none exists.
    """
    d, mu, nu = snf(a)
    target = mu.array().dot(np.array(list(b), dtype=object))
    y = [0] * a.cols
    for i in range(a.rows):
        pivot = d.entry(i, i) if i < a.cols else 0
        if pivot == 0:
            if target[i] != 0:
                return None
            continue
        if target[i] % pivot != 0:
            return None
        y[i] = target[i] // pivot
    x = nu.array().dot(np.array(y, dtype=object))
    return tuple(int(item) for item in x)


def in_row_lattice(vector: Sequence[int], m: IntMatrix) -> bool:
    """
    Decides whether an integer vector lies in the row lattice of the matrix.
    """
    return integer_solve(m.T, vector) is not None


def saturation(m: IntMatrix) -> IntMatrix:
    """
    Returns a Hermite row basis of the saturation of the row lattice, that is its rational span intersected with
    the integer lattice.
    """
    kernel = integer_kernel_rows(m)
    if kernel is None:
        return IntMatrix.identity(m.cols)
    return integer_kernel_rows(kernel)
