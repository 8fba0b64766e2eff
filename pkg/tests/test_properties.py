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

import itertools
import math
import numpy as np
import pytest
from toricfans.core.exactla import det_exact, dot
from toricfans.core.matrices import check_F, weight_matrix_of
from toricfans.core.primitive import collections_with_relations, maxbord_normals, mori_generators, \
    nef_cone_via_collections
from toricfans.core.secfan import chamber_of_fan, enumerate_chambers, moving_chambers, singularity_profile
from toricfans.models.collection import PrimitiveCollection
from toricfans.models.matrix import IntMatrix

# (n, r, instances) with 200 instances in total
SHAPES = [(2, 2, 60), (3, 2, 50), (4, 2, 40), (2, 3, 50)]


def unimodular_mixing(rng: np.random.Generator, n: int) -> np.ndarray:
    """
    Returns a random product of elementary row operations and a row permutation.
    """
    U = np.eye(n, dtype=int)
    for _ in range(3):
        i, j = rng.choice(n, size=2, replace=False)
        U[i] += int(rng.integers(-2, 3)) * U[j]
    return U[rng.permutation(n)]


def random_fan_matrices(seed: int, n: int, extra: int, count: int, index: int = 1) -> list[IntMatrix]:
    """
    Returns reduced fan matrices U·M·[I_n | random columns] with entries of the random columns in [-3, 3], U
    unimodular and M the identity with the leading 2x2 block ((1, 1), (1 - index, 1)) of determinant index.
    """
    rng = np.random.default_rng(seed)
    M = np.eye(n, dtype=int)
    M[:2, :2] = [[1, 1], [1 - index, 1]]
    result = []
    while len(result) < count:
        columns = rng.integers(-3, 4, size=(n, extra))
        V = IntMatrix.from_array(unimodular_mixing(rng, n) @ M @ np.hstack([np.eye(n, dtype=int), columns]))
        flags = check_F(V).flags
        if flags.is_F and flags.is_reduced:
            result.append(V)
    return result


def shaped_instances(seed: int, index: int = 1) -> list[IntMatrix]:
    return [V for k, (n, r, count) in enumerate(SHAPES) for V in random_fan_matrices(seed + k, n, r, count, index)]


def nef_and_disjoint(collections: list[PrimitiveCollection]) -> bool:
    return any(item.is_nef and all(not set(item.P) & set(other.P) for other in collections if other.P != item.P)
               for item in collections)


def test_mixing_keeps_the_torsion():
    for index in (1, 2, 3):
        for V in random_fan_matrices(3, 3, 2, 10, index):
            assert math.prod(check_F(V).flags.invariant_factors) == index


@pytest.mark.slow
@pytest.mark.parametrize("index", [1, 2, 3])
def test_gale_duality_and_determinants(index):
    instances = shaped_instances(17, index)
    assert len(instances) == 200
    for V in instances:
        Q = weight_matrix_of(V)
        assert not any((V @ Q.T).entries)
        delta = math.prod(check_F(V).flags.invariant_factors)
        assert delta == index
        for J in itertools.combinations(range(V.cols), Q.rows):
            assert abs(det_exact(V.complement(J))) == delta * abs(det_exact(Q.columns(J)))


@pytest.mark.slow
def test_chambers_of_random_fan_matrices():
    instances = shaped_instances(7)
    assert len(instances) == 200
    for V in instances:
        assert check_F(V).flags.is_CF
        Q = weight_matrix_of(V)
        moving = moving_chambers(enumerate_chambers(Q))
        if V.rows == 2:
            assert moving
        for chamber in moving:
            assert chamber_of_fan(chamber.fan, Q) == chamber.cone
            assert nef_cone_via_collections(chamber.fan, Q) == chamber.cone
            assert singularity_profile(chamber.fan, V, Q).delta == 1
            for generator in mori_generators(chamber.fan, V, Q):
                assert all(dot(generator, ray) >= 0 for ray in chamber.cone.rays)
            collections = collections_with_relations(chamber.fan, V, Q)
            assert bool(maxbord_normals(chamber.cone, Q)) == nef_and_disjoint(collections)
