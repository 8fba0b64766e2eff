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

import pytest
from toricfans.core.cones import cone_from_generators
from toricfans.core.exactla import det_exact, in_row_lattice, lattice_equal
from toricfans.core.matrices import check_F, check_W, determinant_constant, echelon_pivots, gale_dual, \
    positive_ref, reduce, transform_bordering, weight_matrix_of
from toricfans.utils import InputError, NotFacetError, NotWeightMatrixError
from .conftest import matrix

EXAMPLES = ["noconverse", "ptb", "nototmaxbord", "nowptb", "wptb_b", "wptb_c"]


@pytest.mark.parametrize("name", EXAMPLES)
def test_gale_duality_of_the_examples(request, name):
    item = request.getfixturevalue(name)
    assert not any((item.V @ item.Q.T).entries)
    assert lattice_equal(gale_dual(item.V), item.Q)
    assert lattice_equal(gale_dual(item.Q), item.V)
    assert check_F(item.V).flags.is_CF


@pytest.mark.parametrize("name", EXAMPLES)
def test_weight_matrix_of_is_positive_ref(request, name):
    item = request.getfixturevalue(name)
    Q = weight_matrix_of(item.V)
    assert lattice_equal(Q, item.Q)
    assert check_W(Q).flags.is_positive_REF


def test_fan_matrix_flags(noconverse):
    flags = check_F(noconverse.V).flags
    assert flags.is_F
    assert flags.is_CF
    assert flags.is_reduced
    assert flags.failed == []


def test_fan_matrix_with_torsion(torsion_example):
    flags = check_F(torsion_example.V).flags
    assert flags.is_F
    assert not flags.is_CF
    assert flags.invariant_factors == (1, 1, 1, 30)
    assert lattice_equal(gale_dual(torsion_example.V), matrix([[1, 1, 1, 1, 0, 0, 0],
                                                               [0, 0, 1, 2, 1, 1, 0],
                                                               [0, 0, 0, 0, 1, 2, 1]]))


def test_proportional_columns_are_reported():
    flags = check_F(matrix([[1, 2, -1], [0, 0, 1]])).flags
    assert not flags.is_F
    assert "no_proportional_columns" in flags.failed


def test_fan_matrix_needs_more_columns_than_rows():
    with pytest.raises(InputError):
        check_F(matrix([[1, 0], [0, 1]]))


@pytest.mark.parametrize("name", ["ptb", "nototmaxbord", "wptb_b", "wptb_c"])
def test_weight_matrices_of_the_examples(request, name):
    flags = check_W(request.getfixturevalue(name).Q).flags
    assert flags.is_W
    assert flags.failed == []
    assert flags.is_positive_REF


def test_opposite_pair_witness():
    Q = matrix([[1, 1, 0], [0, 1, 1]])
    flags = check_W(Q).flags
    assert not flags.is_W
    assert flags.failed == ["no_opposite_pairs"]
    witness = flags.opposite_pair_witness
    support = [item for item in witness if item]
    assert len(support) == 2
    assert support[0] * support[1] < 0
    assert in_row_lattice(witness, Q)


def test_unit_vector_is_reported():
    flags = check_W(matrix([[1, 1, 0], [0, 0, 1]])).flags
    assert not flags.no_unit_vectors
    assert not flags.is_W


def test_positive_ref_keeps_a_positive_echelon_matrix(ptb):
    assert positive_ref(ptb.Q) == ptb.Q


def test_positive_ref_of_a_signed_matrix():
    Q = matrix([[1, 1, 0, -1], [0, 0, 1, 1]])
    result = positive_ref(Q)
    assert all(item >= 0 for item in result.entries)
    assert echelon_pivots(result) is not None
    assert lattice_equal(result, Q)


def test_positive_ref_refuses_a_cone_with_a_line():
    with pytest.raises(NotWeightMatrixError):
        positive_ref(matrix([[1, -1, 0], [0, 0, 1]]))


@pytest.mark.parametrize("name", ["ptb", "nototmaxbord", "wptb_b", "wptb_c", "nowptb"])
def test_transform_bordering_for_every_facet(request, name):
    Q = request.getfixturevalue(name).Q
    for normal in cone_from_generators(Q.column_list(), Q.rows).facet_normals:
        alpha, beta, Q_new = transform_bordering(Q, normal)
        assert abs(det_exact(alpha)) == 1
        assert alpha @ Q @ beta == Q_new
        assert all(item >= 0 for item in Q_new.entries)
        bottom = Q_new.row(Q_new.rows - 1)
        on_facet = sum(1 for column in Q.column_list() if sum(a * b for a, b in zip(normal, column)) == 0)
        assert all(item == 0 for item in bottom[:on_facet])
        assert all(item > 0 for item in bottom[on_facet:])


def test_transform_bordering_refuses_a_non_facet(ptb):
    with pytest.raises(NotFacetError):
        transform_bordering(ptb.Q, (1, 1, 1))


def test_reduce():
    fan, weights = reduce(matrix([[2, 0, -1], [0, 1, -1]]))
    assert fan.V == matrix([[1, 0, -1], [0, 1, -1]])
    assert fan.flags.is_reduced
    assert weights.Q == matrix([[1, 1, 1]])


def test_determinant_constant(ptb, wptb_b, torsion_example):
    assert determinant_constant(ptb.V, ptb.Q) == 1
    assert determinant_constant(torsion_example.V, wptb_b.Q) == 30
