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
from toricfans.core.cones import MembershipMode, cone_from_generators, cone_from_inequalities, contains, dual, \
    faces, intersect, membership, relative_interior_point, simplicial_det
from toricfans.utils import NonSimplicialError, NotStronglyConvexError


def test_redundant_generators_are_dropped():
    cone = cone_from_generators([(1, 0), (0, 1), (1, 1), (2, 0)])
    assert cone.rays == ((0, 1), (1, 0))
    assert cone.facet_normals == ((0, 1), (1, 0))
    assert cone.dim == 2
    assert cone.is_simplicial


def test_lower_dimensional_cone():
    cone = cone_from_generators([(1, 0, 0), (1, 1, 0)])
    assert cone.dim == 2
    assert cone.equations == ((0, 0, 1),)
    assert not cone.is_full_dimensional


def test_line_is_not_strongly_convex():
    with pytest.raises(NotStronglyConvexError):
        cone_from_generators([(1, 0), (-1, 0)])
    with pytest.raises(NotStronglyConvexError):
        cone_from_generators([(1, 0), (0, 1), (-1, -1)])


def test_membership_modes():
    cone = cone_from_generators([(1, 0), (1, 2)])
    assert membership(cone, (1, 0))
    assert not membership(cone, (1, 0), MembershipMode.relative_interior)
    assert membership(cone, (2, 1), MembershipMode.relative_interior)
    assert not membership(cone, (0, 1))


def test_intersect_and_contains():
    a = cone_from_generators([(1, 0), (1, 2)])
    b = cone_from_generators([(1, 1), (0, 1)])
    meet = intersect(a, b)
    assert meet.rays == ((1, 1), (1, 2))
    assert contains(a, meet)
    assert contains(b, meet)
    assert not contains(meet, a)


def test_cone_from_inequalities():
    cone = cone_from_inequalities([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(1, -1, 0)], 3)
    assert cone.rays == ((0, 0, 1), (1, 1, 0))


def test_simplicial_det():
    assert simplicial_det(cone_from_generators([(1, 0), (1, 2)])) == 2
    assert simplicial_det(cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 1
    assert simplicial_det(cone_from_generators([(1, 1, 0), (1, -1, 0)])) == 2
    with pytest.raises(NonSimplicialError):
        simplicial_det(cone_from_generators([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]))


def test_faces_of_the_orthant():
    orthant = cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    result = faces(orthant)
    assert len(result) == 8
    assert [item.dim for item in result] == [0, 1, 1, 1, 2, 2, 2, 3]


def test_dual():
    cone = cone_from_generators([(1, 0), (1, 2)])
    assert dual(cone).rays == ((0, 1), (2, -1))


def test_relative_interior_point():
    cone = cone_from_generators([(1, 0, 0), (1, 1, 0)])
    point = relative_interior_point(cone)
    assert point == (2, 1, 0)
    assert membership(cone, point, MembershipMode.relative_interior)
