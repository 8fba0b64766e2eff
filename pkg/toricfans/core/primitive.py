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

import logging
import itertools
import sympy
from typing import Sequence
from ..models.collection import BorderClass, BorderKind, PrimitiveCollection, SplittingProfile
from ..models.cone import Cone, Vector
from ..models.fan import Chamber, IndexSet, SimplicialFan
from ..models.matrix import IntMatrix
from ..utils import InputError, InternalError
from .cones import cone_from_generators, contains, intersect_all
from .exactla import dot, lcm_of, primitive_vector, rank_of, solve_rational

logger = logging.getLogger(__name__)


def _faces(fan: SimplicialFan) -> set[IndexSet]:
    faces = set()
    for cone in fan.maximal_cones:
        for size in range(len(cone) + 1):
            faces.update(itertools.combinations(cone, size))
    return faces


def primitive_collections(fan: SimplicialFan) -> list[IndexSet]:
    """
    Returns the minimal non-faces of a simplicial fan: index sets lying in no cone while every proper subset does.
    """
    faces = _faces(fan)
    columns = sorted({j for cone in fan.maximal_cones for j in cone})
    result = []
    current = [()]
    size = 1
    while current and size <= len(columns):
        following = []
        for face in current:
            start = face[-1] + 1 if face else 0
            for j in columns:
                if j < start:
                    continue
                candidate = face + (j,)
                if any(subset not in faces for subset in itertools.combinations(candidate, size - 1)):
                    continue
                if candidate in faces:
                    following.append(candidate)
                else:
                    result.append(candidate)
        current = following
        size += 1
    return sorted(result)


def _focus_solution(point: Sequence[int], fan: SimplicialFan, V: IntMatrix) -> dict[int, sympy.Rational]:
    """
    Expresses a point as a non-negative combination of the generators of a maximal cone containing it. Only the
    positive coefficients are returned; their indices span the cone whose relative interior holds the point.
    """
    columns = V.column_list()
    for cone in fan.maximal_cones:
        solution = solve_rational([[columns[j][i] for j in cone] for i in range(V.rows)], point)
        if solution is not None and all(item >= 0 for item in solution):
            return {j: value for j, value in zip(cone, solution) if value != 0}
    raise InternalError(f"The point {tuple(point)} lies outside the support of the fan.")


def primitive_relation(P: Sequence[int], fan: SimplicialFan, V: IntMatrix, Q: IntMatrix) -> PrimitiveCollection:
    """
    Computes the primitive relation of a collection: the focus cone of v_P, the integral relation r_Z(P) and its
    numerical class n_P.
    """
    P = tuple(sorted(P))
    point = [sum(V.entry(i, j) for j in P) for i in range(V.rows)]
    coefficients = {} if not any(point) else _focus_solution(point, fan, V)
    relation = [sympy.Rational(1 if j in P else 0) - coefficients.get(j, 0) for j in range(V.cols)]
    multiplier = lcm_of([item.q for item in relation])
    relation = tuple(int(item * multiplier) for item in relation)
    solution = solve_rational(Q.T.tolist(), relation)
    if solution is None or any(item.q != 1 for item in solution):
        raise InternalError(f"The relation {relation} of {P} is not an integral combination of the rows of Q.")
    return PrimitiveCollection(
        P=P,
        relation=relation,
        numerical_class=tuple(int(item) for item in solution),
        focus=tuple(sorted(coefficients)),
        multiplier=multiplier,
        is_nef=all(item >= 0 for item in relation)
    )


def collections_with_relations(fan: SimplicialFan, V: IntMatrix, Q: IntMatrix) -> list[PrimitiveCollection]:
    return [primitive_relation(P, fan, V, Q) for P in primitive_collections(fan)]


def chamber_criterion(P: Sequence[int], chamber: Chamber, Q: IntMatrix) -> bool:
    """
    A collection P is primitive for the fan of a chamber iff the chamber is not contained in ⟨Q^P⟩ but is
    contained in ⟨Q^(P minus i)⟩ for every i in P.
    """
    def complement_cone(excluded: Sequence[int]) -> Cone:
        return cone_from_generators(Q.complement(excluded).column_list() if len(excluded) < Q.cols else [],
                                    Q.rows)

    if contains(complement_cone(P), chamber.cone):
        return False
    return all(contains(complement_cone([j for j in P if j != i]), chamber.cone) for i in P)


def nef_cone_via_collections(fan: SimplicialFan, Q: IntMatrix) -> Cone:
    """
    Returns the intersection of the cones ⟨Q^(P minus i)⟩ over all primitive collections P and all i in P.
    """
    cones = []
    for P in primitive_collections(fan):
        for i in P:
            excluded = [j for j in P if j != i]
            cones.append(cone_from_generators(Q.complement(excluded).column_list(), Q.rows))
    if not cones:
        return cone_from_generators(Q.column_list(), Q.rows)
    return intersect_all(cones)


def mori_generators(fan: SimplicialFan, V: IntMatrix, Q: IntMatrix) -> list[Vector]:
    """
    Returns the numerical classes of all primitive collections, which generate the Mori cone.
    """
    return [item.numerical_class for item in collections_with_relations(fan, V, Q)]


def bordering_collections(fan: SimplicialFan, V: IntMatrix, Q: IntMatrix) -> list[PrimitiveCollection]:
    """
    Returns the primitive collections whose support hyperplane cuts out a facet of the Gale dual cone.
    """
    normals = cone_from_generators(Q.column_list(), Q.rows).facet_normals
    return [item for item in collections_with_relations(fan, V, Q)
            if primitive_vector(item.numerical_class) in normals]


def facet_collection(Q: IntMatrix, facet_normal: Sequence[int]) -> IndexSet:
    """
    Returns the columns of Q off the facet cut out by the given inward normal.
    """
    if len(facet_normal) != Q.rows:
        raise InputError(f"A normal of length {len(facet_normal)} does not match {Q.rows} rows.")
    return tuple(j for j in range(Q.cols) if dot(facet_normal, Q.col(j)) > 0)


def splitting_profile(fan: SimplicialFan, chamber: Chamber, V: IntMatrix, Q: IntMatrix) -> SplittingProfile:
    collections = collections_with_relations(fan, V, Q)
    disjoint = all(not set(a.P) & set(b.P) for a, b in itertools.combinations(collections, 2))
    return SplittingProfile(
        collection_count=len(collections),
        pairwise_disjoint=disjoint,
        chamber_simplicial=len(chamber.cone.rays) == Q.rows,
        count_equals_rank=len(collections) == Q.rows,
        nef_count=sum(1 for item in collections if item.is_nef)
    )


def _rays_on(cone_rays: Sequence[Vector], normal: Sequence[int]) -> list[Vector]:
    return [ray for ray in cone_rays if dot(normal, ray) == 0]


def maxbord_normals(chamber_cone: Cone, Q: IntMatrix) -> list[Vector]:
    """
    Returns the facet normals of the Gale dual cone whose facet contains a facet of the chamber.
    """
    weight_cone = cone_from_generators(Q.column_list(), Q.rows)
    return [normal for normal in weight_cone.facet_normals
            if rank_of(_rays_on(chamber_cone.rays, normal)) == chamber_cone.dim - 1]


def recursive_descent(chamber_cone: Cone, Q: IntMatrix) -> list[Vector] | None:
    """
    Searches a sequence of faces C = F_0 ⊃ F_1 ⊃ ... ⊃ F_(r-1) of the Gale dual cone, each a facet of the previous
    one, such that the chamber meets every F_i in a face of dimension r-i. Returns the facet normals of the
    descent, or None if the chamber is not recursively maxbord.
    """
    def descend(face: Cone, section: Cone) -> list[Vector] | None:
        if section.dim <= 1:
            return []
        for normal in face.facet_normals:
            rays = _rays_on(section.rays, normal)
            if rank_of(rays) != section.dim - 1:
                continue
            smaller = cone_from_generators(_rays_on(face.rays, normal), face.ambient_dim)
            tail = descend(smaller, cone_from_generators(rays, face.ambient_dim))
            if tail is not None:
                return [normal] + tail
        return None

    return descend(cone_from_generators(Q.column_list(), Q.rows), chamber_cone)


def is_intbord(chamber_cone: Cone, Q: IntMatrix, normal: Sequence[int]) -> bool:
    """
    A chamber bordering along a facet H is intbord w.r.t. H if it is maxbord w.r.t. H or some facet hyperplane H'
    of the chamber contains the chamber's part of H and separates two columns of Q lying on H.
    """
    on_facet = _rays_on(chamber_cone.rays, normal)
    if rank_of(on_facet) == chamber_cone.dim - 1:
        return True
    columns = [column for column in Q.column_list() if dot(normal, column) == 0]
    for other in chamber_cone.facet_normals:
        if any(dot(other, ray) != 0 for ray in on_facet):
            continue
        values = [dot(other, column) for column in columns]
        if any(value > 0 for value in values) and any(value < 0 for value in values):
            return True
    return False


def classify_border(chamber: Chamber, Q: IntMatrix) -> BorderClass:
    """
    Classifies the position of a chamber against the boundary of the Gale dual cone.
    """
    weight_cone = cone_from_generators(Q.column_list(), Q.rows)
    cone = chamber.cone
    bordering = [normal for normal in weight_cone.facet_normals if rank_of(_rays_on(cone.rays, normal)) >= 1]
    intbord = [normal for normal in bordering if is_intbord(cone, Q, normal)]
    maxbord = maxbord_normals(cone, Q)
    recursion = recursive_descent(cone, Q) if maxbord else None
    if maxbord and len(maxbord) >= Q.rows - 1:
        kind = BorderKind.totally_maxbord
    elif recursion is not None:
        kind = BorderKind.recursively_maxbord
    elif maxbord:
        kind = BorderKind.maxbord
    elif intbord:
        kind = BorderKind.intbord
    elif bordering:
        kind = BorderKind.bordering
    else:
        kind = BorderKind.interior
    logger.debug(f"Chamber {chamber.label} is {kind}.")
    return BorderClass(
        kind=kind,
        bordering=tuple(bordering),
        intbord=tuple(intbord),
        maxbord=tuple(maxbord),
        recursion=tuple(recursion or ())
    )
