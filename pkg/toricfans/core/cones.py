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
from enum import StrEnum
from typing import Iterable, Sequence
from ..models.cone import Cone, Vector
from ..models.matrix import IntMatrix
from ..utils import InputError, NonSimplicialError, NotStronglyConvexError
from .exactla import det_exact, dot, hnf_rows, integer_kernel_rows, invariant_factors, kernel_vector, primitive_vector, \
    rank_of

logger = logging.getLogger(__name__)


class MembershipMode(StrEnum):
    """
    Whether membership is tested against the closed cone or its relative interior.
    """
    closed = "closed"
    relative_interior = "relative_interior"


def zero_cone(ambient_dim: int) -> Cone:
    identity = tuple(tuple(1 if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim))
    return Cone(ambient_dim=ambient_dim, rays=(), facet_normals=(), equations=identity, dim=0)


def _orthogonal_complement(vectors: Sequence[Vector], ambient_dim: int) -> tuple[Vector, ...]:
    kernel = integer_kernel_rows(IntMatrix.from_rows(vectors))
    if kernel is None:
        return ()
    return tuple(kernel.row(i) for i in range(kernel.rows))


def cone_from_generators(vectors: Iterable[Sequence[int]], ambient_dim: int | None = None) -> Cone:
    """
    Builds the canonical cone generated by the given integer vectors, dropping redundant generators.
    """
    generators = []
    for vector in vectors:
        vector = primitive_vector([int(item) for item in vector])
        if ambient_dim is None:
            ambient_dim = len(vector)
        elif len(vector) != ambient_dim:
            raise InputError(f"Generator {vector} does not live in dimension {ambient_dim}.")
        if any(vector) and vector not in generators:
            generators.append(vector)
    if ambient_dim is None:
        raise InputError("The ambient dimension of an empty generator list is unknown.")
    if not generators:
        return zero_cone(ambient_dim)
    equations = _orthogonal_complement(generators, ambient_dim)
    dim = ambient_dim - len(equations)
    if dim == 1:
        if len(generators) > 1:
            raise NotStronglyConvexError(f"The generators {generators} span a line.")
        return Cone(ambient_dim=ambient_dim, rays=tuple(generators), facet_normals=tuple(generators),
                    equations=equations, dim=1)
    normals = []
    for subset in itertools.combinations(generators, dim - 1):
        normal = kernel_vector(list(subset) + list(equations))
        if not any(normal):
            continue
        signs = [dot(normal, vector) for vector in generators]
        if all(item >= 0 for item in signs):
            pass
        elif all(item <= 0 for item in signs):
            normal = tuple(-item for item in normal)
        else:
            continue
        normal = primitive_vector(normal)
        if normal not in normals:
            normals.append(normal)
    if not normals or rank_of(normals + list(equations)) < ambient_dim:
        raise NotStronglyConvexError(f"The cone generated by {generators} contains a line.")
    rays = []
    for vector in generators:
        tight = [normal for normal in normals if dot(normal, vector) == 0]
        if rank_of(tight + list(equations)) == ambient_dim - 1:
            rays.append(vector)
    return Cone(
        ambient_dim=ambient_dim,
        rays=tuple(sorted(rays)),
        facet_normals=tuple(sorted(normals)),
        equations=equations,
        dim=dim
    )


def _independent_rows(rows: Sequence[Sequence[int]]) -> list[Vector]:
    rows = [tuple(row) for row in rows if any(row)]
    if not rows:
        return []
    h, _ = hnf_rows(IntMatrix.from_rows(rows))
    return [h.row(i) for i in range(h.rows) if any(h.row(i))]


def cone_from_inequalities(
        normals: Sequence[Sequence[int]],
        equations: Sequence[Sequence[int]],
        ambient_dim: int
) -> Cone:
    """
    Builds the cone {x : e·x = 0 for all equations, n·x ≥ 0 for all normals}, which must be pointed.
    """
    equation_basis = _independent_rows(equations)
    free = ambient_dim - len(equation_basis)
    if free == 0:
        return zero_cone(ambient_dim)
    normals = [tuple(row) for row in normals if any(row)]
    candidates = []
    for subset in itertools.combinations(normals, free - 1):
        direction = kernel_vector(list(equation_basis) + list(subset))
        if not any(direction):
            continue
        for sign in (1, -1):
            vector = tuple(sign * item for item in direction)
            if all(dot(normal, vector) >= 0 for normal in normals):
                candidates.append(vector)
    if not candidates:
        return zero_cone(ambient_dim)
    return cone_from_generators(candidates, ambient_dim)


def intersect(a: Cone, b: Cone) -> Cone:
    """
    Returns the intersection of two cones in the same ambient space.
    """
    if a.ambient_dim != b.ambient_dim:
        raise InputError(f"Cannot intersect cones in dimensions {a.ambient_dim} and {b.ambient_dim}.")
    return cone_from_inequalities(
        list(a.facet_normals) + list(b.facet_normals),
        list(a.equations) + list(b.equations),
        a.ambient_dim
    )


def intersect_all(cones: Sequence[Cone]) -> Cone:
    if not cones:
        raise InputError("Cannot intersect an empty list of cones.")
    normals = [normal for cone in cones for normal in cone.facet_normals]
    equations = [equation for cone in cones for equation in cone.equations]
    return cone_from_inequalities(normals, equations, cones[0].ambient_dim)


def membership(c: Cone, point: Sequence, mode: MembershipMode = MembershipMode.closed) -> bool:
    """
    Tests whether a rational point lies in the closed cone or in its relative interior.
    """
    if len(point) != c.ambient_dim:
        raise InputError(f"A point of length {len(point)} cannot lie in dimension {c.ambient_dim}.")
    if any(dot(equation, point) != 0 for equation in c.equations):
        return False
    if mode == MembershipMode.closed:
        return all(dot(normal, point) >= 0 for normal in c.facet_normals)
    if c.dim == 0:
        return not any(point)
    return all(dot(normal, point) > 0 for normal in c.facet_normals)


def contains(a: Cone, b: Cone) -> bool:
    """
    Returns True if cone b is contained in cone a.
    """
    return all(membership(a, ray) for ray in b.rays)


def relative_interior_point(c: Cone) -> Vector:
    return tuple(sum(column) for column in zip(*c.rays)) if c.rays else tuple([0] * c.ambient_dim)


def simplicial_det(c: Cone) -> int:
    """
    Returns the index of the lattice generated by the rays of a simplicial cone inside the lattice points of its
    span; for a full-dimensional cone this is the absolute determinant of its ray matrix.
    """
    if not c.is_simplicial:
        raise NonSimplicialError(f"The cone {c} has {len(c.rays)} rays but dimension {c.dim}.")
    if c.dim == 0:
        return 1
    if c.is_full_dimensional:
        return abs(det_exact(list(c.rays)))
    return math.prod(invariant_factors(IntMatrix.from_rows(c.rays)))


def faces(c: Cone) -> list[Cone]:
    """
    Returns all faces of the cone ordered by dimension, from the zero face up to the cone itself.
    """
    ray_sets = {frozenset(range(len(c.rays)))}
    if c.dim >= 1:
        facet_sets = [frozenset(i for i, ray in enumerate(c.rays) if dot(normal, ray) == 0)
                      for normal in c.facet_normals]
        frontier = set(facet_sets)
        ray_sets |= frontier
        while frontier:
            new_sets = set()
            for face in frontier:
                for facet in facet_sets:
                    candidate = face & facet
                    if candidate not in ray_sets:
                        new_sets.add(candidate)
            ray_sets |= new_sets
            frontier = new_sets
        ray_sets.add(frozenset())
    result = [cone_from_generators([c.rays[i] for i in sorted(ray_set)], c.ambient_dim) for ray_set in ray_sets]
    return sorted(result, key=lambda item: (item.dim, item.rays))


def dual(c: Cone) -> Cone:
    """
    Returns the dual cone of a full-dimensional cone, generated by its inward facet normals.
    """
    if not c.is_full_dimensional:
        raise InputError(f"The dual of the {c.dim}-dimensional cone {c} in dimension {c.ambient_dim} is not pointed.")
    return cone_from_generators(c.facet_normals, c.ambient_dim)
