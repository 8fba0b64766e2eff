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
import networkx as nx
from enum import StrEnum
from typing import Sequence
from ..models.cone import Cone, Vector
from ..models.fan import Chamber, ConeDeterminants, IndexSet, SimplicialFan, SingularityProfile, Wall
from ..models.matrix import IntMatrix
from ..utils import BudgetExceededError, InputError, InternalError
from ..utils.config import SearchLimits
from .cones import MembershipMode, cone_from_generators, intersect, intersect_all, membership
from .exactla import det_exact, dot, kernel_vector, primitive_vector, rank, rank_of
from .matrices import weight_matrix_of
from .primitive import primitive_collections, primitive_relation

logger = logging.getLogger(__name__)


class NefMode(StrEnum):
    """
    Nef divisors have their class in the closed chamber, ample divisors in its interior.
    """
    nef = "nef"
    ample = "ample"


def mov_cone(Q: IntMatrix) -> Cone:
    """
    Returns the moving cone, the intersection of the cones generated by the columns of Q with one column removed.
    """
    return intersect_all([cone_from_generators(Q.complement([j]).column_list(), Q.rows) for j in range(Q.cols)])


def _hyperplanes(Q: IntMatrix) -> list[Vector]:
    """
    Returns the primitive normals of all hyperplanes spanned by r-1 columns, each with its first nonzero entry
    positive.
    """
    result = []
    if Q.rows == 1:
        return result
    columns = Q.column_list()
    for subset in itertools.combinations(range(Q.cols), Q.rows - 1):
        vectors = [columns[j] for j in subset]
        if rank_of(vectors) < Q.rows - 1:
            continue
        normal = primitive_vector(kernel_vector(vectors))
        if next(item for item in normal if item != 0) < 0:
            normal = tuple(-item for item in normal)
        if normal not in result:
            result.append(normal)
    return sorted(result)


def _split(cell: Cone, normal: Vector) -> list[Cone]:
    """
    Cuts a full-dimensional cone by a hyperplane and returns the full-dimensional pieces.
    """
    values = [dot(normal, ray) for ray in cell.rays]
    positive = [ray for ray, value in zip(cell.rays, values) if value > 0]
    negative = [ray for ray, value in zip(cell.rays, values) if value < 0]
    if not positive or not negative:
        return [cell]
    zero = [ray for ray, value in zip(cell.rays, values) if value == 0]
    crossing = []
    for p in positive:
        for m in negative:
            crossing.append(tuple(dot(normal, p) * a - dot(normal, m) * b for a, b in zip(m, p)))
    return [cone_from_generators(positive + zero + crossing, cell.ambient_dim),
            cone_from_generators(negative + zero + crossing, cell.ambient_dim)]


def _relative_interior_sum(cone: Cone) -> Vector:
    return tuple(sum(column) for column in zip(*cone.rays))


class _BunchOracle:
    """
    Decides for a point of an arrangement cell which simplicial cones ⟨Q_J⟩ contain it in their interior.
    """
    def __init__(self, Q: IntMatrix):
        self.subsets = []
        for subset in itertools.combinations(range(Q.cols), Q.rows):
            matrix = Q.columns(subset)
            det = det_exact(matrix)
            if det == 0:
                continue
            adjugate = matrix.to_sympy().adjugate()
            sign = 1 if det > 0 else -1
            rows = [tuple(sign * int(item) for item in adjugate.row(i)) for i in range(Q.rows)]
            self.subsets.append((subset, rows))

    def bunch(self, point: Sequence[int]) -> tuple[IndexSet, ...]:
        return tuple(subset for subset, rows in self.subsets if all(dot(row, point) > 0 for row in rows))


def bunch_of_point(Q: IntMatrix, point: Sequence[int]) -> tuple[IndexSet, ...]:
    """
    Returns the r-subsets J such that the point lies in the interior of ⟨Q_J⟩.
    """
    return _BunchOracle(Q).bunch(point)


def fan_of_bunch(bunch: Sequence[IndexSet], column_count: int, in_moving: bool, source: str) -> SimplicialFan:
    """
    Returns the fan whose maximal cones are the complements of the index sets of a bunch.
    """
    cones = sorted(tuple(j for j in range(column_count) if j not in subset) for subset in bunch)
    return SimplicialFan(maximal_cones=tuple(cones), is_complete=in_moving, is_projective=in_moving, source=source)


def enumerate_chambers(Q: IntMatrix) -> list[Chamber]:
    """
    Enumerates the full-dimensional chambers of the secondary fan inside the cone of Q.

    The cone of Q is cut by every hyperplane spanned by r-1 columns. Cells of the arrangement with the same bunch
    of cones are merged into one chamber.
    """
    cells = [cone_from_generators(Q.column_list(), Q.rows)]
    for normal in _hyperplanes(Q):
        cells = [piece for cell in cells for piece in _split(cell, normal)]
    logger.debug(f"The hyperplane arrangement has {len(cells)} cells.")
    oracle = _BunchOracle(Q)
    groups: dict[tuple, list[Cone]] = {}
    for cell in cells:
        groups.setdefault(oracle.bunch(_relative_interior_sum(cell)), []).append(cell)
    moving = mov_cone(Q)
    cones = []
    for bunch, members in groups.items():
        cone = cone_from_generators([ray for cell in members for ray in cell.rays], Q.rows)
        if cone.dim != Q.rows:
            raise InternalError(f"The chamber of bunch {bunch} is not full-dimensional.")
        cones.append((cone, bunch))
    cones.sort(key=lambda item: item[0].rays)
    result = []
    for index, (cone, bunch) in enumerate(cones):
        sample = _relative_interior_sum(cone)
        in_moving = membership(moving, sample)
        result.append(Chamber(
            index=index,
            cone=cone,
            sample=sample,
            bunch=tuple(sorted(bunch)),
            fan=fan_of_bunch(bunch, Q.cols, in_moving, f"chamber {index + 1}"),
            in_moving=in_moving
        ))
    logger.info(f"Found {len(result)} chambers, {sum(1 for item in result if item.in_moving)} of them in Mov.")
    return result


def moving_chambers(chambers: Sequence[Chamber]) -> list[Chamber]:
    return [item for item in chambers if item.in_moving]


def fan_of_chamber(chamber: Chamber) -> SimplicialFan:
    return chamber.fan


def chamber_of_fan(fan: SimplicialFan, Q: IntMatrix) -> Cone:
    """
    Returns the intersection of the weight cones ⟨Q_J⟩ dual to the maximal cones of the fan. For a projective fan
    this is its chamber; otherwise the result has dimension smaller than r.
    """
    cones = []
    for maximal in fan.maximal_cones:
        subset = [j for j in range(Q.cols) if j not in maximal]
        cones.append(cone_from_generators(Q.columns(subset).column_list(), Q.rows))
    return intersect_all(cones)


def _generic_point(V: IntMatrix) -> Vector:
    """
    Returns a point (1, t, t², ...) off every hyperplane spanned by n-1 columns.
    """
    normals = []
    for subset in itertools.combinations(V.column_list(), V.rows - 1):
        normal = kernel_vector(list(subset)) if subset else (1,)
        if any(normal):
            normals.append(normal)
    t = 2
    while True:
        point = tuple(t ** k for k in range(V.rows))
        if all(dot(normal, point) != 0 for normal in normals):
            return point
        t += 1


class _FanSearch:
    """
    Backtracking search over sets of simplicial cones that close up to a complete fan.
    """
    def __init__(self, V: IntMatrix, limits: SearchLimits):
        self.V = V
        self.columns = V.column_list()
        self.limits = limits
        self.nodes = 0
        self.candidates = {subset for subset in itertools.combinations(range(V.cols), V.rows)
                           if det_exact(V.columns(subset)) != 0}
        self._cones: dict[IndexSet, Cone] = {}
        self._compatible: dict[tuple[IndexSet, IndexSet], bool] = {}
        self.results: list[tuple[IndexSet, ...]] = []

    def cone(self, subset: Sequence[int]) -> Cone:
        key = tuple(subset)
        if key not in self._cones:
            self._cones[key] = cone_from_generators([self.columns[j] for j in key], self.V.rows)
        return self._cones[key]

    def compatible(self, a: IndexSet, b: IndexSet) -> bool:
        """
        Two simplicial cones are compatible if they meet in their common face.
        """
        key = (a, b) if a < b else (b, a)
        if key not in self._compatible:
            common = tuple(sorted(set(a) & set(b)))
            meet = intersect(self.cone(a), self.cone(b))
            face = self.cone(common)
            self._compatible[key] = meet.dim == face.dim and meet.rays == face.rays
        return self._compatible[key]

    def _side(self, facet: IndexSet, vertex: int) -> tuple[Vector, int]:
        normal = kernel_vector([self.columns[j] for j in facet])
        return normal, dot(normal, self.columns[vertex])

    def run(self):
        point = _generic_point(self.V)
        seeds = sorted(subset for subset in self.candidates if membership(
            self.cone(subset), point, MembershipMode.relative_interior))
        for seed in seeds:
            self._extend([seed])

    def _open_facets(self, chosen: list[IndexSet]) -> list[tuple[IndexSet, int]]:
        counts: dict[IndexSet, list[int]] = {}
        for cone in chosen:
            for vertex in cone:
                facet = tuple(j for j in cone if j != vertex)
                counts.setdefault(facet, []).append(vertex)
        return sorted((facet, vertices[0]) for facet, vertices in counts.items() if len(vertices) == 1)

    def _extend(self, chosen: list[IndexSet]):
        self.nodes += 1
        if self.nodes > self.limits.max_candidates:
            raise BudgetExceededError(f"Complete fan enumeration visited more than {self.limits.max_candidates} "
                                      f"search nodes.")
        open_facets = self._open_facets(chosen)
        if not open_facets:
            used = {j for cone in chosen for j in cone}
            if len(used) == self.V.cols:
                self.results.append(tuple(sorted(chosen)))
            return
        facet, vertex = open_facets[0]
        normal, side = self._side(facet, vertex)
        for k in range(self.V.cols):
            if k in facet or dot(normal, self.columns[k]) * side >= 0:
                continue
            candidate = tuple(sorted(facet + (k,)))
            if candidate not in self.candidates or candidate in chosen:
                continue
            if all(self.compatible(candidate, other) for other in chosen):
                self._extend(chosen + [candidate])


def enumerate_complete_fans(V: IntMatrix, limits: SearchLimits | None = None) -> list[SimplicialFan]:
    """
    Enumerates all complete simplicial fans whose rays are exactly the columns of V and labels each projective
    or not. The search refuses to return a partial result when the budget is exceeded.
    """
    limits = limits or SearchLimits()
    if V.cols > limits.max_columns:
        raise BudgetExceededError(f"Exhaustive fan enumeration is limited to {limits.max_columns} columns.")
    if rank(V) != V.rows:
        raise InputError("Complete fans need a full rank fan matrix.")
    search = _FanSearch(V, limits)
    search.run()
    Q = weight_matrix_of(V)
    result = []
    for cones in search.results:
        candidate = SimplicialFan(maximal_cones=cones, is_complete=True, is_projective=False, source="enumeration")
        projective = chamber_of_fan(candidate, Q).dim == Q.rows
        result.append(candidate.model_copy(update={"is_projective": projective}))
    result.sort(key=lambda item: (not item.is_projective, item.maximal_cones))
    logger.info(f"Found {len(result)} complete fans after {search.nodes} search nodes, "
                f"{sum(1 for item in result if item.is_projective)} of them projective.")
    return result


def nefness(divisor_class: Sequence[int], chamber: Chamber, mode: NefMode = NefMode.nef) -> bool:
    """
    A divisor is nef (ample) on the fan of a chamber iff its class lies in the chamber (its interior).
    """
    if len(divisor_class) != chamber.cone.ambient_dim:
        raise InputError(f"A class of length {len(divisor_class)} does not match rank {chamber.cone.ambient_dim}.")
    if mode == NefMode.nef:
        return membership(chamber.cone, divisor_class, MembershipMode.closed)
    return membership(chamber.cone, divisor_class, MembershipMode.relative_interior)


def anticanonical_class(Q: IntMatrix) -> Vector:
    return tuple(sum(Q.row(i)) for i in range(Q.rows))


def q_fano(chamber: Chamber, Q: IntMatrix) -> bool:
    """
    The variety of a chamber is Q-Fano iff the sum of the columns of Q lies in the interior of the chamber.
    """
    return nefness(anticanonical_class(Q), chamber, NefMode.ample)


def singularity_profile(fan: SimplicialFan, V: IntMatrix, Q: IntMatrix) -> SingularityProfile:
    """
    Returns |det V_I| and |det Q^I| for every maximal cone I together with their constant ratio.
    """
    cones = []
    delta = None
    for maximal in fan.maximal_cones:
        det_v = abs(det_exact(V.columns(maximal)))
        det_q = abs(det_exact(Q.complement(maximal)))
        if det_v == 0 or det_q == 0 or det_v % det_q != 0:
            raise InternalError(f"Cone {maximal} has determinants {det_v} and {det_q}.")
        if delta is None:
            delta = det_v // det_q
        elif delta != det_v // det_q:
            raise InternalError(f"The determinant ratio of cone {maximal} differs from {delta}.")
        cones.append(ConeDeterminants(cone=maximal, det_V=det_v, det_Q=det_q))
    return SingularityProfile(
        cones=tuple(cones),
        delta=delta or 1,
        non_singular=all(item.det_V == 1 for item in cones)
    )


def _exchanged(chamber: Chamber, normal: Vector, V: IntMatrix, Q: IntMatrix) -> tuple[IndexSet, ...]:
    result = []
    for collection in primitive_collections(chamber.fan):
        relation = primitive_relation(collection, chamber.fan, V, Q)
        if relation.numerical_class is not None and \
                primitive_vector(relation.numerical_class) in (normal, tuple(-item for item in normal)):
            result.append(collection)
    return tuple(result)


def wall_cells(chambers: Sequence[Chamber], V: IntMatrix | None = None, Q: IntMatrix | None = None) -> list[Wall]:
    """
    Returns the walls between adjacent chambers of the moving cone. If the fan and weight matrices are given, each
    wall also carries the primitive collections exchanged by the flip across it.
    """
    chambers = moving_chambers(chambers)
    result = []
    for first, second in itertools.combinations(chambers, 2):
        meet = intersect(first.cone, second.cone)
        if meet.dim != first.cone.dim - 1:
            continue
        exchanged = ((), ())
        if V is not None and Q is not None:
            normal = meet.equations[0]
            exchanged = (_exchanged(first, normal, V, Q), _exchanged(second, normal, V, Q))
        result.append(Wall(cone=meet, chambers=(first.index, second.index), exchanged=exchanged))
    return result


def flip_graph(chambers: Sequence[Chamber], V: IntMatrix | None = None, Q: IntMatrix | None = None) -> nx.Graph:
    """
    Returns the graph whose nodes are the chambers of the moving cone and whose edges are the walls between them.
    """
    graph = nx.Graph()
    for chamber in moving_chambers(chambers):
        graph.add_node(chamber.index, chamber=chamber)
    for wall in wall_cells(chambers, V, Q):
        graph.add_edge(*wall.chambers, wall=wall.cone, exchanged=wall.exchanged)
    logger.debug(f"The flip graph has {graph.number_of_nodes()} nodes and {graph.number_of_edges()} edges.")
    return graph
