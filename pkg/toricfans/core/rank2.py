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
from typing import Sequence
from ..models.matrix import IntMatrix
from ..models.rank2 import FlipChamber, FlipTaxonomy, KleinschmidtForm
from ..utils import InputError, InternalError, NotSmoothError
from .exactla import dot
from .matrices import check_W, gale_dual, positive_ref, transform_bordering
from .secfan import enumerate_chambers, moving_chambers, singularity_profile
from .cones import cone_from_generators

logger = logging.getLogger(__name__)


def _form(a: int, c: Sequence[int]) -> KleinschmidtForm:
    b = len(c)
    Q_normal = IntMatrix.from_rows([
        [1] * (a + 1) + [0] + [-item for item in c],
        [0] * (a + 1) + [1] * (b + 1)
    ])
    return KleinschmidtForm(a=a, b=b, c=tuple(c), Q_normal=Q_normal)


def kleinschmidt_normal_form(Q: IntMatrix) -> KleinschmidtForm:
    """
    Reads off Kleinschmidt's invariants (a, b, c) of the smooth projective variety of a rank 2 weight matrix.

    The smooth chamber meets a boundary ray of the weight cone. Normalizing for that ray puts the a+1 base columns
    first with class (1, 0), and the top entries y_j of the fibre columns give the twists max(y) - y_j.
    """
    if Q.rows != 2:
        raise InputError(f"Kleinschmidt's classification needs rank 2, got rank {Q.rows}.")
    Q = positive_ref(Q)
    V = gale_dual(Q)
    chamber = next((item for item in moving_chambers(enumerate_chambers(Q))
                    if singularity_profile(item.fan, V, Q).non_singular), None)
    if chamber is None:
        raise NotSmoothError("No chamber of the weight matrix gives a smooth variety.")
    weight_cone = cone_from_generators(Q.column_list(), Q.rows)
    normal = next(normal for normal in weight_cone.facet_normals
                  if any(dot(normal, ray) == 0 for ray in chamber.cone.rays))
    _, _, Q_new = transform_bordering(Q, normal)
    base = [j for j in range(Q_new.cols) if Q_new.entry(1, j) == 0]
    if any(Q_new.entry(0, j) != 1 for j in base) or any(Q_new.entry(1, j) != 1 for j in range(len(base), Q.cols)):
        raise InternalError(f"The normalized matrix {Q_new.tolist()} of a smooth chamber is not a bundle over P^a.")
    y = [Q_new.entry(0, j) for j in range(len(base), Q.cols)]
    c = sorted(max(y) - item for item in y)[1:]
    form = _form(len(base) - 1, c)
    logger.debug(f"Kleinschmidt form: {form}")
    return form


def is_fano_rank2(form: KleinschmidtForm) -> bool:
    return sum(form.c) <= form.a


def flip_taxonomy(Q: IntMatrix) -> FlipTaxonomy:
    """
    Classifies the moving cone of a smooth rank 2 variety and lists the chambers its flips lead to.
    """
    form = kleinschmidt_normal_form(Q)
    nonzero = [item for item in form.c if item]
    zeros = form.b - len(nonzero)
    if not nonzero:
        return FlipTaxonomy(case=2, form=form)
    if len(nonzero) == 1:
        return FlipTaxonomy(case=1, form=form)
    V = gale_dual(form.Q_normal)
    flips = []
    for chamber in moving_chambers(enumerate_chambers(form.Q_normal)):
        if (1, 0) in chamber.cone.rays:
            continue
        profile = singularity_profile(chamber.fan, V, form.Q_normal)
        flips.append(FlipChamber(cone=chamber.cone, profile=profile))
    if all(item == 1 for item in nonzero):
        target = _form(len(nonzero) - 1, [0] * zeros + [1] * (form.a + 1))
        return FlipTaxonomy(case=3, form=form, target=target, flips=tuple(flips))
    return FlipTaxonomy(case=4, form=form, flips=tuple(flips))


def _bit_blocks(Q: IntMatrix) -> tuple[int, int] | None:
    """
    Returns (j_1, j_2) when the columns of Q read (1,0)^j_1 (1,1)^(j_2-j_1) (0,1)^(n+2-j_2) in this order.
    """
    if Q.rows != 2:
        return None
    order = {(1, 0): 0, (1, 1): 1, (0, 1): 2}
    blocks = [order.get(column) for column in Q.column_list()]
    if None in blocks or blocks != sorted(blocks) or blocks[0] != 0 or blocks[-1] != 2:
        return None
    return blocks.count(0), blocks.count(0) + blocks.count(1)


def is_bit_matrix(Q: IntMatrix) -> bool:
    """
    Checks for a bit REF W-matrix of rank 2, whose columns are (1,0), then (1,1), then (0,1).
    """
    return _bit_blocks(Q) is not None and check_W(Q).flags.is_W


def bit_reduction(Q: IntMatrix) -> IntMatrix | None:
    """
    Returns a bit REF W-matrix row equivalent to Q up to a column permutation, or None if there is none.

    Only normal forms with twists in {0, 1} reduce: adding the second row to the first sends the fibre columns
    (0,1) and (-1,1) to (1,1) and (0,1).
    """
    form = kleinschmidt_normal_form(Q)
    if any(item > 1 for item in form.c):
        return None
    Q_normal = form.Q_normal
    if not any(form.c):
        return Q_normal
    top = [x + y for x, y in zip(Q_normal.row(0), Q_normal.row(1))]
    reduced = IntMatrix.from_rows([top, list(Q_normal.row(1))])
    if not is_bit_matrix(reduced):
        raise InternalError(f"The reduction {reduced.tolist()} of {form} is not a bit matrix.")
    return reduced


def is_stf(Q: IntMatrix) -> bool:
    """
    A smooth rank 2 variety is smoothly torically flipping iff it reduces to a bit matrix with 2 ≤ j_1 < j_2 ≤ n.
    """
    reduced = bit_reduction(Q)
    if reduced is None:
        return False
    j_1, j_2 = _bit_blocks(reduced)
    return 2 <= j_1 < j_2 <= reduced.cols - 2
