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

import random
import pytest
from toricfans.core.rank2 import bit_reduction, flip_taxonomy, is_bit_matrix, is_fano_rank2, is_stf, \
    kleinschmidt_normal_form
from toricfans.core.secfan import enumerate_chambers, moving_chambers, q_fano
from toricfans.utils import InputError, NotSmoothError
from .conftest import matrix

HIRZEBRUCH_1 = matrix([[1, 1, 0, -1], [0, 0, 1, 1]])
HIRZEBRUCH_2 = matrix([[1, 1, 0, -2], [0, 0, 1, 1]])
PRODUCT = matrix([[1, 1, 0, 0], [0, 0, 1, 1]])
BUNDLE_ONE_TWO = matrix([[1, 1, 0, -1, -2], [0, 0, 1, 1, 1]])
BUNDLE_ONE_ONE = matrix([[1, 1, 0, -1, -1], [0, 0, 1, 1, 1]])
F1_BIT = matrix([[1, 1, 1, 0], [0, 0, 1, 1]])


def normal_form_matrix(a: int, c: list[int]) -> list[list[int]]:
    return [[1] * (a + 1) + [0] + [-item for item in c], [0] * (a + 1) + [1] * (len(c) + 1)]


def expected_flips(c: list[int]) -> list[list[tuple[int, int]]]:
    """
    Returns the flip chambers ⟨(-d_(i-1), 1), (-d_i, 1)⟩ over the distinct twists 0 = d_0 < ... < d_s, of which
    there are s if the largest twist repeats and s - 1 otherwise.
    """
    twists = sorted(set([0] + c))
    s = len(twists) - 1
    count = s if s and c.count(twists[-1]) >= 2 else max(s - 1, 0)
    return sorted(sorted([(-twists[i - 1], 1), (-twists[i], 1)]) for i in range(1, count + 1))


def test_normal_forms():
    form = kleinschmidt_normal_form(HIRZEBRUCH_1)
    assert (form.a, form.b, form.c) == (1, 1, (1,))
    assert form.n == 2
    assert kleinschmidt_normal_form(HIRZEBRUCH_2).c == (2,)
    assert kleinschmidt_normal_form(PRODUCT).c == (0,)
    form = kleinschmidt_normal_form(BUNDLE_ONE_TWO)
    assert (form.a, form.c) == (1, (1, 2))
    assert form.Q_normal == BUNDLE_ONE_TWO


def test_fano_criterion():
    assert is_fano_rank2(kleinschmidt_normal_form(HIRZEBRUCH_1))
    assert not is_fano_rank2(kleinschmidt_normal_form(HIRZEBRUCH_2))
    assert is_fano_rank2(kleinschmidt_normal_form(PRODUCT))


def test_normal_form_refusals(ptb, noconverse):
    with pytest.raises(InputError):
        kleinschmidt_normal_form(ptb.Q)
    with pytest.raises(NotSmoothError):
        kleinschmidt_normal_form(noconverse.Q)


def test_flip_taxonomy():
    assert flip_taxonomy(HIRZEBRUCH_1).case == 1
    assert flip_taxonomy(PRODUCT).case == 2
    taxonomy = flip_taxonomy(BUNDLE_ONE_ONE)
    assert taxonomy.case == 3
    assert taxonomy.target == taxonomy.form
    assert [item.non_singular for item in taxonomy.flips] == [True]
    taxonomy = flip_taxonomy(BUNDLE_ONE_TWO)
    assert taxonomy.case == 4
    assert taxonomy.target is None
    assert [item.max_index for item in taxonomy.flips] == [2]



@pytest.mark.parametrize("c", [[1, 2], [2, 2], [1, 1, 2], [1, 2, 2], [1, 2, 3], [0, 1, 3, 3]])
def test_singular_flips_follow_the_distinct_twists(c):
    taxonomy = flip_taxonomy(matrix(normal_form_matrix(1, c)))
    assert taxonomy.case == 4
    assert sorted(sorted(item.cone.rays) for item in taxonomy.flips) == expected_flips(c)
    for item in taxonomy.flips:
        assert not item.non_singular
        assert item.max_index == max(c)
        assert item.profile.delta == 1
        assert all(cone.det_V == cone.det_Q for cone in item.profile.cones)


def test_smoothly_flipping():
    assert is_stf(BUNDLE_ONE_ONE)
    assert is_stf(matrix([[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]]))
    assert not is_stf(BUNDLE_ONE_TWO)
    assert not is_stf(HIRZEBRUCH_1)
    assert not is_stf(HIRZEBRUCH_2)
    assert not is_stf(PRODUCT)
    # a bit matrix with j_2 = n + 1 admits no flip
    assert not is_stf(F1_BIT)


def test_bit_matrix():
    assert is_bit_matrix(PRODUCT)
    assert is_bit_matrix(F1_BIT)
    assert not is_bit_matrix(HIRZEBRUCH_1)
    assert not is_bit_matrix(matrix([[1, 0, 1], [0, 1, 1]]))
    assert not is_bit_matrix(matrix([[1, 1, 0, 1], [0, 0, 1, 1]]))
    assert not is_bit_matrix(matrix([[1, 1, 1], [0, 1, 1]]))
    assert not is_bit_matrix(matrix([[1, 1, 0], [0, 0, 1]]))
    assert not is_bit_matrix(matrix([[1, 1, 0], [0, 0, 1], [0, 1, 1]]))


def test_bit_reduction():
    assert bit_reduction(HIRZEBRUCH_1) == F1_BIT
    assert bit_reduction(HIRZEBRUCH_2) is None
    assert bit_reduction(BUNDLE_ONE_TWO) is None
    assert bit_reduction(PRODUCT) == PRODUCT
    assert bit_reduction(BUNDLE_ONE_ONE) == matrix([[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]])


def test_normal_form_survives_a_change_of_basis():
    rng = random.Random(2)
    checked = 0
    while checked < 20:
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        c = sorted(rng.randint(0, 3) for _ in range(b))
        nonzero = [item for item in c if item]
        # both chambers are smooth when every nonzero twist is 1
        if not nonzero or (len(nonzero) > 1 and set(nonzero) == {1}):
            continue
        rows = normal_form_matrix(a, c)
        shear = rng.randint(0, 3)
        rows[0] = [x + shear * y for x, y in zip(rows[0], rows[1])]
        order = list(range(len(rows[0])))
        rng.shuffle(order)
        Q = matrix([[row[j] for j in order] for row in rows])
        form = kleinschmidt_normal_form(Q)
        assert (form.a, form.c) == (a, tuple(c))
        checked += 1


@pytest.mark.slow
def test_fano_criterion_agrees_with_the_anticanonical_class():
    rng = random.Random(5)
    checked = 0
    while checked < 200:
        a, b = rng.randint(1, 4), rng.randint(1, 3)
        c = sorted(rng.randint(0, 4) for _ in range(b))
        nonzero = [item for item in c if item]
        if not nonzero or (len(nonzero) > 1 and set(nonzero) == {1}):
            continue
        Q = matrix(normal_form_matrix(a, c))
        smooth = next(item for item in moving_chambers(enumerate_chambers(Q)) if (1, 0) in item.cone.rays)
        assert q_fano(smooth, Q) == is_fano_rank2(kleinschmidt_normal_form(Q))
        checked += 1


@pytest.mark.slow
def test_flips_of_random_normal_forms():
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randint(1, 3), rng.randint(1, 4)
        c = sorted(rng.randint(0, 3) for _ in range(b))
        Q = matrix(normal_form_matrix(a, c))
        taxonomy = flip_taxonomy(Q)
        assert sorted(sorted(item.cone.rays) for item in taxonomy.flips) == expected_flips(c)
        assert all(item.max_index <= max(c) for item in taxonomy.flips)
        assert all(not item.non_singular for item in taxonomy.flips) == (taxonomy.case != 3)
        assert is_stf(Q) == (taxonomy.case == 3)
