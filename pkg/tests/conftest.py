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
from types import SimpleNamespace
from typing import Sequence
from toricfans.core.exactla import primitive_vector
from toricfans.core.secfan import enumerate_chambers, moving_chambers
from toricfans.models.fan import Chamber
from toricfans.models.matrix import IntMatrix


def matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return IntMatrix.from_rows(rows)


def label(text: str) -> tuple[int, ...]:
    """
    Converts a 1-based label like '145' into the 0-based index set (0, 3, 4).
    """
    return tuple(sorted(int(item) - 1 for item in text))


def cones(*labels: str) -> set[tuple[int, ...]]:
    return {label(item) for item in labels}


def chamber_with(chambers: Sequence[Chamber], *rays: Sequence[int]) -> Chamber:
    """
    Returns the chamber whose extremal rays are the given vectors.
    """
    expected = tuple(sorted(primitive_vector(ray) for ray in rays))
    matches = [item for item in chambers if item.cone.rays == expected]
    assert len(matches) == 1, f"no unique chamber with rays {expected}"
    return matches[0]


def example(V: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> SimpleNamespace:
    Q = matrix(Q)
    chambers = enumerate_chambers(Q)
    return SimpleNamespace(V=matrix(V), Q=Q, chambers=chambers, moving=moving_chambers(chambers))


@pytest.fixture(scope="session")
def noconverse() -> SimpleNamespace:
    return example(V=[[1, 0, -1, 1], [0, 1, -2, 1]], Q=[[1, 2, 1, 0], [0, 1, 1, 1]])


@pytest.fixture(scope="session")
def ptb() -> SimpleNamespace:
    result = example(
        V=[[1, 0, 0, 0, -1, 1], [0, 1, 0, 0, -1, 1], [0, 0, 1, -1, -1, 1]],
        Q=[[1, 1, 1, 0, 1, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1]]
    )
    result.gamma1 = chamber_with(result.moving, (1, 0, 0), (1, 1, 0), (1, 0, 1))
    result.gamma2 = chamber_with(result.moving, (1, 1, 0), (1, 1, 1), (1, 0, 1))
    return result


@pytest.fixture(scope="session")
def nototmaxbord() -> SimpleNamespace:
    result = example(
        V=[[1, 0, 0, 0, 0, -1, 1], [0, 1, 0, 0, 0, -1, 1], [0, 0, 1, 0, -1, 0, 1], [0, 0, 0, 1, -1, 1, 0]],
        Q=[[1, 1, 1, 0, 1, 1, 0], [0, 0, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1, 1]]
    )
    result.gamma1 = chamber_with(result.moving, (1, 0, 0), (2, 1, 1), (1, 0, 1))
    result.gamma2 = chamber_with(result.moving, (1, 0, 0), (1, 1, 0), (2, 1, 1))
    return result


@pytest.fixture(scope="session")
def nowptb() -> SimpleNamespace:
    return example(
        V=[[1, 0, -1, 1, -1], [0, 1, -2, 1, -1]],
        Q=[[1, 1, 0, 0, 1], [0, 1, 1, 1, 0], [0, 0, 0, 1, 1]]
    )


@pytest.fixture(scope="session")
def wptb_b() -> SimpleNamespace:
    result = example(
        V=[[1, 0, 0, -1, 0, 2, -4], [0, 1, 0, -1, 0, 2, -4], [0, 0, 1, -1, 0, 1, -2], [0, 0, 0, 0, 1, -1, 1]],
        Q=[[1, 1, 1, 1, 0, 0, 0], [0, 0, 1, 2, 1, 1, 0], [0, 0, 0, 0, 1, 2, 1]]
    )
    result.gamma8 = chamber_with(result.moving, (1, 0, 0), (1, 1, 0), (1, 1, 1))
    return result


@pytest.fixture(scope="session")
def wptb_c() -> SimpleNamespace:
    result = example(
        V=[[1, 0, -1, 0, 0, 6, -12], [0, 1, -1, 0, 0, 4, -8], [0, 0, 0, 1, 0, -2, 4], [0, 0, 0, 0, 1, -1, 1]],
        Q=[[1, 1, 1, 0, 0, 0, 0], [0, 2, 6, 2, 1, 1, 0], [0, 0, 0, 0, 1, 2, 1]]
    )
    result.gamma5 = chamber_with(result.moving, (0, 1, 1), (0, 1, 2), (1, 12, 12))
    result.gamma10 = chamber_with(result.moving, (1, 2, 0), (1, 6, 0), (1, 6, 4))
    return result


@pytest.fixture(scope="session")
def torsion_example() -> SimpleNamespace:
    """
    A fan matrix with class group Z^3 ⊕ Z/30 whose universal 1-covering is the fan matrix of wptb_b.
    """
    return SimpleNamespace(
        V=matrix([[9, 11, 13, -33, 9, 44, -97],
                  [10, 12, 14, -36, 10, 48, -106],
                  [54, 63, 75, -192, 51, 258, -567],
                  [310, 365, 430, -1105, 295, 1485, -3265]]),
        H=matrix([[1, 0, 0, -1, 10, -8, 6],
                  [0, 1, 0, -1, 27, -25, 23],
                  [0, 0, 1, -1, 24, -23, 22],
                  [0, 0, 0, 0, 30, -30, 30]]),
        beta=matrix([[9, 11, 13, 9], [10, 12, 14, 10], [54, 63, 75, 51], [310, 365, 430, 295]]),
        mu=matrix([[-1, 1, 0, 0], [14, -18, 1, 0], [8, -22, -3, 1], [-30, 105, 20, -6]]),
        nu=matrix([[1, -1, 4, 20], [0, 1, -5, -27], [0, 0, 1, 6], [0, 0, 0, 1]]),
        W=matrix([[-1, 0, 0, 0, 0, 0, 0],
                  [1, 1, 0, 0, 0, 0, 0],
                  [0, 0, 1, 0, 0, 0, 0],
                  [0, 0, 0, 1, 0, 0, 0],
                  [0, 0, 0, 0, 1, 0, 0],
                  [0, 0, 0, 0, 0, 1, 0],
                  [0, 0, 0, 0, 0, 0, 1]]),
        U_G=matrix([[1, 0, 0, 1, 0, 0],
                    [0, 1, 0, 0, 0, 0],
                    [0, 0, 1, 0, 0, 0],
                    [-1, 0, 0, 0, 0, 0],
                    [1, 0, 0, 1, 1, 0],
                    [-1, 0, 0, -1, 0, 1]])
    )
