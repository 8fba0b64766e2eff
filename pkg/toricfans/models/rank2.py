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

from typing import Tuple
from pydantic import BaseModel, ConfigDict, Field
from .cone import Cone
from .fan import SingularityProfile
from .matrix import IntMatrix


class KleinschmidtForm(BaseModel):
    """
    A smooth projective toric variety of Picard number 2 as P(O ⊕ O(c_1) ⊕ ... ⊕ O(c_b)) over P^a.
    """
    model_config = ConfigDict(frozen=True)
    a: int = Field(ge=1, description="Dimension of the projective base.")
    b: int = Field(ge=1, description="Rank of the bundle minus one.")
    c: Tuple[int, ...] = Field(description="The twists c_1 ≤ ... ≤ c_b.")
    Q_normal: IntMatrix = Field(description="The weight matrix ((1,...,1,0,-c_1,...,-c_b), (0,...,0,1,...,1)).")

    @property
    def n(self) -> int:
        return self.a + self.b

    def __str__(self) -> str:
        summands = " ⊕ ".join(["O"] + [f"O({item})" if item else "O" for item in self.c])
        return f"P({summands}) over P^{self.a}"


class FlipChamber(BaseModel):
    """
    A chamber of the moving cone reached from the smooth chamber by a flip.
    """
    model_config = ConfigDict(frozen=True)
    cone: Cone = Field(description="The chamber in the coordinates of the normal form.")
    profile: SingularityProfile = Field(description="|det V_I| and |det Q^I| over the maximal cones of its fan.")

    @property
    def max_index(self) -> int:
        return self.profile.max_index

    @property
    def non_singular(self) -> bool:
        return self.profile.non_singular


class FlipTaxonomy(BaseModel):
    """
    Which of the four alternatives the moving cone of a smooth rank 2 variety falls into.

    Case 1 has exactly one nonzero twist, case 2 none. Both admit no flip. Case 3 has twists in {0, 1} with at least
    two ones and a unique smooth flip. Case 4 has c_b ≥ 2 and c_(b-1) ≥ 1 and only singular flips.
    """
    model_config = ConfigDict(frozen=True)
    case: int = Field(ge=1, le=4, description="The alternative, 1 to 4.")
    form: KleinschmidtForm = Field(description="The normal form of the input.")
    target: KleinschmidtForm | None = Field(default=None, description="The flipped variety in case 3.")
    flips: Tuple[FlipChamber, ...] = Field(default=(), description="The chambers reachable by flips.")
