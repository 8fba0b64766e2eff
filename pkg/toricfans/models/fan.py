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

from typing import List, Tuple
from pydantic import BaseModel, ConfigDict, Field
from .cone import Cone, Vector
from ..utils import index_label

IndexSet = Tuple[int, ...]


class SimplicialFan(BaseModel):
    """
    A simplicial fan on the columns of a fan matrix, given by the index sets of its maximal cones (0-based).
    """
    model_config = ConfigDict(frozen=True)
    maximal_cones: Tuple[IndexSet, ...] = Field(description="Sorted index sets of the maximal cones.")
    is_complete: bool = Field(description="The support of the fan is the whole space and every ray is used.")
    is_projective: bool = Field(description="The fan is the Gale dual of a full-dimensional chamber of Mov.")
    source: str = Field(description="Where the fan comes from, e.g. 'chamber 3' or 'enumeration'.")

    @property
    def labels(self) -> List[str]:
        return [index_label(item) for item in self.maximal_cones]

    def same_cones(self, other: "SimplicialFan") -> bool:
        return set(self.maximal_cones) == set(other.maximal_cones)


class Chamber(BaseModel):
    """
    A full-dimensional cell of the secondary fan of a weight matrix together with its bunch of cones and the Gale
    dual fan.
    """
    model_config = ConfigDict(frozen=True)
    index: int = Field(ge=0, description="Position of the chamber in the deterministic enumeration order.")
    cone: Cone = Field(description="The chamber cone.")
    sample: Vector = Field(description="An integer point in the interior of the chamber.")
    bunch: Tuple[IndexSet, ...] = Field(
        description="The r-subsets J of columns with ⟨Q_J⟩ full-dimensional and containing the chamber."
    )
    fan: SimplicialFan = Field(description="The fan whose maximal cones are the complements of the bunch.")
    in_moving: bool = Field(description="The chamber lies in the moving cone.")

    @property
    def label(self) -> str:
        return f"γ{self.index + 1}"


class ConeDeterminants(BaseModel):
    """
    Determinants of a maximal cone ⟨V_I⟩ and of its Gale dual weight cone ⟨Q^I⟩.
    """
    model_config = ConfigDict(frozen=True)
    cone: IndexSet = Field(description="The index set I of the maximal cone.")
    det_V: int = Field(ge=1, description="|det V_I|.")
    det_Q: int = Field(ge=1, description="|det Q^I|.")


class SingularityProfile(BaseModel):
    """
    Per-cone determinants of a fan, the determinant constant and the smoothness verdict.
    """
    model_config = ConfigDict(frozen=True)
    cones: Tuple[ConeDeterminants, ...] = Field(description="Determinants per maximal cone.")
    delta: int = Field(ge=1, description="The constant with |det V_I| = delta·|det Q^I| for every cone.")
    non_singular: bool = Field(description="Every maximal cone is unimodular.")

    @property
    def max_index(self) -> int:
        return max(item.det_V for item in self.cones)


class Wall(BaseModel):
    """
    A codimension one face shared by two adjacent chambers of the moving cone.
    """
    model_config = ConfigDict(frozen=True)
    cone: Cone = Field(description="The wall.")
    chambers: Tuple[int, int] = Field(description="Indices of the two chambers separated by the wall.")
    exchanged: Tuple[Tuple[IndexSet, ...], Tuple[IndexSet, ...]] = Field(
        default=((), ()),
        description="Primitive collections of each side whose numerical class is orthogonal to the wall."
    )
