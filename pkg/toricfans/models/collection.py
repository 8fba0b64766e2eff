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

from enum import StrEnum
from typing import Tuple
from pydantic import BaseModel, ConfigDict, Field
from .cone import Vector
from .fan import IndexSet


class PrimitiveCollection(BaseModel):
    """
    A primitive collection P of a complete simplicial fan with its primitive relation.

    The relation r_Z(P) is the integral vector l·(Σ_{j∈P} e_j − Σ_k c_k e_k) where v_P = Σ_k c_k v_k expresses
    the sum of the generators of P in the focus cone. The numerical class n_P solves Q^T·n_P = r_Z(P).
    """
    model_config = ConfigDict(frozen=True)
    P: IndexSet = Field(description="The collection, as sorted 0-based column indices.")
    relation: Vector | None = Field(default=None, description="The integral primitive relation r_Z(P).")
    numerical_class: Vector | None = Field(default=None, description="The class n_P with Q^T·n_P = r_Z(P).")
    focus: IndexSet | None = Field(default=None, description="Rays of the cone whose relative interior holds v_P.")
    multiplier: int | None = Field(default=None, description="The least common denominator l.")
    is_nef: bool | None = Field(default=None, description="Every entry of the relation is non-negative.")

    @property
    def support_normal(self) -> Vector | None:
        return self.numerical_class


class BorderKind(StrEnum):
    """
    Position of a chamber with respect to the boundary of the Gale dual cone, from weakest to strongest.
    """
    interior = "interior"
    bordering = "bordering"
    intbord = "intbord"
    maxbord = "maxbord"
    recursively_maxbord = "recursively_maxbord"
    totally_maxbord = "totally_maxbord"


class BorderClass(BaseModel):
    """
    Border classification of a chamber.
    """
    model_config = ConfigDict(frozen=True)
    kind: BorderKind = Field(description="The strongest property the chamber has.")
    bordering: Tuple[Vector, ...] = Field(
        default=(),
        description="Facet normals of the Gale dual cone whose facet meets the chamber in a nonzero cone."
    )
    intbord: Tuple[Vector, ...] = Field(default=(), description="Facet normals the chamber is intbord with.")
    maxbord: Tuple[Vector, ...] = Field(default=(), description="Facet normals the chamber is maxbord with.")
    recursion: Tuple[Vector, ...] = Field(
        default=(),
        description="Normals of a recursive descent, each cutting a facet of the face reached by the previous ones."
    )

    @property
    def is_maxbord(self) -> bool:
        return bool(self.maxbord)


class SplittingProfile(BaseModel):
    """
    Counts of the primitive collections of a fan compared with the shape of its chamber.
    """
    model_config = ConfigDict(frozen=True)
    collection_count: int = Field(ge=0, description="The number of primitive collections.")
    pairwise_disjoint: bool = Field(description="No two primitive collections share an element.")
    chamber_simplicial: bool = Field(description="The chamber has exactly r rays.")
    count_equals_rank: bool = Field(description="There are exactly r primitive collections.")
    nef_count: int = Field(ge=0, description="The number of nef primitive collections.")
