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

Vector = Tuple[int, ...]


class Cone(BaseModel):
    """
    Strongly convex rational polyhedral cone in canonical double description.

    Rays are primitive extremal generators sorted lexicographically, facet normals are primitive inward normals
    lying in the linear span of the cone, and equations is a Hermite row basis of the orthogonal complement of that
    span.
    """
    model_config = ConfigDict(frozen=True)
    ambient_dim: int = Field(ge=1, description="The dimension of the ambient vector space.")
    rays: Tuple[Vector, ...] = Field(description="The primitive extremal ray generators.")
    facet_normals: Tuple[Vector, ...] = Field(description="The primitive inward facet normals.")
    equations: Tuple[Vector, ...] = Field(description="A row basis of the orthogonal complement of the span.")
    dim: int = Field(ge=0, description="The dimension of the cone.")

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __str__(self) -> str:
        return "<" + ", ".join("(" + ",".join(str(item) for item in ray) + ")" for ray in self.rays) + ">"
