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
from .matrix import IntMatrix


class FanMatrixFlags(BaseModel):
    """
    Per-condition report of the F-matrix and CF-matrix definitions.
    """
    model_config = ConfigDict(frozen=True)
    full_rank: bool = Field(description="The matrix has rank equal to its row count.")
    complete: bool = Field(description="The columns generate the whole space as a cone.")
    nonzero_columns: bool = Field(description="No column is zero.")
    no_proportional_columns: bool = Field(description="No column is a positive multiple of another one.")
    is_F: bool = Field(description="All F-matrix conditions hold.")
    is_CF: bool = Field(description="The column lattice is cotorsion free (all invariant factors are 1).")
    is_reduced: bool = Field(description="Every column is a primitive vector.")
    invariant_factors: Tuple[int, ...] = Field(description="The nonzero invariant factors of the matrix.")

    @property
    def failed(self) -> List[str]:
        names = ["full_rank", "complete", "nonzero_columns", "no_proportional_columns"]
        return [name for name in names if not getattr(self, name)]


class WeightMatrixFlags(BaseModel):
    """
    Per-condition report of the W-matrix definition, conditions (a) to (f).
    """
    model_config = ConfigDict(frozen=True)
    full_rank: bool = Field(description="(a) The matrix has rank equal to its row count.")
    cotorsion_free: bool = Field(description="(b) The row lattice is cotorsion free.")
    positive_basis: bool = Field(description="(c) The row lattice admits a basis of positive vectors.")
    nonzero_columns: bool = Field(description="(d) No column is zero.")
    no_unit_vectors: bool = Field(description="(e) The row lattice contains no standard unit vector.")
    no_opposite_pairs: bool = Field(
        description="(f) The row lattice contains no vector supported on two coordinates with opposite signs."
    )
    opposite_pair_witness: Tuple[int, ...] | None = Field(
        default=None,
        description="A lattice vector violating condition (f), if any."
    )
    is_W: bool = Field(description="All W-matrix conditions hold.")
    is_reduced: bool = Field(description="The Gale dual fan matrix has primitive columns.")
    is_positive_REF: bool = Field(
        description="All entries are non-negative and the matrix is in row echelon form up to a column permutation."
    )

    @property
    def failed(self) -> List[str]:
        names = ["full_rank", "cotorsion_free", "positive_basis", "nonzero_columns", "no_unit_vectors",
                 "no_opposite_pairs"]
        return [name for name in names if not getattr(self, name)]


class FanMatrix(BaseModel):
    """
    An n×(n+r) fan matrix together with its flags.
    """
    model_config = ConfigDict(frozen=True)
    V: IntMatrix = Field(description="The fan matrix; its columns generate the rays.")
    flags: FanMatrixFlags = Field(description="The F-matrix and CF-matrix checks.")


class WeightMatrix(BaseModel):
    """
    An r×(n+r) weight matrix together with its flags and, for positive REF matrices, the pivot columns.
    """
    model_config = ConfigDict(frozen=True)
    Q: IntMatrix = Field(description="The weight matrix; its columns are the classes of the invariant divisors.")
    flags: WeightMatrixFlags = Field(description="The W-matrix checks.")
    pivots: Tuple[int, ...] | None = Field(
        default=None,
        description="Pivot column of each row, top to bottom, when the matrix is in echelon form."
    )
