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
from typing import List, Tuple
from pydantic import BaseModel, ConfigDict, Field
from .cone import Cone, Vector
from .fan import SimplicialFan
from .matrix import IntMatrix, RatMatrix


class BaseCase(StrEnum):
    """
    How the upper left block Q' of a normalized weight matrix fails to be a reduced W-matrix.
    """
    a = "a"
    b = "b"
    c = "c"
    not_W = "not_W"


class Contractibility(StrEnum):
    """
    Verdict on a numerically effective primitive relation.
    """
    contractible = "contractible"
    pseudo_contractible = "pseudo_contractible"
    neither = "neither"


class CoverData(BaseModel):
    """
    Toric cover X → X̃ with Q̃ = A·Q·B and V^T·C = B·Ṽ^T.
    """
    model_config = ConfigDict(frozen=True)
    A: RatMatrix = Field(description="Rational row transformation of the weight matrix.")
    B: IntMatrix = Field(description="Positive diagonal column scaling.")
    C: IntMatrix = Field(description="Matrix of the lattice inclusion N → Ñ.")
    index: int = Field(ge=1, description="|det C|, the lattice index of the inclusion.")
    Q_tilde: IntMatrix = Field(description="The weight matrix of the covered variety.")
    V_tilde: IntMatrix = Field(description="The fan matrix of the covered variety.")

    @property
    def exponents(self) -> List[int]:
        return [self.B.entry(j, j) for j in range(self.B.rows)]


class WptwbData(BaseModel):
    """
    Numerical data of a weighted projective toric weak bundle over its weighted projective toric bundle.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)
    l: Tuple[int, ...] = Field(description="Cartier indices l_0..l_s of the divisors E_k.")
    lambda_: int = Field(alias="lambda", description="gcd(l_0·w_0, ..., l_s·w_s).")
    d: Tuple[int, ...] = Field(description="d_k, the gcd of the l_j·w_j/λ with j ≠ k.")
    a_vec: Tuple[int, ...] = Field(description="a_k, the product of the d_j with j ≠ k.")
    a: int = Field(description="The product of all d_k.")
    eta: Tuple[int, ...] = Field(description="η_k = l_k·a/a_k = l_k·d_k.")
    W_reduced: Tuple[int, ...] = Field(description="The reduced weight vector of (l_0·w_0, ..., l_s·w_s).")
    galois_order: int = Field(ge=1, description="Order of the Galois group, the product of the l_k divided by λ.")
    Lambda: IntMatrix = Field(description="diag(1, ..., 1, η_0, ..., η_s).")
    Phi: IntMatrix | None = Field(default=None, description="Matrix of the lattice inclusion onto the bundle.")
    ramification: Tuple[int, ...] = Field(description="Ramification multiplicity along each of the last s+1 divisors.")


class BundleDecomposition(BaseModel):
    """
    A chamber bordering along a facet H of the Gale dual cone, normalized so that H is x_r = 0 and split into the
    blocks Q', Q'' and W of a weighted projective toric bundle.
    """
    model_config = ConfigDict(frozen=True)
    hyperplane: Vector = Field(description="Inward normal of the facet H.")
    maxbord: bool = Field(description="The chamber meets H in a facet.")
    alpha: IntMatrix = Field(description="Unimodular row transformation of the normalization.")
    column_order: Tuple[int, ...] = Field(description="Original index of each column of the normalized matrix.")
    Q_normal: IntMatrix = Field(description="alpha·Q·beta with the upper right block made non-positive.")
    Qprime: IntMatrix = Field(description="The base weight matrix Q'.")
    Qsecond: IntMatrix = Field(description="The block Q'' whose columns are minus the classes of E_0..E_s.")
    W: Tuple[int, ...] = Field(description="The fibre weights w_0..w_s.")
    case: BaseCase = Field(description="Case of the base block.")
    failed_conditions: Tuple[str, ...] = Field(default=(), description="W-matrix conditions Q' violates.")
    cover: CoverData | None = Field(default=None, description="The toric cover in cases b and c.")
    base_weight_matrix: IntMatrix | None = Field(default=None, description="Weight matrix of the base.")
    base_fan_matrix: IntMatrix | None = Field(default=None, description="Fan matrix of the base.")
    base_chamber: Cone | None = Field(default=None, description="The chamber of the base, γ ∩ H in base coordinates.")
    base_fan: SimplicialFan | None = Field(default=None, description="The fan of the base chamber.")
    cartier_indices: Tuple[int, ...] | None = Field(default=None, description="Cartier indices of E_0..E_s.")
    wptwb: WptwbData | None = Field(default=None, description="Weak bundle data when a Cartier index exceeds 1.")

    @property
    def is_bundle(self) -> bool:
        return self.case == BaseCase.a and self.cartier_indices is not None and \
            all(item == 1 for item in self.cartier_indices)


class TowerStage(BaseModel):
    """
    One step of a recursive descent: the decomposition and the chamber it was applied to.
    """
    model_config = ConfigDict(frozen=True)
    level: int = Field(ge=0, description="Position of the stage, 0 for the original chamber.")
    chamber: Cone = Field(description="The chamber of this stage in its own coordinates.")
    weight_matrix: IntMatrix = Field(description="The weight matrix of this stage.")
    decomposition: BundleDecomposition | None = Field(
        default=None,
        description="The decomposition, None for the final weighted projective space."
    )


class Tower(BaseModel):
    """
    A sequence of toric covers of weighted projective toric bundles ending at a weighted projective space.
    """
    model_config = ConfigDict(frozen=True)
    stages: Tuple[TowerStage, ...] = Field(description="The stages from the top down to the final WPS.")

    @property
    def weights(self) -> List[Tuple[int, ...]]:
        return [stage.decomposition.W for stage in self.stages if stage.decomposition is not None]
