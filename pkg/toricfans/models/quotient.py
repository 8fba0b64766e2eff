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

from typing import Dict, Tuple
from pydantic import BaseModel, ConfigDict, Field
from .flags import FanMatrix, WeightMatrix
from .matrix import IntMatrix


class PinnedTransforms(BaseModel):
    """
    Fixed choices for the non-unique unimodular transforms of the torsion pipeline.
    """
    model_config = ConfigDict(frozen=True)
    U: IntMatrix | None = Field(default=None, description="The transform with U·V = HNF(V); recorded only.")
    mu: IntMatrix = Field(description="Left transform of the Smith normal form of β.")
    nu: IntMatrix = Field(description="Right transform of the Smith normal form of β.")
    W: IntMatrix = Field(description="The transform with W·(V′ block)^T in Hermite normal form.")
    U_G: IntMatrix = Field(description="The transform with U_G·G^T in Hermite normal form.")


class CoxPresentation(BaseModel):
    """
    The action on the Cox coordinates x_1..x_(n+r): one torus factor per row of Q, one root of unity per torsion
    factor.
    """
    model_config = ConfigDict(frozen=True)
    weights: Tuple[Tuple[int, ...], ...] = Field(description="Exponent vectors of the torus factors.")
    torsion_factors: Tuple[int, ...] = Field(default=(), description="The orders of the cyclic factors.")
    torsion_rows: Tuple[Tuple[int, ...], ...] = Field(default=(), description="Exponent vectors of the roots.")

    @staticmethod
    def _render_row(symbol: str, row: Tuple[int, ...]) -> str:
        items = []
        for j, exponent in enumerate(row):
            if exponent == 0:
                items.append(f"x_{j + 1}")
            elif exponent == 1:
                items.append(f"{symbol} x_{j + 1}")
            else:
                items.append(f"{symbol}^{exponent} x_{j + 1}")
        return "(" + ", ".join(items) + ")"

    def render(self) -> str:
        lines = [self._render_row(f"t_{i + 1}", row) for i, row in enumerate(self.weights)]
        for i, (factor, row) in enumerate(zip(self.torsion_factors, self.torsion_rows)):
            lines.append(self._render_row(f"ε_{i + 1}", row) + f" with ε_{i + 1} a primitive {factor}-th root of 1")
        return "\n".join(lines)


class QuotientReport(BaseModel):
    """
    A fan matrix as a finite abelian quotient of its universal 1-covering.
    """
    model_config = ConfigDict(frozen=True)
    V: FanMatrix = Field(description="The input fan matrix.")
    Q: WeightMatrix = Field(description="Its positive REF Gale dual.")
    Vhat: FanMatrix = Field(description="The CF fan matrix of the universal 1-covering.")
    torsion_factors: Tuple[int, ...] = Field(description="The invariant factors greater than 1.")
    Gamma: Tuple[Tuple[int, ...], ...] = Field(description="Row i holds the torsion exponents mod factor i.")
    pinned: bool = Field(default=False, description="Γ was computed with pinned transforms.")
    trace: Dict[str, IntMatrix] = Field(default_factory=dict, description="The intermediate matrices by name.")

    @property
    def s(self) -> int:
        return len(self.torsion_factors)

    @property
    def presentation(self) -> CoxPresentation:
        return CoxPresentation(
            weights=tuple(self.Q.Q.row(i) for i in range(self.Q.Q.rows)),
            torsion_factors=self.torsion_factors,
            torsion_rows=self.Gamma
        )
