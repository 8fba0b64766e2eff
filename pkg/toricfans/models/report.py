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
from typing import Dict, Tuple
from pydantic import BaseModel, ConfigDict, Field
from ..utils.status import StageStatus
from .bundle import BundleDecomposition, Contractibility, Tower
from .collection import BorderClass, PrimitiveCollection
from .cone import Cone
from .fan import Chamber, SimplicialFan, SingularityProfile, Wall
from .flags import FanMatrixFlags, WeightMatrixFlags
from .matrix import IntMatrix
from .quotient import QuotientReport


class MatrixKind(StrEnum):
    """
    Whether an input matrix holds the rays of a fan or the classes of the invariant divisors.
    """
    fan = "fan"
    weight = "weight"


class ChamberReport(BaseModel):
    """
    Everything computed for one chamber of the moving cone.
    """
    model_config = ConfigDict(frozen=True)
    chamber: Chamber
    border: BorderClass
    singularities: SingularityProfile
    q_fano: bool
    collections: Tuple[PrimitiveCollection, ...] = ()
    decompositions: Tuple[BundleDecomposition, ...] = ()
    tower: Tower | None = None
    contractibility: Dict[str, Contractibility] = Field(
        default_factory=dict,
        description="Verdict per nef primitive collection, keyed by its 1-based label."
    )


class AnalysisReport(BaseModel):
    """
    The result of running the whole pipeline on one matrix.
    """
    model_config = ConfigDict(frozen=True)
    source: str = Field(description="Where the matrix came from.")
    kind: MatrixKind
    input: IntMatrix
    fan_flags: FanMatrixFlags
    weight_flags: WeightMatrixFlags
    V: IntMatrix = Field(description="The fan matrix.")
    Q: IntMatrix = Field(description="The positive REF weight matrix.")
    mov_cone: Cone
    chambers: Tuple[Chamber, ...] = Field(description="All chambers of the secondary fan inside the weight cone.")
    moving: Tuple[ChamberReport, ...] = Field(description="The chambers of the moving cone with their analysis.")
    walls: Tuple[Wall, ...] = ()
    complete_fans: Tuple[SimplicialFan, ...] | None = None
    quotient: QuotientReport | None = None
    status: Tuple[StageStatus, ...] = Field(default=(), description="Outcome of every pipeline stage.")
    timings: Dict[str, float] = Field(default_factory=dict, description="Seconds spent per stage.")

    def to_json(self, indent: int | None = 2) -> str:
        return self.model_dump_json(indent=indent, by_alias=True, exclude={"timings"})
