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

import time
import logging
from contextlib import contextmanager
from pydantic import BaseModel, ConfigDict, Field
from ..core.bundles import contractibility, decompose, recursive_decomposition
from ..core.matrices import check_F, check_W, gale_dual, positive_ref, weight_matrix_of
from ..core.primitive import classify_border, collections_with_relations
from ..core.quotient import quotient_report
from ..core.secfan import enumerate_chambers, enumerate_complete_fans, moving_chambers, mov_cone, q_fano, \
    singularity_profile, wall_cells
from ..models.bundle import BundleDecomposition
from ..models.collection import BorderKind
from ..models.fan import Chamber
from ..models.matrix import IntMatrix
from ..models.quotient import PinnedTransforms
from ..models.report import AnalysisReport, ChamberReport, MatrixKind
from ..utils import NotFanMatrixError, NotWeightMatrixError, ToricError, index_label
from ..utils.config import SearchLimits
from ..utils.logging import InjectingFilter
from ..utils.status import SeverityEnum, StageStatus

logger = logging.getLogger(__name__)


class AnalysisOptions(BaseModel):
    """
    Switches for the pipeline; the exponential complete fan enumeration is off by default.
    """
    model_config = ConfigDict(frozen=True)
    kind: MatrixKind = Field(default=MatrixKind.fan, description="How to read the input matrix.")
    source: str = Field(default="<memory>", description="Name of the input used in logs and the report.")
    enumerate_complete: bool = Field(default=False, description="Enumerate all complete fans over the rays.")
    limits: SearchLimits = Field(default_factory=SearchLimits)
    pinned: PinnedTransforms | None = Field(default=None, description="Transforms for the torsion matrix Γ.")


class _Pipeline:
    """
    Runs the stages in order, recording a status and the time spent for each.
    """
    def __init__(self, options: AnalysisOptions):
        self.options = options
        self.stages: list[StageStatus] = []
        self.timings: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str, fatal: bool = False):
        context = InjectingFilter(self.options.source, name)
        handlers = logging.getLogger().handlers
        for handler in handlers:
            handler.addFilter(context)
        start = time.perf_counter()
        try:
            yield
        except ToricError as ex:
            ex.stage = ex.stage or name
            self.stages.append(StageStatus(stage=name, severity=SeverityEnum.error, message=ex.message or "",
                                           payload={"error": type(ex).__name__}))
            if fatal:
                raise
            logger.error(f"Stage {name} failed: {ex.message}")
            return
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + time.perf_counter() - start
            for handler in handlers:
                handler.removeFilter(context)
        self.stages.append(StageStatus(stage=name, severity=SeverityEnum.success, message="done"))

    def warn(self, name: str, message: str, **payload):
        logger.warning(message)
        self.stages.append(StageStatus(stage=name, severity=SeverityEnum.warning, message=message,
                                       payload=payload or None))


def _matrices(matrix: IntMatrix, kind: MatrixKind) -> tuple[IntMatrix, IntMatrix]:
    if kind == MatrixKind.fan:
        flags = check_F(matrix).flags
        if not flags.is_F:
            raise NotFanMatrixError(f"The input is not an F-matrix: failed {flags.failed}.")
        return matrix, weight_matrix_of(matrix)
    flags = check_W(matrix).flags
    if not flags.is_W:
        raise NotWeightMatrixError(f"The input is not a W-matrix: failed {flags.failed}.")
    Q = positive_ref(matrix)
    return gale_dual(Q), Q


def _analyze_chamber(pipeline: _Pipeline, chamber: Chamber, V: IntMatrix, V_cover: IntMatrix,
                     Q: IntMatrix) -> ChamberReport:
    name = f"chamber {chamber.label}"
    border = classify_border(chamber, Q)
    collections = collections_with_relations(chamber.fan, V, Q)
    decompositions: list[BundleDecomposition] = []
    for normal in dict.fromkeys(border.maxbord + border.intbord):
        try:
            decompositions.append(decompose(V_cover, Q, chamber, normal))
        except ToricError as ex:
            pipeline.warn(name, f"Decomposition of {chamber.label} along {normal} failed: {ex.message}")
    tower = None
    if border.kind in (BorderKind.recursively_maxbord, BorderKind.totally_maxbord):
        try:
            tower = recursive_decomposition(chamber, V_cover, Q)
        except ToricError as ex:
            pipeline.warn(name, f"Recursive decomposition of {chamber.label} failed: {ex.message}")
    verdicts = {}
    for collection in collections:
        if not collection.is_nef:
            continue
        try:
            verdicts[index_label(collection.P)] = contractibility(collection, chamber, V_cover, Q)
        except ToricError as ex:
            pipeline.warn(name, f"Contractibility of {index_label(collection.P)} failed: {ex.message}")
    return ChamberReport(
        chamber=chamber,
        border=border,
        singularities=singularity_profile(chamber.fan, V, Q),
        q_fano=q_fano(chamber, Q),
        collections=tuple(collections),
        decompositions=tuple(decompositions),
        tower=tower,
        contractibility=verdicts
    )


def analyze(matrix: IntMatrix, options: AnalysisOptions | None = None) -> AnalysisReport:
    """
    Runs the pipeline: matrix checks, Gale duality, moving cone, chambers, primitive collections, border classes,
    bundle decompositions and, for fan matrices that are not CF, the quotient data.
    """
    options = options or AnalysisOptions()
    pipeline = _Pipeline(options)
    with pipeline.stage("flags", fatal=True):
        V, Q = _matrices(matrix, options.kind)
        fan = check_F(V)
        weights = check_W(Q)
        V_cover = V if fan.flags.is_CF else gale_dual(Q)
    with pipeline.stage("secondary fan", fatal=True):
        moving = mov_cone(Q)
        chambers = enumerate_chambers(Q)
    walls = []
    with pipeline.stage("walls"):
        walls = wall_cells(chambers, V, Q)
    reports = []
    for chamber in moving_chambers(chambers):
        with pipeline.stage(f"chamber {chamber.label}"):
            reports.append(_analyze_chamber(pipeline, chamber, V, V_cover, Q))
    complete_fans = None
    if options.enumerate_complete:
        with pipeline.stage("complete fans", fatal=True):
            complete_fans = tuple(enumerate_complete_fans(V, options.limits))
    quotient = None
    if not fan.flags.is_CF:
        with pipeline.stage("quotient", fatal=options.pinned is not None):
            quotient = quotient_report(V, options.pinned)
    return AnalysisReport(
        source=options.source,
        kind=options.kind,
        input=matrix,
        fan_flags=fan.flags,
        weight_flags=weights.flags,
        V=V,
        Q=Q,
        mov_cone=moving,
        chambers=tuple(chambers),
        moving=tuple(reports),
        walls=tuple(walls),
        complete_fans=complete_fans,
        quotient=quotient,
        status=tuple(pipeline.stages),
        timings=pipeline.timings
    )
