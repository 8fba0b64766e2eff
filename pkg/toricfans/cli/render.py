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

import math
import logging
import matplotlib
import numpy as np
from pathlib import Path
from typing import Sequence
from ..models.cone import Cone
from ..models.report import AnalysisReport
from ..utils import InputError

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)


def section_point(vector: Sequence[int]) -> np.ndarray:
    """
    Maps a nonzero vector of the positive orthant to the plane x_1 + x_2 + x_3 = 1, drawn as an equilateral
    triangle.
    """
    total = sum(vector)
    if total <= 0:
        raise InputError(f"The vector {tuple(vector)} does not meet the plane x_1 + x_2 + x_3 = 1.")
    x1, x2, x3 = (item / total for item in vector)
    return np.array([x2 + x3 / 2, x3 * math.sqrt(3) / 2])


def _polygon(cone: Cone) -> np.ndarray:
    points = np.array([section_point(ray) for ray in cone.rays])
    center = points.mean(axis=0)
    angles = np.arctan2(points[:, 1] - center[1], points[:, 0] - center[0])
    return points[np.argsort(angles)]


def render_section_svg(report: AnalysisReport, path: str | Path, width: float = 6.0) -> Path:
    """
    Draws the columns of Q, the moving cone and the chambers as cut out by the plane x_1 + x_2 + x_3 = 1.
    """
    if report.Q.rows != 3:
        raise InputError(f"Sections are drawn for rank 3 only, the weight matrix has rank {report.Q.rows}.")
    path = Path(path)
    fig, ax = plt.subplots(figsize=(width, width))
    colors = plt.cm.tab20(np.linspace(0, 1, max(len(report.chambers), 1)))
    for chamber, color in zip(report.chambers, colors):
        polygon = _polygon(chamber.cone)
        ax.fill(polygon[:, 0], polygon[:, 1], color=color, alpha=0.35 if chamber.in_moving else 0.12,
                edgecolor="black", linewidth=0.6)
        center = polygon.mean(axis=0)
        ax.annotate(f"$\\gamma_{{{chamber.index + 1}}}$", center, ha="center", va="center", fontsize=9)
    moving = _polygon(report.mov_cone)
    ax.fill(moving[:, 0], moving[:, 1], fill=False, edgecolor="red", linewidth=2.0, label="Mov")
    for j, column in enumerate(report.Q.column_list()):
        point = section_point(column)
        ax.scatter(point[0], point[1], color="black", s=14, zorder=3)
        ax.annotate(f"$q_{{{j + 1}}}$", point, xytext=(4, 4), textcoords="offset points", fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.legend(loc="upper right")
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    logger.info(f"Wrote the section of {len(report.chambers)} chambers to {path}.")
    return path
