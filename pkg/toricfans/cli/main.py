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

import sys
import argparse
import logging
from pathlib import Path
from typing import Optional, Sequence
from pydantic import ValidationError
from ..models.quotient import PinnedTransforms
from ..models.report import AnalysisReport, MatrixKind
from ..utils import InputError, ToricError, index_label
from ..utils.config import SearchLimits, SettingsBase
from ..utils.logging import get_logger
from .analyze import AnalysisOptions, analyze
from .io import parse_matrix_file
from .render import render_section_svg

logger = logging.getLogger(__name__)


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    settings = SettingsBase()
    parser = argparse.ArgumentParser(
        prog="toricfans",
        description="Secondary fans, primitive collections and weighted projective bundle structures of "
                    "Q-factorial complete toric varieties."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    analyze_parser = commands.add_parser("analyze", help="Analyze a fan matrix or a weight matrix.")
    analyze_parser.add_argument("file", type=Path, help="File with whitespace separated integer rows.")
    analyze_parser.add_argument("--kind", choices=[item.value for item in MatrixKind],
                                help="How to read the matrix; overrides the '# kind=' header (default: fan).")
    analyze_parser.add_argument("--json", dest="json_path", type=Path,
                                help="Write the report as JSON to this file, or '-' for standard output.")
    analyze_parser.add_argument("--svg", dest="svg_path", type=Path,
                                help="Draw the section of the secondary fan (rank 3 only).")
    analyze_parser.add_argument("--enumerate-complete", action="store_true", default=settings.enumerate_complete,
                                help="Enumerate all complete simplicial fans over the rays.")
    analyze_parser.add_argument("--max-candidates", type=int, default=settings.max_candidates,
                                help="Search node budget of the complete fan enumeration.")
    analyze_parser.add_argument("--pin-transforms", dest="pin_path", type=Path,
                                help="JSON file with the transforms mu, nu, W and U_G of the torsion matrix.")
    args = parser.parse_args(argv)
    args.settings = settings
    return args


def summary(report: AnalysisReport) -> str:
    lines = [
        f"{report.source}: {report.V.rows}x{report.V.cols} fan matrix, rank {report.Q.rows} weight matrix",
        f"Mov = {report.mov_cone}",
        f"{len(report.chambers)} chambers, {len(report.moving)} in Mov, {len(report.walls)} walls"
    ]
    for item in report.moving:
        collections = ", ".join(index_label(collection.P) for collection in item.collections)
        lines.append(f"  {item.chamber.label} = {item.chamber.cone}: {item.border.kind}, "
                     f"max index {item.singularities.max_index}, collections {collections}")
        for decomposition in item.decompositions:
            failed = decomposition.failed_conditions
            lines.append(f"    along {decomposition.hyperplane}: case {decomposition.case}, W = {decomposition.W}, "
                         f"maxbord {decomposition.maxbord}" + (f", Q' fails {list(failed)}" if failed else ""))
        if item.tower is not None:
            lines.append(f"    tower of weights {item.tower.weights}")
    if report.complete_fans is not None:
        projective = sum(1 for fan in report.complete_fans if fan.is_projective)
        lines.append(f"{len(report.complete_fans)} complete fans, {projective} projective")
    if report.quotient is not None:
        lines.append(f"torsion {report.quotient.torsion_factors}, Γ = {report.quotient.Gamma}")
        lines.append(report.quotient.presentation.render())
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    matrix, header_kind = parse_matrix_file(args.file)
    pinned = None
    if args.pin_path:
        try:
            pinned = PinnedTransforms.model_validate_json(args.pin_path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as ex:
            raise InputError(f"Cannot read the pinned transforms from {args.pin_path}.", exc=ex)
    options = AnalysisOptions(
        kind=MatrixKind(args.kind) if args.kind else header_kind or MatrixKind.fan,
        source=str(args.file),
        enumerate_complete=args.enumerate_complete,
        limits=SearchLimits(max_candidates=args.max_candidates, max_columns=args.settings.max_columns),
        pinned=pinned
    )
    report = analyze(matrix, options)
    if args.json_path is not None:
        text = report.to_json(args.settings.json_indent)
        if str(args.json_path) == "-":
            print(text)
        else:
            args.json_path.write_text(text, encoding="utf-8")
    else:
        print(summary(report))
    if args.svg_path is not None:
        render_section_svg(report, args.svg_path, args.settings.svg_width)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    try:
        return run(args)
    except ToricError as ex:
        stage = f" in stage '{ex.stage}'" if ex.stage else ""
        get_logger().error(f"{type(ex).__name__}{stage}: {ex.message}")
        print(f"error{stage}: {ex.message}", file=sys.stderr)
        return ex.exit_code
