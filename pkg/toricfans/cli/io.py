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

import re
import logging
from pathlib import Path
from ..models.matrix import IntMatrix
from ..models.report import MatrixKind
from ..utils import InputError

logger = logging.getLogger(__name__)

KIND_HEADER = re.compile(r"^#\s*kind\s*=\s*(?P<kind>\w+)\s*$")


def parse_matrix_text(text: str) -> tuple[IntMatrix, MatrixKind | None]:
    """
    Parses whitespace separated integer rows. Lines starting with '#' are comments, except an optional header
    '# kind=fan' or '# kind=weight'.
    """
    kind = None
    rows = []
    width = None
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = KIND_HEADER.match(line)
            if match:
                try:
                    kind = MatrixKind(match.group("kind"))
                except ValueError as ex:
                    raise InputError(f"Line {number}: unknown matrix kind '{match.group('kind')}'.", exc=ex)
            continue
        try:
            row = [int(token) for token in line.split()]
        except ValueError as ex:
            raise InputError(f"Line {number}: '{line}' contains a token that is not an integer.", exc=ex)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(f"Line {number}: expected {width} entries but found {len(row)}.")
        rows.append(row)
    if not rows:
        raise InputError("The matrix file contains no rows.")
    return IntMatrix.from_rows(rows), kind


def parse_matrix_file(path: str | Path) -> tuple[IntMatrix, MatrixKind | None]:
    path = Path(path)
    if not path.is_file():
        raise InputError(f"The matrix file {path} does not exist.")
    matrix, kind = parse_matrix_text(path.read_text(encoding="utf-8"))
    logger.debug(f"Read a {matrix.rows}x{matrix.cols} matrix of kind {kind} from {path}.")
    return matrix, kind
