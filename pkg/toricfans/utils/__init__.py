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

from typing import Iterable


class ToricError(Exception):
    """
    Base class for all exceptions in this application.
    """
    def __init__(
            self,
            message: str | None = None,
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message)
        self.message = message
        self.stage = stage
        self.exc = exc
        self.exit_code = 1


class InputError(ToricError):
    """
    Raised when a matrix file or a matrix argument is malformed.
    """
    def __init__(
            self,
            message: str | None = "Invalid input.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NotFanMatrixError(ToricError):
    """
    Raised when an F-matrix is required but the given matrix is not one.
    """
    def __init__(
            self,
            message: str | None = "The matrix is not an F-matrix.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NotWeightMatrixError(ToricError):
    """
    Raised when a W-matrix is required but the given matrix is not one, or it admits no positive row basis.
    """
    def __init__(
            self,
            message: str | None = "The matrix is not a W-matrix.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NotFacetError(ToricError):
    """
    Raised when a hyperplane does not cut out a facet of the weight cone.
    """
    def __init__(
            self,
            message: str | None = "The hyperplane does not cut out a facet.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NonSimplicialError(ToricError):
    """
    Raised when an operation requires a simplicial cone.
    """
    def __init__(
            self,
            message: str | None = "The cone is not simplicial.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NotStronglyConvexError(ToricError):
    """
    Raised when a set of generators spans a cone containing a line.
    """
    def __init__(
            self,
            message: str | None = "The cone contains a line.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class NotSmoothError(ToricError):
    """
    Raised when a smooth variety is required but some maximal cone is singular.
    """
    def __init__(
            self,
            message: str | None = "The variety is not smooth.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class BudgetExceededError(ToricError):
    """
    Raised when a combinatorial search exceeds its configured budget.
    """
    def __init__(
            self,
            message: str | None = "Combinatorial budget exceeded.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 3


class CoveringError(ToricError):
    """
    Raised when no covering morphism onto a weighted projective toric bundle exists.
    """
    def __init__(
            self,
            message: str | None = "No covering morphism exists.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 2


class InternalError(ToricError):
    """
    Raised when an invariant that must hold by construction is violated.
    """
    def __init__(
            self,
            message: str | None = "Internal error.",
            stage: str | None = None,
            exc: Exception | None = None
    ):
        super().__init__(message, stage, exc)
        self.exit_code = 1


def one_based(indices: Iterable[int]) -> list[int]:
    """
    Converts 0-based column indices into the 1-based labels used in reports.
    """
    return [item + 1 for item in sorted(indices)]


def index_label(indices: Iterable[int]) -> str:
    """
    Returns a compact label like "{1,4,5}" for a set of 0-based column indices.
    """
    return "{" + ",".join(str(item) for item in one_based(indices)) + "}"
