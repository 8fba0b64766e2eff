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

import numpy as np
import sympy
from typing import Any, Iterable, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator


class IntMatrix(BaseModel):
    """
    Dense exact integer matrix stored in row-major order.

    The selectors follow the usual toric notation: `columns(I)` is the submatrix A_I of the columns in I,
    `complement(I)` is A^I, `upper(s)` the top s rows and `lower(s)` the bottom s rows.
    """
    model_config = ConfigDict(frozen=True)
    rows: int = Field(ge=1, description="The number of rows.")
    cols: int = Field(ge=1, description="The number of columns.")
    entries: Tuple[int, ...] = Field(description="The entries in row-major order.")

    @model_validator(mode="after")
    def check_shape(self) -> "IntMatrix":
        if self.rows * self.cols != len(self.entries):
            raise ValueError(f"A {self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries "
                             f"but {len(self.entries)} were given.")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise ValueError("A matrix needs at least one row and one column.")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("All rows must have the same length.")
        return cls(rows=len(rows), cols=width, entries=tuple(int(item) for row in rows for item in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        return cls.from_rows([[int(item) for item in row] for row in array])

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.diagonal([1] * size)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        size = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(size)] for i in range(size)])

    def tolist(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def array(self) -> np.ndarray:
        """
        Returns the matrix as a numpy array of Python integers (dtype object) so no entry overflows.
        """
        return np.array(self.tolist(), dtype=object)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.tolist())

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def column_list(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def columns(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix.from_columns([self.col(j) for j in indices])

    def complement(self, indices: Iterable[int]) -> "IntMatrix":
        excluded = set(indices)
        return self.columns([j for j in range(self.cols) if j not in excluded])

    def upper(self, count: int) -> "IntMatrix":
        return IntMatrix.from_rows(self.tolist()[:count])

    def lower(self, count: int) -> "IntMatrix":
        return IntMatrix.from_rows(self.tolist()[self.rows - count:])

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.tolist())

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply a {self.rows}x{self.cols} by a {other.rows}x{other.cols} matrix.")
        return IntMatrix.from_array(self.array().dot(other.array()))

    def __str__(self) -> str:
        rows = self.tolist()
        width = max(len(str(item)) for item in self.entries)
        return "\n".join(" ".join(str(item).rjust(width) for item in row) for row in rows)


class RatMatrix(BaseModel):
    """
    Dense exact rational matrix. Entries are sympy rationals and serialize as "p/q" strings.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
    rows: int = Field(ge=1, description="The number of rows.")
    cols: int = Field(ge=1, description="The number of columns.")
    entries: Tuple[Any, ...] = Field(description="The entries in row-major order, as sympy rationals.")

    @field_validator("entries", mode="before")
    @classmethod
    def to_rationals(cls, value):
        return tuple(sympy.Rational(item) for item in value)

    @model_validator(mode="after")
    def check_shape(self) -> "RatMatrix":
        if self.rows * self.cols != len(self.entries):
            raise ValueError(f"A {self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries "
                             f"but {len(self.entries)} were given.")
        return self

    @field_serializer("entries")
    def serialize_entries(self, entries: Tuple[Any, ...]) -> list[str]:
        return [str(item) for item in entries]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "RatMatrix":
        rows = [list(row) for row in rows]
        return cls(rows=len(rows), cols=len(rows[0]), entries=tuple(item for row in rows for item in row))

    @classmethod
    def from_sympy(cls, matrix: sympy.Matrix) -> "RatMatrix":
        return cls.from_rows(matrix.tolist())

    @classmethod
    def from_int(cls, matrix: IntMatrix) -> "RatMatrix":
        return cls.from_rows(matrix.tolist())

    def tolist(self) -> list[list[sympy.Rational]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.tolist())

    @property
    def is_integral(self) -> bool:
        return all(item.q == 1 for item in self.entries)

    def to_int(self) -> IntMatrix:
        if not self.is_integral:
            raise ValueError("The matrix has non-integral entries.")
        return IntMatrix.from_rows([[int(item) for item in row] for row in self.tolist()])

    def diagonal_entries(self) -> list[sympy.Rational]:
        return [self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols))]
