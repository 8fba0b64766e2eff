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
from typing import Any, Dict
from pydantic import BaseModel, Field as PydanticField, ConfigDict


class SeverityEnum(StrEnum):
    """
    Enum that defines the outcome levels of a pipeline stage.
    """
    error = "error"
    success = "success"
    info = "info"
    warning = "warning"


class StageStatus(BaseModel):
    """
    Status record that reports the outcome of one analysis stage.
    """
    model_config = ConfigDict(frozen=True)
    stage: str
    severity: SeverityEnum
    message: str
    payload: Dict[str, Any] | None = PydanticField(default=None)
