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

import os
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()


class SearchLimits(BaseModel):
    """
    Limits for the exponential enumeration steps.
    """
    model_config = ConfigDict(frozen=True)
    max_candidates: int = Field(
        default=200000,
        description="Maximum number of search nodes visited while enumerating complete fans."
    )
    max_columns: int = Field(
        default=12,
        description="Exhaustive enumeration is refused for fan matrices with more columns."
    )


class SettingsBase:
    """
    This class manages the settings that are read from the environment and an optional .env file.
    """
    def __init__(self):
        # Enumeration budgets
        self.max_candidates = int(os.getenv("TORICFANS_MAX_CANDIDATES", 200000))
        self.max_columns = int(os.getenv("TORICFANS_MAX_COLUMNS", 12))
        self.enumerate_complete = os.getenv("TORICFANS_ENUMERATE_COMPLETE", "false").lower() == "true"
        # Output
        self.svg_width = float(os.getenv("TORICFANS_SVG_WIDTH", 6.0))
        self.json_indent = int(os.getenv("TORICFANS_JSON_INDENT", 2))

    @property
    def limits(self) -> SearchLimits:
        return SearchLimits(max_candidates=self.max_candidates, max_columns=self.max_columns)
