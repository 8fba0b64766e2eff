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
import sys
import logging

# Obtain the log level, log file, and log format from the environment variables.
log_file = os.getenv('LOG_FILE')
log_level = os.getenv('LOG_LEVEL', 'WARNING')
log_format = os.getenv(
    'LOG_FORMAT',
    '%(asctime)s [%(levelname)-8s] %(matrix_id)s %(stage)-12s - %(name)s - %(message)s'
)
log_date_format = os.getenv('LOG_DATE_FORMAT', '%Y-%m-%d %H:%M:%S')


class InjectingFilter(logging.Filter):
    """
    This is a custom logging filter that adds the running analysis context to the log record.
    """
    def __init__(self, matrix_id: str | None = None, stage: str | None = None):
        super().__init__()
        self.matrix_id = matrix_id
        self.stage = stage

    def filter(self, record):
        record.matrix_id = self.matrix_id or 'n/a'
        record.stage = self.stage or 'n/a'
        return True


def record_factory(*args, **kwargs):
    """
    This function is used to create a log record with the matrix identifier and pipeline stage.
    """
    record = old_factory(*args, **kwargs)
    if not hasattr(record, 'matrix_id'):
        record.matrix_id = "n/a"
    if not hasattr(record, 'stage'):
        record.stage = "n/a"
    return record


# Define the handlers for the logger.
handlers = [logging.StreamHandler(sys.stdout)]
if log_file:
    handlers.append(logging.FileHandler(log_file))


# We set up a basic logger.
logging.basicConfig(
    format=log_format,
    datefmt=log_date_format,
    handlers=handlers,
    level=log_level
)

old_factory = logging.getLogRecordFactory()
logging.setLogRecordFactory(record_factory)
logger = logging.getLogger("toricfans")


def get_logger() -> logging.Logger:
    """
    Returns the package logger.
    """
    return logger
