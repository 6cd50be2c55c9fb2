# coding=utf-8
# Copyright 2020 George Mihaila.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Logger setup used by the command line front end"""

import logging

LOGGER_FORMAT = "%(asctime)s - %(levelname)s - %(filename)s/%(funcName)s: %(message)s"

DATE_FORMAT = "%m-%d-%Y_%H:%M:%S"


def custom_logger(file_log=None, filemode='a', date_format=DATE_FORMAT, level=logging.INFO):
    """Create the package logger used across module files.

    :param
      file_log: name of file log. If None only the console handler is used.
    :param
      filemode: either 'w' to write new file [overwrite old log] or 'a' to append to recent log.
    :param
      date_format: date format for log records.
    :param
      level: logging level of the package logger.
    :return:
      the `loophole_witness` logger object.
    """

    if filemode not in ['a', 'w']:
        raise ValueError("`filemode` needs to be 'a' or 'w'!")

    # setup console config once per process
    logging.basicConfig(format=LOGGER_FORMAT, datefmt=date_format, level=logging.WARNING)
    logger = logging.getLogger("loophole_witness")
    logger.setLevel(level)

    if file_log is not None:
        # avoid stacking file handlers when the cli runs more than once in a process
        for handler in list(logger.handlers):
            if isinstance(handler, logging.FileHandler):
                logger.removeHandler(handler)
                handler.close()
        file_handler = logging.FileHandler(file_log, mode=filemode)
        file_handler.setFormatter(logging.Formatter(LOGGER_FORMAT, datefmt=date_format))
        logger.addHandler(file_handler)

    return logger
