#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: base.py
#
# Copyright 2026 autocatlib developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

"""
Base entity.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""
import logging
from dataclasses import asdict, dataclass, fields
from enum import Enum
from typing import Any, Dict

from autocatlib.autocatlibexceptions import ConfigurationError

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = 'base'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def _plain(value: Any) -> Any:
    """Turns tuples and enums into json friendly values."""
    if isinstance(value, (tuple, list)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {key if isinstance(key, str) else str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, Enum):
        return value.value
    return value


@dataclass(frozen=True)
class Entity:
    """Immutable value object that can be rebuilt from and rendered to plain data."""

    # Maps external (json) keys to field names where the two differ.
    _aliases = {}

    @property
    def _logger(self):
        return logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')

    @classmethod
    def from_data(cls, data: Dict):
        """Function to instantiate entity from given data.

        Unknown keys are ignored, aliased keys are mapped onto their field names.

        Args:
            data: A mapping as read from a json document.

        Returns:
            The entity.

        Raises:
            ConfigurationError: If the data is not a mapping or a required field is missing.

        """
        if not isinstance(data, dict):
            raise ConfigurationError(f'Expected a mapping to build {cls.__name__}, got {type(data).__name__}')
        names = {field.name for field in fields(cls)}
        arguments = {}
        for key, value in data.items():
            name = cls._aliases.get(key, key)
            if name in names:
                arguments[name] = value
        try:
            return cls(**arguments)
        except TypeError as msg:
            raise ConfigurationError(f'Unable to build {cls.__name__} from {data}: {msg}') from None

    def to_data(self) -> Dict:
        """Renders the entity as plain json friendly data."""
        reverse = {name: key for key, name in self._aliases.items()}
        return {reverse.get(key, key): _plain(value) for key, value in asdict(self).items()}
