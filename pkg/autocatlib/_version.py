#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: _version.py
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
Manages the version of the package.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import os
from importlib import metadata

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".

# a checkout keeps .VERSION at the repository root, a built package ships a copy next to this module
VERSION_FILE_PATHS = (os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '.VERSION')),
                      os.path.abspath(os.path.join(os.path.dirname(__file__), '.VERSION')))


def _read_version() -> str:
    for path in VERSION_FILE_PATHS:
        try:
            with open(path, encoding='utf8') as version_file:
                return version_file.read().strip()
        except OSError:
            continue
    try:
        return metadata.version('autocatlib')
    except metadata.PackageNotFoundError:
        return 'unknown'


__version__ = _read_version()
