#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_cli.py
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
test_cli
----------------------------------
Tests for `cli` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import io
import json
import os
import tempfile
import unittest
from unittest import mock

from autocatlib._version import __version__
from autocatlib.autocatlibexceptions import (CapacityExceeded,
                                             ConfigurationError,
                                             InvalidParameters,
                                             InvalidState,
                                             ValidityConditionViolation)
from autocatlib.cli import exit_code, get_arguments, run_command
from autocatlib.entities import Distribution

__author__ = 'autocatlib developers <autocatlib@users.noreply.github.com>'
__docformat__ = 'google'
__date__ = '19-10-2026'
__copyright__ = 'Copyright 2026, autocatlib developers'
__credits__ = ["autocatlib developers"]
__license__ = 'Apache Software License 2.0'
__maintainer__ = 'autocatlib developers'
__email__ = '<autocatlib@users.noreply.github.com>'
__status__ = 'Development'  # "Prototype", "Development", "Production".

SCALED = {'kind': 'scaled', 'V': 20, 'D': 0.01, 'kappa_prime': [1, 1.01]}
RAW = {'kind': 'raw', 'kappa': [1, 2], 'lambda': [1, 1.5], 'delta': 0.5}


class TestArguments(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        pass

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_defaults(self):
        arguments = get_arguments(['stationary', '--config', 'params.json'])
        self.assertEqual(arguments.command, 'stationary')
        self.assertIsNone(arguments.n_max)
        self.assertEqual(arguments.tail_tol, 1e-12)
        self.assertEqual(arguments.log_level, 'info')
        self.assertIsNone(arguments.out)
        self.assertEqual(get_arguments(['exact', '-c', 'p.json', '--nmax', 'auto']).solver, 'SPARSE_LU')

    def test_invalid_arguments(self):
        for argv in ([], ['stationary'], ['stationary', '-c', 'p.json', '--nmax', '0'],
                     ['exact', '-c', 'p.json', '--solver', 'QR'], ['unknown']):
            with self.assertRaises(ConfigurationError):
                get_arguments(argv)

    def test_exit_codes(self):
        self.assertEqual(exit_code(ConfigurationError('bad')), 2)
        self.assertEqual(exit_code(InvalidState('bad')), 2)
        self.assertEqual(exit_code(InvalidParameters('bad')), 2)
        self.assertEqual(exit_code(ValidityConditionViolation('bad')), 3)
        self.assertEqual(exit_code(CapacityExceeded('bad')), 3)


class TestCommands(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.directory = tempfile.TemporaryDirectory()
        self.scaled = self._write('scaled.json', json.dumps(SCALED))
        self.raw = self._write('raw.json', json.dumps(RAW))

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        self.directory.cleanup()

    def _path(self, name):
        return os.path.join(self.directory.name, name)

    def _write(self, name, content):
        with open(self._path(name), 'w', encoding='utf8') as output:
            output.write(content)
        return self._path(name)

    def _read(self, name):
        with open(self._path(name), encoding='utf8') as input_file:
            return input_file.read()

    def _run(self, *argv):
        return run_command(list(argv) + ['--log-level', 'critical'])

    def _manifest(self, name):
        return json.loads(self._read(f'{name}.manifest.json'))

    def test_stationary_with_manifest(self):
        self.assertEqual(self._run('stationary', '-c', self.scaled, '--nmax', '60', '-o', self._path('law.csv')), 0)
        law = Distribution.from_csv(self._read('law.csv'))
        self.assertEqual(len(law), 61 * 62 // 2)
        manifest = self._manifest('law.csv')
        self.assertEqual(manifest['command'], 'stationary')
        self.assertEqual(manifest['tool_version'], __version__)
        self.assertEqual(manifest['outputs'], [os.path.abspath(self._path('law.csv'))])
        self.assertEqual(manifest['params_echo']['kind'], 'scaled')
        self.assertFalse(manifest['notes']['relabeled'])
        self.assertEqual(manifest['notes']['n_max'], 60)

    def test_standard_output_without_manifest(self):
        with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout:
            self.assertEqual(self._run('balance', '-c', self.raw, '--grid', '3'), 0)
        lines = stdout.getvalue().splitlines()
        self.assertEqual(lines[0], 'a1,a2,n,bstar_direct,bstar_closed,abs_diff')
        self.assertEqual(len(lines), 11)
        self.assertEqual(set(os.listdir(self.directory.name)), {'scaled.json', 'raw.json'})

    def test_balance_ratios(self):
        self.assertEqual(self._run('balance', '-c', self.scaled, '--ratios', '--grid', '10',
                                   '-o', self._path('ratios.csv')), 0)
        lines = self._read('ratios.csv').splitlines()
        self.assertEqual(lines[0], 'n,r_shift_minus,r_shift_plus')
        self.assertEqual(len(lines), 12)

    def test_simulate(self):
        self.assertEqual(self._run('simulate', '-c', self.raw, '--max-events', '300', '--seed', '3',
                                   '--initial', '1', '1', '--replicas', '2', '--workers', '1',
                                   '-o', self._path('sim.csv')), 0)
        self.assertTrue(self._read('sim.csv').startswith('a1,a2,n,time_fraction\n'))
        manifest = self._manifest('sim.csv')
        self.assertEqual(manifest['seed'], 3)
        self.assertEqual(manifest['notes']['events'], 600)
        self.assertEqual(manifest['notes']['initial'], [1, 1])

    def test_fixed_point(self):
        self.assertEqual(self._run('fixed-point', '-c', self.scaled, '-o', self._path('fixed.json')), 0)
        result = json.loads(self._read('fixed.json'))
        self.assertAlmostEqual(result['a1_star'] + result['a2_star'], 40.0, places=8)
        self.assertTrue(result['stable'])

    def test_exact_and_compare(self):
        self.assertEqual(self._run('exact', '-c', self.raw, '-o', self._path('exact.csv')), 0)
        self.assertEqual(self._run('stationary', '-c', self.raw, '-o', self._path('approx.csv')), 0)
        self.assertEqual(self._run('compare', '--a', self._path('exact.csv'), '--b', self._path('exact.csv'),
                                   '-o', self._path('same.csv')), 0)
        self.assertEqual(self._manifest('same.csv')['notes']['tv_distance'], 0.0)
        self.assertEqual(self._run('compare', '--a', self._path('exact.csv'), '--b', self._path('approx.csv'),
                                   '-o', self._path('diff.csv')), 0)
        notes = self._manifest('diff.csv')['notes']
        self.assertTrue(0.0 < notes['tv_distance'] < 1.0)
        self.assertTrue(notes['modes_a'])
        self.assertEqual(self._read('diff.csv').splitlines()[0], 'a1,a2,n,prob_a,prob_b,diff')

    def test_exact_moran(self):
        moran = self._write('moran.json', json.dumps({'kind': 'moran', 'n': 10, 'kappa': [1, 2], 'v': 0.5}))
        self.assertEqual(self._run('exact', '-c', moran, '-o', self._path('moran.csv')), 0)
        law = Distribution.from_csv(self._read('moran.csv'))
        self.assertEqual(len(law), 11)
        self.assertEqual(self._run('stationary', '-c', moran), 2)

    def test_regimes(self):
        self.assertEqual(self._run('regimes', '--kappa-prime', '1', '1.01', '--volumes', '20', '200',
                                   '--flows', '0.01', '0.05', '-o', self._path('regimes.csv')), 0)
        lines = self._read('regimes.csv').splitlines()
        self.assertEqual(lines[0], 'V,D,DV,d,regime,mode_a1,mode_a2')
        self.assertEqual(len(lines), 5)
        self.assertEqual(self._run('regimes', '-c', self.scaled, '--volumes', '20', '--flows', '0.01',
                                   '-o', self._path('from_config.csv')), 0)
        self.assertEqual(self._run('regimes', '--volumes', '20', '--flows', '0.01'), 2)

    def test_configuration_errors_exit_with_two(self):
        self.assertEqual(self._run('stationary', '-c', self._path('missing.json')), 2)
        self.assertEqual(self._run('stationary', '-c', self.scaled, '--bogus'), 2)
        self.assertEqual(self._run('balance', '-c', self.scaled, '--grid', '-1'), 2)
        self.assertEqual(self._run('simulate', '-c', self.raw, '--t-max', '10', '--max-events', '10'), 2)

    def test_numerical_errors_exit_with_three(self):
        self.assertEqual(self._run('stationary', '-c', self.raw, '--symmetric'), 3)
        self.assertFalse(os.path.exists(self._path('never.csv')))
        self.assertEqual(self._run('exact', '-c', self.scaled, '--nmax', '2000', '-o', self._path('never.csv')), 3)
        self.assertFalse(os.path.exists(self._path('never.csv')))
        self.assertFalse(os.path.exists(self._path('never.csv.manifest.json')))

    def test_version(self):
        with mock.patch('sys.stdout', new_callable=io.StringIO):
            self.assertEqual(run_command(['--version']), 0)
