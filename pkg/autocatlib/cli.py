#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
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
Command line entry point of autocatlib.

Every subcommand writes its main output to ``--out`` or, without it, to standard output. When ``--out`` is
given the file is written through a temporary file and a rename, and a run manifest named
``<out>.manifest.json`` is written after it. Exit code 0 means success, 2 a configuration problem and 3 a
numerical validity problem.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from typing import Dict, List, Optional, Sequence

import coloredlogs

from autocatlib._version import __version__
from autocatlib.autocatlib import AutocatalyticNetwork
from autocatlib.autocatlibexceptions import (AutocatlibError,
                                             ConfigurationError,
                                             InvalidParameters,
                                             InvalidState)
from autocatlib.balance import balance_csv, ratio_csv
from autocatlib.configuration import (CSV_FLOAT_FORMAT,
                                      DEFAULT_LOG_LEVEL,
                                      DEFAULT_MAX_EVENTS,
                                      DEFAULT_TAIL_TOLERANCE)
from autocatlib.entities import (Distribution,
                                 MoranParams,
                                 ReflectPolicy,
                                 RunManifest,
                                 ScaledParams,
                                 SimConfig,
                                 Solver)
from autocatlib.model import load_params_file
from autocatlib.oracle import moran_stationary_exact
from autocatlib.ssa import tv_distance
from autocatlib.stationary import distribution_modes, lattice_argmax, regime_classify

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
LOGGER_BASENAME = 'autocatlib.cli'
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

CONFIGURATION_ERRORS = (ConfigurationError, InvalidParameters, InvalidState)
EXIT_SUCCESS = 0
EXIT_CONFIGURATION = 2
EXIT_NUMERICAL = 3
DEFAULT_GRID = 60
MODES_REPORTED = 5


class ArgumentParser(argparse.ArgumentParser):
    """Parser raising configuration errors instead of exiting."""

    def error(self, message):
        raise ConfigurationError(message)


def _n_max(value: str) -> Optional[int]:
    if value == 'auto':
        return None
    try:
        n_max = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a positive integer or "auto", got "{value}"') from None
    if n_max < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer or "auto", got "{value}"')
    return n_max


def _positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a positive number, got "{value}"') from None
    if not number > 0:
        raise argparse.ArgumentTypeError(f'expected a positive number, got "{value}"')
    return number


def get_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parses the command line.

    Args:
        argv: The arguments without the program name, the process arguments when omitted.

    Returns:
        argparse.Namespace: The parsed arguments.

    Raises:
        ConfigurationError: On unknown flags, missing subcommands or malformed values.

    """
    common = ArgumentParser(add_help=False)
    common.add_argument('--log-level',
                        '-L',
                        help='Provide the log level. Defaults to info.',
                        dest='log_level',
                        action='store',
                        default=DEFAULT_LOG_LEVEL,
                        choices=['debug', 'info', 'warning', 'error', 'critical'])
    common.add_argument('--out', '-o', dest='out', help='Output file, standard output when omitted.')
    configured = ArgumentParser(add_help=False, parents=[common])
    configured.add_argument('--config', '-c', dest='config', required=True, help='Json parameter file.')
    parser = ArgumentParser(prog='autocatlib',
                            description='Stationary laws of open autocatalytic networks.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    subparsers.required = True

    stationary = subparsers.add_parser('stationary', parents=[configured],
                                       help='Emit the approximate or the symmetric stationary law.')
    stationary.add_argument('--nmax', dest='n_max', type=_n_max, default=None,
                            help='Last hyperplane, or "auto" to use the tail tolerance.')
    stationary.add_argument('--tail-tol', dest='tail_tol', type=_positive_float, default=DEFAULT_TAIL_TOLERANCE)
    stationary.add_argument('--symmetric', action='store_true', help='Use the exact law of a symmetric network.')
    stationary.add_argument('--two-sided', dest='two_sided', action='store_true',
                            help='Drop the improbable low hyperplanes too.')

    balance = subparsers.add_parser('balance', parents=[configured],
                                    help='Emit the balance error over a state grid or the series ratios.')
    balance.add_argument('--grid', dest='grid', type=int, default=DEFAULT_GRID,
                         help='Largest total count of the grid.')
    balance.add_argument('--ratios', action='store_true', help='Emit the hyperplane series ratios instead.')

    simulate = subparsers.add_parser('simulate', parents=[configured], help='Run the stochastic simulation.')
    simulate.add_argument('--initial', dest='initial', type=int, nargs='+', default=None,
                          help='Initial counts, all zero when omitted.')
    simulate.add_argument('--t-max', dest='t_max', type=_positive_float, default=None)
    simulate.add_argument('--max-events', dest='max_events', type=int, default=None)
    simulate.add_argument('--seed', dest='seed', type=int, default=0)
    simulate.add_argument('--burn-in', dest='burn_in', type=float, default=None)
    simulate.add_argument('--replicas', dest='replicas', type=int, default=1)
    simulate.add_argument('--workers', dest='workers', type=int, default=None)

    subparsers.add_parser('fixed-point', parents=[configured], help='Solve the mean field equilibrium.')

    exact = subparsers.add_parser('exact', parents=[configured], help='Solve the truncated master equation.')
    exact.add_argument('--nmax', dest='n_max', type=_n_max, default=None)
    exact.add_argument('--tail-tol', dest='tail_tol', type=_positive_float, default=DEFAULT_TAIL_TOLERANCE)
    exact.add_argument('--reflect-policy', dest='reflect_policy', default=ReflectPolicy.DROP_OUTFLOWING.value,
                       choices=[policy.value for policy in ReflectPolicy])
    exact.add_argument('--solver', dest='solver', default=Solver.SPARSE_LU.value,
                       choices=[solver.value for solver in Solver])

    compare = subparsers.add_parser('compare', parents=[common], help='Compare two distribution csv files.')
    compare.add_argument('--a', dest='first', required=True)
    compare.add_argument('--b', dest='second', required=True)

    regimes = subparsers.add_parser('regimes', parents=[common], help='Classify a grid of volumes and flows.')
    regimes.add_argument('--config', '-c', dest='config', default=None,
                         help='Scaled parameter file providing kappa_prime.')
    regimes.add_argument('--kappa-prime', dest='kappa_prime', type=_positive_float, nargs='+', default=None)
    regimes.add_argument('--volumes', dest='volumes', type=_positive_float, nargs='+', required=True)
    regimes.add_argument('--flows', dest='flows', type=_positive_float, nargs='+', required=True)
    regimes.add_argument('--tail-tol', dest='tail_tol', type=_positive_float, default=DEFAULT_TAIL_TOLERANCE)
    return parser.parse_args(argv)


def setup_logging(level: str):
    """Installs colored logging on standard error."""
    coloredlogs.install(level=level.upper(), stream=sys.stderr)


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temporary = tempfile.mkstemp(dir=directory, prefix='.autocatlib-', suffix='.tmp')
    try:
        with os.fdopen(descriptor, 'w', encoding='utf8', newline='') as output:
            output.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


class Runner:
    """Executes one parsed command and records what it wrote."""

    def __init__(self, arguments: argparse.Namespace):
        self._logger = logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')
        self.arguments = arguments
        self.params_echo = {}
        self.seed = None
        self.notes = {}
        self.outputs = []

    def _network(self) -> AutocatalyticNetwork:
        params = load_params_file(self.arguments.config)
        self.params_echo = params.to_data()
        if isinstance(params, MoranParams):
            raise ConfigurationError(f'The {self.arguments.command} command needs raw or scaled parameters, '
                                     f'got kind "moran"')
        network = AutocatalyticNetwork(params)
        self.notes['relabeled'] = network.relabeled
        return network

    def _emit(self, text: str):
        if self.arguments.out is None:
            sys.stdout.write(text)
            return
        _write_atomic(self.arguments.out, text)
        self.outputs.append(os.path.abspath(self.arguments.out))
        self._logger.info(f'Wrote {self.arguments.out}')

    def stationary(self) -> str:
        """Distribution csv of the approximate or symmetric law."""
        network = self._network()
        dist = network.stationary(tail_tol=self.arguments.tail_tol,
                                  n_max=self.arguments.n_max,
                                  symmetric=self.arguments.symmetric,
                                  two_sided=self.arguments.two_sided)
        self.notes['truncation_tail_mass'] = dist.truncation_tail_mass
        self.notes.update({key: value for key, value in dist.metadata.items() if key in ('n_min', 'n_max')})
        return dist.to_csv()

    def balance(self) -> str:
        """Balance csv over the grid, or the series ratio csv."""
        network = self._network()
        if self.arguments.grid < 0:
            raise ConfigurationError(f'--grid must be non negative, got {self.arguments.grid}')
        if self.arguments.ratios:
            return ratio_csv(network.rates, self.arguments.grid)
        return balance_csv(network.balance(self.arguments.grid))

    def simulate(self) -> str:
        """Occupation csv of one or more merged replicas."""
        network = self._network()
        arguments = self.arguments
        max_events = arguments.max_events
        if arguments.t_max is None and max_events is None:
            max_events = DEFAULT_MAX_EVENTS
        initial = arguments.initial if arguments.initial is not None else [0] * network.rates.d
        cfg = SimConfig(initial=initial, seed=arguments.seed, t_max=arguments.t_max,
                        max_events=max_events, burn_in=arguments.burn_in)
        occupation = network.simulate(cfg, replicas=arguments.replicas, workers=arguments.workers)
        self.seed = cfg.seed
        self.notes.update({'replicas': arguments.replicas,
                           'events': occupation.events,
                           'total_time': occupation.total_time,
                           'initial': list(cfg.initial),
                           't_max': cfg.t_max,
                           'max_events': cfg.max_events,
                           'burn_in': arguments.burn_in})
        return occupation.to_csv()

    def fixed_point(self) -> str:
        """Json document of the mean field equilibrium."""
        return json.dumps(self._network().fixed_point().to_data(), indent=2) + '\n'

    def exact(self) -> str:
        """Distribution csv of the truncated master equation or of the finite Moran chain."""
        params = load_params_file(self.arguments.config)
        self.params_echo = params.to_data()
        if isinstance(params, MoranParams):
            dist = moran_stationary_exact(params, solver=Solver(self.arguments.solver))
        else:
            network = AutocatalyticNetwork(params)
            self.notes['relabeled'] = network.relabeled
            dist = network.exact(n_max=self.arguments.n_max,
                                 tail_tol=self.arguments.tail_tol,
                                 reflect_policy=ReflectPolicy(self.arguments.reflect_policy),
                                 solver=Solver(self.arguments.solver))
        self.notes['residual'] = dist.metadata.get('residual')
        self.notes['truncation_tail_mass'] = dist.truncation_tail_mass
        return dist.to_csv()

    def compare(self) -> str:
        """Per state difference csv, with the distance and mode report logged and recorded."""
        first = _read_distribution(self.arguments.first)
        second = _read_distribution(self.arguments.second)
        if first.d != second.d:
            raise ConfigurationError(f'Cannot compare laws on {first.d} and {second.d} species')
        distance = tv_distance(first, second)
        report = {'tv_distance': distance,
                  'modes_a': [list(state) for state in distribution_modes(first)[:MODES_REPORTED]],
                  'modes_b': [list(state) for state in distribution_modes(second)[:MODES_REPORTED]]}
        self.params_echo = {'a': self.arguments.first, 'b': self.arguments.second}
        self.notes.update(report)
        sys.stderr.write(json.dumps(report) + '\n')
        return _difference_csv(first, second)

    def regimes(self) -> str:
        """Regime table of every (V, D) pair with the most probable state of the approximate law."""
        kappa_prime = self.arguments.kappa_prime
        if kappa_prime is None and self.arguments.config is not None:
            params = load_params_file(self.arguments.config)
            if not isinstance(params, ScaledParams):
                raise ConfigurationError('The regimes command reads kappa_prime from a scaled parameter file')
            kappa_prime = list(params.kappa_prime)
        if kappa_prime is None:
            raise ConfigurationError('The regimes command needs --kappa-prime or a scaled --config')
        self.params_echo = {'kappa_prime': list(kappa_prime),
                            'volumes': self.arguments.volumes,
                            'flows': self.arguments.flows}
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        header = ['V', 'D', 'DV', 'd', 'regime']
        if len(kappa_prime) == 2:
            header += ['mode_a1', 'mode_a2']
        writer.writerow(header)
        for volume in self.arguments.volumes:
            for flow in self.arguments.flows:
                params = ScaledParams(volume=volume, flow=flow, kappa_prime=tuple(kappa_prime))
                label = regime_classify(params)
                row = [CSV_FLOAT_FORMAT.format(volume), CSV_FLOAT_FORMAT.format(flow),
                       CSV_FLOAT_FORMAT.format(label.dv), label.d, label.value.value]
                if params.d == 2:
                    row += list(lattice_argmax(params, self.arguments.tail_tol))
                writer.writerow(row)
        return buffer.getvalue()

    def run(self):
        """Runs the command, emits its output and then the manifest."""
        handler = getattr(self, self.arguments.command.replace('-', '_'))
        self._emit(handler())
        if self.arguments.out is not None:
            manifest = RunManifest(command=self.arguments.command,
                                   params_echo=self.params_echo,
                                   tool_version=__version__,
                                   outputs=list(self.outputs),
                                   seed=self.seed,
                                   notes=self.notes)
            _write_atomic(f'{self.arguments.out}.manifest.json',
                          json.dumps(manifest.to_data(), indent=2, sort_keys=True) + '\n')


def _read_distribution(path: str) -> Distribution:
    try:
        with open(path, encoding='utf8') as input_file:
            text = input_file.read()
    except OSError as msg:
        raise ConfigurationError(f'Unable to read distribution from {path}: {msg}') from None
    return Distribution.from_csv(text)


def _difference_csv(first: Distribution, second: Distribution) -> str:
    first_probabilities, second_probabilities = first.as_dict(), second.as_dict()
    states = sorted(set(first_probabilities) | set(second_probabilities), key=lambda state: (sum(state), state))
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow([f'a{species + 1}' for species in range(first.d)] + ['n', 'prob_a', 'prob_b', 'diff'])
    for state in states:
        prob_a, prob_b = first_probabilities.get(state, 0.0), second_probabilities.get(state, 0.0)
        writer.writerow(list(state) + [sum(state)] + [CSV_FLOAT_FORMAT.format(value)
                                                      for value in (prob_a, prob_b, prob_a - prob_b)])
    return buffer.getvalue()


def exit_code(error: AutocatlibError) -> int:
    """Process exit code of a library error."""
    return EXIT_CONFIGURATION if isinstance(error, CONFIGURATION_ERRORS) else EXIT_NUMERICAL


def run_command(argv: Optional[List[str]] = None) -> int:
    """Parses the arguments, runs the command and maps errors to exit codes.

    Args:
        argv: The arguments without the program name.

    Returns:
        int: 0 on success, 2 on configuration errors, 3 on numerical validity errors.

    """
    try:
        arguments = get_arguments(argv)
    except ConfigurationError as msg:
        sys.stderr.write(f'autocatlib: error: {msg}\n')
        return EXIT_CONFIGURATION
    except SystemExit as exit_request:
        # --help and --version
        return int(exit_request.code or 0)
    setup_logging(arguments.log_level)
    try:
        Runner(arguments).run()
    except AutocatlibError as msg:
        LOGGER.error(f'{msg.__class__.__name__}: {msg}')
        return exit_code(msg)
    return EXIT_SUCCESS


def main():
    """Console script entry point."""
    raise SystemExit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
