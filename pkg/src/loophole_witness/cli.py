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
"""Command line front end.

Run:
loophole-witness state werner --p 0.5
loophole-witness certify --witness phi+ --wm -0.6 --eta 0.3333
loophole-witness --s-convention paper-figure --out fig2.csv surface --figure 2
loophole-witness simulate --state werner:0.9 --observable XX --eta 0.5 --shots 1000000
loophole-witness demo-bound --a-range 2 4.5 11
"""

import argparse
import logging
import sys
from dataclasses import asdict

import numpy as np

from .configuration import CONVENTION_ALIASES, DEFAULT_TOLERANCES, OUTPUT_FORMATS, S_CONVENTIONS, RunConfig
from .io_functions import rows_to_csv_text, save_json, state_to_document, load_state, write_csv
from .linalg_functions import ConvergenceError, kron, min_eigenpair, operator_basis
from .logging_functions import custom_logger
from .loophole_functions import (LOSS_MODELS,
                                 MODES,
                                 SURFACE_HEADER,
                                 DetectorModel,
                                 MeasuredTriple,
                                 WitnessConstants,
                                 certify,
                                 measured_from_true,
                                 simulate_clicks,
                                 surface_grid)
from .state_functions import (BELL_STATES,
                              adjacent_levels_ket,
                              bell,
                              maximally_entangled_ket,
                              ppt_min_eigenvalue,
                              pure_state,
                              rho_b,
                              werner)
from .witness_functions import (apply_extended,
                                choi_map,
                                eval_linear,
                                eval_nonlinear,
                                nonlinear_extend,
                                witness_from_map,
                                witness_from_ppt)

logger = logging.getLogger(__name__)

PRESETS = ("phi+", "bound")

# normalization behind the printed threshold surfaces
FIGURE_S = {"phi+": 0.5, "bound": 0.25}

FIGURE_PRESETS = {1: "phi+", 2: "bound"}

DEMO_HEADER = ("a", "ppt_min_eig", "map_min_eig", "linear_w", "nonlinear_f")

PAULI_INDEX = {"I": 0, "X": 1, "Y": 2, "Z": 3}


def build_preset(name, config):
    """Nonlinear witness and loophole constants of a named preset.

    phi+: partial transpose witness of |phi+> extended with |phi->.
    bound: Choi map witness of (|00>+|11>+|22>)/sqrt(3) extended with (|01>+|10>+|12>+|21>)/2.

    :return: (NonlinearWitness, WitnessConstants).
    """

    if name == "phi+":
        phi, psi = bell("phi+"), bell("phi-")
        linear = witness_from_ppt(phi)
    elif name == "bound":
        phi, psi = maximally_entangled_ket(3), adjacent_levels_ket(3)
        linear = witness_from_map(choi_map(), phi, config.tolerances)
    else:
        raise ValueError("`witness=%s` is not in the presets: %s!" % (str(name), str(PRESETS)))
    witness = nonlinear_extend(linear, phi, psi, config.tolerances)
    constants = WitnessConstants.from_nonlinear(witness, config.s_convention, FIGURE_S[name],
                                                config.tolerances)
    return witness, constants


def parse_state(spec, config):
    """DensityMatrix from 'werner:P', 'bell:NAME', 'rho-b:A' or 'file:PATH'."""
    kind, _, value = spec.partition(":")
    if not value:
        raise ValueError("`state=%s` needs the form kind:value!" % spec)
    if kind == "werner":
        return werner(float(value))
    if kind == "bell":
        return pure_state(bell(value))
    if kind == "rho-b":
        return rho_b(float(value))
    if kind == "file":
        return load_state(value, config.tolerances)
    raise ValueError("state kind `%s` is not one of: werner, bell, rho-b, file!" % kind)


def parse_observable(spec):
    """Two-party observable from a Pauli string ('XX', 'ZZ', 'XY') or 'gm:i,j' Gell-Mann indices."""
    if spec.startswith("gm:"):
        first, second = (int(index) for index in spec[3:].split(","))
        elements = operator_basis(3).elements
        if not (0 <= first < len(elements) and 0 <= second < len(elements)):
            raise ValueError("Gell-Mann indices need to be in [0, 8], got %s!" % spec)
        return kron(elements[first], elements[second])
    if len(spec) != 2 or any(letter not in PAULI_INDEX for letter in spec.upper()):
        raise ValueError("`observable=%s` needs two Pauli letters from IXYZ or gm:i,j!" % spec)
    elements = operator_basis(2).elements
    return kron(elements[PAULI_INDEX[spec[0].upper()]], elements[PAULI_INDEX[spec[1].upper()]])


def emit_rows(rows, header, config, metadata):
    """Write rows to `config.out` in the configured format, or print them as CSV."""
    if config.out is None:
        # console output keeps the metadata header
        print(rows_to_csv_text(rows, header, metadata))
        return None
    if config.output_format == "json":
        path = save_json({"metadata": metadata, "header": list(header), "rows": rows}, config.out)
    else:
        path = write_csv(rows, header, config.out, metadata)
    logger.info("wrote %d rows to %s", len(rows), path)
    return path


def cmd_state(args, config):
    if args.kind == "bell":
        state = pure_state(bell(args.which))
    elif args.kind == "werner":
        state = werner(args.p)
    elif args.kind == "rho-b":
        state = rho_b(args.a)
    else:
        if args.path is None:
            raise ValueError("`--path` is needed for file states!")
        state = load_state(args.path, config.tolerances)

    report = {"dims": list(state.dims),
              "trace": float(np.trace(state.matrix).real),
              "min_eigenvalue": state.min_eigenvalue(config.tolerances),
              "ppt_min_eigenvalue": ppt_min_eigenvalue(state, config.tolerances),
              "rank": state.rank(config.tolerances)}
    if state.dims == (3, 3):
        # qutrit states also get the Choi map spectrum
        report["map_min_eigenvalue"], _ = min_eigenpair(apply_extended(choi_map(), state), config.tolerances)

    for key, value in report.items():
        print("%s: %s" % (key, str(value)))
    if config.out is not None:
        metadata = dict(config.metadata(), report=report)
        path = save_json(state_to_document(state, metadata), config.out)
        logger.info("state saved to %s", path)
    return report


def cmd_certify(args, config):
    _, constants = build_preset(args.witness, config)
    triple = MeasuredTriple(w_m=args.wm, h_m=args.hm, a_m=args.am)
    det = DetectorModel(eta_minus=args.eta)
    result = certify(triple, constants, det, mode=args.mode, guard_band=args.guard_band)

    print("verdict: %s" % result.verdict)
    print("threshold: %r" % result.threshold)
    print("margin: %r" % result.margin)
    print("constants: c00=%r s=%r certified_s=%r c0h=%r c0a=%r convention=%s"
          % (constants.c00, constants.s, constants.certified_s, constants.c0h, constants.c0a, constants.convention))
    if config.out is not None:
        document = dict(config.metadata(), certification=result.to_document(),
                        constants=asdict(constants), witness=args.witness, eta_minus=args.eta)
        save_json(document, config.out)
    return result


def cmd_surface(args, config):
    preset = FIGURE_PRESETS[args.figure]
    _, constants = build_preset(preset, config)
    rows = surface_grid(constants, args.eta_range, args.xnl_range, mode=args.mode)
    metadata = dict(config.metadata(), figure=args.figure, witness=preset, c00=constants.c00, s=constants.s,
                    separable_s=constants.separable_s)
    emit_rows(rows, SURFACE_HEADER, config, metadata)
    return rows


def cmd_simulate(args, config):
    state = parse_state(args.state, config)
    observable = parse_observable(args.observable)
    det = DetectorModel(eta_minus=args.eta)
    record, mean = simulate_clicks(state, observable, args.shots, det, seed=config.seed,
                                   loss_model=args.loss_model, tol=config.tolerances)

    # ideal value the detector model is compared to
    true_value = state.expectation(observable).real
    # the bernoulli model keeps the unbiased mean of surviving clicks
    analytic = measured_from_true(true_value, 0.0, det) if args.loss_model == "equal-count" else true_value
    z_score = (mean - analytic) / record.standard_error if record.standard_error > 0 else 0.0

    report = dict(record.to_document(), analytic=analytic, true_value=true_value, z_score=z_score)
    for key in ("loss_model", "total_true", "total_detected", "nominal_loss", "deficit",
                "eta_nominal", "eta_realized", "mean", "standard_error", "analytic", "z_score"):
        print("%s: %r" % (key, report[key]))
    if config.out is not None:
        save_json(dict(config.metadata(), simulation=report, state=args.state, observable=args.observable),
                  config.out)
    return report


def cmd_demo_bound(args, config):
    lo, hi, _ = args.a_range
    if lo < 0 or hi > 5:
        raise ValueError("`a_range` needs to lie in [0, 5]!")
    witness, _ = build_preset("bound", config)
    positive_map = witness.linear.positive_map
    rows = []
    # one row per point of the scan
    for a in np.linspace(*args.a_range[:2], int(args.a_range[2])):
        state = rho_b(float(a))
        map_min, _ = min_eigenpair(apply_extended(positive_map, state), config.tolerances)
        rows.append({"a": float(a),
                     "ppt_min_eig": ppt_min_eigenvalue(state, config.tolerances),
                     "map_min_eig": float(map_min),
                     "linear_w": eval_linear(witness.linear, state, config.tolerances),
                     "nonlinear_f": eval_nonlinear(witness, state, tol=config.tolerances)})
    metadata = dict(config.metadata(), witness="bound", nonlinear_s=witness.s)
    emit_rows(rows, DEMO_HEADER, config, metadata)
    return rows


def build_parser():
    parser = argparse.ArgumentParser(prog="loophole-witness",
                                     description='Entanglement witnesses under lost-event detector inefficiency.')
    parser.add_argument('--seed', help='seed of every random generator.', default=0, type=int)
    parser.add_argument('--tol', help='factor applied to the default numerical tolerances.', default=1.0, type=float)
    parser.add_argument('--s-convention', help='nonlinear normalization: %s.' % ", ".join(S_CONVENTIONS),
                        default='schmidt', choices=S_CONVENTIONS + tuple(CONVENTION_ALIASES))
    parser.add_argument('--out', help='output file; printed to console when missing.', default=None, type=str)
    parser.add_argument('--format', help='table output format.', default='csv', choices=OUTPUT_FORMATS)
    parser.add_argument('--log-file', help='also append log records to this file.', default=None, type=str)
    parser.add_argument('--verbose', help='debug level logging.', action='store_true')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    state = commands.add_parser('state', help='build a state and report its spectrum.')
    state.add_argument('kind', choices=('bell', 'werner', 'rho-b', 'file'))
    state.add_argument('--which', help='Bell state name.', default='phi+', choices=BELL_STATES)
    state.add_argument('--p', help='Werner mixing parameter in [0, 1].', default=0.5, type=float)
    state.add_argument('--a', help='rho-b parameter in [0, 5].', default=3.5, type=float)
    state.add_argument('--path', help='JSON matrix document for file states.', default=None, type=str)
    state.set_defaults(handler=cmd_state)

    certify_parser = commands.add_parser('certify', help='certify measured witness values.')
    certify_parser.add_argument('--witness', help='preset witness.', required=True, choices=PRESETS)
    certify_parser.add_argument('--wm', help='measured linear witness value.', required=True, type=float)
    certify_parser.add_argument('--hm', help='measured <H>.', default=0.0, type=float)
    certify_parser.add_argument('--am', help='measured <A>.', default=0.0, type=float)
    certify_parser.add_argument('--eta', help='lost-event efficiency in (0, 1].', required=True, type=float)
    certify_parser.add_argument('--mode', default='linear', choices=MODES)
    certify_parser.add_argument('--guard-band', help='margin subtracted from the threshold.', default=0.0,
                                type=float)
    certify_parser.set_defaults(handler=cmd_certify)

    surface = commands.add_parser('surface', help='threshold surface of figure 1 or 2 as a table.')
    surface.add_argument('--figure', required=True, type=int, choices=sorted(FIGURE_PRESETS))
    surface.add_argument('--eta-range', help='lo hi steps.', nargs=3, type=float, default=[0.1, 1.0, 10])
    surface.add_argument('--xnl-range', help='lo hi steps.', nargs=3, type=float, default=[0.0, 1.0, 11])
    surface.add_argument('--mode', default='nonlinear', choices=MODES)
    surface.set_defaults(handler=cmd_surface)

    simulate = commands.add_parser('simulate', help='Monte Carlo of lossy eigenvalue clicks.')
    simulate.add_argument('--state', help="'werner:P', 'bell:NAME', 'rho-b:A' or 'file:PATH'.", required=True)
    simulate.add_argument('--observable', help="Pauli pair such as 'XX' or 'gm:i,j'.", required=True)
    simulate.add_argument('--shots', default=1000000, type=int)
    simulate.add_argument('--eta', help='lost-event efficiency in (0, 1].', default=1.0, type=float)
    simulate.add_argument('--loss-model', default='equal-count', choices=LOSS_MODELS)
    simulate.set_defaults(handler=cmd_simulate)

    demo = commands.add_parser('demo-bound', help='bound entangled family scan.')
    demo.add_argument('--a-range', help='lo hi steps.', nargs=3, type=float, default=[2.0, 4.5, 11])
    demo.set_defaults(handler=cmd_demo_bound)
    return parser


def main(argv=None):
    """Parse arguments, run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        # an unwritable log file is an I/O error like any other
        custom_logger(file_log=args.log_file, level=logging.DEBUG if args.verbose else logging.INFO)
        config = RunConfig(tolerances=DEFAULT_TOLERANCES.scaled(args.tol), s_convention=args.s_convention,
                           seed=args.seed, out=args.out, output_format=args.format,
                           log_file=args.log_file, verbose=args.verbose)
        args.handler(args, config)
    except ValueError as error:
        logger.error("precondition failed: %s", error)
        return 2
    except (OSError, ConvergenceError) as error:
        logger.error("%s", error)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
