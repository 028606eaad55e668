#!/usr/bin/env python3
"""
sausage-lab
Main entry point for the command-line application
"""

import argparse
import logging
import sys

from dotenv import load_dotenv

from src.cli.coeffs import cmd_coeffs
from src.cli.config import EXPERIMENTS, build_config
from src.cli.experiments import cmd_experiment
from src.cli.output import run_directory, write_summary, write_table
from src.cli.verify import cmd_verify_1d, format_report
from src.errors import SausageLabError, UsageError

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 3
EXIT_PARTIAL = 4


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as exceptions"""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common_options(parser):
    parser.add_argument('--config', help='Config file with one "key = value" per line (flags win)')
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='Logging level (default: WARNING)')
    parser.add_argument('--output-dir', help='Directory for tables and summaries '
                        '(default: $SAUSAGE_LAB_OUTPUT_DIR or ./runs)')
    parser.add_argument('--output-format', choices=['csv', 'json'],
                        help='Table format (default: csv)')
    parser.add_argument('--quiet', action='store_true', default=None,
                        help='Suppress progress bars')
    parser.add_argument('--k', help='k values: "2", "1..10" or "1,3,5"')
    parser.add_argument('--j', help='Orders j: "2", "0..2" or "1,2"')
    parser.add_argument('--body', help='Body: ball:<m>:<r>, disk, circle:<r>, ellipse:<a>:<b> or curve:<path>')
    parser.add_argument('--orientation', choices=['inward', 'outward'],
                        help='Normal used for the total curvature (default: inward)')


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = ArgumentParser(
        prog='sausage-lab',
        description='Small-time coefficients of Wiener sausage volumes and heat kernel norms',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    coeffs = subparsers.add_parser('coeffs', help='Print and export a coefficient table')
    _common_options(coeffs)
    coeffs.add_argument('--family', choices=['alpha', 'c', 'a', 'b'], default=None,
                        help='Coefficient family (default: alpha)')
    coeffs.add_argument('--normalization', choices=['as_printed', 'per_proof'],
                        help='Constants for the b family (default: both side by side)')

    verify = subparsers.add_parser('verify-1d', help='Check the binomial transform between c and a')
    _common_options(verify)
    verify.add_argument('--k-max', type=int, help='Largest k checked, at most 12 (default: 8)')

    experiment = subparsers.add_parser('experiment', help='Run an oracle or Monte Carlo experiment')
    experiment.add_argument('experiment', choices=EXPERIMENTS, help='Experiment name')
    _common_options(experiment)
    experiment.add_argument('--m', type=int, help='Dimension for the Monte Carlo experiments')
    experiment.add_argument('--tgrid', help='Times "lo:hi:n" (geometric) or "t1,t2,..." for fits')
    experiment.add_argument('--t', help='Times for Monte Carlo runs, "t" or "t1,t2"')
    experiment.add_argument('--j-max', type=int, help='Highest power index of the fit')
    experiment.add_argument('--seed', type=int, help='Monte Carlo seed (default: 0)')
    experiment.add_argument('--replicas', type=int, help='Monte Carlo replicas (default: 64)')
    experiment.add_argument('--steps', type=int, help='Segments per path (default: 256)')
    experiment.add_argument('--points', type=int, help='Sample points per replica (default: 4096)')
    experiment.add_argument('--mode', choices=['polyline', 'bridge_corrected'],
                            help='Sausage coverage rule (default: polyline)')
    experiment.add_argument('--stratified', action='store_true', default=None,
                            help='One sample point per cell of a coarse grid')
    experiment.add_argument('--threads', type=int,
                            help='Worker threads (default: $SAUSAGE_LAB_THREADS or 1)')
    experiment.add_argument('--time-budget', type=float,
                            help='Seconds per Monte Carlo estimate before stopping early')
    experiment.add_argument('--tolerance', type=float, help='Quadrature tolerance (default: 1e-13)')
    experiment.add_argument('--eps-exponent', type=float,
                            help='Boundary-layer cutoff t^eps with eps in (0.4, 0.5)')
    return parser.parse_args(argv)


def run(config):
    """
    Execute one configured command and write its outputs

    Args:
        config (RunConfig): Validated configuration

    Returns:
        int: Exit code
    """
    if config.command == 'coeffs':
        frame, passed = cmd_coeffs(config)
        directory = run_directory(config, 'coeffs')
        print(frame.to_string(index=False))
        path = write_table(frame, directory, f"coeffs_{config.family or 'alpha'}", config.output_format)
        write_summary(config, directory, frame.to_dict(orient='records'), passed)
        print(f"Coefficient table saved to '{path}'")
        return EXIT_PASS

    if config.command == 'verify-1d':
        report, passed = cmd_verify_1d(config)
        directory = run_directory(config, 'verify-1d')
        for line in format_report(report):
            print(line)
        write_summary(config, directory, [report], passed)
        return EXIT_PASS if passed else EXIT_CHECK_FAILED

    if config.experiment is None:
        raise UsageError("experiment name is required")
    print(f"Running experiment {config.experiment}...")
    result = cmd_experiment(config)
    directory = run_directory(config, config.experiment)
    for name, frame in result.tables.items():
        write_table(frame, directory, name, 'json' if name == 'mc' else config.output_format)
    summary = write_summary(config, directory, result.records, result.passed)
    for record in result.records:
        status = "PASS" if record.get('passed') else "FAIL"
        label = record.get('check')
        detail = f" k={record['k']}" if 'k' in record else ""
        detail += f" t={record['t']:g}" if 't' in record else ""
        print(f"  {label}{detail}: {status}")
    print(f"Summary saved to '{summary}'")
    if result.partial:
        return EXIT_PARTIAL
    return EXIT_PASS if result.passed else EXIT_CHECK_FAILED


def main(argv=None):
    """Main entry point for the application"""
    # Load environment variables
    load_dotenv()

    try:
        args = parse_arguments(argv)
        logging.basicConfig(level=getattr(logging, args.log_level),
                            format='%(asctime)s %(name)s %(levelname)s: %(message)s')
        config = build_config(vars(args))
        return run(config)
    except UsageError as e:
        print(f"Error: {str(e)}")
        return EXIT_USAGE
    except SausageLabError as e:
        print(f"Error: {str(e)}")
        return EXIT_PARTIAL if isinstance(e, RuntimeError) else EXIT_ERROR
    except Exception as e:
        print(f"Error: {str(e)}")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
