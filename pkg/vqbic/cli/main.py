"""
    main
    ====

    Command-line entry point of `vqbic`.

        vqbic synth OUT_DIR
        vqbic extract WAV SEGMENTS OUT_DIR
        vqbic cluster FEATURES_DIR [--output DIR]
        vqbic eval ASSIGNMENT REFERENCE [--features DIR]

    Exit codes: 0 on success, 1 on invalid input or configuration,
    2 on I/O failure.

    License
    -------

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

from __future__ import annotations
import argparse
import logging
import sys
import typing

from . import commands
from . import config
from .. import errors

__all__ = [
    'EXIT_IO',
    'EXIT_OK',
    'EXIT_VALIDATION',
    'ArgumentParser',
    'build_parser',
    'main',
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
Argv = typing.Optional[typing.Sequence[str]]

# PARSER


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with `EXIT_VALIDATION`."""

    def error(self, message: str) -> typing.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f'{self.prog}: error: {message}\n')


def common_options() -> argparse.ArgumentParser:
    """
    Options shared by every subcommand.

    Configuration flags are kept as text and coerced by `RunConfig`.
    """

    parser = ArgumentParser(add_help=False)
    parser.add_argument('--config', metavar='PATH', help='key = value configuration file')
    parser.add_argument('--seed', help='random seed (codebook and synthesis)')
    parser.add_argument('--mode', help='clustering mode: baseline or two-stage')
    parser.add_argument('--n-best', dest='n_best', help='fast-match shortlist size N')
    parser.add_argument('--lambda', dest='lambda_', help='BIC penalty weight, or auto')
    parser.add_argument('--threads', help='worker cap, 0 for one per CPU')
    parser.add_argument(
        '--set',
        action='append',
        metavar='KEY=VALUE',
        help='override any configuration key (repeatable)',
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='log warnings and errors only')
    return parser


def build_parser() -> argparse.ArgumentParser:
    parent = common_options()
    parser = ArgumentParser(
        prog='vqbic',
        description='Speaker indexing by VQ fast-match and BIC agglomerative clustering.',
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    synth = subparsers.add_parser('synth', parents=[parent], help='generate a synthetic feature set')
    synth.add_argument('out_dir', help='output directory')

    extract = subparsers.add_parser('extract', parents=[parent], help='extract MFCC features from a WAV file')
    extract.add_argument('wav', help='16 kHz 16-bit PCM WAV file')
    extract.add_argument('segments', help='segment list "<id> <start_s> <end_s> [speaker]"')
    extract.add_argument('out_dir', help='output directory')

    cluster = subparsers.add_parser('cluster', parents=[parent], help='cluster a feature directory')
    cluster.add_argument('features_dir', help='directory of seg_<id>.fea files')
    cluster.add_argument('--output', metavar='DIR', help='output directory, defaults to FEATURES_DIR')

    evaluate = subparsers.add_parser('eval', parents=[parent], help='score an assignment by purity')
    evaluate.add_argument('assignment', help='assignment file "<segment_id> <cluster_id>"')
    evaluate.add_argument('reference', help='reference segment list with speaker labels')
    evaluate.add_argument('--features', metavar='DIR', help='feature directory for exact frame counts')

    return parser


def configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


# DISPATCH


def run(args: argparse.Namespace) -> None:
    cfg = config.resolve_config(args)
    if args.command == 'synth':
        paths = commands.cmd_synth(cfg.synth, args.out_dir)
        print(f'wrote {len(paths)} files to {args.out_dir}')
    elif args.command == 'extract':
        paths = commands.cmd_extract(
            args.wav,
            args.segments,
            cfg.features,
            args.out_dir,
            cfg.clustering.threads,
        )
        print(f'wrote {len(paths)} files to {args.out_dir}')
    elif args.command == 'cluster':
        report = commands.cmd_cluster(args.features_dir, cfg.clustering, args.output)
        record = report.to_record()
        print(f'clusters = {record["n_clusters"]}')
        print(f'lambda = {record["lambda"]}')
        print(f'bic_evals = {record["bic_evals"]}')
    else:
        print(commands.cmd_eval(args.assignment, args.reference, args.features).to_text(), end='')


def main(argv: Argv = None) -> int:
    """
    Run the command line.

    :param argv: (Optional) arguments, defaults to `sys.argv[1:]`.
    :return: Process exit code.
    """

    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        run(args)
    except errors.ValidationError as error:
        logger.error('%s', error)
        return EXIT_VALIDATION
    except OSError as error:
        # IoError, or an unexpected filesystem failure.
        logger.error('%s', error)
        return EXIT_IO
    return EXIT_OK
