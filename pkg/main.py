#!/usr/bin/env python3
"""
Minimal Period Tool

Computes minimal k-th power periods at every position of a word in O(k n)
and detects special pseudo-powers under an antimorphic involution.
"""

import argparse
import logging
import sys
from functools import partial
from typing import List, Optional, TextIO

# Import our modules
from config import (
    DEFAULT_FORMAT,
    DEFAULT_K,
    DEFAULT_MORPHISM,
    DEFAULT_S,
    LOG_FORMAT,
    LOG_LEVEL,
    OUTPUT_FORMATS,
    validate_config
)
from commands import COMMANDS
from errors import PeriodToolError
from ingest import ingest
from batch_runner import BatchRunner
from output import render
from pseudo import FORMS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3


class PeriodCli:
    """Command line front end that wires parsing, ingestion, work and output."""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        """Initialize the CLI with its output streams."""
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.runner = BatchRunner()
        self.parser = self.create_parser()

    def create_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser with one subcommand per operation."""
        shared = argparse.ArgumentParser(add_help=False)
        source = shared.add_mutually_exclusive_group(required=True)
        source.add_argument('--word', help="Inline word")
        source.add_argument('--input', help="Input file path, '-' for stdin")
        shared.add_argument('--fasta', action='store_true', help="Parse --input as FASTA")
        shared.add_argument('--k', type=int, default=DEFAULT_K, help="Exponent (>= 2)")
        shared.add_argument('--s', type=int, default=DEFAULT_S, help="Periods must be longer than s")
        shared.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT, help="Output format")
        shared.add_argument('--morphism', default=DEFAULT_MORPHISM,
                            help="watson-crick, mirror, or a file of symbol pairs")
        shared.add_argument('--oracle', action='store_true', help="Use the brute-force reference implementation")

        parser = argparse.ArgumentParser(
            prog='periods',
            description="Minimal k-th power periods and special pseudo-powers",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        subparsers = parser.add_subparsers(dest='command', required=True)

        subparsers.add_parser('mp', parents=[shared], help="Minimal period of the whole word")
        for name, description in (('rmp', "Right minimal period array"), ('lmp', "Left minimal period array")):
            sub = subparsers.add_parser(name, parents=[shared], help=description)
            sub.add_argument('--stats', action='store_true', help="Include engine step counters")
        subparsers.add_parser('cmp', parents=[shared], help="Centralized maximal pseudo-palindrome array")
        detect = subparsers.add_parser('detect', parents=[shared], help="Detect a special pseudo-power factor")
        detect.add_argument('--form', choices=FORMS, required=True,
                            help="suffix = x^(k-1)phi(x), prefix = phi(x)x^(k-1), alternating = (x phi(x))^(k/2)")
        subparsers.add_parser('tree', parents=[shared], help="DOT export of the period-annotated suffix tree")
        return parser

    def parse(self, argv: List[str]) -> argparse.Namespace:
        options = self.parser.parse_args(argv)
        if options.k < 2:
            self.parser.error(f"--k must be >= 2 (got {options.k})")
        if options.s < 0:
            self.parser.error(f"--s must be >= 0 (got {options.s})")
        if options.fasta and options.input is None:
            self.parser.error("--fasta needs --input")
        if options.command == 'tree' and options.oracle:
            self.parser.error("--oracle has no brute-force counterpart for tree")
        return options

    def run(self, argv: List[str]) -> int:
        """
        Run one command line.

        Args:
            argv (List[str]): Arguments without the program name

        Returns:
            int: 0 on success, 2 on usage errors, 3 on input/format errors
        """
        try:
            options = self.parse(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_USAGE

        handler = COMMANDS[options.command]
        try:
            records = ingest(word=options.word, path=options.input, fasta=options.fasta)
            results = self.runner.run(partial(handler, options=options), records)
        except PeriodToolError as e:
            logger.error(f"{options.command} failed: {e}")
            self.stderr.write(f"error: {e}\n")
            return EXIT_INPUT
        except OSError as e:
            logger.error(f"Cannot read input: {e}")
            self.stderr.write(f"error: {e}\n")
            return EXIT_INPUT

        self.stdout.write(render(results, options.format))
        logger.info(f"{options.command} finished for {len(results)} record(s)")
        return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main function to run the CLI."""
    validate_config()
    logging.basicConfig(format=LOG_FORMAT, level=LOG_LEVEL, stream=sys.stderr)
    cli = PeriodCli()
    return cli.run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
