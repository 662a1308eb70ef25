#!/usr/bin/env python3

# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

from __future__ import annotations

import io
import sys
import csv
import json
import argparse
import logging

import dotenv
from colorama import Fore, Style # type: ignore[import]

from fibercover.internal_types import *
from fibercover import (
    __version__ as pkg_version,
    DEFAULT_SCAN_WINDOW,
    FiberCoverConfig,
    FiberCoverError,
    MalformedCertificateError,
    SlopeError,
    WordSyntaxError,
    atomic_write_text,
  )
from fibercover.pkg_logging import configure_logging
from fibercover.word_algebra import TwistWord, parse_twist_word
from fibercover.slope_calculus import (
    Slope,
    fig8_exception_scan,
    thm12_exception_scan,
    sister_exception_scan,
    pell_family,
  )
from fibercover.quotient_factory import triangle_quotient
from fibercover.homology_engine import IntMatrix, smith_normal_form
from fibercover.certifier import (
    Certificate,
    CertificateStatus,
    CSV_HEADER,
    certify,
    scan,
    scan_summary,
    verify_certificate,
  )

INPUT_ERRORS = (WordSyntaxError, SlopeError, MalformedCertificateError)
"""Errors caused by malformed user input; these exit with code 2."""

STATUS_COLORS: Dict[str, str] = {
    CertificateStatus.CERTIFIED.value: Fore.GREEN,
    CertificateStatus.HYPOTHESIS_FAILS.value: Fore.YELLOW,
    CertificateStatus.SEARCH_EXHAUSTED.value: Fore.CYAN,
    CertificateStatus.DEGENERATE.value: Fore.RED,
  }

class CmdExitError(RuntimeError):
    exit_code: int

    def __init__(self, exit_code: int, msg: Optional[str]=None):
        if msg is None:
            msg = f"Command exited with return code {exit_code}"
        super().__init__(msg)
        self.exit_code = exit_code

class ArgparseExitError(CmdExitError):
    pass

class NoExitArgumentParser(argparse.ArgumentParser):
    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise ArgparseExitError(status, message)

def csv_text(rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()

class CommandHandler:
    _argv: Optional[Sequence[str]]
    _parser: argparse.ArgumentParser
    _args: argparse.Namespace
    _provide_traceback: bool = True

    def __init__(self, argv: Optional[Sequence[str]]=None):
        self._argv = argv

    def get_config(self) -> FiberCoverConfig:
        config_file: Optional[str] = getattr(self._args, 'config_file', None)
        base_config = None if config_file is None else FiberCoverConfig.from_config_file(config_file)
        return FiberCoverConfig(
            degree_cap=getattr(self._args, 'degree_cap', None),
            index_cap=getattr(self._args, 'index_cap', None),
            node_budget=getattr(self._args, 'node_budget', None),
            witness_attempts=getattr(self._args, 'witness_attempts', None),
            group_order_cap=getattr(self._args, 'group_order_cap', None),
            use_swapped_invariants=False if getattr(self._args, 'no_swapped', False) else None,
            use_framing_transforms=False if getattr(self._args, 'no_framing', False) else None,
            base_config=base_config,
          )

    def get_word(self) -> TwistWord:
        return parse_twist_word(self._args.word)

    def get_slope(self) -> Slope:
        return Slope(self._args.mu, self._args.lam)

    def emit(self, text: str) -> None:
        """Write command output to --out atomically, or to stdout."""
        if not text.endswith('\n'):
            text += '\n'
        out: Optional[str] = getattr(self._args, 'out', None)
        if out is None:
            sys.stdout.write(text)
        else:
            atomic_write_text(out, text)

    def emit_json(self, data: Jsonable) -> None:
        self.emit(json.dumps(data, indent=2))

    def status_text(self, status: str) -> str:
        if getattr(self._args, 'out', None) is not None or not sys.stdout.isatty():
            return status
        return f"{STATUS_COLORS.get(status, '')}{status}{Style.RESET_ALL}"

    def cmd_bare(self) -> int:
        print("A command is required", file=sys.stderr)
        return 1

    def cmd_certify(self) -> int:
        cert = certify(self.get_word(), self.get_slope(), self.get_config())
        fmt: str = self._args.format
        if fmt == 'csv':
            self.emit(csv_text([cert.csv_row()]))
        elif fmt == 'text':
            self.emit(f"{cert.word.to_text()} {cert.slope}: {self.status_text(cert.status.value)} {cert.reason}")
        else:
            self.emit_json(cert.to_jsonable())
        return 0

    def cmd_scan(self) -> int:
        word = self.get_word()
        window: int = self._args.window
        if window < 1:
            raise CmdExitError(2, f"--window must be >= 1, got {window}")
        certs = scan(word, window, self.get_config(), workers=self._args.workers)
        summary = scan_summary(certs)
        fmt: str = self._args.format
        if fmt == 'csv':
            self.emit(csv_text(c.csv_row() for c in certs))
        elif fmt == 'text':
            lines = [
                f"{c.slope.mu:>5} {c.slope.lam:>5}  {self.status_text(c.status.value):<16}  "
                f"{'' if c.case_tag is None else c.case_tag:<9} {'' if c.degree is None else c.degree:>6} "
                f"{'' if c.b1 is None else c.b1:>4}"
                for c in certs
              ]
            lines.append(", ".join(f"{k}: {v}" for k, v in summary.items()))
            self.emit('\n'.join(lines))
        else:
            self.emit_json(dict(
                word=word.to_text(),
                window=window,
                summary=summary,
                certificates=[c.to_jsonable() for c in certs],
              ))
        return 0

    def load_certificates(self, filename: str) -> List[Jsonable]:
        try:
            if filename == '-':
                data = json.load(sys.stdin)
            else:
                with open(filename, 'r') as f:
                    data = json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedCertificateError(f"{filename}: not valid JSON: {e}") from e
        # a scan document, a list of certificates or a single certificate
        if isinstance(data, dict) and 'certificates' in data:
            return list(cast(List[Jsonable], data['certificates']))
        if isinstance(data, list):
            return list(data)
        return [data]

    def cmd_verify(self) -> int:
        results: List[JsonableDict] = []
        all_ok = True
        for filename in self._args.certificate_files:
            for data in self.load_certificates(filename):
                cert = Certificate.from_jsonable(data)
                ok = verify_certificate(cert)
                all_ok = all_ok and ok
                results.append(dict(
                    file=filename,
                    word=cert.word.to_text(),
                    slope=cert.slope.to_jsonable(),
                    status=cert.status.value,
                    verified=ok,
                  ))
        self.emit_json(results)
        return 0 if all_ok else 1

    def cmd_quotient(self) -> int:
        p, q, r = self._args.orders
        config = self.get_config()
        witness = triangle_quotient(p, q, r, config.degree_cap, node_budget=config.node_budget)
        self.emit_json(witness.to_jsonable())
        return 0

    def cmd_snf(self) -> int:
        text: str = self._args.matrix
        if text == '-':
            text = sys.stdin.read()
        try:
            raw = json.loads(text)
            if not isinstance(raw, list) or len(raw) == 0 or not all(isinstance(row, list) for row in raw):
                raise ValueError("expected a nonempty JSON list of rows")
            if not all(isinstance(v, int) and not isinstance(v, bool) for row in raw for v in row):
                raise ValueError("entries must be integers")
            matrix = IntMatrix(raw)
        except (ValueError, FiberCoverError) as e:
            raise CmdExitError(2, f"Invalid matrix: {e}") from e
        snf = smith_normal_form(matrix)
        self.emit_json(dict(
            shape=list(snf.shape),
            diagonal=snf.diagonal,
            rank=snf.rank,
            torsion=snf.torsion(),
            cokernel_rank=snf.cokernel_rank(),
          ))
        return 0

    def cmd_exceptions(self) -> int:
        which: str = self._args.which
        window: int = self._args.window
        if which == 'pell':
            slopes = pell_family(window)
        elif which == 'fig8':
            slopes = sorted(fig8_exception_scan(window))
        elif which == 'thm12':
            slopes = sorted(thm12_exception_scan(window))
        else:
            slopes = sorted(sister_exception_scan(window))
        self.emit_json(dict(scan=which, window=window, slopes=[s.to_jsonable() for s in slopes]))
        return 0

    def cmd_version(self) -> int:
        print(pkg_version)
        return 0

    def add_word_slope_args(self, parser: argparse.ArgumentParser, *, slope: bool=True) -> None:
        parser.add_argument('-w', '--word', required=True,
                            help='''The monodromy word, e.g. "Dx Dy^4" or "(Dx Dy)^18".''')
        if slope:
            parser.add_argument('--mu', type=int, required=True,
                                help='''Meridian exponent of the filling slope.''')
            parser.add_argument('--lambda', dest='lam', type=int, required=True,
                                help='''Longitude exponent of the filling slope.''')

    def add_config_args(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument('--config', dest='config_file', default=None,
                            help='''A JSON config file. Default: env var FIBERCOVER_CONFIG_FILE, if set.''')
        parser.add_argument('--degree-cap', dest='degree_cap', type=int, default=None,
                            help='''Maximum permutation degree for quotient searches.''')
        parser.add_argument('--index-cap', dest='index_cap', type=int, default=None,
                            help='''Maximum index for the low-index fallback. 0 disables it.''')
        parser.add_argument('--node-budget', dest='node_budget', type=int, default=None,
                            help='''Maximum backtracking nodes per search.''')
        parser.add_argument('--witness-attempts', dest='witness_attempts', type=int, default=None,
                            help='''Covers tried per case plan.''')
        parser.add_argument('--group-order-cap', dest='group_order_cap', type=int, default=None,
                            help='''Largest quotient group used to build a cover; its degree is rows times the group order.''')
        parser.add_argument('--no-swapped', dest='no_swapped', action='store_true', default=False,
                            help='''Do not try the invariants with the twists exchanged.''')
        parser.add_argument('--no-framing', dest='no_framing', action='store_true', default=False,
                            help='''Do not try the built-in framing transforms.''')

    def add_output_args(self, parser: argparse.ArgumentParser, *, formats: Sequence[str]=('json',)) -> None:
        if len(formats) > 1:
            parser.add_argument('--format', default=formats[0], choices=list(formats),
                                help=f'''Output format. Default: {formats[0]}''')
        parser.add_argument('--out', default=None,
                            help='''Write output to this file (atomically) instead of stdout.''')

    def run(self) -> int:
        """Run the fibercover command-line tool with provided arguments

        Args:
            argv (Optional[Sequence[str]], optional):
                A list of commandline arguments (NOT including the program as argv[0]!),
                or None to use sys.argv[1:]. Defaults to None.

        Returns:
            int: The exit code that would be returned if this were run as a standalone command.
        """
        parser = NoExitArgumentParser(description="Certify virtual Z-representability of Dehn fillings of punctured-torus bundles.")

        # ======================= Main command

        self._parser = parser
        parser.add_argument('--traceback', "--tb", action='store_true', default=False,
                            help='Display detailed exception information')
        parser.add_argument('--log-level', dest='log_level', default='warning',
                            choices=['debug', 'info', 'warning', 'error', 'critical'],
                            help='''The logging level to use. Default: warning''')
        parser.set_defaults(func=self.cmd_bare)

        subparsers = parser.add_subparsers(
                            title='Commands',
                            description='Valid commands',
                            help='Additional help available with "<command-name> -h"')

        # ======================= certify

        parser_certify = subparsers.add_parser('certify', description="Certify one filling M_h(mu, lambda).")
        self.add_word_slope_args(parser_certify)
        self.add_config_args(parser_certify)
        self.add_output_args(parser_certify, formats=('json', 'csv', 'text'))
        parser_certify.set_defaults(func=self.cmd_certify)

        # ======================= scan

        parser_scan = subparsers.add_parser('scan', description="Certify every slope with |mu|, |lambda| <= window.")
        self.add_word_slope_args(parser_scan, slope=False)
        parser_scan.add_argument('--window', type=int, default=DEFAULT_SCAN_WINDOW,
                            help=f'''Slope window. Default: {DEFAULT_SCAN_WINDOW}''')
        parser_scan.add_argument('--workers', type=int, default=1,
                            help='''Worker processes. Default: 1''')
        self.add_config_args(parser_scan)
        self.add_output_args(parser_scan, formats=('json', 'csv', 'text'))
        parser_scan.set_defaults(func=self.cmd_scan)

        # ======================= verify

        parser_verify = subparsers.add_parser('verify', description="Re-verify certificates offline. Exits 1 if any fails.")
        parser_verify.add_argument('certificate_files', nargs='+', metavar='FILE',
                            help='''Certificate, certificate list or scan output files; "-" for stdin.''')
        self.add_output_args(parser_verify)
        parser_verify.set_defaults(func=self.cmd_verify)

        # ======================= quotient

        parser_quotient = subparsers.add_parser('quotient', description="Find a finite quotient of the (p, q, r) triangle group with exact orders.")
        parser_quotient.add_argument('orders', nargs=3, type=int, metavar='ORDER',
                            help='''The orders p, q, r of a, b and ab.''')
        self.add_config_args(parser_quotient)
        self.add_output_args(parser_quotient)
        parser_quotient.set_defaults(func=self.cmd_quotient)

        # ======================= snf

        parser_snf = subparsers.add_parser('snf', description="Smith normal form of an integer matrix.")
        parser_snf.add_argument('matrix',
                            help='''The matrix as a JSON list of rows, or "-" to read it from stdin.''')
        self.add_output_args(parser_snf)
        parser_snf.set_defaults(func=self.cmd_snf)

        # ======================= exceptions

        parser_exceptions = subparsers.add_parser('exceptions', description="Inequality-only exception scans, and the Pell family.")
        parser_exceptions.add_argument('which', choices=['fig8', 'thm12', 'sister', 'pell'],
                            help='''fig8: odd figure-eight fillings; thm12: (Dx Dy)^18 fillings; sister: -Dx Dy fillings; pell: the first WINDOW Pell slopes.''')
        parser_exceptions.add_argument('--window', type=int, default=DEFAULT_SCAN_WINDOW,
                            help=f'''Slope window, or the Pell family length. Default: {DEFAULT_SCAN_WINDOW}''')
        self.add_output_args(parser_exceptions)
        parser_exceptions.set_defaults(func=self.cmd_exceptions)

        # ======================= version

        parser_version = subparsers.add_parser('version',
                                description='''Display version information.''')
        parser_version.set_defaults(func=self.cmd_version)

        # =========================================================

        try:
            args = parser.parse_args(self._argv)
        except ArgparseExitError as ex:
            return ex.exit_code
        traceback: bool = args.traceback
        self._provide_traceback = traceback

        try:
            configure_logging(args.log_level)
            self._args = args
            func: Callable[[], int] = args.func
            logging.debug(f"Running command {func.__name__}, tb = {traceback}")
            rc = func()
            logging.debug(f"Command {func.__name__} returned {rc}")
        except Exception as ex:
            if isinstance(ex, CmdExitError):
                rc = ex.exit_code
            elif isinstance(ex, INPUT_ERRORS):
                rc = 2
            else:
                rc = 1
            if rc != 0:
                if traceback:
                    raise
            ex_desc = str(ex)
            if len(ex_desc) == 0:
                ex_desc = ex.__class__.__name__
            print(f"fibercover: error: {ex_desc}", file=sys.stderr)
        except BaseException as ex:
            print(f"fibercover: Unhandled exception {ex.__class__.__name__}: {ex}", file=sys.stderr)
            raise

        return rc

def run(argv: Optional[Sequence[str]]=None) -> int:
    dotenv.load_dotenv()
    try:
        rc = CommandHandler(argv).run()
    except CmdExitError as ex:
        rc = ex.exit_code
    return rc

# allow running with "python3 -m", or as a standalone script
if __name__ == "__main__":
    sys.exit(run())
