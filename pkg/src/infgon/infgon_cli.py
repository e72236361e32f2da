"""
CLI interface for the completed ∞-gon engine.

This module contains argument parsing and the CLI controller. Every
command is a thin adapter over one engine operation or oracle suite; all
classification logic lives in the engine modules.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..common.app_config import get_decoration_range, get_default_m, get_default_window, get_output_config
from .arcsets import (
    check_ovl_pc, check_ovl_pe, check_ovl_pt, is_cot_aisle, is_t_aisle, is_torsion_class,
)
from .errors import ContractViolation, InfgonError, SchemaError
from .gon_model import GonConfig, Model
from .hom_model import hom_dim
from .ncp import (
    AltNcp, HalfDecNcp, complement_alt, complement_hd, enumerate_alt, enumerate_hd,
)
from .oracle import SUITES, Report, brute_hom, count_structures, run_suite
from .render import render_arcs, render_sets
from .schemas import (
    arc_from_list, arc_to_list, decorated_from_dict, decorated_to_dict, dumps, load_payload,
    symset_from_dict, symset_to_dict,
)
from .torsion import (
    alt_from_cot_aisle, cot_aisle, cot_coaisle, cot_coheart, cot_join, cot_meet, describe,
    hd_from_aisle, t_aisle, t_coaisle, t_heart, tt_join, tt_meet,
)

# Initialize logger for this module
logger = logging.getLogger("infgon_cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# --- CLI Functions -------------------------------------------------------------

def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments for the engine CLI.

    Args:
        argv: Argument list (defaults to sys.argv[1:])

    Returns:
        Parsed arguments namespace
    """
    logger.debug("Parsing command line arguments")
    default_m = get_default_m()
    default_window = get_default_window()
    default_format = get_output_config()["default_format"]

    parser = argparse.ArgumentParser(
        prog='infgon',
        description='Torsion pairs, t-structures and co-t-structures in the completed ∞-gon.',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Aisle and classification flags of a decorated partition
  python -m src aisle --in hd.json
  python -m src classify --in hd.json --format table

  # Recover the decorated partition from an aisle
  python -m src classify --kind hd --m 2 --in aisle.json

  # Complement, meet and join
  python -m src complement --in alt.json
  python -m src lattice --op meet --in a.json --other b.json

  # Verification suites
  python -m src verify --suite torsion --m 2 --window 6
  python -m src verify --suite lattice --format table

  # Circle diagram
  python -m src render --in hd.json --out d.svg
        """
    )

    # Options shared by every command
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--m', type=int, default=default_m,
                        help=f'Number of accumulation pairs (default: {default_m})')
    common.add_argument('--window', '-W', type=int, default=default_window,
                        help=f'Window half-width for finite checks (default: {default_window})')
    common.add_argument('--in', dest='input', metavar='FILE',
                        help='JSON input file (reads stdin when omitted)')
    common.add_argument('--out', metavar='FILE', help='Write output to FILE instead of stdout')
    common.add_argument('--format', choices=['json', 'table', 'svg'], default=None,
                        help=f'Output format (default: {default_format}, svg for render)')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    classify = subparsers.add_parser('classify', parents=[common],
                                     help='Descriptor of a decorated partition or aisle')
    classify.add_argument('--kind', choices=['hd', 'alt'],
                          help='Read the input as a t-aisle (hd) or co-t-aisle (alt)')

    for name, text in (('aisle', 'Aisle of a decorated partition'),
                       ('coaisle', 'Co-aisle of a decorated partition'),
                       ('heart', 'Heart of a t-structure'),
                       ('coheart', 'Co-heart of a co-t-structure'),
                       ('complement', 'Kreweras complement of a decorated partition')):
        subparsers.add_parser(name, parents=[common], help=text)

    lattice = subparsers.add_parser('lattice', parents=[common], help='Meet or join of two structures')
    lattice.add_argument('--op', choices=['meet', 'join'], required=True, help='Lattice operation')
    lattice.add_argument('--other', metavar='FILE', required=True, help='Second decorated partition')

    subparsers.add_parser('check', parents=[common],
                          help='Closure conditions of a symbolic arc set')

    verify = subparsers.add_parser('verify', parents=[common], help='Run a verification suite')
    verify.add_argument('--suite', choices=list(SUITES), required=True, help='Suite to run')

    enumerate_parser = subparsers.add_parser('enumerate', parents=[common],
                                             help='List decorated partitions or count them')
    enumerate_parser.add_argument('--kind', choices=['hd', 'alt'], default='hd')
    enumerate_parser.add_argument('--range', nargs=2, type=int, metavar=('LO', 'HI'),
                                  help='Regular decoration positions (default: configured range)')
    enumerate_parser.add_argument('--count', type=int, metavar='W',
                                  help='Only report counts with W regular positions per segment')

    hom = subparsers.add_parser('hom', parents=[common], help='dim Hom(a, b) for two arcs')
    hom.add_argument('--model', choices=[m.value for m in Model], default=Model.BAR.value)

    subparsers.add_parser('render', parents=[common], help='SVG circle diagram')

    args = parser.parse_args(argv)
    if args.command is None:
        parser.error('a command is required')
    logger.info(f"Parsed arguments: command={args.command}, m={args.m}, window={args.window}")
    return args


# --- Input helpers -----------------------------------------------------------

def parse_model(value: Any) -> Model:
    try:
        return Model(value)
    except ValueError as e:
        raise SchemaError(f"Unknown model {value!r}", "model") from e


# --- Output formatting ---------------------------------------------------------

def _table_rows(data: Dict[str, Any], prefix: str = "") -> List[List[str]]:
    rows = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict) and value and all(not isinstance(v, (dict, list)) for v in value.values()):
            rows.extend(_table_rows(value, f"{prefix}{key}."))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            rows.append([f"{prefix}{key}", f"{len(value)} entries"])
        else:
            rows.append([f"{prefix}{key}", str(value)])
    return rows


def format_table(data: Any) -> str:
    """Aligned two-column text; reports list their failures after the summary."""
    if isinstance(data, list):
        return "\n".join(format_table(item) for item in data)
    if not isinstance(data, dict):
        return str(data)
    summary = {k: v for k, v in data.items() if k != "failures"}
    rows = _table_rows(summary)
    width = max((len(r[0]) for r in rows), default=0)
    lines = [f"{key.ljust(width)}  {value}" for key, value in rows]
    for failure in data.get("failures", []):
        lines.append(f"FAIL  {failure['instance']}: {failure['witness']}")
    return "\n".join(lines)


# --- Controller ----------------------------------------------------------------

class InfgonCLIController:
    """Controller class for engine CLI commands with dependency injection for testing."""

    def __init__(self,
                 reader: Optional[Callable[[Optional[str]], str]] = None,
                 writer: Optional[Callable[[str, Optional[str]], None]] = None,
                 suite_runner: Optional[Callable[[str, GonConfig, int], Report]] = None):
        """Initialize the controller with optional dependencies for testing.

        Args:
            reader: Function returning input text for a path (None = stdin)
            writer: Function emitting output text to a path (None = stdout)
            suite_runner: Function running an oracle suite (defaults to run_suite)
        """
        self.reader = reader or self.read_input
        self.writer = writer or self.write_output
        self.suite_runner = suite_runner or run_suite

    @staticmethod
    def read_input(path: Optional[str]) -> str:
        if path is None:
            return sys.stdin.read()
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise SchemaError(f"Cannot read input: {e.strerror}", path) from e

    @staticmethod
    def write_output(text: str, path: Optional[str]) -> None:
        if path is None:
            print(text)
            return
        Path(path).write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote output to {path}")

    # --- input helpers ---

    def load(self, path: Optional[str]) -> Dict[str, Any]:
        return load_payload(self.reader(path))

    def config_for(self, args: argparse.Namespace, payload: Optional[Dict[str, Any]] = None) -> GonConfig:
        m = payload.get("m", args.m) if payload else args.m
        try:
            return GonConfig(m)
        except ContractViolation as e:
            raise SchemaError(str(e), "m") from e

    def load_datum(self, args: argparse.Namespace, path: Optional[str]):
        payload = self.load(path)
        cfg = self.config_for(args, payload)
        return cfg, decorated_from_dict(cfg, payload)

    def emit(self, args: argparse.Namespace, data: Any) -> None:
        fmt = args.format or get_output_config()["default_format"]
        if fmt == 'svg':
            raise ContractViolation(f"--format svg is only available for render, not {args.command}")
        self.writer(format_table(data) if fmt == 'table' else dumps(data), args.out)

    # --- command handlers ---

    def handle_classify(self, args: argparse.Namespace) -> int:
        payload = self.load(args.input)
        if "rects" in payload:
            if args.kind is None:
                raise SchemaError("Classifying an arc set needs --kind hd or --kind alt", "kind")
            cfg = self.config_for(args)
            X = symset_from_dict(cfg, payload)
            datum = hd_from_aisle(cfg, X) if args.kind == 'hd' else alt_from_cot_aisle(cfg, X)
        else:
            cfg = self.config_for(args, payload)
            datum = decorated_from_dict(cfg, payload)
        self.emit(args, describe(cfg, datum).to_dict(cfg))
        return EXIT_OK

    def handle_sets(self, args: argparse.Namespace) -> int:
        cfg, datum = self.load_datum(args, args.input)
        hd = isinstance(datum, HalfDecNcp)
        if args.command == 'aisle':
            S = t_aisle(cfg, datum) if hd else cot_aisle(cfg, datum)
        else:
            S = t_coaisle(cfg, datum) if hd else cot_coaisle(cfg, datum)
        self.emit(args, symset_to_dict(S))
        return EXIT_OK

    def handle_heart(self, args: argparse.Namespace) -> int:
        cfg, datum = self.load_datum(args, args.input)
        if args.command == 'heart':
            if not isinstance(datum, HalfDecNcp):
                raise ContractViolation("heart needs a half-decorated partition (kind hd)")
            arcs = t_heart(cfg, datum)
        else:
            if not isinstance(datum, AltNcp):
                raise ContractViolation("coheart needs an alternating partition (kind alt)")
            arcs = cot_coheart(cfg, datum)
        self.emit(args, {"model": Model.BAR.value, "arcs": [arc_to_list(a) for a in arcs]})
        return EXIT_OK

    def handle_complement(self, args: argparse.Namespace) -> int:
        cfg, datum = self.load_datum(args, args.input)
        result = complement_hd(cfg, datum) if isinstance(datum, HalfDecNcp) else complement_alt(cfg, datum)
        self.emit(args, decorated_to_dict(cfg, result))
        return EXIT_OK

    def handle_lattice(self, args: argparse.Namespace) -> int:
        cfg, a = self.load_datum(args, args.input)
        _, b = self.load_datum(args, args.other)
        if type(a) is not type(b):
            raise ContractViolation("Lattice operations need two partitions of the same kind")
        if isinstance(a, HalfDecNcp):
            op = tt_meet if args.op == 'meet' else tt_join
        else:
            op = cot_meet if args.op == 'meet' else cot_join
        self.emit(args, op(cfg, a, b).to_dict(cfg))
        return EXIT_OK

    def handle_check(self, args: argparse.Namespace) -> int:
        cfg = self.config_for(args)
        X = symset_from_dict(cfg, self.load(args.input))
        result = {
            "precovering_violations": check_ovl_pc(cfg, X),
            "preenveloping_violations": check_ovl_pe(cfg, X),
            "extension_closed": check_ovl_pt(cfg, X),
            "torsion_class": is_torsion_class(cfg, X),
            "t_aisle": is_t_aisle(cfg, X),
            "cot_aisle": is_cot_aisle(cfg, X),
        }
        self.emit(args, result)
        return EXIT_OK

    def handle_verify(self, args: argparse.Namespace) -> int:
        cfg = self.config_for(args)
        report = self.suite_runner(args.suite, cfg, args.window)
        self.emit(args, report.to_dict())
        if not report.passed:
            logger.error(f"Suite {args.suite} failed on {len(report.failures)} instances")
            return EXIT_FAILED
        return EXIT_OK

    def handle_enumerate(self, args: argparse.Namespace) -> int:
        cfg = self.config_for(args)
        if args.count is not None:
            self.emit(args, count_structures(cfg, args.count))
            return EXIT_OK
        lo, hi = args.range if args.range else get_decoration_range()
        positions = range(lo, hi + 1)
        data = enumerate_hd(cfg, positions) if args.kind == 'hd' else enumerate_alt(cfg, positions)
        self.emit(args, [decorated_to_dict(cfg, d) for d in data])
        return EXIT_OK

    def handle_hom(self, args: argparse.Namespace) -> int:
        payload = self.load(args.input)
        cfg = self.config_for(args, payload)
        model = parse_model(payload.get("model", args.model))
        for key in ("a", "b"):
            if key not in payload:
                raise SchemaError(f"Missing arc '{key}'", key)
        a = arc_from_list(cfg, payload["a"], model)
        b = arc_from_list(cfg, payload["b"], model)
        self.emit(args, {
            "model": model.value,
            "a": arc_to_list(a),
            "b": arc_to_list(b),
            "hom": hom_dim(cfg, model, a, b),
            "brute": brute_hom(cfg, a, b),
        })
        return EXIT_OK

    def handle_render(self, args: argparse.Namespace) -> int:
        if args.format not in (None, 'svg'):
            raise ContractViolation("render only produces svg")
        payload = self.load(args.input)
        if "rects" in payload:
            cfg = self.config_for(args)
            svg = render_sets(cfg, args.window, symset_from_dict(cfg, payload))
        elif "arcs" in payload:
            cfg = self.config_for(args, payload)
            model = parse_model(payload.get("model", Model.BAR.value))
            arcs = [arc_from_list(cfg, raw, model) for raw in payload["arcs"]]
            svg = render_arcs(cfg, model, arcs)
        else:
            # a descriptor carries its partition under "datum"
            raw = payload.get("datum", payload)
            cfg = self.config_for(args, raw)
            desc = describe(cfg, decorated_from_dict(cfg, raw))
            svg = render_sets(cfg, args.window, desc.aisle, desc.coaisle, title=f"{desc.kind} {desc.datum.P}")
        self.writer(svg, args.out)
        return EXIT_OK

    def run(self, args: argparse.Namespace) -> int:
        """Run one command.

        Args:
            args: Parsed command line arguments

        Returns:
            Exit status (0 success, 1 verification failure, 2 bad input)
        """
        logger.info(f"Starting command: {args.command}")
        handlers = {
            'classify': self.handle_classify,
            'aisle': self.handle_sets,
            'coaisle': self.handle_sets,
            'heart': self.handle_heart,
            'coheart': self.handle_heart,
            'complement': self.handle_complement,
            'lattice': self.handle_lattice,
            'check': self.handle_check,
            'verify': self.handle_verify,
            'enumerate': self.handle_enumerate,
            'hom': self.handle_hom,
            'render': self.handle_render,
        }
        handler = handlers.get(args.command)
        if handler is None:
            print(f"Unknown command: {args.command}", file=sys.stderr)
            return EXIT_USAGE
        try:
            return handler(args)
        except SchemaError as e:
            logger.error(f"Invalid input: {e}")
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except ContractViolation as e:
            logger.error(f"Command {args.command} rejected its input: {e}")
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except InfgonError as e:
            logger.error(f"Command {args.command} failed: {e}")
            print(f"Error: {e}", file=sys.stderr)
            return EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point; returns the process exit status."""
    logger.info("Starting infgon CLI")
    args = parse_args(argv)
    controller = InfgonCLIController()
    return controller.run(args)
