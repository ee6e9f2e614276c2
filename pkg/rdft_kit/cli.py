"""Command-line harness: window and mixing design, response dumps and experiments."""

import argparse
import asyncio
import inspect
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Type

from fastmcp.utilities.logging import get_logger

from .core import AsyncOperation, SpectrumError, load_flat_config
from .dsp.filterbank import Method, method_summary
from .tools import (
    DesignMixingOperation,
    DesignWindowOperation,
    DetectionOperation,
    FreqResponseOperation,
    ImpulseResponseOperation,
    Table1Operation,
)
from .tools.design.window import WINDOW_KINDS

logger = get_logger(__name__)

OPERATIONS: Dict[str, Type[AsyncOperation]] = {
    "design-window": DesignWindowOperation,
    "design-mixing": DesignMixingOperation,
    "freq-response": FreqResponseOperation,
    "impulse-response": ImpulseResponseOperation,
    "table1": Table1Operation,
    "detection": DetectionOperation,
}

# config-file keys that differ from the operation parameter names
_CONFIG_RENAMES = {"long": "long_run", "method": "methods"}


def _method_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _float_list(text: str) -> List[float]:
    return [float(item) for item in text.split(",") if item.strip()]


def _bank_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--K", dest="k_max", type=int, help="highest measurable bin (M = 2K + 1)")
    parent.add_argument("--B", dest="b_max", type=int, help="highest analyzed bin")
    parent.add_argument("--sigma", type=float, help="log pole radius of the IIR methods, negative")
    parent.add_argument("--l", dest="horizon", type=int, help="prediction horizon of the observers")
    parent.add_argument("--Bwin", dest="b_win", type=int, help="half-width in bins of the method 6 window")
    parent.add_argument(
        "--method", "--methods", dest="methods", type=_method_list, help="comma-separated methods, 1-12 or bandpass"
    )
    return parent


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", default=".", help="output directory for the CSV files (default: .)")
    parent.add_argument("--config", help="flat key = value file; flags override its values")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Build the ``rdft`` argument parser.

    Returns:
        Parser with one subcommand per operation plus ``methods``

    """
    parser = argparse.ArgumentParser(prog="rdft", description="Recursive DFT filter-bank analysis harness")
    sub = parser.add_subparsers(dest="command", required=True)
    common, bank = _common_flags(), _bank_flags()

    window = sub.add_parser("design-window", parents=[common], help="design a Slepian or sum-of-cosine window")
    window.add_argument("--kind", choices=WINDOW_KINDS, help="window type (default: slepian_time)")
    window.add_argument("--K", dest="k_max", type=int, help="highest bin (M = 2K + 1)")
    window.add_argument("--Bwin", dest="b_win", type=int, help="half-width in bins of a frequency Slepian")
    window.add_argument("--f-delta", dest="f_delta", type=float, help="half-bandwidth in cycles/sample")
    window.add_argument("--coefficients", type=_float_list, help="comma-separated custom window coefficients")

    mixing = sub.add_parser("design-mixing", parents=[common], help="design and verify a mixing matrix")
    mixing.add_argument("--K", dest="k_max", type=int, help="highest bin (M = 2K + 1)")
    mixing.add_argument("--B", dest="b_max", type=int, help="highest analyzed bin")
    mixing.add_argument("--sigma", type=float, help="log pole radius, negative (default: -1/M)")
    mixing.add_argument("--load", help="verify a matrix exported earlier, relative to --out")

    dumps = (("freq-response", "dump bin frequency responses"), ("impulse-response", "dump impulse responses"))
    for name, help_text in dumps:
        dump = sub.add_parser(name, parents=[common, bank], help=help_text)
        dump.add_argument("--probe-bin", dest="probe_bin", type=int, help="bin k to dump")
        dump.add_argument("--precision", choices=("single", "double"))
        if name == "freq-response":
            dump.add_argument("--grid-points", dest="grid_points", type=int, help="frequencies in the grid")
            dump.add_argument("--settle", type=int, help="samples discarded before measuring observers")
        else:
            dump.add_argument("--samples", dest="impulse_length", type=int, help="impulse-response length N")

    table1 = sub.add_parser("table1", parents=[common, bank], help="rounding-error experiment")
    table1.add_argument("--precision", choices=("single", "double"))
    table1.add_argument("--segments", type=int, help="number of segments")
    table1.add_argument("--segment-length", dest="segment_length", type=int, help="samples per segment")
    table1.add_argument("--noise", choices=("none", "gaussian", "impulsive"))
    table1.add_argument("--seed", type=int)
    table1.add_argument("--probe-bin", dest="probe_bin", type=int, help="bin k whose error is measured")
    table1.add_argument("--checkpoint-interval", dest="checkpoint_interval", type=int)
    table1.add_argument("--quick", action="store_true", default=None, help="1e5-sample segments for CI")
    table1.add_argument("--long", dest="long_run", action="store_true", default=None, help="run 100 segments")
    table1.add_argument("--workers", type=int, help="worker processes, one method each")

    detection = sub.add_parser("detection", parents=[common, bank], help="weak-tone detection experiment")
    detection.add_argument("--settle", type=int, help="samples discarded before averaging")

    sub.add_parser("methods", help="list the methods and their characteristics")
    return parser


def _operation_kwargs(args: argparse.Namespace, call: Callable[..., Any]) -> Dict[str, Any]:
    accepted = set(inspect.signature(call).parameters)
    values: Dict[str, Any] = {}
    if args.config:
        loaded = load_flat_config(args.config)
        values.update({_CONFIG_RENAMES.get(key, key): value for key, value in loaded.items()})
        unused = sorted(set(values) - accepted)
        if unused:
            logger.warning(f"Ignoring config keys not used by {args.command}: {unused}")
    flags = {key: value for key, value in vars(args).items() if key in accepted and value is not None}
    values.update(flags)
    return {key: value for key, value in values.items() if key in accepted}


def _print_methods() -> None:
    print(f"{'method':<8}{'family':<24}{'impulse':<9}{'window':<28}{'feedback':<10}{'main lobe':<22}side lobes")
    for method in Method:
        row = method_summary(method)
        print(
            f"{method.label:<8}{row.family:<24}{row.impulse_response:<9}{row.window:<28}"
            f"{'yes' if row.outer_feedback else 'no':<10}{row.main_lobe:<22}{row.side_lobes}"
        )


def _print_result(result: Dict[str, Any]) -> None:
    print(result["message"])
    for name in result.get("files", []):
        print(f"  wrote {name}")
    for key, value in result.items():
        if key not in ("status", "message", "files"):
            print(f"  {key}: {value}")


def run(args: argparse.Namespace) -> Dict[str, Any]:
    """Execute one parsed subcommand.

    Args:
        args: Result of :func:`build_parser` parsing

    Returns:
        The operation result

    """
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    op = OPERATIONS[args.command](root_dir=str(out))
    kwargs = _operation_kwargs(args, op.__call__)
    return asyncio.run(op(**kwargs))


def main(argv: Optional[List[str]] = None) -> None:
    """Parse the command line and run the requested subcommand.

    Validation failures print one ``rdft: error: ...`` line to stderr and exit with status 2.

    Args:
        argv: Arguments, defaults to ``sys.argv[1:]``

    """
    args = build_parser().parse_args(argv)
    if args.command == "methods":
        _print_methods()
        return
    try:
        result = run(args)
    except (SpectrumError, OSError) as e:
        print(f"rdft: error: {e}", file=sys.stderr)
        sys.exit(2)
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        sys.exit(130)
    _print_result(result)


if __name__ == "__main__":
    main()
