"""
tensor-orbits command line

    tensor-orbits classify --input tensors.txt [--shape 233|223|222] [--json]
    tensor-orbits canonical --orbit o5 --q 3
    tensor-orbits census --q 2 [--shape 233|223|222] [--threads N] [--json]
    tensor-orbits verify --q 2 [--full-census] [--bfs-cross-check] [--contraction-check] [--json]
    tensor-orbits pencil-orbits --q 5 [--json]

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""
import argparse
import json
import logging
import sys
from typing import List
from typing import Optional
from typing import TextIO

from tok.tensororbits import __version__
from tok.tensororbits.classify.canonicalforms import canonical_form
from tok.tensororbits.classify.classifier import classify
from tok.tensororbits.classify.orbitlabel import OrbitLabel
from tok.tensororbits.errors import ClassificationError
from tok.tensororbits.errors import MemoryBudgetExceeded
from tok.tensororbits.errors import TensorFormatError
from tok.tensororbits.gf.fieldspec import field_for_order
from tok.tensororbits.oracle.census import full_census
from tok.tensororbits.oracle.contractionequivalence import contraction_equivalence_check
from tok.tensororbits.oracle.verification import run_verification
from tok.tensororbits.pencil.cubicorbits import pencil_orbit_report
from tok.tensororbits.tensor.tensors import tensor_type_for_shape
from tok.tensororbits.tensor.textformat import format_header
from tok.tensororbits.tensor.textformat import format_tensor
from tok.tensororbits.tensor.textformat import parse_tensor_lines
from tok.tensororbits.utils import add_logging_arguments
from tok.tensororbits.utils import configure_logging

log = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

SHAPES = ["233", "223", "222"]


def _field_order(value: str) -> int:
    try:
        q = int(value)
        field_for_order(q)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))
    return q


def _orbit_label(value: str) -> OrbitLabel:
    try:
        return OrbitLabel.from_string(value)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _read_lines(source: str, stdin: TextIO) -> List[str]:
    if source == "-":
        return stdin.readlines()
    with open(source) as infile:
        return infile.readlines()


def run_classify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    tensors = parse_tensor_lines(_read_lines(args.input, stdin), tensor_type_for_shape(args.shape))
    for tensor in tensors:
        result = classify(tensor)
        if args.json:
            print(json.dumps({"q": tensor.field.q, "a": list(tensor.a), **result.to_dict()}), file=out)
        else:
            print(result.line(), file=out)
    return EXIT_SUCCESS


def run_canonical(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    field = field_for_order(args.q)
    if not field.is_prime_field:
        print(format_header(field), file=out)
    print(format_tensor(canonical_form(args.orbit, field)), file=out)
    return EXIT_SUCCESS


def run_census(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    result = full_census(args.q, shape=args.shape, threads=args.threads)
    if args.json:
        print(json.dumps(result.to_dict()), file=out)
    else:
        for line in result.lines():
            print(line, file=out)
    return EXIT_SUCCESS


def run_verify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    report = run_verification(args.q, full=args.full_census, bfs_cross_check=args.bfs_cross_check, threads=args.threads)
    equivalence = contraction_equivalence_check(args.q, samples=args.samples) if args.contraction_check else None
    passed = report.passed and (equivalence is None or equivalence.passed)

    if args.json:
        result = report.to_dict()
        result["contraction_check"] = None if equivalence is None else equivalence.to_dict()
        result["passed"] = passed
        print(json.dumps(result), file=out)
    else:
        for line in report.lines():
            print(line, file=out)
        if equivalence is not None:
            for line in equivalence.lines():
                print(line, file=out)

    return EXIT_SUCCESS if passed else EXIT_VERIFICATION_FAILED


def run_pencil_orbits(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    report = pencil_orbit_report(args.q)
    if args.json:
        print(json.dumps(report.to_dict()), file=out)
    else:
        for line in report.lines():
            print(line, file=out)
    return EXIT_SUCCESS if report.is_consistent() else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensor-orbits",
        description="classify tensors in F_q^2 (x) F_q^3 (x) F_q^3 into H- and G-orbits and verify the classification",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify_parser = subparsers.add_parser("classify", help="classify tensors given in the text format")
    classify_parser.add_argument("--input", default="-", help="tensor file, or - for stdin [%(default)s]")
    classify_parser.add_argument("--shape", choices=SHAPES, default="233")
    classify_parser.add_argument("--json", action="store_true", help="emit one JSON object per tensor")
    classify_parser.set_defaults(run=run_classify)

    canonical_parser = subparsers.add_parser("canonical", help="print the canonical form of an orbit")
    canonical_parser.add_argument("--orbit", type=_orbit_label, required=True)
    canonical_parser.add_argument("--q", type=_field_order, required=True)
    canonical_parser.set_defaults(run=run_canonical)

    census_parser = subparsers.add_parser("census", help="classify every tensor over F_q and count the orbits")
    census_parser.add_argument("--q", type=_field_order, required=True)
    census_parser.add_argument("--shape", choices=SHAPES, default="233")
    census_parser.add_argument("--threads", type=int, default=1)
    census_parser.add_argument("--json", action="store_true")
    census_parser.set_defaults(run=run_census)

    verify_parser = subparsers.add_parser("verify", help="check the classifier against brute-force enumeration")
    verify_parser.add_argument("--q", type=int, choices=[2, 3], required=True)
    verify_parser.add_argument("--full-census", action="store_true")
    verify_parser.add_argument("--bfs-cross-check", action="store_true")
    verify_parser.add_argument("--contraction-check", action="store_true")
    verify_parser.add_argument("--samples", type=int, default=1000, help="pairs for --contraction-check [%(default)s]")
    verify_parser.add_argument("--threads", type=int, default=1)
    verify_parser.add_argument("--json", action="store_true", help="emit a single JSON report")
    verify_parser.set_defaults(run=run_verify)

    pencil_parser = subparsers.add_parser("pencil-orbits", help="PGL(2,q) orbits on irreducible monic cubics")
    pencil_parser.add_argument("--q", type=_field_order, required=True)
    pencil_parser.add_argument("--json", action="store_true", help="emit a single JSON report")
    pencil_parser.set_defaults(run=run_pencil_orbits)

    for subparser in subparsers.choices.values():
        add_logging_arguments(subparser)

    return parser


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, stdin: TextIO = sys.stdin) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and (args.bfs_cross_check or args.contraction_check) and args.q != 2:
            parser.error(f"--bfs-cross-check and --contraction-check need --q 2 (got --q {args.q})")
    except SystemExit as err:
        return EXIT_SUCCESS if err.code in (0, None) else EXIT_USAGE

    configure_logging(filepath=args.log_file, log_level=args.log_level)

    try:
        return args.run(args, out, stdin)
    except (TensorFormatError, OSError) as err:
        log.error(err)
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ClassificationError, MemoryBudgetExceeded) as err:
        log.error(err)
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
