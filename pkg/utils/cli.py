"""
Command-line interface: the argument parser and its subcommands.
"""

import argparse

from core.errors import InputError
from core.fragment import CLOSURE_OPS
from core.limits import DEFAULT_MAX_MU, DEFAULT_MAX_POSET, DEFAULT_MAX_WORLDS, S42_MAX_LETTERS


def _common_options():
    """Options shared by every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["human", "machine"],
        default="human",
        help="Report format; machine is a single JSON document",
    )
    common.add_argument("--seed", type=int, default=0, help="Seed for sampled suites")
    common.add_argument("--max-mu", type=int, default=DEFAULT_MAX_MU, help="Largest number of atoms swept")
    common.add_argument(
        "--max-poset", type=int, default=DEFAULT_MAX_POSET, help="Largest preorder built or searched"
    )
    common.add_argument(
        "--max-worlds", type=int, default=DEFAULT_MAX_WORLDS, help="Largest Kripke frame built"
    )
    common.add_argument(
        "--verbose", "-v", action="count", default=0, help="Log progress to stderr (-vv for debug)"
    )
    return common


def _plot_option(parser):
    parser.add_argument("--plot", metavar="FILENAME", help="Save a drawing to this image file")


def build_parser():
    """
    Build the parser for every subcommand.

    Returns:
        argparse.ArgumentParser: Parser whose namespace carries `group` and `action`
    """
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="logic-desk",
        description="Infinitary logic, forcing posets and button frames at desk scale",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    groups = parser.add_subparsers(dest="group", required=True)

    # Formulas
    fml = groups.add_parser("fml", help="Formulas and semantics").add_subparsers(
        dest="action", required=True
    )
    evaluate = fml.add_parser("eval", parents=[common], help="Evaluate formulas under a valuation")
    evaluate.add_argument("file", help="Formula file, one formula per line")
    evaluate.add_argument(
        "--valuation", default="", help="Comma-separated true atoms, e.g. 0,2 (empty for none)"
    )
    evaluate.add_argument("--mu", type=int, help="Number of atoms (inferred when omitted)")

    entails = fml.add_parser("entails", parents=[common], help="Decide hypotheses ⊨ conclusion")
    entails.add_argument("conclusion", help="Conclusion formula text")
    entails.add_argument("--hyp", help="Hypothesis file, one formula per line")
    entails.add_argument("--mu", type=int, help="Number of atoms (inferred when omitted)")

    fragment = fml.add_parser("fragment", parents=[common], help="Print a generated fragment")
    fragment.add_argument("--mu", type=int, required=True, help="Number of atoms")
    fragment.add_argument(
        "--ops", default=",".join(CLOSURE_OPS), help=f"Closure operations from {','.join(CLOSURE_OPS)}"
    )
    fragment.add_argument("--arity", type=int, default=2, help="Largest disjunction/conjunction")
    fragment.add_argument("--depth", type=int, default=1, help="Closure rounds")
    fragment.add_argument("--size-cap", type=int, default=256, help="Largest fragment")
    fragment.add_argument(
        "--diagrams", action="store_true", help="Append one complete literal conjunction per valuation"
    )

    # Proofs
    proof = groups.add_parser("proof", help="Proof kernel").add_subparsers(dest="action", required=True)
    check = proof.add_parser("check", parents=[common], help="Check a proof file")
    check.add_argument("file", help="Proof s-expression file")
    check.add_argument("--hyp", help="Hypothesis file, one formula per line")
    check.add_argument("--mu", type=int, help="Number of atoms (inferred when omitted)")

    sample = proof.add_parser("sample", parents=[common], help="Sample proofs and audit soundness")
    sample.add_argument("--count", type=int, default=200, help="Number of proofs")
    sample.add_argument("--atoms", type=int, default=4, help="Largest universe sampled")
    sample.add_argument("--depth", type=int, default=3, help="Largest rule nesting")

    # Bukovsky pipeline
    buk = groups.add_parser("buk", help="Covering theory to generic filter").add_subparsers(
        dest="action", required=True
    )
    run = buk.add_parser("run", parents=[common], help="Run the pipeline from a JSON configuration")
    run.add_argument("config", help="Pipeline configuration file")
    _plot_option(run)

    # Posets
    poset = groups.add_parser("poset", help="Finite forcing posets").add_subparsers(
        dest="action", required=True
    )
    fn = poset.add_parser("fn", parents=[common], help="Analyze Fn(kappa, lambda, mu)")
    fn.add_argument("kappa", type=int)
    fn.add_argument("lam", type=int, metavar="lambda")
    fn.add_argument("mu", type=int)
    _plot_option(fn)

    analyze = poset.add_parser("analyze", parents=[common], help="Analyze a preorder file")
    analyze.add_argument("file", help="Poset file with element/leq lines")
    _plot_option(analyze)

    # Multiverse frames
    mv = groups.add_parser("mv", help="Button frames").add_subparsers(dest="action", required=True)
    gen = mv.add_parser("gen", parents=[common], help="Generate the canonical button model")
    gen.add_argument("buttons", type=int)
    gen.add_argument("switches", type=int)
    gen.add_argument("--output", metavar="FILENAME", help="Write the frame file here")
    _plot_option(gen)

    mv_check = mv.add_parser("check", parents=[common], help="Check a frame file")
    mv_check.add_argument("file", help="Frame file")
    mv_check.add_argument("--independence", type=int, metavar="N", help="Check buttons 0..N-1")
    mv_check.add_argument("--root", type=int, default=0, help="World the independence check starts from")
    mv_check.add_argument("--s42", action="store_true", help="Sweep the S4.2 axioms")
    mv_check.add_argument(
        "--letters", type=int, default=S42_MAX_LETTERS, help="Letters in the S4.2 labeling sweep"
    )
    _plot_option(mv_check)

    return parser


def parse_arguments(argv=None):
    """
    Parse command-line arguments.

    Args:
        argv (list, optional): Arguments without the program name; sys.argv when None

    Returns:
        argparse.Namespace: Parsed arguments
    """
    return build_parser().parse_args(argv)


def parse_valuation(text):
    """'0,2' -> [0, 2]; empty text -> []."""
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"valuation must be comma-separated naturals, got {text!r}") from None
