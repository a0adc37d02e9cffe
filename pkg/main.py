#!/usr/bin/env python3
"""
Desk-scale infinitary logic toolkit - main entry point

Routes the command line to formula semantics, the proof kernel, the covering
theory pipeline, forcing poset combinatorics and button frame checks. Reports
go to standard output; logs go to standard error.

Exit codes: 0 every checked property holds, 1 a property is refuted (the
report carries the witness), 2 malformed input or usage, 3 a resource cap
would be exceeded.
"""

import logging
import sys

from algorithms.antichain import max_antichain
from algorithms.bukovsky import run_pipeline
from algorithms.frame_checks import check_independence, check_s42
from algorithms.proof_kernel import audit_soundness, check_proof, hypotheses_of
from algorithms.proof_sampler import sample_proofs
from core import reporting
from core.errors import InputError, ResourceCapError, check_cap
from core.formula import AtomUniverse, check_atoms, parse_formula
from core.fragment import FragmentSpec, generate_fragment
from core.multiverse import canonical_button_model, is_button, is_persistent
from core.poset import fn_antichain_bound, fn_poset, is_atomless, quotient
from core.semantics import Theory, Valuation, entails, evaluate
from core.visualization import plot_frame, plot_preorder
from data.loaders import (
    UNBOUNDED,
    format_frame,
    infer_universe,
    read_formula_file,
    read_frame_file,
    read_pipeline_config,
    read_poset_file,
    read_proof_file,
)
from utils.cli import parse_arguments, parse_valuation
from utils.config import RunConfig

EXIT_PASS = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_CAP = 3

LOGGER = logging.getLogger(__name__)


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def resolve_universe(mu, formulas, config):
    """The universe named by --mu, or the smallest one holding every atom."""
    if mu is None:
        universe = infer_universe(formulas)
    else:
        universe = AtomUniverse(mu)
        for formula in formulas:
            check_atoms(formula, universe)
    check_cap("max_mu", config.caps.max_mu, universe.mu)
    return universe


# ---------------------------------------------------------------------------
# Handlers: each returns (title, document)

def run_fml_eval(args, config):
    formulas = read_formula_file(args.file)
    universe = resolve_universe(args.mu, formulas, config)
    valuation = Valuation(frozenset(parse_valuation(args.valuation)), universe.mu)
    values = [evaluate(valuation, f) for f in formulas]
    return "Formula evaluation", reporting.evaluation_document(formulas, valuation, values)


def run_fml_entails(args, config):
    gamma = read_formula_file(args.hyp) if args.hyp else []
    conclusion = parse_formula(args.conclusion, UNBOUNDED)
    universe = resolve_universe(args.mu, gamma + [conclusion], config)
    verdict = entails(gamma, conclusion, universe, max_mu=config.caps.max_mu)
    return "Semantic consequence", reporting.entailment_document(gamma, conclusion, verdict, universe)


def run_fml_fragment(args, config):
    universe = resolve_universe(args.mu, [], config)
    ops = frozenset(op for op in args.ops.split(",") if op)
    spec = FragmentSpec(
        closure_ops=ops,
        arity_cap=args.arity,
        depth_cap=args.depth,
        size_cap=args.size_cap,
        diagrams=args.diagrams,
    )
    fragment = generate_fragment(spec, universe)
    return "Fragment", reporting.fragment_document(fragment, universe)


def run_proof_check(args, config):
    tree = read_proof_file(args.file)
    hypotheses = Theory(tuple(read_formula_file(args.hyp))) if args.hyp else Theory()
    labels = [node.label for _, node in tree.walk()]
    universe = resolve_universe(args.mu, labels + list(hypotheses), config)
    report = check_proof(tree, hypotheses)
    audit = audit_soundness(tree, hypotheses, universe, config.caps.max_mu) if report.accepted else None
    return "Proof check", reporting.proof_check_document(report, audit, universe, hypotheses)


def run_proof_sample(args, config):
    check_cap("max_mu", config.caps.max_mu, args.atoms)
    rows = []
    for index, sampled in enumerate(sample_proofs(args.count, config.seed, args.atoms, args.depth)):
        report = check_proof(sampled.tree, sampled.hypotheses)
        sound = report.accepted and audit_soundness(
            sampled.tree, sampled.hypotheses, sampled.universe, config.caps.max_mu
        ) is None
        rows.append({
            "index": index,
            "mu": sampled.universe.mu,
            "size": sampled.tree.size(),
            "hypotheses": len(hypotheses_of(sampled.tree)),
            "accepted": report.accepted,
            "sound": sound,
        })
    return "Sampled proofs", reporting.proof_sample_document(config.seed, rows)


def run_buk(args, config):
    cfg = read_pipeline_config(args.config)
    result = run_pipeline(cfg, config.caps.max_mu, config.caps.max_poset)
    if config.plot:
        plot_preorder(result.poset.preorder, config.plot, title="P modulo mutual entailment")
    return "Covering theory pipeline", reporting.pipeline_document(result)


def run_poset_fn(args, config):
    fn = fn_poset(args.kappa, args.lam, args.mu, config.caps.max_poset)
    antichain = max_antichain(fn.preorder, config.caps.max_poset)
    bound = fn_antichain_bound(args.lam, args.mu)
    compat = fn.preorder.compatibility
    size = len(fn.functions)
    agrees = all(
        fn.compatible_fast(i, j) == bool(compat[i, j]) for i in range(size) for j in range(size)
    )
    if config.plot:
        plot_preorder(fn.preorder, config.plot, title=f"Fn({args.kappa}, {args.lam}, {args.mu})")
    return "Partial function poset", reporting.fn_document(fn, antichain, bound, agrees)


def run_poset_analyze(args, config):
    preorder = read_poset_file(args.file)
    check_cap("max_poset", config.caps.max_poset, len(preorder))
    antichain = max_antichain(preorder, config.caps.max_poset)
    document = reporting.analyze_document(
        preorder, antichain, quotient(preorder), is_atomless(preorder), preorder.minimal_elements()
    )
    if config.plot:
        plot_preorder(preorder, config.plot, title=args.file)
    return "Preorder analysis", document


def run_mv_gen(args, config):
    frame, labeling = canonical_button_model(args.buttons, args.switches, config.caps.max_worlds)
    document = reporting.frame_document(frame, labeling)
    document["command"] = "mv gen"
    document["independence"] = reporting.independence_document(
        check_independence(frame, labeling, 0, labeling.n_buttons)
    )
    document["frame_file"] = args.output
    document["passed"] = document["independence"]["passed"]
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(format_frame(frame, labeling))
    if config.plot:
        plot_frame(frame, labeling, config.plot, title="Canonical button model")
    return "Canonical button model", document


def run_mv_check(args, config):
    frame, labeling = read_frame_file(args.file)
    check_cap("max_worlds", config.caps.max_worlds, len(frame))
    root = frame.check_world(args.root)
    document = reporting.frame_document(frame, labeling)
    document["command"] = "mv check"
    document["root"] = root
    document["buttons_at_root"] = [is_button(frame, labeling, root, i) for i in range(labeling.n_buttons)]
    document["persistent"] = [is_persistent(frame, labeling, i) for i in range(labeling.letters)]
    passed = True
    if args.independence is not None:
        report = check_independence(frame, labeling, root, args.independence)
        document["independence"] = reporting.independence_document(report)
        passed = passed and report.passed
    if args.s42:
        report = check_s42(frame, args.letters)
        document["s42"] = reporting.s42_document(report)
        passed = passed and report.passed
    document["passed"] = passed
    if config.plot:
        plot_frame(frame, labeling, config.plot, title=args.file)
    return "Frame check", document


HANDLERS = {
    ("fml", "eval"): run_fml_eval,
    ("fml", "entails"): run_fml_entails,
    ("fml", "fragment"): run_fml_fragment,
    ("proof", "check"): run_proof_check,
    ("proof", "sample"): run_proof_sample,
    ("buk", "run"): run_buk,
    ("poset", "fn"): run_poset_fn,
    ("poset", "analyze"): run_poset_analyze,
    ("mv", "gen"): run_mv_gen,
    ("mv", "check"): run_mv_check,
}


def dispatch(argv=None):
    """
    Run one command.

    Args:
        argv (list, optional): Arguments without the program name

    Returns:
        int: Exit code
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as stop:
        return EXIT_PASS if stop.code in (0, None) else EXIT_INPUT
    configure_logging(args.verbose)

    try:
        config = RunConfig.from_args(args)
        LOGGER.info("Running %s", config.name)
        title, document = HANDLERS[config.command](args, config)
    except ResourceCapError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except RecursionError:
        error = InputError("input is nested too deeply")
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT

    sys.stdout.write(reporting.render(title, document, config.output_format))
    return EXIT_PASS if document["passed"] else EXIT_REFUTED


def main():
    """Main application entry point."""
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
