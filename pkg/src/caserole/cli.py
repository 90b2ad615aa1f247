"""Command line interface.

Subcommands: ``parse`` (analyze sentences into case-role structures),
``score`` (MUC-style comparison of predicted and gold annotations) and
``dump`` (print the compiled labelling problems without solving).
Diagnostics go to stderr, machine output to stdout or ``--out``.

Exit codes: 0 success, 1 file or format problems, 2 processing errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .clp import SolverConfig, dump_problem
from .compile import CompilerConfig, build_problem
from .evaluation import render_report, score_models, score_roles
from .pipeline import analyze_sentence
from .stats import load_counts


def _add_knowledge_arguments(parser):
    parser.add_argument("--sentences", required=True, help="sentence file (JSON)")
    parser.add_argument("--lexicon", required=True, help="subcategorization lexicon (JSON)")
    parser.add_argument("--ontology", required=True, help="semantic label tree (TSV)")
    parser.add_argument("--stats", help="cooccurrence counts file")
    parser.add_argument("--no-stats", action="store_true",
                        help="disable statistical constraints")
    parser.add_argument("--stat-scale", type=float, default=5.0,
                        help="divisor applied to mutual information weights")


def _add_solver_arguments(parser):
    parser.add_argument("--max-iters", type=int, default=500)
    parser.add_argument("--epsilon", type=float, default=1e-4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="caserole",
        description="Case-role analysis of chunked sentences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="analyze sentences")
    _add_knowledge_arguments(p_parse)
    _add_solver_arguments(p_parse)
    p_parse.add_argument("--out", help="output file (default: stdout)")
    p_parse.add_argument("--dump-constraints", action="store_true",
                         help="dump each compiled problem to stderr")
    p_parse.add_argument("--trace", action="store_true",
                         help="log per-iteration convergence to stderr")

    p_score = sub.add_parser("score", help="score predictions against gold")
    p_score.add_argument("--gold", required=True)
    p_score.add_argument("--pred", required=True)
    p_score.add_argument("--report-json",
                         help="also write a JSON report with unrounded values")

    p_dump = sub.add_parser("dump", help="print compiled constraint problems")
    _add_knowledge_arguments(p_dump)

    return parser


def _load_knowledge(args):
    lexicon = io.load_lexicon(args.lexicon)
    onto = io.load_ontology(args.ontology)
    store = None
    if args.stats and not args.no_stats:
        store = load_counts(args.stats)
    config = CompilerConfig(
        stat_enabled=not args.no_stats,
        stat_scale=args.stat_scale,
    )
    sentences = io.load_sentences(args.sentences)
    return sentences, lexicon, onto, store, config


def cmd_parse(args) -> int:
    try:
        sentences, lexicon, onto, store, compiler_config = _load_knowledge(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as error:
        print(f"caserole: {error}", file=sys.stderr)
        return 1
    solver_config = SolverConfig(max_iterations=args.max_iters,
                                 epsilon=args.epsilon)
    output = []
    for sentence in sentences:
        trace = None
        if args.trace:
            def trace(iteration, state, delta, _id=sentence.id):
                print(f"sentence {_id} iteration {iteration} "
                      f"max_delta {delta:.6g}", file=sys.stderr)
        try:
            result = analyze_sentence(
                sentence, lexicon, onto, store=store,
                compiler_config=compiler_config,
                solver_config=solver_config,
                on_iteration=trace,
            )
        except Exception as error:
            print(f"caserole: sentence {sentence.id}: {error}", file=sys.stderr)
            return 2
        if args.dump_constraints:
            sys.stderr.write(f"# problem for sentence {sentence.id}\n")
            sys.stderr.write(dump_problem(result.compiled.problem))
        for warning in result.structure.warnings:
            print(f"sentence {sentence.id}: warning: {warning}", file=sys.stderr)
        output.append(io.structure_to_dict(result.structure, sentence))

    if args.out:
        io.write_json(output, path=args.out)
    else:
        io.write_json(output, stream=sys.stdout)
    return 0


def cmd_score(args) -> int:
    try:
        gold = io.load_annotations(args.gold)
        predicted = io.load_annotations(args.pred)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as error:
        print(f"caserole: {error}", file=sys.stderr)
        return 1
    try:
        models = score_models(gold, predicted)
        roles = score_roles(gold, predicted)
    except ValueError as error:
        print(f"caserole: {error}", file=sys.stderr)
        return 2
    sys.stdout.write(render_report(models, roles))
    if args.report_json:
        io.write_json({
            "models": {
                "cor": models.cor, "inc": models.inc, "pos": models.pos,
                "precision": models.precision, "recall": models.recall,
            },
            "roles": {
                "cor": roles.counts.cor, "inc": roles.counts.inc,
                "mis": roles.counts.mis, "spu": roles.counts.spu,
                "pos": roles.counts.pos, "act": roles.counts.act,
                "und": roles.und, "ovr": roles.ovr, "sub": roles.sub,
                "err": roles.err, "pre": roles.pre, "rec": roles.rec,
                "f_pr": roles.f_pr, "f_2pr": roles.f_2pr, "f_p2r": roles.f_p2r,
            },
        }, path=args.report_json)
    return 0


def cmd_dump(args) -> int:
    try:
        sentences, lexicon, onto, store, compiler_config = _load_knowledge(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as error:
        print(f"caserole: {error}", file=sys.stderr)
        return 1
    for sentence in sentences:
        try:
            compiled = build_problem(sentence, lexicon, onto, store=store,
                                     config=compiler_config)
        except Exception as error:
            print(f"caserole: sentence {sentence.id}: {error}", file=sys.stderr)
            return 2
        sys.stdout.write(f"# problem for sentence {sentence.id}\n")
        sys.stdout.write(dump_problem(compiled.problem))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"parse": cmd_parse, "score": cmd_score, "dump": cmd_dump}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
