"""Main entry point for the partial braid toolkit"""
import argparse
import json
import logging
import sys

import pandas as pd

from abelian.abelianization import abelianize, to_mod2
from config import Config
from errors import AlgebraError, EnumerationCapError, RankMismatchError
from free_partial.partial_iso import PartialFreeIso, compose_efn
from homomorphisms.action import EvalContext, eval_word
from homomorphisms.lifts import factorised_word, normal_form_of
from homomorphisms.verification import VerificationEngine, check_diagram_batch
from monoids.enumeration import cardinality_formula, check_cap, enumerate_elements, enumeration_cap
from monoids.partial_perm import SignedPartialPerm, compose
from presentations.normal_form import EpsilonVariant
from presentations.registry import PresentationId, relations_for
from presentations.words import Word
from render.diagrams import render_dot, render_text, strand_figure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(args, text, payload):
    print(json.dumps(payload, separators=(",", ":")) if args.json else text)


def _operand(text, n, signed):
    """An element in text/JSON form, or a word to be evaluated"""
    if text.lstrip().startswith(("[", "{")):
        element = SignedPartialPerm.parse(text)
        if element.n != n:
            raise RankMismatchError(element.n, n)
        return element
    return eval_word(Word.parse(text, n), EvalContext(n, signed))


def cmd_eval(args):
    w = Word.parse(args.word, args.n)
    image = eval_word(w, EvalContext(w.rank, not args.unsigned))
    _emit(args, image.to_text(), {"word": str(w), "image": image.to_dict()})
    return EXIT_OK


def cmd_compose(args):
    signed = not args.unsigned
    left = _operand(args.left, args.n, signed)
    right = _operand(args.right, args.n, signed)
    result = compose(left, right)
    _emit(args, result.to_text(), {"left": left.to_dict(), "right": right.to_dict(), "result": result.to_dict()})
    return EXIT_OK


def cmd_verify(args):
    engine = VerificationEngine(args.presentation)
    report = engine.run(args.n)
    if args.json:
        print(report.to_json())
    else:
        print(report.summary())
        if not report.all_equal:
            failures = report.to_frame()
            print(failures[~failures['equal']].to_string(index=False))
    return EXIT_OK if report.all_equal else EXIT_FAILED


def cmd_count(args):
    signed = not args.unsigned
    formula = cardinality_formula(args.n, signed)
    cap = enumeration_cap(signed)
    enumerated = None
    if args.n <= cap:
        enumerated = sum(1 for _ in enumerate_elements(args.n, signed))
    if enumerated is None:
        text = f"formula {formula}, enumerated skipped (cap {cap})"
    else:
        text = f"formula {formula}, enumerated {enumerated}"
    _emit(args, text, {"n": args.n, "signed": signed, "formula": formula, "enumerated": enumerated})
    if enumerated is not None and enumerated != formula:
        return EXIT_FAILED
    return EXIT_OK


def cmd_enumerate(args):
    signed = not args.unsigned
    check_cap(args.n, signed)
    elements = enumerate_elements(args.n, signed)
    if args.table:
        frame = pd.DataFrame([
            {
                'element': a.to_text(),
                'rank': a.rank,
                'unit': a.is_unit(),
                'idempotent': a.is_idempotent()
            }
            for a in elements
        ])
        print(frame.to_json(orient='records') if args.json else frame.to_string(index=False))
        return EXIT_OK
    for a in elements:
        print(a.to_json() if args.json else a.to_text())
    return EXIT_OK


def cmd_normal_form(args):
    a = SignedPartialPerm.parse(args.element)
    if args.n is not None and a.n != args.n:
        raise RankMismatchError(a.n, args.n)
    if args.factorised:
        w = factorised_word(a)
    else:
        w = normal_form_of(a, EpsilonVariant(args.variant))
    _emit(args, str(w), {"element": a.to_dict(), "word": str(w)})
    return EXIT_OK


def cmd_abelianize(args):
    w = Word.parse(args.word, args.n)
    image = abelianize(w)
    if args.mod2:
        image = to_mod2(image)
    _emit(args, str(image), {"word": str(w), "image": image.to_dict()})
    return EXIT_OK


def cmd_render(args):
    w = Word.parse(args.word, args.n)
    a = eval_word(w, EvalContext(w.rank, not args.unsigned))
    if args.format == 'dot':
        diagram = render_dot(a)
    elif args.format == 'html':
        diagram = strand_figure(a, title=f"{w} = {a}").to_html(include_plotlyjs='cdn')
    else:
        diagram = render_text(a)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.write(diagram)
        logger.info("Wrote %s diagram to %s", args.format, args.output)
        diagram = args.output
    _emit(args, diagram, {"word": str(w), "image": a.to_dict(), "format": args.format, "diagram": diagram})
    return EXIT_OK


def cmd_relations(args):
    table = relations_for(args.presentation, args.n)
    if args.json:
        rows = [{"lhs": str(r.lhs), "rhs": str(r.rhs), "family": r.family} for r in table]
        print(json.dumps({"id": table.id, "n": table.rank, "relations": rows}, separators=(",", ":")))
        return EXIT_OK
    for relation in table:
        print(f"{relation}    [{relation.family}]")
    return EXIT_OK


def cmd_diagram(args):
    trials = args.trials or Config.RANDOM_TRIALS
    failures = check_diagram_batch(args.n, trials=trials, length=args.length, seed=args.seed)
    _emit(args, f"check_diagram n={args.n}: {failures}/{trials} failures",
          {"n": args.n, "trials": trials, "failures": failures})
    return EXIT_OK if failures == 0 else EXIT_FAILED


def cmd_efn(args):
    f = PartialFreeIso.parse(args.left, args.n)
    g = PartialFreeIso.parse(args.right, args.n)
    result = compose_efn(f, g)
    _emit(args, result.to_text(), result.to_dict())
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='machine-readable output')
    common.add_argument('-v', '--verbose', action='count', default=0, help='raise the log level (repeatable)')

    parser = argparse.ArgumentParser(
        prog='main.py',
        description='Inverse braid monoids of type B and their signed partial permutation images. '
                    'Products read left to right: "a b" means a, then b.'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', parents=[common], help='image of a word under rho_B')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--unsigned', action='store_true', help='evaluate in I_n instead')
    p.add_argument('word')
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser('compose', parents=[common], help='product of two words or elements')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--unsigned', action='store_true')
    p.add_argument('left')
    p.add_argument('right')
    p.set_defaults(handler=cmd_compose)

    presentation_ids = [pid.value for pid in PresentationId]

    p = sub.add_parser('verify', parents=[common], help='check every relation of a presentation')
    p.add_argument('--presentation', required=True, type=str.upper, choices=presentation_ids)
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('relations', parents=[common], help='print a relation table')
    p.add_argument('--presentation', required=True, type=str.upper, choices=presentation_ids)
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(handler=cmd_relations)

    p = sub.add_parser('count', parents=[common], help='cardinality formula against enumeration')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--unsigned', action='store_true')
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser('enumerate', parents=[common], help='list every element')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--unsigned', action='store_true')
    p.add_argument('--table', action='store_true', help='tabulate with rank, unit and idempotent columns')
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser('normal-form', parents=[common], help='representative word of an element')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--factorised', action='store_true', help='idempotent word followed by a unit word')
    p.add_argument('--variant', choices=[v.value for v in EpsilonVariant], default=EpsilonVariant.PRODUCT.value)
    p.add_argument('element')
    p.set_defaults(handler=cmd_normal_form)

    p = sub.add_parser('abelianize', parents=[common], help='image in the abelianization')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--mod2', action='store_true')
    p.add_argument('word')
    p.set_defaults(handler=cmd_abelianize)

    p = sub.add_parser('render', parents=[common], help='strand diagram of the image of a word')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--unsigned', action='store_true')
    p.add_argument('--format', choices=['text', 'dot', 'html'], default='text')
    p.add_argument('--output', default=None, help='write the diagram to a file')
    p.add_argument('word')
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser('diagram', parents=[common], help='random words through both routes to I(B_n)')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--length', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.set_defaults(handler=cmd_diagram)

    p = sub.add_parser('efn', parents=[common], help='compose two partial free-group isomorphisms')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('left')
    p.add_argument('right')
    p.set_defaults(handler=cmd_efn)

    return parser


def _configure_logging(verbose):
    level = logging.getLevelName(Config.LOG_LEVEL)
    if verbose == 1:
        level = min(level, logging.INFO)
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=Config.LOG_FORMAT, force=True)


def run(argv=None):
    """Parse argv, dispatch, and return the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except EnumerationCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
