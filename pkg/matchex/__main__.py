from argparse import ArgumentParser, Namespace
from pathlib import Path
from sys import exit, stderr
from typing import Any, List, Optional

from .api.bounds import api_bounds_parse
from .api.extendability import api_extend_parse
from .api.parameters import PARAMETERS, api_parameter_parse
from .api.theorems import api_theorem_parse

from .API import Matchex

from .config.settings import Settings
from .harness.Reductions import verify_reductions
from .harness.Checks import CheckContext
from .harness.Report import replay_counterexamples
from .structures.Exceptions import InvalidArgument, MatchingException, ResourceLimitExceeded, UndefinedParameter
from .structures.Rational import parse_rational
from .theorems.Evaluators import TheoremParameters
from .util.Graph6 import to_graph6
from .util.GraphLoader import FORMATS, load_graphs
from .util.JsonEncoding import dumps, encode_bounds, encode_report, encode_verdict, encode_witness

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2
EXIT_GUARD = 3
EXIT_INPUT = 4


def _emit(value: Any):
    print(dumps(value, indent=Settings.json_indent))


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise InvalidArgument(str(e))


################################################################
#                          Subcommands                         #
################################################################

def _analyze(api: Matchex, args: Namespace) -> int:
    result = api.analyze()
    if args.json:
        _emit(result)
    return EXIT_OK


def _extend(api: Matchex, args: Namespace) -> int:
    if args.k is not None:
        prop, values = "k", [args.k]
    elif args.nfc is not None:
        prop, values = "nfc", [args.nfc]
    elif args.nk is not None:
        prop, values = "nk", args.nk
    else:
        prop, values = "emn", args.emn

    verdict = api.extend(prop, values, True if args.strict_disjoint else None)
    if args.json:
        _emit(encode_verdict(verdict))
    return EXIT_OK


def _param(api: Matchex, args: Namespace) -> int:
    result = api.parameter(args.name)
    if args.json:
        _emit({"kappa": result} if isinstance(result, int) else {args.name: encode_witness(result)})
    return EXIT_OK


def _thm(api: Matchex, args: Namespace) -> int:
    params = {name: getattr(args, name) for name in ("k", "n", "m", "girth") if getattr(args, name) is not None}
    report = api.theorem(args.id, _rational(args.eps), **params)
    if args.json:
        _emit(encode_report(report))
    return EXIT_VIOLATIONS if report.violation else EXIT_OK


def _bounds(api: Matchex, args: Namespace) -> int:
    bounds = api.bounds(args.k, args.girth, _rational(args.eps))
    if args.json:
        _emit(encode_bounds(bounds))
    return EXIT_OK


def _construct(api: Matchex, args: Namespace) -> int:
    api.set_print_result(False)
    graph = api.sharpness(args.n, args.t, args.r)
    if args.out:
        Path(args.out).write_text(to_graph6(graph) + "\n")
    else:
        print(to_graph6(graph))
    return EXIT_OK


def _ensemble(api: Matchex, args: Namespace) -> int:
    report = api.ensemble(args.config)
    if args.json:
        print(report.to_json())
    return report.exit_code()


def _reductions(api: Matchex, args: Namespace) -> int:
    corpus = load_graphs(args.input, args.format)
    parameters = {"k": args.k, "n": args.n}
    report = verify_reductions(corpus, CheckContext(parameters), api.output)
    if args.json:
        print(report.to_json())
    return report.exit_code()


def _replay(api: Matchex, args: Namespace) -> int:
    outcomes = replay_counterexamples(args.path)
    failed = [(index, check) for index, check, ok in outcomes if not ok]
    if args.json:
        _emit({"replayed": len(outcomes), "failed": [{"index": i, "id": c} for i, c in failed]})
    else:
        print(f"{len(outcomes)} certificates replayed, {len(failed)} failed")
    return EXIT_VIOLATIONS if failed else EXIT_OK


def _shell(api: Matchex, args: Namespace) -> int:
    interactive(api)
    return EXIT_OK


################################################################
#                         Argument Parser                      #
################################################################

def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="matchex", description="Exact, certificate-producing matching extension toolkit.")
    parser.add_argument("--detail", action="store_true", help="print search progress")
    commands = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, help_text: str) -> ArgumentParser:
        command = commands.add_parser(name, help=help_text)
        command.add_argument("input", help="a .g6 or .adj file holding one graph, or a graph6 string")
        command.add_argument("--format", choices=FORMATS, default=None)
        command.add_argument("--json", action="store_true", help="emit JSON on standard out")
        return command

    graph_command("analyze", "parameters and Gallai-Edmonds decomposition").set_defaults(run=_analyze)

    extend = graph_command("extend", "decide an extendability property, with certificate")
    group = extend.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, metavar="K")
    group.add_argument("--nfc", type=int, metavar="N")
    group.add_argument("--nk", type=int, nargs=2, metavar=("N", "K"))
    group.add_argument("--emn", type=int, nargs=2, metavar=("M", "N"))
    extend.add_argument("--strict-disjoint", action="store_true", help="require M and N to share no vertex")
    extend.set_defaults(run=_extend)

    param = graph_command("param", "exact binding number, toughness or connectivity")
    param.add_argument("name", choices=PARAMETERS)
    param.set_defaults(run=_param)

    thm = graph_command("thm", "evaluate a theorem's hypotheses and conclusion")
    thm.add_argument("--id", required=True, help="descriptive id or numeric alias, e.g. 3.1")
    thm.add_argument("--eps", required=True, metavar="P/Q")
    for name in ("k", "n", "m", "girth"):
        thm.add_argument(f"--{name}", type=int, default=None)
    thm.set_defaults(run=_thm)

    bounds = commands.add_parser("bounds", help="claim bounds and order threshold")
    bounds.add_argument("--k", type=int, required=True)
    bounds.add_argument("--girth", type=int, required=True)
    bounds.add_argument("--eps", required=True, metavar="P/Q")
    bounds.add_argument("--json", action="store_true")
    bounds.set_defaults(run=_bounds)

    construct = commands.add_parser("construct", help="build a named construction as graph6")
    construct.add_argument("family", choices=["sharpness"])
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--t", type=int, required=True)
    construct.add_argument("--r", type=int, required=True)
    construct.add_argument("--out", default=None)
    construct.set_defaults(run=_construct)

    ensemble = commands.add_parser("ensemble", help="run a seeded ensemble")
    ensemble.add_argument("--config", required=True, help="a .json, .yml or .yaml ensemble configuration")
    ensemble.add_argument("--json", action="store_true")
    ensemble.set_defaults(run=_ensemble)

    reductions = commands.add_parser("reductions", help="check the reduction properties on a corpus")
    reductions.add_argument("input", help="a graph6 file, one graph per line")
    reductions.add_argument("--format", choices=FORMATS, default=None)
    reductions.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    reductions.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    reductions.add_argument("--json", action="store_true")
    reductions.set_defaults(run=_reductions)

    replay = commands.add_parser("replay", help="re-verify a persisted counterexample corpus")
    replay.add_argument("path", nargs="?", default=None)
    replay.add_argument("--json", action="store_true")
    replay.set_defaults(run=_replay)

    commands.add_parser("shell", help="interactive prompt").set_defaults(run=_shell)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.
    @return: 0 on success, 2 if violations were found, 3 if a guard was exceeded, 4 on an input error, 1 on any other
        error during an ensemble
    """
    args = build_parser().parse_args(argv)

    quiet = getattr(args, "json", False)
    api = Matchex(print_result=not quiet, print_detail=args.detail and not quiet)

    if getattr(args, "command") == "replay" and args.path is None:
        args.path = Settings.counterexample_directory

    try:
        if getattr(args, "input", None) is not None and args.command != "reductions":
            api.load_graph(args.input, args.format)
        return args.run(api, args)

    except ResourceLimitExceeded as e:
        print(f"Guard exceeded: {e}", file=stderr)
        return EXIT_GUARD

    except (InvalidArgument, UndefinedParameter, FileNotFoundError) as e:
        print(f"Input error: {e}", file=stderr)
        return EXIT_INPUT

    except MatchingException as e:
        print(f"Error: {e}", file=stderr)
        return EXIT_ERROR


################################################################
#                       Interactive Prompt                     #
################################################################

def interactive(api: Matchex):
    """
    Run an interactive prompt over the API: "load <file or graph6>", then queries such as "extend k 2",
    "param binding", "thm 3.1 eps=1/2 n=4" or "bounds k=1 girth=3 eps=1/10".
    """
    def skip(*args, **kwargs):
        return {}

    def extend(prop, values, strict_disjoint):
        return api.extend(prop, values, strict_disjoint)

    def theorem(theorem_id, params: TheoremParameters, eps):
        return api.theorem(theorem_id, eps, **{name: getattr(params, name) for name in ("k", "n", "m", "girth")
                                               if getattr(params, name) is not None})

    def bounds(k, girth, eps):
        return api.bounds(k, girth, eps)

    api.set_print_result(True)

    # (parser, api function) -> keywords; the parser turns the rest of the line into the function's keyword arguments
    api_map = {
        (api_extend_parse, extend): ["extend", "ext", "e"],
        (api_parameter_parse, lambda name: api.parameter(name)): ["param", "parameter", "p"],
        (api_theorem_parse, theorem): ["thm", "theorem", "t"],
        (api_bounds_parse, bounds): ["bounds", "b"],
        (skip, api.analyze): ["analyze", "a"]
    }

    load_options = ["load", "graph"]
    exit_options = ["quit", "exit", "q"]

    assert len(set().union(*api_map.values())) == sum(map(len, api_map.values())), \
        "Conflicting keywords; one input maps to more than one option!"

    lookup = dict()
    for f, v in api_map.items():
        lookup.update({k: f for k in v})

    while user_str := input(">> ").strip().split(" ", 1):

        f = user_str[0].lower().strip()
        arg = user_str[1].strip() if len(user_str) == 2 else ""

        if f in exit_options:
            break

        try:
            if f in load_options:
                api.load_graph(arg)
                continue

            if f not in lookup:
                print("Error; input not in options.")
                continue

            parse, func = lookup[f]
            func(**parse(arg))

        except (InvalidArgument, ResourceLimitExceeded, UndefinedParameter, FileNotFoundError) as e:
            print(f"Error: {e}")


def run():
    exit(main())


if __name__ == "__main__":
    run()
