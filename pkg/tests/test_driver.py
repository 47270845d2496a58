from fractions import Fraction
from io import StringIO
from json import loads
from pathlib import Path
from pickle import dumps as pickle_dumps, loads as pickle_loads

from networkx import max_weight_matching, node_connectivity
from pytest import raises

# api
from matchex.api.analyze import api_analyze
from matchex.api.bounds import api_bounds, api_bounds_parse
from matchex.api.extendability import api_extend, api_extend_parse
from matchex.api.parameters import api_parameter, api_parameter_parse
from matchex.api.theorems import api_theorem_parse

from matchex.API import Matchex
from matchex.__main__ import EXIT_GUARD, EXIT_INPUT, EXIT_OK, main

from matchex.config.config_manager import create_default, validate
from matchex.config.generate_config_docs import configuration_markdown, generate_configuration_documentation
from matchex.config.settings import Settings

from matchex.harness.Checks import CheckContext, CheckResult
from matchex.harness.Ensemble import check_graph, ensemble_units, generator_grid, run_ensemble
from matchex.harness.EnsembleConfig import EnsembleConfig, GuardOverride, config_from_dict, load_ensemble_config
from matchex.harness.Oracles import brute_matching_number, brute_tutte_violator
from matchex.harness.Properties import PROPERTY_SUITES
from matchex.harness.Reductions import verify_reductions
from matchex.harness.Report import RunReport, error_record, graph_record, persist_counterexamples, \
    replay_counterexamples
from matchex.harness.Seeds import graph_seed, sub_seed

from matchex.structures.Connectivity import is_cut_set, vertex_connectivity
from matchex.structures.Exceptions import Graph6ParseError, InvalidArgument, InvalidCertificate, \
    ResourceLimitExceeded, UndefinedParameter
from matchex.structures.ExtendabilityChecker import ExtendabilityCertificate, ExtendabilityChecker, \
    assert_certificate, emn_extendable_by_deletion, is_Emn_extendable, is_k_extendable, is_n_factor_critical, \
    is_nk_extendable, replay_certificate
from matchex.structures.GallaiEdmonds import BarrierCertificate, barrier_certificate, count_fc_components, \
    gallai_edmonds, is_factor_critical, tutte_violator, verify_barrier, verify_tutte
from matchex.structures.Generators import complete, complete_bipartite, cycle, disjoint_union, empty, join, path, \
    petersen, random_graph, random_regular, star
from matchex.structures.Graph import Graph
from matchex.structures.MatchingEngine import Matching, enumerate_k_matchings, has_perfect_matching, is_matching, \
    matching_number, max_matching, perfect_matching_containing_avoiding
from matchex.structures.Parameters import binding_number, toughness
from matchex.structures.Rational import INFINITY, as_rational, is_infinite, parse_rational, rational_str

from matchex.theorems.Evaluators import SKIPPED_GUARD, GraphFacts, TheoremId, TheoremParameters, evaluate
from matchex.theorems.ProofLedger import audit_claims, binding_bound_ledger, claim_bounds, g0_of_girth, threshold_N
from matchex.theorems.ToughnessBound import sharpness_construction, sharpness_eps_bound, sharpness_hub, \
    toughness_certificate_bound

from matchex.util.Graph6 import from_graph6, read_graph6_lines, to_graph6
from matchex.util.GraphLoader import load_graph, load_graphs, parse_adjacency, parse_graphs
from matchex.util.helpers import colex_combinations, colex_masks, members, splitmix64
from matchex.util.OutputLogger import OutputLogger
from matchex.util.JsonEncoding import decode_certificate, decode_rational, dumps, encode_certificate, \
    encode_rational, encode_witness

from tests.extendability.extendability_tests import extendability_tests
from tests.parameters.parameter_tests import parameter_tests
from tests.theorems.theorem_tests import theorem_tests

from tests.test_util import brute_binding_number, brute_toughness, print_test_result, witness_ratio


# Default location for the graph files shipped with the package
graphs = Path("matchex", "graphs")
ensembles = graphs / "ensembles"

c6 = cycle(6)
c5 = cycle(5)
k4 = complete(4)

# A fixed sample of small G(n, 1/2) graphs, for comparisons against the exhaustive oracles
sample = [random_graph(n, "1/2", seed) for n in range(2, 9) for seed in range(6)]


# api

def test_api_extend():

    assert api_extend_parse("k 2") == {"prop": "k", "values": [2], "strict_disjoint": None}
    assert api_extend_parse("emn 1 1 strict") == {"prop": "emn", "values": [1, 1], "strict_disjoint": True}
    assert api_extend_parse("NK 1 2") == {"prop": "nk", "values": [1, 2], "strict_disjoint": None}

    for bad in ["", "k", "k 1 2", "nfc -1", "foo 1"]:
        with raises(InvalidArgument):
            api_extend_parse(bad)

    assert api_extend(c6, "k", [1]).holds
    assert not api_extend(c6, "k", [2]).holds

    with raises(InvalidArgument):
        api_extend(c6, "bogus", [1])


def test_api_parameter():

    assert api_parameter_parse(" Binding ") == {"name": "binding"}
    with raises(InvalidArgument):
        api_parameter_parse("girth")

    assert api_parameter(c5, "binding").value == Fraction(4, 3)
    assert api_parameter(c6, "toughness").witness == (0, 2)
    assert api_parameter(k4, "kappa") == 3


def test_api_theorem():

    parsed = api_theorem_parse("3.1 eps=1/2 n=4")
    assert parsed == {"theorem_id": TheoremId.TOUGHNESS_N_FACTOR_CRITICAL, "params": TheoremParameters(n=4),
                      "eps": Fraction(1, 2)}

    parsed = api_theorem_parse("binding-k-extendable eps=1/10 k=1 girth=5")
    assert parsed["params"] == TheoremParameters(k=1, girth=5)

    for bad in ["", "3.1", "3.1 eps=0.5", "3.1 eps=1/2 q=3", "3.1 eps=1/2 n", "9.9 eps=1/2"]:
        with raises(InvalidArgument):
            api_theorem_parse(bad)


def test_api_bounds():

    assert api_bounds_parse("k=1 girth=3 eps=1/10") == {"k": 1, "girth": 3, "eps": Fraction(1, 10)}

    for bad in ["k=1 girth=3", "k=1 girth=3 eps=x", "k=1 girth=3 eps=1/10 q=2"]:
        with raises(InvalidArgument):
            api_bounds_parse(bad)

    bounds = api_bounds(1, 3, "1/10")
    assert bounds.g0 == 3 and bounds.n == 58

    with raises(InvalidArgument):
        api_bounds(1, 2, "1/10")


def test_api_analyze():

    result = api_analyze(c6)
    assert result["graph6"] == "EhEG"
    assert result["order"] == 6 and result["size"] == 6
    assert result["connected"] and result["girth"] == 6
    assert result["matching_number"] == 3 and result["kappa"] == 2
    assert result["binding"] == {"num": 1, "den": 1, "witness": [0, 2, 4]}
    assert result["toughness"] == {"num": 1, "den": 1, "witness": [0, 2]}
    assert result["gallai_edmonds"] == {"d": [], "a": [], "c": [0, 1, 2, 3, 4, 5], "d_components": [],
                                        "deficiency": 0}

    result = api_analyze(path(3))
    assert result["girth"] == "inf"
    assert result["gallai_edmonds"]["a"] == [1]

    assert api_analyze(Graph(1))["binding"] is None


# API

def test_matchex_api():

    api = Matchex()
    with raises(InvalidArgument):
        _ = api.graph

    api.load_graph(graphs / "c6.g6")
    assert api.graph == c6

    api.load_graph(str(graphs / "c6.adj"))
    assert api.graph == c6

    api.load_graph("Dhc")
    assert api.graph == c5

    with raises(FileNotFoundError):
        api.load_graph(Path("fake", "path", "graph.g6"))

    with raises(InvalidArgument):
        api.load_graph("C")

    api.load_graph(c6)
    assert api.k_extendable(1).holds
    assert not api.k_extendable(2).holds
    assert not api.emn_extendable(1, 1).holds
    assert api.emn_extendable(0, 1, strict_disjoint=True).holds
    assert api.binding_number().value == 1
    assert api.toughness().value == 1
    assert api.connectivity() == 2
    assert api.analyze()["matching_number"] == 3

    report = api.theorem("3.2", "1/2", k=1)
    assert not report.applicable and report.conclusion_checked

    assert api.bounds(2, 3, "1/4").s_max == 8

    graph = api.sharpness(4, 1, 3)
    assert api.graph is graph
    assert not api.n_factor_critical(4).holds
    assert api.nk_extendable(2, 1).holds is not None


def test_cli():

    assert main(["extend", str(graphs / "c6.g6"), "--k", "1"]) == EXIT_OK
    assert main(["bounds", "--k", "1", "--girth", "3", "--eps", "1/10"]) == EXIT_OK
    assert main(["--detail", "analyze", "EhEG"]) == EXIT_OK
    assert main(["reductions", str(graphs / "corpus.g6"), "--k", "1", "--n", "1"]) == EXIT_OK

    assert main(["extend", "Dhc", "--k", "1"]) == EXIT_INPUT
    assert main(["analyze", str(Path("fake", "path", "graph.g6"))]) == EXIT_INPUT
    assert main(["thm", "EhEG", "--id", "3.2", "--eps", "0.5", "--k", "1"]) == EXIT_INPUT
    assert main(["param", to_graph6(complete(Settings.parameter_vertex_limit + 1)), "binding"]) == EXIT_GUARD


def test_cli_json(capsys):

    assert main(["extend", str(graphs / "c6.g6"), "--k", "2", "--json"]) == EXIT_OK
    verdict = loads(capsys.readouterr().out)
    assert verdict["holds"] is False
    assert verdict["certificate"]["required_matching"] == [[0, 1], [3, 4]]

    assert main(["param", "Dhc", "binding", "--json"]) == EXIT_OK
    assert loads(capsys.readouterr().out) == {"binding": {"num": 4, "den": 3, "witness": [0, 1, 3]}}

    assert main(["param", "C~", "toughness", "--json"]) == EXIT_OK
    assert loads(capsys.readouterr().out) == {"toughness": "inf"}

    assert main(["param", "C~", "kappa", "--json"]) == EXIT_OK
    assert loads(capsys.readouterr().out) == {"kappa": 3}

    assert main(["thm", str(graphs / "sharpness_4_1_3.g6"), "--id", "3.1", "--eps", "1/2", "--n", "4",
                 "--json"]) == EXIT_OK
    report = loads(capsys.readouterr().out)
    assert report["id"] == "toughness-n-factor-critical"
    assert report["applicable"] is False and report["holds"] is False
    assert report["toughness_bound"] == {"num": 5, "den": 3}

    assert main(["bounds", "--k", "1", "--girth", "3", "--eps", "1/10", "--json"]) == EXIT_OK
    bounds = loads(capsys.readouterr().out)
    assert bounds["threshold"] == 58
    assert bounds["s_max"] == {"num": 20, "den": 3} and bounds["l_max"] == {"num": 23, "den": 3}

    assert main(["construct", "sharpness", "--n", "4", "--t", "1", "--r", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "I~~~vrx}W\n"


def test_cli_ensemble(tmp_path):

    config = tmp_path / "small.yml"
    config.write_text("model: generator_grid\norders: [4, 6]\nchecks: [tutte, barrier]\n"
                      f"counterexample_directory: {tmp_path / 'found'}\n")
    assert main(["ensemble", "--config", str(config)]) == EXIT_OK
    assert not (tmp_path / "found").exists()

    assert main(["ensemble", "--config", str(tmp_path / "missing.yml")]) == EXIT_INPUT
    assert main(["replay", str(tmp_path / "found")]) == EXIT_INPUT


# config/

def test_settings():
    assert Settings.parameter_vertex_limit > 0
    assert Settings.oracle_vertex_limit > 0
    assert isinstance(Settings.strict_disjoint, bool)
    assert Settings.json_indent >= 0

    defaults = create_default()
    assert defaults["max_configurations"] == 100_000_000
    assert defaults["strict_disjoint"] is False
    assert validate(dict(defaults)) == defaults

    for key, value in [("parameter_vertex_limit", 0), ("strict_disjoint", "yes"), ("json_indent", -1),
                       ("ensemble_workers", True), ("counterexample_directory", "")]:
        with raises(InvalidArgument):
            validate({**defaults, key: value})


def test_configuration_docs(tmp_path):
    page = configuration_markdown()
    for key in create_default():
        assert f"``{key}``" in page
    assert "## Resource Guards" in page

    destination = tmp_path / "Configuration.md"
    generate_configuration_documentation(destination)
    assert destination.read_text() == page
    assert page == Path("wiki", "pages", "Configuration.md").read_text()


# harness/

def test_seeds():

    # splitmix64 seeded with 0 produces these two words first
    assert graph_seed(0, 0) == 0xE220A8397B1DCDAF
    assert graph_seed(0, 1) == 0x6E789E6AA1B965F4

    seeds = [graph_seed(2024, i) for i in range(100)]
    assert len(set(seeds)) == 100
    assert all(0 <= s < 2 ** 64 for s in seeds)
    assert sub_seed(seeds[0], 0) != sub_seed(seeds[0], 1)
    assert graph_seed(2 ** 64 - 1, 3) == graph_seed(2 ** 64 - 1, 3)


def test_ensemble_config():

    config = config_from_dict({"eps": ["1/2", "1/4"], "probability": ["1/4", "3/4"], "probability_steps": 4})
    assert config.eps == [Fraction(1, 2), Fraction(1, 4)]
    assert config.probabilities() == [Fraction(1, 4), Fraction(3, 8), Fraction(1, 2), Fraction(5, 8), Fraction(3, 4)]

    assert EnsembleConfig(model="random_regular", orders=(6, 8), degrees=[3]).regular_pairs() == [(6, 3), (8, 3)]

    bad = [{"model": "bogus"}, {"unknown": 1}, {"eps": [0.5]}, {"eps": ["0"]}, {"seed": -1}, {"orders": [5, 4]},
           {"probability": ["1/2", "3/2"]}, {"checks": ["not-a-check"]}, {"parameters": {"q": [1]}},
           {"guards": {"bogus": 1}}, {"workers": 0}, {"model": "random_regular", "orders": [3, 3], "degrees": [3]}]

    for data in bad:
        with raises(InvalidArgument):
            config_from_dict(data)

    for file in sorted(ensembles.iterdir()):
        config = load_ensemble_config(file)
        assert config.checks
        assert config.to_dict()["model"] == config.model

    with raises(FileNotFoundError):
        load_ensemble_config(graphs / "c6.g6")


def test_guard_override():

    before = Settings.max_configurations
    with GuardOverride({"max_configurations": 7}):
        assert Settings.max_configurations == 7
        with raises(ResourceLimitExceeded):
            ExtendabilityChecker(complete(8)).k_extendable(1)
    assert Settings.max_configurations == before


def test_ensemble_units():

    config = EnsembleConfig(model="gnp", orders=(4, 9), samples=10, seed=5)
    first = ensemble_units(config)
    assert [index for index, _, _ in first] == list(range(10))
    assert [(g, o) for _, g, o in first] == [(g, o) for _, g, o in ensemble_units(config)]

    # A graph depends only on the master seed and its own index
    shorter = ensemble_units(EnsembleConfig(model="gnp", orders=(4, 9), samples=4, seed=5))
    assert [g for _, g, _ in shorter] == [g for _, g, _ in first[:4]]

    assert all(4 <= g.n <= 9 for _, g, _ in first)
    assert all(o["family"] == "gnp" for _, _, o in first)

    regular = ensemble_units(EnsembleConfig(model="random_regular", orders=(6, 10), degrees=[3, 4], samples=5))
    for _, g, o in regular:
        assert all(g.degree(v) == o["degree"] for v in g.vertices())

    grid = generator_grid((4, 8))
    assert sum(1 for _, o in grid if o["family"] == "sharpness") == 3
    assert all(4 <= g.n <= 8 for g, _ in grid)


def test_run_ensemble_deterministic():

    config = EnsembleConfig(model="gnp", orders=(4, 7), samples=6, seed=3,
                            checks=["matching-oracle", "tutte", "barrier", "gallai-edmonds", "toughness-k-extendable"],
                            parameters={"k": [1]})
    first = run_ensemble(config, persist=False)
    second = run_ensemble(config, persist=False)

    assert first.to_json() == second.to_json()
    assert len(first.graphs) + len(first.errors) == 6
    assert first.errors == []
    assert first.violations() == []
    assert first.exit_code() == 0
    assert "timing_ms" not in first.summary()

    timed = run_ensemble(EnsembleConfig(model="gnp", orders=(4, 5), samples=2, record_timing=True), persist=False)
    assert "timing_ms" in timed.summary()


def test_generator_grid_sharpness():

    report = run_ensemble(EnsembleConfig(model="generator_grid", orders=(4, 8), checks=["sharpness"]), persist=False)
    counts = report.summary()["checks"]["sharpness"]
    assert counts["applicable"] == 3
    assert counts["holds"] == 3
    assert counts["violations"] == 0


def test_property_suites():

    results = check_graph(petersen(), {"family": "petersen"}, list(PROPERTY_SUITES), CheckContext())
    assert results
    assert not any(r.violation for r in results)
    assert {r.id for r in results} >= {"matching-oracle", "tutte", "barrier", "gallai-edmonds"}

    origin = {"family": "sharpness", "n": 4, "t": 1, "r": 3}
    result, = check_graph(sharpness_construction(4, 1, 3), origin, ["sharpness"], CheckContext())
    assert result.applicable and result.holds
    assert result.certificate["removed_vertices"] == [0, 1, 2, 3]
    assert result.details["eps"] == {"num": 1, "den": 3}
    assert result.details["missed_hypotheses"] == ["connectivity strictly above"]

    ledger, = check_graph(c6, {}, ["binding-ledger"], CheckContext({"k": [2]}))
    assert ledger.applicable and ledger.holds
    assert ledger.details["ledger"]["f"] == {"num": 4, "den": 1}

    for graph in sample:
        results = check_graph(graph, {}, ["matching-oracle", "tutte", "barrier", "gallai-edmonds",
                                          "factor-critical-bridges", "binding-perfect-matching",
                                          "toughness-perfect-matching"], CheckContext())
        assert not any(r.violation for r in results)


def test_oracles():

    assert brute_matching_number(petersen()) == 5
    assert brute_matching_number(empty(3)) == 0
    assert brute_tutte_violator(c6) is None

    violator = brute_tutte_violator(star(3))
    assert violator.s == (0,) and violator.odd_components == [(1,), (2,), (3,)]

    with raises(ResourceLimitExceeded):
        brute_matching_number(complete(6), limit=5)
    with raises(ResourceLimitExceeded):
        brute_tutte_violator(complete(6), limit=5)


def test_reductions():

    corpus = load_graphs(graphs / "corpus.g6")
    report = verify_reductions(corpus, CheckContext({"k": [1, 2], "n": [1]}))

    assert len(report.graphs) == 4
    assert report.violations() == []
    assert report.exit_code() == 0
    assert report.summary()["checks"]["edge-deletion"]["applicable"] > 0

    empty_report = verify_reductions([])
    assert empty_report.graphs == [] and empty_report.exit_code() == 0


def test_report_and_replay(tmp_path):

    verdict = is_k_extendable(c6, 2)
    planted = CheckResult("planted", True, False, {"k": 2}, encode_certificate(verdict.certificate))
    report = RunReport(config={"model": "test"}, graphs=[graph_record(0, c6, {"family": "cycle"}, [planted])])

    assert report.violations() == [{"index": 0, "graph6": "EhEG", "id": "planted", "parameters": {"k": 2}}]
    assert report.exit_code() == 2
    assert report.to_dict()["graphs"][0]["binding"] == {"num": 1, "den": 1, "witness": [0, 2, 4]}

    written = persist_counterexamples(report, tmp_path)
    assert written == tmp_path
    assert (tmp_path / "counterexamples.g6").read_text() == "EhEG\n"
    assert replay_counterexamples(tmp_path) == [(0, "planted", True)]

    # A certificate whose matching extends no longer replays
    stored = tmp_path / "counterexamples.json"
    data = loads(stored.read_text())
    data["counterexamples"][0]["checks"][0]["certificate"]["required_matching"] = [[0, 1], [2, 3]]
    stored.write_text(dumps(data))
    assert replay_counterexamples(stored) == [(0, "planted", False)]

    assert persist_counterexamples(RunReport(), tmp_path / "none") is None
    assert not (tmp_path / "none").exists()

    errored = RunReport(errors=[error_record(1, c5, RuntimeError("boom"))])
    assert errored.exit_code() == 1
    assert errored.errors[0]["error"] == "RuntimeError: boom"

    with raises(FileNotFoundError):
        replay_counterexamples(tmp_path / "none")


# structures/

def test_rational():

    assert parse_rational("1/4") == Fraction(1, 4)
    assert parse_rational(" -3/7 ") == Fraction(-3, 7)
    assert parse_rational("2") == 2

    for bad in ["0.5", "1/0", "", "a/b", "1//2"]:
        with raises(ValueError):
            parse_rational(bad)

    assert as_rational(3) == 3 and as_rational("6/8") == Fraction(3, 4)
    with raises(TypeError):
        as_rational(0.5)

    assert INFINITY > Fraction(10 ** 9) and INFINITY >= INFINITY and INFINITY == INFINITY
    assert not INFINITY < 3 and Fraction(1, 2) < INFINITY and 7 <= INFINITY
    assert INFINITY != Fraction(1) and is_infinite(INFINITY) and not is_infinite(Fraction(1))
    assert pickle_loads(pickle_dumps(INFINITY)) is INFINITY

    assert rational_str(Fraction(4, 3)) == "4/3"
    assert rational_str(Fraction(6, 3)) == "2"
    assert rational_str(INFINITY) == "inf"


def test_graph():

    for n, edges in [(3, [(0, 0)]), (3, [(0, 1), (1, 0)]), (3, [(0, 3)]), (-1, [])]:
        with raises(InvalidArgument):
            Graph(n, edges)

    assert c6.size() == 6 and c6.degree(0) == 2 and c6.min_degree() == 2
    assert c6.neighborhood((0, 2)) == (1, 3, 5)
    assert c6.neighborhood(()) == ()
    with raises(InvalidArgument):
        c6.neighborhood((6,))

    assert c6.components((0, 3)) == [(1, 2), (4, 5)]
    assert c6.odd_component_count((0, 2)) == 2
    assert not disjoint_union(k4, k4).is_connected()

    assert c6.girth() == 6 and petersen().girth() == 5 and k4.girth() == 3
    assert complete_bipartite(3, 3).girth() == 4
    assert path(5).girth() is INFINITY

    reduced = c6.delete_vertices((0, 3))
    assert reduced.labels == (1, 2, 4, 5)
    assert reduced.original((0, 2)) == (1, 4)
    assert reduced.edges == ((0, 1), (2, 3))

    arc = c6.induced_subgraph((3, 1, 2))
    assert arc.labels == (1, 2, 3) and arc.edges == ((0, 1), (1, 2))
    assert reduced.induced_subgraph((1, 2)).labels == (2, 4)
    assert reduced.induced_subgraph((1, 2)).size() == 0

    assert c6.delete_edges([(1, 0)]).size() == 5
    with raises(InvalidArgument):
        c6.delete_edges([(0, 2)])

    assert set(c6.to_networkx().edges()) == set(c6.edges)
    assert c6 == cycle(6) and hash(c6) == hash(cycle(6)) and c6 != path(6)


def test_generators():

    assert complete(5).size() == 10 and complete(5).is_complete()
    assert empty(4).size() == 0
    assert star(3).degree(0) == 3
    assert complete_bipartite(2, 3).size() == 6

    p = petersen()
    assert p.n == 10 and p.size() == 15 and all(p.degree(v) == 3 for v in p.vertices())

    joined = join(complete(2), empty(3))
    assert joined.size() == 1 + 6

    with raises(InvalidArgument):
        cycle(2)

    assert random_graph(9, "1/3", 42) == random_graph(9, "1/3", 42)
    assert random_graph(9, 0, 1).size() == 0
    assert random_graph(9, 1, 1).is_complete()
    with raises(InvalidArgument):
        random_graph(4, "3/2", 0)

    regular = random_regular(10, 3, 8)
    assert regular == random_regular(10, 3, 8)
    assert all(regular.degree(v) == 3 for v in regular.vertices())
    with raises(InvalidArgument):
        random_regular(7, 3, 0)


def test_connectivity():

    assert vertex_connectivity(c6) == 2
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(k4) == 3
    assert vertex_connectivity(path(4)) == 1
    assert vertex_connectivity(empty(3)) == 0
    assert vertex_connectivity(sharpness_construction(4, 1, 3)) == 5

    assert is_cut_set(c6, (0, 3)) and not is_cut_set(c6, (0, 1))

    for graph in sample:
        assert vertex_connectivity(graph) == node_connectivity(graph.to_networkx())


def test_matching_engine():

    assert matching_number(petersen()) == 5
    assert matching_number(c5) == 2
    assert has_perfect_matching(c6) and not has_perfect_matching(c5)
    assert has_perfect_matching(Graph(0))
    assert max_matching(petersen()).is_perfect()

    with raises(InvalidArgument):
        Matching(cycle(4), [(0, 1), (1, 2)])
    with raises(InvalidArgument):
        Matching(cycle(4), [(0, 2)])
    assert is_matching(cycle(4), [(1, 0), (3, 2)])
    assert not is_matching(cycle(4), [(0, 2)])

    matchings = [m.edges for m in enumerate_k_matchings(cycle(4), 2)]
    assert matchings == [((0, 1), (2, 3)), ((0, 3), (1, 2))]
    assert [m.edges for m in enumerate_k_matchings(c6, 0)] == [()]
    assert len(list(enumerate_k_matchings(complete(6), 3))) == 15
    assert [m.edges for m in enumerate_k_matchings(c6, 1, excluded_vertices=(0, 1, 2))] == [((3, 4),), ((4, 5),)]

    with raises(ResourceLimitExceeded):
        list(enumerate_k_matchings(complete(6), 1, limit=3))
    with raises(InvalidArgument):
        list(enumerate_k_matchings(c6, -1))

    required = Matching(c6, [(0, 1)])
    assert perfect_matching_containing_avoiding(c6, required, [(2, 3)]) is None
    found = perfect_matching_containing_avoiding(c6, required)
    assert found.is_perfect() and (0, 1) in found
    with raises(InvalidArgument):
        perfect_matching_containing_avoiding(c6, required, [(0, 1)])

    for graph in sample:
        nu = matching_number(graph)
        assert nu == brute_matching_number(graph)
        assert nu == len(max_weight_matching(graph.to_networkx(), maxcardinality=True))
        assert len(max_matching(graph)) == nu


def test_gallai_edmonds():

    decomposition = gallai_edmonds(path(3))
    assert decomposition.d == (0, 2) and decomposition.a == (1,) and decomposition.c == ()
    assert decomposition.d_components == [(0,), (2,)]
    assert decomposition.deficiency() == 1

    violator = tutte_violator(path(3))
    assert violator.s == (1,) and violator.odd_components == [(0,), (2,)]
    assert tutte_violator(c6) is None

    barrier = barrier_certificate(star(3))
    assert barrier.s == (0,) and barrier.fc_components == [(1,), (2,), (3,)]
    assert barrier.surplus() == 2
    assert barrier_certificate(c6) is None
    with raises(InvalidArgument):
        barrier_certificate(c5)

    assert not verify_barrier(star(3), BarrierCertificate((), [(1,), (2,), (3,)]))
    assert not verify_barrier(star(3), BarrierCertificate((0,), [(1,), (2,)]))
    assert not verify_tutte(c6, violator)

    assert is_factor_critical(c5) and is_factor_critical(complete(3)) and is_factor_critical(Graph(1))
    assert not is_factor_critical(path(3)) and not is_factor_critical(c6)
    assert count_fc_components(star(3), (0,)) == 3

    for graph in sample:
        assert (tutte_violator(graph) is None) == has_perfect_matching(graph)
        if graph.n % 2 == 0 and not has_perfect_matching(graph):
            assert verify_barrier(graph, barrier_certificate(graph))


def test_extendability_checker():

    verdict = is_k_extendable(c6, 2)
    assert not verdict and verdict.checked_count == 2
    assert verdict.certificate.required_matching.edges == ((0, 1), (3, 4))
    assert replay_certificate(c6, verdict.certificate)
    assert_certificate(c6, verdict.certificate)

    # The same configuration with a barrier that does not prove anything
    forged = ExtendabilityCertificate((), verdict.certificate.required_matching, (), BarrierCertificate((), [(2,)]))
    assert not replay_certificate(c6, forged)
    with raises(InvalidCertificate):
        assert_certificate(c6, forged)

    # A configuration whose residual graph has a perfect matching certifies nothing
    extends = ExtendabilityCertificate((), Matching(c6, [(0, 1)]), (), BarrierCertificate((), []))
    assert not replay_certificate(c6, extends)

    assert is_k_extendable(c6, 0).holds
    assert not is_k_extendable(star(3), 0).holds
    assert is_n_factor_critical(c5, 1).holds
    assert not is_n_factor_critical(c6, 2).holds
    assert is_nk_extendable(complete(7), 1, 2).holds
    assert is_Emn_extendable(complete(6), 1, 1).holds
    assert not is_Emn_extendable(c6, 1, 1, strict_disjoint=True).holds

    for method, args in [("k_extendable", (1,)), ("n_factor_critical", (2,)), ("nk_extendable", (1, 1)),
                         ("emn_extendable", (1, 1))]:
        with raises(InvalidArgument):
            getattr(ExtendabilityChecker(disjoint_union(c5, c5)), method)(*args)

    with raises(InvalidArgument):
        is_n_factor_critical(c6, 1)
    with raises(InvalidArgument):
        is_k_extendable(c6, -1)
    with raises(ResourceLimitExceeded):
        ExtendabilityChecker(complete(8), max_configurations=5).k_extendable(1)
    with raises(ResourceLimitExceeded):
        ExtendabilityChecker(complete(8), max_matchings=5).k_extendable(2)

    # Both formulations of E(m, n) decide the same pairs
    for graph in [c6, complete(6), petersen(), complete_bipartite(3, 3)]:
        for m, n in [(0, 1), (1, 0), (1, 1)]:
            assert is_Emn_extendable(graph, m, n, strict_disjoint=False).holds == \
                emn_extendable_by_deletion(graph, m, n).holds

    # (0, k) is k-extendability and (n, 0) is n-factor-criticality
    for graph in [c6, complete(6), petersen(), complete_bipartite(3, 3)]:
        assert is_nk_extendable(graph, 0, 1).holds == is_k_extendable(graph, 1).holds
        assert is_nk_extendable(graph, 2, 0).holds == is_n_factor_critical(graph, 2).holds

    for graph in sample:
        if graph.is_connected() and graph.n % 2 == 0 and graph.n >= 4:
            one = is_k_extendable(graph, 1)
            if one.holds:
                assert is_k_extendable(graph, 0).holds
            else:
                assert replay_certificate(graph, one.certificate)


def test_parameters():

    assert binding_number(c5).value == Fraction(4, 3) and binding_number(c5).witness == (0, 1, 3)
    assert binding_number(cycle(4)).witness == (0, 2)
    assert binding_number(k4).value == 3 and binding_number(k4).witness == (0,)
    assert str(binding_number(c5)) == "4/3 (witness [0, 1, 3])"

    assert toughness(c6).value == 1 and toughness(c6).witness == (0, 2)
    assert toughness(petersen()).value == Fraction(4, 3)
    assert toughness(k4).value is INFINITY
    assert toughness(empty(2)).value == 0

    with raises(UndefinedParameter):
        binding_number(Graph(1))
    with raises(ResourceLimitExceeded):
        binding_number(cycle(8), limit=7)
    with raises(ResourceLimitExceeded):
        toughness(cycle(8), limit=7)
    assert toughness(complete(40)).value is INFINITY

    for graph in sample:
        b = binding_number(graph)
        assert b.value == brute_binding_number(graph)
        assert witness_ratio(graph, b.witness) == b.value
        assert len(graph.neighborhood(b.witness)) < graph.n

        t = toughness(graph)
        assert t.value == brute_toughness(graph)
        if t.witness:
            assert Fraction(len(t.witness), graph.component_count(t.witness)) == t.value


# theorems/

def test_proof_ledger():

    assert [g0_of_girth(g) for g in (3, 4, 5, 6, 7)] == [3, 5, 5, 7, 7]
    with raises(InvalidArgument):
        g0_of_girth(2)

    bounds = claim_bounds(1, 3, "1/10")
    assert bounds.s_max == Fraction(20, 3) and bounds.l_max == Fraction(23, 3)
    assert bounds.n == 58 and threshold_N(1, 3, Fraction(1, 10)) == 58
    assert bounds.target() == Fraction(43, 30)
    assert bounds.sum_bound(2) == 12

    assert claim_bounds(2, 3, "1/4").s_max == 8

    # The threshold order never falls as eps shrinks or as k grows
    grid = {(k, eps): threshold_N(k, 3, eps) for k in (1, 2, 3) for eps in ("1/10", "1/20", "1/40")}
    for k in (1, 2, 3):
        assert grid[(k, "1/10")] <= grid[(k, "1/20")] <= grid[(k, "1/40")]
    for eps in ("1/10", "1/20", "1/40"):
        assert grid[(1, eps)] <= grid[(2, eps)] <= grid[(3, eps)]
    assert grid[(1, "1/10")] == 58

    for k, g0, eps in [(0, 3, "1/10"), (1, 4, "1/10"), (1, 3, "1/3"), (1, 3, "0")]:
        with raises(InvalidArgument):
            claim_bounds(k, g0, eps)

    verdict = is_k_extendable(c6, 2)
    ledger = binding_bound_ledger(c6, 2, verdict.certificate.required_matching, ())
    assert ledger.components == [(2,), (5,)] and ledger.q == 2
    assert (ledger.l, ledger.r) == (2, 3)
    assert ledger.u == (5,) and ledger.w == (2,)
    assert (ledger.f, ledger.h) == (4, 5) and ledger.bound() == 4
    assert (ledger.u_ratio, ledger.w_ratio) == (2, 2)
    assert ledger.g0 == 7 and ledger.tail_mass == 0

    assert audit_claims(ledger, "1/10") == {"component_slack": True, "component_mass": True, "barrier_size": True,
                                            "singleton_count": True}
    assert audit_claims(ledger, "1/2") == {}

    with raises(InvalidArgument):
        binding_bound_ledger(c6, 1, Matching(c6, [(0, 1)]), ())
    with raises(InvalidArgument):
        binding_bound_ledger(c6, 2, verdict.certificate.required_matching, (0,))


def test_toughness_bound():

    graph = sharpness_construction(4, 1, 3)
    assert to_graph6(graph) == "I~~~vrx}W"
    assert sharpness_hub(4, 1) == (0, 1, 2, 3, 4)
    assert sharpness_eps_bound(4, 1) == Fraction(2, 3)

    assert toughness_certificate_bound(graph, 4, (0, 1, 2, 3), (4,)) == Fraction(5, 3)
    with raises(InvalidArgument):
        toughness_certificate_bound(graph, 4, (0, 1, 2, 3), (3,))
    with raises(InvalidArgument):
        toughness_certificate_bound(graph, 3, (0, 1, 2, 3), (4,))
    with raises(InvalidArgument):
        toughness_certificate_bound(graph, 4, (0, 1, 2, 3), ())

    with raises(InvalidArgument):
        sharpness_construction(0, 1, 1)

    # Below the eps bound only the connectivity hypothesis fails
    report = evaluate("3.1", graph, TheoremParameters(n=4), "1/2")
    assert [h.name for h in report.hypotheses if not h.satisfied] == ["connectivity strictly above"]
    assert report.toughness_bound == Fraction(5, 3)


def test_evaluators():

    assert TheoremId.parse("3.1") is TheoremId.TOUGHNESS_N_FACTOR_CRITICAL
    assert TheoremId.parse(" binding-emn-extendable ") is TheoremId.BINDING_EMN_EXTENDABLE
    with raises(InvalidArgument):
        TheoremId.parse("nope")

    report = evaluate(TheoremId.TOUGHNESS_N_FACTOR_CRITICAL, complete(10), TheoremParameters(n=4), Fraction(1, 2))
    assert report.applicable and report.conclusion_checked and not report.violation
    assert report.certificate is None

    sharp = sharpness_construction(4, 1, 3)
    report = evaluate("3.1", sharp, TheoremParameters(n=4), "1/2")
    assert report.conclusion_checked is False and not report.applicable
    assert report.certificate.removed_vertices == (0, 1, 2, 3)
    assert report.toughness_bound == Fraction(5, 3)

    # With the parameters already known, a guard hit in the bound audit keeps the decided conclusion
    facts = GraphFacts(sharp)
    assert (facts.toughness, facts.kappa) == (Fraction(5, 3), 5)
    with GuardOverride({"parameter_vertex_limit": 5}):
        report = evaluate("3.1", sharp, TheoremParameters(n=4), "1/2", facts)
    assert report.note is None and report.conclusion_checked is False
    assert report.certificate.removed_vertices == (0, 1, 2, 3)
    assert report.toughness_bound is None

    # The binding number of a large graph is past its guard; the report is skipped, never applicable
    report = evaluate("binding-k-extendable", complete(Settings.parameter_vertex_limit + 2), TheoremParameters(k=1),
                      "1/10")
    assert report.note == SKIPPED_GUARD
    assert not report.applicable and report.conclusion_checked is None

    # An undecidable conclusion is recorded in the note
    report = evaluate("toughness-k-extendable", c5, TheoremParameters(k=1), "1/2")
    assert not report.applicable and report.conclusion_checked is None
    assert report.note.startswith("conclusion undefined")

    report = evaluate("binding-k-extendable", c6, TheoremParameters(k=1, girth=7), "1/10")
    girth, = [h for h in report.hypotheses if h.name == "girth at least"]
    assert girth.required == 7 and girth.observed == 6 and not girth.satisfied

    for params in [TheoremParameters(), TheoremParameters(k=1, n=1), TheoremParameters(k=-1)]:
        with raises(InvalidArgument):
            evaluate("toughness-k-extendable", c6, params, "1/2")
    with raises(InvalidArgument):
        evaluate("toughness-k-extendable", c6, TheoremParameters(k=1), "-1/2")


# util/

def test_graph6():

    assert to_graph6(c6) == "EhEG"
    assert to_graph6(k4) == "C~"
    assert to_graph6(k4, header=True) == ">>graph6<<C~"
    assert to_graph6(petersen()) == "IheA@GUAo"
    assert to_graph6(empty(63)).startswith("~??~")
    assert from_graph6(to_graph6(empty(63))) == empty(63)

    assert from_graph6(">>graph6<<C~") == k4
    assert from_graph6("  EhEG\n") == c6
    assert from_graph6("@") == Graph(1)

    for bad, offset in [("Bh", 1), ("C~~", 2), ("C", 1), ("C\x7f", 1)]:
        with raises(Graph6ParseError) as e:
            from_graph6(bad)
        assert e.value.offset == offset

    with raises(InvalidArgument):
        from_graph6("")

    assert read_graph6_lines("C~\n\nEhEG\n") == [k4, c6]

    for graph in sample:
        assert from_graph6(to_graph6(graph, header=True)) == graph


def test_graph_loader():

    assert load_graph(graphs / "c6.g6") == c6
    assert load_graph(graphs / "c6.adj") == c6
    assert load_graph(str(graphs / "petersen.g6")) == petersen()
    assert load_graph(graphs / "c6.adj", "adj") == c6

    corpus = load_graphs(graphs / "corpus.g6")
    assert corpus == [k4, complete(6), c6, petersen()]

    with raises(InvalidArgument):
        load_graph(graphs / "corpus.g6")
    with raises(FileNotFoundError):
        load_graphs(Path("fake", "path", "graphs.g6"))

    assert parse_adjacency("# a triangle\n3\n0 1\n1 2\n\n0 2\n") == complete(3)
    for bad in ["", "x\n0 1", "3\n0 1 2", "3\n0 a", "3\n0 3"]:
        with raises(InvalidArgument):
            parse_adjacency(bad)

    with raises(InvalidArgument):
        parse_graphs("C~", "bogus")


def test_json_encoding():

    assert encode_rational(Fraction(4, 3)) == {"num": 4, "den": 3}
    assert encode_rational(INFINITY) == "inf"
    assert decode_rational({"num": 2, "den": 4}) == Fraction(1, 2)
    assert decode_rational("inf") is INFINITY
    for bad in [{"num": 1, "den": 0}, {"num": 1}, "infinity", None]:
        with raises(InvalidArgument):
            decode_rational(bad)

    assert dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'
    assert encode_witness(toughness(k4)) == "inf"
    assert encode_witness(binding_number(c5)) == {"num": 4, "den": 3, "witness": [0, 1, 3]}

    certificate = is_k_extendable(c6, 2).certificate
    encoded = encode_certificate(certificate)
    assert encoded == {"removed_vertices": [], "required_matching": [[0, 1], [3, 4]], "forbidden_edges": [],
                       "barrier": {"s": [], "fc_components": [[2], [5]]}}
    assert decode_certificate(c6, loads(dumps(encoded))) == certificate

    with raises(InvalidArgument):
        decode_certificate(c6, {"removed_vertices": []})
    with raises(InvalidArgument):
        decode_certificate(c6, {**encoded, "required_matching": [[0, 2]]})


def test_helpers():

    assert list(colex_combinations(range(4), 2)) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert list(colex_combinations(range(3), 0)) == [()]
    assert list(colex_masks(4, 2)) == [3, 5, 6, 9, 10, 12]
    assert list(colex_masks(3, 4)) == []
    for n in range(7):
        for r in range(n + 1):
            assert [members(m) for m in colex_masks(n, r)] == list(colex_combinations(range(n), r))

    assert members(0b1011) == (0, 1, 3)

    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert 0 <= splitmix64(2 ** 70) < 2 ** 64


def test_output_logger(capsys):

    log = StringIO()
    output = OutputLogger(print_result=True, print_detail=False, log=True, log_fd=log)
    output.table([("order", 6), ("kappa", 2)])
    output.detail("searched", 12, "configurations")

    assert capsys.readouterr().out == "order : 6\nkappa : 2\n"
    assert log.getvalue() == "order : 6\nkappa : 2\nsearched 12 configurations\n"

    output.set_print_result(False)
    output.result("hidden")
    assert capsys.readouterr().out == ""


# validation

def test_parameter_module() -> bool:
    parameter_bool, parameter_msg = parameter_tests(graphs)
    assert parameter_bool, parameter_msg
    print_test_result(parameter_bool, parameter_msg)
    return parameter_bool


def test_extendability_module() -> bool:
    extendability_bool, extendability_msg = extendability_tests(graphs)
    assert extendability_bool, extendability_msg
    print_test_result(extendability_bool, extendability_msg)
    return extendability_bool


def test_theorem_module() -> bool:
    theorem_bool, theorem_msg = theorem_tests(graphs)
    assert theorem_bool, theorem_msg
    print_test_result(theorem_bool, theorem_msg)
    return theorem_bool
