"""
Tests for the switchgraph command line, the random generators and the suites.
"""

import json

import pytest

from src.arrival_engine.train import advance
from src.cli_toolkit.cli import main
from src.cli_toolkit.generators import (
    random_acyclic_switch_graph,
    random_dag,
    random_digicomp,
)
from src.cli_toolkit.suites import (
    SUITES,
    inject_destination_fault,
    run_suite,
    run_suites,
)
from src.core_model.acyclicity import check_acyclic
from src.core_model.instance_format import parse_instance, read_instance, write_instance
from src.core_model.instances import ArrivalInstance, InstanceKind
from src.core_model.switch_graph import SwitchGraph
from src.digicomp_engine.fast import run_digicomp_fast


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def _write_arrival(tmp_path, name, s0, s1, origin, destination):
    instance = ArrivalInstance(SwitchGraph(s0=tuple(s0), s1=tuple(s1)), origin, destination)
    return str(write_instance(instance, tmp_path / name))


class TestSimulationCommands:
    def test_arrives(self, capsys, corpus_dir):
        code, out = _run(capsys, "sim-arrival", str(corpus_dir / "trivial_arrival.txt"))
        assert code == 0
        assert out.strip() == "ARRIVES 0"

    def test_diverges(self, capsys, corpus_dir):
        code, out = _run(capsys, "sim-arrival", str(corpus_dir / "unreachable_arrival.txt"))
        assert code == 0
        assert out.strip() == "DIVERGES"

    def test_diverges_json(self, capsys, corpus_dir):
        code, out = _run(
            capsys,
            "sim-arrival",
            str(corpus_dir / "unreachable_arrival.txt"),
            "--format",
            "json",
            "--detector",
            "constant_memory",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["verdict"] == "diverges"
        assert payload["steps"] == "2"
        assert "recurs_at" not in payload
        assert payload["witness"] == {"position": 0, "switches": "00"}

    def test_budget_exhaustion_exits_3(self, capsys, tmp_path):
        path = _write_arrival(tmp_path, "cycle.txt", [1, 2, 0, 3], [1, 2, 0, 3], 0, 3)
        code, out = _run(capsys, "sim-arrival", path, "--budget", "4")
        assert code == 3
        assert out.strip() == "UNDECIDED 4"

    def test_digicomp_text(self, capsys, corpus_dir):
        code, out = _run(capsys, "sim-digicomp", str(corpus_dir / "digicomp_split.txt"))
        assert code == 0
        assert out.splitlines()[0] == "YES"

    def test_digicomp_json_is_engine_independent(self, capsys, corpus_dir):
        path = str(corpus_dir / "digicomp_split.txt")
        _, fast = _run(capsys, "sim-digicomp", path, "--format", "json")
        _, naive = _run(capsys, "sim-digicomp", path, "--engine", "naive", "--format", "json")
        payload = json.loads(fast)
        assert payload == json.loads(naive)
        assert payload["verdict"] == "yes"
        assert payload["counts"] == {"0": "3", "1": "2", "2": "1"}
        assert payload["final_switches"] == "100"

    def test_digicomp_no(self, capsys, corpus_dir):
        code, out = _run(capsys, "sim-digicomp", str(corpus_dir / "digicomp_zero_balls.txt"))
        assert code == 0
        assert out.splitlines()[0] == "NO"

    def test_huge_ball_count_is_printed_exactly(self, capsys, corpus_dir):
        code, out = _run(
            capsys, "sim-digicomp", str(corpus_dir / "digicomp_huge.txt"), "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["counts"]["9"] == str(2**253)

    def test_wrong_kind_is_a_parse_error(self, capsys, corpus_dir):
        code, _ = _run(capsys, "sim-digicomp", str(corpus_dir / "trivial_arrival.txt"))
        assert code == 2


class TestErrorsAndUsage:
    def test_missing_argument_is_usage(self, capsys):
        code, _ = _run(capsys, "sim-arrival")
        assert code == 1

    def test_missing_command_is_usage(self, capsys):
        code, _ = _run(capsys)
        assert code == 1

    def test_malformed_instance(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("switchgraph v1 arrival\nn 2\nv 0 0 9\n")
        code, out = _run(capsys, "sim-arrival", str(bad))
        assert code == 2
        assert out == ""

    def test_missing_file(self, capsys, tmp_path):
        code, _ = _run(capsys, "sim-arrival", str(tmp_path / "nowhere.txt"))
        assert code == 2

    def test_bad_environment_setting(self, capsys, corpus_dir, monkeypatch):
        monkeypatch.setenv("SWITCHGRAPH_PATH_LIMIT", "lots")
        code, _ = _run(capsys, "sim-arrival", str(corpus_dir / "trivial_arrival.txt"))
        assert code == 2

    def test_environment_budget_applies(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SWITCHGRAPH_ARRIVAL_BUDGET", "4")
        path = _write_arrival(tmp_path, "cycle.txt", [1, 2, 0, 3], [1, 2, 0, 3], 0, 3)
        code, out = _run(capsys, "sim-arrival", path)
        assert code == 3
        assert out.strip() == "UNDECIDED 4"


class TestGenCounter:
    def test_writes_harness_and_dot(self, capsys, tmp_path, corpus_dir):
        out = tmp_path / "counter16.txt"
        code, stdout = _run(capsys, "gen-counter", "16", "--out", str(out))
        assert code == 0
        assert stdout.strip() == "COUNTER train 5 vertices"
        assert out.read_bytes() == (corpus_dir / "figure_counter16.txt").read_bytes()
        dot = (tmp_path / "counter16.dot").read_text()
        assert dot.startswith("digraph")

    def test_ball_counter(self, capsys, tmp_path):
        out = tmp_path / "ball5.txt"
        code, stdout = _run(capsys, "gen-counter", "5", "--kind", "ball", "--out", str(out))
        assert code == 0
        assert stdout.strip() == "COUNTER ball 3 vertices"
        assert read_instance(out).kind == InstanceKind.DIGICOMP

    def test_zero_target(self, capsys, tmp_path):
        code, _ = _run(capsys, "gen-counter", "0", "--out", str(tmp_path / "zero.txt"))
        assert code == 2
        assert not (tmp_path / "zero.txt").exists()


class TestReduceAndCertificates:
    def test_digicomp_reduction_round_trip(self, capsys, tmp_path, corpus_dir):
        source = str(corpus_dir / "digicomp_split.txt")
        produced = tmp_path / "prop1.txt"
        code, out = _run(capsys, "reduce", "--from", "digicomp", source, "--out", str(produced))
        assert code == 0
        assert out.strip() == "REDUCED digicomp_to_arrival 6 vertices"
        assert produced.read_bytes() == (corpus_dir / "prop1_split_T3.txt").read_bytes()

        cert = tmp_path / "prop1.txt.cert.json"
        code, out = _run(capsys, "check-cert", source, str(produced), str(cert))
        assert code == 0
        assert out.strip() == "VALID"

        code, out = _run(capsys, "sim-arrival", str(produced))
        assert out.strip() == "ARRIVES 6"

    def test_dag_reduction_with_dot(self, capsys, tmp_path, corpus_dir):
        produced = tmp_path / "prop2.txt"
        code, out = _run(
            capsys,
            "reduce",
            "--from",
            "dagpaths",
            str(corpus_dir / "dag_diamond.txt"),
            "--out",
            str(produced),
            "--dot",
        )
        assert code == 0
        assert out.strip() == "REDUCED dagpaths_to_digicomp 19 vertices"
        assert (tmp_path / "prop2.dot").exists()

        code, out = _run(capsys, "sim-digicomp", str(produced))
        assert out.splitlines()[0] == "YES"

    def test_reduce_json(self, capsys, tmp_path, corpus_dir):
        code, out = _run(
            capsys,
            "reduce",
            "--from",
            "dagpaths",
            str(corpus_dir / "dag_diamond.txt"),
            "--out",
            str(tmp_path / "p.txt"),
            "--format",
            "json",
        )
        payload = json.loads(out)
        assert payload["verdict"] == "reduced"
        assert payload["kind"] == "digicomp"
        assert payload["certificate"]["parameters"]["balls"] == "8"

    def test_zero_threshold(self, capsys, tmp_path):
        dag = tmp_path / "k0.txt"
        dag.write_text("switchgraph v1 dag\nn 2\nv 0 1 1\nv 1 0\ns 0\nt 1\nk 0\n")
        code, _ = _run(
            capsys, "reduce", "--from", "dagpaths", str(dag), "--out", str(tmp_path / "o.txt")
        )
        assert code == 2

    def test_tampered_instance_fails_check(self, capsys, tmp_path, corpus_dir):
        source = str(corpus_dir / "digicomp_split.txt")
        produced = tmp_path / "prop1.txt"
        _run(capsys, "reduce", "--from", "digicomp", source, "--out", str(produced))
        produced.write_bytes(produced.read_bytes().replace(b"\nt 2\n", b"\nt 1\n"))
        code, out = _run(
            capsys, "check-cert", source, str(produced), str(tmp_path / "prop1.txt.cert.json")
        )
        assert code == 4
        assert out.startswith("INVALID")
        assert "produced digest does not match" in out

    def test_export_dot_with_certificate(self, capsys, tmp_path, corpus_dir):
        produced = tmp_path / "prop1.txt"
        _run(
            capsys, "reduce", "--from", "digicomp", str(corpus_dir / "digicomp_split.txt"),
            "--out", str(produced),
        )
        code, out = _run(
            capsys, "export-dot", str(produced), "--cert", str(tmp_path / "prop1.txt.cert.json")
        )
        assert code == 0
        assert "fillcolor=lightgrey" in out
        assert "counter:0" in out
        assert "style=dashed" in out

    def test_truncated_certificate_is_a_validation_error(self, capsys, tmp_path, corpus_dir):
        cert = tmp_path / "bad.cert.json"
        cert.write_text('{"reduction": "x"}')
        code, out = _run(
            capsys,
            "check-cert",
            str(corpus_dir / "digicomp_split.txt"),
            str(corpus_dir / "prop1_split_T3.txt"),
            str(cert),
        )
        assert code == 2
        assert out == ""

    def test_non_json_certificate_is_a_parse_error(self, capsys, tmp_path, corpus_dir):
        cert = tmp_path / "bad.cert.json"
        cert.write_text("roles: F, D\n")
        code, out = _run(
            capsys, "export-dot", str(corpus_dir / "prop1_split_T3.txt"), "--cert", str(cert)
        )
        assert code == 2
        assert out == ""


class TestOtherCommands:
    def test_export_dag(self, capsys, corpus_dir):
        code, out = _run(capsys, "export-dot", str(corpus_dir / "dag_diamond.txt"))
        assert code == 0
        assert "1 -> 3;" in out

    def test_trace(self, capsys, tmp_path):
        path = _write_arrival(tmp_path, "bounce.txt", [0, 1], [1, 1], 0, 1)
        code, out = _run(capsys, "trace", path, "--steps", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split() == ["step", "position", "label", "bit"]
        assert len(lines) == 4

    def test_trace_json(self, capsys, tmp_path):
        path = _write_arrival(tmp_path, "bounce.txt", [0, 1], [1, 1], 0, 1)
        code, out = _run(capsys, "trace", path, "--steps", "3", "--format", "json")
        records = json.loads(out)
        assert [(r["position"], r["bit"]) for r in records] == [(0, 0), (0, 1), (1, 0)]

    def test_gen_random_is_deterministic(self, capsys):
        _, first = _run(capsys, "gen-random", "--kind", "dag", "--n", "6", "--seed", "5")
        _, second = _run(capsys, "gen-random", "--kind", "dag", "--n", "6", "--seed", "5")
        assert first == second
        assert parse_instance(first).kind == InstanceKind.DAG

    def test_gen_random_to_file(self, capsys, tmp_path):
        out = tmp_path / "random.txt"
        code, stdout = _run(
            capsys, "gen-random", "--kind", "acyclic-switchgraph", "--n", "7", "--out", str(out)
        )
        assert code == 0
        assert stdout.startswith("GENERATED digicomp")
        assert read_instance(out).graph.n == 7


class TestVerifyCommand:
    def test_passing_suite(self, capsys, tmp_path):
        code, out = _run(
            capsys, "verify", "--suite", "prop1", "--cases", "10", "--seed", "3",
            "--dump-dir", str(tmp_path),
        )
        assert code == 0
        assert out.strip().endswith("PASS")
        assert list(tmp_path.iterdir()) == []

    def test_injected_fault_fails_and_dumps(self, capsys, tmp_path):
        code, out = _run(
            capsys, "verify", "--suite", "engines", "--cases", "60", "--seed", "3",
            "--inject-fault", "--dump-dir", str(tmp_path),
        )
        assert code == 4
        assert out.strip().endswith("FAIL")
        dumped = sorted(p.name for p in tmp_path.iterdir())
        assert dumped == ["engines-naive_equals_fast.txt"]
        text = (tmp_path / dumped[0]).read_text()
        assert parse_instance(text).kind == InstanceKind.DIGICOMP

    def test_json_report(self, capsys, tmp_path):
        code, out = _run(
            capsys, "verify", "--suite", "counters", "--cases", "32", "--format", "json",
            "--dump-dir", str(tmp_path),
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["verdict"] == "pass"
        assert payload["seed"] == "42"
        assert {p["property"] for p in payload["properties"]} >= {"size_law", "train_trace"}


class TestGenerators:
    def test_random_dag_is_reproducible(self):
        assert random_dag(8, 11) == random_dag(8, 11)

    def test_random_dag_bounds(self):
        for seed in range(50):
            dag = random_dag(6, seed, max_degree=3, max_threshold=5)
            assert all(len(succ) <= 3 for succ in dag.successors)
            assert 1 <= dag.threshold <= 5

    def test_acyclic_graphs(self):
        for seed in range(50):
            graph = random_acyclic_switch_graph(9, seed)
            assert check_acyclic(graph).acyclic
            assert graph.is_sink(8)

    def test_every_ball_stops_within_2n_steps(self):
        for seed in range(1000):
            n = 1 + seed % 12
            graph = random_acyclic_switch_graph(n, seed)
            switches = bytearray(n)
            for ball in range(2 * n):
                position, steps = ball % n, 0
                while not graph.is_sink(position):
                    position = advance(graph, switches, position)
                    steps += 1
                    assert steps <= 2 * n, (seed, ball)

    def test_random_digicomp(self):
        instance = random_digicomp(5, 2, max_balls=10)
        assert instance.origin == 0
        assert 0 <= instance.balls <= 10

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            random_dag(0, 1)


class TestSuites:
    def test_counters_report(self):
        report = run_suite("counters", seed=0, cases=64)
        assert report.passed
        frame = report.to_frame()
        assert list(frame.columns) == ["suite", "property", "cases", "failures", "status"]
        assert set(frame["status"]) == {"pass"}
        by_property = frame.set_index("property")["cases"]
        assert by_property["size_law"] == 64
        assert by_property["ball_threshold"] == 64
        # every T up to 64 plus one random T up to 2^20
        assert by_property["train_trace"] == 65

    def test_same_seed_same_report(self):
        first = run_suite("engines", seed=9, cases=20).to_frame()
        second = run_suite("engines", seed=9, cases=20).to_frame()
        assert first.equals(second)

    @pytest.mark.parametrize("suite", SUITES)
    def test_every_suite_passes_a_few_cases(self, suite):
        assert run_suites([suite], seed=1, cases=5).passed

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nope", seed=0)

    def test_injected_fault_blocks_destination(self, load_corpus):
        instance = load_corpus("digicomp_split")
        faulted = inject_destination_fault(instance)
        assert run_digicomp_fast(instance).reached
        assert not run_digicomp_fast(faulted).reached
