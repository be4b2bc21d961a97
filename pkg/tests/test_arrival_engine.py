"""
Tests for the train step rule and the ARRIVAL run loop.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arrival_engine.run import Detector, Verdict, run_arrival
from src.arrival_engine.train import advance, step, trace_arrival
from src.core_model.errors import InstanceValidationError
from src.core_model.instances import ArrivalInstance
from src.core_model.switch_graph import Configuration, SwitchGraph
from tests.strategies import acyclic_switch_graphs


def _arrival(s0, s1, origin, destination) -> ArrivalInstance:
    return ArrivalInstance(SwitchGraph(s0=tuple(s0), s1=tuple(s1)), origin, destination)


@st.composite
def arrival_instances(draw, max_n: int = 6):
    """Arbitrary (possibly cyclic) switch graphs."""
    n = draw(st.integers(1, max_n))
    s0 = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    s1 = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return _arrival(s0, s1, draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)))


class TestStep:
    def test_step_uses_switch_then_toggles(self):
        graph = SwitchGraph(s0=(1, 1), s1=(0, 1))
        config = Configuration.initial(graph, 0)
        after = step(config, graph)
        assert after.position == 1
        assert after.bitstring() == "10"
        # the original configuration is untouched
        assert config.bitstring() == "00"

    def test_step_rejects_a_configuration_for_another_graph(self):
        graph = SwitchGraph(s0=(1, 1), s1=(0, 1))
        with pytest.raises(InstanceValidationError, match="switch bits"):
            step(Configuration(position=0, switches=b"\x00\x00\x00"), graph)
        with pytest.raises(InstanceValidationError, match="position"):
            step(Configuration(position=5, switches=b"\x00\x00"), graph)

    def test_second_visit_takes_s1(self):
        graph = SwitchGraph(s0=(0, 1), s1=(1, 1))
        switches = bytearray(2)
        assert advance(graph, switches, 0) == 0
        assert advance(graph, switches, 0) == 1
        assert bytes(switches) == b"\x00\x00"

    def test_trace_records_consumed_bits(self):
        instance = _arrival([0, 1], [1, 1], 0, 1)
        assert trace_arrival(instance, 3) == [(0, 0), (0, 1), (1, 0)]


class TestRunArrival:
    @pytest.mark.parametrize("detector", list(Detector))
    def test_origin_is_destination(self, detector):
        outcome = run_arrival(_arrival([0], [0], 0, 0), detector=detector)
        assert outcome.verdict == Verdict.ARRIVES
        assert outcome.steps == 0

    @pytest.mark.parametrize("detector", list(Detector))
    def test_unreachable_destination_diverges(self, detector):
        outcome = run_arrival(_arrival([0, 1], [0, 1], 0, 1), detector=detector)
        assert outcome.verdict == Verdict.DIVERGES
        assert outcome.steps == 2
        assert outcome.witness == Configuration(position=0, switches=b"\x00\x00")

    def test_bounce_then_exit(self):
        outcome = run_arrival(_arrival([0, 1], [1, 1], 0, 1))
        assert outcome.verdict == Verdict.ARRIVES
        assert outcome.steps == 2

    def test_budget_exhaustion_is_undecided(self):
        # the 3-cycle only repeats a configuration at step 6
        instance = _arrival([1, 2, 0, 3], [1, 2, 0, 3], 0, 3)
        outcome = run_arrival(instance, budget=4)
        assert outcome.verdict == Verdict.UNDECIDED
        assert outcome.steps == 4
        assert not outcome.decided

    def test_corpus_goldens(self, load_corpus):
        assert run_arrival(load_corpus("trivial_arrival")).verdict == Verdict.ARRIVES
        assert run_arrival(load_corpus("unreachable_arrival")).verdict == Verdict.DIVERGES
        golden = run_arrival(load_corpus("prop1_split_T3"))
        assert golden.verdict == Verdict.ARRIVES
        assert golden.steps == 6

    @settings(max_examples=200, deadline=None)
    @given(arrival_instances())
    def test_detectors_agree(self, instance):
        assert run_arrival(instance, detector="hashset") == run_arrival(
            instance, detector="constant_memory"
        )

    @settings(max_examples=100, deadline=None)
    @given(arrival_instances())
    def test_divergence_witness_recurs(self, instance):
        outcome = run_arrival(instance)
        if outcome.verdict != Verdict.DIVERGES:
            return
        graph = instance.graph
        config = Configuration.initial(graph, instance.origin)
        visits = 0
        for _ in range(outcome.steps + 1):
            if config == outcome.witness:
                visits += 1
            config = step(config, graph)
        assert visits == 2

    @settings(max_examples=100, deadline=None)
    @given(acyclic_switch_graphs(), st.data())
    def test_acyclic_runs_end_in_a_sink_loop(self, graph, data):
        destination = data.draw(st.integers(0, graph.n - 1))
        outcome = run_arrival(ArrivalInstance(graph, 0, destination))
        assert outcome.decided

    @settings(max_examples=200, deadline=None)
    @given(arrival_instances(), st.sampled_from(list(Detector)))
    def test_arrival_step_count_is_minimal(self, instance, detector):
        outcome = run_arrival(instance, detector=detector)
        if outcome.verdict != Verdict.ARRIVES:
            return
        graph = instance.graph
        config = Configuration.initial(graph, instance.origin)
        for _ in range(outcome.steps):
            assert config.position != instance.destination
            config = step(config, graph)
        assert config.position == instance.destination

    @settings(max_examples=200, deadline=None)
    @given(arrival_instances(), st.sampled_from(list(Detector)))
    def test_divergence_cycle_avoids_destination(self, instance, detector):
        outcome = run_arrival(instance, detector=detector)
        if outcome.verdict != Verdict.DIVERGES:
            return
        graph = instance.graph
        # the run up to the recurrence never stands on the destination
        config = Configuration.initial(graph, instance.origin)
        for _ in range(outcome.steps):
            assert config.position != instance.destination
            config = step(config, graph)
        assert config == outcome.witness

        # nor does the loop that starts at the witness
        config = step(outcome.witness, graph)
        cycle_length = 1
        while config != outcome.witness:
            assert config.position != instance.destination
            config = step(config, graph)
            cycle_length += 1
        assert outcome.witness.position != instance.destination
        assert cycle_length <= outcome.steps
