import json
import math

import pytest

from navmin.graph import dijkstra, make_grid_graph
from navmin.hillclimb import SearchConfig
from navmin.instances import (
    InfeasibleInstanceError,
    ProblemInstance,
    ResultRow,
    SweepConfig,
    random_instance,
    run_sweep,
)
from navmin.measures import Task


class TestRandomInstance:
    def test_no_drops_keeps_full_grid(self):
        inst = random_instance(0, 20, 20, 0.0, 0.0, 3, 2.0)
        assert inst.graph.num_vertices == 400
        assert inst.graph.num_edges == 1520

    def test_drop_counts_exact(self):
        inst = random_instance(1, 10, 10, 0.2, 0.2, 3, 2.0)
        # 20 of 100 vertices dropped; then 20% of the surviving directed
        # edges; isolated-vertex cleanup can only shrink further
        assert inst.graph.num_vertices <= 80
        full = make_grid_graph(10, 10)
        survivors = [(u, v) for u, v, _ in full.edges()
                     if u in inst.graph and v in inst.graph]
        # count edges the vertex drop left behind, before the edge drop
        kept_after_vdrop = len(survivors)
        expected_edge_drop = math.floor(0.2 * (kept_after_vdrop))
        # removed = survivors not present in the final graph
        removed = sum(1 for u, v in survivors
                      if not inst.graph.has_edge(u, v))
        assert removed == expected_edge_drop

    def test_default_setting_task_count(self):
        inst = random_instance(0, 20, 20, 0.2, 0.2, 6, 3.0)
        assert len(inst.tasks) == 30  # 6 * 5 ordered pairs
        terminals = {t.src for t in inst.tasks}
        assert len(terminals) == 6
        assert all(Task(b, a) in inst.cutoffs
                   for a, b in [(t.src, t.dst) for t in inst.tasks])

    def test_weights_sum_to_one(self):
        inst = random_instance(3, 12, 12, 0.2, 0.2, 4, 2.0)
        assert sum(inst.weights.values()) == pytest.approx(1.0, abs=1e-9)
        assert all(0 <= w < 1 for w in inst.weights.values())

    def test_cutoffs_are_multiplier_times_optimal(self):
        inst = random_instance(5, 10, 10, 0.2, 0.2, 4, 3.0)
        for t in inst.tasks:
            dist = dijkstra(inst.graph, t.src)
            assert inst.cutoffs[t] == pytest.approx(3.0 * dist[t.dst])

    def test_byte_identical_for_identical_inputs(self):
        a = random_instance(7, 15, 15, 0.2, 0.2, 5, 2.0)
        b = random_instance(7, 15, 15, 0.2, 0.2, 5, 2.0)
        assert a.canonical_json() == b.canonical_json()
        assert a.instance_hash() == b.instance_hash()

    def test_different_seeds_differ(self):
        a = random_instance(0, 10, 10, 0.2, 0.2, 3, 2.0)
        b = random_instance(1, 10, 10, 0.2, 0.2, 3, 2.0)
        assert a.instance_hash() != b.instance_hash()

    def test_validation_errors(self):
        with pytest.raises(ValueError):
            random_instance(0, 10, 10, 1.0, 0.0, 3, 2.0)
        with pytest.raises(ValueError):
            random_instance(0, 10, 10, 0.2, 0.2, 1, 2.0)
        with pytest.raises(ValueError):
            random_instance(0, 1, 10, 0.2, 0.2, 3, 2.0)

    def test_infeasible_generation_raises(self):
        # dropping nearly all edges makes mutual reachability hopeless
        with pytest.raises(InfeasibleInstanceError):
            random_instance(0, 4, 4, 0.0, 0.95, 4, 1.0,
                            max_terminal_retries=5)

    def test_json_round_trip(self):
        inst = random_instance(2, 10, 10, 0.2, 0.2, 4, 2.0)
        doc = json.loads(inst.canonical_json())
        back = ProblemInstance.from_json(doc)
        assert back.canonical_json() == inst.canonical_json()
        assert back.graph == inst.graph
        assert back.cutoffs == inst.cutoffs


class TestSweep:
    def test_small_sweep_row_count_and_pairing(self):
        sweep = SweepConfig(terminal_counts=(3,), cutoff_multipliers=(2.0,),
                            seeds=(0, 1), grid_width=6, grid_height=6,
                            drop_vertex_frac=0.1, drop_edge_frac=0.1)
        rows = run_sweep(sweep, SearchConfig(restart_count=2))
        assert len(rows) == 4  # 2 seeds x 2 cost functions
        by_seed = {}
        for r in rows:
            assert not r.error
            by_seed.setdefault(r.seed, []).append(r)
        for seed, pair in by_seed.items():
            assert {r.cost_function for r in pair} == {"gsc", "bvc"}
            assert pair[0].instance_hash == pair[1].instance_hash

    def test_row_ordering(self):
        sweep = SweepConfig(terminal_counts=(3,), cutoff_multipliers=(1.0, 2.0),
                            seeds=(0,), grid_width=6, grid_height=6,
                            drop_vertex_frac=0.1, drop_edge_frac=0.1)
        rows = run_sweep(sweep, SearchConfig(restart_count=1))
        keys = [(r.num_terminals, r.cutoff_multiplier, r.seed, r.cost_function)
                for r in rows]
        assert keys == sorted(keys)

    def test_empty_config_rejected(self):
        with pytest.raises(ValueError):
            SweepConfig(terminal_counts=())


class TestResultRow:
    def test_csv_round_trip_including_inf(self):
        row = ResultRow(seed=0, num_terminals=6, cutoff_multiplier=3.0,
                        cost_function="bvc", wpc=0.0, nv_nbv=math.inf,
                        gsc=12.5, bvc=0.0, branching_vertex_count=0,
                        num_vertices=40, num_edges=41,
                        avg_suboptimality=1.25, runtime_ms=10.0,
                        instance_hash="abc123def456")
        cells = [str(c) for c in row.to_csv_row()]
        back = ResultRow.from_csv_row(cells)
        assert back == row
        assert cells[5] == "inf"
