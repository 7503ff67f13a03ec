"""Backend parity: compiled and pure kernels must agree exactly."""

import pytest

import nets
from conftest import random_lcn

from lcnsyn import apply_feedback, candidate_bounds, enumerate_candidates, is_observable
from lcnsyn import kernel
from lcnsyn.synthesis import _sweep_arguments, output_partition

pytestmark = pytest.mark.skipif(
    "cython" not in kernel.available_backends(),
    reason="compiled kernel unavailable",
)

PY = kernel.get_backend("python")
CY = kernel.get_backend("cython") if "cython" in kernel.available_backends() else None


def closed_loop_arrays(lcn):
    succ = [lcn.step(x, 1) for x in range(1, lcn.state_dim + 1)]
    out = [lcn.output(x) for x in range(1, lcn.state_dim + 1)]
    return succ, out


class TestClosedLoopObservable:
    def test_reference_closed_loops(self):
        for lcn, expected in (
            (nets.BIG84_CL_ONES, False),
            (nets.BIG84_CL_MIX, True),
            (nets.TRI32_CL, False),
        ):
            succ, out = closed_loop_arrays(lcn)
            assert PY.closed_loop_observable(succ, out) is expected
            assert CY.closed_loop_observable(succ, out) is expected

    def test_matches_graph_analysis_on_random_closed_loops(self, rng):
        for _ in range(300):
            lcn = random_lcn(rng, n_max=6, m_max=1, q_max=3)
            succ, out = closed_loop_arrays(lcn)
            expected = is_observable(lcn).observable
            assert PY.closed_loop_observable(succ, out) == expected
            assert CY.closed_loop_observable(succ, out) == expected

    def test_large_state_space(self, rng):
        for _ in range(5):
            n = 200
            succ = [rng.randint(1, n) for _ in range(n)]
            out = [rng.randint(1, 3) for _ in range(n)]
            assert PY.closed_loop_observable(succ, out) == CY.closed_loop_observable(succ, out)


class TestSweepParity:
    def test_big_network_first_hit(self):
        args = _sweep_arguments(nets.BIG84, output_partition(nets.BIG84))
        assert PY.sweep_first_observable(*args, -1) == CY.sweep_first_observable(*args, -1)

    def test_big_network_full_count(self):
        args = _sweep_arguments(nets.BIG84, output_partition(nets.BIG84))
        py_total, py_good = PY.sweep_count_observable(*args)
        cy_total, cy_good = CY.sweep_count_observable(*args)
        assert (py_total, py_good) == (cy_total, cy_good)
        assert py_total == candidate_bounds(nets.BIG84)[1]

    def test_random_networks_all_results_identical(self, rng):
        for _ in range(60):
            lcn = random_lcn(rng)
            args = _sweep_arguments(lcn, output_partition(lcn))
            assert PY.sweep_first_observable(*args, -1) == CY.sweep_first_observable(*args, -1)
            assert PY.sweep_count_observable(*args) == CY.sweep_count_observable(*args)

    def test_cap_parity(self, rng):
        for cap in (0, 1, 2, 5):
            args = _sweep_arguments(nets.BIG84, output_partition(nets.BIG84))
            assert PY.sweep_first_observable(*args, cap) == CY.sweep_first_observable(*args, cap)

    def test_sweep_order_matches_public_enumeration(self, rng):
        # the backends' leaf order is the documented candidate order
        for _ in range(30):
            lcn = random_lcn(rng)
            args = _sweep_arguments(lcn, output_partition(lcn))
            maps = [
                apply_feedback(lcn, c).L.col_indices for c in enumerate_candidates(lcn)
            ]
            hits_py = [
                m for m in maps
                if PY.closed_loop_observable(m, args[0])
            ]
            status, checked, found = PY.sweep_first_observable(*args, -1)
            if hits_py:
                assert status == kernel.FOUND
                assert found == hits_py[0]
                assert checked == maps.index(hits_py[0]) + 1
            else:
                assert status == kernel.EXHAUSTED
                assert checked == len(maps)
