"""Network/controller file formats: loading, saving, round trips, errors."""

import json

import pytest

import nets

from lcnsyn import ClosedLoopController, StateFeedback, validate
from lcnsyn.files import (
    FileFormatError,
    load_controller,
    load_network,
    network_from_dict,
    network_to_dict,
    controller_from_dict,
    controller_to_dict,
    save_controller,
    save_network,
)


class TestNetworkFiles:
    def test_load_reference_fixtures(self, fixtures_dir):
        for name, expected in (
            ("funnel44.json", nets.FUNNEL44),
            ("ring42.json", nets.RING42),
            ("ring42_out2.json", nets.RING42_OUT2),
            ("big84.json", nets.BIG84),
            ("big84_cl_ones.json", nets.BIG84_CL_ONES),
            ("big84_cl_mix.json", nets.BIG84_CL_MIX),
            ("tri32.json", nets.TRI32),
            ("tri32_cl.json", nets.TRI32_CL),
        ):
            lcn = load_network(fixtures_dir / name)
            assert lcn == expected
            assert validate(lcn) == []

    def test_round_trip(self, tmp_path):
        for lcn in nets.ALL_REFERENCE_NETS:
            path = tmp_path / "net.json"
            save_network(lcn, path)
            assert load_network(path) == lcn

    def test_missing_h_defaults_to_identity(self):
        lcn = network_from_dict({"N": 2, "M": 1, "Q": 2, "L": [2, 1]})
        assert lcn.H.col_indices == (1, 2)

    def test_missing_h_requires_square_output(self):
        with pytest.raises(FileFormatError, match="Q == N"):
            network_from_dict({"N": 2, "M": 1, "Q": 1, "L": [2, 1]})

    def test_exactly_one_of_l_and_truth_table(self):
        with pytest.raises(FileFormatError, match="exactly one"):
            network_from_dict({"N": 1, "M": 1, "Q": 1})
        with pytest.raises(FileFormatError, match="exactly one"):
            network_from_dict(
                {"N": 1, "M": 1, "Q": 1, "L": [1],
                 "truth_table": {"transition": [[1]], "output": [1]}}
            )

    def test_truth_table_form(self):
        lcn = network_from_dict(
            {"N": 3, "M": 2, "Q": 2,
             "truth_table": {"transition": [[1, 3], [3, 2], [1, 1]],
                             "output": [1, 1, 2]}}
        )
        assert lcn == nets.TRI32

    def test_truth_table_conflicts_with_h(self):
        with pytest.raises(FileFormatError, match="drop H"):
            network_from_dict(
                {"N": 1, "M": 1, "Q": 1, "H": [1],
                 "truth_table": {"transition": [[1]], "output": [1]}}
            )

    def test_short_l_reports_violation(self, fixtures_dir):
        with pytest.raises(FileFormatError) as exc_info:
            load_network(fixtures_dir / "bad_short_L.json")
        assert any("L column count 7 != 8" in v for v in exc_info.value.violations)

    def test_all_violations_reported(self):
        with pytest.raises(FileFormatError) as exc_info:
            network_from_dict({"N": 2, "M": 1, "Q": 2, "L": [3, 1, 1], "H": [1, 5]})
        text = "\n".join(exc_info.value.violations)
        assert "L column count" in text
        assert "L index out of range" in text
        assert "H index out of range" in text

    def test_factors_preserved(self, tmp_path):
        doc = {"N": 4, "M": 2, "Q": 4, "L": [2, 2, 1, 3, 4, 4, 2, 2],
               "state_factors": [2, 2]}
        lcn = network_from_dict(doc)
        assert lcn.state_factors == (2, 2)
        assert network_to_dict(lcn)["state_factors"] == [2, 2]

    def test_bad_json(self, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("{not json")
        with pytest.raises(FileFormatError, match="not valid JSON"):
            load_network(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileFormatError, match="cannot read"):
            load_network(tmp_path / "nope.json")


class TestControllerFiles:
    def test_closed_loop(self, fixtures_dir):
        ctrl = load_controller(fixtures_dir / "ctrl_big84_mix.json", 4)
        assert ctrl == ClosedLoopController((1, 2, 2, 1, 3, 1, 1, 1))

    def test_general(self, fixtures_dir):
        ctrl = load_controller(fixtures_dir / "ctrl_ring42_p2.json", 2)
        assert ctrl == nets.RING42_FB

    def test_round_trip(self, tmp_path):
        for ctrl in (ClosedLoopController((2, 1, 2)), nets.RING42_FB):
            path = tmp_path / "ctrl.json"
            save_controller(ctrl, path)
            input_dim = 2
            assert load_controller(path, input_dim) == ctrl

    def test_exactly_one_form(self):
        with pytest.raises(FileFormatError, match="exactly one"):
            controller_from_dict({}, 2)
        with pytest.raises(FileFormatError, match="exactly one"):
            controller_from_dict({"g": [1], "P": 1, "G": [1]}, 2)

    def test_range_checks(self):
        with pytest.raises(FileFormatError, match=r"g indices"):
            controller_from_dict({"g": [1, 3]}, 2)
        with pytest.raises(FileFormatError, match=r"G indices"):
            controller_from_dict({"P": 1, "G": [1, 3]}, 2)

    def test_g_length_multiple_of_p(self):
        with pytest.raises(FileFormatError, match="multiple of P"):
            controller_from_dict({"P": 2, "G": [1, 1, 1]}, 2)

    def test_general_dict_shape(self):
        doc = controller_to_dict(nets.RING42_FB)
        assert set(doc) == {"P", "G"}
        assert doc["P"] == 2

    def test_state_feedback_dimensions_bind_to_network(self):
        ctrl = controller_from_dict({"P": 2, "G": [1, 2, 2, 2, 1, 2, 1, 2]}, 2)
        assert isinstance(ctrl, StateFeedback)
        assert (ctrl.state_dim, ctrl.input_dim, ctrl.new_input_dim) == (4, 2, 2)
