"""Tests for lib/errors.py."""
from bnnctl.lib.errors import BnnError, ComponentOutOfRange, MalformedDocument, WeightsDontSumToOne


class TestBnnError:
    def test_is_value_error(self):
        assert issubclass(MalformedDocument, ValueError)

    def test_message_without_location(self):
        assert str(BnnError("boom")) == "boom"

    def test_location_prefix(self):
        assert str(BnnError("boom", "row 3")) == "row 3: boom"

    def test_at_adds_outer_location(self):
        e = ComponentOutOfRange("t_pos", 1.5, "[0, 1]").at("cell (A1, C2)")
        assert str(e) == "cell (A1, C2): component t_pos=1.5 is outside [0, 1]"
        assert e.args == (str(e),)

    def test_at_keeps_inner_location(self):
        e = BnnError("boom", "column 2").at("row 3")
        assert str(e) == "row 3, column 2: boom"

    def test_weight_sum_hint(self):
        assert "--normalize-weights" in str(WeightsDontSumToOne(0.9))
