#!/usr/bin/env python3
"""Tests for input validation"""
import pytest

from src.core.constants import Limits
from src.core.errors import InvalidArgumentError
from src.core.validators import InputValidator


@pytest.mark.unit
class TestInputValidator:
    """Test InputValidator"""

    def test_parse_values(self):
        assert InputValidator.parse_values("0,2,4") == [0.0, 2.0, 4.0]
        assert InputValidator.parse_values(" 0.2, .3 ,4e-1") == [0.2, 0.3, 0.4]

    @pytest.mark.parametrize("text", ["", "1,,2", "a,b", "1 2", "0.1.2", "0;5,1", "1|2", "1&2", "$1"])
    def test_parse_values_rejects(self, text):
        with pytest.raises(InvalidArgumentError):
            InputValidator.parse_values(text)

    def test_parse_values_length_limit(self):
        with pytest.raises(InvalidArgumentError):
            InputValidator.parse_values("1," * Limits.MAX_VALUES_TEXT)

    def test_output_path(self, tmp_path):
        assert InputValidator.validate_output_path(tmp_path / "out.csv")
        assert not InputValidator.validate_output_path(tmp_path / "missing" / "out.csv")
        assert not InputValidator.validate_output_path(tmp_path)
        assert not InputValidator.validate_output_path(tmp_path / ("x" * 5000))
