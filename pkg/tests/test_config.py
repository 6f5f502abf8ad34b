"""Tests for configuration persistence."""

from __future__ import annotations

from unittest.mock import patch

import pytest

from sylowscope.config import Config
from sylowscope.exceptions import ConfigError


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "sylowscope" / "config.json"
    with (
        patch("sylowscope.config.CONFIG_DIR", path.parent),
        patch("sylowscope.config.CONFIG_FILE", path),
    ):
        yield path


class TestConfig:
    def test_defaults_when_missing(self, config_path):
        config = Config.load()
        assert config.rank_bound == 12
        assert config.concrete_bound == 200
        assert config.json_output is False

    def test_save_and_load(self, config_path):
        Config(rank_bound=8, concrete_bound=1000, json_output=True).save()
        assert config_path.exists()
        config = Config.load()
        assert config.rank_bound == 8
        assert config.concrete_bound == 1000
        assert config.json_output is True

    def test_partial_file(self, config_path):
        config_path.parent.mkdir(parents=True)
        config_path.write_text('{"rank_bound": 6}', encoding="utf-8")
        config = Config.load()
        assert config.rank_bound == 6
        assert config.concrete_bound == 200

    def test_corrupt_file(self, config_path):
        config_path.parent.mkdir(parents=True)
        config_path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigError, match="Failed to read config"):
            Config.load()
