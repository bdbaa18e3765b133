"""Test layered configuration, environment variable expansion and .env support."""

import os
from pathlib import Path

import pytest

from degseq.errors import ConfigurationError
from degseq.management.bootstrap import (
    OutputFormat,
    SearchSettings,
    determine_config_file,
    resolve_search_settings,
)
from degseq.management.configuration import (
    ArgsConfigSource,
    ConfigurationManager,
    DefaultConfigSource,
    EnvConfigSource,
    FileConfigSource,
    expand_env_vars,
)
from degseq.management.environment import load_dotenv_if_available
from degseq.search.engine import SearchMode
from tests.helpers.config_generator import write_config


class TestExpandEnvVars:
    """Test environment variable expansion in configuration."""

    def test_expand_simple_var(self, monkeypatch):
        """Test simple ${VAR} expansion."""
        monkeypatch.setenv("TEST_VAR", "test_value")
        assert expand_env_vars("key: ${TEST_VAR}") == "key: test_value"

    def test_expand_in_nested_structures(self, monkeypatch):
        """Test expansion inside lists and nested mappings."""
        monkeypatch.setenv("OUT_DIR", "results")
        config = {"paths": ["${OUT_DIR}/a.csv", {"b": "${OUT_DIR}"}]}
        assert expand_env_vars(config) == {"paths": ["results/a.csv", {"b": "results"}]}

    def test_missing_var_keeps_placeholder(self, monkeypatch):
        """Test that an unset variable without fallback is left as written."""
        monkeypatch.delenv("NONEXISTENT_VAR", raising=False)
        assert expand_env_vars("key: ${NONEXISTENT_VAR}") == "key: ${NONEXISTENT_VAR}"

    def test_default_value(self, monkeypatch):
        """Test ${VAR:-default} syntax."""
        monkeypatch.delenv("MISSING_VAR", raising=False)
        assert expand_env_vars("${MISSING_VAR:-fallback}") == "fallback"
        assert expand_env_vars("out/${MISSING_VAR:-x}.csv") == "out/x.csv"

    def test_pure_reference_converted_to_int(self, monkeypatch):
        """A value that is only a reference becomes an int when numeric."""
        monkeypatch.setenv("JOBS", "8")
        assert expand_env_vars("${JOBS}") == 8
        assert expand_env_vars("${UNSET_JOBS:-4}") == 4

    def test_non_string_values_unchanged(self):
        assert expand_env_vars(42) == 42
        assert expand_env_vars(True) is True
        assert expand_env_vars(None) is None

    def test_malformed_variable_syntax(self):
        """Test that malformed syntax is left unchanged."""
        assert expand_env_vars("${MISSING_BRACE") == "${MISSING_BRACE"
        assert expand_env_vars("$VAR_NAME") == "$VAR_NAME"


class TestSources:
    """Each settings layer on its own, then merged by priority."""

    def test_file_source(self, tmp_path, monkeypatch):
        monkeypatch.setenv("DEGSEQ_TEST_MODE", "exhaustive")
        path = write_config(tmp_path, mode="${DEGSEQ_TEST_MODE}", jobs=2)
        source = FileConfigSource(path)
        assert source.is_available()
        assert source.load() == {"mode": "exhaustive", "jobs": 2}

    def test_missing_file_is_empty(self, tmp_path):
        source = FileConfigSource(tmp_path / "absent.yaml")
        assert not source.is_available()
        assert source.load() == {}

    def test_non_mapping_file_ignored(self, tmp_path):
        """A YAML list is warned about and contributes nothing."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        assert FileConfigSource(path).load() == {}

    def test_env_source(self, monkeypatch):
        """DEGSEQ_* names are lowercased, numbers and on/off words converted."""
        monkeypatch.setenv("DEGSEQ_JOBS", "3")
        monkeypatch.setenv("DEGSEQ_CHECK_MONOTONE", "off")
        monkeypatch.setenv("DEGSEQ_MODE", "fast")
        assert EnvConfigSource().load() == {"jobs": 3, "check_monotone": False, "mode": "fast"}

    def test_args_source_drops_none(self):
        assert ArgsConfigSource({"jobs": None, "mode": "fast"}).load() == {"mode": "fast"}

    def test_priority_order(self, tmp_path, monkeypatch):
        """Args over file over env over defaults, key by key."""
        monkeypatch.setenv("DEGSEQ_JOBS", "2")
        monkeypatch.setenv("DEGSEQ_N_TO", "30")
        manager = ConfigurationManager()
        manager.add_source(ArgsConfigSource({"mode": "exhaustive"}))
        manager.add_source(FileConfigSource(write_config(tmp_path, jobs=5, mode="fast")))
        manager.add_source(EnvConfigSource())
        manager.add_source(DefaultConfigSource({"jobs": 1, "n_to": 40, "n_from": 4}))
        assert manager.resolve_config() == {"jobs": 5, "n_to": 30, "n_from": 4, "mode": "exhaustive"}
        assert [s.priority for s in manager.sources] == [30, 10, 5, 0]


class TestResolveSearchSettings:
    def test_defaults(self, tmp_path):
        settings = resolve_search_settings(default_config=str(tmp_path / "none.yaml"))
        assert settings.mode is SearchMode.FAST
        assert settings.jobs == (os.cpu_count() or 1)
        assert (settings.n_from, settings.n_to) == (4, 40)
        assert settings.output_format is OutputFormat.TEXT
        assert settings.table_path is None
        assert settings.check_monotone

    def test_layering(self, tmp_path, monkeypatch):
        """File beats env for jobs; env still supplies output_format."""
        monkeypatch.setenv("DEGSEQ_OUTPUT_FORMAT", "json")
        monkeypatch.setenv("DEGSEQ_JOBS", "7")
        path = write_config(tmp_path, jobs=3, n_to=20, table_path="t.csv")
        settings = resolve_search_settings(str(path), overrides={"n_to": 12, "mode": None})
        assert settings == SearchSettings(
            mode=SearchMode.FAST,
            jobs=3,
            n_from=4,
            n_to=12,
            output_format=OutputFormat.JSON,
            table_path=Path("t.csv"),
            check_monotone=True,
        )

    def test_explicit_config_must_exist(self, tmp_path):
        with pytest.raises(ConfigurationError):
            resolve_search_settings(str(tmp_path / "missing.yaml"))

    @pytest.mark.parametrize(
        "values",
        [
            {"mode": "quick"},
            {"jobs": 0},
            {"jobs": "many"},
            {"output_format": "xml"},
            {"n_from": 2},
            {"n_from": 20, "n_to": 10},
            {"check_monotone": "maybe"},
        ],
    )
    def test_invalid_values(self, tmp_path, values):
        """Every bad value is a ConfigurationError, never a raw ValueError."""
        path = write_config(tmp_path, **values)
        with pytest.raises(ConfigurationError):
            resolve_search_settings(str(path))

    def test_to_dict(self):
        assert SearchSettings(jobs=2).to_dict()["mode"] == "fast"


class TestDetermineConfigFile:
    def test_default_may_be_missing(self, tmp_path):
        default = str(tmp_path / "degseq.yaml")
        assert determine_config_file(None, default=default) == default

    def test_explicit_returned(self, tmp_path):
        path = write_config(tmp_path, mode="fast")
        assert determine_config_file(str(path)) == str(path)


class TestDotenv:
    """Loading .env into the process environment."""

    def test_loads_without_overriding(self, tmp_path, monkeypatch):
        monkeypatch.setenv("DEGSEQ_JOBS", "2")
        (tmp_path / ".env").write_text("DEGSEQ_JOBS=9\nDEGSEQ_MODE=exhaustive\n")
        try:
            loaded, path = load_dotenv_if_available(tmp_path)
            assert loaded
            assert path == (tmp_path / ".env").absolute()
            assert os.environ["DEGSEQ_JOBS"] == "2"
            assert os.environ["DEGSEQ_MODE"] == "exhaustive"
        finally:
            os.environ.pop("DEGSEQ_MODE", None)

    def test_no_file(self, tmp_path):
        assert load_dotenv_if_available(tmp_path) == (False, None)
