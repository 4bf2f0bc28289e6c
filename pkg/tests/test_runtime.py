"""Tests for configuration, logging setup and timing helpers."""

import logging
import sys

import pytest

from tforge.runtime.config import CONFIG_FILE_NAME, MEMO_ENV_VAR, ForgeConfig
from tforge.runtime.exceptions import ConfigurationError
from tforge.runtime.logging_config import setup_logging, with_log_level
from tforge.runtime.performance import benchmark, get_monitor, timed
from tforge.tutte.engine import EdgePickPolicy, EngineConfig


class TestForgeConfig:
    """Tests for ForgeConfig."""

    def test_defaults(self):
        config = ForgeConfig()
        assert config.engine.memo_enabled
        assert config.engine.memo_canonical_max_vertices == 10
        assert config.iso.max_vertices == 12
        assert config.verify.subset_max_k == 4
        assert config.logging.level == "WARNING"

    def test_save_and_load(self, tmp_path):
        config = ForgeConfig()
        config.engine.parallel_tasks = 4
        config.verify.probe_trials = 7
        path = config.save(tmp_path / CONFIG_FILE_NAME)

        loaded = ForgeConfig.load(path)
        assert loaded.engine.parallel_tasks == 4
        assert loaded.verify.probe_trials == 7
        assert loaded.source == path

    def test_partial_yaml_keeps_defaults(self, tmp_path):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("engine:\n  edge_pick_policy: first_id\n")
        config = ForgeConfig.load(path)
        assert config.engine.edge_pick_policy == "first_id"
        assert config.engine.oracle_edge_limit == 20

    def test_empty_file(self, tmp_path):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text("")
        assert ForgeConfig.load(path).to_dict() == ForgeConfig().to_dict()

    @pytest.mark.parametrize(
        "text",
        [
            "engine: [unclosed\n",
            "- just\n- a list\n",
            "engine:\n  parallel_tasks: 0\n",
            "engine:\n  edge_pick_policy: random\n",
            "verify:\n  probe_loop_probability: 1.5\n",
        ],
    )
    def test_invalid_files(self, tmp_path, text):
        path = tmp_path / CONFIG_FILE_NAME
        path.write_text(text)
        with pytest.raises(ConfigurationError) as exc:
            ForgeConfig.load(path)
        assert exc.value.file_path == str(path)

    def test_find_config_walks_up(self, tmp_path):
        (tmp_path / CONFIG_FILE_NAME).write_text("iso:\n  max_vertices: 9\n")
        nested = tmp_path / "a" / "b"
        nested.mkdir(parents=True)
        assert ForgeConfig.find_config(nested) == (tmp_path / CONFIG_FILE_NAME).resolve()
        assert ForgeConfig.load_or_default(start_dir=nested).iso.max_vertices == 9

    def test_environment_override(self):
        config = ForgeConfig().apply_environment({MEMO_ENV_VAR: "3"})
        assert config.engine.memo_canonical_max_vertices == 3
        untouched = ForgeConfig().apply_environment({MEMO_ENV_VAR: " "})
        assert untouched.engine.memo_canonical_max_vertices == 10

    @pytest.mark.parametrize("raw", ["many", "-1"])
    def test_bad_environment_override(self, raw):
        with pytest.raises(ConfigurationError):
            ForgeConfig().apply_environment({MEMO_ENV_VAR: raw})

    def test_engine_config_from_settings(self):
        config = ForgeConfig()
        config.engine.edge_pick_policy = "first_id"
        engine_config = EngineConfig.from_settings(config.engine)
        assert engine_config.edge_pick_policy == EdgePickPolicy.FIRST_ID


class TestLogging:
    """Tests for logging setup."""

    def test_console_goes_to_stderr(self):
        setup_logging("INFO")
        root = logging.getLogger()
        assert root.level == logging.INFO
        assert len(root.handlers) == 1
        assert root.handlers[0].stream is sys.stderr

    def test_log_file(self, tmp_path):
        log_file = tmp_path / "logs" / "tforge.log"
        setup_logging("ERROR", log_file=log_file, console=False)
        logging.getLogger("tforge.test").debug("written")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written" in log_file.read_text()
        setup_logging("WARNING")

    def test_temporary_level(self):
        log = logging.getLogger("tforge.temporary")
        log.setLevel(logging.WARNING)
        with with_log_level(log, "DEBUG"):
            assert log.level == logging.DEBUG
        assert log.level == logging.WARNING


class TestPerformance:
    """Tests for timed and benchmark."""

    def test_timed_records_calls(self):
        monitor = get_monitor()
        monitor.reset()

        @timed("test.square")
        def square(n):
            return n * n

        assert square(3) == 9
        square(4)
        assert monitor.get_stats("test.square").call_count == 2

    def test_benchmark_records_elapsed(self):
        with benchmark("test.block") as bench:
            sum(range(100))
        assert bench.elapsed >= 0.0
        assert get_monitor().get_stats("test.block").to_dict()["calls"] >= 1
