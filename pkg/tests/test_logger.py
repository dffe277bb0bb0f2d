import logging
import os
import sys
from datetime import timedelta
from mvhodge.constant_listing import ExitCode, IdentityName, TableFamily
from mvhodge.logger import CONFIG_KEY_LOG_FOLDER, CONFIG_KEY_LOG_SERVER, Logger, _HttpLogHandler
from mvhodge.performance_logger import PerformanceLogger


def test_console_logger_uses_stderr(monkeypatch):
    monkeypatch.delenv(CONFIG_KEY_LOG_FOLDER, raising=False)
    monkeypatch.delenv(CONFIG_KEY_LOG_SERVER, raising=False)
    logger = Logger("test-console")
    handler = logger.get_handler()
    assert isinstance(handler, logging.StreamHandler)
    assert handler.stream is sys.stderr


def test_folder_logger(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_KEY_LOG_SERVER, raising=False)
    folder = str(tmp_path / "logs")
    logger = Logger("test-folder", log_folder=folder)
    logger.info("extracted 3 integrals")
    logger.get_handler().flush()
    assert os.path.exists(os.path.join(folder, "info.log"))
    with open(os.path.join(folder, "info.log")) as fp:
        assert "extracted 3 integrals" in fp.read()


def test_http_record_mapping():
    record = logging.LogRecord("engine", logging.ERROR, __file__, 1, "inexact division", None, None)
    record.args = (1, 2)
    mapped = _HttpLogHandler._map_log_record(record)
    assert mapped["msg"] == "inexact division"
    assert mapped["args"] == "(1, 2)"
    assert "exc_info" not in mapped


class _Recorder:
    def __init__(self):
        self.messages = []

    def debug(self, message):
        self.messages.append(message)


def test_performance_logger():
    recorder = _Recorder()
    perf = PerformanceLogger(recorder)
    perf.checkpoint("characters")
    duration = perf.finish("suite")
    assert isinstance(duration, timedelta)
    assert perf.elapsed_ms() >= 0
    assert recorder.messages[0].startswith("characters took")
    assert recorder.messages[1].startswith("suite took")
    PerformanceLogger().finish("silent")


def test_constant_listings():
    assert len(IdentityName().get_all_values()) == 12
    assert IdentityName().contains("f-closed-vs-brute")
    assert ExitCode().reverse_lookup(2) == "USER_ERROR"
    assert ExitCode().get("CONSISTENCY_ERROR") == 3
    assert TableFamily().get("UNKNOWN") is None
