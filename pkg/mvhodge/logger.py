import os
import requests
import logging
import sys
import traceback
from logging import handlers

CONFIG_KEY_LOG_SERVER = "MVHODGE_LOG_SERVER"
CONFIG_KEY_LOG_SERVER_AUTH = "MVHODGE_LOG_SERVER_AUTH"
CONFIG_KEY_LOG_FOLDER = "MVHODGE_LOG_FOLDER"


class _HttpLogHandler(logging.Handler):
    def __init__(self, level, url, auth_token=None):
        logging.Handler.__init__(self, level)
        self.url = "{}/api/log".format(url)
        self.auth_token = auth_token

    @staticmethod
    def _map_log_record(record: logging.LogRecord) -> dict:
        result = dict(record.__dict__)
        if result.get("exc_info") is not None:
            trace = []
            for element in result["exc_info"]:
                if type(element).__name__ == "traceback":
                    trace.extend("    {}".format(line.strip()) for line in traceback.format_tb(element))
            if len(trace) > 0:
                result["trace"] = trace
        result.pop("exc_info", None)
        # remaining values must survive json serialisation
        for key, value in list(result.items()):
            if not isinstance(value, (str, int, float, bool, type(None))):
                result[key] = str(value)
        return result

    def emit(self, record):
        is_higher_than_error = self.level == logging.ERROR and record.levelno in [logging.CRITICAL, logging.FATAL]
        if record.levelno != self.level and not is_higher_than_error:
            return

        headers = {
            "Content-Type": "application/json",
        }
        if self.auth_token is not None:
            headers["Authorization"] = self.auth_token
        try:
            requests.post(url=self.url, json=_HttpLogHandler._map_log_record(record), headers=headers, timeout=5)
        except BaseException as be:
            print("Error sending log message: {} ({})".format(record.getMessage(), be), file=sys.stderr)


class Logger(logging.Logger):
    """
    Logger for the library and the CLI. Records go to a log server (MVHODGE_LOG_SERVER), to rotating files in a log
    folder (MVHODGE_LOG_FOLDER or log_folder), or to stderr otherwise; stdout stays reserved for results.
    Usage:

    >>> logger = Logger("MarinoVafaEngine")
    >>> logger.info("built disconnected series")
    """

    def __init__(self, name, log_folder=None, enable_logger_name=True,
                 enabled_log_levels=(logging.INFO, logging.WARNING, logging.ERROR),
                 message_format="%(asctime)s %(levelname)s:%(name)s %(message)s"):
        name = name.replace(".log", "")
        super().__init__(name)
        logger = logging.getLogger(name)
        logger.setLevel(logging.DEBUG)

        self.log_server = os.getenv(CONFIG_KEY_LOG_SERVER)
        self.log_server_auth = os.getenv(CONFIG_KEY_LOG_SERVER_AUTH)
        self.is_worker = self.log_server is not None

        # check if other handlers are provided
        if not logger.handlers:
            if self.is_worker:
                self._configure_worker(logger, self.log_server, message_format, self.log_server_auth,
                                       enabled_log_levels)
            else:
                if log_folder is None:
                    log_folder = os.getenv(CONFIG_KEY_LOG_FOLDER)
                if log_folder is None:
                    self._configure_console(logger, message_format, enable_logger_name=enable_logger_name)
                else:
                    self._configure_listener(logger, message_format, log_folder=log_folder,
                                             enable_logger_name=enable_logger_name,
                                             enabled_log_levels=enabled_log_levels)
            logger.propagate = False

        self._logger = logger

    def warn(self, msg, *args, **kwargs):
        self.warning(msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        try:
            self._logger.warning(msg, *args, **kwargs)
        except BaseException:
            print(msg, file=sys.stderr)

    def error(self, msg, *args, **kwargs):
        try:
            self._logger.error(msg, *args, **kwargs)
        except BaseException:
            print(msg, file=sys.stderr)

    def debug(self, msg, *args, **kwargs):
        try:
            self._logger.debug(msg, *args, **kwargs)
        except BaseException:
            print(msg, file=sys.stderr)

    def info(self, msg, *args, **kwargs):
        try:
            self._logger.info(msg, *args, **kwargs)
        except BaseException:
            print(msg, file=sys.stderr)

    def exception(self, msg, *args, **kwargs):
        try:
            self._logger.exception(msg, *args, **kwargs)
        except BaseException:
            print(msg, file=sys.stderr)

    def get_handler(self):
        if len(self._logger.handlers) == 0:
            return None
        return self._logger.handlers[0]

    def __repr__(self):
        return self._logger.__repr__()

    @staticmethod
    def _formatter(message_format: str, enable_logger_name: bool) -> logging.Formatter:
        if enable_logger_name is False:
            message_format = message_format.replace(":%(name)s", "")
        return logging.Formatter(message_format)

    @staticmethod
    def _configure_worker(logger, url, message_format, auth=None, enabled_log_levels=(logging.INFO, logging.ERROR)):
        for log_level in enabled_log_levels:
            handler = _HttpLogHandler(log_level, url, auth)
            handler.setFormatter(logging.Formatter(message_format))
            logger.addHandler(handler)

    @staticmethod
    def _configure_console(logger, message_format, enable_logger_name=True):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(Logger._formatter(message_format, enable_logger_name))
        handler.setLevel(logging.WARNING)
        logger.addHandler(handler)

    @staticmethod
    def _configure_listener(logger, message_format, log_folder="_logs", enable_logger_name=True,
                            enabled_log_levels=(logging.INFO, logging.ERROR)):
        formatter = Logger._formatter(message_format, enable_logger_name)
        file_names = {
            logging.INFO: "info.log",
            logging.DEBUG: "debug.log",
            logging.ERROR: "error.log",
            logging.WARNING: "warning.log",
        }

        if not os.path.isdir(log_folder):
            os.makedirs(log_folder)
        for log_level in enabled_log_levels:
            file_name = os.path.join(log_folder, file_names[log_level])
            handler = handlers.TimedRotatingFileHandler(file_name, when="d", interval=1, backupCount=30)
            handler.setFormatter(formatter)
            handler.setLevel(log_level)
            logger.addHandler(handler)
