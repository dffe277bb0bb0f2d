import os
from typing import List, Dict, Any, Optional
from dotenv import load_dotenv

CONFIG_KEY_CACHE_DIR = "MVHODGE_CACHE_DIR"
CONFIG_KEY_LOG_FOLDER = "MVHODGE_LOG_FOLDER"
CONFIG_KEY_LAMBDA_GUARD = "MVHODGE_LAMBDA_GUARD"
CONFIG_KEY_WORKERS = "MVHODGE_WORKERS"
CONFIG_KEY_RECHECK = "MVHODGE_RECHECK"

TRUE_VALUES = ("1", "true", "yes", "on")

DEFAULT_VALUES = {
    CONFIG_KEY_CACHE_DIR: None,
    CONFIG_KEY_LOG_FOLDER: None,
    CONFIG_KEY_LAMBDA_GUARD: 2,
    CONFIG_KEY_WORKERS: 1,
    CONFIG_KEY_RECHECK: False,
}

# key -> smallest admissible value
INTEGER_KEYS = {
    CONFIG_KEY_LAMBDA_GUARD: 0,
    CONFIG_KEY_WORKERS: 1,
}


class BasicConfig:
    def __init__(self, default_values: Dict[str, Any] = None, directory_keys: List[str] = None,
                 required: List[str] = None, integer_keys: Dict[str, int] = None, env_file=".env"):
        self.config = {}
        self.default_values = default_values if default_values is not None else {}
        self.directory_keys = directory_keys if directory_keys is not None else []
        self.required_keys = required if required is not None else []
        self.integer_keys = integer_keys if integer_keys is not None else {}
        self._env_file = env_file
        self._load_config()

    def _load_config(self):
        # read out existing os environment
        load_dotenv(self._env_file)
        self.config = {}

        # apply defaults for missing config params
        for key in self.default_values:
            val = os.getenv(key)
            if key in self.required_keys and val is None:
                raise EnvironmentError(f"You need to provide an environment variable specifying {key}")
            self.config[key] = self.default_values[key] if val is None else val

        for key, minimum in self.integer_keys.items():
            self.config[key] = self._coerce_int(key, self.config.get(key), minimum)

        # check that all directories exist
        for dir_type in self.directory_keys:
            self._create_directory(dir_type)

    @staticmethod
    def _coerce_int(key: str, value: Any, minimum: int) -> int:
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise EnvironmentError(f"Environment variable {key} must be an integer, got '{value}'")
        if number < minimum:
            raise EnvironmentError(f"Environment variable {key} must be at least {minimum}, got {number}")
        return number

    def get_config_value(self, config_key: str, default_value: Optional[Any] = None) -> Optional[Any]:
        if config_key in self.config:
            val = self.config.get(config_key)
            return default_value if val is None else val

        # read fresh from environment
        val = os.getenv(config_key)
        self.config[config_key] = val
        return default_value if val is None else val

    def _create_directory(self, config_key: str):
        if self.config.get(config_key, None) is None:
            return
        current_dir = self.config[config_key]
        if not os.path.isdir(current_dir):
            os.makedirs(current_dir)


class EngineConfig(BasicConfig):
    """
    Runtime settings of the engine and the CLI, read from a .env file and the environment.
    """

    def __init__(self, env_file=".env"):
        super().__init__(default_values=DEFAULT_VALUES, directory_keys=[CONFIG_KEY_CACHE_DIR],
                         integer_keys=INTEGER_KEYS, env_file=env_file)

    @property
    def cache_dir(self) -> Optional[str]:
        return self.get_config_value(CONFIG_KEY_CACHE_DIR)

    @property
    def log_folder(self) -> Optional[str]:
        return self.get_config_value(CONFIG_KEY_LOG_FOLDER)

    @property
    def lambda_guard(self) -> int:
        return self.get_config_value(CONFIG_KEY_LAMBDA_GUARD)

    @property
    def workers(self) -> int:
        return self.get_config_value(CONFIG_KEY_WORKERS)

    @property
    def recheck(self) -> bool:
        """ Whether every new hodge polynomial is recomputed one λ-order higher and compared """
        return str(self.get_config_value(CONFIG_KEY_RECHECK)).strip().lower() in TRUE_VALUES
