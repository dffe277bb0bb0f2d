import os
import pytest
from mvhodge.app_config import CONFIG_KEY_CACHE_DIR, CONFIG_KEY_LAMBDA_GUARD, CONFIG_KEY_RECHECK, CONFIG_KEY_WORKERS, \
    EngineConfig


@pytest.fixture
def clean_env(monkeypatch):
    for key in (CONFIG_KEY_CACHE_DIR, CONFIG_KEY_LAMBDA_GUARD, CONFIG_KEY_WORKERS, CONFIG_KEY_RECHECK):
        monkeypatch.delenv(key, raising=False)
    return monkeypatch


def test_defaults(clean_env, tmp_path):
    config = EngineConfig(env_file=str(tmp_path / "missing.env"))
    assert config.cache_dir is None
    assert config.lambda_guard == 2
    assert config.workers == 1
    assert not config.recheck


def test_environment_values(clean_env, tmp_path):
    cache = tmp_path / "hodge-cache"
    clean_env.setenv(CONFIG_KEY_CACHE_DIR, str(cache))
    clean_env.setenv(CONFIG_KEY_WORKERS, "3")
    config = EngineConfig(env_file=str(tmp_path / "missing.env"))
    assert config.workers == 3
    assert config.cache_dir == str(cache)
    assert os.path.isdir(cache)


def test_env_file(clean_env, tmp_path):
    env_file = tmp_path / "test.env"
    env_file.write_text(f"{CONFIG_KEY_LAMBDA_GUARD}=4\n")
    try:
        assert EngineConfig(env_file=str(env_file)).lambda_guard == 4
    finally:
        # load_dotenv writes into os.environ directly
        os.environ.pop(CONFIG_KEY_LAMBDA_GUARD, None)


def test_invalid_integers(clean_env, tmp_path):
    clean_env.setenv(CONFIG_KEY_WORKERS, "many")
    with pytest.raises(EnvironmentError):
        EngineConfig(env_file=str(tmp_path / "missing.env"))
    clean_env.setenv(CONFIG_KEY_WORKERS, "0")
    with pytest.raises(EnvironmentError):
        EngineConfig(env_file=str(tmp_path / "missing.env"))


def test_recheck_flag(clean_env, tmp_path):
    clean_env.setenv(CONFIG_KEY_RECHECK, "Yes")
    assert EngineConfig(env_file=str(tmp_path / "missing.env")).recheck
    clean_env.setenv(CONFIG_KEY_RECHECK, "0")
    assert not EngineConfig(env_file=str(tmp_path / "missing.env")).recheck
