import os
import pytest
from mvhodge.files import cache_file_name, ensure_directory, read_json, write_json
from mvhodge.partition import Partition


def test_json_round_trip(tmp_path):
    path = str(tmp_path / "values.json")
    write_json({"b1": "1/24"}, path)
    assert read_json(path) == {"b1": "1/24"}
    assert not os.path.exists(f"{path}.tmp")
    assert read_json(str(tmp_path / "missing.json")) is None
    with pytest.raises(ValueError):
        write_json("1/24", path)


def test_ensure_directory(tmp_path):
    target = str(tmp_path / "a" / "b")
    assert ensure_directory(target) == target
    assert os.path.isdir(target)


def test_cache_file_name():
    assert cache_file_name(2, Partition([3, 1, 1]), 7) == "hodge_g2_mu3-1-1_o7.json"
    assert cache_file_name(0, Partition(), 0) == "hodge_g0_muempty_o0.json"
