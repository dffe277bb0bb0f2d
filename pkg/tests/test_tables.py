import json
import pytest
from mvhodge.constant_listing import TableFamily
from mvhodge.errors import UserInputError
from mvhodge.tables import OUTPUT_JSON, OUTPUT_TEXT, render_table, table_frame


def test_bernoulli_table():
    frame = table_frame(TableFamily.BERNOULLI, m_max=6)
    assert list(frame["B_m"]) == ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]


def test_bg_table():
    frame = table_frame(TableFamily.BG, g_min=1, g_max=3)
    assert list(frame["b_g"]) == ["1/24", "7/5760", "31/967680"]
    assert "7/5760" in render_table(frame, OUTPUT_TEXT)


def test_lambda1_lambdag_table():
    frame = table_frame(TableFamily.LAMBDA1_LAMBDAG, g_max=3)
    assert list(frame["g"]) == [2, 3]
    assert list(frame["value"]) == ["1/2880", "41/1451520"]


def test_ch_integral_table():
    frame = table_frame(TableFamily.THM32, g_max=3)
    assert [(row["g"], row["m"]) for row in frame.to_dict(orient="records")] == [(2, 1), (3, 1), (3, 2), (3, 3)]
    assert list(frame["value"])[1:] == ["1/362880", "0", "41/1451520"]


def test_lambda_g_tables():
    frame = table_frame(TableFamily.LAMBDA_G, g_max=2, n_max=1)
    assert list(frame["value"]) == ["1/24", "7/5760"]
    frame = table_frame(TableFamily.LAMBDA_GM1, g_max=2)
    assert list(frame["value"]) == ["1/24", "1/480"]


def test_json_rendering():
    records = json.loads(render_table(table_frame(TableFamily.BG, g_max=1), OUTPUT_JSON))
    assert records == [{"g": 0, "b_g": "1"}, {"g": 1, "b_g": "1/24"}]


def test_empty_and_invalid():
    assert render_table(table_frame(TableFamily.LAMBDA1_LAMBDAG, g_max=1)) == "(no rows)"
    with pytest.raises(UserInputError):
        table_frame("primes")
    with pytest.raises(UserInputError):
        table_frame(TableFamily.BG, g_max=-1)
    with pytest.raises(UserInputError):
        render_table(table_frame(TableFamily.BG), "xml")
