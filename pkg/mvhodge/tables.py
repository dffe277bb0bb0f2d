import json
from typing import Callable, Dict, List
import pandas as pd
from mvhodge.bernoulli import b_g, bernoulli
from mvhodge.constant_listing import TableFamily
from mvhodge.errors import UserInputError
from mvhodge.gaussian import format_fraction
from mvhodge.identities import admissible_exponents, lambda1_lambdag, lambda_g_conjecture, lambda_gm1_one_point, \
    theorem32_pipeline

OUTPUT_TEXT = "text"
OUTPUT_JSON = "json"


def _bernoulli_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    return [{"m": m, "B_m": format_fraction(bernoulli(m))} for m in range(m_max + 1)]


def _bg_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    return [{"g": g, "b_g": format_fraction(b_g(g))} for g in range(g_min, g_max + 1)]


def _lambda1_lambdag_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    return [{"g": g, "integrand": f"λ1·λ{g}·ψ1^{2 * g - 3}", "value": format_fraction(lambda1_lambdag(g))}
            for g in range(max(g_min, 2), g_max + 1)]


def _thm32_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    rows = []
    for g in range(max(g_min, 2), g_max + 1):
        for m in range(1, 2 * g - 2):
            result = theorem32_pipeline(g, m)
            rows.append({
                "g": g,
                "m": m,
                "rhs": format_fraction(result.rhs),
                "normal_form": result.normal_form,
                "integrand": result.monomial if result.monomial is not None else "",
                "value": format_fraction(result.value),
            })
    return rows


def _lambda_g_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    rows = []
    for g in range(max(g_min, 1), g_max + 1):
        for n in range(1, n_max + 1):
            for exponents in admissible_exponents(g, n):
                rows.append({
                    "g": g,
                    "n": n,
                    "k": ",".join(str(k) for k in exponents),
                    "value": format_fraction(lambda_g_conjecture(g, exponents)),
                })
    return rows


def _lambda_gm1_rows(g_min: int, g_max: int, m_max: int, n_max: int) -> List[dict]:
    return [{"g": g, "integrand": f"λ{g - 1}·ψ1^{2 * g - 1}", "value": format_fraction(lambda_gm1_one_point(g))}
            for g in range(max(g_min, 1), g_max + 1)]


_FAMILIES: Dict[str, Callable[[int, int, int, int], List[dict]]] = {
    TableFamily.BERNOULLI: _bernoulli_rows,
    TableFamily.BG: _bg_rows,
    TableFamily.LAMBDA1_LAMBDAG: _lambda1_lambdag_rows,
    TableFamily.THM32: _thm32_rows,
    TableFamily.LAMBDA_G: _lambda_g_rows,
    TableFamily.LAMBDA_GM1: _lambda_gm1_rows,
}


def table_frame(family: str, g_min: int = 0, g_max: int = 3, m_max: int = 12, n_max: int = 3) -> pd.DataFrame:
    """
    Builds one table family as a DataFrame; every value column holds exact "num/den" strings.
    :raises UserInputError: for unknown families or negative bounds
    """
    if family not in _FAMILIES:
        raise UserInputError(f"Unknown table '{family}', choose one of {', '.join(sorted(_FAMILIES))}")
    if min(g_min, g_max, m_max, n_max) < 0:
        raise UserInputError("Table bounds must be non-negative")
    return pd.DataFrame(_FAMILIES[family](g_min, g_max, m_max, n_max))


def render_table(frame: pd.DataFrame, output_format: str = OUTPUT_TEXT) -> str:
    if output_format == OUTPUT_JSON:
        records = json.loads(frame.to_json(orient="records", force_ascii=False))
        return json.dumps(records, ensure_ascii=False, indent=2)
    if output_format == OUTPUT_TEXT:
        if frame.empty:
            return "(no rows)"
        return frame.to_string(index=False)
    raise UserInputError(f"Unknown output format '{output_format}'")
