"""
Responses - MCP 工具回傳格式

每個工具回傳都附帶簡短的單位說明，避免把月利潤誤讀成十年總額、
把週期需求誤讀成日需求
"""

import json

# 單位說明 - 精簡版，每次都附上
UNITS_NOTE = """📏 UNITS:
| Field | Unit |
|-------|------|
| monthly_profit / profit | currency per month (average over the horizon) |
| avg_inventory | units on hand at end of day, averaged over all working days |
| stockout_days | working days with unmet demand over the whole horizon |
| base_q / quantile | units per period (T working days) |
| daily distribution parameters | units per day (log-normal: log-units) |"""


def with_units(result: dict) -> str:
    """為工具回傳結果附加單位說明，回傳 JSON 字串"""
    return json.dumps({**result, "_units": UNITS_NOTE}, indent=2, ensure_ascii=False)


def error_response(exc: Exception, hint: str = None) -> str:
    """把預期中的錯誤轉成工具回傳 (工具本身不拋例外)"""
    payload = {"error": str(exc).splitlines()[0] if str(exc) else type(exc).__name__}
    if hint:
        payload["hint"] = hint
    return json.dumps(payload, indent=2, ensure_ascii=False)
