#!/usr/bin/env python3
"""
Newsvendor Batch Size MCP Server

使用 FastMCP 提供生產批量計算與庫存模擬工具

模組結構:
- config.py: 設定與路徑
- demand/: 日需求分布擬合與週期需求分位數
- policy/: 臨界分位數、訂購規則與期望利潤
- simulation/: 逐日庫存模擬
- experiments/: 情境、穩健性矩陣與報表
- resources/: MCP 資源暴露 (presets 與結果格式)

日誌寫到 stderr，stdio transport 保持乾淨
"""

import sys
from pathlib import Path

# 確保 src 目錄在 path 中
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from mcp.server.fastmcp import FastMCP

from config import LOG_LEVEL
from helpers import setup_logging

# 建立 MCP Server
mcp = FastMCP("newsvendor-batch")

# 註冊所有工具 (使用絕對 import)
from demand import register_demand_tools
from experiments import register_experiment_tools
from policy import register_policy_tools
from resources import register_resources

register_demand_tools(mcp)
register_policy_tools(mcp)
register_experiment_tools(mcp)
register_resources(mcp)


def main():
    """Run the MCP server"""
    setup_logging(LOG_LEVEL)
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
