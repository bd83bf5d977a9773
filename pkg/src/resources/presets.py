"""
Preset Resources - 內建情境與結果格式文件

透過 MCP Resource 讓 LLM 可以直接讀取 preset YAML 與結果資料夾說明
"""

from mcp.server.fastmcp import FastMCP

from config import DOCS_PATH, PRESETS
from experiments.scenario import resolve_config_path


def register_resources(mcp: FastMCP):
    """向 MCP Server 註冊所有資源"""

    @mcp.resource("batch://presets")
    def get_preset_index() -> str:
        """Names of the shipped SKU presets"""
        lines = ["# Presets", ""]
        lines += [f"- batch://presets/{name}" for name in PRESETS]
        return "\n".join(lines)

    @mcp.resource("batch://presets/{name}")
    def get_preset(name: str) -> str:
        """YAML config of one shipped preset"""
        if name not in PRESETS:
            return f"# Unknown preset '{name}'\nAvailable: {', '.join(PRESETS)}"
        return resolve_config_path(name).read_text(encoding="utf-8")

    @mcp.resource("batch://docs/result-format")
    def get_result_format() -> str:
        """Layout of the results/ run folders"""
        doc = DOCS_PATH / "RESULT_FORMAT.md"
        if doc.exists():
            return doc.read_text(encoding="utf-8")
        return "# Result format not found\nCheck docs/RESULT_FORMAT.md"
