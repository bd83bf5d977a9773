"""Logging setup shared by the CLI and the MCP server."""

import logging
import sys

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str | int = "INFO") -> logging.Logger:
    """在 root logger 安裝單一 stderr handler (重複呼叫只更新層級與輸出串流)"""
    root = logging.getLogger()
    root.setLevel(level.upper() if isinstance(level, str) else level)
    for handler in root.handlers:
        if getattr(handler, "_batchsize", False):
            handler.stream = sys.stderr
            return root
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._batchsize = True
    root.addHandler(handler)
    return root
