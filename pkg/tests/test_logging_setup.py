"""Root logger setup across repeated CLI invocations."""

import io
import logging
import sys

import pytest

from helpers import setup_logging


@pytest.fixture
def restore_root_level():
    root = logging.getLogger()
    level = root.level
    yield root
    root.setLevel(level)


def _own_handlers(root):
    return [h for h in root.handlers if getattr(h, "_batchsize", False)]


def test_second_setup_rebinds_after_stream_closed(monkeypatch, restore_root_level):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    root = setup_logging("INFO")
    logging.getLogger("batchsize.test").info("first run")
    assert "first run" in first.getvalue()
    first.close()

    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    assert setup_logging("info") is root
    logging.getLogger("batchsize.test").info("second run")
    assert "second run" in second.getvalue()
    assert len(_own_handlers(root)) == 1


def test_level_update(monkeypatch, restore_root_level):
    monkeypatch.setattr(sys, "stderr", io.StringIO())
    assert setup_logging("warning").level == logging.WARNING
    assert setup_logging(logging.DEBUG).level == logging.DEBUG
