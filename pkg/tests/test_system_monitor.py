import logging

from rlocal.system_monitor import EmittingStream, collect_stats, format_stats


def test_emitting_stream_skips_blank_writes():
    lines = []
    stream = EmittingStream(lines.append)
    stream.write("first\n")
    stream.write("\n")
    stream.write("   ")
    stream.flush()
    assert lines == ["first"]


def test_emitting_stream_as_log_target():
    lines = []
    handler = logging.StreamHandler(EmittingStream(lines.append))
    logger = logging.getLogger("rlocal.test_stream")
    logger.addHandler(handler)
    try:
        logger.warning("kept %d", 1)
    finally:
        logger.removeHandler(handler)
    assert lines == ["kept 1"]


def test_format_stats():
    stats = {"cpu_name": "Test CPU", "cpu_usage": 12.34, "ram_used": 3.0, "ram_total": 16.0, "ram_percent": 18.75}
    assert format_stats(stats) == "Test CPU | CPU usage: 12.3% | RAM: 3.0/16.0 GB (18.8%)"


def test_collect_stats_keys():
    stats = collect_stats()
    assert set(stats) == {"cpu_name", "cpu_usage", "ram_used", "ram_total", "ram_percent"}
    assert 0 < stats["ram_used"] <= stats["ram_total"]


def test_emitting_stream_splits_and_buffers():
    lines = []
    stream = EmittingStream(lines.append)
    stream.write("one\ntwo")
    assert lines == ["one"]
    stream.write(" halves\n")
    stream.write("tail")
    stream.flush()
    assert lines == ["one", "two halves", "tail"]
