from .emitting_stream import EmittingStream
from .resources import collect_stats, format_stats

__all__ = ["EmittingStream", "collect_stats", "format_stats"]
