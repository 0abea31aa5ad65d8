from .config import Caps, RunConfig, load_config
from .main import build_parser, main
from .suites import SUITES, SuiteResult
from .worker import AlgorithmWorker, format_execution_time

__all__ = [
    "Caps",
    "RunConfig",
    "load_config",
    "build_parser",
    "main",
    "SUITES",
    "SuiteResult",
    "AlgorithmWorker",
    "format_execution_time",
]
