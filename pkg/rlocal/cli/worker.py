import logging
import time

logger = logging.getLogger(__name__)


def format_execution_time(total_ms: int) -> str:
    return f"Execution time: {total_ms // 1000}s {total_ms % 1000}ms"


class AlgorithmWorker:
    """Runs one pipeline stage and reports through callbacks.

    The stage receives an ``emit`` function for progress lines. After a
    successful run the measured wall time goes to ``execution_time`` in
    milliseconds and a formatted timing line goes to ``output_line``.
    """

    def __init__(self, stage, output_line=None, execution_time=None, finished=None, error=None):
        self.stage = stage
        self.output_line = output_line or (lambda line: None)
        self.execution_time = execution_time or (lambda ms: None)
        self.finished = finished or (lambda: None)
        self.error = error or (lambda exc: None)
        self.result = None

    def _emit(self, line):
        line = line.rstrip()
        if line:
            self.output_line(line)

    def run(self):
        start = time.perf_counter()
        try:
            self.result = self.stage(self._emit)
        except Exception as e:
            self.error(e)
            return None
        total_ms = int((time.perf_counter() - start) * 1000)
        self.execution_time(total_ms)
        self._emit(format_execution_time(total_ms))
        self.finished()
        return self.result
