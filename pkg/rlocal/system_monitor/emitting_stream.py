class EmittingStream:
    """Line-buffered file-like object handing every complete non-blank line to a callback.

    Used as the target of a ``logging.StreamHandler`` so that log records end up
    in a list (for example ``meta.warnings`` of the decomposition output).
    """

    def __init__(self, append_callback):
        self.append_callback = append_callback
        self._pending = ""

    def write(self, text):
        self._pending += text
        *lines, self._pending = self._pending.split("\n")
        for line in lines:
            self._emit(line)
        return len(text)

    def _emit(self, line):
        line = line.rstrip()
        if line.strip():  # Skip empty lines
            self.append_callback(line)

    def flush(self):
        if self._pending:
            self._emit(self._pending)
            self._pending = ""
