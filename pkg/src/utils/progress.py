#!/usr/bin/env python3
"""
Progress indicator utility for CLI operations
Animated spinner that counts finished work items during scans and suites
"""
import sys
import threading
import time
from typing import Optional


class Spinner:
    """
    Animated spinner for CLI progress indication

    Usage:
        with Spinner("Scanning cyclic:2-64...", total=63) as spinner:
            for member in members:
                scan(member)
                spinner.advance(member.label)

    Draws ``⠋ message [i/total] label`` on stderr. Nothing is drawn when
    ``enabled`` is false or the stream is not a terminal, so piped machine
    reports never carry control characters.
    """

    # Spinner animation frames
    FRAMES = ['⠋', '⠙', '⠹', '⠸', '⠼', '⠴', '⠦', '⠧', '⠇', '⠏']
    INTERVAL = 0.1

    def __init__(self, message: str = "Working...", stream=None,
                 total: Optional[int] = None, enabled: bool = True):
        """
        Initialize spinner

        Args:
            message: Message to display alongside spinner
            stream: Output stream (defaults to sys.stderr)
            total: Number of work items, shown as a counter by advance()
            enabled: Set to False to suppress all output
        """
        self.message = message
        self.stream = stream or sys.stderr
        self.total = total
        self.done = 0
        self.label = ""
        isatty = getattr(self.stream, 'isatty', None)
        self.enabled = enabled and bool(isatty and isatty())
        self._lock = threading.Lock()
        self._stop_event = threading.Event()
        self._thread: Optional[threading.Thread] = None
        self._started = 0.0
        self._width = 0

    @property
    def counter(self) -> str:
        if self.total:
            return f'[{self.done}/{self.total}]'
        return f'[{self.done}]'

    def status(self) -> str:
        """Current status text without the animation frame"""
        with self._lock:
            if not self.done:
                return self.message
            return f'{self.message} {self.counter} {self.label}'

    def _animate(self):
        """Animation loop running in separate thread"""
        frame_index = 0
        while not self._stop_event.is_set():
            frame = self.FRAMES[frame_index % len(self.FRAMES)]
            line = f'{frame} {self.status()}'
            self._width = max(self._width, len(line))
            self.stream.write(f'\r{line}')
            self.stream.flush()
            frame_index += 1
            self._stop_event.wait(self.INTERVAL)

    def start(self):
        """Start the spinner animation"""
        self._started = time.perf_counter()
        if not self.enabled:
            return self
        if self._thread is None or not self._thread.is_alive():
            self._stop_event.clear()
            self._thread = threading.Thread(target=self._animate, daemon=True)
            self._thread.start()
        return self

    def stop(self):
        """Stop the animation, clear the line and print a summary of counted work"""
        if self._thread and self._thread.is_alive():
            self._stop_event.set()
            self._thread.join()
            self.stream.write('\r' + ' ' * (self._width + 1) + '\r')
            if self.total:
                self.stream.write(f'✓ {self.message} {self.counter} in {self.elapsed:.1f}s\n')
            self.stream.flush()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._started if self._started else 0.0

    def __enter__(self):
        """Context manager entry"""
        return self.start()

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit"""
        self.stop()
        return False

    def advance(self, label: str):
        """
        Count one finished work item

        Args:
            label: Name of the item that just finished
        """
        with self._lock:
            self.done += 1
            self.label = label
