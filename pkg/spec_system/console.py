# -*- coding: utf-8 -*-
import logging
import threading

from rich import print as rprint
from rich.console import Console
from rich.logging import RichHandler

from spec_system.decorators import class_cache

"""
Shared console output for the dialog and the invoke tasks.

A single global lock keeps every printed line whole when the dialog,
the executor prompts and log records write at the same time.
"""
console_lock = threading.Lock()


def print(msg: str) -> None:
    """
    Print message with console lock.
    """
    with console_lock:
        rprint(msg)


def setup_logging(trace: bool = False) -> None:
    """
    Route the package loggers through rich.

    :param trace: DEBUG level when True, WARNING otherwise.
    """
    root = logging.getLogger("spec_system")
    root.handlers = [RichHandler(console=MyConsole().console, show_path=False, markup=False)]
    root.setLevel(logging.DEBUG if trace else logging.WARNING)
    root.propagate = False


@class_cache
class MyConsole:
    """
    Wrapper class for Rich Console with common functionality.

    Provides easy access to Rich console features like printing, prompting and status indicators.
    """

    def __init__(self):
        self.console = Console()
        self.print = self.console.print
        self.status = self.console.status
        self.input = self.console.input
