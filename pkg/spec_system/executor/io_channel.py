# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Iterable

from rich.prompt import Prompt

from spec_system.console import MyConsole, console_lock


class IoChannel(ABC):
    """
    Where the executor asks its questions; every exchange is kept in the transcript.
    """

    def __init__(self):
        self.transcript: list[tuple[str, str]] = []

    def ask(self, prompt: str) -> str:
        reply = self._read(prompt).strip()
        self.transcript.append((prompt, reply))
        return reply

    @property
    def replies(self) -> list[str]:
        return [reply for _, reply in self.transcript]

    @abstractmethod
    def _read(self, prompt: str) -> str:
        ...


class ConsoleIo(IoChannel):

    def _read(self, prompt: str) -> str:
        with console_lock:
            return Prompt.ask(f"[cyan]{prompt}[/]", console=MyConsole().console, default='', show_default=False)


class ScriptedIo(IoChannel):
    """
    Replies taken in order from a list; an exhausted script answers with an empty line.
    """

    def __init__(self, replies: Iterable[str] = ()):
        super().__init__()
        self._pending = list(replies)

    @classmethod
    def from_file(cls, path: str | Path) -> "ScriptedIo":
        """
        One reply per line; lines starting with '#' are skipped.
        """
        with open(path, 'r', encoding='utf-8') as file:
            return cls(line.rstrip('\n') for line in file if not line.startswith('#'))

    @property
    def remaining(self) -> int:
        return len(self._pending)

    def _read(self, prompt: str) -> str:
        return self._pending.pop(0) if self._pending else ''
