# -*- coding: utf-8 -*-
from typing import Optional

from rich.markup import escape
from rich.prompt import IntPrompt

from spec_system.console import MyConsole, console_lock, print
from spec_system.parser import ParseResult, reading_paraphrase

from .session import Outcome, Session

PROMPT = '> '

_STYLES = {
    'feedback': '[green]',
    'answer': '[bold green]',
    'info': '[cyan]|INFO| ',
    'listing': '',
    'trace': '[magenta]',
    'warning': '[red]|WARNING| ',
    'error': '[red]|ERROR| ',
}


def render_outcome(outcome: Outcome) -> None:
    """
    Print the messages of an outcome; message text is never read as rich markup.
    """
    for message in outcome.messages:
        print(f"{_STYLES.get(message.level, '')}{escape(message.text)}")


def choose_reading(readings: list[ParseResult]) -> Optional[int]:
    print(f"[red]|WARNING| The sentence has {len(readings)} readings")
    for number, reading in enumerate(readings, start=1):
        print(f"  {number}) {escape(reading_paraphrase(reading))}")
    with console_lock:
        choice = IntPrompt.ask(
            "Reading (0 to reject)",
            console=MyConsole().console,
            choices=[str(number) for number in range(len(readings) + 1)],
            show_choices=False,
            default=0
        )
    return choice or None


class Repl:
    """
    Interactive dialog: one line per prompt until :quit or end of input.
    """

    def __init__(self, session: Session):
        self.session = session

    def run(self) -> None:
        print("[cyan]|INFO| Type sentences ending with '.' or '?', :help for commands")
        while True:
            try:
                line = MyConsole().input(PROMPT)
            except (EOFError, KeyboardInterrupt):
                break
            outcome = self.session.handle(line)
            render_outcome(outcome)
            if outcome.status == 'quit':
                break
        print('[cyan]|INFO| Bye')
