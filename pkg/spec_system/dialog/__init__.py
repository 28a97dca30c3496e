# -*- coding: utf-8 -*-
from .session import Session, Outcome, Message, Scenario, HELP
from .editor import LexiconEditor
from .repl import Repl, render_outcome, choose_reading
from .batch import run_batch

__all__ = [
    'Session', 'Outcome', 'Message', 'Scenario', 'HELP', 'LexiconEditor', 'Repl', 'render_outcome',
    'choose_reading', 'run_batch'
]
