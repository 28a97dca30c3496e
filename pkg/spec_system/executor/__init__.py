# -*- coding: utf-8 -*-
from .timeline import Eventuality, Timeline, build_timeline, SPEECH_TIME, BEFORE_SPEECH_TIME
from .io_channel import IoChannel, ConsoleIo, ScriptedIo
from .executor import (
    Interfaces, Handler, TraceStep, ExecutionTrace, run, enter_card, default_interfaces, parse_value,
    ENTER_CARD_PROMPT
)

__all__ = [
    'Eventuality', 'Timeline', 'build_timeline', 'SPEECH_TIME', 'BEFORE_SPEECH_TIME', 'IoChannel', 'ConsoleIo',
    'ScriptedIo', 'Interfaces', 'Handler', 'TraceStep', 'ExecutionTrace', 'run', 'enter_card',
    'default_interfaces', 'parse_value', 'ENTER_CARD_PROMPT'
]
