# -*- coding: utf-8 -*-
from .handler import Resolution, resolve
from .report import ResolutionEntry, ResolutionReport

__all__ = ['Resolution', 'resolve', 'ResolutionEntry', 'ResolutionReport']
