# -*- coding: utf-8 -*-
from .report import Report, BatchReport

__all__ = ["Report", "BatchReport"]
