# -*- coding: utf-8 -*-
from .decorators import class_cache, logged_stage

__all__ = ['class_cache', 'logged_stage']
