# -*- coding: utf-8 -*-
from .config import DialogConfig, DEFAULT_CONFIG_NAME

__all__ = ['DialogConfig', 'DEFAULT_CONFIG_NAME']
