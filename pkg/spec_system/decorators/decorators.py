# -*- coding: utf-8 -*-
import logging
from functools import wraps


def class_cache(class_):
    """
    Decorator that caches class instances to implement singleton pattern.

    :param class_: The class to be cached
    :return: Wrapper function that returns cached instances
    """
    __instances = {}

    @wraps(class_)
    def wrapper(*args, **kwargs):
        key = (class_, args, frozenset(kwargs.items()))
        if key not in __instances:
            __instances[key] = class_(*args, **kwargs)
        return __instances[key]

    return wrapper


def logged_stage(stage: str):
    """
    Decorator logging the result of one pipeline stage at DEBUG level.

    The logger is the one of the module that defines the decorated function.

    :param stage: Stage name shown in the log record
    :return: Decorated function returning the original result
    """
    def wrapper(func):
        logger = logging.getLogger(func.__module__)

        @wraps(func)
        def inner(*args, **kwargs):
            result = func(*args, **kwargs)
            if logger.isEnabledFor(logging.DEBUG):
                logger.debug("%s: %s", stage, result)
            return result

        return inner

    return wrapper
