import functools
import logging
import time
from typing import Any, Callable

import numpy as np

logger = logging.getLogger(__name__)


def _summarize(value: Any) -> str:
    """Short printable form; matrices are reported by shape only."""
    if isinstance(value, np.ndarray):
        return f"ndarray{value.shape}"
    text = repr(value)
    return text if len(text) <= 120 else f"{text[:117]}..."


def log_method(func: Callable) -> Callable:
    """
    Decorator to log calls, arguments, return values, and execution time.

    Logs at DEBUG so conversion loops stay quiet unless verbose logging is on.
    Exceptions are logged and re-raised untouched.

    Usage:
        @log_method
        def convert(point, target):
            ...
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        name = func.__qualname__

        logger.debug(f"🔵 ENTERING: {name}()")
        if args:
            logger.debug(f"   📥 Args: {', '.join(_summarize(a) for a in args)}")
        if kwargs:
            logger.debug(f"   📥 Kwargs: { {k: _summarize(v) for k, v in kwargs.items()} }")

        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            execution_time = time.perf_counter() - start_time
            logger.debug(f"   ❌ FAILED: {name}() after {execution_time:.3f}s")
            logger.debug(f"   💥 Error: {type(e).__name__}: {e}")
            raise

        execution_time = time.perf_counter() - start_time
        logger.debug(f"   ✅ SUCCESS: {name}() -> {_summarize(result)}")
        logger.debug(f"   ⏱️  Time: {execution_time:.3f}s")
        return result

    return wrapper
