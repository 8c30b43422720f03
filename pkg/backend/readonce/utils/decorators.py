"""
Custom decorators for command handlers
"""
import logging
from functools import wraps

from ..errors import ReadOnceError

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_ERROR = 2

logger = logging.getLogger(__name__)


def handles_input_errors(f):
    """
    Decorator turning input failures into an error payload

    Handlers return (payload, exit_code); a ReadOnceError or OSError raised
    inside becomes ({'error': message}, EXIT_ERROR).
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ReadOnceError as e:
            logger.debug('%s rejected input: %s', f.__name__, e)
            return {'error': str(e)}, EXIT_ERROR
        except OSError as e:
            return {'error': f'{e.strerror or e}: {e.filename}' if e.filename else str(e)}, EXIT_ERROR
    return decorated_function


def exit_code_for(holds):
    """0 when the property holds, 1 when it fails with a certificate"""
    return EXIT_HOLDS if holds else EXIT_FAILS
