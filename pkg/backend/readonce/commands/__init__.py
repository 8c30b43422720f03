# Command handlers: each returns (payload, exit_code)
from . import analysis, generation

HANDLERS = {
    'check': analysis.check,
    'oracle': analysis.oracle,
    'taut': analysis.taut,
    'reduce': generation.reduce,
    'corpus': generation.corpus,
}

__all__ = ['analysis', 'generation', 'HANDLERS']
