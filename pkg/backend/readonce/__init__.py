"""
Session factory for the read-once recognition toolkit
"""
import logging
import os

from .config import CONFIGS
from .models.variable import VariableRegistry

__version__ = '1.0.0'


class AnalysisSession:
    """Configuration plus the variable registry shared by one run"""

    def __init__(self, name, config):
        self.name = name
        self.config = config
        self.registry = VariableRegistry()

    def new_registry(self):
        """Start a fresh registry (each CLI invocation reads its own files)"""
        self.registry = VariableRegistry()
        return self.registry

    def __repr__(self):
        return f'<AnalysisSession {self.name} vars={len(self.registry)}>'


def _from_object(cls):
    return {key: getattr(cls, key) for key in dir(cls) if key.isupper()}


def create_session(config_name='development'):
    """Session factory pattern"""
    name = config_name if config_name in CONFIGS else 'development'
    config = _from_object(CONFIGS[name])

    # Override with environment variables if they exist
    config['MAX_VARS'] = int(os.environ.get('READONCE_MAX_VARS') or config['MAX_VARS'])
    config['SEED'] = int(os.environ.get('READONCE_SEED') or config['SEED'])
    config['OUTPUT_DIR'] = os.environ.get('READONCE_OUTPUT_DIR') or config['OUTPUT_DIR']

    logging.basicConfig(level=config['LOG_LEVEL'], format=config['LOG_FORMAT'])
    logging.getLogger(__name__).debug('session %s created', name)
    return AnalysisSession(name, config)
