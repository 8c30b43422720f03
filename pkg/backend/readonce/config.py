"""
Configuration settings for different environments
"""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Base configuration"""
    # Brute-force guard for the oracle (2^MAX_VARS assignments)
    MAX_VARS = int(os.environ.get('READONCE_MAX_VARS') or 24)

    # Random corpora
    SEED = int(os.environ.get('READONCE_SEED') or 0)
    CORPUS_SIZE = int(os.environ.get('READONCE_CORPUS_SIZE') or 300)
    CORPUS_MAX_VARS = 12
    CORPUS_MAX_CLAUSES = 4
    CORPUS_MAX_TERMS = 5

    # Reduction output
    OUTPUT_DIR = os.environ.get('READONCE_OUTPUT_DIR') or 'reduction_output'

    # Logging
    LOG_LEVEL = os.environ.get('READONCE_LOG_LEVEL') or 'INFO'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.environ.get('READONCE_LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    LOG_LEVEL = 'WARNING'
    CORPUS_SIZE = 60


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False
    LOG_LEVEL = os.environ.get('READONCE_LOG_LEVEL') or 'WARNING'


CONFIGS = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
}
