import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Period Defaults
DEFAULT_K = int(os.getenv('PERIODS_DEFAULT_K', '2'))
DEFAULT_S = int(os.getenv('PERIODS_DEFAULT_S', '0'))

# Output Settings
DEFAULT_FORMAT = os.getenv('PERIODS_DEFAULT_FORMAT', 'json')
OUTPUT_FORMATS = ('json', 'tsv')

# Involution Settings
DEFAULT_MORPHISM = os.getenv('PERIODS_DEFAULT_MORPHISM', 'watson-crick')
BUILTIN_MORPHISMS = ('watson-crick', 'mirror')

# Alphabet Limits
MAX_ALPHABET_SIZE = 256  # Weiner link tables are per letter

# Engine Debugging
ENGINE_DEBUG = os.getenv('PERIODS_ENGINE_DEBUG', 'false').lower() in ('1', 'true', 'yes')
DEBUG_ORACLE_MAX_LENGTH = int(os.getenv('PERIODS_DEBUG_ORACLE_MAX_LENGTH', '64'))

# Oracle Settings
ORACLE_WARN_LENGTH = int(os.getenv('PERIODS_ORACLE_WARN_LENGTH', '200'))

# Batch Settings
MAX_WORKERS = int(os.getenv('PERIODS_MAX_WORKERS', '4'))
EXECUTOR = os.getenv('PERIODS_EXECUTOR', 'process').lower()
EXECUTORS = ('process', 'thread')  # pool kind for multi-record inputs

# Logging
LOG_LEVEL = os.getenv('PERIODS_LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Validate configuration values
def validate_config():
    """Validate that all configuration values are usable."""
    problems = []

    if DEFAULT_K < 2:
        problems.append(f'PERIODS_DEFAULT_K must be >= 2 (got {DEFAULT_K})')

    if DEFAULT_S < 0:
        problems.append(f'PERIODS_DEFAULT_S must be >= 0 (got {DEFAULT_S})')

    if DEFAULT_FORMAT not in OUTPUT_FORMATS:
        problems.append(f'PERIODS_DEFAULT_FORMAT must be one of {", ".join(OUTPUT_FORMATS)}')

    if MAX_WORKERS < 1:
        problems.append(f'PERIODS_MAX_WORKERS must be >= 1 (got {MAX_WORKERS})')

    if EXECUTOR not in EXECUTORS:
        problems.append(f'PERIODS_EXECUTOR must be one of {", ".join(EXECUTORS)} (got {EXECUTOR})')

    if DEBUG_ORACLE_MAX_LENGTH < 0:
        problems.append('PERIODS_DEBUG_ORACLE_MAX_LENGTH must be >= 0')

    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        problems.append(f'PERIODS_LOG_LEVEL is not a logging level: {LOG_LEVEL}')

    if problems:
        raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

    return True
