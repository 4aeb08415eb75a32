from .base import *

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = True

LOGGING['loggers']['core']['level'] = os.environ.get('CDG_LOG_LEVEL', 'INFO')
