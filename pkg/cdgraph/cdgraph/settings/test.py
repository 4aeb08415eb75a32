from .base import *

DEBUG = False

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

# The large recipe factors are checked by their own test, not on every
# pipeline run.
CDG_VERIFY_PRIMES = False

LOGGING = {
    'version': 1,
    'disable_existing_loggers': True
}
