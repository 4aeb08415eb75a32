import os

from appconf import AppConf
from django.conf import settings  # noqa: F401

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


class CdgraphConf(AppConf):
    ORDER = 8
    MAX_ORDER = 10
    MILLER_RABIN_ROUNDS = 40
    VERIFY_PRIMES = True
    DIAMETER3_STRICT = False
    SEED_DIR = os.path.join(DATA_DIR, 'seeds')
    CATALOG = os.path.join(DATA_DIR, 'catalog.txt')
    RECIPES = os.path.join(DATA_DIR, 'recipes.txt')
    REPORT_DIR = 'report'

    class Meta:
        prefix = 'cdg'
