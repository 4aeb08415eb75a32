from django.core.management.base import CommandError

from core.conf import settings
from core.constructions import ConstructionError, load_recipes
from core.eliminators import CatalogError, load_catalog
from core.graph import encode_graph6
from core.knowledge import (KBConflictError, KBParseError, kb_load,
                            kb_seed_builtin, KnowledgeBase)
from core.models import ClassificationRun
from core.pipeline import (SoundnessAlarm, StageError, classify_order,
                           filter_stage)
from core.summaries import ClassificationOverview, write_report

from ._base import TimedCommand

FORMATS = ('txt', 'csv', 'dot')


class Command(TimedCommand):
    help = "Classify every graph of one order as occurring, not occurring " \
           "or unknown."

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, default=settings.CDG_ORDER)
        parser.add_argument('--kb', nargs='*', default=None,
                            help='Knowledge base files or directories '
                                 '(defaults to CDG_SEED_DIR)')
        parser.add_argument('--no-builtin', default=False,
                            action='store_true',
                            help='Do not start from the builtin seed')
        parser.add_argument('--recipes', type=str,
                            default=settings.CDG_RECIPES,
                            help="Construction recipes file; '' for none")
        parser.add_argument('--catalog', type=str,
                            default=settings.CDG_CATALOG,
                            help="Catalog of eliminated shapes; '' for none")
        parser.add_argument('--out', type=str,
                            default=settings.CDG_REPORT_DIR)
        parser.add_argument('--format', action='append', choices=FORMATS,
                            help='Report format; may be repeated '
                                 '(defaults to txt and csv)')
        parser.add_argument('--explain', action='append', default=[],
                            help='graph6 string or canonical key hex to '
                                 'explain; may be repeated')
        parser.add_argument('--stage', choices=('filter',),
                            help='Stop after the given stage')
        parser.add_argument('--strict', default=None, action='store_true',
                            help='Evaluate only the convention-minimal '
                                 'diameter-3 labelings')
        parser.add_argument('--no-verify-primes', default=False,
                            action='store_true',
                            help='Skip primality checks on recipe factors')
        parser.add_argument('--save', default=False, action='store_true',
                            help='Store the run in the database')

    def load_kb(self, options):
        kb = KnowledgeBase() if options['no_builtin'] else kb_seed_builtin()
        paths = options['kb']
        if paths is None:
            paths = [settings.CDG_SEED_DIR]
        for path in paths:
            extra = kb_load(path)
            kb = kb.overlay(extra)
            self.log("Loaded {} records from {}".format(len(extra), path))
        return kb

    def run_filter_stage(self, order):
        passed = 0
        for g, reason, sig in filter_stage(order):
            if reason:
                self.stdout.write("{} FAIL {}".format(encode_graph6(g),
                                                      reason))
            else:
                passed += 1
                self.stdout.write("{} PASS {}".format(encode_graph6(g), sig))
        self.log("{} graphs pass the filter".format(passed))

    def handle(self, *args, **options):
        order = options['order']
        if options['stage'] == 'filter':
            self.run_filter_stage(order)
            return

        try:
            kb = self.load_kb(options)
            recipes = load_recipes(options['recipes']) \
                if options['recipes'] else []
            catalog = load_catalog(options['catalog']) \
                if options['catalog'] else {}
        except (KBParseError, KBConflictError, ConstructionError,
                CatalogError, OSError) as e:
            raise CommandError(str(e))
        self.log("Knowledge base: {} records, {} recipes, {} catalog "
                 "entries".format(len(kb), len(recipes), len(catalog)))

        check_primality = settings.CDG_VERIFY_PRIMES \
            and not options['no_verify_primes']
        try:
            report = classify_order(order, kb, recipes, catalog,
                                    strict=options['strict'],
                                    check_primality=check_primality)
        except SoundnessAlarm as e:
            raise CommandError("Soundness alarm: {}".format(e), returncode=2)
        except StageError as e:
            raise CommandError(str(e), returncode=1)

        overview = ClassificationOverview(report)
        counts = overview.counts()
        self.log("{} graphs, {} connected survivors".format(
            counts['total'], counts['survivors']))
        self.log("Connected: {}".format(overview.tallies()))
        self.log("Disconnected: {}".format(overview.tallies(False)))

        formats = options['format'] or ['txt', 'csv']
        for path in write_report(report, options['out'], formats):
            self.log("Wrote {}".format(path))

        for text in options['explain']:
            for line in report.explain(text):
                self.stdout.write(line)

        if options['save']:
            seeds = "kb={} recipes={} catalog={} builtin={}".format(
                options['kb'] or settings.CDG_SEED_DIR, options['recipes'],
                options['catalog'], not options['no_builtin'])
            run = ClassificationRun.from_report(report, seeds=seeds,
                                                started=self.start_time)
            self.log("Saved run {}".format(run.pk))
