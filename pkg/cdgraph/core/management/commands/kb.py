from django.core.management.base import CommandError

from core.knowledge import (KBConflictError, KBParseError, kb_diff, kb_load,
                            kb_store, kb_validate)
from core.models import ClassificationRun

from ._base import TimedCommand


class Command(TimedCommand):
    help = "Validate, export or compare knowledge base files."

    def add_arguments(self, parser):
        parser.add_argument('action', choices=('validate', 'export', 'diff'))
        parser.add_argument('paths', nargs='*',
                            help='validate: files to check; export: files '
                                 'to merge; diff: OLD NEW')
        parser.add_argument('--run', type=int,
                            help='export: the stored run to write')
        parser.add_argument('--out', type=str,
                            help='export: output file (defaults to stdout)')

    def handle(self, *args, **options):
        try:
            getattr(self, 'handle_' + options['action'])(options)
        except (KBParseError, KBConflictError, OSError) as e:
            raise CommandError(str(e))

    def handle_validate(self, options):
        if not options['paths']:
            raise CommandError("validate needs at least one path")
        failures = 0
        for path in options['paths']:
            kb = kb_load(path)
            problems = kb_validate(kb)
            for record, reason in problems:
                self.stdout.write("{}: {} is recorded as occurring but "
                                  "fails {}".format(path, record.graph6,
                                                    reason))
            failures += len(problems)
            self.log("{}: {} records, {} problems".format(path, len(kb),
                                                          len(problems)))
        if failures:
            raise CommandError("{} invalid records".format(failures))

    def handle_export(self, options):
        if options['run'] is not None:
            try:
                run = ClassificationRun.objects.get(pk=options['run'])
            except ClassificationRun.DoesNotExist:
                raise CommandError("No run {}".format(options['run']))
            lines = [c.to_line() for c in run.classifications.all()]
            text = "\n".join(lines) + "\n" if lines else ""
            if options['out']:
                with open(options['out'], 'w', encoding='utf-8') as f:
                    f.write(text)
            else:
                self.stdout.write(text, ending='')
            return
        if not options['paths']:
            raise CommandError("export needs --run or at least one path")
        merged = kb_load(options['paths'][0])
        for path in options['paths'][1:]:
            merged = merged.overlay(kb_load(path))
        if options['out']:
            kb_store(merged, options['out'])
            self.log("Wrote {} records to {}".format(len(merged),
                                                     options['out']))
        else:
            for record in merged:
                self.stdout.write(record.to_line())

    def handle_diff(self, options):
        if len(options['paths']) != 2:
            raise CommandError("diff needs exactly two paths: OLD NEW")
        old, new = (kb_load(path) for path in options['paths'])
        diff = kb_diff(old, new)
        for record in diff.added:
            self.stdout.write("+ " + record.to_line())
        for record in diff.removed:
            self.stdout.write("- " + record.to_line())
        for before, after in diff.changed:
            self.stdout.write("~ {} {} -> {}".format(
                before.graph6, before.status, after.status))
        self.log("{} added, {} removed, {} changed".format(
            len(diff.added), len(diff.removed), len(diff.changed)))
