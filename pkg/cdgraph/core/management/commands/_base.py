from django.core.management.base import BaseCommand
from django.utils import timezone


class TimedCommand(BaseCommand):
    start_time = None

    def log(self, message):
        if self.start_time:
            seconds = (timezone.now() - self.start_time).total_seconds()
        else:
            seconds = 0.0
        self.stdout.write("[{:7.2f}] {}".format(seconds, message))

    def execute(self, *args, **options):
        self.start_time = timezone.now()
        return super().execute(*args, **options)
