from django.db import models
from django.utils import timezone

from .records import NOT_OCCURS, OCCURS, UNKNOWN

STATUS_CHOICES = (
    (OCCURS, 'Occurs'),
    (NOT_OCCURS, 'Does not occur'),
    (UNKNOWN, 'Unknown'),
)


class ClassificationRunQuerySet(models.QuerySet):

    def for_order(self, order):
        return self.filter(order=order).order_by('-started')


class ClassificationRun(models.Model):
    """One ``classify`` invocation."""
    objects = ClassificationRunQuerySet.as_manager()

    order = models.PositiveSmallIntegerField()
    strict = models.BooleanField(default=False)
    started = models.DateTimeField(default=timezone.now)
    finished = models.DateTimeField(blank=True, null=True)
    seeds = models.TextField(
        blank=True,
        help_text="Knowledge base files, recipes and catalog the run used.")
    occurs_count = models.PositiveIntegerField(default=0)
    not_occurs_count = models.PositiveIntegerField(default=0)
    unknown_count = models.PositiveIntegerField(default=0)

    @classmethod
    def from_report(cls, report, seeds='', started=None):
        """Persist every record of ``report`` under a new run."""
        tallies = report.tallies(connected=True)
        run = cls.objects.create(
            order=report.order, strict=report.strict,
            started=started or timezone.now(), finished=timezone.now(),
            seeds=seeds,
            occurs_count=tallies.get(OCCURS, 0),
            not_occurs_count=tallies.get(NOT_OCCURS, 0),
            unknown_count=tallies.get(UNKNOWN, 0))
        Classification.objects.bulk_create(
            Classification.from_graph_record(run, record)
            for record in report)
        return run

    def __str__(self):
        return "Order {} run of {:%Y-%m-%d %H:%M}".format(self.order,
                                                         self.started)

    class Meta:
        db_table = 'classification_run'


class Classification(models.Model):
    run = models.ForeignKey(ClassificationRun, on_delete=models.CASCADE,
                            related_name='classifications')
    graph6 = models.CharField(max_length=32)
    key = models.CharField("Canonical key", max_length=128, db_index=True)
    order = models.PositiveSmallIntegerField()
    signature_a = models.PositiveSmallIntegerField(blank=True, null=True)
    signature_b = models.PositiveSmallIntegerField(blank=True, null=True)
    diameter = models.PositiveSmallIntegerField(
        blank=True, null=True, help_text="Empty when disconnected.")
    connected = models.BooleanField()
    status = models.CharField(max_length=8, choices=STATUS_CHOICES,
                              db_index=True)
    reason = models.CharField(max_length=16, blank=True, db_index=True)
    provenance = models.TextField(blank=True)

    @classmethod
    def from_graph_record(cls, run, record):
        sig = record.signature
        return cls(run=run, graph6=record.graph6, key=record.key.hex(),
                   order=record.order,
                   signature_a=sig.a if sig else None,
                   signature_b=sig.b if sig else None,
                   diameter=record.diameter, connected=record.connected,
                   status=record.status, reason=record.reason or '',
                   provenance=record.provenance)

    @property
    def signature(self):
        if self.signature_a is None:
            return ''
        return "({},{})".format(self.signature_a, self.signature_b)

    def to_line(self):
        line = "{} {} {}".format(self.graph6, self.status,
                                 self.reason or '-')
        if self.provenance:
            line += " " + self.provenance
        return line

    def __str__(self):
        return "{} {}".format(self.graph6, self.status)

    class Meta:
        db_table = 'classification'
        unique_together = (('run', 'key'),)
        ordering = ('order', 'graph6')
