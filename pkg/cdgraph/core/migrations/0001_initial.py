import django.db.models.deletion
import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ClassificationRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('order', models.PositiveSmallIntegerField()),
                ('strict', models.BooleanField(default=False)),
                ('started', models.DateTimeField(default=django.utils.timezone.now)),
                ('finished', models.DateTimeField(blank=True, null=True)),
                ('seeds', models.TextField(blank=True, help_text='Knowledge base files, recipes and catalog the run used.')),
                ('occurs_count', models.PositiveIntegerField(default=0)),
                ('not_occurs_count', models.PositiveIntegerField(default=0)),
                ('unknown_count', models.PositiveIntegerField(default=0)),
            ],
            options={
                'db_table': 'classification_run',
            },
        ),
        migrations.CreateModel(
            name='Classification',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('graph6', models.CharField(max_length=32)),
                ('key', models.CharField(db_index=True, max_length=128, verbose_name='Canonical key')),
                ('order', models.PositiveSmallIntegerField()),
                ('signature_a', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('signature_b', models.PositiveSmallIntegerField(blank=True, null=True)),
                ('diameter', models.PositiveSmallIntegerField(blank=True, help_text='Empty when disconnected.', null=True)),
                ('connected', models.BooleanField()),
                ('status', models.CharField(choices=[('OCCURS', 'Occurs'), ('NOT', 'Does not occur'), ('UNKNOWN', 'Unknown')], db_index=True, max_length=8)),
                ('reason', models.CharField(blank=True, db_index=True, max_length=16)),
                ('provenance', models.TextField(blank=True)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='classifications', to='core.classificationrun')),
            ],
            options={
                'db_table': 'classification',
                'ordering': ('order', 'graph6'),
                'unique_together': {('run', 'key')},
            },
        ),
    ]
