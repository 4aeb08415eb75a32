import os
import tempfile
from io import StringIO

from django.contrib.auth.models import User
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from core.knowledge import kb_load, kb_seed_builtin
from core.models import Classification, ClassificationRun
from core.pipeline import classify_order
from core.records import NOT_OCCURS, OCCURS, UNKNOWN


def run_command(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class TempDirTestCase(TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path


class ClassificationRunTest(TestCase):

    @classmethod
    def setUpTestData(cls):
        cls.report = classify_order(5, kb_seed_builtin())
        cls.saved_run = ClassificationRun.from_report(cls.report,
                                                      seeds='builtin')

    def test_counts(self):
        tallies = self.report.tallies()
        self.assertEqual(self.saved_run.occurs_count, tallies[OCCURS])
        self.assertEqual(self.saved_run.not_occurs_count, tallies[NOT_OCCURS])
        self.assertEqual(self.saved_run.unknown_count, tallies[UNKNOWN])
        self.assertEqual(self.saved_run.classifications.count(), 34)

    def test_rows(self):
        k5 = self.saved_run.classifications.get(graph6='D~{')
        self.assertEqual(k5.status, OCCURS)
        self.assertEqual(k5.signature, '(4,1)')
        self.assertTrue(k5.to_line().startswith('D~{ OCCURS JOIN join '))
        disconnected = self.saved_run.classifications.filter(
            connected=False)
        self.assertTrue(all(c.diameter is None for c in disconnected))

    def test_for_order(self):
        later = ClassificationRun.from_report(self.report)
        self.assertEqual(list(ClassificationRun.objects.for_order(5)),
                         [later, self.saved_run])
        self.assertFalse(ClassificationRun.objects.for_order(8).exists())
        self.assertEqual(Classification.objects.filter(run=later).count(), 34)


class EnumerateCommandTest(TempDirTestCase):

    def test_counts(self):
        path = os.path.join(self.tmp, 'order5.g6')
        out = run_command('enumerate', order=5, graph6_out=path)
        self.assertIn('Order 5: 34 graphs, 21 connected, 13 disconnected', out)
        with open(path, encoding='utf-8') as f:
            self.assertEqual(len(f.read().split()), 34)

    def test_connected_only(self):
        out = run_command('enumerate', order=4, connected_only=True)
        self.assertIn('Order 4: 6 graphs, 6 connected', out)

    def test_order_limit(self):
        with self.assertRaises(CommandError):
            run_command('enumerate', order=11)


class ClassifyCommandTest(TempDirTestCase):

    def test_classify_and_save(self):
        out = run_command('classify', order=5, recipes='', out=self.tmp,
                          save=True, explain=['D~{'], format=['txt', 'csv'])
        self.assertIn('Saved run', out)
        self.assertIn('D~{ OCCURS JOIN', out)
        for name in ('survivors.txt', 'tallies.txt', 'survivors.csv',
                     'order5.txt'):
            self.assertTrue(os.path.exists(os.path.join(self.tmp, name)))
        run = ClassificationRun.objects.get()
        self.assertEqual(run.order, 5)
        self.assertIn('builtin=True', run.seeds)
        self.assertLess(run.started, run.finished)

        exported = os.path.join(self.tmp, 'export.txt')
        run_command('kb', 'export', run=run.pk, out=exported)
        self.assertEqual(len(kb_load(exported)), 34)

    def test_filter_stage(self):
        out = run_command('classify', order=4, stage='filter')
        self.assertIn('C~ PASS (3,1)', out)
        self.assertIn('graphs pass the filter', out)

    def test_soundness_alarm(self):
        path = self.write('bad.txt', 'Dhc OCCURS SEED a five-cycle\n')
        with self.assertRaises(CommandError) as ctx:
            run_command('classify', order=5, kb=[path], recipes='',
                        out=self.tmp)
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_kb_file(self):
        path = self.write('bad.txt', 'Dhc MAYBE SEED\n')
        with self.assertRaises(CommandError) as ctx:
            run_command('classify', order=5, kb=[path], out=self.tmp)
        self.assertIn('line 1', str(ctx.exception))


class KBCommandTest(TempDirTestCase):

    def test_validate(self):
        good = self.write('good.txt', 'C~ OCCURS SEED K_4\n')
        out = run_command('kb', 'validate', good)
        self.assertIn('1 records, 0 problems', out)
        bad = self.write('bad.txt', 'Dhc OCCURS SEED a five-cycle\n')
        with self.assertRaises(CommandError):
            run_command('kb', 'validate', bad)

    def test_export_merges(self):
        a = self.write('a.txt', 'C~ OCCURS SEED\n')
        b = self.write('b.txt', 'Bw OCCURS SEED\nC~ OCCURS SEED again\n')
        out = run_command('kb', 'export', a, b)
        self.assertEqual(out.split('\n')[:2], ['Bw OCCURS SEED',
                                               'C~ OCCURS SEED'])

    def test_diff(self):
        old = self.write('old.txt', 'C~ UNKNOWN -\nBw OCCURS SEED\n')
        new = self.write('new.txt', 'C~ OCCURS SEED\nA_ OCCURS SEED\n')
        out = run_command('kb', 'diff', old, new)
        self.assertIn('+ A_ OCCURS SEED', out)
        self.assertIn('- Bw OCCURS SEED', out)
        self.assertIn('~ C~ UNKNOWN -> OCCURS', out)
        self.assertIn('1 added, 1 removed, 1 changed', out)

    def test_missing_run(self):
        with self.assertRaises(CommandError):
            run_command('kb', 'export', run=999)


class VerifyConstructionsCommandTest(TempDirTestCase):

    def test_shipped_recipes(self):
        out = run_command('verify_constructions', check_primes=False)
        for name in ('galois491', 'galois143', 'skew103', 'skew23',
                     'skew2r17', 'skew2r5'):
            self.assertIn('{} ('.format(name), out)
        self.assertNotIn('FAIL', out)
        self.assertIn('graph6: EkvW on 6 vertices', out)
        self.assertIn('general formula at q = 3 differs', out)
        self.assertIn('6 recipes, 0 failed', out)

    def test_failing_recipe(self):
        path = self.write('recipes.txt', 'galois bad m=11 23 88\n')
        with self.assertRaises(CommandError):
            out = StringIO()
            call_command('verify_constructions', recipes=path,
                         check_primes=True, stdout=out)
        self.assertIn('bad (galois): FAIL', out.getvalue())


class AdminTest(TestCase):

    @classmethod
    def setUpTestData(cls):
        cls.saved_run = ClassificationRun.from_report(
            classify_order(4, kb_seed_builtin()))
        cls.user = User.objects.create_superuser('admin', 'a@example.com',
                                                 'password')

    def setUp(self):
        self.client.force_login(self.user)

    def test_signature_filter(self):
        response = self.client.get('/admin/core/classification/',
                                   {'signature': '3,1'})
        self.assertEqual(response.status_code, 200)
        self.assertContains(response, 'C~')
        rows = response.context['cl'].result_list
        self.assertEqual({row.signature for row in rows}, {'(3,1)'})

    def test_run_page(self):
        response = self.client.get(
            '/admin/core/classificationrun/{}/change/'.format(
                self.saved_run.pk))
        self.assertEqual(response.status_code, 200)
