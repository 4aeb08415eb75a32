from django.core.management.base import CommandError

from core.conditions import signature
from core.conf import settings
from core.constructions import (ConstructionError, dugan_comparison,
                                load_recipes)
from core.diameter3 import diameter3_test
from core.graph import diameter, encode_graph6

from ._base import TimedCommand


class Command(TimedCommand):
    help = "Check every construction recipe and show the graph it renders."

    def add_arguments(self, parser):
        parser.add_argument('--recipes', type=str,
                            default=settings.CDG_RECIPES)
        parser.add_argument('--check-primes', dest='check_primes',
                            action='store_true',
                            default=settings.CDG_VERIFY_PRIMES,
                            help='Run Miller-Rabin on every factor')
        parser.add_argument('--no-check-primes', dest='check_primes',
                            action='store_false')
        parser.add_argument('--rounds', type=int,
                            default=settings.CDG_MILLER_RABIN_ROUNDS)

    def describe(self, construction):
        g = construction.graph
        names = " ".join(label.name for label in construction.rendered.labels)
        lines = ["  degrees: {}".format(construction.degree_set),
                 "  graph6: {} on {} vertices ({})".format(
                     encode_graph6(g), g.n, names)]
        if g.is_connected():
            sig = signature(g)
            dia = diameter(g)
            line = "  signature {} diameter {}".format(sig, dia)
            if dia == 3 and sig is not None:
                result = diameter3_test(g)
                line += " rho-tests {}".format(result.reason or 'pass')
            lines.append(line)
        else:
            lines.append("  disconnected")
        lines.append("  group order: {}".format(
            construction.group_order()))
        return lines

    def handle(self, *args, **options):
        try:
            recipes = load_recipes(options['recipes'])
        except (ConstructionError, OSError) as e:
            raise CommandError(str(e))

        failures = 0
        for recipe in recipes:
            try:
                construction = recipe.build(options['rounds'],
                                            options['check_primes'])
            except ConstructionError as e:
                failures += 1
                self.stdout.write("{} ({}): FAIL {}".format(
                    recipe.name, recipe.kind, e))
                continue
            self.stdout.write("{} ({}): ok".format(recipe.name, recipe.kind))
            for line in self.describe(construction):
                self.stdout.write(line)
            if recipe.kind == 'dugan3':
                comparison = dugan_comparison(
                    recipe.params['p'], recipe.params['r'], recipe.factors,
                    options['rounds'], check_primality=False)
                if not comparison.identical:
                    self.stdout.write(
                        "  general formula at q = 3 differs: only q=3 {}; "
                        "only general {}; same graph {}".format(
                            sorted(map(str, comparison.q3_only)),
                            sorted(map(str, comparison.general_only)),
                            comparison.same_graph))

        self.log("{} recipes, {} failed".format(len(recipes), failures))
        if failures:
            raise CommandError("{} recipes failed".format(failures))
