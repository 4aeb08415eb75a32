from django.core.management.base import CommandError

from core.conf import settings
from core.enumeration import EnumerationError, enumerate_graphs
from core.graph import encode_graph6

from ._base import TimedCommand


class Command(TimedCommand):
    help = "Enumerate one graph per isomorphism class of a given order."

    def add_arguments(self, parser):
        parser.add_argument('--order', type=int, default=settings.CDG_ORDER,
                            help='Number of vertices (defaults to '
                                 'CDG_ORDER)')
        parser.add_argument('--connected-only', default=False,
                            action='store_true',
                            help='Skip disconnected graphs')
        parser.add_argument('--graph6-out', type=str,
                            help='Write every graph as a graph6 line to '
                                 'this file')

    def handle(self, *args, **options):
        order = options['order']
        if order > settings.CDG_MAX_ORDER:
            raise CommandError("Order {} exceeds CDG_MAX_ORDER = {}".format(
                order, settings.CDG_MAX_ORDER))
        try:
            stream = enumerate_graphs(order, options['connected_only'])
        except EnumerationError as e:
            raise CommandError(str(e))

        out = None
        if options['graph6_out']:
            out = open(options['graph6_out'], 'w', encoding='utf-8')
        total = connected = 0
        try:
            for g in stream:
                total += 1
                connected += g.is_connected()
                if out:
                    out.write(encode_graph6(g) + "\n")
        finally:
            if out:
                out.close()

        self.log("Order {}: {} graphs, {} connected, {} disconnected".format(
            order, total, connected, total - connected))
