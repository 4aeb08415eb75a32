"""
Structural results that rule a graph out: too many cut vertices, the
regularity theorem, adjacent degree-two vertices, the Gamma(k, t) family and
catalog matches against previously classified graphs.
"""
from collections import namedtuple
from collections.abc import Mapping
from functools import lru_cache

from .conditions import palfy_condition
from .graph import Graph, canonical_key, cut_vertices
from .records import NOT_OCCURS, OCCURS, ClassificationRecord, read_records

CUT2 = 'CUT2'
REG = 'REG'
DEG2 = 'DEG2'
GAMMA = 'GAMMA'
CATALOG = 'CATALOG'


class GammaParameterError(ValueError):
    pass


class CatalogError(ValueError):
    pass


class EliminationVerdict(namedtuple('EliminationVerdict',
                                    'reason provenance')):
    __slots__ = ()

    @property
    def eliminated(self):
        return self.reason is not None


NO_VERDICT = EliminationVerdict(None, '')


def cut_vertex_eliminator(g):
    found = cut_vertices(g)
    if len(found) >= 2:
        return EliminationVerdict(
            CUT2, "cut vertices {}".format(sorted(found)))
    return NO_VERDICT


def regularity_eliminator(g):
    degrees = set(g.degrees())
    if len(degrees) != 1 or g.is_complete():
        return NO_VERDICT
    k = degrees.pop()
    if k == g.n - 2:
        return NO_VERDICT
    return EliminationVerdict(
        REG, "{}-regular on {} vertices; only {}-regular can occur".format(
            k, g.n, g.n - 2))


def degree2_pair_eliminator(g):
    if g.n < 5 or not palfy_condition(g):
        return NO_VERDICT
    degrees = g.degrees()
    for u, v in g.edges():
        if degrees[u] == degrees[v] == 2 and not g.adj[u] & g.adj[v]:
            return EliminationVerdict(
                DEG2, "adjacent degree-two vertices {} and {}".format(u, v))
    return NO_VERDICT


def _check_gamma_parameters(k, t):
    if t < 1 or t > k:
        raise GammaParameterError(
            "Gamma(k, t) needs k >= t >= 1, got ({}, {})".format(k, t))


def gamma_family_generate(k, t):
    """K_k and K_t joined by a matching from every K_t vertex into K_k."""
    _check_gamma_parameters(k, t)
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k + u, k + v) for u in range(t) for v in range(u + 1, t)]
    edges += [(i, k + i) for i in range(t)]
    return Graph.from_edges(k + t, edges)


def gamma_family_status(k, t):
    _check_gamma_parameters(k, t)
    if t == 1 or (k, t) == (2, 2):
        return OCCURS
    return NOT_OCCURS


@lru_cache(maxsize=None)
def _gamma_keys(n):
    return [(canonical_key(gamma_family_generate(n - t, t)), (n - t, t))
            for t in range(1, n // 2 + 1)]


def gamma_family_recognize(g):
    key = canonical_key(g)
    for family_key, params in _gamma_keys(g.n):
        if family_key == key:
            return params
    return None


def gamma_eliminator(g):
    params = gamma_family_recognize(g)
    if params is None or gamma_family_status(*params) != NOT_OCCURS:
        return NO_VERDICT
    return EliminationVerdict(GAMMA, "isomorphic to Gamma({}, {})".format(
        *params))


def index_catalog(entries):
    if isinstance(entries, Mapping):
        return entries
    catalog = {}
    for entry in entries:
        if not isinstance(entry, ClassificationRecord):
            raise CatalogError("Not a classification record: {!r}".format(
                entry))
        known = catalog.get(entry.key)
        if known is not None and known.status != entry.status:
            raise CatalogError(
                "Catalog lists {} as both {} ({}) and {} ({})".format(
                    entry.graph6, known.status, known.provenance,
                    entry.status, entry.provenance))
        catalog.setdefault(entry.key, entry)
    return catalog


def load_catalog(path):
    return index_catalog(read_records(path))


def catalog_eliminator(g, catalog):
    entry = index_catalog(catalog).get(canonical_key(g))
    if entry is None or entry.status != NOT_OCCURS:
        return NO_VERDICT
    return EliminationVerdict(CATALOG, entry.provenance or entry.graph6)


def run_eliminators(g, catalog=()):
    """Every eliminator's verdict, cheapest first, as (name, verdict)."""
    return [
        ('cut_vertex', cut_vertex_eliminator(g)),
        ('regularity', regularity_eliminator(g)),
        ('degree2_pair', degree2_pair_eliminator(g)),
        ('gamma', gamma_eliminator(g)),
        ('catalog', catalog_eliminator(g, catalog)),
    ]
