"""
Occurrence certificates.

A certificate is either a degree set whose prime graph is the graph in
question, built from a Galois-field or skew-ring family and checked against
big-integer factorizations, or a join of two graphs already known to occur.

Degrees are kept factored: a degree is a map from prime labels to exponents,
and the exponents never have to be multiplied out because only which primes
share a degree decides the graph.
"""
import itertools
import logging
import operator
from collections import defaultdict, namedtuple
from functools import reduce

import gmpy2
from gmpy2 import mpz

from .eliminators import gamma_family_generate
from .graph import Graph, canonical_key, decode_graph6, encode_graph6, join
from .records import OCCURS, ClassificationRecord

logger = logging.getLogger(__name__)

DEFAULT_ROUNDS = 40

DUPLICATE = 'duplicate factor'
COMPOSITE = 'composite factor'
PRODUCT_MISMATCH = 'product mismatch'

JOIN = 'JOIN'
GAMMA_T1 = 'GAMMA-T1'
RECIPE = 'RECIPE'

RECIPE_KINDS = ('galois', 'dugan3', 'duganQ')


class ConstructionError(ValueError):
    pass


class RecipeError(ConstructionError):

    def __init__(self, message, lineno=None, path=None):
        where = [str(part) for part in (path, lineno) if part is not None]
        if where:
            message = "{}: {}".format(":".join(where), message)
        super().__init__(message)
        self.lineno = lineno
        self.path = path


class PrimeLabel(namedtuple('PrimeLabel', 'name value')):
    __slots__ = ()

    def __new__(cls, name, value):
        value = int(value)
        if value < 2:
            raise ConstructionError(
                "Label {} has value {}; prime labels are >= 2".format(
                    name, value))
        return super().__new__(cls, str(name), value)

    @classmethod
    def literal(cls, value):
        """A label named by its own decimal value."""
        return cls(str(int(value)), value)

    def __str__(self):
        return self.name


def as_label(item):
    if isinstance(item, PrimeLabel):
        return item
    return PrimeLabel.literal(item)


def _check_distinct_values(labels):
    by_value = {}
    for label in labels:
        other = by_value.setdefault(label.value, label)
        if other != label:
            raise ConstructionError(
                "Labels {} and {} share the value {}".format(
                    other, label, label.value))


class FactoredInteger:
    """An integer held as prime labels with positive exponents."""

    __slots__ = ('_factors',)

    def __init__(self, factors=None):
        items = {}
        for label, exponent in dict(factors or {}).items():
            if exponent < 0:
                raise ConstructionError(
                    "Negative exponent {} on {}".format(exponent, label))
            if exponent:
                items[label] = exponent
        _check_distinct_values(items)
        self._factors = tuple(sorted(
            items.items(), key=lambda item: (item[0].value, item[0].name)))

    @classmethod
    def of(cls, *labels):
        counts = defaultdict(int)
        for label in labels:
            counts[label] += 1
        return cls(counts)

    @property
    def factors(self):
        return dict(self._factors)

    def labels(self):
        return frozenset(label for label, _ in self._factors)

    def exponent(self, label):
        return self.factors.get(label, 0)

    def value(self):
        return reduce(operator.mul,
                      (mpz(label.value) ** exponent
                       for label, exponent in self._factors), mpz(1))

    def __mul__(self, other):
        merged = self.factors
        for label, exponent in other._factors:
            merged[label] = merged.get(label, 0) + exponent
        return FactoredInteger(merged)

    def __pow__(self, k):
        return FactoredInteger({label: exponent * k
                                for label, exponent in self._factors})

    def __truediv__(self, other):
        """Exact division; raises when ``other`` does not divide."""
        remaining = self.factors
        missing = []
        for label, exponent in other._factors:
            if remaining.get(label, 0) < exponent:
                missing.append(label.name)
                continue
            remaining[label] -= exponent
        if missing:
            raise ConstructionError("{} does not divide {}: missing {}".format(
                other, self, ", ".join(missing)))
        return FactoredInteger(remaining)

    def __bool__(self):
        return bool(self._factors)

    def __eq__(self, other):
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        return hash(self._factors)

    def __str__(self):
        if not self._factors:
            return '1'
        return '*'.join(label.name if exponent == 1
                        else "{}^{}".format(label.name, exponent)
                        for label, exponent in self._factors)

    def __repr__(self):
        return "FactoredInteger({})".format(self)


ONE = FactoredInteger()


class DegreeSet:
    """The set of character degrees; always contains 1."""

    __slots__ = ('_degrees',)

    def __init__(self, degrees=()):
        degrees = frozenset(degrees) | {ONE}
        _check_distinct_values(set().union(*(d.labels() for d in degrees)))
        self._degrees = degrees

    @property
    def degrees(self):
        return self._degrees

    def labels(self):
        return frozenset().union(*(d.labels() for d in self._degrees))

    def __len__(self):
        return len(self._degrees)

    def __iter__(self):
        return iter(sorted(self._degrees,
                           key=lambda d: (len(d.factors), str(d))))

    def __contains__(self, degree):
        return degree in self._degrees

    def __eq__(self, other):
        if not isinstance(other, DegreeSet):
            return NotImplemented
        return self._degrees == other._degrees

    def __hash__(self):
        return hash(self._degrees)

    def __str__(self):
        return "{" + ", ".join(str(d) for d in self) + "}"


class RenderedGraph(namedtuple('RenderedGraph', 'graph labels')):
    __slots__ = ()

    def label_map(self):
        return {v: label.name for v, label in enumerate(self.labels)}


def degree_graph(degree_set):
    """Vertices are the prime labels, ordered by value; two labels are
    adjacent when some degree contains both."""
    labels = sorted(degree_set.labels(), key=lambda label: label.value)
    index = {label: v for v, label in enumerate(labels)}
    edges = set()
    for degree in degree_set.degrees:
        members = sorted(index[label] for label in degree.labels())
        edges.update(itertools.combinations(members, 2))
    return RenderedGraph(Graph.from_edges(len(labels), sorted(edges)),
                         tuple(labels))


class ProductCheck(namedtuple('ProductCheck', 'ok problem label')):
    __slots__ = ()

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return 'ok'
        if self.label is None:
            return self.problem
        return "{} {}".format(self.problem, self.label)


PRODUCT_OK = ProductCheck(True, None, None)


def verify_product(target, primes, rounds=DEFAULT_ROUNDS,
                   check_primality=True):
    primes = [as_label(p) for p in primes]
    seen = set()
    for label in primes:
        if label.value in seen:
            return ProductCheck(False, DUPLICATE, label)
        seen.add(label.value)
    if check_primality:
        for label in primes:
            if not gmpy2.is_prime(label.value, rounds):
                return ProductCheck(False, COMPOSITE, label)
    product = reduce(operator.mul, (mpz(label.value) for label in primes),
                     mpz(1))
    if product != mpz(target):
        return ProductCheck(False, PRODUCT_MISMATCH, None)
    return PRODUCT_OK


def mersenne(m):
    return mpz(2) ** m - 1


def factorize_small(n):
    """Trial-division factorization for recipe parameters."""
    if n < 1:
        raise ValueError("Cannot factor {}".format(n))
    found = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            found[d] = found.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        found[n] = found.get(n, 0) + 1
    return found


def divisors(n):
    result = [1]
    for prime, exponent in factorize_small(n).items():
        result = [d * prime ** e for d in result for e in range(exponent + 1)]
    return sorted(result)


def mobius(n):
    factors = factorize_small(n)
    if any(exponent > 1 for exponent in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def cyclotomic_value(n, x):
    if n < 1 or x < 2:
        raise ValueError(
            "cyclotomic_value needs n >= 1 and x >= 2, got ({}, {})".format(
                n, x))
    x = mpz(x)
    numerator = denominator = mpz(1)
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            numerator *= x ** d - 1
        elif mu == -1:
            denominator *= x ** d - 1
    quotient, remainder = gmpy2.f_divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            "Inexact division evaluating Phi_{}({})".format(n, x))
    return quotient


def coprimality_check(p, q, r):
    """True when Phi_q(p), Phi_r(p) and Phi_qr(p) are pairwise coprime."""
    for name, value in (('p', p), ('q', q), ('r', r)):
        if not gmpy2.is_prime(value):
            raise ConstructionError("{} = {} is not prime".format(name, value))
    if len({p, q, r}) != 3 or not q < r:
        raise ConstructionError(
            "Need distinct primes with q < r, got ({}, {}, {})".format(
                p, q, r))
    values = [cyclotomic_value(q, p), cyclotomic_value(r, p),
              cyclotomic_value(q * r, p)]
    return all(gmpy2.gcd(a, b) == 1
               for a, b in itertools.combinations(values, 2))


def _prime_power_labels(n):
    return {prime: PrimeLabel.literal(prime)
            for prime in factorize_small(n)}


def _as_factored(n, labels):
    return FactoredInteger({labels[prime]: exponent
                            for prime, exponent in factorize_small(n).items()})


def galois_cd(m, factors, rounds=DEFAULT_ROUNDS, check_primality=True):
    """Degrees of the semidirect product of F_{2^m} with its multiplicative
    group and Galois group: 1, the divisors of m and 2^m - 1."""
    if m < 2:
        raise ConstructionError("m must be at least 2, got {}".format(m))
    factors = [as_label(f) for f in factors]
    check = verify_product(mersenne(m), factors, rounds, check_primality)
    if not check:
        raise ConstructionError("2^{} - 1: {}".format(m, check))
    if sum(factorize_small(m).values()) > 2:
        logger.warning("galois_cd(%d): the divisor rule is untested when m "
                       "has more than two prime factors", m)
    labels = _prime_power_labels(m)
    degrees = [_as_factored(d, labels) for d in divisors(m) if d > 1]
    degrees.append(FactoredInteger.of(*factors))
    return DegreeSet(degrees)


def _dugan_checks(p, q, r, factors, rounds, check_primality):
    if q < 3 or q % 2 == 0 or r % 2 == 0:
        raise ConstructionError(
            "q and r must be odd primes with q >= 3, got q={}, r={}".format(
                q, r))
    if not coprimality_check(p, q, r):
        raise ConstructionError(
            "Phi_{0}({1}), Phi_{2}({1}) and Phi_{3}({1}) are not pairwise "
            "coprime".format(q, p, r, q * r))
    for label in factors:
        if label.value in (p, q, r):
            raise ConstructionError(
                "Factor {} coincides with one of p, q, r".format(label))
    quotient = (mpz(p) ** (q * r) - 1) // (p - 1)
    check = verify_product(quotient, factors, rounds, check_primality)
    if not check:
        raise ConstructionError(
            "({0}^{1} - 1)/({0} - 1): {2}".format(p, q * r, check))
    phi = cyclotomic_value(q, p)
    dividing = [label for label in factors if phi % label.value == 0]
    product = reduce(operator.mul, (mpz(label.value) for label in dividing),
                     mpz(1))
    if product != phi:
        raise ConstructionError(
            "Phi_{}({}) = {} is not a product of the given factors; "
            "missing {}".format(q, p, phi, phi // product))
    return dividing


def _dugan_parts(p, q, r, factors, rounds, check_primality):
    factors = [as_label(f) for f in factors]
    dividing = _dugan_checks(p, q, r, factors, rounds, check_primality)
    base = PrimeLabel.literal(p)
    whole = FactoredInteger.of(*factors)
    reduced = whole / FactoredInteger.of(*dividing)

    def power(e):
        return FactoredInteger({base: e})

    return (power, FactoredInteger.of(PrimeLabel.literal(q)),
            FactoredInteger.of(PrimeLabel.literal(r)), whole, reduced)


def dugan_cd_q3(p, r, factors, rounds=DEFAULT_ROUNDS, check_primality=True):
    power, three, rr, whole, reduced = _dugan_parts(
        p, 3, r, factors, rounds, check_primality)
    return DegreeSet([
        ONE, three, rr, three * rr,
        whole,
        power((3 * r - 1) // 2) * whole,
        three * power(3 * r) * reduced,
        power(3 * r - 3) * reduced,
        three * power(3 * r - 3) * reduced,
        power(3 * r - 3) * whole,
        power(3 * r - 2) * whole,
    ])


def dugan_cd_general(p, q, r, factors, rounds=DEFAULT_ROUNDS,
                     check_primality=True):
    power, qq, rr, whole, reduced = _dugan_parts(
        p, q, r, factors, rounds, check_primality)
    half = (q - 1) // 2
    degrees = [
        ONE, qq, rr, qq * rr,
        qq * power(half * q * r) * reduced,
        power(half * (q * r - q)) * reduced,
        qq * power(half * (q * r - q)) * reduced,
    ]
    degrees += [power(i * (q * r - 1) // 2) * whole for i in range(q - 1)]
    degrees += [power(half * (q * r - q + j - 1)) * whole for j in range(q)]
    return DegreeSet(degrees)


class DuganComparison(namedtuple('DuganComparison',
                                 'q3_only general_only same_graph')):
    __slots__ = ()

    @property
    def identical(self):
        return not self.q3_only and not self.general_only


def dugan_comparison(p, r, factors, rounds=DEFAULT_ROUNDS,
                     check_primality=True):
    """Set differences between the q = 3 formula and the general formula
    evaluated at q = 3."""
    special = dugan_cd_q3(p, r, factors, rounds, check_primality)
    general = dugan_cd_general(p, 3, r, factors, rounds, check_primality)
    same = (canonical_key(degree_graph(special).graph)
            == canonical_key(degree_graph(general).graph))
    return DuganComparison(
        frozenset(special.degrees - general.degrees),
        frozenset(general.degrees - special.degrees), same)


def galois_group_order(m, factors):
    labels = _prime_power_labels(m)
    two = labels.get(2, PrimeLabel.literal(2))
    return (FactoredInteger({two: m})
            * FactoredInteger.of(*(as_label(f) for f in factors))
            * _as_factored(m, labels))


def dugan_group_order(p, q, r, factors):
    return (FactoredInteger.of(PrimeLabel.literal(q), PrimeLabel.literal(r))
            * FactoredInteger({PrimeLabel.literal(p): q * q * r})
            * FactoredInteger.of(*(as_label(f) for f in factors)))


class Construction(namedtuple('Construction',
                              'recipe degree_set rendered')):
    __slots__ = ()

    @property
    def graph(self):
        return self.rendered.graph

    @property
    def key(self):
        return canonical_key(self.rendered.graph)

    @property
    def order(self):
        return self.rendered.graph.n

    def group_order(self):
        return self.recipe.group_order()

    def record(self):
        return ClassificationRecord.from_graph(
            self.graph, OCCURS, RECIPE, "recipe {} ({})".format(
                self.recipe.name, self.recipe.kind))


class Recipe(namedtuple('Recipe', 'kind name params factors lineno')):
    """One line of a recipes file::

        galois galois491 m=491 983 7707719 ...
        dugan3 skew2r17 p=2 r=17 s:7 t:103 u:2143 v:11119 w:131071
        duganQ skew103 p=103 q=11 r=19 s:199 ...
    """
    __slots__ = ()

    REQUIRED = {'galois': ('m',), 'dugan3': ('p', 'r'),
                'duganQ': ('p', 'q', 'r')}

    def degree_set(self, rounds=DEFAULT_ROUNDS, check_primality=True):
        params = self.params
        if self.kind == 'galois':
            return galois_cd(params['m'], self.factors, rounds,
                             check_primality)
        if self.kind == 'dugan3':
            return dugan_cd_q3(params['p'], params['r'], self.factors,
                               rounds, check_primality)
        return dugan_cd_general(params['p'], params['q'], params['r'],
                                self.factors, rounds, check_primality)

    def build(self, rounds=DEFAULT_ROUNDS, check_primality=True):
        degree_set = self.degree_set(rounds, check_primality)
        return Construction(self, degree_set, degree_graph(degree_set))

    def group_order(self):
        params = self.params
        if self.kind == 'galois':
            return galois_group_order(params['m'], self.factors)
        q = params.get('q', 3)
        return dugan_group_order(params['p'], q, params['r'], self.factors)


def parse_recipe(line, lineno=None, path=None):
    text = line.split('#', 1)[0].strip()
    if not text:
        return None
    fields = text.split()
    if len(fields) < 3:
        raise RecipeError("Expected '<kind> <name> parameters... factors...'",
                          lineno, path)
    kind, name = fields[:2]
    if kind not in RECIPE_KINDS:
        raise RecipeError(
            "Unknown recipe kind {!r}; expected one of {}".format(
                kind, ", ".join(RECIPE_KINDS)), lineno, path)
    params = {}
    factors = []
    try:
        for token in fields[2:]:
            if '=' in token:
                key, value = token.split('=', 1)
                params[key] = int(value)
            elif ':' in token:
                label, value = token.split(':', 1)
                factors.append(PrimeLabel(label, int(value)))
            else:
                factors.append(PrimeLabel.literal(int(token)))
    except (ValueError, ConstructionError) as e:
        raise RecipeError("Bad token in recipe {}: {}".format(name, e),
                          lineno, path)
    missing = [key for key in Recipe.REQUIRED[kind] if key not in params]
    if missing:
        raise RecipeError("Recipe {} lacks {}".format(
            name, ", ".join(missing)), lineno, path)
    if not factors:
        raise RecipeError("Recipe {} lists no factors".format(name),
                          lineno, path)
    return Recipe(kind, name, params, tuple(factors), lineno)


def parse_recipes(lines, path=None):
    recipes = []
    for lineno, line in enumerate(lines, start=1):
        recipe = parse_recipe(line, lineno, path)
        if recipe is not None:
            recipes.append(recipe)
    names = [recipe.name for recipe in recipes]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise RecipeError("Duplicate recipe names: {}".format(
            ", ".join(duplicates)), path=path)
    return recipes


def load_recipes(path):
    with open(path, encoding='utf-8') as f:
        return parse_recipes(f, path=path)


def build_recipes(recipes, rounds=DEFAULT_ROUNDS, check_primality=True):
    constructions = []
    for recipe in recipes:
        construction = recipe.build(rounds, check_primality)
        logger.info("Recipe %s renders %s on %d vertices", recipe.name,
                    encode_graph6(construction.graph), construction.order)
        constructions.append(construction)
    return constructions


def join_provenance(left, right):
    return "join {} x {}".format(left.graph6, right.graph6)


def gamma_provenance(k):
    return "Gamma({}, 1)".format(k)


def join_closure(kb, n, extra=()):
    """
    Occurs records for every join of two occurring graphs whose orders sum
    to ``n``, plus Gamma(n - 1, 1). ``kb`` is any iterable of records;
    ``extra`` adds records (recipe renderings) to it for this call only.
    """
    occurring = {}
    for record in itertools.chain(kb, extra):
        if record.status == OCCURS and 0 < record.order < n:
            occurring.setdefault(record.key, record)
    by_order = defaultdict(list)
    for record in sorted(occurring.values(),
                         key=lambda r: (r.order, r.graph6)):
        by_order[record.order].append(record)

    closure = {}
    for a in range(1, n // 2 + 1):
        b = n - a
        for i, left in enumerate(by_order[a]):
            rights = by_order[b][i:] if a == b else by_order[b]
            for right in rights:
                g = join(left.graph(), right.graph())
                key = canonical_key(g)
                if key not in closure:
                    closure[key] = ClassificationRecord(
                        key, encode_graph6(g), n, OCCURS, JOIN,
                        join_provenance(left, right))
    if n >= 2:
        g = gamma_family_generate(n - 1, 1)
        key = canonical_key(g)
        closure.setdefault(key, ClassificationRecord(
            key, encode_graph6(g), n, OCCURS, GAMMA_T1,
            gamma_provenance(n - 1)))
    logger.debug("Join closure at order %d: %d graphs from %d factors",
                 n, len(closure), len(occurring))
    return closure


def certificate_graph(record):
    """Rebuild the graph a JOIN or GAMMA-T1 record certifies."""
    words = record.provenance.split()
    if record.reason == JOIN and len(words) == 4 and words[0] == 'join':
        return join(decode_graph6(words[1]), decode_graph6(words[3]))
    if record.reason == GAMMA_T1 and record.provenance.startswith('Gamma('):
        k = int(record.provenance[len('Gamma('):].split(',')[0])
        return gamma_family_generate(k, 1)
    raise ConstructionError("No rebuildable certificate in {!r}".format(
        record.provenance))


def verify_certificate(record):
    return canonical_key(certificate_graph(record)) == record.key
