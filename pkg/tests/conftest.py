from functools import lru_cache
from itertools import product

import pytest

from finspec.ring import FiniteRing
from finspec.theorems import default_corpus, parse_subject


@lru_cache(maxsize=None)
def corpus_subjects():
    return tuple((text, parse_subject(text)) for text in default_corpus())


def corpus_rings(max_size=None):
    return [(t, s) for t, s in corpus_subjects() if isinstance(s, FiniteRing) and (max_size is None or s.size <= max_size)]


def corpus_posets():
    return [(t, s) for t, s in corpus_subjects() if not isinstance(s, FiniteRing)]


def brute_pointwise_inverses(r, a):
    """All b with a = a^2 b and b = b^2 a, by exhaustive scan."""
    a2 = r.mul[a, a]
    return [b for b in r.elements if r.mul[a2, b] == a and r.mul[r.mul[b, b], a] == b]


def brute_is_unit(r, a):
    return any(r.mul[a, b] == r.one for b in r.elements)


def brute_homs(a, b):
    """All unital ring maps a -> b by scanning every function (tiny rings only)."""
    out = []
    for f in product(range(b.size), repeat=a.size):
        if f[a.zero] != b.zero or f[a.one] != b.one:
            continue
        if all(
            f[a.add[x, y]] == b.add[f[x], f[y]] and f[a.mul[x, y]] == b.mul[f[x], f[y]]
            for x in a.elements
            for y in a.elements
        ):
            out.append(f)
    return out


@pytest.fixture
def rings_small():
    return corpus_rings(max_size=16)
