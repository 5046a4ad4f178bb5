"""Shared generators for the seeded random sweeps used across the test suite."""

import random

from alphabicyclic.bicyclic import Element, parse_element
from alphabicyclic.ordinal import OMEGA, nat
from alphabicyclic.topology import MONOID


def make_rng(seed=0xA1FA):
    return random.Random(seed)


def random_small_ordinal(rng, exp_max=9, coeff_max=9, max_terms=3):
    """A random ordinal below w^w (finite exponents only)."""
    count = rng.randint(0, max_terms)
    exps = sorted(rng.sample(range(exp_max + 1), count), reverse=True)
    return tuple((nat(e), rng.randint(1, coeff_max)) for e in exps)


def random_carrier_ordinal(rng, head_max=5, exp_max=6, coeff_max=5, max_tail_terms=2):
    """A random ordinal below w^(w+1): an optional w^w head plus a finite tail."""
    terms = []
    head = rng.randint(0, head_max)
    if head:
        terms.append((OMEGA, head))
    count = rng.randint(0, max_tail_terms)
    for e in sorted(rng.sample(range(exp_max + 1), count), reverse=True):
        terms.append((nat(e), rng.randint(1, coeff_max)))
    return tuple(terms)


def random_element(rng, **kwargs):
    return Element(random_carrier_ordinal(rng, **kwargs), random_carrier_ordinal(rng, **kwargs), MONOID)


def random_center(rng, coeff_max=5):
    n = rng.randint(1, coeff_max)
    m = rng.randint(1, coeff_max)
    return Element(((OMEGA, n),), ((OMEGA, m),), MONOID)


def el(text):
    """Parse an element in the monoid with parameter w + 1."""
    return parse_element(text, MONOID)
