"""Order isomorphisms between principal upper sets of w^alpha.

Every upper set of an ordinal is principal, so a principal upper set of
w^alpha is an interval [a, w^alpha).  Between two such intervals there is at
most one order isomorphism, namely x |-> b + (x - a), so an isomorphism is
stored as its pair of interval bases.  Under composition of partial maps these
isomorphisms form a monoid, and pairing an isomorphism with its bases is a
bijection onto the ordinal bicyclic monoid with the same parameter.

That bijection is a semigroup isomorphism when composition is read as "apply
the left factor first"; the opposite convention would make it an
anti-isomorphism.  :func:`compose` derives its result from domain reasoning
and :func:`apply`, not from the bicyclic case split, which is what makes it an
independent cross-check of the multiplication.
"""

from dataclasses import dataclass

from .bicyclic import ContextMismatchError, Element, Monoid
from .ordinal import ZERO, add, fmt, subtract

__all__ = [
    "UpperSetIso",
    "apply",
    "compose",
    "identity_iso",
    "preimage",
    "represent",
    "unrepresent",
]


@dataclass(frozen=True)
class UpperSetIso:
    """The unique order isomorphism [source_base, bound) -> [target_base, bound)."""

    source_base: tuple
    target_base: tuple
    monoid: Monoid

    def __post_init__(self):
        bound = self.monoid.bound
        if not (self.source_base < bound and self.target_base < bound):
            raise ValueError("interval bases must lie below the monoid bound")


def identity_iso(monoid):
    return UpperSetIso(ZERO, ZERO, monoid)


def apply(f, x):
    """Image of x under f; strictly monotone on the domain [source_base, bound)."""
    if not (f.source_base <= x < f.monoid.bound):
        raise ValueError(f"{fmt(x)} is outside the domain [{fmt(f.source_base)}, bound)")
    return add(f.target_base, subtract(x, f.source_base))


def preimage(f, y):
    """Inverse image of y; witnesses surjectivity onto [target_base, bound)."""
    if not (f.target_base <= y < f.monoid.bound):
        raise ValueError(f"{fmt(y)} is outside the image [{fmt(f.target_base)}, bound)")
    return add(f.source_base, subtract(y, f.target_base))


def compose(f, g):
    """The partial-map product "f then g".

    The domain is the set of x in dom f with f(x) in dom g, again a principal
    upper set: all of dom f when the image base of f already lies in dom g,
    and otherwise the tail of dom f above the preimage of g's domain base.
    """
    if f.monoid != g.monoid:
        raise ContextMismatchError("cannot compose isomorphisms over different monoids")
    if f.target_base >= g.source_base:
        source = f.source_base
    else:
        source = add(f.source_base, subtract(g.source_base, f.target_base))
    return UpperSetIso(source, apply(g, apply(f, source)), f.monoid)


def represent(x):
    """The isomorphism whose interval bases are the coordinates of x."""
    return UpperSetIso(x.left, x.right, x.monoid)


def unrepresent(f):
    """Inverse of :func:`represent`."""
    return Element(f.source_base, f.target_base, f.monoid)
