"""The ordinal bicyclic inverse monoids.

For an ordinal alpha >= 1, the carrier is the set of pairs (a, b) of ordinals
below w^alpha with the multiplication

    (a, b)(c, d) = (a + (c - b), d)   if b <= c
    (a, b)(c, d) = (a, d + (b - c))   if b >  c

Closure holds because w^alpha is additively indecomposable.  (0, 0) is the
identity, (b, a) is the inverse of (a, b), and the idempotents are exactly the
diagonal pairs.  For alpha = 1 this is the classic bicyclic monoid on two
generators p, q with pq = 1, via q^k p^l <-> (k, l).

Elements carry their monoid; mixing monoids raises instead of silently
promoting, and :func:`embed` re-tags an element into a larger monoid
explicitly.  All values are immutable and all operations pure.
"""

from dataclasses import dataclass, field

from .ordinal import ZERO, ONE, add, fmt, nat, omega_pow, parse, subtract, to_int

__all__ = [
    "ContextMismatchError",
    "Element",
    "Monoid",
    "classic_from_word",
    "classic_to_word",
    "embed",
    "fiber_member",
    "fmt_element",
    "identity",
    "inverse",
    "is_idempotent",
    "mul_pairs",
    "multiply",
    "parse_element",
]


class ContextMismatchError(ValueError):
    """Operands live in different monoids (or in a monoid an operation forbids)."""


@dataclass(frozen=True)
class Monoid:
    """The parameter alpha together with its cached bound w^alpha."""

    alpha: tuple
    bound: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.alpha >= ONE:
            raise ValueError("monoid parameter must be an ordinal >= 1")
        object.__setattr__(self, "bound", omega_pow(self.alpha))


@dataclass(frozen=True)
class Element:
    """A pair of ordinals below the monoid bound."""

    left: tuple
    right: tuple
    monoid: Monoid

    def __post_init__(self):
        bound = self.monoid.bound
        if not (self.left < bound and self.right < bound):
            raise ValueError(
                f"({fmt(self.left)}, {fmt(self.right)}) is out of range for bound {fmt(bound)}"
            )

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        return fmt_element(self)


def identity(monoid):
    return Element(ZERO, ZERO, monoid)


def mul_pairs(a, b, c, d):
    """Raw multiplication on coordinate tuples: (a, b)(c, d)."""
    if b <= c:
        return add(a, subtract(c, b)), d
    return a, add(d, subtract(b, c))


def _same_monoid(x, y):
    if x.monoid != y.monoid:
        raise ContextMismatchError(
            f"elements of different monoids: {fmt(x.monoid.alpha)} vs {fmt(y.monoid.alpha)}"
        )


def multiply(x, y):
    _same_monoid(x, y)
    left, right = mul_pairs(x.left, x.right, y.left, y.right)
    return Element(left, right, x.monoid)


def inverse(x):
    """The unique y with xyx = x and yxy = y: coordinate swap."""
    return Element(x.right, x.left, x.monoid)


def is_idempotent(x):
    return x.left == x.right


def embed(x, target):
    """Re-tag x into a larger monoid; the coordinates are unchanged."""
    if x.monoid.alpha > target.alpha:
        raise ContextMismatchError(
            f"cannot embed from parameter {fmt(x.monoid.alpha)} into {fmt(target.alpha)}"
        )
    return Element(x.left, x.right, target)


def classic_from_word(monoid, k, l):
    """The element q^k p^l of the two-generator presentation; needs alpha = 1."""
    if monoid.alpha != ONE:
        raise ContextMismatchError("word form requires the monoid with parameter 1")
    return Element(nat(k), nat(l), monoid)


def classic_to_word(x):
    """(k, l) with x = q^k p^l; needs alpha = 1."""
    if x.monoid.alpha != ONE:
        raise ContextMismatchError("word form requires the monoid with parameter 1")
    return to_int(x.left), to_int(x.right)


def fiber_member(probe, center):
    """Membership in the control set of `center` = (a, b): all probes x with
    (0, a) x = (0, b).

    The set is a neighborhood of its center in every Hausdorff topology with
    separately continuous multiplication, and every member (c, d) satisfies
    c <= a, d <= b, and c = a iff d = b.
    """
    _same_monoid(probe, center)
    return mul_pairs(ZERO, center.left, probe.left, probe.right) == (ZERO, center.right)


def fmt_element(x):
    return f"({fmt(x.left)}, {fmt(x.right)})"


def parse_element(text, monoid):
    """Parse "(<ordinal>, <ordinal>)" in the given monoid."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"element must be written as a parenthesized pair: {text!r}")
    inner = s[1:-1]
    depth = 0
    split = -1
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            split = i
            break
    if split < 0:
        raise ValueError(f"element must contain a top-level comma: {text!r}")
    return Element(parse(inner[:split]), parse(inner[split + 1 :]), monoid)
