"""A non-discrete locally compact inverse-semigroup topology on the w+1 level.

In the monoid with parameter w+1 every point is declared open except the
doubly-pure pairs (w^w*n, w^w*m) with finite n, m >= 1.  Such a point gets the
neighborhood base

    U_k((w^w*n, w^w*m)) = { (w^w*(n-1) + w^t, w^w*(m-1) + w^t) : t > k }
                          u { (w^w*n, w^w*m) }

with t ranging over naturals.  Each base set is compact (every base
neighborhood of the center contains all but finitely many of its points), the
family is a decreasing filtration in k, and inversion maps the base set of
(n, m) onto the base set of (m, n).

This module also houses the decidable "forced isolated" classifier: a
sufficient-condition procedure certifying that a pair is isolated in every
Hausdorff topology on its monoid with separately continuous multiplication.
The classifier never claims completeness: "not forced" means undecided, not
non-isolated.
"""

from dataclasses import dataclass
from typing import Union

from .bicyclic import Element, Monoid, inverse
from .ordinal import OMEGA, ONE, ZERO, add, fmt, is_finite, is_limit, nat, parse

__all__ = [
    "FORCED",
    "MONOID",
    "NOT_FORCED",
    "Neighborhood",
    "RULE_BOTH_FINITE",
    "RULE_DISTINCT_OMEGA_POWERS",
    "RULE_NONLIMIT_COORDINATE",
    "RULE_TAIL_REDUCTION",
    "RULE_ZERO_COORDINATE",
    "Singleton",
    "Verdict",
    "base_member",
    "center",
    "center_coeffs",
    "classify_forced_isolated",
    "enumerate_prefix",
    "fmt_neighborhood",
    "hausdorff_separate",
    "inv_nbhd",
    "is_isolated",
    "member",
    "member_element",
    "member_pair",
    "member_parameter",
    "nbhd_difference",
    "parse_neighborhood",
]

OMEGA_OMEGA = ((OMEGA, 1),)

#: The monoid with parameter w + 1, carrier of the topology.
MONOID = Monoid(add(OMEGA, ONE))


# --------------------------------------------------------------------------
# Neighborhood base.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Neighborhood:
    """The base set U_k((w^w*n, w^w*m)).  Its only non-isolated member is its center."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("center coefficients must be positive")
        if self.k < 0:
            raise ValueError("base index must be a natural number")

    def __str__(self):
        return fmt_neighborhood(self)


def _pure_coeff(coord):
    """n if coord == w^w*n with n >= 1, else None."""
    if len(coord) == 1 and coord[0][0] == OMEGA:
        return coord[0][1]
    return None


def center_coeffs(x):
    """(n, m) if x is a non-isolated point (w^w*n, w^w*m), else None."""
    n = _pure_coeff(x.left)
    if n is None:
        return None
    m = _pure_coeff(x.right)
    if m is None:
        return None
    return n, m


def center_pair(n, m):
    return ((OMEGA, n),), ((OMEGA, m),)


def center(u):
    left, right = center_pair(u.n, u.m)
    return Element(left, right, MONOID)


def _member_coord(c, t):
    # w^w*(c-1) + w^t, collapsing the head when c == 1
    if c == 1:
        return ((nat(t), 1),)
    return ((OMEGA, c - 1), (nat(t), 1))


def member_pair(n, m, t):
    """Raw coordinates of the parameter-t member of the (n, m) family."""
    return _member_coord(n, t), _member_coord(m, t)


def member_element(n, m, t):
    left, right = member_pair(n, m, t)
    return Element(left, right, MONOID)


def _coord_parameter(coord, c):
    """t if coord == w^w*(c-1) + w^t for some finite t >= 1, else None."""
    if c == 1:
        if len(coord) != 1:
            return None
        e, coeff = coord[0]
    else:
        if len(coord) != 2 or coord[0] != (OMEGA, c - 1):
            return None
        e, coeff = coord[1]
    if coeff != 1 or len(e) != 1 or e[0][0] != ():
        return None
    return e[0][1]


def member_parameter(left, right, n, m):
    """The t for which (left, right) is the t-member of the (n, m) family, or None."""
    t = _coord_parameter(left, n)
    if t is None or t != _coord_parameter(right, m):
        return None
    return t


def _require_carrier(x):
    if x.monoid != MONOID:
        raise ValueError("the topology lives on the monoid with parameter w + 1")


def member(x, u):
    """True iff x is the center of u or one of its members with parameter t > k."""
    _require_carrier(x)
    if (x.left, x.right) == center_pair(u.n, u.m):
        return True
    t = member_parameter(x.left, x.right, u.n, u.m)
    return t is not None and t > u.k


def enumerate_prefix(u, count):
    """The center followed by the members with t = k+1, ..., k+count-1."""
    if count < 1:
        raise ValueError("count must be at least 1")
    out = [center(u)]
    for t in range(u.k + 1, u.k + count):
        out.append(member_element(u.n, u.m, t))
    return out


def inv_nbhd(u):
    """Elementwise image of u under inversion: the same index at the swapped center."""
    return Neighborhood(u.m, u.n, u.k)


def nbhd_difference(u, j):
    """The finite set U_k \\ U_j, i.e. the members with k < t <= j.

    Its size is exactly j - k; since every base neighborhood of the center
    leaves out only finitely many points of u, each base set is compact.
    """
    if j < u.k:
        raise ValueError("difference needs j >= k")
    return [member_element(u.n, u.m, t) for t in range(u.k + 1, j + 1)]


def is_isolated(x):
    """Openness of {x}: everything except the pure pairs (w^w*n, w^w*m)."""
    _require_carrier(x)
    return center_coeffs(x) is None


# --------------------------------------------------------------------------
# Forced isolation.
# --------------------------------------------------------------------------

FORCED = "forced_isolated"
NOT_FORCED = "not_forced"

RULE_ZERO_COORDINATE = "zero_coordinate"
RULE_BOTH_FINITE = "both_finite"
RULE_NONLIMIT_COORDINATE = "nonlimit_coordinate"
RULE_DISTINCT_OMEGA_POWERS = "distinct_omega_powers"
RULE_TAIL_REDUCTION = "tail_reduction"


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: Union[str, None] = None

    def __str__(self):
        return self.status if self.rule is None else f"{self.status} {self.rule}"


def classify_forced_isolated(x):
    """Decide whether x = (a, b) is isolated in every Hausdorff topology making
    the multiplication of its monoid separately continuous.

    The sufficient conditions, tried in order:

    * a or b is 0 (translating against (a, 0) resp. (0, b) pins the point);
    * a and b are both finite;
    * a or b is a non-limit ordinal;
    * stripping a and b to their last CNF terms leaves a pair of distinct
      powers of w, either literally or after a genuine reduction.

    "not forced" only means no condition applies, never "non-isolated".
    """
    a, b = x.left, x.right
    if a == ZERO or b == ZERO:
        return Verdict(FORCED, RULE_ZERO_COORDINATE)
    if is_finite(a) and is_finite(b):
        return Verdict(FORCED, RULE_BOTH_FINITE)
    if not is_limit(a) or not is_limit(b):
        return Verdict(FORCED, RULE_NONLIMIT_COORDINATE)
    if a[-1][0] != b[-1][0]:
        if len(a) == 1 and a[0][1] == 1 and len(b) == 1 and b[0][1] == 1:
            return Verdict(FORCED, RULE_DISTINCT_OMEGA_POWERS)
        return Verdict(FORCED, RULE_TAIL_REDUCTION)
    return Verdict(NOT_FORCED)


# --------------------------------------------------------------------------
# Separation.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Singleton:
    """The open set {element} of an isolated point."""

    element: Element

    def __str__(self):
        return f"{{{self.element}}}"


BaseSet = Union[Singleton, Neighborhood]


def base_member(x, s):
    if isinstance(s, Singleton):
        return x == s.element
    return member(x, s)


def _nbhd_around(x, avoid):
    """A base neighborhood of the non-isolated x excluding the point `avoid`."""
    n, m = center_coeffs(x)
    t = member_parameter(avoid.left, avoid.right, n, m)
    return Neighborhood(n, m, t if t is not None else 0)


def hausdorff_separate(x, y, check_prefix=50):
    """Disjoint base sets around two distinct points.

    Singletons serve the isolated points; the non-isolated points get base
    neighborhoods whose index skips the other point's membership parameter.
    Disjointness is re-verified on enumerated prefixes of length
    `check_prefix` before returning.
    """
    _require_carrier(x)
    _require_carrier(y)
    if x == y:
        raise ValueError("cannot separate a point from itself")
    sx = Singleton(x) if is_isolated(x) else _nbhd_around(x, y)
    sy = Singleton(y) if is_isolated(y) else _nbhd_around(y, x)
    for s, other in ((sx, sy), (sy, sx)):
        points = [s.element] if isinstance(s, Singleton) else enumerate_prefix(s, check_prefix)
        for p in points:
            if base_member(p, other):
                raise AssertionError(f"separation of {x} and {y} produced overlapping sets")
    return sx, sy


# --------------------------------------------------------------------------
# Text form: U[k]((w^w*n, w^w*m)).
# --------------------------------------------------------------------------


def fmt_neighborhood(u):
    c = center(u)
    return f"U[{u.k}](({fmt(c.left)}, {fmt(c.right)}))"


def parse_neighborhood(text):
    s = text.strip()
    if not s.startswith("U["):
        raise ValueError(f"neighborhood must be written as U[k]((..., ...)): {text!r}")
    close = s.index("]") if "]" in s else -1
    if close < 0 or not s[2:close].strip().isdigit():
        raise ValueError(f"malformed base index in {text!r}")
    k = int(s[2:close])
    rest = s[close + 1 :].strip()
    if not (rest.startswith("((") and rest.endswith("))")):
        raise ValueError(f"malformed neighborhood center in {text!r}")
    inner = rest[2:-2]
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
        raise ValueError(f"neighborhood center must be a pair: {text!r}")
    left = parse(inner[:split])
    right = parse(inner[split + 1 :])
    n = _pure_coeff(left)
    m = _pure_coeff(right)
    if n is None or m is None:
        raise ValueError("neighborhood center must have coordinates of the form w^w*n")
    return Neighborhood(n, m, k)
