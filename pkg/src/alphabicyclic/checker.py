"""Bounded verification of joint continuity for the locally compact topology.

Multiplication is continuous at a pair of points iff every basic neighborhood
of the product contains the product of suitable basic neighborhoods of the
factors.  Pairs of isolated points are vacuously fine, so a query pairs at
least one non-isolated point with something.  Queries fall into ten shapes:

    1.1 / 1.2 / 1.3     both factors non-isolated, split by comparing the
                        right head coefficient of x with the left head
                        coefficient of y (less / equal / greater);
    2.f.s               x isolated, y non-isolated; f in {1, 2, 3} records
                        which coordinates of x carry a tail below w^w
                        (both / only the left / only the right), s in {1, 2}
                        again splits on the head comparison;
    3                   x non-isolated, y isolated, handled both directly and
                        through the mirror image under inversion.

For each shape there is a closed recipe choosing the source neighborhoods:
the same index k for shape 1, a tail-degree shift of k for shapes 2.f.1, and
index 0 with a singleton product set for shapes 2.f.2.  The verifier replays
the containment elementwise over a finite window of the enumeration
parameters, so a green result means "verified up to the window bound", not a
proof; a refutation is final and carries a concrete witness pair.
:func:`refutation_search` ignores the recipe and grid-searches the least
working index, which on every recipe instance must come out no larger.

Every product in the scans goes through the monoid multiplication (or an
injected replacement, which is how the test suite checks that deliberately
corrupted multiplications get refuted).
"""

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional, Tuple, Union

from .bicyclic import Element, inverse, mul_pairs, multiply
from .ordinal import OMEGA, nat, split_at, to_int
from .topology import (
    MONOID,
    Neighborhood,
    center_coeffs,
    center_pair,
    enumerate_prefix,
    member,
    member_pair,
    member_parameter,
)

__all__ = [
    "CASE_TAGS",
    "DEFAULT_BOUND",
    "DEFAULT_J_MAX",
    "Query",
    "Report",
    "STATUS_REFUTED",
    "STATUS_VERIFIED",
    "case3_routes",
    "classify_case",
    "iter_instances",
    "recipe_indices",
    "refutation_search",
    "report_dict",
    "report_line",
    "sweep",
    "verify_inversion_continuity",
    "verify_inversion_map",
    "verify_multiplication_continuity",
]

STATUS_VERIFIED = "verified_up_to_bound"
STATUS_REFUTED = "refuted"

CASE_TAGS = ("1.1", "1.2", "1.3", "2.1.1", "2.1.2", "2.2.1", "2.2.2", "2.3.1", "2.3.2", "3")

DEFAULT_BOUND = 50
DEFAULT_J_MAX = 64


def _require_query_shape(x, y):
    if x.monoid != MONOID or y.monoid != MONOID:
        raise ValueError("continuity checks live on the monoid with parameter w + 1")
    if center_coeffs(x) is None and center_coeffs(y) is None:
        raise ValueError("at least one factor must be non-isolated")


@dataclass(frozen=True)
class Query:
    x: Element
    y: Element
    target_k: int
    bound: int

    def __post_init__(self):
        _require_query_shape(self.x, self.y)
        if self.target_k < 0:
            raise ValueError("target index must be a natural number")
        if self.bound < 1:
            raise ValueError("enumeration bound must be at least 1")


@dataclass(frozen=True)
class Report:
    """Outcome of one query.  A source index of None marks a singleton factor."""

    case: str
    j_x: Optional[int]
    j_y: Optional[int]
    k: int
    bound: int
    status: str
    witness: Optional[Tuple[Element, Element]] = None


def report_line(r):
    jx = "s" if r.j_x is None else r.j_x
    jy = "s" if r.j_y is None else r.j_y
    line = f"case={r.case} j=({jx},{jy}) k={r.k} status={r.status} bound={r.bound}"
    if r.witness is not None:
        line += f" witness={r.witness[0]}*{r.witness[1]}"
    return line


def report_dict(r):
    return {
        "case": r.case,
        "j_x": r.j_x,
        "j_y": r.j_y,
        "k": r.k,
        "bound": r.bound,
        "status": r.status,
        "witness": None if r.witness is None else [str(r.witness[0]), str(r.witness[1])],
    }


# --------------------------------------------------------------------------
# Case classification and the source-index recipe.
# --------------------------------------------------------------------------


def _head_split(coord):
    """(head coefficient at w^w, tail below w^w)."""
    return split_at(coord, OMEGA)


def _tail_degree(tail):
    return 0 if tail == () else to_int(tail[0][0])


def classify_case(x, y):
    """The shape tag of the factor pair; both factors isolated is an error."""
    _require_query_shape(x, y)
    cx = center_coeffs(x)
    cy = center_coeffs(y)
    if cx is not None and cy is not None:
        m1, n = cx[1], cy[0]
        return "1.1" if m1 < n else ("1.2" if m1 == n else "1.3")
    if cx is not None:
        return "3"
    m1, tail_b = _head_split(x.right)
    _, tail_a = _head_split(x.left)
    if tail_a and tail_b:
        family = "2.1"
    elif not tail_b:
        # covers the doubly pure isolated factors (a zero head somewhere),
        # which the subcase list leaves unassigned; the 2.2 recipe with a
        # zero tail shift verifies them
        family = "2.2"
    else:
        family = "2.3"
    return family + (".1" if m1 < cy[0] else ".2")


def recipe_indices(case, x, y, target_k):
    """Source indices (j_x, j_y) the closed recipe picks for a target index."""
    if case.startswith("1."):
        return target_k, target_k
    if case == "3":
        mirrored = classify_case(inverse(y), inverse(x))
        _, j = recipe_indices(mirrored, inverse(y), inverse(x), target_k)
        return j, None
    if case.endswith(".2"):
        return None, 0
    _, tail_a = _head_split(x.left)
    _, tail_b = _head_split(x.right)
    if case == "2.1.1":
        return None, _tail_degree(tail_b) + _tail_degree(tail_a) + target_k
    if case == "2.2.1":
        return None, _tail_degree(tail_a) + target_k
    if case == "2.3.1":
        return None, _tail_degree(tail_b) + target_k
    raise ValueError(f"unknown case tag {case!r}")


# --------------------------------------------------------------------------
# Elementwise scanning.
# --------------------------------------------------------------------------


def _source_pairs(el, j, bound):
    """Raw coordinate pairs of the scan grid for one factor.

    None as the index means the factor itself (a singleton); otherwise the
    factor must be non-isolated and contributes its center plus the members
    with parameter in (j, j + bound].
    """
    if j is None:
        return [(el.left, el.right)]
    n, m = center_coeffs(el)
    pairs = [center_pair(n, m)]
    for t in range(j + 1, j + bound + 1):
        pairs.append(member_pair(n, m, t))
    return pairs


def _target_of(z, target_k):
    cz = center_coeffs(z)
    if cz is None:
        return ("S", (z.left, z.right))
    n, m = cz
    return ("U", n, m, target_k, center_pair(n, m))


def _scan(xs, ys, target, product_fn):
    """First grid pair whose product escapes the target, or None."""
    if target[0] == "S":
        expected = target[1]
        for u in xs:
            a, b = u
            for v in ys:
                if product_fn(a, b, v[0], v[1]) != expected:
                    return u, v
        return None
    _, n, m, k, cp = target
    for u in xs:
        a, b = u
        for v in ys:
            z = product_fn(a, b, v[0], v[1])
            if z == cp:
                continue
            t = member_parameter(z[0], z[1], n, m)
            if t is None or t <= k:
                return u, v
    return None


def _wrap(pair):
    return Element(pair[0], pair[1], MONOID)


def _report(case, jx, jy, q, witness_pair):
    if witness_pair is None:
        return Report(case, jx, jy, q.target_k, q.bound, STATUS_VERIFIED)
    u, v = witness_pair
    return Report(case, jx, jy, q.target_k, q.bound, STATUS_REFUTED, (_wrap(u), _wrap(v)))


def _verify_flat(q, case, product_fn):
    jx, jy = recipe_indices(case, q.x, q.y, q.target_k)
    target = _target_of(multiply(q.x, q.y), q.target_k)
    found = _scan(
        _source_pairs(q.x, jx, q.bound),
        _source_pairs(q.y, jy, q.bound),
        target,
        product_fn,
    )
    return _report(case, jx, jy, q, found)


def case3_routes(q, product_fn=mul_pairs):
    """Both verification routes for a shape-3 query.

    The direct route scans source neighborhoods of x against the fixed
    isolated y.  The mirror route inverts both factors, which swaps the
    factor roles ((s t)^-1 = t^-1 s^-1), and runs the resulting shape-2 query.
    For the true multiplication the two must agree; the tests assert that.
    """
    mirrored = Query(inverse(q.y), inverse(q.x), q.target_k, q.bound)
    reduced = _verify_flat(mirrored, classify_case(mirrored.x, mirrored.y), product_fn)
    jx = reduced.j_y
    target = _target_of(multiply(q.x, q.y), q.target_k)
    found = _scan(
        _source_pairs(q.x, jx, q.bound),
        [(q.y.left, q.y.right)],
        target,
        product_fn,
    )
    direct = _report("3", jx, None, q, found)
    return direct, reduced


def verify_multiplication_continuity(q, product_fn=mul_pairs):
    """Replay the recipe for the query's case over the enumeration window.

    Shape 3 runs both its routes and refutes if either route refutes.
    """
    case = classify_case(q.x, q.y)
    if case != "3":
        return _verify_flat(q, case, product_fn)
    direct, reduced = case3_routes(q, product_fn)
    if direct.status == STATUS_REFUTED or reduced.status == STATUS_REFUTED:
        witness = direct.witness
        if witness is None:
            u, v = reduced.witness
            witness = (inverse(v), inverse(u))
        return Report("3", direct.j_x, None, q.target_k, q.bound, STATUS_REFUTED, witness)
    return direct


def refutation_search(x, y, target_k, j_max=DEFAULT_J_MAX, bound=DEFAULT_BOUND, product_fn=mul_pairs):
    """Grid-search the least source index that makes the containment hold.

    Independent of the recipe: tries j = 0, 1, ... on every non-isolated
    factor simultaneously and reports the least j for which the whole window
    lands inside the target, or a refutation once j_max is exhausted.
    """
    q = Query(x, y, target_k, bound)
    case = classify_case(x, y)
    target = _target_of(multiply(x, y), target_k)
    x_center = center_coeffs(x) is not None
    y_center = center_coeffs(y) is not None
    found = None
    for j in range(j_max + 1):
        found = _scan(
            _source_pairs(x, j if x_center else None, bound),
            _source_pairs(y, j if y_center else None, bound),
            target,
            product_fn,
        )
        if found is None:
            return _report(case, j if x_center else None, j if y_center else None, q, None)
    return _report(case, j_max if x_center else None, j_max if y_center else None, q, found)


# --------------------------------------------------------------------------
# Inversion continuity.
# --------------------------------------------------------------------------


def verify_inversion_map(u, v, bound=DEFAULT_BOUND):
    """Check elementwise that inversion maps u into v and v into u."""
    for source, image in ((u, v), (v, u)):
        for el in enumerate_prefix(source, bound):
            flipped = inverse(el)
            if not member(flipped, image):
                return Report("inv", u.k, v.k, u.k, bound, STATUS_REFUTED, (el, flipped))
    return Report("inv", u.k, v.k, u.k, bound, STATUS_VERIFIED)


def verify_inversion_continuity(k, n, m, bound=DEFAULT_BOUND):
    return verify_inversion_map(Neighborhood(n, m, k), Neighborhood(m, n, k), bound)


# --------------------------------------------------------------------------
# Instance grids and the full sweep.
# --------------------------------------------------------------------------


def _center_element(n, m):
    left, right = center_pair(n, m)
    return Element(left, right, MONOID)


def _coord(head, tail_exp):
    terms = []
    if head:
        terms.append((OMEGA, head))
    if tail_exp is not None:
        terms.append((nat(tail_exp), 1))
    return tuple(terms)


def _isolated_element(n1, t2, m1, r2):
    """The factor (w^w*n1 [+ w^t2], w^w*m1 [+ w^r2]); None skips a tail."""
    return Element(_coord(n1, t2), _coord(m1, r2), MONOID)


def iter_instances(tag, param_max=4, k_max=6, bound=DEFAULT_BOUND):
    """All queries of one case shape over the standard parameter grid."""
    heads = range(1, param_max + 1)
    exps = range(1, param_max + 1)
    ks = range(k_max + 1)
    if tag.startswith("1."):
        for n1, m1, n, m in iproduct(heads, heads, heads, heads):
            if (tag == "1.1" and not m1 < n) or (tag == "1.2" and m1 != n) or (tag == "1.3" and not m1 > n):
                continue
            for k in ks:
                yield Query(_center_element(n1, m1), _center_element(n, m), k, bound)
    elif tag.startswith("2."):
        want_sub = tag[-1]
        for n1, m1, n, m in iproduct(heads, heads, heads, heads):
            sub = "1" if m1 < n else "2"
            if sub != want_sub:
                continue
            y = _center_element(n, m)
            if tag.startswith("2.1"):
                for t2, r2 in iproduct(exps, exps):
                    for k in ks:
                        yield Query(_isolated_element(n1, t2, m1, r2), y, k, bound)
            elif tag.startswith("2.2"):
                for t2 in exps:
                    for k in ks:
                        yield Query(_isolated_element(n1, t2, m1, None), y, k, bound)
            else:
                for r2 in exps:
                    for k in ks:
                        yield Query(_isolated_element(n1, None, m1, r2), y, k, bound)
    elif tag == "3":
        families = (
            lambda n1, m1, t2, r2: _isolated_element(n1, t2, m1, r2),
            lambda n1, m1, t2, r2: _isolated_element(n1, t2, m1, None),
            lambda n1, m1, t2, r2: _isolated_element(n1, None, m1, r2),
        )
        for fam_index, build in enumerate(families):
            for n1, m1, n, m in iproduct(heads, heads, heads, heads):
                x = _center_element(n, m)
                if fam_index == 0:
                    tails = iproduct(exps, exps)
                elif fam_index == 1:
                    tails = ((t2, None) for t2 in exps)
                else:
                    tails = ((None, r2) for r2 in exps)
                for t2, r2 in tails:
                    y = build(n1, m1, t2, r2)
                    for k in ks:
                        yield Query(x, y, k, bound)
    else:
        raise ValueError(f"unknown case tag {tag!r}")


def sweep(k_max=6, param_max=4, bound=DEFAULT_BOUND, j_max=DEFAULT_J_MAX, product_fn=mul_pairs):
    """Run every case instance through verification, refutation search and the
    inversion check, in a fixed deterministic order."""
    reports = []
    for tag in CASE_TAGS:
        for q in iter_instances(tag, param_max, k_max, bound):
            reports.append(verify_multiplication_continuity(q, product_fn))
    for tag in CASE_TAGS:
        for q in iter_instances(tag, param_max, k_max, bound):
            reports.append(refutation_search(q.x, q.y, q.target_k, j_max, bound, product_fn))
    for k in range(k_max + 1):
        for n in range(1, param_max + 1):
            for m in range(1, param_max + 1):
                reports.append(verify_inversion_continuity(k, n, m, bound))
    return reports
