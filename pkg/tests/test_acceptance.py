"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
appear.  Every check is exact (zero tolerated failures); the stated runtime
budgets are asserted for the three criteria that carry one.
"""

import time
from contextlib import contextmanager

from alphabicyclic.bicyclic import (
    Element,
    Monoid,
    classic_from_word,
    classic_to_word,
    fiber_member,
    identity,
    inverse,
    multiply,
)
from alphabicyclic.checker import (
    Query,
    STATUS_REFUTED,
    STATUS_VERIFIED,
    CASE_TAGS,
    classify_case,
    iter_instances,
    recipe_indices,
    refutation_search,
    verify_inversion_continuity,
    verify_inversion_map,
    verify_multiplication_continuity,
)
from alphabicyclic.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    add,
    make,
    nat,
    omega_pow,
    order_type_oracle,
    subtract,
)
from alphabicyclic.orderiso import compose, represent
from alphabicyclic.topology import (
    FORCED,
    MONOID,
    NOT_FORCED,
    Neighborhood,
    RULE_BOTH_FINITE,
    RULE_DISTINCT_OMEGA_POWERS,
    RULE_ZERO_COORDINATE,
    base_member,
    center,
    classify_forced_isolated,
    enumerate_prefix,
    hausdorff_separate,
    is_isolated,
    member,
    member_element,
    nbhd_difference,
)
from conftest import make_rng, random_center, random_element


@contextmanager
def criterion(number, name):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number} [{name}]: FAIL ({time.perf_counter() - start:.1f}s)")
        raise
    print(f"criterion {number} [{name}]: PASS ({time.perf_counter() - start:.1f}s)")


def test_criterion_1_ordinal_arithmetic_vs_oracle():
    with criterion(1, "ordinal arithmetic vs brute-force oracle"):
        start = time.perf_counter()
        grid = [
            make(((nat(2), a), (nat(1), b), (ZERO, c)))
            for a in range(4)
            for b in range(4)
            for c in range(4)
        ]
        for x in grid:
            for y in grid:
                assert add(x, y) == order_type_oracle(x, y)
                if y <= x:
                    assert add(y, subtract(x, y)) == x
                else:
                    assert add(x, subtract(y, x)) == y
        assert time.perf_counter() - start < 10.0


def test_criterion_2_inverse_semigroup_axioms():
    with criterion(2, "inverse-semigroup axiom suite"):
        start = time.perf_counter()
        rng = make_rng(100)
        e = identity(MONOID)
        for _ in range(100_000):
            x, y, z = (random_element(rng) for _ in range(3))
            assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
        for _ in range(10_000):
            x = random_element(rng)
            i = inverse(x)
            assert multiply(x, multiply(i, x)) == x
            assert multiply(i, multiply(x, i)) == i
            assert multiply(e, x) == x and multiply(x, e) == x
            f = Element(x.left, x.left, MONOID)
            g = Element(x.right, x.right, MONOID)
            assert multiply(f, g) == multiply(g, f)
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0


def test_criterion_3_representation_oracle():
    with criterion(3, "order-isomorphism representation oracle"):
        rng = make_rng(101)
        for _ in range(10_000):
            x = random_element(rng)
            y = random_element(rng)
            assert represent(multiply(x, y)) == compose(represent(x), represent(y))


def test_criterion_4_classic_bicyclic_bridge():
    with criterion(4, "two-generator word formula bridge"):
        b1 = Monoid(ONE)
        words = [[classic_from_word(b1, k, l) for l in range(21)] for k in range(21)]
        for k in range(21):
            for l in range(21):
                for m in range(21):
                    for n in range(21):
                        got = multiply(words[k][l], words[m][n])
                        drop = min(l, m)
                        assert classic_to_word(got) == (k + m - drop, l + n - drop)


def test_criterion_5_fiber_membership_conclusions():
    with criterion(5, "control-set membership conclusions"):
        rng = make_rng(102)
        accepted = 0
        for _ in range(10_000):
            probe = random_element(rng)
            center_ = random_element(rng)
            if rng.random() < 0.5:
                center_ = multiply(probe, random_element(rng))
            if not fiber_member(probe, center_):
                continue
            accepted += 1
            assert probe.left <= center_.left
            assert probe.right <= center_.right
            assert (probe.left == center_.left) == (probe.right == center_.right)
        assert accepted >= 1000


def _coordinate_grid():
    """A structured family of ordinals below w^(w+1), including 0."""
    grid = []
    for head in range(4):
        for tail in [None, (1, 1), (2, 1), (3, 2), (1, 3)]:
            terms = []
            if head:
                terms.append((OMEGA, head))
            if tail is not None:
                terms.append((nat(tail[0]), tail[1]))
            grid.append(tuple(terms))
    return grid


def test_criterion_6_isolation_classifier():
    with criterion(6, "forced-isolation classifier families"):
        grid = _coordinate_grid()
        for a in grid:
            for x in (Element(ZERO, a, MONOID), Element(a, ZERO, MONOID)):
                v = classify_forced_isolated(x)
                assert v.status == FORCED
                assert v.rule == RULE_ZERO_COORDINATE
        for n in range(21):
            for m in range(21):
                v = classify_forced_isolated(Element(nat(n), nat(m), MONOID))
                assert v.status == FORCED
                if n and m:
                    assert v.rule == RULE_BOTH_FINITE
        exponents = [nat(i) for i in range(9)] + [OMEGA]
        for a in exponents:
            for b in exponents:
                if a == b:
                    continue
                v = classify_forced_isolated(Element(omega_pow(a), omega_pow(b), MONOID))
                assert v.status == FORCED
                if a >= ONE and b >= ONE:
                    assert v.rule == RULE_DISTINCT_OMEGA_POWERS
        for g in _coordinate_grid():
            successor = add(g, nat(2))
            for b in _coordinate_grid():
                assert classify_forced_isolated(Element(successor, b, MONOID)).status == FORCED
                assert classify_forced_isolated(Element(b, successor, MONOID)).status == FORCED
        for n in range(1, 11):
            for m in range(1, 11):
                x = Element(((OMEGA, n),), ((OMEGA, m),), MONOID)
                assert classify_forced_isolated(x).status == NOT_FORCED
                assert not is_isolated(x)


def test_criterion_7_continuity_sweep():
    with criterion(7, "full continuity case sweep"):
        start = time.perf_counter()
        for tag in CASE_TAGS:
            for q in iter_instances(tag, param_max=4, k_max=6, bound=50):
                report = verify_multiplication_continuity(q)
                assert report.status == STATUS_VERIFIED, (tag, q)
                assert report.case == tag
                jx, jy = recipe_indices(tag, q.x, q.y, q.target_k)
                search = refutation_search(q.x, q.y, q.target_k, j_max=64, bound=50)
                assert search.status == STATUS_VERIFIED, (tag, q)
                if jx is not None:
                    assert search.j_x <= jx
                if jy is not None:
                    assert search.j_y <= jy
        for k in range(7):
            for n in range(1, 5):
                for m in range(1, 5):
                    assert verify_inversion_continuity(k, n, m, 50).status == STATUS_VERIFIED
        elapsed = time.perf_counter() - start
        assert elapsed < 120.0


def test_criterion_8_topology_structure():
    with criterion(8, "neighborhood base structure and separation"):
        rng = make_rng(103)
        for _ in range(200):
            n, m = rng.randint(1, 6), rng.randint(1, 6)
            k = rng.randint(0, 12)
            j = rng.randint(k, k + 12)
            outer = Neighborhood(n, m, k)
            inner = Neighborhood(n, m, j)
            for x in enumerate_prefix(inner, 25):
                assert member(x, outer)
        for _ in range(100):
            n, m = rng.randint(1, 6), rng.randint(1, 6)
            k = rng.randint(0, 20)
            j = rng.randint(k, k + 30)
            assert len(nbhd_difference(Neighborhood(n, m, k), j)) == j - k
        separated = 0
        while separated < 1000:
            x = random_center(rng) if rng.random() < 0.5 else random_element(rng)
            y = random_center(rng) if rng.random() < 0.5 else random_element(rng)
            if x == y:
                continue
            sx, sy = hausdorff_separate(x, y)
            assert base_member(x, sx) and base_member(y, sy)
            separated += 1
        for _ in range(2000):
            x = random_element(rng)
            if classify_forced_isolated(x).status == FORCED:
                assert is_isolated(x)


def test_criterion_9_negative_controls():
    with criterion(9, "corrupted inputs are refuted with witnesses"):

        def swapped_branch_mul(a, b, c, d):
            if b <= c:
                return a, add(d, subtract(c, b))
            return add(a, subtract(b, c)), d

        rng = make_rng(104)
        for tag in ("1.1", "1.2", "2.1.1", "2.2.2", "3"):
            queries = list(iter_instances(tag, param_max=2, k_max=1, bound=20))
            for q in rng.sample(queries, 5):
                report = verify_multiplication_continuity(q, swapped_branch_mul)
                assert report.status == STATUS_REFUTED, tag
                u, v = report.witness
                z = swapped_branch_mul(u.left, u.right, v.left, v.right)
                bad = Element(z[0], z[1], MONOID)
                true_product = multiply(q.x, q.y)
                if is_isolated(true_product):
                    assert bad != true_product
                else:
                    n, m = true_product.left[0][1], true_product.right[0][1]
                    assert not member(bad, Neighborhood(n, m, q.target_k))
        search = refutation_search(
            Element(((OMEGA, 1),), ((OMEGA, 1),), MONOID),
            Element(((OMEGA, 2),), ((OMEGA, 1),), MONOID),
            2,
            j_max=10,
            bound=10,
            product_fn=swapped_branch_mul,
        )
        assert search.status == STATUS_REFUTED and search.witness is not None
        u = Neighborhood(1, 2, 3)
        corrupted = Neighborhood(2, 1, 2)
        report = verify_inversion_map(u, corrupted, 50)
        assert report.status == STATUS_REFUTED
        assert report.witness[0] == member_element(2, 1, corrupted.k + 1)
        report2 = verify_inversion_map(u, Neighborhood(1, 2, 3), 50)
        assert report2.status == STATUS_REFUTED
        assert report2.witness[0] == center(u)
