"""Exact arithmetic on ordinals below epsilon_0, in hereditary Cantor normal form.

An ordinal is a tuple of CNF terms.  A term is a pair ``(exponent, coefficient)``
where the exponent is itself an ordinal tuple and the coefficient is a positive
int; terms are kept in strictly decreasing exponent order.  ``()`` denotes 0:

    0            ()
    5            (((), 5),)
    w            ((ONE, 1),)
    w^w*2 + 3    ((OMEGA, 2), ((), 3))

The layout is chosen so that Python's built-in tuple ordering coincides with
the ordinal order: term sequences compare lexicographically, terms compare by
exponent first (recursively the same rule), and a proper prefix is smaller.
``x < y``, ``x == y`` and ``hash(x)`` therefore act directly on the
representation; :func:`compare` is a thin wrapper kept for explicitness.

Everything here is an immutable value and every operation is a pure function.
Ordinal multiplication/exponentiation of arbitrary ordinals is deliberately
absent; natural coefficients inside terms cover every product this package
needs.
"""

__all__ = [
    "ZERO",
    "ONE",
    "OMEGA",
    "OrdinalSyntaxError",
    "SubtractionUndefinedError",
    "add",
    "cnf_terms",
    "compare",
    "fmt",
    "is_additively_indecomposable",
    "is_finite",
    "is_limit",
    "make",
    "nat",
    "omega_pow",
    "order_type_oracle",
    "parse",
    "split_at",
    "subtract",
    "to_int",
    "validate",
]

ZERO = ()
ONE = ((ZERO, 1),)
OMEGA = ((ONE, 1),)


class SubtractionUndefinedError(ArithmeticError):
    """Raised for x - y with y > x: no ordinal c satisfies y + c = x."""


class OrdinalSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def nat(n):
    """The finite ordinal n."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"natural number expected, got {n!r}")
    return () if n == 0 else (((), n),)


def omega_pow(e):
    """w raised to the ordinal e; omega_pow(ZERO) is 1."""
    return ((e, 1),)


def validate(x):
    """Check the hereditary CNF invariants, returning x unchanged."""
    if not isinstance(x, tuple):
        raise TypeError(f"ordinal must be a tuple of terms, got {type(x).__name__}")
    prev = None
    for term in x:
        if not (isinstance(term, tuple) and len(term) == 2):
            raise ValueError(f"malformed CNF term {term!r}")
        e, c = term
        validate(e)
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"coefficient must be a positive int, got {c!r}")
        if prev is not None and not prev > e:
            raise ValueError("exponents must be strictly decreasing")
        prev = e
    return x


def make(terms):
    """Normalize an arbitrary multiset of (exponent, coefficient) pairs.

    Equal exponents are merged, zero coefficients dropped, and the result is
    sorted into strictly decreasing exponent order.  Normalizing an already
    normalized ordinal is the identity.
    """
    acc = {}
    for e, c in terms:
        validate(e)
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"coefficient must be a non-negative int, got {c!r}")
        acc[e] = acc.get(e, 0) + c
    return tuple((e, c) for e, c in sorted(acc.items(), reverse=True) if c)


def compare(x, y):
    """Total order on ordinals: -1, 0 or 1.  Equivalent to tuple comparison."""
    if x < y:
        return -1
    return 1 if x > y else 0


def add(x, y):
    """Ordinal sum x + y.

    Terms of x below the leading exponent of y are absorbed; a term of x whose
    exponent equals y's leading exponent merges coefficients.
    """
    if not y:
        return x
    if not x:
        return y
    e = y[0][0]
    i = len(x)
    while i and x[i - 1][0] < e:
        i -= 1
    if i and x[i - 1][0] == e:
        return x[: i - 1] + ((e, x[i - 1][1] + y[0][1]),) + y[1:]
    return x[:i] + y


def subtract(x, y):
    """The unique c with y + c = x.  Defined only for y <= x."""
    if y > x:
        raise SubtractionUndefinedError(f"subtraction undefined: {fmt(y)} > {fmt(x)}")
    for i, term in enumerate(y):
        if x[i] != term:
            ex, cx = x[i]
            ey, cy = term
            if ex == ey:
                # cx > cy here, otherwise y > x would have held
                return ((ex, cx - cy),) + x[i + 1 :]
            return x[i:]
    return x[len(y) :]


def is_limit(x):
    """True iff x is nonzero and has no immediate predecessor."""
    return bool(x) and x[-1][0] != ()


def is_additively_indecomposable(x):
    """True iff x is a power of w, i.e. nonzero and not a sum of two smaller ordinals."""
    return len(x) == 1 and x[0][1] == 1


def is_finite(x):
    return x == () or (len(x) == 1 and x[0][0] == ())


def to_int(x):
    if x == ():
        return 0
    if len(x) == 1 and x[0][0] == ():
        return x[0][1]
    raise ValueError(f"{fmt(x)} is not a finite ordinal")


def cnf_terms(x):
    """The normalized term sequence of x (the representation itself)."""
    return x


def split_at(x, e):
    """Split x = w^e * c + rest with rest < w^e, returning (c, rest).

    Requires x < w^(e+1), i.e. no term of x may exceed exponent e.
    """
    if x and x[0][0] > e:
        raise ValueError(f"{fmt(x)} has a term above exponent {fmt(e)}")
    if x and x[0][0] == e:
        return x[0][1], x[1:]
    return 0, x


# --------------------------------------------------------------------------
# Text form.
#
# ordinal := "0" | term ("+" term)*
# term    := nat | "w" ["^" atom] ["*" nat]
# atom    := nat | "w" | "(" ordinal ")"
#
# Whitespace is insignificant.  fmt() emits the normalized form and
# parse(fmt(x)) == x for every ordinal x.  parse() evaluates the written sum
# left to right, so unordered or mergeable input terms normalize away.
# --------------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise OrdinalSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self, allow_zero):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        value = int(self.text[start : self.pos])
        if value == 0 and not allow_zero:
            self.pos = start
            self.error("coefficient must be at least 1")
        return value

    def atom(self):
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            return OMEGA
        if ch == "(":
            self.pos += 1
            inner = self.ordinal()
            self.take(")")
            return inner
        return nat(self.nat(allow_zero=True))

    def term(self):
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            exponent = ONE
            if self.peek() == "^":
                self.pos += 1
                exponent = self.atom()
            coefficient = 1
            if self.peek() == "*":
                self.pos += 1
                coefficient = self.nat(allow_zero=False)
            return ((exponent, coefficient),)
        if ch.isdigit():
            return nat(self.nat(allow_zero=False))
        self.error("expected a term")

    def ordinal(self):
        if self.peek() == "0":
            mark = self.pos
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos = mark
                self.error("coefficient must be at least 1")
            return ZERO
        value = self.term()
        while self.peek() == "+":
            self.pos += 1
            value = add(value, self.term())
        return value


def parse(text):
    """Parse the ASCII ordinal notation ('w' stands for the first infinite ordinal)."""
    p = _Parser(text)
    value = p.ordinal()
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return value


def _fmt_exponent(e):
    if e == ONE:
        return ""
    if is_finite(e):
        return f"^{to_int(e)}"
    if e == OMEGA:
        return "^w"
    return f"^({fmt(e)})"


def fmt(x):
    """Normalized text form; parse(fmt(x)) == x."""
    if not x:
        return "0"
    parts = []
    for e, c in x:
        if e == ():
            parts.append(str(c))
        elif c == 1:
            parts.append("w" + _fmt_exponent(e))
        else:
            parts.append(f"w{_fmt_exponent(e)}*{c}")
    return " + ".join(parts)


# --------------------------------------------------------------------------
# Brute-force order-type oracle for ordinals below w^3.
#
# An ordinal below w^3 names the lexicographic order on the triples beneath
# its CNF triple.  The oracle lays both summands out as block sequences
# (copies of w^2, copies of w, then a finite block), concatenates them, and
# reads the order type of the combined sequence back off by counting, twice
# over, the points without an immediate predecessor.  It never touches the
# CNF addition rules above, which is the point: it is the independent check.
# --------------------------------------------------------------------------

_TWO = (((), 2),)


def _segments(x):
    segs = []
    for e, c in x:
        if e == ():
            segs.append(("f", c))
        elif e == ONE:
            segs.append(("w", c))
        elif e == _TWO:
            segs.append(("w2", c))
        else:
            raise ValueError(f"order-type oracle is only defined below w^3, got {fmt(x)}")
    return segs


def _strip_finite_tail(segs):
    total = 0
    while segs and segs[-1][0] == "f":
        total += segs[-1][1]
        segs = segs[:-1]
    return total, segs


def _limit_points(segs):
    """The sub-well-order of points with no immediate predecessor (the global
    minimum counts: nothing precedes it)."""
    out = []
    at_limit = True
    for kind, count in segs:
        if kind == "f":
            if at_limit:
                out.append(("f", 1))
            at_limit = False
        elif kind == "w":
            starts = count if at_limit else count - 1
            if starts:
                out.append(("f", starts))
            at_limit = True
        else:  # one w^2 copy contributes w block starts, regardless of context
            out.append(("w", count))
            at_limit = True
    return out


def _finite_size(segs):
    if any(kind != "f" for kind, _ in segs):
        raise ValueError("order type is not below w^3")
    return sum(count for _, count in segs)


def order_type_oracle(x, y):
    """Order type of a copy of x followed by a copy of y, for x, y < w^3."""
    segs = _segments(x) + _segments(y)
    ones, segs = _strip_finite_tail(segs)
    segs = _limit_points(segs)
    omegas, segs = _strip_finite_tail(segs)
    omega_squares = _finite_size(_limit_points(segs))
    return make(((_TWO, omega_squares), (ONE, omegas), ((), ones)))
