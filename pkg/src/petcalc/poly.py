"""Exact sparse polynomial arithmetic for root-system calculations.

Two coefficient rings appear throughout: multivariate polynomials in the
simple-root symbols a1..ad with rational coefficients, and univariate
polynomials in t, the common restriction of every simple root to the
one-dimensional subtorus used in Peterson calculus. All arithmetic is
exact; no floating point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class NotDivisible(ArithmeticError):
    """Exact division failed; ``remainder`` holds the nonzero remainder."""

    def __init__(self, remainder, message="exact division left a remainder"):
        super().__init__(message)
        self.remainder = remainder


def _norm(c):
    # plain ints are much faster than Fraction; downgrade whenever exact
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _num_den(c):
    if isinstance(c, Fraction):
        return c.numerator, c.denominator
    return c, 1


def _coeff_from_pair(num, den):
    if den == 1:
        return num
    return Fraction(num, den)


class Polynomial:
    """Sparse multivariate polynomial in the simple-root symbols a1..ad.

    ``terms`` maps exponent vectors (tuples of nonnegative ints, one slot
    per simple root) to nonzero rational coefficients. Instances are
    treated as immutable values; all operations return fresh objects.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = _norm(c)
                if c:
                    clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def constant(cls, rank, c):
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def one(cls, rank):
        return cls.constant(rank, 1)

    @classmethod
    def variable(cls, rank, i):
        """The simple-root symbol a_i, 1-indexed."""
        exps = [0] * rank
        exps[i - 1] = 1
        return cls(rank, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, rank, coeffs):
        """The linear combination sum(coeffs[i] * a_{i+1})."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * rank
                exps[i] = 1
                terms[tuple(exps)] = c
        return cls(rank, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None):
        """True if all monomials share one total degree (zero counts)."""
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise ValueError(
                f"rank mismatch: {self.rank} vs {other.rank}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.rank, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_rank(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            cur = terms.get(exps)
            if cur is None:
                terms[exps] = c
            else:
                new = cur + c
                if new:
                    terms[exps] = new
                else:
                    del terms[exps]
        out = Polynomial.__new__(Polynomial)
        out.rank = self.rank
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.rank = self.rank
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.rank, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return Polynomial.zero(self.rank)
            out = Polynomial.__new__(Polynomial)
            out.rank = self.rank
            out.terms = {e: _norm(c * other) for e, c in self.terms.items()}
            return out
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_rank(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                cur = terms.get(exps)
                if cur is None:
                    terms[exps] = c1 * c2
                else:
                    new = cur + c1 * c2
                    if new:
                        terms[exps] = new
                    else:
                        del terms[exps]
        out = Polynomial.__new__(Polynomial)
        out.rank = self.rank
        out.terms = {e: _norm(c) for e, c in terms.items()}
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.rank, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __repr__(self):
        return f"Polynomial({self.text()!r})"

    def text(self):
        """Canonical rendering, e.g. "a1*a2 + a1^2".

        Monomials are ordered by ascending lexicographic exponent vector;
        the rendering is bit-identical across runs.
        """
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                f"a{i + 1}" if p == 1 else f"a{i + 1}^{p}"
                for i, p in enumerate(exps)
                if p
            )
            parts.append((c, mono))
        pieces = []
        for k, (c, mono) in enumerate(parts):
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def to_json(self):
        """JSON form: [[exponent vector, numerator, denominator], ...]."""
        out = []
        for exps in sorted(self.terms):
            num, den = _num_den(self.terms[exps])
            out.append([list(exps), num, den])
        return out

    @classmethod
    def from_json(cls, rank, data):
        terms = {}
        for entry in data:
            exps, num, den = entry
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for rank {rank}")
            terms[exps] = _coeff_from_pair(int(num), int(den))
        return cls(rank, terms)


class PolyT:
    """Univariate polynomial in the Peterson parameter t.

    ``coeffs[k]`` is the rational coefficient of t^k; trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_norm(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, c, power):
        return cls((0,) * power + (c,))

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        """Degree in t; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_homogeneous(self, degree=None):
        nonzero = [k for k, c in enumerate(self.coeffs) if c]
        if not nonzero:
            return True
        if len(nonzero) > 1:
            return False
        return degree is None or nonzero[0] == degree

    def is_monomial(self):
        """True for c*t^k (zero counts as a monomial)."""
        return self.is_homogeneous()

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyT((other,))
        if not isinstance(other, PolyT):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            a[k] = a[k] + c
        return PolyT(a)

    __radd__ = __add__

    def __neg__(self):
        return PolyT(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyT((other,))
        if not isinstance(other, PolyT):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyT(tuple(c * other for c in self.coeffs))
        if not isinstance(other, PolyT):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyT()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return PolyT(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyT((other,))
        if not isinstance(other, PolyT):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"PolyT({self.text()!r})"

    def text(self):
        """Canonical rendering, e.g. "2*t^1" or "2"; powers ascend."""
        if not self.coeffs:
            return "0"
        pieces = []
        first = True
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = f"t^{k}"
            else:
                body = f"{mag}*t^{k}"
            if first:
                pieces.append(f"-{body}" if neg else body)
                first = False
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def to_json(self):
        """JSON form: [[power, numerator, denominator], ...]."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                num, den = _num_den(c)
                out.append([k, num, den])
        return out

    @classmethod
    def from_json(cls, data):
        coeffs = {}
        for entry in data:
            k, num, den = entry
            coeffs[int(k)] = _coeff_from_pair(int(num), int(den))
        if not coeffs:
            return cls()
        top = max(coeffs)
        return cls(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def _leading(poly):
    # graded-lex leading term: max total degree, then max exponent vector
    exps = max(poly.terms, key=lambda e: (sum(e), e))
    return exps, poly.terms[exps]


def _divide_poly(num, den):
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    num._check_rank(den)
    if num.is_zero():
        return Polynomial.zero(num.rank)
    lead_e, lead_c = _leading(den)
    quot = {}
    rem = dict(num.terms)
    while rem:
        rpoly = Polynomial(num.rank, rem)
        re, rc = _leading(rpoly)
        diff = tuple(a - b for a, b in zip(re, lead_e))
        if any(d < 0 for d in diff):
            raise NotDivisible(rpoly)
        qc = _norm(Fraction(rc) / Fraction(lead_c))
        quot[diff] = quot.get(diff, 0) + qc
        for e, c in den.terms.items():
            shifted = tuple(a + b for a, b in zip(e, diff))
            cur = rem.get(shifted, 0)
            new = cur - qc * c
            if new:
                rem[shifted] = new
            else:
                rem.pop(shifted, None)
    return Polynomial(num.rank, quot)


def _divide_polyt(num, den):
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return PolyT()
    dn, dd = num.degree(), den.degree()
    if dn < dd:
        raise NotDivisible(num)
    rem = list(num.coeffs)
    lead = den.coeffs[-1]
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = _norm(Fraction(rem[k + dd]) / Fraction(lead))
        quot[k] = c
        if c:
            for j, b in enumerate(den.coeffs):
                rem[k + j] -= c * b
    if any(rem):
        raise NotDivisible(PolyT(rem))
    return PolyT(quot)


def divide_exact(num, den):
    """Exact quotient with q * den == num, or raise NotDivisible.

    Works for both Polynomial (leading-term reduction under graded-lex
    order) and PolyT (long division); the two operands must be of the
    same kind.
    """
    if isinstance(num, PolyT) and isinstance(den, PolyT):
        return _divide_polyt(num, den)
    if isinstance(num, Polynomial) and isinstance(den, Polynomial):
        return _divide_poly(num, den)
    raise TypeError("operands must both be Polynomial or both be PolyT")


def specialize_to_t(poly):
    """Substitute every simple-root symbol by t.

    This is the ring map induced by restricting the torus action to the
    one-dimensional subtorus on which all simple roots agree.
    """
    acc = {}
    for exps, c in poly.terms.items():
        k = sum(exps)
        acc[k] = acc.get(k, 0) + c
    if not acc:
        return PolyT()
    top = max(acc)
    return PolyT(tuple(acc.get(k, 0) for k in range(top + 1)))


def is_graham_positive(poly):
    """True iff every monomial coefficient is nonnegative.

    For restriction polynomials and structure constants this certifies
    Graham positivity: the simple roots are positive roots, and every
    positive root is a nonnegative combination of them.
    """
    if isinstance(poly, PolyT):
        return all(c >= 0 for c in poly.coeffs)
    return all(c >= 0 for c in poly.terms.values())
