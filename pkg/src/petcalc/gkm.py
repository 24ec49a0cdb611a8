"""Equivariant Schubert calculus on the flag variety via localization.

A cohomology class is presented by its vector of restrictions at the
torus fixed points, which are indexed by Weyl group elements. Schubert
class restrictions come from Billey's subword formula; products are
pointwise; expansion in the Schubert basis is Bruhat-triangular
back-substitution; pushforward to a point is the fixed-point sum with
inverse Euler classes.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import (
    NotDivisible,
    Polynomial,
    divide_exact,
    is_graham_positive,
)
from .rootsys import element_from_word, weyl_enumerate, word_text


class NotInSpan(ArithmeticError):
    """The class is not a Schubert-basis combination (non-GKM input)."""

    def __init__(self, message, element=None, remainder=None):
        super().__init__(message)
        self.element = element
        self.remainder = remainder


class NonPolynomialResult(ArithmeticError):
    """Fixed-point integration did not cancel denominators."""


class PositivityViolation(UserWarning):
    """A computed constant failed its positivity certificate.

    This would falsify the implementation, not the underlying theorems,
    so it is surfaced loudly instead of being swallowed.
    """


class LocalizedClass:
    """A class in equivariant cohomology, stored by fixed-point values.

    ``values`` maps Weyl elements to polynomial restrictions; absent
    entries are zero. Every stored value must be homogeneous of the
    common degree, which makes inhomogeneous inputs fail at construction
    instead of producing garbage expansions later.
    """

    __slots__ = ("rs", "degree", "values")

    def __init__(self, rs, values, degree):
        self.rs = rs
        self.degree = degree
        clean = {}
        for w, poly in values.items():
            if w.rs is not rs and w.rs.cartan != rs.cartan:
                raise ValueError("fixed point from a different root system")
            if poly.rank != rs.rank:
                raise ValueError("restriction rank differs from root system")
            if poly.is_zero():
                continue
            if not poly.is_homogeneous(degree):
                raise ValueError(
                    f"restriction at {word_text(w)} is not homogeneous "
                    f"of degree {degree}"
                )
            clean[w] = poly
        self.values = clean

    def value(self, w):
        poly = self.values.get(w)
        if poly is None:
            return Polynomial.zero(self.rs.rank)
        return poly

    def support(self):
        return sorted(self.values, key=lambda w: w.sort_key())

    def is_zero(self):
        return not self.values

    def __mul__(self, other):
        if isinstance(other, LocalizedClass):
            if self.rs.cartan != other.rs.cartan:
                raise ValueError("classes live on different flag varieties")
            values = {}
            for w, poly in self.values.items():
                q = other.values.get(w)
                if q is not None:
                    values[w] = poly * q
            return LocalizedClass(self.rs, values, self.degree + other.degree)
        if isinstance(other, Polynomial):
            if other.is_zero():
                return LocalizedClass(self.rs, {}, self.degree)
            if not other.is_homogeneous():
                raise ValueError("scaling by an inhomogeneous polynomial")
            values = {w: poly * other for w, poly in self.values.items()}
            return LocalizedClass(
                self.rs, values, self.degree + other.degree()
            )
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LocalizedClass(self.rs, {}, self.degree)
            values = {w: poly * other for w, poly in self.values.items()}
            return LocalizedClass(self.rs, values, self.degree)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("adding classes of different degrees")
        values = dict(self.values)
        for w, poly in other.values.items():
            cur = values.get(w)
            values[w] = poly if cur is None else cur + poly
        return LocalizedClass(self.rs, values, self.degree)

    def __sub__(self, other):
        return self + (other * -1)

    def __eq__(self, other):
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        return self.rs.cartan == other.rs.cartan and self.values == other.values

    def __repr__(self):
        return (
            f"LocalizedClass(degree={self.degree}, "
            f"support={len(self.values)})"
        )

    def to_json(self):
        payload = {
            "degree": self.degree,
            "values": {
                word_text(w): self.value(w).to_json() for w in self.support()
            },
        }
        if self.rs.type_label:
            payload["type"] = self.rs.type_label
        else:
            payload["cartan"] = [list(row) for row in self.rs.cartan]
        return payload


def _billey_dp(rs, word, keep=None):
    """Run the subword sum along a reduced word.

    Returns the map u -> sum over subsequences of the word that multiply
    to u (necessarily reduced) of the product of the partial-product
    images of the chosen letters. ``keep`` restricts the state space to
    weak-order prefixes of one target element.
    """
    rank = rs.rank
    forms = []
    prefix = rs.identity()
    for letter in word:
        signed = prefix.perm[rs.simple_index(letter)]
        root = rs.positive_roots[signed - 1]
        forms.append(Polynomial.linear_form(rank, root.coeffs))
        prefix = prefix * rs.simple_reflection(letter)

    states = {rs.identity(): Polynomial.one(rank)}
    for j, letter in enumerate(word):
        s = rs.simple_reflection(letter)
        form = forms[j]
        additions = []
        for u, acc in states.items():
            u2 = u * s
            if u2.length != u.length + 1:
                continue
            if keep is not None:
                # u2 must start some reduced word of the target
                rest = u2.inverse() * keep
                if u2.length + rest.length != keep.length:
                    continue
            additions.append((u2, acc * form))
        for u2, add in additions:
            cur = states.get(u2)
            states[u2] = add if cur is None else cur + add
    return states


def _fill_billey_row(rs, w):
    """Memoise the restriction of every Schubert class at w at once."""
    if w in rs._billey_rows_done:
        return
    states = _billey_dp(rs, w.word)
    memo = rs._billey
    for u, poly in states.items():
        if poly:
            memo[(u, w)] = poly
    rs._billey_rows_done.add(w)


def billey_restriction(rs, v, w, word=None):
    """Restriction of the Schubert class of v at the fixed point w.

    Billey's formula: fix a reduced word for w; sum, over subsequences
    that form a reduced word of v, the product of the roots obtained by
    applying the preceding partial product to each chosen letter. The
    result does not depend on the chosen word; passing ``word`` runs the
    sum along that word (bypassing the memo) so independence is testable.
    """
    if word is not None:
        word = tuple(int(i) for i in word)
        if len(word) != w.length or element_from_word(rs, word) != w:
            raise ValueError(f"{word} is not a reduced word for {w!r}")
        states = _billey_dp(rs, word, keep=v)
        return states.get(v, Polynomial.zero(rs.rank))
    poly = rs._billey.get((v, w))
    if poly is not None:
        return poly
    if w not in rs._billey_rows_done:
        _fill_billey_row(rs, w)
        poly = rs._billey.get((v, w))
        if poly is not None:
            return poly
    return Polynomial.zero(rs.rank)


def _billey_column(rs, w, max_size=None):
    # all fixed points where the Schubert class of w restricts nonzero
    col = rs._billey_cols.get(w)
    if col is None:
        order = weyl_enumerate(rs, max_size)
        for x in order:
            _fill_billey_row(rs, x)
        col = [
            (x, rs._billey[(w, x)])
            for x in order
            if (w, x) in rs._billey
        ]
        rs._billey_cols[w] = col
    return col


def schubert_class(rs, v, max_size=None):
    """The equivariant Schubert class of v as a localized class."""
    values = dict(_billey_column(rs, v, max_size))
    return LocalizedClass(rs, values, v.length)


def gkm_verify(f, max_size=None):
    """Check the divisibility conditions cutting out the image of
    localization: for every fixed point w and positive root b, the
    difference of values at w and at w*r_b must be divisible by the
    linear form w(b).
    """
    rs = f.rs
    order = weyl_enumerate(rs, max_size)
    n = rs.num_positive_roots()
    for w in order:
        fw = f.value(w)
        for k in range(n):
            x = w * rs.reflection(k)
            diff = fw - f.value(x)
            if diff.is_zero():
                continue
            signed = w.perm[k]
            root = rs.positive_roots[abs(signed) - 1]
            form = Polynomial.linear_form(rs.rank, root.coeffs)
            try:
                divide_exact(diff, form)
            except NotDivisible:
                return False
    return True


def class_product(f, g):
    """Pointwise product of localized classes."""
    return f * g


def expand_in_schubert_basis(f, max_size=None):
    """Coefficients d_w with f equal to the sum of d_w times the Schubert
    class of w.

    Works up the Bruhat order: at the shortest fixed point carrying a
    nonzero residual only its own Schubert class can contribute, so the
    coefficient there is the residual divided by the diagonal restriction
    (the division must be exact). Subtracting and repeating terminates
    because Schubert classes are supported above their index.
    """
    rs = f.rs
    order = weyl_enumerate(rs, max_size)
    residual = dict(f.values)
    coeffs = {}
    for w in order:
        r = residual.get(w)
        if r is None or r.is_zero():
            continue
        diagonal = billey_restriction(rs, w, w)
        try:
            d = divide_exact(r, diagonal)
        except NotDivisible as exc:
            raise NotInSpan(
                f"residual at {word_text(w)} is not a multiple of the "
                "diagonal restriction; the input is not in the span",
                element=w,
                remainder=exc.remainder,
            ) from exc
        coeffs[w] = d
        for x, val in _billey_column(rs, w, max_size):
            cur = residual.get(x)
            new = (cur - d * val) if cur is not None else -(d * val)
            if new.is_zero():
                residual.pop(x, None)
            else:
                residual[x] = new
    leftover = {w for w, r in residual.items() if not r.is_zero()}
    if leftover:
        w = min(leftover, key=lambda e: e.sort_key())
        raise NotInSpan(
            f"nonzero residual survived at {word_text(w)}",
            element=w,
            remainder=residual[w],
        )
    return coeffs


def structure_constants(rs, u, v, max_size=None):
    """Expansion coefficients of the product of two Schubert classes.

    Each coefficient is checked against the simple-root positivity
    certificate; a failure raises a PositivityViolation warning rather
    than an exception, since the honest value is still returned.
    """
    product = schubert_class(rs, u, max_size) * schubert_class(rs, v, max_size)
    coeffs = expand_in_schubert_basis(product, max_size)
    for w, c in coeffs.items():
        if not is_graham_positive(c):
            warnings.warn(
                PositivityViolation(
                    f"coefficient at {word_text(w)} for the product of "
                    f"{word_text(u)} and {word_text(v)} has a negative "
                    f"monomial: {c.text()}"
                )
            )
    return coeffs


@dataclass
class StructTable:
    """Structure constants for all pairs of Schubert classes.

    ``entries`` maps (u, v, w) to the (nonzero) polynomial coefficient;
    absent triples are zero.
    """

    rs: object
    entries: dict = field(default_factory=dict)

    def coefficient(self, u, v, w):
        poly = self.entries.get((u, v, w))
        if poly is None:
            return Polynomial.zero(self.rs.rank)
        return poly

    def rows(self):
        """Triples in deterministic order: (u, v, w, coefficient)."""
        keys = sorted(
            self.entries,
            key=lambda k: (k[0].sort_key(), k[1].sort_key(), k[2].sort_key()),
        )
        return [(u, v, w, self.entries[(u, v, w)]) for u, v, w in keys]


def structure_table(rs, jobs=1, max_size=None):
    """The full structure-constant table, one entry per (u, v, w).

    Pairs are computed independently (in parallel when jobs > 1) and
    merged in a fixed order, so the output does not depend on the worker
    count. The product is commutative, so each unordered pair is computed
    once and mirrored.
    """
    order = weyl_enumerate(rs, max_size)
    for x in order:
        _fill_billey_row(rs, x)
    pairs = [
        (order[i], order[j])
        for i in range(len(order))
        for j in range(i, len(order))
    ]

    def work(pair):
        return structure_constants(rs, pair[0], pair[1], max_size)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, pairs))
    else:
        results = [work(pair) for pair in pairs]

    entries = {}
    for (u, v), coeffs in zip(pairs, results):
        for w, c in coeffs.items():
            entries[(u, v, w)] = c
            if u != v:
                entries[(v, u, w)] = c
    return StructTable(rs, entries)


def integrate(f, max_size=None):
    """Pushforward to a point by the fixed-point localization formula.

    The Euler class at w is the product of -w(b) over positive roots b,
    which is the sign (-1)^(length of w) times the fixed product of all
    positive roots, up to the global sign (-1)^(number of positive
    roots). The sum over fixed points therefore reduces to one exact
    division of the alternating sum of restrictions by the product of
    all positive roots; failure of that division signals non-GKM input.
    """
    rs = f.rs
    order = weyl_enumerate(rs, max_size)
    total = Polynomial.zero(rs.rank)
    for w in order:
        poly = f.values.get(w)
        if poly is None:
            continue
        total = total + (poly if w.length % 2 == 0 else -poly)
    if total.is_zero():
        return total
    denominator = Polynomial.one(rs.rank)
    for root in rs.positive_roots:
        denominator = denominator * Polynomial.linear_form(
            rs.rank, root.coeffs
        )
    try:
        quotient = divide_exact(total, denominator)
    except NotDivisible as exc:
        raise NonPolynomialResult(
            "fixed-point sum is not a polynomial; the input does not "
            "satisfy the localization conditions"
        ) from exc
    if rs.num_positive_roots() % 2:
        quotient = -quotient
    return quotient


def forget_to_ordinary(table):
    """Degree-zero part of a structure table: the ordinary-cohomology
    structure constants, as nonnegative integers."""
    rank = table.rs.rank
    origin = (0,) * rank
    out = {}
    for (u, v, w), poly in table.entries.items():
        if u.length + v.length != w.length:
            continue
        extra = [e for e in poly.terms if e != origin]
        if extra:
            raise ValueError(
                f"degree-zero entry at ({word_text(u)}, {word_text(v)}, "
                f"{word_text(w)}) is not constant"
            )
        c = poly.terms.get(origin, 0)
        if not isinstance(c, int):
            raise ValueError(
                f"ordinary structure constant at ({word_text(u)}, "
                f"{word_text(v)}, {word_text(w)}) is not an integer: {c}"
            )
        if c:
            out[(u, v, w)] = c
    return out
