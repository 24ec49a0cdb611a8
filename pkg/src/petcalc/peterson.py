"""Peterson Schubert calculus via restriction to Peterson fixed points.

The circle-equivariant cohomology of the Peterson variety has one fixed
point per subset K of the simple roots, namely the longest element of
the parabolic subgroup on K. Pulling back the Schubert class of a
Coxeter element for K and restricting every simple root to the common
parameter t gives the basis class for K; everything else (expansions,
structure constants, pullbacks of general Schubert classes) is
inclusion-triangular back-substitution over those fixed-point values.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .gkm import (
    NotInSpan,
    PositivityViolation,
    billey_restriction,
    structure_constants,
)
from .poly import NotDivisible, PolyT, divide_exact, specialize_to_t
from .rootsys import coxeter_element, longest_element


def subset_text(members):
    """Canonical rendering of a subset of simple indices: "1,3" or ""."""
    return ",".join(str(i) for i in sorted(members))


def all_subsets(rs):
    """Every subset of the simple roots, ordered by size then indices."""
    out = []
    for size in range(rs.rank + 1):
        for combo in combinations(range(1, rs.rank + 1), size):
            out.append(frozenset(combo))
    return out


def peterson_fixed_point(rs, members):
    """The fixed point indexed by K: the longest element of the
    parabolic subgroup on K."""
    return longest_element(rs, members)


class PetersonClass:
    """A class presented by its values at the Peterson fixed points.

    ``values`` maps subsets of simple indices (frozensets) to univariate
    polynomials in t; absent entries are zero. Values must be monomials
    of the common degree, which is what restriction of homogeneous
    classes produces here.
    """

    __slots__ = ("rs", "degree", "values")

    def __init__(self, rs, values, degree):
        self.rs = rs
        self.degree = degree
        clean = {}
        for members, poly in values.items():
            members = frozenset(members)
            if poly.is_zero():
                continue
            if not poly.is_homogeneous(degree):
                raise ValueError(
                    f"value at {{{subset_text(members)}}} is not a "
                    f"monomial of degree {degree}"
                )
            clean[members] = poly
        self.values = clean

    def value(self, members):
        poly = self.values.get(frozenset(members))
        if poly is None:
            return PolyT.zero()
        return poly

    def is_zero(self):
        return not self.values

    def __mul__(self, other):
        if isinstance(other, PetersonClass):
            if self.rs.cartan != other.rs.cartan:
                raise ValueError("classes live on different varieties")
            values = {}
            for members, poly in self.values.items():
                q = other.values.get(members)
                if q is not None:
                    values[members] = poly * q
            return PetersonClass(
                self.rs, values, self.degree + other.degree
            )
        if isinstance(other, int):
            if other == 0:
                return PetersonClass(self.rs, {}, self.degree)
            values = {m: poly * other for m, poly in self.values.items()}
            return PetersonClass(self.rs, values, self.degree)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PetersonClass):
            return NotImplemented
        return (
            self.rs.cartan == other.rs.cartan
            and self.values == other.values
        )

    def __repr__(self):
        return (
            f"PetersonClass(degree={self.degree}, "
            f"support={len(self.values)})"
        )


@dataclass
class PetersonExpansion:
    """Coefficients of an expansion in the Peterson basis."""

    coeffs: dict

    def coeff(self, members):
        poly = self.coeffs.get(frozenset(members))
        if poly is None:
            return PolyT.zero()
        return poly

    def support(self):
        return sorted(self.coeffs, key=lambda m: (len(m), sorted(m)))

    def __eq__(self, other):
        if not isinstance(other, PetersonExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs


def _order_key(order):
    return order if isinstance(order, str) else tuple(order)


def peterson_class(rs, members, order="increasing"):
    """The basis class for a subset K of the simple roots.

    Its value at the fixed point for J is the Billey restriction of the
    Coxeter element for K at the longest element of the parabolic on J,
    with every simple root specialised to t. Values vanish unless K is
    contained in J (support triangularity), and the value at K itself is
    a nonzero monomial of degree the size of K.
    """
    members = frozenset(int(i) for i in members)
    key = (_order_key(order), members)
    cached = rs._peterson_classes.get(key)
    if cached is not None:
        return cached
    if members:
        v = coxeter_element(rs, members, order)
    else:
        v = rs.identity()
    values = {}
    for subset in all_subsets(rs):
        w = longest_element(rs, subset)
        poly = specialize_to_t(billey_restriction(rs, v, w))
        if poly:
            values[subset] = poly
    result = PetersonClass(rs, values, len(members))
    rs._peterson_classes[key] = result
    return result


def expand_in_peterson_basis(f, order="increasing"):
    """Coefficients d_K with f equal to the sum of d_K times the basis
    class for K.

    Back-substitution over subsets by increasing size: at an
    inclusion-minimal subset with nonzero residual only its own basis
    class contributes, so the coefficient is the residual divided by the
    diagonal value (exact division in t required). Not-in-span inputs
    surface as failed divisions.
    """
    rs = f.rs
    residual = dict(f.values)
    coeffs = {}
    for members in all_subsets(rs):
        r = residual.get(members)
        if r is None or r.is_zero():
            continue
        basis = peterson_class(rs, members, order)
        try:
            d = divide_exact(r, basis.value(members))
        except NotDivisible as exc:
            raise NotInSpan(
                f"residual at {{{subset_text(members)}}} is not a multiple "
                "of the diagonal value",
                element=members,
                remainder=exc.remainder,
            ) from exc
        coeffs[members] = d
        for subset, val in basis.values.items():
            cur = residual.get(subset)
            new = (cur - d * val) if cur is not None else -(d * val)
            if new.is_zero():
                residual.pop(subset, None)
            else:
                residual[subset] = new
    return PetersonExpansion(coeffs)


def peterson_structure_constants(rs, members_i, members_j, order="increasing"):
    """Structure constants of the product of two basis classes.

    Each coefficient should be a nonnegative monomial in t, homogeneous
    of degree |I| + |J| - |K|; a negative coefficient is diagnosed with a
    PositivityViolation warning (it would falsify the implementation).
    """
    p_i = peterson_class(rs, members_i, order)
    p_j = peterson_class(rs, members_j, order)
    expansion = expand_in_peterson_basis(p_i * p_j, order)
    for members, poly in expansion.coeffs.items():
        if any(c < 0 for c in poly.coeffs):
            warnings.warn(
                PositivityViolation(
                    f"coefficient at {{{subset_text(members)}}} for "
                    f"{{{subset_text(members_i)}}} * "
                    f"{{{subset_text(members_j)}}} is negative: {poly.text()}"
                )
            )
    return expansion


def pullback_expansion(rs, w, order="increasing"):
    """Expansion of the pullback of the Schubert class of w.

    Restricts the class at every Peterson fixed point (Billey plus
    specialisation to t) and expands in the basis. Each coefficient is a
    single monomial in t of degree length(w) - |K| with nonnegative
    coefficient.
    """
    key = (w, _order_key(order))
    cached = rs._pullbacks.get(key)
    if cached is not None:
        return cached
    values = {}
    for subset in all_subsets(rs):
        x = longest_element(rs, subset)
        poly = specialize_to_t(billey_restriction(rs, w, x))
        if poly:
            values[subset] = poly
    cls = PetersonClass(rs, values, w.length)
    expansion = expand_in_peterson_basis(cls, order)
    rs._pullbacks[key] = expansion
    return expansion


def _is_interval(members):
    if not members:
        return False
    lo, hi = min(members), max(members)
    return len(members) == hi - lo + 1


def _multinomial(n, parts):
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    value = factorial(n)
    for p in parts:
        value //= factorial(p)
    return value


def closed_form_coefficient(members_i, members_j, members_k):
    """Closed-form structure constant for consecutive intervals in type A.

    With a = |I| + |J| - |K|, head H and tail T the largest and smallest
    members of an interval, the coefficient is

        a! * multi(H_I - T_J + 1; a, T_I - T_K, H_K - H_J)
           * multi(H_J - T_I + 1; a, T_J - T_K, H_K - H_I) * t^a,

    where a multinomial with parts that are negative or do not sum to
    the top argument is zero. Preconditions (nonempty consecutive
    intervals, K containing both, |K| at most |I| + |J|) are rejected,
    not silently zeroed.
    """
    I = frozenset(int(i) for i in members_i)
    J = frozenset(int(i) for i in members_j)
    K = frozenset(int(i) for i in members_k)
    for name, members in (("I", I), ("J", J), ("K", K)):
        if not _is_interval(members):
            raise ValueError(
                f"{name} = {{{subset_text(members)}}} is not a nonempty "
                "consecutive interval"
            )
    if not (I | J) <= K:
        raise ValueError("K must contain the union of I and J")
    a = len(I) + len(J) - len(K)
    if a < 0:
        raise ValueError("|K| must be at most |I| + |J|")
    head_i, tail_i = max(I), min(I)
    head_j, tail_j = max(J), min(J)
    head_k, tail_k = max(K), min(K)
    m1 = _multinomial(
        head_i - tail_j + 1, (a, tail_i - tail_k, head_k - head_j)
    )
    m2 = _multinomial(
        head_j - tail_i + 1, (a, tail_j - tail_k, head_k - head_i)
    )
    return PolyT.monomial(factorial(a) * m1 * m2, a)


def _consecutive_intervals(rank):
    return [
        frozenset(range(lo, hi + 1))
        for lo in range(1, rank + 1)
        for hi in range(lo, rank + 1)
    ]


@dataclass
class CrossValidationEntry:
    members_i: frozenset
    members_j: frozenset
    members_k: frozenset
    computed: PolyT
    formula: PolyT

    @property
    def matches(self):
        return self.computed == self.formula

    def to_json(self):
        return {
            "I": subset_text(self.members_i),
            "J": subset_text(self.members_j),
            "K": subset_text(self.members_k),
            "computed": self.computed.to_json(),
            "formula": self.formula.to_json(),
            "match": self.matches,
        }


@dataclass
class CrossValidationReport:
    rank: int
    entries: list

    @property
    def failures(self):
        return [e for e in self.entries if not e.matches]

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {
            "rank": self.rank,
            "checked": len(self.entries),
            "failed": len(self.failures),
            "ok": self.ok,
            "entries": [e.to_json() for e in self.entries],
        }


def cross_validate(rs, bound=4, order="increasing"):
    """Compare localization-computed structure constants against the
    closed form on every admissible consecutive triple (I, J, K).

    Type A only; the rank must not exceed ``bound``. Mismatches become
    report entries rather than exceptions.
    """
    from .rootsys import is_type_a

    if not is_type_a(rs):
        raise ValueError("the closed form applies to type A root systems")
    if rs.rank > bound:
        raise ValueError(
            f"rank {rs.rank} exceeds the cross-validation bound {bound}"
        )
    intervals = _consecutive_intervals(rs.rank)
    entries = []
    for members_i in intervals:
        for members_j in intervals:
            expansion = peterson_structure_constants(
                rs, members_i, members_j, order
            )
            union = members_i | members_j
            for members_k in intervals:
                if not union <= members_k:
                    continue
                if len(members_k) > len(members_i) + len(members_j):
                    continue
                formula = closed_form_coefficient(
                    members_i, members_j, members_k
                )
                entries.append(
                    CrossValidationEntry(
                        members_i,
                        members_j,
                        members_k,
                        expansion.coeff(members_k),
                        formula,
                    )
                )
    return CrossValidationReport(rs.rank, entries)


def peterson_table(rs, jobs=1, order="increasing"):
    """Structure constants for every pair of subsets, as sorted rows
    (I, J, K, coefficient).

    Pairs are independent; with jobs > 1 they run on a worker pool and
    are merged in a fixed order, so output does not depend on the worker
    count. Products commute, so each unordered pair is computed once.
    """
    subsets = all_subsets(rs)
    pairs = [
        (subsets[i], subsets[j])
        for i in range(len(subsets))
        for j in range(i, len(subsets))
    ]

    def work(pair):
        return peterson_structure_constants(rs, pair[0], pair[1], order)

    # warm the shared basis-class memo so workers only multiply/expand
    for members in subsets:
        peterson_class(rs, members, order)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, pairs))
    else:
        results = [work(pair) for pair in pairs]

    rows = []
    for (members_i, members_j), expansion in zip(pairs, results):
        ordered = [(members_i, members_j)]
        if members_i != members_j:
            ordered.append((members_j, members_i))
        for mi, mj in ordered:
            for members_k in expansion.support():
                rows.append(
                    (mi, mj, members_k, expansion.coeff(members_k))
                )
    rows.sort(
        key=lambda r: (
            (len(r[0]), sorted(r[0])),
            (len(r[1]), sorted(r[1])),
            (len(r[2]), sorted(r[2])),
        )
    )
    return rows


@dataclass
class ConsistencyReport:
    """Result of replaying Peterson products through the flag variety."""

    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def flag_consistency_report(rs, order="increasing", max_size=None):
    """Check that Peterson structure constants agree with the route
    through the ambient flag variety: multiply the two Schubert classes
    there, expand, pull every term back, and collect coefficients.
    """
    checked = 0
    failures = []
    subsets = all_subsets(rs)
    for members_i in subsets:
        v_i = (
            coxeter_element(rs, members_i, order)
            if members_i
            else rs.identity()
        )
        for members_j in subsets:
            v_j = (
                coxeter_element(rs, members_j, order)
                if members_j
                else rs.identity()
            )
            direct = peterson_structure_constants(
                rs, members_i, members_j, order
            )
            via = {}
            for w, c in structure_constants(rs, v_i, v_j, max_size).items():
                ct = specialize_to_t(c)
                for members_k, b in pullback_expansion(rs, w, order).coeffs.items():
                    cur = via.get(members_k)
                    term = ct * b
                    via[members_k] = term if cur is None else cur + term
            via = {k: p for k, p in via.items() if not p.is_zero()}
            checked += 1
            if via != direct.coeffs:
                failures.append(
                    f"I={{{subset_text(members_i)}}} "
                    f"J={{{subset_text(members_j)}}}"
                )
    return ConsistencyReport(checked, failures)
