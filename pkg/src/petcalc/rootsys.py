"""Finite root systems from Cartan matrices and their Weyl groups.

Roots live in the simple-root coordinate basis, so a root is an integer
vector of length ``rank`` and the simple reflections act through the
Cartan matrix. Weyl group elements are canonicalised by their action on
the positive-root list (a signed permutation), which gives cheap
equality, hashing and length.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_WEYL = 50_000  # covers A7
DEFAULT_MAX_ROOTS = 2_000


class CartanError(ValueError):
    """Input matrix violates the Cartan sign/diagonal pattern."""


class NotFiniteTypeError(CartanError):
    """Root orbit closure exceeded its bound; the type is not finite."""


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its configured size cap."""


@dataclass(frozen=True)
class Root:
    """A root written in simple-root coordinates."""

    coeffs: tuple

    def is_positive(self):
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    def is_negative(self):
        return any(self.coeffs) and all(c <= 0 for c in self.coeffs)

    def height(self):
        return sum(self.coeffs)

    def __neg__(self):
        return Root(tuple(-c for c in self.coeffs))

    def __repr__(self):
        return f"Root{self.coeffs}"


class WeylElt:
    """A Weyl group element, canonicalised by its signed action.

    ``perm[k] = +/-(m+1)`` records that the element sends positive root
    number k to plus or minus positive root number m. ``length`` is the
    inversion count, i.e. the number of positive roots sent negative.
    The canonical reduced word (lexicographically smallest) is derived
    lazily; it exists purely as display/derived data, never as identity.
    """

    __slots__ = ("rs", "perm", "length", "_word", "_hash")

    def __init__(self, rs, perm):
        self.rs = rs
        self.perm = perm
        self.length = sum(1 for v in perm if v < 0)
        self._word = None
        self._hash = hash(perm)

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        if self.rs is not other.rs and self.rs.cartan != other.rs.cartan:
            return False
        return self.perm == other.perm

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElt({word_text(self)})"

    def __mul__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        sperm = self.perm
        out = []
        for v in other.perm:
            if v > 0:
                out.append(sperm[v - 1])
            else:
                out.append(-sperm[-v - 1])
        return self.rs.element(tuple(out))

    def inverse(self):
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            if v > 0:
                inv[v - 1] = k + 1
            else:
                inv[-v - 1] = -(k + 1)
        return self.rs.element(tuple(inv))

    def act_index(self, k):
        """Signed image of positive root number k."""
        return self.perm[k]

    def is_identity(self):
        # no inversions forces the identity in a finite Weyl group
        return self.length == 0

    def right_descents(self):
        """Simple indices i with length(w s_i) < length(w)."""
        rs = self.rs
        return [
            i
            for i in range(1, rs.rank + 1)
            if self.perm[rs.simple_index(i)] < 0
        ]

    @property
    def word(self):
        """The lexicographically smallest reduced word, as a tuple.

        Computed greedily: the first letter of any reduced word is a left
        descent, so repeatedly stripping the smallest left descent yields
        the lex-min word.
        """
        if self._word is None:
            rs = self.rs
            letters = []
            y = self.inverse()  # tracks x^{-1} while x walks down to e
            for _ in range(self.length):
                for i in range(1, rs.rank + 1):
                    if y.perm[rs.simple_index(i)] < 0:
                        letters.append(i)
                        y = y * rs.simple_reflection(i)
                        break
            self._word = tuple(letters)
        return self._word

    def support(self):
        """Simple indices appearing in any reduced word."""
        return frozenset(self.word)

    def sort_key(self):
        return (self.length, self.word)


def word_text(w):
    """Canonical display form of an element: "e" or "s1 s2 s1"."""
    if w.length == 0:
        return "e"
    return " ".join(f"s{i}" for i in w.word)


def _validate_cartan(cartan):
    n = len(cartan)
    if n == 0:
        raise CartanError("empty Cartan matrix")
    for i, row in enumerate(cartan):
        if len(row) != n:
            raise CartanError("Cartan matrix must be square")
        for j, a in enumerate(row):
            if not isinstance(a, int):
                raise CartanError("Cartan entries must be integers")
            if i == j and a != 2:
                raise CartanError("Cartan diagonal entries must equal 2")
            if i != j and a > 0:
                raise CartanError("off-diagonal Cartan entries must be <= 0")
    for i in range(n):
        for j in range(n):
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise CartanError("Cartan zero pattern must be symmetric")


class RootSystem:
    """A finite root system with its Weyl group machinery.

    Positive roots are generated as the closure of the simple roots under
    the simple reflections and stored in a fixed order graded by height,
    then lexicographic on coordinates, so all derived enumerations are
    reproducible byte for byte. The object is immutable apart from
    internal memo tables.
    """

    def __init__(self, cartan, type_label=None, max_positive_roots=None):
        cartan = tuple(tuple(int(a) for a in row) for row in cartan)
        _validate_cartan(cartan)
        self.cartan = cartan
        self.rank = len(cartan)
        self.type_label = type_label
        cap = max_positive_roots or DEFAULT_MAX_ROOTS

        vectors, provenance = self._generate_positive_roots(cap)
        order = sorted(vectors, key=lambda v: (sum(v), v))
        self.positive_roots = tuple(Root(v) for v in order)
        self._index = {v: k for k, v in enumerate(order)}
        # simple root i sits at _simple_index[i - 1]
        self._simple_index = []
        for i in range(self.rank):
            unit = tuple(1 if j == i else 0 for j in range(self.rank))
            self._simple_index.append(self._index[unit])
        self.simple_roots = tuple(
            self.positive_roots[k] for k in self._simple_index
        )

        self._elements = {}
        n = len(order)
        self._identity = self.element(tuple(range(1, n + 1)))
        self._simples = [None] * (self.rank + 1)
        for i in range(1, self.rank + 1):
            perm = []
            for vec in order:
                img = self._reflect_vector(i, vec)
                if min(img) >= 0:
                    perm.append(self._index[img] + 1)
                else:
                    neg = tuple(-c for c in img)
                    perm.append(-(self._index[neg] + 1))
            self._simples[i] = self.element(tuple(perm))

        self._reflections = self._build_reflections(order, provenance)

        # memo tables (idempotent writes; safe under the GIL)
        self._weyl_list = None
        self._bruhat = {}
        self._billey = {}
        self._billey_rows_done = set()
        self._billey_cols = {}
        self._parabolic_longest = {}
        self._peterson_classes = {}
        self._pullbacks = {}

    # -- construction helpers -------------------------------------------

    def _reflect_vector(self, i, vec):
        # s_i(v) = v - <v, alpha_i^vee> alpha_i, in simple-root coordinates
        row = self.cartan[i - 1]
        pairing = sum(row[j] * vec[j] for j in range(self.rank))
        out = list(vec)
        out[i - 1] -= pairing
        return tuple(out)

    def _generate_positive_roots(self, cap):
        provenance = {}
        frontier = []
        for i in range(self.rank):
            unit = tuple(1 if j == i else 0 for j in range(self.rank))
            provenance[unit] = None
            frontier.append(unit)
        while frontier:
            new = []
            for vec in frontier:
                for i in range(1, self.rank + 1):
                    img = self._reflect_vector(i, vec)
                    if min(img) < 0:
                        continue  # only s_i(alpha_i) leaves the positives
                    if img not in provenance:
                        provenance[img] = (i, vec)
                        new.append(img)
            if len(provenance) > cap:
                raise NotFiniteTypeError(
                    f"more than {cap} positive roots; "
                    "the Cartan matrix is not of finite type"
                )
            frontier = new
        return list(provenance), provenance

    def _build_reflections(self, order, provenance):
        reflections = []
        for vec in order:
            chain = []
            cur = vec
            while provenance[cur] is not None:
                i, parent = provenance[cur]
                chain.append(i)
                cur = parent
            # cur is now a simple root: vec = s_{chain[0]}...s_{chain[-1]}(cur)
            j = cur.index(1) + 1
            u = self._identity
            for i in chain:
                u = u * self._simples[i]
            reflections.append(u * self._simples[j] * u.inverse())
        return tuple(reflections)

    # -- element access --------------------------------------------------

    def element(self, perm):
        """Intern a signed permutation as a WeylElt."""
        elt = self._elements.get(perm)
        if elt is None:
            elt = WeylElt(self, perm)
            self._elements[perm] = elt
        return elt

    def identity(self):
        return self._identity

    def simple_reflection(self, i):
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple reflection index {i} out of range")
        return self._simples[i]

    def simple_index(self, i):
        """Position of the simple root alpha_i in the positive-root list."""
        return self._simple_index[i - 1]

    def reflection(self, k):
        """The reflection over positive root number k."""
        return self._reflections[k]

    def root_index(self, root):
        idx = self._index.get(root.coeffs)
        if idx is None:
            raise ValueError(f"{root} is not a positive root of this system")
        return idx

    def num_positive_roots(self):
        return len(self.positive_roots)

    def __repr__(self):
        label = self.type_label or f"rank-{self.rank} Cartan"
        return f"RootSystem({label})"


def build_root_system(cartan, type_label=None, max_positive_roots=None):
    """Construct a finite root system from a Cartan matrix.

    Raises CartanError for a bad sign/diagonal pattern and
    NotFiniteTypeError when the reflection orbit of the simple roots
    fails to close within ``max_positive_roots``.
    """
    return RootSystem(
        cartan, type_label=type_label, max_positive_roots=max_positive_roots
    )


def cartan_matrix_for_label(label):
    """Standard Cartan matrix for a type label such as "A3" or "B2"."""
    label = label.strip().upper()
    if len(label) < 2 or label[0] not in "ABCDEFG":
        raise CartanError(f"unknown root system label {label!r}")
    family = label[0]
    try:
        n = int(label[1:])
    except ValueError:
        raise CartanError(f"unknown root system label {label!r}") from None
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
    maximum = {"E": 8, "F": 4, "G": 2}
    if n < minimum[family] or n > maximum.get(family, 10**9):
        raise CartanError(f"rank {n} is not valid for type {family}")

    matrix = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain_link(i, j):
        matrix[i][j] = -1
        matrix[j][i] = -1

    if family in "ABCF":
        for i in range(n - 1):
            chain_link(i, i + 1)
        if family == "B" and n >= 2:
            matrix[n - 1][n - 2] = -2  # alpha_n short
        if family == "C" and n >= 2:
            matrix[n - 2][n - 1] = -2  # alpha_n long
        if family == "F":
            matrix[1][2] = -2
    elif family == "D":
        for i in range(n - 2):
            chain_link(i, i + 1)
        chain_link(n - 3, n - 1)
    elif family == "E":
        # chain 1-3-4-5-..., node 2 hangs off node 4 (Bourbaki numbering)
        chain_link(0, 2)
        chain_link(1, 3)
        for i in range(2, n - 1):
            chain_link(i, i + 1)
    elif family == "G":
        matrix[0][1] = -1
        matrix[1][0] = -3
    return matrix


def root_system_from_label(label, max_positive_roots=None):
    return build_root_system(
        cartan_matrix_for_label(label),
        type_label=label.strip().upper(),
        max_positive_roots=max_positive_roots,
    )


def is_type_a(rs):
    """True when the Cartan matrix is the standard type-A chain."""
    return rs.cartan == tuple(
        tuple(cartan_matrix_for_label(f"A{rs.rank}")[i])
        for i in range(rs.rank)
    )


def weyl_enumerate(rs, max_size=None):
    """All Weyl group elements, graded by length then canonical word.

    Raises ResourceCapError when the group is larger than ``max_size``
    (default 50,000, enough for A7). The full list is cached on the root
    system after the first successful call.
    """
    cap = max_size or DEFAULT_MAX_WEYL
    if rs._weyl_list is None:
        seen = {rs.identity()}
        level = [rs.identity()]
        while level:
            nxt = set()
            for w in level:
                for i in range(1, rs.rank + 1):
                    if w.perm[rs.simple_index(i)] > 0:  # ascent: length grows
                        ws = w * rs.simple_reflection(i)
                        if ws not in seen:
                            nxt.add(ws)
            seen.update(nxt)
            if len(seen) > cap:
                raise ResourceCapError(
                    f"Weyl group larger than the cap of {cap} elements"
                )
            level = list(nxt)
        rs._weyl_list = sorted(seen, key=WeylElt.sort_key)
    if len(rs._weyl_list) > cap:
        raise ResourceCapError(
            f"Weyl group larger than the cap of {cap} elements"
        )
    return rs._weyl_list


def act_on_root(w, root):
    """Image of a root under a Weyl group element."""
    rs = w.rs
    if root.is_positive():
        signed = w.perm[rs.root_index(root)]
    elif root.is_negative():
        signed = -w.perm[rs.root_index(-root)]
    else:
        raise ValueError(f"{root} is not a root")
    image = rs.positive_roots[abs(signed) - 1]
    return image if signed > 0 else -image


def element_from_word(rs, word):
    """Product of simple reflections; the word need not be reduced."""
    w = rs.identity()
    for i in word:
        w = w * rs.simple_reflection(i)
    return w


def reduced_words(w):
    """All reduced words of w, in lexicographic order."""
    if w.length == 0:
        return [()]
    out = []
    for i in w.right_descents():
        shorter = w * w.rs.simple_reflection(i)
        out.extend(tail + (i,) for tail in reduced_words(shorter))
    out.sort()
    return out


def bruhat_leq(u, w):
    """Bruhat order test via the lifting property.

    Peels the smallest right descent s of w: if u also descends by s the
    question reduces to (us, ws), otherwise to (u, ws). This consumes one
    fixed reduced word of w letter by letter; results are memoised on the
    root system.
    """
    rs = u.rs
    if u.length > w.length:
        return False
    if u.length == 0:
        return True
    if u.length == w.length:
        return u == w
    key = (u.perm, w.perm)
    cached = rs._bruhat.get(key)
    if cached is not None:
        return cached
    i = w.right_descents()[0]
    s = rs.simple_reflection(i)
    ws = w * s
    us = u * s
    if us.length < u.length:
        result = bruhat_leq(us, ws)
    else:
        result = bruhat_leq(u, ws)
    rs._bruhat[key] = result
    return result


def _check_subset(rs, members):
    members = frozenset(int(i) for i in members)
    if not members <= frozenset(range(1, rs.rank + 1)):
        raise ValueError(
            f"subset {sorted(members)} is not within 1..{rs.rank}"
        )
    return members


def longest_element(rs, members):
    """Longest element of the parabolic subgroup on the given simples.

    Greedy ascent: starting from the identity, repeatedly multiply by a
    simple reflection in the subset that increases length. The unique
    element of the parabolic with no ascent left is its longest element.
    """
    members = _check_subset(rs, members)
    cached = rs._parabolic_longest.get(members)
    if cached is not None:
        return cached
    w = rs.identity()
    progressed = True
    while progressed:
        progressed = False
        for i in sorted(members):
            if w.perm[rs.simple_index(i)] > 0:
                w = w * rs.simple_reflection(i)
                progressed = True
                break
    rs._parabolic_longest[members] = w
    return w


def coxeter_element(rs, members, order="increasing"):
    """Product of one simple reflection per subset member.

    The canonical choice multiplies in increasing index order; pass
    order="decreasing" or an explicit sequence of the members to
    experiment with other choices (no invariance of downstream tables is
    claimed for those).
    """
    members = _check_subset(rs, members)
    if not members:
        raise ValueError("a Coxeter element needs a nonempty subset")
    if order == "increasing":
        sequence = sorted(members)
    elif order == "decreasing":
        sequence = sorted(members, reverse=True)
    else:
        sequence = [int(i) for i in order]
        if frozenset(sequence) != members or len(sequence) != len(members):
            raise ValueError(
                "explicit order must list each subset member exactly once"
            )
    return element_from_word(rs, sequence)


def inversions(w):
    """Positive roots sent negative by w; their number is length(w)."""
    rs = w.rs
    return [
        rs.positive_roots[k]
        for k, v in enumerate(w.perm)
        if v < 0
    ]


# -- type A one-line notation -------------------------------------------


def one_line(w):
    """One-line permutation form of a type A element.

    The Weyl group of A_n is the symmetric group on n+1 letters with s_i
    acting as the adjacent transposition (i, i+1); products compose as
    functions, so the word is folded left to right by swapping entries.
    """
    rs = w.rs
    if not is_type_a(rs):
        raise ValueError("one-line notation applies to type A only")
    line = list(range(1, rs.rank + 2))
    for i in w.word:
        line[i - 1], line[i] = line[i], line[i - 1]
    return tuple(line)


def element_from_one_line(rs, line):
    """Type A element from one-line notation such as (2, 3, 1)."""
    if not is_type_a(rs):
        raise ValueError("one-line notation applies to type A only")
    n = rs.rank + 1
    line = tuple(int(v) for v in line)
    if sorted(line) != list(range(1, n + 1)):
        raise ValueError(
            f"{line} is not a permutation of 1..{n}"
        )
    work = list(line)
    letters = []
    progressed = True
    while progressed:
        progressed = False
        for i in range(1, n):
            if work[i - 1] > work[i]:
                work[i - 1], work[i] = work[i], work[i - 1]
                letters.append(i)
                progressed = True
                break
    return element_from_word(rs, reversed(letters))
