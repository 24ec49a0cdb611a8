from itertools import permutations
from math import factorial

import pytest

import oracles
from petcalc import (
    CartanError,
    NotFiniteTypeError,
    ResourceCapError,
    Root,
    act_on_root,
    bruhat_leq,
    build_root_system,
    coxeter_element,
    element_from_one_line,
    element_from_word,
    inversions,
    longest_element,
    one_line,
    reduced_words,
    root_system_from_label,
    weyl_enumerate,
    word_text,
)


def test_a1_single_positive_root():
    rs = build_root_system([[2]])
    assert [r.coeffs for r in rs.positive_roots] == [(1,)]


def test_a2_positive_roots_exact(a2):
    assert {r.coeffs for r in a2.positive_roots} == {(1, 0), (0, 1), (1, 1)}


def test_a3_positive_root_count_matches_oracle(a3):
    # type A_n has one positive root per pair i < j in 1..n+1
    n = a3.rank
    assert len(a3.positive_roots) == n * (n + 1) // 2 == 6


def test_positive_roots_have_uniform_sign(a3, b2):
    for rs in (a3, b2):
        for root in rs.positive_roots:
            assert root.is_positive()


def test_positive_root_order_is_height_then_lex(a3, b2):
    for rs in (a3, b2):
        keys = [(r.height(), r.coeffs) for r in rs.positive_roots]
        assert keys == sorted(keys)


def test_root_orbit_bound_is_configurable(a2):
    with pytest.raises(NotFiniteTypeError):
        build_root_system([[2, -1], [-1, 2]], max_positive_roots=2)


def test_positive_root_counts_by_type():
    expected = {
        "A5": 15, "B3": 9, "C3": 9, "D4": 12, "D5": 20,
        "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
    }
    for label, count in expected.items():
        rs = root_system_from_label(label)
        assert len(rs.positive_roots) == count, label


def test_bad_cartan_rejected():
    with pytest.raises(CartanError):
        build_root_system([[1]])  # bad diagonal
    with pytest.raises(CartanError):
        build_root_system([[2, 1], [1, 2]])  # positive off-diagonal
    with pytest.raises(CartanError):
        build_root_system([[2, -1]])  # not square
    with pytest.raises(CartanError):
        build_root_system([[2, -1], [0, 2]])  # asymmetric zero pattern
    with pytest.raises(CartanError):
        root_system_from_label("Z9")
    with pytest.raises(CartanError):
        root_system_from_label("E9")


def test_affine_cartan_rejected():
    with pytest.raises(NotFiniteTypeError):
        build_root_system([[2, -2], [-2, 2]])


def test_weyl_sizes_and_lengths():
    for n in (1, 2, 3, 4):
        rs = root_system_from_label(f"A{n}")
        elements = weyl_enumerate(rs)
        assert len(elements) == factorial(n + 1)
        got = sorted(w.length for w in elements)
        want = sorted(
            oracles.inversion_count(p)
            for p in permutations(range(1, n + 2))
        )
        assert got == want


def test_a2_length_profile(a2):
    assert [w.length for w in weyl_enumerate(a2)] == [0, 1, 1, 2, 2, 3]


def test_enumeration_graded_and_stable(a3):
    elements = weyl_enumerate(a3)
    keys = [w.sort_key() for w in elements]
    assert keys == sorted(keys)
    assert elements[0].is_identity()
    assert elements[-1].length == len(a3.positive_roots)
    assert weyl_enumerate(a3) == elements


def test_weyl_cap(a3):
    with pytest.raises(ResourceCapError):
        weyl_enumerate(a3, max_size=5)


def test_simple_reflection_negates_own_root(a2):
    s1 = a2.simple_reflection(1)
    alpha1 = a2.simple_roots[0]
    assert act_on_root(s1, alpha1) == -alpha1


def test_reflection_formula_example(a2):
    s1 = a2.simple_reflection(1)
    alpha2 = a2.simple_roots[1]
    assert act_on_root(s1, alpha2) == Root((1, 1))


def test_composed_action_example(a2):
    s1s2 = element_from_word(a2, (1, 2))
    alpha1 = a2.simple_roots[0]
    assert act_on_root(s1s2, alpha1) == Root((0, 1))


def test_action_is_a_homomorphism(a2):
    elements = weyl_enumerate(a2)
    roots = list(a2.positive_roots) + [-r for r in a2.positive_roots]
    for u in elements:
        for v in elements:
            uv = u * v
            for r in roots:
                assert act_on_root(uv, r) == act_on_root(u, act_on_root(v, r))


def test_act_on_non_root_rejected(a2):
    with pytest.raises(ValueError):
        act_on_root(a2.identity(), Root((1, -1)))


def test_length_is_inversion_count():
    for label in ("A2", "A3", "A4", "B2", "G2"):
        rs = root_system_from_label(label)
        for w in weyl_enumerate(rs):
            negated = [r for r in rs.positive_roots
                       if act_on_root(w, r).is_negative()]
            assert len(negated) == w.length
            assert inversions(w) == negated


def test_one_line_round_trip(a3):
    for w in weyl_enumerate(a3):
        line = one_line(w)
        assert element_from_one_line(a3, line) == w
        assert oracles.inversion_count(line) == w.length


def test_one_line_rejects_non_permutation(a2):
    with pytest.raises(ValueError):
        element_from_one_line(a2, (1, 1, 2))


def test_canonical_word_is_lex_minimal(a3):
    for w in weyl_enumerate(a3):
        words = reduced_words(w)
        assert w.word == min(words)
        assert all(len(word) == w.length for word in words)
        assert all(element_from_word(a3, word) == w for word in words)


def test_reduced_word_counts(a2, a3):
    w0 = weyl_enumerate(a2)[-1]
    assert set(reduced_words(w0)) == {(1, 2, 1), (2, 1, 2)}
    assert len(reduced_words(weyl_enumerate(a3)[-1])) == 16


def test_bruhat_examples(a2):
    elements = weyl_enumerate(a2)
    e, s1, s2 = elements[0], elements[1], elements[2]
    w0 = elements[-1]
    assert all(bruhat_leq(e, w) for w in elements)
    assert not bruhat_leq(s1, s2)
    assert bruhat_leq(s1, w0)


def test_bruhat_matches_subword_oracle(a2, a3):
    for rs in (a2, a3):
        elements = weyl_enumerate(rs)
        for u in elements:
            for w in elements:
                assert bruhat_leq(u, w) == oracles.naive_bruhat_leq(
                    one_line(u), one_line(w)
                )


def test_bruhat_matches_reflection_closure(a3):
    closure = oracles.bruhat_by_reflection_closure(4)
    for u in weyl_enumerate(a3):
        for w in weyl_enumerate(a3):
            assert bruhat_leq(u, w) == ((one_line(u), one_line(w)) in closure)


def test_bruhat_is_a_partial_order(a2, a3):
    for rs in (a2, a3):
        elements = weyl_enumerate(rs)
        w0 = elements[-1]
        for u in elements:
            assert bruhat_leq(u, u)
            assert bruhat_leq(u, w0)
        for u in elements:
            for v in elements:
                if bruhat_leq(u, v) and bruhat_leq(v, u):
                    assert u == v
                for w in elements:
                    if bruhat_leq(u, v) and bruhat_leq(v, w):
                        assert bruhat_leq(u, w)


def test_longest_element_empty_subset(a2):
    assert longest_element(a2, frozenset()).is_identity()


def test_longest_element_full_a2(a2):
    w = longest_element(a2, {1, 2})
    assert w.length == 3
    assert w == element_from_word(a2, (1, 2, 1))


def test_longest_element_commuting_factors(a3):
    w = longest_element(a3, {1, 3})
    assert w.length == 2
    assert w == element_from_word(a3, (1, 3))


def test_longest_element_properties(a3, b2):
    for rs in (a3, b2):
        subsets = [
            frozenset(s)
            for s in [
                (),
                *[(i,) for i in range(1, rs.rank + 1)],
                *[
                    (i, j)
                    for i in range(1, rs.rank + 1)
                    for j in range(i + 1, rs.rank + 1)
                ],
                tuple(range(1, rs.rank + 1)),
            ]
        ]
        for members in subsets:
            w = longest_element(rs, members)
            supported = [
                r
                for r in rs.positive_roots
                if {i + 1 for i, c in enumerate(r.coeffs) if c} <= members
            ]
            assert w.length == len(supported)
            assert (w * w).is_identity()
            assert w.support() == members


def test_longest_element_bad_subset(a2):
    with pytest.raises(ValueError):
        longest_element(a2, {3})


def test_coxeter_element_basics(a2, a3):
    assert coxeter_element(a2, {1}) == a2.simple_reflection(1)
    assert coxeter_element(a2, {1, 2}) == element_from_word(a2, (1, 2))
    assert coxeter_element(a3, {1, 2, 3}) == element_from_word(a3, (1, 2, 3))
    with pytest.raises(ValueError):
        coxeter_element(a2, frozenset())


def test_coxeter_element_properties(a3):
    subsets = [
        frozenset(s)
        for s in [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    ]
    for members in subsets:
        v = coxeter_element(a3, members)
        assert v.length == len(members)
        assert v.support() == members
        assert bruhat_leq(v, longest_element(a3, members))


def test_coxeter_element_alternate_orders(a3):
    decreasing = coxeter_element(a3, {1, 2}, order="decreasing")
    assert decreasing == element_from_word(a3, (2, 1))
    explicit = coxeter_element(a3, {1, 2, 3}, order=(2, 1, 3))
    assert explicit == element_from_word(a3, (2, 1, 3))
    with pytest.raises(ValueError):
        coxeter_element(a3, {1, 2}, order=(1, 1))


def test_word_text(a2):
    assert word_text(a2.identity()) == "e"
    assert word_text(element_from_word(a2, (1, 2, 1))) == "s1 s2 s1"


def test_reflections_negate_their_roots():
    for label in ("A3", "B2", "G2"):
        rs = root_system_from_label(label)
        for k, root in enumerate(rs.positive_roots):
            refl = rs.reflection(k)
            assert act_on_root(refl, root) == -root
            assert (refl * refl).is_identity()
            assert refl.length % 2 == 1


def test_highest_root_reflection_a2(a2):
    k = a2.root_index(Root((1, 1)))
    assert a2.reflection(k) == element_from_word(a2, (1, 2, 1))
