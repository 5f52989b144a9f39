import random

import pytest
from fractions import Fraction

from trunco.root_datum import Weight, build_root_datum
from trunco.trunc_weights import (TruncatedWeight, central_shift,
                                  find_twisting_word, linked, n_dot,
                                  same_block, singular_roots, standard_levi)


def _tw(*coords):
    return TruncatedWeight([Weight(c) for c in coords])


def test_truncated_weight_basics():
    lam = _tw((1, 2), (0, 1))
    assert lam.level == 1
    assert lam.tail() == (Weight((0, 1)),)
    assert lam.truncate(0).level == 0
    assert str(lam) == "[1,2],[0,1]"
    assert lam.restrict((0,))[0] == Weight((1,))
    assert lam.restrict((1,))[1] == Weight((1,))


def test_same_block():
    assert same_block(_tw((1, 2), (0, 1)), _tw((5, -3), (0, 1)))
    assert not same_block(_tw((1, 2), (0, 1)), _tw((1, 2), (1, 1)))
    assert not same_block(_tw((1, 2)), _tw((1, 2), (0, 0)))


def test_singular_roots():
    a2 = build_root_datum("A2")
    assert singular_roots(a2, Weight((1, 1))) == []
    assert singular_roots(a2, Weight((0, 0))) == a2.positive_roots
    assert singular_roots(a2, Weight((0, 1))) == [(1, 0)]
    # the highest root is singular for (1, -1): not a standard Levi set
    assert singular_roots(a2, Weight((1, -1))) == [(1, 1)]


def test_singular_roots_equivariance():
    for t in ("A2", "B2"):
        datum = build_root_datum(t)
        group = datum.weyl_group()
        mus = [Weight((a, b)) for a in range(-2, 3) for b in range(-2, 3)]
        for w in group.elements():
            for mu in mus:
                image = set()
                for r in singular_roots(datum, mu):
                    v = w.act_root(r)
                    if any(c < 0 for c in v):
                        v = tuple(-c for c in v)
                    image.add(v)
                assert image == set(singular_roots(datum, w.act(mu)))


def test_standard_levi():
    a2 = build_root_datum("A2")
    assert standard_levi(a2, []) == ()
    assert standard_levi(a2, [(1, 0)]) == (0,)
    assert standard_levi(a2, a2.positive_roots) == (0, 1)
    assert standard_levi(a2, [(1, 1)]) is None


def test_find_twisting_word_trivial_cases():
    a2 = build_root_datum("A2")
    w, j = find_twisting_word(a2, Weight((1, 1)))
    assert w.length == 0 and j == ()
    w, j = find_twisting_word(a2, Weight((0, 0)))
    assert w.length == 0 and j == (0, 1)
    w, j = find_twisting_word(a2, Weight((0, 1)))
    assert w.length == 0 and j == (0,)


def test_find_twisting_word_nontrivial():
    a2 = build_root_datum("A2")
    w, j = find_twisting_word(a2, Weight((1, -1)))
    assert w.length == 1
    assert len(j) == 1
    moved = w.act(Weight((1, -1)))
    assert standard_levi(a2, singular_roots(a2, moved)) == j


def test_find_twisting_word_is_minimal():
    for t in ("A2", "B2"):
        datum = build_root_datum(t)
        group = datum.weyl_group()
        mus = [Weight((a, b)) for a in range(-2, 3) for b in range(-2, 3)]
        for mu in mus:
            w, _ = find_twisting_word(datum, mu)
            best = min(
                v.length for v in group.elements()
                if standard_levi(datum,
                                 singular_roots(datum, v.act(mu))) is not None)
            assert w.length == best


def test_n_dot_levels():
    a1 = build_root_datum("A1")
    group = a1.weyl_group()
    s = group.from_word((0,))
    # level 0 is the classical dot action: s.m = -m - 2
    lam = _tw((3,))
    assert n_dot(a1, s, lam)[0] == Weight((-5,))
    # level 1 shifts by 2 rho instead
    lam = _tw((3,), (1,))
    image = n_dot(a1, s, lam)
    assert image[0] == Weight((-7,))
    assert image[1] == Weight((-1,))


def test_n_dot_is_a_group_action():
    rng = random.Random(11)
    for t in ("A2", "B2"):
        datum = build_root_datum(t)
        group = datum.weyl_group()
        elements = group.elements()
        for _ in range(200):
            w1, w2 = rng.choice(elements), rng.choice(elements)
            lam = _tw(*(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                              for _ in range(datum.rank))
                        for _ in range(rng.randint(1, 3))))
            lhs = n_dot(datum, group.mult(w1, w2), lam)
            rhs = n_dot(datum, w1, n_dot(datum, w2, lam))
            assert lhs == rhs


def test_n_dot_preserves_blocks():
    a2 = build_root_datum("A2")
    group = a2.weyl_group()
    lam = _tw((1, 0), (2, -1))
    nu = _tw((0, 0), (2, -1))
    for w in group.elements():
        assert same_block(n_dot(a2, w, lam), n_dot(a2, w, nu))


def test_central_shift_and_linked():
    a2 = build_root_datum("A2")
    lam = _tw((2, 0), (0, 1))
    nu = _tw((0, 1), (0, 1))     # difference is alpha_1
    assert central_shift(a2, (0,), lam[0], nu[0]) == (Fraction(1), Fraction(0))
    assert linked(a2, (0,), lam, nu)
    nu2 = _tw((3, -2), (0, 1))   # difference is -alpha_2
    assert central_shift(a2, (0,), lam[0], nu2[0]) is None
    assert not linked(a2, (0,), lam, nu2)
    # regular tail: empty Levi links only equal zero components
    assert linked(a2, (), lam, lam)
    assert not linked(a2, (), lam, nu)


def test_linked_is_an_equivalence():
    a2 = build_root_datum("A2")
    rng = random.Random(3)
    tail = (Weight((0, 1)),)
    weights = [TruncatedWeight((Weight((a, b)),) + tail)
               for a in range(-2, 3) for b in range(-2, 3)]
    for lam in weights:
        assert linked(a2, (0,), lam, lam)
    for _ in range(200):
        x, y, z = (rng.choice(weights) for _ in range(3))
        assert linked(a2, (0,), x, y) == linked(a2, (0,), y, x)
        if linked(a2, (0,), x, y) and linked(a2, (0,), y, z):
            assert linked(a2, (0,), x, z)
