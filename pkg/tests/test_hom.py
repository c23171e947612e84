from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquandle.core import BiquandleError, BiquandleMatrix, OpKind, flip, idempotent_count, obverse
from biquandle.hom import (
    ISO,
    ISO_FLIP_OBVERSE,
    baut,
    bhomcount,
    bhomlist,
    bisolist,
    breducelist,
    brute_force_homcount,
    canonical_form,
    identify_group,
    is_homomorphism,
    is_isomorphic,
    self_flip,
    self_obverse,
)
from biquandle.presentation import Presentation, Relation, matrix_presentation

BT2 = BiquandleMatrix.trivial(2)
BT3 = BiquandleMatrix.trivial(3)


def _auts_oracle(B):
    n = B.order
    return sorted(p for p in permutations(range(1, n + 1)) if B.relabel(p) == B)


def test_hom_examples(targets, knots):
    T = targets["t"]
    U, VT, K = knots["unknot"], knots["virtual_trefoil"], knots["kishino"]
    homs = bhomlist(U, T)
    assert len(homs) == 3
    assert homs == sorted(homs)
    assert all(is_homomorphism(U, T, h) for h in homs)
    assert bhomcount(VT, T) == 0
    assert bhomcount(K, targets["t2"]) == 16
    assert bhomcount(U, targets["t2"]) == 4


def test_unknot_into_trivial_targets(knots):
    U = knots["unknot"]
    for m in (1, 2, 3, 4):
        assert bhomlist(U, BiquandleMatrix.trivial(m)) == [(a, a) for a in range(1, m + 1)]


def test_free_generator(targets):
    free = Presentation(1, ())
    assert bhomlist(free, targets["t"]) == [(1,), (2,), (3,)]


def test_invalid_target_rejected(knots):
    rows = BT2.rows()
    rows[0][0] = 2
    with pytest.raises(BiquandleError):
        bhomlist(knots["unknot"], BiquandleMatrix.from_rows(rows))


@pytest.mark.parametrize("knot", ["unknot", "virtual_trefoil", "kishino"])
@pytest.mark.parametrize("target", ["t", "t2", "t4", "t5"])
def test_count_matches_brute_force(knots, targets, knot, target):
    P, T = knots[knot], targets[target]
    count = bhomcount(P, T)
    assert count == brute_force_homcount(P, T)
    assert count >= idempotent_count(T)


@st.composite
def small_presentations(draw):
    g = draw(st.integers(1, 4))
    keys = draw(
        st.sets(
            st.tuples(st.integers(1, g), st.sampled_from(list(OpKind)), st.integers(1, g)),
            max_size=6,
        )
    )
    return Presentation(g, [Relation(a, k, b, draw(st.integers(1, g))) for a, k, b in sorted(keys)])


@settings(max_examples=80, deadline=None)
@given(small_presentations(), st.data())
def test_random_presentations_against_brute_force(census3, P, data):
    T = data.draw(st.sampled_from(census3))
    homs = bhomlist(P, T)
    assert len(homs) == brute_force_homcount(P, T)
    assert len(homs) >= idempotent_count(T)
    assert all(is_homomorphism(P, T, h) for h in homs)


@settings(max_examples=40, deadline=None)
@given(small_presentations(), st.data())
def test_count_invariant_under_symmetries(census3, P, data):
    T = data.draw(st.sampled_from(census3))
    perm = data.draw(st.permutations([1, 2, 3]))
    c = bhomcount(P, T)
    assert bhomcount(P, T.relabel(perm)) == c
    assert bhomcount(P.obverse(), obverse(T)) == c
    assert bhomcount(P.flip(), flip(T)) == c


def test_bisolist_examples(tables, targets):
    for B in [BT2, BT3, targets["t"], targets["t4"]]:
        assert tuple(range(1, B.order + 1)) in bisolist(B, B)
    A, B = [r["matrix"] for r in tables if r["list"] == 1]
    assert bisolist(A, B) == []
    T5 = targets["t5"]
    assert bisolist(T5, obverse(T5)) == []
    assert not self_obverse(T5)


def test_bisolist_maps_are_isomorphisms(census3):
    for A, B in product(census3[:12], repeat=2):
        for phi in bisolist(A, B):
            assert A.relabel(phi) == B


def test_baut_examples(targets):
    auts, label = baut(BT2)
    assert len(auts) == 2 and label.name == "Z2"
    auts, label = baut(BT3)
    assert len(auts) == 6 and label.name == "S3"
    auts, label = baut(targets["t"])
    assert len(auts) == 3 and label.name == "Z3"


def test_baut_matches_relabelling_oracle(census3, tables, targets):
    from biquandle.core import biqtest

    mats = list(census3) + list(targets.values())
    mats += [r["matrix"] for r in tables if biqtest(r["matrix"])]
    for B in mats:
        auts, _ = baut(B)
        assert sorted(auts) == _auts_oracle(B)


def _cycle_group(gens, n):
    """Closure of a set of permutations (image tuples) of 1..n."""
    ident = tuple(range(1, n + 1))
    group = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[x - 1] for x in p)
            if q not in group:
                group.add(q)
                frontier.append(q)
    return group


def test_identify_group():
    assert identify_group([(1, 2, 3)]).name == "Z1"
    assert identify_group(permutations((1, 2, 3))).name == "S3"
    z4z2 = _cycle_group([(2, 3, 4, 1, 5, 6), (1, 2, 3, 4, 6, 5)], 6)
    label = identify_group(z4z2)
    assert label.name == "Z4⊕Z2"
    assert label.element_orders == ((1, 1), (2, 3), (4, 4))
    d4 = _cycle_group([(2, 3, 4, 1), (1, 4, 3, 2)], 4)
    assert identify_group(d4).name == "D4"
    klein = _cycle_group([(2, 1, 4, 3), (3, 4, 1, 2)], 4)
    assert identify_group(klein).name == "Z2⊕Z2"
    # quaternion group in its regular representation
    q = {}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    table = {"i": {"i": "-1", "j": "k", "k": "-j"},
             "j": {"i": "-k", "j": "-1", "k": "i"},
             "k": {"i": "j", "j": "-i", "k": "-1"}}

    def mul(a, b):
        sa, a0 = (-1, a[1:]) if a.startswith("-") else (1, a)
        sb, b0 = (-1, b[1:]) if b.startswith("-") else (1, b)
        s = sa * sb
        if a0 == "1":
            r = b0
        elif b0 == "1":
            r = a0
        else:
            r = table[a0][b0]
        if r.startswith("-"):
            s, r = -s, r[1:]
        return r if s > 0 else "-" + r

    for a in names:
        q[a] = tuple(names.index(mul(a, b)) + 1 for b in names)
    assert identify_group(q.values()).name == "Q8"


def test_identify_group_unnamed_and_errors():
    big = _cycle_group([(2, 3, 4, 5, 6, 7, 8, 9, 1)], 9)
    label = identify_group(big)
    assert label.name is None and label.order == 9
    assert "order 9" in str(label)
    with pytest.raises(BiquandleError):
        identify_group([(2, 1, 3)])
    with pytest.raises(BiquandleError):
        identify_group([(1, 2, 3), (2, 3, 1)])


def test_reduction_against_canonical_forms(census3):
    iso = breducelist(census3, ISO)
    assert len(iso) == len({canonical_form(B) for B in census3}) == 15

    def class_key(B):
        return min(canonical_form(V) for V in (B, flip(B), obverse(B), obverse(flip(B))))

    full = breducelist(census3, ISO_FLIP_OBVERSE)
    assert len(full) == len({class_key(B) for B in census3}) == 10
    # representatives are the first members of their classes in list order
    assert full[0] == census3[0]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_isomorphism_agrees_with_canonical_form(census3, data):
    A = data.draw(st.sampled_from(census3))
    B = data.draw(st.sampled_from(census3))
    assert is_isomorphic(A, B) == (canonical_form(A) == canonical_form(B))


def test_self_flip_self_obverse(targets):
    assert self_flip(BT3) and self_obverse(BT3)
    assert self_obverse(targets["t"]) and not self_flip(targets["t"])


def test_matrix_presentation_homs_are_endomorphisms(targets):
    T = targets["t"]
    P = matrix_presentation(T)
    for phi in bhomlist(P, T):
        assert all(
            T.op(k, phi[a - 1], phi[b - 1]) == phi[T.op(k, a, b) - 1]
            for k in OpKind
            for a in range(1, 4)
            for b in range(1, 4)
        )


def test_unknown_mode():
    with pytest.raises(BiquandleError):
        breducelist([BT2], "mirror")
