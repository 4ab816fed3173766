import random

import pytest
from hypothesis import given, settings, strategies as st

from orthocone.chains import (
    ChainError,
    VChain,
    all_new_forms,
    aux_split,
    chain_dominates,
    chains_in_ON,
    choices_for,
    decompose,
    diagonal_swap,
    eligible_choices,
    gamma_index,
    gamma_set,
    intertwined_chains,
    is_intertwined,
    new_form,
    new_intertwined,
    proj_chain,
    proj_set,
    projeven_chain,
    projeven_set,
    spnew,
)
from orthocone.lattice import IsotropicIndex, Root, bruhat_leq, enumerate_isotropic, p_h, p_v, roots_of
from orthocone.verify import gamma_failures, newform_failures, random_chain

D4 = 4
V4 = IsotropicIndex.of([1, 2, 3, 4])


def R(r, c, d=D4):
    return Root(r, c, d)


def test_chain_validation():
    VChain.of([(7, 1), (5, 2)], D4)
    with pytest.raises(ChainError):
        VChain.of([(5, 2), (7, 1)], D4)
    with pytest.raises(ChainError):
        VChain.of([(7, 1), (7, 2)], D4)
    assert len(VChain()) == 0 and not VChain()


def test_intertwined_examples():
    assert is_intertwined(R(7, 1), R(5, 2))
    assert not is_intertwined(R(8, 1), R(5, 4))
    # equality of the two projections counts
    a, b = R(7, 1), R(5, 2)
    assert p_v(b) == p_h(a)
    with pytest.raises(ChainError):
        is_intertwined(R(5, 2), R(7, 1))


def test_decompose_examples():
    assert decompose(VChain.of([(7, 1)], D4)) == [VChain.of([(7, 1)], D4)]
    assert len(decompose(VChain.of([(7, 1), (5, 2)], D4))) == 1
    parts = decompose(VChain.of([(8, 1), (5, 4)], D4))
    assert [len(p) for p in parts] == [1, 1]
    assert decompose(VChain()) == []


def test_proj_sets_hand_example():
    F = VChain.of([(7, 1), (5, 2)], D4)
    assert proj_set(F) == (R(8, 1), R(7, 2), R(5, 4))
    assert projeven_set(F) == (R(8, 1), R(7, 2))
    assert proj_chain(F) == proj_set(F)


def test_proj_of_diagonal_singleton():
    F = VChain.of([(8, 1)], D4)
    assert proj_set(F) == (R(8, 1),)
    assert projeven_set(F) == ()
    with pytest.raises(ChainError):
        proj_set(VChain())


def test_proj_chain_two_components():
    C = VChain.of([(8, 1), (5, 4)], D4)
    first, last = decompose(C)
    assert set(proj_chain(C)) == set(projeven_set(first)) | set(proj_set(last))
    assert set(projeven_chain(C)) == set(projeven_set(first)) | set(projeven_set(last))


def test_chain_domination():
    C = VChain.of([(7, 1), (5, 2)], D4)
    assert chain_dominates(C, C)
    longer = VChain.of([(8, 1), (7, 2), (6, 3)], D4)
    assert chain_dominates(longer, longer[:2])
    assert not chain_dominates(VChain.of([(7, 1)], D4), C)


def test_new_form_hand_example():
    E = VChain.of([(7, 1), (5, 2)], D4)
    nf = new_form(E, 2)
    assert nf.defined and nf.chain == VChain.of([(7, 1)], D4)
    assert nf.to_json()["defined"] is True
    assert len(nf.chain) < len(E)


def test_new_form_singleton_undefined():
    E = VChain.of([(7, 1), (5, 2)], D4)
    nf = new_form(E, 1)
    assert not nf.defined
    assert nf.to_json() == {"defined": False, "cutoff": 1, "reason": nf.reason}
    with pytest.raises(ChainError):
        nf.new_C


def test_new_form_errors():
    E = VChain.of([(7, 1), (5, 2)], D4)
    with pytest.raises(ChainError):
        new_form(E, 0)
    with pytest.raises(ChainError):
        new_form(E, 3)
    with pytest.raises(ChainError):
        new_form(E, 2, choice=R(6, 3))  # odd case takes no choice


def _even_case_examples(max_d=6):
    out = []
    for d in range(3, max_d + 1):
        for v in enumerate_isotropic(d):
            for F in intertwined_chains(roots_of(v), 4):
                if len(F) >= 2 and len(proj_set(F)) % 2 == 0:
                    out.append(F)
    return out


def test_even_case_choices():
    examples = _even_case_examples()
    assert examples, "expected some intertwined chains with even |proj|"
    for F in examples:
        choices = eligible_choices(F)
        last = F[-1]
        for c in choices:
            assert p_h(last).row < c.row < p_v(last).row
            built = new_intertwined(F, c)
            assert set(built.removed) == {proj_set(F)[-1], c}
        if not choices:
            assert new_intertwined(F) is None
        else:
            with pytest.raises(ChainError):
                new_intertwined(F)  # a choice is required
        bogus = proj_set(F)[0]
        if bogus not in choices:
            with pytest.raises(ChainError):
                new_intertwined(F, bogus)


def test_spnew_pairs_and_length():
    # every intertwined chain with all projections in N
    seen = 0
    for d in (4, 5, 6):
        for v in enumerate_isotropic(d):
            for F in intertwined_chains(roots_of(v), 4):
                if not all(p.in_N for p in F.projections()):
                    with pytest.raises(ChainError):
                        spnew(F)
                    continue
                S = spnew(F)
                rows = [p.row for p in projeven_set(F)]
                assert len(S) == len(rows) // 2
                assert [(a.row, a.col) for a in S] == [
                    (rows[i + 1], 2 * d + 1 - rows[i]) for i in range(0, len(rows), 2)
                ]
                assert all(a.in_N for a in S)
                seen += 1
    assert seen > 0


def test_spnew_two_points():
    # projeven = {(8,1),(7,2)} gives the single element (7, 1)
    F = VChain.of([(7, 1), (5, 2)], D4)
    assert all(p.in_N for p in F.projections())
    assert spnew(F) == VChain.of([(7, 1)], D4)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_new_form_properties_exhaustive(d):
    defined = 0
    for v in enumerate_isotropic(d):
        for E in chains_in_ON(roots_of(v), 4):
            for nf in all_new_forms(E):
                if nf.defined:
                    defined += 1
                    assert newform_failures(nf, E) == []
    assert defined == {3: 1, 4: 11, 5: 84, 6: 553}[d]


def test_aux_split_example_structure():
    E = VChain.of([(7, 1), (5, 2)], D4)
    ax = aux_split(E)
    assert ax.F1dd + ax.F2dd == VChain.of([(7, 1)], D4)
    assert len(ax.F2) == len(ax.F2dd)
    with pytest.raises(ChainError):
        aux_split(VChain.of([(7, 1)], D4))


def test_choices_for_all_forms_cover_every_choice():
    for F in _even_case_examples(5):
        forms = all_new_forms(F)
        n = len(F)
        assert sorted({nf.cutoff for nf in forms}) == list(range(1, n + 1))
        assert {nf.choice for nf in forms if nf.cutoff == n} >= set(choices_for(F, n))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_gamma_sets(d):
    for v in enumerate_isotropic(d):
        for A in chains_in_ON(roots_of(v), 4):
            assert gamma_failures(v, A, term_counts=d <= 4) == []
            for j in range(1, len(A) + 1):
                tau = gamma_index(v, A, j)
                assert bruhat_leq(v, tau)
                assert len(set(v.entries) - set(tau.entries)) == len(gamma_set(A, j))


def test_diagonal_swap_validation():
    with pytest.raises(ChainError):
        diagonal_swap(V4, [R(8, 1)])
    assert diagonal_swap(V4, [R(8, 1), R(7, 2)]) == IsotropicIndex.of([3, 4, 7, 8])
    with pytest.raises(ChainError):
        gamma_set(VChain.of([(7, 1)], D4), 2)


def test_decompose_concatenates():
    rng = random.Random(3)
    for d in (5, 6, 7, 8):
        elems = enumerate_isotropic(d)
        for _ in range(100):
            v = rng.choice(elems)
            E = random_chain(roots_of(v), rng, 6)
            if E is None:
                continue
            parts = decompose(E)
            joined = VChain()
            for p in parts:
                joined = joined + p
                for a, b in zip(p.elements, p.elements[1:]):
                    assert is_intertwined(a, b)
            assert joined == E
            for p, q in zip(parts, parts[1:]):
                assert not is_intertwined(p[-1], q[0])


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=4, max_value=8), st.randoms(use_true_random=False))
def test_random_chain_new_forms(d, rnd):
    elems = enumerate_isotropic(d)
    v = rnd.choice(elems)
    E = random_chain(roots_of(v), rnd, 6)
    if E is None:
        return
    for nf in all_new_forms(E):
        if nf.defined:
            assert newform_failures(nf, E) == []


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=3, max_value=7), st.randoms(use_true_random=False))
def test_domination_reflexive_transitive(d, rnd):
    v = rnd.choice(enumerate_isotropic(d))
    chains = []
    for _ in range(3):
        E = random_chain(roots_of(v), rnd, 4)
        if E is not None:
            chains.append(E)
    for C in chains:
        assert chain_dominates(C, C)
    for A in chains:
        for B in chains:
            for C in chains:
                if chain_dominates(A, B) and chain_dominates(B, C):
                    assert chain_dominates(A, C)


def test_json():
    E = VChain.of([(7, 1), (5, 2)], D4)
    assert E.to_json() == [{"row": 7, "col": 1}, {"row": 5, "col": 2}]
