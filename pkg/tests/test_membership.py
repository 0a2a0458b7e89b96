import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linwht import (
    AlgorithmSeq,
    CheckReport,
    ConditionError,
    check_corner_condition,
    check_membership,
    evaluate,
    hadamard,
    identity,
    is_member,
    pease,
    reversed_inverted,
    sample_member,
    spreading_matrix,
)
from linwht.gf2 import BitMatrix
from linwht.groups import enumerate_gl
from linwht.membership import find_counterexample
from linwht.textio import format_sequence, parse_document

from helpers import (
    N2_ROWS,
    border_all_ones,
    forced_singular_sequence,
    random_sequence,
    read_fixture,
    twisted_member,
)


def all_n2_sequences():
    gl2 = list(enumerate_gl(2))
    for t in itertools.product(gl2, repeat=3):
        yield AlgorithmSeq(t)


def test_exhaustive_n2_against_oracle():
    """Every one of the 216 possible n=2 sequences: the structural check
    agrees with dense evaluation, and exactly six pass."""
    h = hadamard(2)
    members = []
    for P in all_n2_sequences():
        fast = is_member(P)
        assert fast == bool((evaluate(P) == h).all())
        if fast:
            members.append(P)
    assert len(members) == 6
    rows = {
        (
            tuple(m.to_text() for m in P),
            (P[0] @ P[1] @ P[2]).to_text(),
            spreading_matrix(P).to_text(),
        )
        for P in members
    }
    assert rows == N2_ROWS


def test_spreading_matrix_of_pease_is_identity():
    for n in (1, 2, 3, 5):
        assert spreading_matrix(pease(n)) == identity(n)


def test_report_fields_on_member():
    r = check_membership(pease(3))
    assert r.passed and r.cond_product and r.cond_inverse and r.x_invertible
    assert r.witness is None


def test_report_consistency_enforced():
    with pytest.raises(ValueError):
        CheckReport(True, True, True, False, None)
    with pytest.raises(ValueError):
        CheckReport(False, False, False, True, "x")


def test_singular_spreading_witness():
    rng = random.Random(21)
    P = forced_singular_sequence(3, rng)
    r = check_membership(P)
    assert not r.x_invertible and not r.passed and not r.cond_inverse
    assert "singular" in r.witness


def test_identity_sequence_fails():
    # all stage products fix the last basis vector, so every column of X is e
    P = AlgorithmSeq((identity(2),) * 3)
    r = check_membership(P)
    assert not r.passed
    assert not r.x_invertible
    assert spreading_matrix(P).rank() == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**30))
def test_members_pass_and_transpose_closure(n, seed):
    P = sample_member(n, seed)
    assert is_member(P)
    assert is_member(reversed_inverted(P))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**30))
def test_twist_breaks_product_keeps_corner(n, seed):
    P = twisted_member(n, random.Random(seed))
    r = check_membership(P)
    assert r.cond_inverse and not r.cond_product and not r.passed
    assert check_corner_condition(P)


def test_corner_condition_equivalences_exhaustive_n2():
    for P in all_n2_sequences():
        corner = check_corner_condition(P)
        r = check_membership(P)
        assert corner == r.cond_inverse == border_all_ones(P)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 4), st.integers(0, 2**30))
def test_corner_condition_equivalences_random(n, seed):
    rng = random.Random(seed)
    P = {0: random_sequence(n, rng), 1: twisted_member(n, rng), 2: forced_singular_sequence(n, rng)}[seed % 3]
    corner = check_corner_condition(P)
    r = check_membership(P)
    assert corner == r.cond_inverse == border_all_ones(P)


def test_corner_n2_means_central_shuffle():
    c2 = BitMatrix.from_text("01/10")
    for P in all_n2_sequences():
        assert check_corner_condition(P) == (P[1] == c2)


def test_plus_set_pease_n2():
    from linwht import predict_plus_set

    assert predict_plus_set(pease(2), 3) == frozenset({0, 3})
    assert predict_plus_set(pease(2), 0) == frozenset({0, 1, 2, 3})


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**30))
def test_plus_set_matches_oracle_on_members_and_twists(n, seed):
    from linwht import predict_plus_set
    from linwht.oracle import dependency_sets

    rng = random.Random(seed)
    P = sample_member(n, seed) if seed % 2 else twisted_member(n, rng)
    for i in range(1 << n):
        assert predict_plus_set(P, i) == dependency_sets(P, 0, i).plus


def test_plus_set_requires_corner_condition():
    from linwht import predict_plus_set

    P = AlgorithmSeq((identity(2),) * 3)
    with pytest.raises(ConditionError):
        predict_plus_set(P, 1)
    with pytest.raises(ValueError):
        predict_plus_set(pease(2), 4)


@pytest.mark.parametrize("which,n", [("product", 2), ("inverse", 2), ("product", 3), ("inverse", 3)])
def test_counterexample_search_reproduces_fixture(which, n):
    P = find_counterexample(n, which, seed=0)
    assert P is not None
    fixture = parse_document(read_fixture(f"break_{which}_n{n}.alg")).seq
    assert format_sequence(P) == format_sequence(fixture)


@pytest.mark.parametrize("name", ["break_product_n2", "break_inverse_n2", "break_product_n3", "break_inverse_n3"])
def test_frozen_counterexamples_still_split_conditions(name):
    P = parse_document(read_fixture(f"{name}.alg")).seq
    r = check_membership(P)
    assert not r.passed
    if "product" in name:
        assert r.cond_inverse and not r.cond_product
    else:
        assert r.cond_product and not r.cond_inverse
    assert not (evaluate(P) == hadamard(P.n)).all()


def test_counterexample_arg_validation():
    with pytest.raises(ValueError):
        find_counterexample(2, "both")
    with pytest.raises(ValueError):
        find_counterexample(1, "product")


def test_counterexample_budget_exhaustion():
    assert find_counterexample(2, "product", budget=0) is None
