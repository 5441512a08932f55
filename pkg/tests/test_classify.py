import itertools
import random
from fractions import Fraction

import pytest

from oracles import rb_identity_symbolic
from rbtrunc import linalg
from rbtrunc.algebra import AlgebraSpec
from rbtrunc.classify import (
    InvalidDataError,
    NotRB,
    Reason,
    Weight0Data,
    Weight1Data,
    classify,
    classify_weight0,
    classify_weight1,
    classify_weight_lambda,
    construct,
    construct_weight0,
    construct_weight1,
    rescale_to_weight1,
)
from rbtrunc.fields import QQ, PrimeField
from rbtrunc.generate import GenConfig, random_weight0_data, random_weight1_data
from rbtrunc.operators import LinearOperator, op_scale, rb_check

Q1 = AlgebraSpec(1, QQ)
Q2 = AlgebraSpec(2, QQ)
EXAMPLE_W0 = [[0, 0, 0], [1, 0, 1], [0, 0, 0]]


def op(spec, rows):
    return LinearOperator.from_rows(spec, rows)


# -- weight 0 ---------------------------------------------------------------


def test_construct_weight0_zero():
    P = construct_weight0(Weight0Data(QQ, [0, 0], [[0, 0], [0, 0]]), Q2)
    assert P == LinearOperator.zero(Q2)
    assert rb_check(P, 0).holds


def test_construct_weight0_example():
    d = Weight0Data(QQ, [1, 0], [[0, 1], [0, 0]])
    P = construct_weight0(d, Q2)
    assert P == op(Q2, EXAMPLE_W0)
    assert rb_check(P, 0).holds
    assert rb_identity_symbolic(EXAMPLE_W0, 0)


def test_construct_weight0_rejects():
    with pytest.raises(InvalidDataError) as e:
        construct_weight0(Weight0Data(QQ, [1], [[1]]))
    assert e.value.reason is Reason.L_SQUARED_NONZERO
    with pytest.raises(InvalidDataError) as e:
        construct_weight0(Weight0Data(QQ, [0, 1], [[0, 1], [0, 0]]))
    assert e.value.reason is Reason.LV0_NONZERO


def test_construct_checks_spec():
    with pytest.raises(ValueError):
        construct_weight0(Weight0Data(QQ, [0], [[0]]), Q2)
    with pytest.raises(ValueError):
        construct_weight0(Weight0Data(QQ, [0], [[0]]), AlgebraSpec(1, PrimeField(3)))


def test_classify_weight0_examples():
    assert classify_weight0(LinearOperator.zero(Q2)) == Weight0Data(QQ, [0, 0], [[0, 0], [0, 0]])
    assert classify_weight0(LinearOperator.identity(Q2)) == NotRB(Reason.NONZERO_FIRST_ROW)
    assert classify_weight0(op(Q2, EXAMPLE_W0)) == Weight0Data(QQ, [1, 0], [[0, 1], [0, 0]])


def test_weight0_reason_priority():
    # first row nonzero wins over everything else
    assert classify_weight0(op(Q1, [[0, 1], [0, 1]])).reason is Reason.NONZERO_FIRST_ROW
    assert classify_weight0(op(Q1, [[0, 0], [1, 1]])).reason is Reason.L_SQUARED_NONZERO
    assert classify_weight0(op(Q2, [[0, 0, 0], [0, 0, 1], [1, 0, 0]])).reason is Reason.LV0_NONZERO


# -- weight 1 ---------------------------------------------------------------


def test_construct_weight1_examples():
    P = construct_weight1(Weight1Data(QQ, -1, [[1]]), Q1)
    assert P == op_scale(-1, LinearOperator.identity(Q1))
    assert rb_check(P, 1).holds
    P = construct_weight1(Weight1Data(QQ, 0, [[0, 0], [0, 0]]))
    assert P == LinearOperator.zero(Q2)
    assert rb_check(P, 1).holds
    P = construct_weight1(Weight1Data(QQ, -1, [[1, 0], [0, 0]]))
    assert P == op(Q2, [[-1, 0, 0], [0, -1, 0], [0, 0, 0]])
    assert rb_check(P, 1).holds
    assert rb_identity_symbolic([[-1, 0, 0], [0, -1, 0], [0, 0, 0]], 1)


def test_construct_weight1_rejects():
    with pytest.raises(InvalidDataError) as e:
        construct_weight1(Weight1Data(QQ, 1, [[1]]))
    assert e.value.reason is Reason.ALPHA_NOT_ALLOWED
    with pytest.raises(InvalidDataError) as e:
        construct_weight1(Weight1Data(QQ, 0, [[2]]))
    assert e.value.reason is Reason.Q_NOT_IDEMPOTENT


def test_alpha_minus_one_canonical_over_fp():
    F = PrimeField(7)
    d = Weight1Data(F, -1, [[1]])
    assert d.alpha == 6
    P = construct_weight1(d)
    assert classify_weight1(P) == d


def test_classify_weight1_examples():
    assert classify_weight1(op_scale(-1, LinearOperator.identity(Q1))) == Weight1Data(QQ, -1, [[1]])
    assert classify_weight1(LinearOperator.identity(Q1)) == NotRB(Reason.ALPHA_NOT_ALLOWED)
    assert classify_weight1(op(Q2, [[-1, 0, 0], [0, -1, 0], [0, 0, 0]])) == Weight1Data(QQ, -1, [[1, 0], [0, 0]])


def test_weight1_reason_priority():
    assert classify_weight1(op(Q1, [[1, 1], [1, 5]])).reason is Reason.ALPHA_NOT_ALLOWED
    assert classify_weight1(op(Q1, [[0, 1], [0, 0]])).reason is Reason.OFF_DIAGONAL_BLOCK_NONZERO
    assert classify_weight1(op(Q1, [[-1, 0], [3, 0]])).reason is Reason.OFF_DIAGONAL_BLOCK_NONZERO
    assert classify_weight1(op(Q1, [[-1, 0], [0, 5]])).reason is Reason.Q_NOT_IDEMPOTENT


# -- rescaling --------------------------------------------------------------


def test_rescale_examples():
    P = op_scale(-2, LinearOperator.identity(Q1))
    assert rb_check(P, 2).holds
    R = rescale_to_weight1(P, 2)
    assert R == op_scale(-1, LinearOperator.identity(Q1))
    assert rb_check(R, 1).holds
    assert rescale_to_weight1(P, 1) == P
    with pytest.raises(ValueError):
        rescale_to_weight1(P, 0)


def test_classify_weight_lambda_examples():
    assert classify_weight_lambda(op_scale(-2, LinearOperator.identity(Q1)), 2) == Weight1Data(QQ, -1, [[1]])
    for lam in (1, 2, Fraction(-1, 3)):
        assert classify_weight_lambda(LinearOperator.zero(Q2), lam) == Weight1Data(QQ, 0, [[0, 0], [0, 0]])
    assert isinstance(classify_weight_lambda(LinearOperator.identity(Q1), 2), NotRB)
    with pytest.raises(ValueError):
        classify_weight_lambda(LinearOperator.identity(Q1), 0)


def test_classify_dispatch_and_construct_inverse():
    P = op_scale(-2, LinearOperator.identity(Q2))
    d = classify(P, 2)
    assert construct(d, 2) == P
    assert construct(classify(op(Q2, EXAMPLE_W0), 0)) == op(Q2, EXAMPLE_W0)


# -- soundness, completeness, round trip ------------------------------------


def _all_ops(p, n):
    spec = AlgebraSpec(n, PrimeField(p))
    d = n + 1
    for entries in itertools.product(range(p), repeat=d * d):
        yield LinearOperator(spec, tuple(tuple(entries[i * d:(i + 1) * d]) for i in range(d)))


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
def test_completeness_exhaustive(p, n):
    for P in _all_ops(p, n):
        assert (not isinstance(classify_weight0(P), NotRB)) == rb_check(P, 0).holds
        assert (not isinstance(classify_weight1(P), NotRB)) == rb_check(P, 1).holds


def test_completeness_random_rationals():
    rng = random.Random(17)
    specs = [Q1, Q2, AlgebraSpec(3, QQ)]
    hits = [0, 0]
    for k in range(1000):
        spec = specs[k % 3]
        n = spec.n
        if k % 2:
            # start from a genuine RB operator and maybe perturb one entry
            if k % 4 == 1:
                P = construct_weight0(random_weight0_data(n, rng.randint(0, n // 2), GenConfig(k, 5), QQ))
            else:
                P = construct_weight1(random_weight1_data(n, rng.randint(0, n), GenConfig(k, 5), QQ))
            if rng.random() < 0.5:
                rows = [list(r) for r in P.matrix]
                rows[rng.randrange(n + 1)][rng.randrange(n + 1)] += 1
                P = op(spec, rows)
        else:
            P = op(spec, [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(n + 1)] for _ in range(n + 1)])
        w0 = rb_check(P, 0).holds
        w1 = rb_check(P, 1).holds
        hits[0] += w0
        hits[1] += w1
        assert (not isinstance(classify_weight0(P), NotRB)) == w0
        assert (not isinstance(classify_weight1(P), NotRB)) == w1
    assert min(hits) > 50


def test_soundness_and_round_trip_weight0():
    rng = random.Random(2)
    for k in range(300):
        n = rng.randint(1, 5)
        d = random_weight0_data(n, rng.randint(0, n // 2), GenConfig(k), QQ)
        P = construct_weight0(d)
        assert rb_check(P, 0).holds
        assert classify_weight0(P) == d
        P2 = linalg.matmul(QQ, P.matrix, P.matrix)
        assert linalg.is_zero_matrix(P2)


def test_soundness_and_round_trip_weight1():
    rng = random.Random(3)
    for k in range(300):
        n = rng.randint(1, 5)
        d = random_weight1_data(n, rng.randint(0, n), GenConfig(k), QQ)
        P = construct_weight1(d)
        assert rb_check(P, 1).holds
        back = classify_weight1(P)
        assert back == d
        # the V-block L = -Q satisfies L^2 + L = 0
        L = linalg.matneg(QQ, back.Q)
        assert linalg.is_zero_matrix(linalg.matadd(QQ, linalg.matmul(QQ, L, L), L))


@pytest.mark.parametrize("lam", [2, -3, Fraction(1, 2)])
def test_rescaling_equivalence(lam):
    rng = random.Random(int(Fraction(lam).numerator) + 100)
    for k in range(200):
        n = rng.randint(1, 4)
        P1 = construct_weight1(random_weight1_data(n, rng.randint(0, n), GenConfig(k), QQ))
        assert rb_check(op_scale(lam, P1), lam).holds
        spec = P1.spec
        M = op(spec, [[rng.choice([0, 1, -1, 2]) for _ in range(n + 1)] for _ in range(n + 1)])
        assert rb_check(M, lam).holds == rb_check(op_scale(Fraction(1) / lam, M), 1).holds
