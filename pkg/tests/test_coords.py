import math
import random

import pytest

from stcores import (
    ATuple,
    InvalidZError,
    NotCoprimeError,
    NotSymmetricError,
    Partition,
    UTuple,
    ZTuple,
    a_coords,
    a_to_z,
    beta_from_partition,
    is_s_core,
    is_self_conjugate_a,
    is_st_core_a,
    random_s_core,
    shift_constant,
    u_to_z,
    z_to_a,
    z_to_u,
)

COPRIME_PAIRS_9 = [
    (s, t) for s in range(1, 10) for t in range(1, 10) if math.gcd(s, t) == 1
]


def test_a_to_z_examples():
    assert a_to_z(ATuple(3, (0, 1, 2)), 2).z == (0, 1, 1)  # empty partition
    assert a_to_z(ATuple(3, (3, 1, -1)), 2).z == (2, 0, 0)  # partition (1)


def test_z_to_a_examples():
    assert z_to_a(ZTuple(3, 2, (0, 1, 1))).a == (0, 1, 2)
    assert z_to_a(ZTuple(3, 2, (2, 0, 0))).a == (3, 1, -1)


def test_ztuple_validation():
    with pytest.raises(InvalidZError):
        ZTuple(3, 2, (1, 1, 0))  # sum(j * z_j) = 1 mod 3
    with pytest.raises(InvalidZError):
        ZTuple(3, 2, (1, 1, 1))  # sums to 3, not 2
    with pytest.raises(NotCoprimeError):
        ZTuple(4, 2, (0, 2, 0, 0))


def test_shift_constant_is_integral():
    for s, t in COPRIME_PAIRS_9:
        k = shift_constant(s, t)
        assert 2 * k == (s + 1) * (t - 1)


def test_a_z_round_trip_500_random_inputs_per_pair():
    rng = random.Random(42)
    for s, t in COPRIME_PAIRS_9:
        for _ in range(500):
            a = a_coords(random_s_core(t, rng), t)
            assert z_to_a(a_to_z(a, s)) == a


def test_is_st_core_a_examples():
    assert is_st_core_a(ATuple(3, (0, 1, 2)), 2)
    assert is_st_core_a(ATuple(3, (3, 1, -1)), 2)


def test_is_st_core_a_matches_beta_criterion_on_random_4_cores():
    rng = random.Random(17)
    for _ in range(200):
        p = random_s_core(4, rng)
        a = a_coords(p, 4)
        truth = is_s_core(beta_from_partition(p), 3)
        assert is_st_core_a(a, 3) == truth
        assert a_to_z(a, 3).is_nonnegative() == truth


def test_is_self_conjugate_a_examples():
    assert is_self_conjugate_a(ATuple(3, (0, 1, 2)))  # empty
    assert is_self_conjugate_a(ATuple(3, (3, 1, -1)))  # (1)
    assert a_coords(Partition([2]), 3).a == (0, 4, -1)
    assert not is_self_conjugate_a(ATuple(3, (0, 4, -1)))  # (2)' = (1,1)


def test_z_to_u_examples():
    assert z_to_u(ZTuple(3, 2, (0, 1, 1))).u == (0, 1)
    assert z_to_u(ZTuple(2, 3, (1, 2))).u == (0, 1)
    assert z_to_u(ZTuple(2, 3, (3, 0))).u == (1, 0)


def test_z_to_u_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        z_to_u(ZTuple(3, 2, (-1, 0, 3)))


def test_u_to_z_examples():
    assert u_to_z(UTuple(3, 2, (0, 1))).z == (0, 1, 1)
    assert u_to_z(UTuple(2, 3, (0, 1))).z == (1, 2)
    assert u_to_z(UTuple(2, 3, (1, 0))).z == (3, 0)


def test_utuple_validation():
    with pytest.raises(InvalidZError):
        UTuple(3, 2, (1, 1))  # sums to 2, expected floor(2/2) = 1
    with pytest.raises(NotCoprimeError):
        UTuple(2, 4, (0, 2))


def test_z_u_round_trip_500_random_inputs_per_pair():
    rng = random.Random(43)
    for s, t in COPRIME_PAIRS_9:
        tp = t // 2
        for _ in range(500):
            tail = [rng.randint(-4, 4) for _ in range(tp)]
            u = UTuple(t, s, (s // 2 - sum(tail), *tail))
            z = u_to_z(u)
            assert all(z.z[i] == z.z[(-i) % t] for i in range(t))
            assert z_to_u(z) == u


def test_self_conjugacy_transfers_between_a_and_z():
    rng = random.Random(44)
    for s, t in COPRIME_PAIRS_9:
        for _ in range(50):
            a = a_coords(random_s_core(t, rng), t)
            z = a_to_z(a, s)
            assert is_self_conjugate_a(a) == all(
                z.z[i] == z.z[(-i) % t] for i in range(t)
            )
