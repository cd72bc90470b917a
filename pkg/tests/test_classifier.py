from itertools import product

import numpy as np
import pytest
from brute import brute_fixed, brute_members, brute_orbits

from beauville import classifier, kernels, weyl
from beauville.classifier import (
    ModulusMismatchError,
    StabilizerType,
    are_isomorphic,
    burnside_count,
    canonical_rep,
    fixed_count,
    orbits,
    orbits_unswapped,
    stabilizer_type,
)
from beauville.gl2 import Mat2
from beauville.modular import LevelError
from beauville.weyl import ID, J, SIGMA1, SIGMA2, WElement, act, perm_mul

# orbit sizes of the brute-force breadth-first partition (tests/brute.py)
ORBIT_SIZES_7 = [12, 24, 36, 72, 72, 72, 72]


def test_orbits_n5_single_orbit(backend):
    r = orbits(5, backend=backend)
    assert r.theta == 1
    (oc,) = r.orbit_classes
    assert oc.orbit_size == 24
    assert oc.stabilizer_type is StabilizerType.Z3
    assert are_isomorphic(oc.canonical_rep, Mat2(1, 3, 2, 4, 5))


def test_orbits_n7_matches_brute_partition(backend):
    r = orbits(7, backend=backend)
    assert r.theta == 7
    assert sorted(r.orbit_sizes.tolist()) == ORBIT_SIZES_7
    brute = brute_orbits(7)
    assert sorted(min(o) for o in brute) == [oc.canonical_rep for oc in r.orbit_classes]
    assert r.burnside_total == 360 + 4 * 18 + 6 * 8 + 12 * 2 == 72 * 7


def test_orbits_n11():
    r = orbits(11)
    assert r.theta == 79 == len(brute_orbits(11))
    assert int(r.orbit_sizes.sum()) == 5040
    assert (5040 + 4 * 90 + 6 * 48 + 0) == 72 * 79


def test_report_invariants():
    for n in (5, 7, 11, 13, 25, 35):
        r = orbits(n)
        assert int(r.orbit_sizes.sum()) == r.total_matrices
        assert r.burnside_total == 72 * r.theta
        assert list(r.rep_codes) == sorted(r.rep_codes)
        for oc in r.orbit_classes:
            assert 72 % oc.orbit_size == 0
            assert oc.orbit_size * oc.stabilizer_type.order == 72


def test_backends_give_identical_reports():
    a = orbits(13, backend="numpy")
    b = orbits(13)
    assert np.array_equal(a.rep_codes, b.rep_codes)
    assert np.array_equal(a.orbit_sizes, b.orbit_sizes)
    assert a.stabilizer_types == b.stabilizer_types
    assert a.burnside_breakdown == b.burnside_breakdown


def test_report_independent_of_threads():
    a = orbits(17, threads=1)
    b = orbits(17, threads=2)
    assert np.array_equal(a.rep_codes, b.rep_codes)
    assert a.stabilizer_types == b.stabilizer_types


@pytest.mark.parametrize("n", [5, 7, 11, 13])
def test_orbit_stabilizer_every_matrix(n, backend):
    mats = kernels.members(n, name=backend)
    best, stab = kernels.canonical_stats(mats, n, weyl.action_table(), name=backend)
    _, inverse, counts = np.unique(best, return_inverse=True, return_counts=True)
    assert np.all(counts[inverse] * stab == 72)


def test_fixed_count_examples(backend):
    assert fixed_count(WElement(ID, SIGMA2, 1), 7, backend=backend) == 0
    assert fixed_count(WElement(SIGMA1, SIGMA1, 1), 7, backend=backend) == 18
    assert fixed_count(J, 7, backend=backend) == 8
    assert fixed_count(WElement(SIGMA2, perm_mul(SIGMA1, SIGMA2), -1), 7, backend=backend) == 2


def test_fixed_count_matches_brute_force_n7():
    members = brute_members(7)
    vec = classifier.fixed_count_vector(7)
    for w, f in zip(weyl.elements(), vec):
        assert brute_fixed(w, 7, members) == f


def test_fixed_count_is_class_function_n7():
    vec = classifier.fixed_count_vector(7)
    lookup = {w: i for i, w in enumerate(weyl.elements())}
    for c in weyl.conjugacy_classes():
        values = {int(vec[lookup[w]]) for w in weyl.class_members(c.index)}
        assert len(values) == 1


# every valid n <= 55 is covered by the acceptance module
@pytest.mark.parametrize("n", [5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 49, 55])
def test_incompatible_classes_fix_nothing(n):
    r = orbits(n)
    fixed = {t.class_index: t.fixed for t in r.burnside_breakdown}
    assert [fixed[i] for i in (2, 3, 4, 6, 8)] == [0] * 5


@pytest.mark.parametrize("n", [5, 7, 11, 13])
def test_incidence_identity(n):
    mats = kernels.members(n)
    _, stab = kernels.canonical_stats(mats, n, weyl.action_table())
    vec = classifier.fixed_count_vector(n)
    non_identity = sum(int(f) for w, f in zip(weyl.elements(), vec) if w != weyl.IDENTITY)
    assert int((stab - 1).sum()) == non_identity


def test_burnside_count():
    assert [burnside_count(n) for n in (5, 7, 11, 13)] == [1, 7, 79, 178]
    assert burnside_count(7, swap=False) == (360 + 4 * 18) // 36 == 12


def test_canonical_rep_properties_n5():
    members = [Mat2(*m, 5) for m in brute_members(5)]
    reps = {canonical_rep(A) for A in members}
    assert len(reps) == 1
    for A in members:
        r = canonical_rep(A)
        assert canonical_rep(r) == r
        for w in weyl.elements():
            assert canonical_rep(act(w, A)) == r


def test_are_isomorphic():
    A = Mat2(1, 3, 2, 4, 5)
    assert are_isomorphic(A, act(J, A))
    assert are_isomorphic(A, Mat2(2, 4, 1, 3, 5))
    reps = [oc.canonical_rep for oc in orbits(7).orbit_classes]
    for X, Y in product(reps, repeat=2):
        assert are_isomorphic(X, Y) == (X == Y)
    with pytest.raises(ModulusMismatchError):
        are_isomorphic(A, reps[0])


def test_stabilizer_type_examples():
    assert stabilizer_type(Mat2(1, 3, 2, 4, 5)) is StabilizerType.Z3
    for m in brute_members(5):
        assert stabilizer_type(Mat2(*m, 5)) in (StabilizerType.TRIVIAL, StabilizerType.Z3)
    # a = -c = -d, b = -2a, -3a^2 = 1 mod 13 at a = 2
    A = Mat2(2, 9, 11, 11, 13)
    assert (-3 * 2 * 2) % 13 == 1
    assert len(weyl.stabilizer(A)) % 6 == 0
    assert stabilizer_type(A).order == 6


def test_kernel_stabilizers_match_python():
    r = orbits(13)
    for oc in r.orbit_classes:
        assert stabilizer_type(oc.canonical_rep) is oc.stabilizer_type


def test_orbits_unswapped():
    assert orbits_unswapped(5) == 2
    assert orbits_unswapped(7) == 12 == len(brute_orbits(7, weyl.factor_preserving()))
    for n in (5, 7, 11, 13, 25):
        assert orbits_unswapped(n) >= orbits(n).theta


def test_invalid_level():
    with pytest.raises(LevelError):
        orbits(9)
    with pytest.raises(LevelError):
        fixed_count(J, 15)


def test_classify_group_rejects_bad_orders():
    with pytest.raises(AssertionError):
        classifier.classify_group(weyl.elements()[:4])
