"""Per-level consistency checks driven by ``beauville verify``."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from . import classifier, closed_forms, kernels, oracle, weyl
from .classifier import StabilizerType
from .gl2 import Mat2, is_beauville_matrix
from .modular import factorize


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def expected_class_fixed(n: int) -> dict[int, int]:
    """Fixed counts per class predicted by the prime-power formulas."""
    pps = factorize(n)
    return {
        1: closed_forms.theta1(n),
        2: 0,
        3: 0,
        4: 0,
        5: prod(closed_forms.theta2(pp.p, pp.e) for pp in pps),
        6: 0,
        7: prod(closed_forms.theta3(pp.p, pp.e) for pp in pps),
        8: 0,
        9: prod(closed_forms.theta4(pp.p, pp.e) for pp in pps),
    }


def allowed_stabilizers(n: int) -> set[StabilizerType]:
    allowed = set(StabilizerType)
    if any(pp.p % 3 == 2 for pp in factorize(n)):
        allowed.discard(StabilizerType.Z6)
    if n % 5 == 0:
        allowed = {StabilizerType.TRIVIAL, StabilizerType.Z3}
    return allowed


def _sample_gl2(n: int, count: int, rng) -> list[Mat2]:
    out = []
    while len(out) < count:
        a, b, c, d = (int(x) for x in rng.integers(0, n, size=4))
        A = Mat2(a, b, c, d, n)
        if A.is_invertible():
            out.append(A)
    return out


def oracle_agreement(n: int, full_scan_limit: int = 13, samples: int = 2000) -> Check:
    """The three membership tests agree on GL2(Z_n): exhaustively up to the limit, else on a sample."""
    if n <= full_scan_limit:
        mats = oracle.gl2(n)
        how = "all of GL2"
    else:
        rng = np.random.default_rng(n)
        mats = _sample_gl2(n, samples, rng)
        members = kernels.members(n)
        pick = rng.choice(members.shape[0], size=min(samples, members.shape[0]), replace=False)
        mats += [Mat2(*map(int, members[i]), n) for i in np.sort(pick)]
        how = f"{len(mats)} sampled matrices"
    bad = []
    seen = 0
    for A in mats:
        seen += 1
        x = is_beauville_matrix(A)
        if not (x == oracle.beauville_condition_check(A) == oracle.free_action_check(A)):
            bad.append(str(A))
    return Check("oracle-equivalence", not bad, f"{how} ({seen}); mismatches: {bad[:3]}" if bad else f"{how} ({seen})")


def verify_level(
    n: int,
    report: classifier.ClassificationReport | None = None,
    full_scan_limit: int = 13,
    samples: int = 2000,
) -> list[Check]:
    checks = []
    formula = closed_forms.theta(n)
    if report is None:
        report = classifier.orbits(n)

    checks.append(
        Check("enumeration-size", report.total_matrices == formula.theta1, f"{report.total_matrices} vs theta1 {formula.theta1}")
    )

    expected = expected_class_fixed(n)
    observed = {t.class_index: t.fixed for t in report.burnside_breakdown}
    checks.append(Check("fixed-counts", observed == expected, f"observed {observed}"))

    burnside = classifier.burnside_count(n)
    naive = oracle.naive_orbit_count(n)
    agree = formula.theta == report.theta == burnside == naive
    checks.append(
        Check("three-way-theta", agree, f"formula {formula.theta}, partition {report.theta}, burnside {burnside}, graph search {naive}")
    )

    allowed = allowed_stabilizers(n)
    hist = report.stabilizer_histogram()
    extra = sorted(k for k, v in hist.items() if v and StabilizerType(k) not in allowed)
    checks.append(Check("stabilizer-types", not extra, f"histogram {hist}" + (f"; forbidden {extra}" if extra else "")))

    checks.append(oracle_agreement(n, full_scan_limit, samples))
    return checks


def reports_equal(x: classifier.ClassificationReport, y: classifier.ClassificationReport) -> bool:
    return (
        x.n == y.n
        and x.swap == y.swap
        and x.total_matrices == y.total_matrices
        and x.burnside_breakdown == y.burnside_breakdown
        and np.array_equal(x.rep_codes, y.rep_codes)
        and np.array_equal(x.orbit_sizes, y.orbit_sizes)
        and x.stabilizer_types == y.stabilizer_types
    )


def weyl_self_check() -> Check:
    classes = weyl.conjugacy_classes()
    sizes = tuple(c.size for c in classes)
    return Check("class-table", sizes == weyl.CLASS_SIZES, f"sizes {sizes}")
