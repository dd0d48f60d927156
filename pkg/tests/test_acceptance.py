"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  The n=5 census is computed once per session and shared.
"""

import itertools
import random
import time

import pytest

from conftest import (
    random_window_vector,
    violates_closed_family_conditions,
    windowed_vectors,
)

from dedstar import extvec, moore, rationals, stars
from dedstar.extvec import POS_INF, ValVector, inf_support, vec_inf, vec_le, vec_mul
from dedstar.moore import (
    GuardError,
    binom_lower_bound,
    count_moore,
    enumerate_moore,
    is_principal_upfilter,
    mask_of,
    moore_generate,
    poset_iso,
)
from dedstar.stars import (
    apply,
    d_of_overring,
    dagger_bounded_oracle,
    dagger_supports,
    default_primes,
    is_finite_type,
    star_from_moore,
    star_join,
    star_le,
    star_meet,
)

TABLE1 = {1: 2, 2: 7, 3: 61, 4: 2480, 5: 1385552}


def report(name, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, name


@pytest.fixture(scope="session")
def census():
    counts = {}
    timings = {}
    for n in range(1, 6):
        start = time.monotonic()
        counts[n] = count_moore(n)
        timings[n] = time.monotonic() - start
    return counts, timings


def test_criterion_1_table_reproduction(census):
    counts, timings = census
    ok = all(counts[n] == TABLE1[n] for n in range(1, 6))
    ok = ok and all(timings[n] <= 1.0 for n in range(1, 5))
    ok = ok and timings[5] <= 600.0
    guard_refused = False
    try:
        count_moore(6)
    except GuardError:
        guard_refused = True
    report(
        "criterion 1: family counts 2,7,61,2480,1385552 for n=1..5; n>=6 guarded",
        ok and guard_refused,
        f"counts={[counts[n] for n in range(1, 6)]}, n5 time={timings[5]:.1f}s",
    )


def test_criterion_2_bounds(census):
    counts, _ = census
    ok = all(
        binom_lower_bound(n) <= counts[n] <= 2 ** (2 ** n) for n in range(1, 6)
    )
    report("criterion 2: 2^C(n,[n/2]) <= count <= 2^2^n for n=1..5", ok)


def test_criterion_3_finite_type_census():
    ok = True
    for n in range(1, 5):
        found = sum(1 for f in enumerate_moore(n) if is_principal_upfilter(f)[0])
        ok = ok and found == 2 ** n
    primes5 = default_primes(5)
    built = [
        d_of_overring(primes5, x)
        for k in range(6)
        for x in itertools.combinations(range(5), k)
    ]
    ok = ok and len({s.family.members for s in built}) == 32
    ok = ok and all(is_finite_type(s) for s in built)
    rng = random.Random(42)
    rejected = 0
    while rejected < 100:
        gens = {rng.randrange(32) for _ in range(rng.randint(1, 4))}
        fam = moore_generate(gens, 5)
        if not is_principal_upfilter(fam)[0]:
            assert not is_finite_type(star_from_moore(fam, primes5))
            rejected += 1
    report(
        "criterion 3: finite-type census 2^n for n<=4; 32 overring stars at n=5; "
        "100 non-up-filters rejected",
        ok,
    )


def test_criterion_4_n2_lattice_shape():
    start = time.monotonic()
    star_list = [star_from_moore(f) for f in enumerate_moore(2)]
    target = []
    for mask in range(8):
        subset = frozenset(i + 1 for i in range(3) if mask >> i & 1)
        if subset != frozenset({1}):
            target.append(subset)
    ok = poset_iso(star_list, star_le, target, lambda a, b: a <= b, "iso")
    elapsed = time.monotonic() - start
    report(
        "criterion 4: 7-element star lattice is the cube on {1,2,3} minus {1}",
        ok and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_criterion_5_colon_oracle_equivalence():
    from dedstar.cli import random_frac_spec

    rng = random.Random(1000)
    mismatches = 0
    for _ in range(1000):
        spec_i = random_frac_spec(rng)
        spec_j = random_frac_spec(rng)
        lhs = rationals.colon_oracle(spec_i, spec_j)
        rhs = extvec.vec_colon(
            rationals.vector_of_module(spec_i),
            rationals.vector_of_module(spec_j),
        )
        if lhs != rhs:
            mismatches += 1
    report(
        "criterion 5: colon oracle equals vector colon on 1000 random pairs",
        mismatches == 0,
    )


def test_criterion_6_nucleus_axiom_suite():
    rng = random.Random(2000)
    pools = {n: list(enumerate_moore(n)) for n in range(1, 5)}
    failures = 0
    for _ in range(10000):
        n = rng.randint(1, 4)
        primes = default_primes(n)
        star = star_from_moore(rng.choice(pools[n]), primes)
        f = random_window_vector(rng, primes)
        g = random_window_vector(rng, primes)
        h = random_window_vector(rng, primes)
        fa, ga, ha = apply(star, f), apply(star, g), apply(star, h)
        ok = vec_le(f, fa)
        ok = ok and apply(star, fa) == fa
        if vec_le(f, g):
            ok = ok and vec_le(fa, ga)
        c = ValVector(primes, tuple(rng.randint(-5, 5) for _ in primes))
        ok = ok and apply(star, extvec.scale(f, c)) == extvec.scale(fa, c)
        ok = ok and apply(star, vec_mul(fa, ga)) == apply(star, vec_mul(f, g))
        ok = ok and (vec_le(vec_mul(f, g), ha) == vec_le(vec_mul(f, ga), ha))
        if not ok:
            failures += 1
    report(
        "criterion 6: closure/nucleus/residuation axioms on 10000 samples at n<=4",
        failures == 0,
    )


def test_criterion_7_dagger_oracle_agreement():
    primes = (2, 3)
    bound = 3
    # pool: indicator vectors of each support plus variants with finite noise
    pool = []
    for support_mask in range(4):
        support = [i for i in range(2) if support_mask >> i & 1]
        pool.append(extvec.iota(primes, support))
        pool.append(ValVector(primes, tuple(
            POS_INF if i in support else 1 - 2 * i for i in range(2)
        )))
    checked = 0
    for size in range(4):
        for gens in itertools.combinations(pool, size):
            family = dagger_supports(gens, primes)
            materialized = dagger_bounded_oracle(list(gens), primes, bound)
            members = set(family.members)
            for v in windowed_vectors(primes, bound):
                expected = mask_of(inf_support(v), 2) in members
                assert (v in materialized) == expected
                checked += 1
    report(
        "criterion 7: bounded dagger closure matches support-family membership",
        True,
        f"{checked} windowed membership checks",
    )


def test_criterion_8_meet_join_laws():
    rng = random.Random(3000)
    primes = default_primes(3)
    families = list(enumerate_moore(3))
    star_list = [star_from_moore(f, primes) for f in families]
    samples = [random_window_vector(rng, primes) for _ in range(20)]
    closed_pool = windowed_vectors(primes, 2)
    for s1, s2 in itertools.product(star_list, repeat=2):
        m = star_meet([s1, s2])
        j = star_join([s1, s2])
        for f in samples:
            assert apply(m, f) == vec_inf([apply(s1, f), apply(s2, f)], primes)
            jf = apply(j, f)
            assert stars.is_closed(s1, jf) and stars.is_closed(s2, jf)
            assert vec_le(f, jf)
    # minimality of the join among sampled closed upper bounds
    for s1, s2 in zip(star_list[::7], star_list[1::7]):
        j = star_join([s1, s2])
        for f in samples[:5]:
            jf = apply(j, f)
            for g in closed_pool:
                if vec_le(f, g) and stars.is_closed(s1, g) and stars.is_closed(s2, g):
                    assert vec_le(jf, g)
    report("criterion 8: meet is pointwise infimum, join is least common closure "
           "over all 61x61 pairs at n=3", True)


def test_criterion_9_closed_family_characterization():
    primes = (2, 3)
    bound = 2
    for fam in enumerate_moore(2):
        reason = violates_closed_family_conditions(fam.members, primes, bound)
        assert reason is None, (fam, reason)
    rng = random.Random(4000)
    rejected = 0
    while rejected < 20:
        members = {m for m in range(4) if rng.random() < 0.5}
        if moore.is_moore(members, 2):
            continue
        reason = violates_closed_family_conditions(members, primes, bound)
        assert reason is not None, members
        rejected += 1
    report("criterion 9: 7 Moore families satisfy the closed-set conditions; "
           "20 non-Moore families violate one", True)
