"""Sesquilinear geometry: counts, iterators, sampling, Witt tests."""

import random
from collections import Counter

import pytest

from skewcodes import finite_field as ff
from skewcodes import geometry as geo
from skewcodes import linalg


def hyperbolic_gram(F, s, kind):
    z, o = F.zero, F.one
    G = [[z] * (2 * s) for _ in range(2 * s)]
    for i in range(s):
        G[i][s + i] = o
        G[s + i][i] = o if kind in ("euclidean", "hermitian") else F.neg(o)
    return tuple(tuple(r) for r in G)


def sigma9(F9):
    return lambda x: F9.pow(x, 3)


def test_q_binomials():
    assert geo.q_binomial(6, 3, 3) == 33880
    assert geo.q_binomial(2, 1, 3) == 4
    assert geo.q_binomial(4, 2, 3) == 130
    with pytest.raises(ValueError):
        geo.q_binomial(2, 3, 3)


def test_qbin_product_identity_exact():
    # prod_{k<n} (1 + q^k t) = sum_k q^(k(k-1)/2) qbin(n,k) t^k at t = 1, sqrt(q)
    for q in (3, 5, 7, 9):
        for n in range(13):
            lhs = 1
            for k in range(n):
                lhs *= 1 + q**k
            rhs = sum(
                q ** (k * (k - 1) // 2) * geo.q_binomial(n, k, q)
                for k in range(n + 1)
            )
            assert lhs == rhs
    for q in (9,):  # t = sqrt(q) on square sizes
        t = 3
        for n in range(13):
            lhs = 1
            for k in range(n):
                lhs *= 1 + q**k * t
            rhs = sum(
                q ** (k * (k - 1) // 2) * geo.q_binomial(n, k, q) * t**k
                for k in range(n + 1)
            )
            assert lhs == rhs


def test_count_isotropic_values():
    assert geo.count_isotropic("euclidean", 3, 3) == 80
    assert geo.count_isotropic("euclidean", 9, 3) == 469740602936729600
    assert geo.count_isotropic("skew_euclidean", 3, 3) == 1120
    assert geo.count_isotropic("hermitian", 3, 9) == 4 * 28 * 244
    with pytest.raises(ValueError):
        geo.count_isotropic("hermitian", 2, 5)  # not a square


def test_enumerate_subspaces_counts_and_order():
    F3 = ff.make_extension(3, 1)
    subs = list(geo.enumerate_subspaces(F3, 2))
    assert len(subs) == 6 and len(set(subs)) == 6
    assert sum(1 for s in subs if len(s) == 1) == geo.q_binomial(2, 1, 3)
    assert list(geo.enumerate_subspaces(F3, 1)) == [(), ((1,),)]
    for n, d in [(3, 1), (3, 2), (4, 2)]:
        got = sum(1 for _ in geo.enumerate_subspaces(F3, n, dims=[d]))
        assert got == geo.q_binomial(n, d, 3)
    # deterministic order across runs
    assert subs == list(geo.enumerate_subspaces(F3, 2))


def test_witt_index_test():
    F3 = ff.make_extension(3, 1)
    F9 = ff.make_extension(3, 2)
    sp = geo.SesquiSpace(F3, hyperbolic_gram(F3, 1, "euclidean"), "euclidean")
    assert geo.witt_index_is_maximal(sp)
    sp = geo.SesquiSpace(F9, hyperbolic_gram(F9, 2, "hermitian"), "hermitian", sigma=sigma9(F9))
    assert geo.witt_index_is_maximal(sp)
    bad = geo.SesquiSpace(F3, ((1, 0), (0, 1)), "euclidean")
    assert not geo.witt_index_is_maximal(bad)
    with pytest.raises(ValueError):
        geo.witt_index_is_maximal(
            geo.SesquiSpace(F3, ((1,),), "euclidean")
        )


def test_solve_isotropy_equation_euclidean():
    F3 = ff.make_extension(3, 1)
    # <u,u> = 1, <u,v> = 0, <v,v> = -1: lambda^2 = 1
    sp = geo.SesquiSpace(F3, ((1, 0), (0, 2)), "euclidean")
    rng = random.Random(0)
    u, v = (1, 0), (0, 1)
    seen = set()
    for _ in range(50):
        lam = geo.solve_isotropy_equation(u, v, sp, rng)
        assert lam in (1, 2)
        seen.add(lam)
    assert seen == {1, 2}  # both roots are sampled
    # isotropic u: lambda = 0 must be a valid solution
    sp2 = geo.SesquiSpace(F3, hyperbolic_gram(F3, 1, "euclidean"), "euclidean")
    lam = geo.solve_isotropy_equation((1, 0), (0, 1), sp2, rng)
    w = tuple(F3.add(a, F3.mul(lam, b)) for a, b in zip((1, 0), (0, 1)))
    assert sp2.inner(w, w) == F3.zero


def test_solve_isotropy_postcondition_random():
    F9 = ff.make_extension(3, 2)
    sp = geo.SesquiSpace(F9, hyperbolic_gram(F9, 2, "hermitian"), "hermitian", sigma=sigma9(F9))
    F3 = ff.make_extension(3, 1)
    spe = geo.SesquiSpace(F3, hyperbolic_gram(F3, 2, "euclidean"), "euclidean")
    rng = random.Random(1)
    solved = 0
    for sp_ in (sp, spe):
        F = sp_.field_obj
        for _ in range(500):
            u = tuple(F.random_element(rng) for _ in range(4))
            v = tuple(F.random_element(rng) for _ in range(4))
            lam = geo.solve_isotropy_equation(u, v, sp_, rng)
            if lam is None:
                continue
            w = tuple(F.add(a, F.mul(lam, b)) for a, b in zip(u, v))
            assert sp_.inner(w, w) == F.zero
            solved += 1
    assert solved > 400


def test_hyperbolic_decomposition_postconditions():
    F3 = ff.make_extension(3, 1)
    F9 = ff.make_extension(3, 2)
    rng = random.Random(2)
    cases = [
        geo.SesquiSpace(F3, hyperbolic_gram(F3, 1, "euclidean"), "euclidean"),
        geo.SesquiSpace(F3, hyperbolic_gram(F3, 3, "euclidean"), "euclidean"),
        geo.SesquiSpace(F3, hyperbolic_gram(F3, 2, "skew_euclidean"), "skew_euclidean"),
        geo.SesquiSpace(F9, hyperbolic_gram(F9, 2, "hermitian"), "hermitian", sigma=sigma9(F9)),
    ]
    alpha = None
    for code in range(1, 9):
        c = F9.decode(code)
        if sigma9(F9)(c) == F9.neg(c):
            alpha = c
            break
    cases.append(
        geo.SesquiSpace(
            F9,
            linalg.mat_scale(F9, alpha, hyperbolic_gram(F9, 2, "hermitian")),
            "skew_hermitian",
            sigma=sigma9(F9),
        )
    )
    for sp in cases:
        F = sp.field_obj
        s = sp.dim // 2
        for seed in range(20):
            us, vs = geo.hyperbolic_decomposition(sp, random.Random(seed))
            expected = hyperbolic_gram(F, s, sp.kind)
            basis = list(us) + list(vs)
            gram = tuple(
                tuple(sp.inner(a, b) for b in basis) for a in basis
            )
            assert gram == expected, (sp.kind, seed)
            assert sp.is_isotropic_subspace(us)
            assert linalg.rank(F, tuple(basis)) == 2 * s


def test_hyperbolic_decomposition_rejects_bad_witt():
    F3 = ff.make_extension(3, 1)
    bad = geo.SesquiSpace(F3, ((1, 0), (0, 1)), "euclidean")
    with pytest.raises(ValueError):
        geo.hyperbolic_decomposition(bad, random.Random(0))


def test_trial_budget_property():
    # terminates within the stated factor of the expected trial count
    F3 = ff.make_extension(3, 1)
    sp = geo.SesquiSpace(F3, hyperbolic_gram(F3, 3, "euclidean"), "euclidean")
    for seed in range(100):
        geo.hyperbolic_decomposition(sp, random.Random(seed))  # must not raise


@pytest.mark.parametrize(
    "kind,s,q,pn",
    [
        ("euclidean", 1, 3, (3, 1)),
        ("euclidean", 2, 3, (3, 1)),
        ("euclidean", 3, 3, (3, 1)),
        ("euclidean", 2, 5, (5, 1)),
        ("skew_euclidean", 1, 3, (3, 1)),
        ("skew_euclidean", 2, 3, (3, 1)),
        ("hermitian", 1, 9, (3, 2)),
        ("hermitian", 2, 9, (3, 2)),
        ("skew_hermitian", 1, 9, (3, 2)),
    ],
)
def test_enumerate_isotropic_matches_formula_and_brute(kind, s, q, pn):
    F = ff.make_extension(*pn)
    sigma = sigma9(F) if kind in ("hermitian", "skew_hermitian") else None
    gram = hyperbolic_gram(F, s, kind)
    if kind == "skew_hermitian":
        alpha = next(
            F.decode(c)
            for c in range(1, F.size)
            if sigma(F.decode(c)) == F.neg(F.decode(c))
        )
        gram = linalg.mat_scale(F, alpha, hyperbolic_gram(F, s, "hermitian"))
    sp = geo.SesquiSpace(F, gram, kind, sigma=sigma)
    found = list(geo.enumerate_isotropic_maximal(sp))
    count = geo.count_isotropic(kind, s, q)
    assert len(found) == len(set(found)) == count
    assert all(sp.is_isotropic_subspace(m) for m in found)
    brute = sum(
        1
        for rows in geo.enumerate_subspaces(F, 2 * s, dims=[s])
        if sp.is_isotropic_subspace(rows)
    )
    assert brute == count


def test_enumeration_empty_on_deficient_witt():
    F3 = ff.make_extension(3, 1)
    bad = geo.SesquiSpace(F3, ((1, 0), (0, 1)), "euclidean")
    assert list(geo.enumerate_isotropic_maximal(bad)) == []


def test_random_isotropic_uniform_two_lines():
    F3 = ff.make_extension(3, 1)
    sp = geo.SesquiSpace(F3, hyperbolic_gram(F3, 1, "euclidean"), "euclidean")
    rng = random.Random(3)
    draws = 10**4
    cnt = Counter(geo.random_isotropic_maximal(sp, rng) for _ in range(draws))
    assert set(cnt) == set(geo.enumerate_isotropic_maximal(sp))
    for v in cnt.values():
        assert abs(v / draws - 0.5) < 0.02


def test_random_subspace_distribution():
    F3 = ff.make_extension(3, 1)
    rng = random.Random(4)
    draws = 10**4
    dims = Counter()
    subs = Counter()
    for _ in range(draws):
        rows = geo.random_subspace(F3, 2, rng)
        reduced, _p = linalg.rref(F3, rows) if rows else ((), ())
        assert rows == (reduced if rows else ())
        dims[len(rows)] += 1
        subs[rows] += 1
    assert abs(dims[0] / draws - 1 / 6) < 0.02
    assert abs(dims[1] / draws - 4 / 6) < 0.02
    assert abs(dims[2] / draws - 1 / 6) < 0.02
    assert len(subs) == 6
    # chi-square against uniformity over the 6 subspaces
    from scipy.stats import chi2

    expected = draws / 6
    stat = sum((n - expected) ** 2 / expected for n in subs.values())
    assert stat < chi2.ppf(1 - 1e-3, 5)


def test_b_system_rank_matches_claimed_dimension():
    # the symmetric system on B has d(d+1)/2 independent equations: the
    # solution count per A of full rank d is q^(d(d-1)/2)
    F3 = ff.make_extension(3, 1)
    sp = geo.SesquiSpace(F3, hyperbolic_gram(F3, 3, "euclidean"), "euclidean")
    per_rank = Counter()
    H = geo.hyperbolic_basis(sp)
    for A in geo.enumerate_subspaces(F3, 3):
        d = len(A)
        A_for_C = A
        C = linalg.nullspace(F3, A_for_C, 3) if d else linalg.identity(F3, 3)
        pivots = linalg.rref(F3, C)[1] if C else ()
        n_b = sum(1 for _ in geo._iterate_B(sp, A, pivots, True))
        per_rank[d] = n_b
    for d in range(4):
        assert per_rank[d] == 3 ** (d * (d - 1) // 2)
