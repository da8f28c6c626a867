"""Acceptance criteria, one test per criterion, each printing PASS/FAIL.

Criterion 10 (the inseparable flagship) walks about 7.2 million products
and verifies 2.36 million codes; expect roughly twenty minutes for it and
a few minutes for the rest of this module.
"""

import random
import statistics
import time
from collections import Counter

from skewcodes import codes, linalg, oracle, ore
from skewcodes import finite_field as ff
from skewcodes import geometry as geo

# Existence pattern of the benchmark tables: for s in {2,3,4} and
# q in {3,5,7,9}, moduli Y^j - 1 (odd j <= 9) and Y^j + 1 (j <= 9).
# T = codes exist (a timing entry), "no" = no codes, I = inseparable cell.
QS = (3, 5, 7, 9)
FIG_MINUS = {
    2: {1: "no no no no", 3: "I no no I", 5: "no I no no", 7: "no no I no", 9: "I no no I"},
    3: {1: "T no T no", 3: "I no T I", 5: "T I T no", 7: "T no I no", 9: "I no T I"},
    4: {1: "no no no no", 3: "I no no I", 5: "no I no no", 7: "no no I no", 9: "I no no I"},
}
FIG_PLUS = {
    2: {
        1: "T T T T", 2: "T T T T", 3: "I T T I", 4: "T T T T", 5: "T I T T",
        6: "I T T I", 7: "T T I T", 8: "T T T T", 9: "I T T I",
    },
    3: {
        1: "no T no T", 2: "T T T T", 3: "I T no I", 4: "T T T T", 5: "no I no T",
        6: "I T T I", 7: "no T I T", 8: "T T T T", 9: "I T no I",
    },
    4: {
        1: "T T T T", 2: "T T T T", 3: "I T T I", 4: "T T T T", 5: "T I T T",
        6: "I T T I", 7: "T T I T", 8: "T T T T", 9: "I T T I",
    },
}


def _report(criterion, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {criterion}: {status} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def _cells():
    for s, rows in FIG_MINUS.items():
        for j, line in rows.items():
            for q, cell in zip(QS, line.split()):
                yield s, q, j, -1, cell
    for s, rows in FIG_PLUS.items():
        for j, line in rows.items():
            for q, cell in zip(QS, line.split()):
                yield s, q, j, +1, cell


def _cell_params(s, q, j, sign):
    if sign < 0:
        return codes.CodeParameters(q=q, r=2 * s, k=j)
    return codes.CodeParameters(q=q, r=2 * s, modulus=(1,) + (0,) * (j - 1) + (1,))


def test_criterion_01_count_reproduction():
    t0 = time.time()
    count = codes.count_selfdual(codes.CodeParameters(q=3, r=6, k=1))
    qbin = geo.q_binomial(6, 3, 3)
    dt = time.time() - t0
    ok = count == 80 and qbin == 33880 and dt < 1.0
    _report(1, ok, f"count={count} (expect 80), qbin={qbin} (expect 33880), {dt:.3f}s < 1s")


def test_criterion_02_large_count_reproduction():
    t0 = time.time()
    count = codes.count_selfdual(codes.CodeParameters(q=3, r=18, k=1))
    dt = time.time() - t0
    ok = count == 469740602936729600 and dt < 1.0
    _report(2, ok, f"count={count} (expect 469740602936729600), {dt:.3f}s < 1s")


def test_criterion_03_existence_table():
    mismatches = []
    n_checked = 0
    for s, q, j, sign, cell in _cells():
        p = codes.CodeParameters(q=q, r=2, k=1).p  # prime of q
        if cell == "I":
            assert j % p == 0, (s, q, j, sign)  # inseparable cells sit at p | j
            continue
        assert j % p != 0, (s, q, j, sign)
        params = _cell_params(s, q, j, sign)
        got = codes.exists_selfdual(params)
        want = cell == "T"
        n_checked += 1
        if got != want:
            mismatches.append((s, q, j, sign, cell, got))
    _report(3, not mismatches, f"{n_checked} separable cells match the tables; mismatches={mismatches}")


def test_criterion_04_enumeration_completeness():
    t0 = time.time()
    params = codes.CodeParameters(q=3, r=6, k=1)
    quotient = codes._quotient(params)
    gens = []
    for code in codes.enumerate_selfdual(params):
        f = code.generator
        assert len(f) - 1 == 3
        assert not quotient.mul(f, quotient.star(f))
        gens.append(f)
    dt = time.time() - t0
    ok = len(gens) == 80 and len(set(gens)) == 80 and dt < 60
    _report(4, ok, f"{len(gens)} codes, {len(set(gens))} distinct, all f f* = 0 and deg 3, {dt:.1f}s < 60s")


def test_criterion_05_oracle_equivalence():
    t0 = time.time()
    results = []
    for q, expect in [(3, 2), (7, 2), (5, 0)]:
        params = codes.CodeParameters(q=q, r=2, k=1)
        report = oracle.brute_codes(params)
        K = codes._field_data(params)["K"]
        slow = {
            tuple(K.from_coords(tuple(c)) for c in gen)
            for gen in report.selfdual_generators
        }
        fast = {c.generator for c in codes.enumerate_selfdual(params)}
        results.append((q, len(fast), report.n_selfdual, fast == slow, expect))
    dt = time.time() - t0
    ok = all(f == o == e and eq for (_q, f, o, eq, e) in results) and dt < 60
    _report(5, ok, f"per-q (fast, oracle, equal-sets): {results}, {dt:.1f}s < 60s")


def test_criterion_06_segre_triangle():
    t0 = time.time()
    F_cache = {q: ff.make_extension(*pn) for q, pn in [(3, (3, 1)), (5, (5, 1)), (7, (7, 1)), (9, (3, 2))]}

    def hyper(F, s, kind):
        z, o = F.zero, F.one
        G = [[z] * (2 * s) for _ in range(2 * s)]
        for i in range(s):
            G[i][s + i] = o
            G[s + i][i] = o if kind in ("euclidean", "hermitian") else F.neg(o)
        return tuple(tuple(r) for r in G)

    lines = []
    for kind in ("euclidean", "skew_euclidean", "hermitian", "skew_hermitian"):
        applicable = (3, 5, 7, 9) if kind in ("euclidean", "skew_euclidean") else (9,)
        for q in applicable:
            F = F_cache[q]
            sigma = (lambda x: F.pow(x, 3)) if kind in ("hermitian", "skew_hermitian") else None
            for s in (1, 2, 3):
                gram = hyper(F, s, kind)
                if kind == "skew_hermitian":
                    alpha = next(
                        F.decode(c) for c in range(1, F.size)
                        if sigma(F.decode(c)) == F.neg(F.decode(c))
                    )
                    gram = linalg.mat_scale(F, alpha, hyper(F, s, "hermitian"))
                space = geo.SesquiSpace(F, gram, kind, sigma=sigma)
                formula = geo.count_isotropic(kind, s, q)
                enum_n = sum(1 for _ in geo.enumerate_isotropic_maximal(space))
                brute_n = None
                if geo.q_binomial(2 * s, s, q) <= 10**6:
                    brute_n, _w = oracle.brute_isotropic(space)
                agree = formula == enum_n and (brute_n is None or brute_n == formula)
                lines.append((kind, s, q, formula, enum_n, brute_n, agree))
    dt = time.time() - t0
    bad = [l for l in lines if not l[-1]]
    ok = not bad and dt < 300
    _report(6, ok, f"{len(lines)} triangle cells agree (brute where within budget), {dt:.1f}s < 300s; failures={bad}")


def test_criterion_07_qbinomial_identities():
    bad = []
    for q in (3, 5, 7, 9):
        ts = [1] + ([3] if q == 9 else [])
        for t in ts:
            for n in range(13):
                lhs = 1
                for k in range(n):
                    lhs *= 1 + (q**k) * t
                rhs = sum(
                    q ** (k * (k - 1) // 2) * geo.q_binomial(n, k, q) * t**k
                    for k in range(n + 1)
                )
                if lhs != rhs:
                    bad.append((q, t, n))
    _report(7, not bad, f"product identity exact for s <= 12, q in (3,5,7,9), t in (1, sqrt q); failures={bad}")


def test_criterion_08_uniform_sampling_chi_square():
    from scipy.stats import chi2

    t0 = time.time()
    params = codes.CodeParameters(q=3, r=6, k=1)
    members = [c.generator for c in codes.enumerate_selfdual(params)]
    assert len(members) == 80
    rng = random.Random(0xC0FFEE)
    draws = 80000
    counts = Counter(codes.random_selfdual(params, rng).generator for _ in range(draws))
    dt = time.time() - t0
    expected = draws / 80
    stat = sum((counts.get(g, 0) - expected) ** 2 / expected for g in members)
    threshold = chi2.ppf(1 - 1e-3, 79)
    ok = set(counts) <= set(members) and stat < threshold and dt < 300
    _report(8, ok, f"chi2={stat:.1f} < {threshold:.1f} (dof 79, alpha 1e-3), {draws} draws in {dt:.0f}s < 300s")


def test_criterion_09_algebraic_property_suite():
    rng = random.Random(99)
    param_sets = [
        codes.CodeParameters(q=3, r=6, k=1),
        codes.CodeParameters(q=3, r=2, k=1),
        codes.CodeParameters(q=7, r=2, k=1),
        codes.CodeParameters(q=3, r=2, k=5),
        codes.CodeParameters(q=3, r=6, modulus=(1, 0, 1)),
    ]
    n_checked = 0
    for params in param_sets:
        D = codes.get_decomposition(params)
        K = D.K
        quotient = D.quotient
        n = params.n_code

        def rand_poly(dmax=None):
            d = rng.randrange(1, (dmax or n) + 1)
            return tuple(K.random_element(rng) for _ in range(d))

        for _ in range(100):
            f, g, h = rand_poly(), rand_poly(), rand_poly()
            # star anti-morphism and involution
            assert quotient.star(quotient.star(f)) == quotient.reduce(f)
            assert quotient.star(quotient.mul(f, g)) == quotient.mul(
                quotient.star(g), quotient.star(f)
            )
            # adjunction formula <f, gh> = <f h*, g>
            lhs = ore.pairing(f, quotient.mul(g, h), quotient, D.KG, params.modulus_degree())
            rhs = ore.pairing(
                quotient.mul(f, quotient.star(h)), g, quotient, D.KG, params.modulus_degree()
            )
            assert lhs == rhs
            # dual involution and lambda-orthogonality transport
            if any(c != K.zero for c in f):
                fn = quotient.normalize_generator(f)
                assert D.dual_code(D.dual_code(fn)) == fn
                code = codes.SkewCode(params, fn)
                rows = codes.generator_matrix(code)
                drows = codes.generator_matrix(codes.dual_code(code))
                perp = linalg.nullspace(K, rows, n) if rows else linalg.identity(K, n)
                assert (linalg.rref(K, drows)[0] if drows else ()) == (perp if perp else ())
            n_checked += 1
        # bijection round trip on 100 random subspace families
        if codes.exists_selfdual(params):
            for _ in range(100):
                code = codes.random_selfdual(params, rng)
                fam = codes.subspaces_from_code(code)
                again = codes.code_from_subspaces(params, fam)
                assert again.generator == code.generator
                n_checked += 1
    _report(9, True, f"{n_checked} randomized instances across {len(param_sets)} parameter sets")


def test_criterion_10_inseparable_flagship():
    t0 = time.time()
    params = codes.CodeParameters(q=3, r=6, k=3)
    K = codes._field_data(params)["K"]
    quotient = codes._quotient(params)
    raw = 0
    seen = set()
    bad = []
    for f in codes.inseparable_enumerate(params):
        raw += 1
        key = tuple(K.encode(c) for c in f)
        if key in seen:
            continue
        seen.add(key)
        if 2 * (len(f) - 1) != params.n_code or quotient.mul(f, quotient.star(f)):
            bad.append(f)
    dt = time.time() - t0
    distinct = len(seen)
    detail = (
        f"raw={raw} (bound 7168000), distinct={distinct} (expect 2360960), "
        f"non-selfdual={len(bad)}, {dt/60:.1f} min < 120 min"
    )
    if distinct != 2360960:
        sample = [tuple(K.decode(c) for c in k) for k in list(seen)[:3]]
        detail += f"; DISCREPANCY against the reported value, sample witnesses: {sample}"
    ok = raw <= 7168000 and distinct == 2360960 and not bad and dt < 7200
    _report(10, ok, detail)


def test_criterion_11_single_code_generation_speed():
    timings = {2: [], 3: [], 4: []}
    worst = (None, 0.0)
    for s, q, j, sign, cell in _cells():
        if cell != "T":
            continue
        params = _cell_params(s, q, j, sign)
        rng = random.Random(7)
        codes.random_selfdual(params, rng)  # warm: builds the component data
        best = min(
            _timed_draw(params, rng) for _ in range(3)
        )
        timings[s].append(best)
        if best > worst[1]:
            worst = ((s, q, j, sign), best)
    medians = {s: round(statistics.median(v), 4) for s, v in timings.items()}
    ok = all(t < 2.0 for v in timings.values() for t in v)
    # the dimension doubles from s=2 to s=4; the cubic-in-r algorithms over
    # larger coefficient fields give a polynomial factor per step, so a
    # 100x cap across two steps excludes exponential blowup while allowing
    # the expected growth
    trend_ok = medians[4] < 100 * max(medians[2], 0.002)
    n_cells = sum(len(v) for v in timings.values())
    _report(
        11,
        ok and trend_ok,
        f"{n_cells} cells, all draws < 2s (worst {worst[1]*1000:.0f}ms at {worst[0]}), "
        f"medians per s: {medians}, ratio s4/s2 = {medians[4]/max(medians[2],1e-9):.1f}x",
    )


def _timed_draw(params, rng):
    t0 = time.time()
    codes.random_selfdual(params, rng)
    return time.time() - t0
