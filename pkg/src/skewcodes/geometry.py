"""Sesquilinear spaces over finite fields and their isotropic subspaces.

A :class:`SesquiSpace` is a finite-dimensional space with a nondegenerate
sesquilinear form given by its Gram matrix, of one of four kinds:

* ``euclidean``       -- sigma = id, symmetric Gram,
* ``skew_euclidean``  -- sigma = id, antisymmetric Gram (symplectic),
* ``hermitian``       -- sigma an involution, sigma(G)^t = G,
* ``skew_hermitian``  -- sigma an involution, sigma(G)^t = -G.

Subspaces are reduced-row-echelon matrices (tuples of row tuples), which
puts them in bijection with the subspaces themselves and makes them usable
as set elements.  Enumeration order is deterministic: pivot sets in
lexicographic order, then free entries in lexicographic order of their
encodings, so iteration is reproducible and resumable.

The hyperbolic decomposition follows the rejection-sampling loop of the
random-generation algorithms (Hermitian and Euclidean variants, plus the
skew adaptations where isotropizing is unnecessary or reduces to the
Hermitian case through scaling by an antisymmetric unit).  The iterator
over maximal isotropic subspaces runs over block matrices (A B; 0 C) in
coordinates of a fixed hyperbolic basis: C is forced by A, and B ranges
over the solutions of a linear system solved once per A.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import finite_field as ff
from . import linalg

KINDS = ("euclidean", "hermitian", "skew_euclidean", "skew_hermitian")


# ---------------------------------------------------------------------------
# exact counting
# ---------------------------------------------------------------------------


def q_int(n, q):
    """The q-analogue [n]_q = 1 + q + ... + q^(n-1)."""
    return (q**n - 1) // (q - 1)


def q_factorial(n, q):
    out = 1
    for i in range(1, n + 1):
        out *= q_int(i, q)
    return out


def q_binomial(n, k, q):
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)."""
    if k < 0 or k > n:
        raise ValueError("q_binomial needs 0 <= k <= n")
    return q_factorial(n, q) // (q_factorial(k, q) * q_factorial(n - k, q))


def count_isotropic(kind, s, q_F):
    """Number of maximal isotropic subspaces of a 2s-dim space of Witt index s."""
    if kind == "euclidean":
        out = 1
        for i in range(s):
            out *= q_F**i + 1
        return out
    if kind in ("hermitian", "skew_hermitian"):
        t = _exact_sqrt(q_F)
        out = 1
        for i in range(s):
            out *= t ** (2 * i + 1) + 1
        return out
    if kind == "skew_euclidean":
        out = 1
        for d in range(1, s + 1):
            out *= q_F**d + 1
        return out
    raise ValueError(f"unknown kind {kind!r}")


def _exact_sqrt(n):
    import math

    t = math.isqrt(n)
    if t * t != n:
        raise ValueError("hermitian counting needs a square field size")
    return t


# ---------------------------------------------------------------------------
# spaces
# ---------------------------------------------------------------------------


@dataclass
class SesquiSpace:
    """A nondegenerate sesquilinear space over a finite field object."""

    field_obj: object
    gram: tuple
    kind: str
    sigma: object = None  # involutive field automorphism, None = identity

    def __post_init__(self):
        F = self.field_obj
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        n = len(self.gram)
        self.dim = n
        if any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix must be square")
        if linalg.det(F, self.gram) == F.zero:
            raise ValueError("Gram matrix is degenerate")
        hermitian_kind = self.kind in ("hermitian", "skew_hermitian")
        if hermitian_kind and self.sigma is None:
            raise ValueError(f"{self.kind} needs a nontrivial involution")
        if not hermitian_kind:
            self.sigma = None
        sg = self._sigma_matrix(self.gram)
        sgt = linalg.transpose(sg)
        if self.kind in ("euclidean", "hermitian"):
            if sgt != self.gram:
                raise ValueError("Gram matrix lacks the symmetric property")
        else:
            if sgt != linalg.mat_neg(F, self.gram):
                raise ValueError("Gram matrix lacks the antisymmetric property")
        self._fixed_size = None
        self._antisym_unit = None
        self._hyperbolic = None
        if self.sigma is not None:
            x = F.decode(min(2, F.size - 1))
            if self.sigma(self.sigma(x)) != x:
                raise ValueError("sigma is not an involution")
            if self.fixed_subfield_size() == F.size:
                raise ValueError("sigma must be nontrivial for hermitian kinds")

    def apply_sigma(self, x):
        return x if self.sigma is None else self.sigma(x)

    def _sigma_matrix(self, M):
        if self.sigma is None:
            return M
        return tuple(tuple(self.sigma(x) for x in row) for row in M)

    def inner(self, u, v):
        """B(u, v) = u G sigma(v)^t."""
        F = self.field_obj
        sv = v if self.sigma is None else tuple(self.sigma(x) for x in v)
        return linalg.dot(F, u, linalg.mat_vec(F, self.gram, sv))

    def is_isotropic_vector(self, u):
        return self.inner(u, u) == self.field_obj.zero

    def is_isotropic_subspace(self, rows):
        return all(
            self.inner(u, v) == self.field_obj.zero
            for u in rows
            for v in rows
        )

    def fixed_subfield_size(self):
        """|F^sigma|, computed from the fixed space of sigma (never a float sqrt)."""
        if self.sigma is None:
            return self.field_obj.size
        if self._fixed_size is None:
            F = self.field_obj
            pf = ff.PrimeField(F.p)
            n = F.degree
            cols = []
            for j in range(n):
                basis_vec = F.from_coords(
                    tuple(1 if i == j else 0 for i in range(n))
                )
                img = F.coords(self.sigma(basis_vec))
                col = tuple(
                    (img[i] - (1 if i == j else 0)) % F.p for i in range(n)
                )
                cols.append(col)
            M = linalg.transpose(tuple(cols))
            ns = linalg.nullspace(pf, M, n)
            self._fixed_size = F.p ** len(ns)
        return self._fixed_size

    def antisym_unit(self):
        """Some a != 0 with sigma(a) = -a (hermitian kinds, odd characteristic)."""
        if self._antisym_unit is None:
            F = self.field_obj
            for code in range(1, F.size):
                cand = F.decode(code)
                if self.sigma(cand) == F.neg(cand) and cand != F.zero:
                    self._antisym_unit = cand
                    break
            else:  # pragma: no cover - exists in odd characteristic
                raise RuntimeError("no antisymmetric unit found")
        return self._antisym_unit

    def sample_fixed(self, rng):
        """Uniform element of F^sigma, as x + sigma(x) over uniform x."""
        F = self.field_obj
        x = F.random_element(rng)
        return F.add(x, self.sigma(x))


# ---------------------------------------------------------------------------
# Witt index test
# ---------------------------------------------------------------------------


def witt_index_is_maximal(space):
    """Whether a totally isotropic subspace of dimension dim/2 exists.

    Always true for the hermitian and skew kinds; in the euclidean case the
    square-class test on (-1)^s det(G) decides.
    """
    if space.dim % 2 != 0:
        raise ValueError("the Witt test here applies to even-dimensional spaces")
    if space.kind != "euclidean":
        return True
    F = space.field_obj
    s = space.dim // 2
    d = linalg.det(F, space.gram)
    if s % 2 == 1:
        d = F.neg(d)
    return ff.is_square(F, d)


# ---------------------------------------------------------------------------
# the isotropy equation  B(u + lambda v, u + lambda v) = 0
# ---------------------------------------------------------------------------


def solve_isotropy_equation(u, v, space, rng):
    """A uniformly random solution lambda, or None when no solution exists."""
    F = space.field_obj
    kind = space.kind
    if kind == "skew_euclidean":
        return F.zero  # every vector is isotropic
    if kind == "skew_hermitian":
        scaled = _hermitian_shadow(space)
        return solve_isotropy_equation(u, v, scaled, rng)
    buu = space.inner(u, u)
    buv = space.inner(u, v)
    bvu = space.inner(v, u)
    bvv = space.inner(v, v)
    if kind == "euclidean":
        if bvv == F.zero:
            if buv == F.zero:
                return F.zero if buu == F.zero else None
            two = F.add(F.one, F.one)
            return F.neg(F.div(buu, F.mul(two, buv)))
        delta2 = F.sub(F.mul(buv, buv), F.mul(buu, bvv))
        root = ff.sqrt(F, delta2)
        if root is None:
            return None
        if root != F.zero and rng.randrange(2):
            root = F.neg(root)
        return F.div(F.sub(root, buv), bvv)
    # hermitian
    if bvv == F.zero:
        if bvu == F.zero:
            return F.zero if buu == F.zero else None
        # Tr_{F/F^sigma}(lambda * bvu) = -buu
        two_inv = F.inv(F.add(F.one, F.one))
        particular = F.mul(F.neg(buu), two_inv)
        a0 = space.antisym_unit()
        t = space.sample_fixed(rng)
        return F.div(F.add(particular, F.mul(t, a0)), bvu)
    delta = F.sub(F.mul(buv, bvu), F.mul(buu, bvv))
    pre = _hermitian_norm_preimage(space, delta, rng)
    return F.div(F.sub(pre, buv), bvv)


def _hermitian_norm_preimage(space, delta, rng):
    """Uniform delta' with delta' sigma(delta') = delta (sigma-invariant delta)."""
    F = space.field_obj
    if delta == F.zero:
        return F.zero
    t = space.fixed_subfield_size()
    if getattr(F, "tabled", False):
        e = F.dlog(delta)
        base = e // (t + 1)
        if base * (t + 1) != e:  # pragma: no cover - delta is a norm
            raise RuntimeError("norm preimage index error")
        j = rng.randrange(t + 1)
        return F.exp_gen(base + j * (t - 1))
    while True:  # rejection; expected about sqrt(q) draws
        cand = F.random_element(rng)
        if cand != F.zero and F.mul(cand, space.sigma(cand)) == delta:
            return cand


def _hermitian_shadow(space):
    """The hermitian space with the same subspaces: Gram scaled by an
    antisymmetric unit."""
    if space._hyperbolic is not None and isinstance(space._hyperbolic, dict):
        shadow = space._hyperbolic.get("shadow")
        if shadow is not None:
            return shadow
    F = space.field_obj
    alpha = space.antisym_unit()
    shadow = SesquiSpace(
        field_obj=F,
        gram=linalg.mat_scale(F, alpha, space.gram),
        kind="hermitian",
        sigma=space.sigma,
    )
    if not isinstance(space._hyperbolic, dict):
        space._hyperbolic = {}
    space._hyperbolic["shadow"] = shadow
    return shadow


# ---------------------------------------------------------------------------
# hyperbolic decomposition (random, rejection-sampled)
# ---------------------------------------------------------------------------


def hyperbolic_decomposition(space, rng, max_trials=None):
    """A basis of hyperbolic pairs (u_1..u_s, v_1..v_s) spanning the space.

    Rejection loop: draw u, v in the orthogonal complement of the pairs
    found so far, keep them when they span a hyperbolic plane with v
    nonisotropic, isotropize u then v through the isotropy equation, and
    scale.  Raises after max_trials failed draws (default 10x the expected
    trial count from the success-probability bounds 4/9 and 2/9).
    """
    if space.dim % 2 != 0:
        raise ValueError("odd-dimensional space has no hyperbolic basis")
    s = space.dim // 2
    if not witt_index_is_maximal(space):
        raise ValueError("Witt index is not maximal")
    if max_trials is None:
        max_trials = max(200, 10 * 5 * s)
    F = space.field_obj
    us, vs = [], []
    constraints = ()  # rref rows; solutions are the orthogonal complement
    basis_of_solutions = linalg.identity(F, space.dim)
    trials = 0
    while len(us) < s:
        trials += 1
        if trials > max_trials:
            raise RuntimeError(
                "hyperbolic decomposition exceeded the trial budget"
            )
        u = _random_combination(F, basis_of_solutions, rng)
        v = _random_combination(F, basis_of_solutions, rng)
        pair = _make_hyperbolic_pair(space, u, v, rng)
        if pair is None:
            continue
        u, v = pair
        us.append(u)
        vs.append(v)
        new_rows = constraints + (_constraint_row(space, u), _constraint_row(space, v))
        constraints = linalg.rref(F, new_rows)[0]
        basis_of_solutions = linalg.nullspace(F, constraints, space.dim)
    return tuple(us), tuple(vs)


def _constraint_row(space, w):
    """Row c with c . x = B(x, w) for all x."""
    F = space.field_obj
    sw = w if space.sigma is None else tuple(space.sigma(x) for x in w)
    return linalg.mat_vec(F, space.gram, sw)


def _random_combination(F, rows, rng):
    if not rows:
        return None
    n = len(rows[0])
    acc = [F.zero] * n
    for row in rows:
        c = F.random_element(rng)
        if c == F.zero:
            continue
        for j in range(n):
            acc[j] = F.add(acc[j], F.mul(c, row[j]))
    return tuple(acc)


def _make_hyperbolic_pair(space, u, v, rng):
    """One attempt of the inner loop; returns (u, v) scaled or None."""
    F = space.field_obj
    if u is None or v is None:
        return None
    zero = (F.zero,) * space.dim
    if u == zero or v == zero:
        return None
    kind = space.kind
    if kind == "skew_euclidean":
        c = space.inner(u, v)
        if c == F.zero:
            return None
        v = tuple(F.div(x, c) for x in v)
        return u, v
    if kind == "skew_hermitian":
        shadow = _hermitian_shadow(space)
        pair = _make_hyperbolic_pair(shadow, u, v, rng)
        if pair is None:
            return None
        u, v = pair
        # rescale so that the original (skew) pairing of the pair is 1
        c = space.inner(u, v)
        v = tuple(F.mul(x, F.inv(space.apply_sigma(c))) for x in v)
        return u, v
    if not _independent2(F, u, v):
        return None
    if space.inner(v, v) == F.zero:
        return None
    if kind == "euclidean":
        buv = space.inner(u, v)
        delta = F.sub(
            F.mul(buv, buv), F.mul(space.inner(u, u), space.inner(v, v))
        )
        if not ff.is_square(F, delta):
            return None
    lam = solve_isotropy_equation(u, v, space, rng)
    if lam is None:
        return None
    u = tuple(F.add(a, F.mul(lam, b)) for a, b in zip(u, v))
    if space.inner(u, v) == F.zero:
        return None
    lam = solve_isotropy_equation(v, u, space, rng)
    if lam is None:  # pragma: no cover - solvable since B(u, v) != 0
        return None
    v = tuple(F.add(a, F.mul(lam, b)) for a, b in zip(v, u))
    c = space.apply_sigma(space.inner(u, v))
    v = tuple(F.mul(x, F.inv(c)) for x in v)
    return u, v


def _independent2(F, u, v):
    return linalg.rank(F, (u, v)) == 2


def random_isotropic_maximal(space, rng):
    """Uniformly distributed maximal isotropic subspace, as RREF rows."""
    us, _vs = hyperbolic_decomposition(space, rng)
    return linalg.rref(space.field_obj, us)[0]


# ---------------------------------------------------------------------------
# subspace iterators
# ---------------------------------------------------------------------------


def enumerate_subspaces(F, n, dims=None):
    """All RREF matrices with n columns (optionally restricted dimensions).

    Yields each subspace exactly once: pivot sets in lexicographic order,
    then the free entries in lexicographic order of element encodings.  The
    zero subspace is the empty matrix ().
    """
    if dims is None:
        dims = range(n + 1)
    element_list = None
    for d in dims:
        if d == 0:
            yield ()
            continue
        if element_list is None:
            element_list = [F.decode(i) for i in range(F.size)]
        for pivots in itertools.combinations(range(n), d):
            free_slots = [
                (i, j)
                for i in range(d)
                for j in range(pivots[i] + 1, n)
                if j not in pivots
            ]
            for values in itertools.product(element_list, repeat=len(free_slots)):
                rows = [[F.zero] * n for _ in range(d)]
                for i in range(d):
                    rows[i][pivots[i]] = F.one
                for (i, j), val in zip(free_slots, values):
                    rows[i][j] = val
                yield tuple(tuple(r) for r in rows)


def count_subspaces(F, n, dims=None):
    if dims is None:
        dims = range(n + 1)
    return sum(q_binomial(n, d, F.size) for d in dims)


def subspace_to_json(F, rows):
    """RREF matrix as an array of rows of element encodings."""
    return [[F.encode(x) for x in row] for row in rows]


def subspace_from_json(F, data):
    return tuple(tuple(F.decode(x) for x in row) for row in data)


def random_subspace(F, n, rng):
    """Uniform subspace of F^n: dimension weighted by q-binomials, then a
    rejection-sampled independent family, returned as RREF rows."""
    q = F.size
    weights = [q_binomial(n, d, q) for d in range(n + 1)]
    total = sum(weights)
    pick = rng.randrange(total)
    d = 0
    acc = 0
    for dim, w in enumerate(weights):
        acc += w
        if pick < acc:
            d = dim
            break
    if d == 0:
        return ()
    while True:
        rows = tuple(
            tuple(F.random_element(rng) for _ in range(n)) for _ in range(d)
        )
        reduced, pivots = linalg.rref(F, rows)
        if len(reduced) == d:
            return reduced


# ---------------------------------------------------------------------------
# iterator over maximal isotropic subspaces (A B; 0 C blocks)
# ---------------------------------------------------------------------------


def hyperbolic_basis(space):
    """A fixed hyperbolic basis of the space, computed once per space with a
    deterministic seed, as a matrix whose rows are u_1..u_s, v_1..v_s."""
    cached = space._hyperbolic if isinstance(space._hyperbolic, dict) else {}
    if "basis" not in cached:
        rng = random.Random(0xA11CE)
        us, vs = hyperbolic_decomposition(space, rng)
        cached["basis"] = tuple(us) + tuple(vs)
        space._hyperbolic = cached
    return cached["basis"]


def enumerate_isotropic_maximal(space):
    """Every maximal isotropic subspace exactly once, as ambient RREF rows.

    Outer loop over RREF matrices A with s columns; C is the RREF basis of
    the orthogonal of RowSpan(A) (or RowSpan(sigma(A)) in the hermitian
    kinds); the inner loop runs over the solutions B of the (skew-)symmetry
    linear system with vanishing columns at the pivots of C, solved over
    GF(p) once per A.
    """
    if space.dim % 2 != 0:
        raise ValueError("no maximal isotropic subspaces in odd dimension")
    if not witt_index_is_maximal(space):
        return
    F = space.field_obj
    s = space.dim // 2
    H = hyperbolic_basis(space)
    hermitian_kind = space.kind in ("hermitian", "skew_hermitian")
    eps_plus = space.kind in ("euclidean", "hermitian")
    for A in enumerate_subspaces(F, s):
        d = len(A)
        if d == 0:
            C = linalg.identity(F, s)
        else:
            A_for_C = (
                tuple(tuple(space.sigma(x) for x in row) for row in A)
                if hermitian_kind
                else A
            )
            C = linalg.nullspace(F, A_for_C, s)
        c_pivots = linalg.rref(F, C)[1] if C else ()
        for B in _iterate_B(space, A, c_pivots, eps_plus):
            rows_hyp = []
            for i in range(d):
                rows_hyp.append(tuple(A[i]) + tuple(B[i]))
            for crow in C:
                rows_hyp.append((F.zero,) * s + tuple(crow))
            ambient = tuple(
                linalg.vec_mat(F, row, H) for row in rows_hyp
            )
            yield linalg.rref(F, ambient)[0]


def _iterate_B(space, A, c_pivots, eps_plus):
    """All d x s matrices B with zero columns at c_pivots satisfying
    A sigma(B)^t + eps B sigma(A)^t = 0, iterated over a GF(p) kernel basis."""
    F = space.field_obj
    d = len(A)
    s = len(A[0]) if A else 0
    if d == 0:
        yield ()
        return
    free_cols = [j for j in range(s) if j not in set(c_pivots)]
    slots = [(i, j) for i in range(d) for j in free_cols]
    pdeg = F.degree
    p = F.p
    pf = ff.PrimeField(p)
    nunk = len(slots) * pdeg
    if nunk == 0:
        yield tuple((F.zero,) * s for _ in range(d))
        return
    p_basis = [
        F.from_coords(tuple(1 if t == j else 0 for t in range(pdeg)))
        for j in range(pdeg)
    ]
    columns = []
    for (i, j) in slots:
        for unit in p_basis:
            Bmat = [[F.zero] * s for _ in range(d)]
            Bmat[i][j] = unit
            Smat = _sym_defect(space, A, Bmat, eps_plus)
            col = []
            for row in Smat:
                for entry in row:
                    col.extend(F.coords(entry))
            columns.append(tuple(col))
    M = linalg.transpose(tuple(columns))
    kernel = linalg.nullspace(pf, M, nunk)
    kernel = list(kernel)
    for combo in itertools.product(range(p), repeat=len(kernel)):
        vec = [0] * nunk
        for c, basis_vec in zip(combo, kernel):
            if c:
                for t in range(nunk):
                    vec[t] = (vec[t] + c * basis_vec[t]) % p
        Bmat = [[F.zero] * s for _ in range(d)]
        for idx, (i, j) in enumerate(slots):
            coords = tuple(vec[idx * pdeg : (idx + 1) * pdeg])
            Bmat[i][j] = F.from_coords(coords)
        yield tuple(tuple(r) for r in Bmat)


def _sym_defect(space, A, B, eps_plus):
    """A sigma(B)^t + eps B sigma(A)^t, the matrix that must vanish."""
    F = space.field_obj
    sigB = tuple(
        tuple(space.apply_sigma(x) for x in row) for row in B
    )
    sigA = tuple(
        tuple(space.apply_sigma(x) for x in row) for row in A
    )
    left = linalg.mat_mul(F, A, linalg.transpose(sigB))
    right = linalg.mat_mul(F, tuple(tuple(r) for r in B), linalg.transpose(sigA))
    if not eps_plus:
        right = linalg.mat_neg(F, right)
    return linalg.mat_add(F, left, right)
