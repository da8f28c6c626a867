"""Top-level API for selfdual skew cyclic codes.

Existence, exact counting, uniform random generation and exhaustive
enumeration in K[X;theta]/(P(X^r)) for a palindromic central modulus P over
F (the default P = Y^k - 1 gives codes of length r*k over K).  The
separable case goes through the decomposition and the isotropic-subspace
geometry; the purely inseparable case k = p^m is enumerated by the
recursive product walk over twisted component codes, with an optional
deduplicating wrapper since the raw walk can repeat codes.

A code is stored by the normalized monic generator of its left ideal.  The
selfduality test is the product criterion: f f* = 0 in the quotient and
deg f equal to half the length.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import decomposition as dec
from . import finite_field as ff
from . import geometry, ore

_DECOMP_CACHE = {}


class BudgetExceeded(ValueError):
    """An exhaustive walk would exceed its stated budget."""


@dataclass(frozen=True)
class CodeParameters:
    """Parameters of the ambient quotient algebra.

    ``modulus`` is the central palindromic modulus P(Y) as a tuple of
    encoded F-elements (constant term first); None means Y^k - 1.
    ``field_modulus`` optionally overrides the canonical modulus of K over
    GF(p).  ``seed`` pins the component data (the choice of norm preimages
    x_l); different seeds relabel subspaces but give identical code sets.
    """

    q: int
    r: int
    k: int = 1
    modulus: tuple = None
    field_modulus: tuple = None
    seed: int = 0

    def __post_init__(self):
        p, a = dec._split_prime_power(self.q)
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if self.r < 1 or self.k < 1:
            raise ValueError("r and k must be positive")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", a)
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(self.modulus))
            from . import polys

            F = ff.make_extension(p, a)
            central = _central_from_params(self, {"F": F})
            central = polys.normalize(F, central)
            if polys.degree(central) < 1 or central[0] == F.zero:
                raise ValueError("central modulus must be nonconstant with nonzero constant term")
            if not polys.is_palindromic(F, central):
                raise ValueError("central modulus must be palindromic")
        if self.field_modulus is not None:
            object.__setattr__(self, "field_modulus", tuple(self.field_modulus))

    @property
    def s(self):
        return self.r // 2

    def modulus_degree(self):
        if self.modulus is None:
            return self.k
        return len(self.modulus) - 1

    @property
    def n_code(self):
        return self.r * self.modulus_degree()

    def is_default_modulus(self):
        return self.modulus is None

    def separable(self):
        """Whether the central modulus is squarefree over F."""
        if self.modulus is None:
            return self.k % self.p != 0
        D = _field_data(self)
        from . import polys

        central = _central_from_params(self, D)
        return polys.squarefree(D["F"], central)

    def purely_inseparable_power(self):
        """m with k = p^m, or None (default modulus only)."""
        if self.modulus is not None:
            return None
        k = self.k
        m = 0
        while k % self.p == 0:
            k //= self.p
            m += 1
        return m if k == 1 and m >= 1 else None

    def serialize(self):
        return {
            "q": self.q,
            "r": self.r,
            "k": self.k,
            "modulus": list(self.modulus) if self.modulus else None,
            "field_modulus": list(self.field_modulus)
            if self.field_modulus
            else None,
            "seed": self.seed,
        }


def _field_data(params):
    key = ("fields", params.q, params.r, params.field_modulus)
    if key not in _DECOMP_CACHE:
        F = ff.make_extension(params.p, params.a)
        K = ff.make_extension(
            params.p, params.a * params.r, modulus=params.field_modulus
        )
        KG = ff.AbsoluteGalois(K, F)
        _DECOMP_CACHE[key] = {"F": F, "K": K, "KG": KG}
    return _DECOMP_CACHE[key]


def _central_from_params(params, D):
    F = D["F"]
    if params.modulus is None:
        return tuple(
            [F.neg(F.one)] + [F.zero] * (params.k - 1) + [F.one]
        )
    return tuple(F.decode(c % F.size) for c in params.modulus)


def get_decomposition(params):
    """The (cached) component decomposition for separable parameters."""
    key = (params.q, params.r, params.k, params.modulus, params.field_modulus, params.seed)
    if key not in _DECOMP_CACHE:
        D = _field_data(params)
        central = _central_from_params(params, D)
        _DECOMP_CACHE[key] = dec.Decomposition(
            D["F"], D["K"], D["KG"], central, seed=params.seed
        )
    return _DECOMP_CACHE[key]


@dataclass(frozen=True)
class SkewCode:
    """A left ideal of the quotient, stored by its normalized monic generator."""

    params: CodeParameters
    generator: tuple  # coefficients over K, ascending

    @property
    def dim(self):
        return self.params.n_code - (len(self.generator) - 1)

    def serialize(self):
        D = _field_data(self.params)
        K = D["K"]
        return {
            "params": self.params.serialize(),
            "generator": [list(K.coords(c)) for c in self.generator],
            "dim": self.dim,
            "selfdual": is_selfdual(self),
        }


def code_from_serialized(data):
    params = CodeParameters(
        q=data["params"]["q"],
        r=data["params"]["r"],
        k=data["params"]["k"],
        modulus=tuple(data["params"]["modulus"]) if data["params"]["modulus"] else None,
        field_modulus=tuple(data["params"]["field_modulus"])
        if data["params"]["field_modulus"]
        else None,
        seed=data["params"].get("seed", 0),
    )
    K = _field_data(params)["K"]
    gen = tuple(K.from_coords(tuple(c)) for c in data["generator"])
    return SkewCode(params, gen)


def generator_matrix(code):
    """The dim x n_code generator matrix over K (rows X^i f, reduced)."""
    params = code.params
    quotient = _quotient(params)
    K = _field_data(params)["K"]
    n = params.n_code
    rows = []
    current = code.generator
    for _ in range(code.dim):
        padded = tuple(current) + (K.zero,) * (n - len(current))
        rows.append(padded)
        current = quotient.mul(ore.x_power(quotient.R, 1), current)
    return tuple(rows)


def _quotient(params):
    key = ("quotient", params.q, params.r, params.k, params.modulus, params.field_modulus)
    if key not in _DECOMP_CACHE:
        D = _field_data(params)
        F, K, KG = D["F"], D["K"], D["KG"]
        oring = ore.OreRing(K, KG.theta, params.r)
        central = _central_from_params(params, D)
        coeffs = [K.zero] * (params.r * (len(central) - 1) + 1)
        for j, c in enumerate(central):
            if c != F.zero:
                coeffs[j * params.r] = KG.embed_base(c)
        _DECOMP_CACHE[key] = ore.OreQuotient(oring, tuple(coeffs))
    return _DECOMP_CACHE[key]


# ---------------------------------------------------------------------------
# existence and counting
# ---------------------------------------------------------------------------


def exists_selfdual(params):
    """Existence of selfdual codes; see exists_selfdual_reason for the why."""
    return exists_selfdual_reason(params)[0]


def exists_selfdual_reason(params):
    if params.r % 2 != 0:
        return False, "r is odd, so no code can have half dimension"
    s = params.s
    q = params.q
    if params.is_default_modulus():
        if params.k % 2 == 0:
            return False, "k is even: the Y+1 factor obstructs selfduality"
        if s % 2 == 0:
            return False, "s is even: (-1)^s is a square, no isotropic half-space at Y=1"
        if q % 4 != 3:
            return False, "q = 1 mod 4: (-1)^s is a square, no isotropic half-space at Y=1"
        return True, "k odd, s odd and q = 3 mod 4"
    # explicit palindromic modulus: per-component Witt tests; the hermitian
    # and paired components never obstruct, the euclidean ones are decided
    # by the square class of (-1)^s Norm(zeta) disc(K/F)
    if not params.separable():
        return False, "modulus is inseparable; use the inseparable routines"
    D = get_decomposition(params)
    for l in D.I_eucl:
        comp = D.components[l]
        y_is_one = comp.P_l[0] == D.F.neg(D.F.one)  # P_l = Y - 1
        if not _euclid_component_passes(y_is_one, s, q):
            sign = "1" if y_is_one else "-1"
            return False, f"euclidean component at y = {sign} has deficient Witt index"
    return True, "every euclidean component has maximal Witt index"


def _euclid_component_passes(y_is_one, s, q):
    """Closed-form square-class test from the discriminant lemma.

    disc(K/F) is a nonsquare (the extension degree over F_l = F is odd) and
    Norm(zeta) is a square exactly at y = 1, so the test reduces to parity
    conditions on s and q mod 4.
    """
    minus_one_square = (s % 2 == 0) or (q % 4 == 1)
    if y_is_one:
        return not minus_one_square
    return minus_one_square


def count_selfdual(params):
    """Exact number of selfdual codes (0 when none exist); separable only."""
    if not params.separable():
        raise ValueError(
            "inseparable modulus: counting is not available, use inseparable_enumerate"
        )
    if not exists_selfdual(params):
        return 0
    D = get_decomposition(params)
    s = params.s
    total = 1
    for l in D.I_eucl:
        total *= geometry.count_isotropic("euclidean", s, D.components[l].q_l)
    for l in D.I_herm:
        total *= geometry.count_isotropic("hermitian", s, D.components[l].q_l)
    for (l, _m) in D.J:
        q_l = D.components[l].q_l
        total *= sum(geometry.q_binomial(params.r, d, q_l) for d in range(params.r + 1))
    return total


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def _generator_of(code_or_coeffs):
    if isinstance(code_or_coeffs, SkewCode):
        return code_or_coeffs.params, code_or_coeffs.generator
    raise TypeError("expected a SkewCode")


def is_selforthogonal(code):
    params, f = _generator_of(code)
    quotient = _quotient(params)
    f = quotient.normalize_generator(f) if quotient.reduce(f) else quotient.modulus
    return not quotient.mul(f, quotient.star(f))


def is_selfdual(code):
    params, f = _generator_of(code)
    quotient = _quotient(params)
    if not quotient.reduce(f):
        return False  # the zero ideal
    f = quotient.normalize_generator(f)
    if 2 * (len(f) - 1) != params.n_code:
        return False
    return not quotient.mul(f, quotient.star(f))


def dual_code(code):
    params, f = _generator_of(code)
    D = get_decomposition(params)
    return SkewCode(params, D.dual_code(f))


def min_distance(code, budget=10**6):
    """Exact minimum Hamming weight by walking the whole code.

    Requires |K|^dim <= budget; returns None for the zero-dimensional code.
    """
    params, f = _generator_of(code)
    K = _field_data(params)["K"]
    d = code.dim
    if d == 0:
        return None
    if K.size**d > budget:
        raise BudgetExceeded(
            f"codeword count {K.size}^{d} exceeds the budget {budget}"
        )
    rows = generator_matrix(code)
    n = params.n_code
    best = None
    elements = [K.decode(i) for i in range(K.size)]
    import itertools as it

    for combo in it.product(elements, repeat=d):
        if all(c == K.zero for c in combo):
            continue
        word = [K.zero] * n
        for c, row in zip(combo, rows):
            if c == K.zero:
                continue
            for j in range(n):
                if row[j] != K.zero:
                    word[j] = K.add(word[j], K.mul(c, row[j]))
        w = sum(1 for x in word if x != K.zero)
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


# ---------------------------------------------------------------------------
# random generation and enumeration (separable)
# ---------------------------------------------------------------------------


def _component_family_slots(D):
    """Component indices where the subspace family has a free slot."""
    slots = []
    for comp in D.components:
        if comp.symmetry_class in (dec.EUCLIDEAN, dec.HERMITIAN):
            slots.append(("iso", comp.index))
        elif comp.index < comp.tau_partner:
            slots.append(("free", comp.index))
    return slots


def random_selfdual(params, rng):
    """A uniformly distributed selfdual code (components independent)."""
    if not params.separable():
        raise ValueError("random generation needs a separable modulus")
    ok, reason = exists_selfdual_reason(params)
    if not ok:
        raise ValueError(f"no selfdual codes exist: {reason}")
    D = get_decomposition(params)
    family = {}
    for kind, l in _component_family_slots(D):
        if kind == "iso":
            space = D.sesquilinear_form(l)
            family[l] = geometry.random_isotropic_maximal(space, rng)
        else:
            comp = D.component(l)
            family[l] = geometry.random_subspace(comp.Fl, params.r, rng)
    return SkewCode(params, D.code_from_subspaces(family))


def enumerate_selfdual(params):
    """Every selfdual code exactly once, in a deterministic order.

    A cartesian odometer over per-component iterators, components in index
    order; nothing is materialized, so partial iteration is cheap.
    """
    if not params.separable():
        raise ValueError("use inseparable_enumerate for inseparable moduli")
    if not exists_selfdual(params):
        return
    D = get_decomposition(params)
    slots = _component_family_slots(D)

    def factory(slot):
        kind, l = slot
        if kind == "iso":
            space = D.sesquilinear_form(l)
            return lambda: geometry.enumerate_isotropic_maximal(space)
        comp = D.component(l)
        return lambda: geometry.enumerate_subspaces(comp.Fl, params.r)

    factories = [factory(slot) for slot in slots]
    indices = [l for _kind, l in slots]

    def product_lazy(i):
        if i == len(factories):
            yield ()
            return
        for head in factories[i]():
            for rest in product_lazy(i + 1):
                yield (head,) + rest

    for choice in product_lazy(0):
        family = dict(zip(indices, choice))
        yield SkewCode(params, D.code_from_subspaces(family))


def code_from_subspaces(params, family):
    """Spec surface for the explicit bijection at given parameters."""
    D = get_decomposition(params)
    return SkewCode(params, D.code_from_subspaces(family))


def subspaces_from_code(code):
    params, f = _generator_of(code)
    D = get_decomposition(params)
    return D.subspaces_from_code(f)


# ---------------------------------------------------------------------------
# twisted enumeration and the purely inseparable walk
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwistSpec:
    """A form twist xi X^t: xi in K_l with sigma_l(xi) = xi; t in {0, s};
    for t = s additionally theta^s(xi) = -xi (the skew kinds)."""

    xi: object
    t: int


def _validate_twist(D, l, twist):
    comp = D.component(l)
    gal = comp.KlG
    ring = gal.ring
    s = D.s
    if twist.t not in (0, s):
        raise ValueError("twist exponent must be 0 or s")
    if not dec._ring_is_unit(gal, twist.xi):
        raise ValueError("twist element must be invertible")
    if comp.sigma_K(twist.xi) != twist.xi:
        raise ValueError("twist element must be sigma-invariant")
    if twist.t == s:
        if gal.theta(twist.xi, s) != ring.neg(twist.xi):
            raise ValueError("t = s twists need theta^s-antisymmetric xi")


def twisted_enumerate(params, l, twist):
    """Iterator over the xi X^t-twisted selfdual component generators.

    Yields generators over K_l of the twisted-selfdual ideals of
    K_l[X;theta]/(X^r - y_l): monic of degree s when K_l is a field, the
    canonical degree-below-r projector solutions over an etale K_l.  For
    the trivial twist this is exactly the untwisted component enumeration.
    """
    D = get_decomposition(params)
    _validate_twist(D, l, twist)
    space = D.sesquilinear_form(l, twist)
    if space.kind == "euclidean" and not geometry.witt_index_is_maximal(space):
        return
    for rows in geometry.enumerate_isotropic_maximal(space):
        yield D.component_local_generator(l, rows)


def twisted_bullet(params, l, f, twist):
    """The twisted adjunction of f in the component quotient mod X^r - 1:
    X^t xi^-1 zeta^-1 (sum X^-i sigma(f_i)) zeta xi X^-t.

    The product criterion g g^bullet = 0 characterizes the twisted-selfdual
    ideals on the X^r - 1 side; when y_l = 1 (the purely inseparable
    component, where the twisted machinery is actually exercised) that
    quotient coincides with the X^r - y_l side that twisted_enumerate
    yields in.
    """
    D = get_decomposition(params)
    comp = D.component(l)
    gal = comp.KlG
    ring = gal.ring
    quotient = D.component_quotient(l)
    starred = quotient.star(f, coeff_map=comp.sigma_K)
    zeta = comp.zeta_l
    pre = ring.mul(ring.inv(twist.xi), ring.inv(zeta))
    post = ring.mul(zeta, twist.xi)
    out = quotient.mul((pre,), starred)
    out = quotient.mul(out, (post,))
    if twist.t:
        out = quotient.mul(quotient.x_power(twist.t), out)
        out = quotient.mul(out, quotient.x_power(-twist.t))
    return out


def _projective_normalize(KG, xi):
    """Scale by F* so the first nonzero relative coordinate is 1."""
    coords = KG.rel_coords(xi)
    B = KG.base
    for c in coords:
        if c != B.zero:
            scale = KG.embed_base(B.inv(c))
            return KG.ring.mul(scale, xi)
    raise ValueError("zero twist element")


def inseparable_enumerate(params):
    """The purely inseparable walk (k = p^m): yields monic generators of
    degree s*p^m as products of twisted separable selfdual generators.

    Exhaustive but possibly redundant; wrap with
    inseparable_enumerate_distinct for the deduplicated stream.  Mixed
    inseparable multipliers k = k' p^m with k' > 1 are rejected.
    """
    m = params.purely_inseparable_power()
    if m is None:
        raise ValueError("inseparable enumeration needs k = p^m with m >= 1")
    return _inseparable_walk(params, m)


def _inseparable_walk(params, m):
    if params.r % 2 != 0:
        return
    base_params = CodeParameters(
        q=params.q,
        r=params.r,
        k=1,
        field_modulus=params.field_modulus,
        seed=params.seed,
    )
    if not exists_selfdual(base_params):
        return
    D = get_decomposition(base_params)
    l0 = D.I_eucl[0]
    KG = D.KG
    K = D.K
    s = params.s
    pm = params.p**m
    oring = D.oring
    cache = {}

    def twisted_list(t, xi):
        xi = _projective_normalize(KG, xi)
        key = (t, K.encode(xi))
        if key not in cache:
            cache[key] = list(
                twisted_enumerate(base_params, l0, TwistSpec(xi=xi, t=t))
            )
        return cache[key]

    def walk(f, level):
        if level == pm:
            yield f
            return
        t = s * (level % 2)
        # the adjunction twist is keyed by the running constant term f(0);
        # the corresponding form element is its inverse
        for g in twisted_list(t, K.inv(f[0])):
            yield from walk(ore.mul(oring, g, f), level + 1)

    yield from walk((K.one,), 0)


def inseparable_enumerate_distinct(params):
    """Deduplicating wrapper around the inseparable walk.

    Keeps an in-memory set of encoded generators: about 2.4 million entries
    (a few hundred MB) at the largest computed instance q=3, r=6, k=3.
    """
    K = _field_data(params)["K"]
    seen = set()
    for f in inseparable_enumerate(params):
        key = tuple(K.encode(c) for c in f)
        if key not in seen:
            seen.add(key)
            yield SkewCode(params, f)


def inseparable_counts(params):
    """(raw, distinct) yield counts of the inseparable walk."""
    K = _field_data(params)["K"]
    raw = 0
    seen = set()
    for f in inseparable_enumerate(params):
        raw += 1
        seen.add(tuple(K.encode(c) for c in f))
    return raw, len(seen)
