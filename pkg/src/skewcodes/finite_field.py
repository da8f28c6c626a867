"""Exact arithmetic for finite fields, their extensions and etale algebras.

Fields of odd characteristic only; characteristic 2 is rejected at
construction.  Three layers of representation:

* ``PrimeField(p)`` -- elements are ints in [0, p).
* ``ExtensionField`` -- GF(p^n) as GF(p)[x]/(modulus) with the canonical
  modulus (lexicographically smallest monic irreducible, coefficients
  compared constant-term-first as a base-p integer).  Small fields keep
  exp/log tables and encode elements as single ints; large fields fall back
  to coordinate tuples.
* ``RelativeExtension`` -- a quotient base[T]/(m) over any field object.
  When m is reducible this is an etale algebra (a product of field
  extensions) and division by zero divisors raises.

Galois structure (Frobenius, trace, norm, norm preimages, Hilbert 90) is
carried by ``AbsoluteGalois`` (extension of one absolute field over an
embedded smaller one) and ``QuotientGalois`` (a RelativeExtension with the
Frobenius acting on the top factor only, fixing the base).  Both expose the
same interface so downstream code does not care which one it holds.
"""

from __future__ import annotations

import functools
import random

from . import linalg, polys

TABLE_LIMIT = 1 << 16


class PrimeField:
    """GF(p) with elements represented as ints in [0, p)."""

    def __init__(self, p):
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.degree = 1
        self.size = p
        self.modulus = (0, 1)  # the canonical degree-1 modulus x
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return pow(a, e % (self.p - 1), self.p)

    def is_unit(self, a):
        return a != 0

    def coords(self, a):
        return (a,)

    def from_coords(self, coords):
        return coords[0] % self.p

    def encode(self, a):
        return a

    def decode(self, code):
        return code % self.p

    def elements(self):
        return iter(range(self.p))

    def frobenius_p(self, a, j=1):
        return a

    def random_element(self, rng):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField:
    """GF(p^n) = GF(p)[x]/(modulus), with exp/log tables when small.

    In table mode, elements are ints encoding the coordinate vector in base
    p (constant term first).  In poly mode, elements are n-tuples of ints.
    """

    def __init__(self, p, modulus):
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self._pf = PrimeField(p)
        self.modulus = tuple(c % p for c in modulus)
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.degree = len(self.modulus) - 1
        if self.degree < 2:
            raise ValueError("use PrimeField for degree 1")
        if not polys.is_irreducible(self._pf, self.modulus):
            raise ValueError("modulus is not irreducible over GF(p)")
        self.size = p**self.degree
        self.tabled = self.size <= TABLE_LIMIT
        # reduction rows: x^(degree + i) mod modulus, as coordinate tuples
        top = [(-c) % p for c in self.modulus[:-1]]
        self._red = [tuple(top)]
        row = top[:]
        for _ in range(self.degree - 2):
            carry = row[-1]
            row = [0] + row[:-1]
            if carry:
                row = [(a + carry * t) % p for a, t in zip(row, top)]
            self._red.append(tuple(row))
        if self.tabled:
            self._build_tables()
            self.zero = 0
            self.one = 1
            self.x_element = self.p  # encoding of the coordinate vector of x
        else:
            self.zero = (0,) * self.degree
            self.one = (1,) + (0,) * (self.degree - 1)
            self.x_element = (0, 1) + (0,) * (self.degree - 2)
            self._frob_basis = None

    # -- construction helpers ------------------------------------------------

    def _raw_mul(self, a, b):
        p = self.p
        n = self.degree
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                red = self._red[i - n]
                for j in range(n):
                    prod[j] = (prod[j] + c * red[j]) % p
        return tuple(prod[:n])

    def _raw_pow(self, a, e):
        result = (1,) + (0,) * (self.degree - 1)
        base = a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        n_units = self.size - 1
        prime_divs = polys._prime_divisors(n_units)
        gen = None
        for code in range(self.p, self.size):
            cand = self._tuple_of_code(code)
            if all(
                self._raw_pow(cand, n_units // t) != self._one_tuple()
                for t in prime_divs
            ):
                gen = cand
                break
        if gen is None:  # pragma: no cover - a generator always exists
            raise RuntimeError("no multiplicative generator found")
        exp = [0] * n_units
        log = [0] * self.size
        cur = self._one_tuple()
        for i in range(n_units):
            code = self._code_of_tuple(cur)
            exp[i] = code
            log[code] = i
            cur = self._raw_mul(cur, gen)
        self._exp = exp
        self._log = log
        self.generator = exp[1]
        self._coords_cache = [self._tuple_of_code(c) for c in range(self.size)]

    def _one_tuple(self):
        return (1,) + (0,) * (self.degree - 1)

    def _tuple_of_code(self, code):
        out = []
        for _ in range(self.degree):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def _code_of_tuple(self, t):
        code = 0
        for c in reversed(t):
            code = code * self.p + c
        return code

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.tabled:
            ca = self._coords_cache[a]
            cb = self._coords_cache[b]
            return self._code_of_tuple(
                tuple((x + y) % self.p for x, y in zip(ca, cb))
            )
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.tabled:
            ca = self._coords_cache[a]
            cb = self._coords_cache[b]
            return self._code_of_tuple(
                tuple((x - y) % self.p for x, y in zip(ca, cb))
            )
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.tabled:
            return self._code_of_tuple(
                tuple((-x) % self.p for x in self._coords_cache[a])
            )
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        if self.tabled:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]
        return self._raw_mul(a, b)

    def inv(self, a):
        if self.tabled:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self._exp[(-self._log[a]) % (self.size - 1)]
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        inv_poly = polys.invert_mod(
            self._pf, polys.normalize(self._pf, a), self.modulus
        )
        return self._pad(inv_poly)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if self.tabled:
            if a == 0:
                if e == 0:
                    return 1
                if e < 0:
                    raise ZeroDivisionError("inverse of zero")
                return 0
            return self._exp[(self._log[a] * e) % (self.size - 1)]
        if e < 0:
            return self._raw_pow(self.inv(a), -e)
        return self._raw_pow(a, e)

    def is_unit(self, a):
        return a != self.zero

    def _pad(self, t):
        return tuple(t) + (0,) * (self.degree - len(t))

    def coords(self, a):
        if self.tabled:
            return self._coords_cache[a]
        return a

    def from_coords(self, coords):
        t = tuple(c % self.p for c in coords)
        if self.tabled:
            return self._code_of_tuple(t)
        return t

    def encode(self, a):
        if self.tabled:
            return a
        return self._code_of_tuple(a)

    def decode(self, code):
        if self.tabled:
            return code
        return self._tuple_of_code(code)

    def elements(self):
        return (self.decode(i) for i in range(self.size))

    def frobenius_p(self, a, j=1):
        """The p^j-power map (the absolute Frobenius iterated j times)."""
        if self.tabled:
            if a == 0:
                return 0
            return self._exp[
                (self._log[a] * pow(self.p, j, self.size - 1)) % (self.size - 1)
            ]
        if self._frob_basis is None:
            xp = self._raw_pow(self.x_element, self.p)
            basis = [self.one]
            for _ in range(self.degree - 1):
                basis.append(self._raw_mul(basis[-1], xp))
            self._frob_basis = tuple(basis)
        out = a
        for _ in range(j % self.degree):
            acc = [0] * self.degree
            for c, img in zip(out, self._frob_basis):
                if c:
                    for k in range(self.degree):
                        acc[k] = (acc[k] + c * img[k]) % self.p
            out = tuple(acc)
        return out

    def random_element(self, rng):
        return self.decode(rng.randrange(self.size))

    def dlog(self, a):
        """Discrete log base the fixed multiplicative generator (table mode)."""
        if not self.tabled:
            raise ValueError("discrete logs need a tabled field")
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def exp_gen(self, e):
        if not self.tabled:
            raise ValueError("discrete logs need a tabled field")
        return self._exp[e % (self.size - 1)]

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


@functools.lru_cache(maxsize=None)
def canonical_modulus(p, n):
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Candidates are ordered by the base-p integer built from the coefficient
    list, constant term first, which makes element encodings reproducible
    across runs and platforms.
    """
    pf = PrimeField(p)
    if n == 1:
        return (0, 1)
    for tail_code in range(p**n):
        coeffs = []
        code = tail_code
        for _ in range(n):
            coeffs.append(code % p)
            code //= p
        cand = tuple(coeffs) + (1,)
        if polys.is_irreducible(pf, cand):
            return cand
    raise RuntimeError("unreachable: irreducible polynomials exist")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def make_extension(p, n, modulus=None):
    """FieldSpec constructor: GF(p^n) with the canonical (or given) modulus."""
    if n < 1:
        raise ValueError("degree must be positive")
    if modulus is None:
        modulus = canonical_modulus(p, n)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) - 1 != n:
            raise ValueError("modulus degree does not match n")
    if n == 1:
        return PrimeField(p)
    return ExtensionField(p, modulus)


def field_spec_dict(F):
    """Serializable {p, degree, modulus} descriptor of a field."""
    return {"p": F.p, "degree": F.degree, "modulus": list(F.modulus)}


class RelativeExtension:
    """base[T]/(modulus): a free quotient ring over a field object.

    Elements are fixed-length tuples of base element values (ascending
    T-powers).  When the modulus is irreducible over the base this is a
    field; otherwise it is an etale algebra and ``inv`` raises on zero
    divisors.
    """

    def __init__(self, base, modulus):
        self.base = base
        self.modulus = polys.normalize(base, modulus)
        if self.modulus[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.degree = len(self.modulus) - 1
        self.p = base.p
        self.char = base.char
        self.size = base.size**self.degree
        self.zero = (base.zero,) * self.degree
        self.one = self._pad((base.one,))
        self.x_element = self._pad((base.zero, base.one))
        top = [base.neg(c) for c in self.modulus[:-1]]
        red = [tuple(top)]
        row = list(top)
        for _ in range(self.degree - 2):
            carry = row[-1]
            row = [base.zero] + row[:-1]
            if carry != base.zero:
                row = [base.add(a, base.mul(carry, t)) for a, t in zip(row, top)]
            red.append(tuple(row))
        self._red = red
        self._is_field = None

    def _pad(self, t):
        return tuple(t) + (self.base.zero,) * (self.degree - len(t))

    @property
    def is_field(self):
        if self._is_field is None:
            self._is_field = polys.is_irreducible(self.base, self.modulus)
        return self._is_field

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        n = self.degree
        prod = [B.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai == B.zero:
                continue
            for j, bj in enumerate(b):
                if bj != B.zero:
                    prod[i + j] = B.add(prod[i + j], B.mul(ai, bj))
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c != B.zero:
                red = self._red[i - n]
                for j in range(n):
                    prod[j] = B.add(prod[j], B.mul(c, red[j]))
        return tuple(prod[:n])

    def scalar_mul(self, c, a):
        B = self.base
        return tuple(B.mul(c, x) for x in a)

    def inv(self, a):
        inv_poly = polys.invert_mod(
            self.base, polys.normalize(self.base, a), self.modulus
        )
        return self._pad(inv_poly)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_unit(self, a):
        d = polys.gcd(self.base, polys.normalize(self.base, a), self.modulus)
        return polys.degree(d) == 0

    def from_base(self, c):
        return self._pad((c,))

    def coords(self, a):
        """Flattened GF(p) coordinates."""
        out = []
        for c in a:
            out.extend(self.base.coords(c))
        return tuple(out)

    def from_coords(self, coords):
        step = self.base.degree
        return tuple(
            self.base.from_coords(coords[i * step : (i + 1) * step])
            for i in range(self.degree)
        )

    def encode(self, a):
        code = 0
        for c in reversed(a):
            code = code * self.base.size + self.base.encode(c)
        return code

    def decode(self, code):
        out = []
        for _ in range(self.degree):
            out.append(self.base.decode(code % self.base.size))
            code //= self.base.size
        return tuple(out)

    def elements(self):
        return (self.decode(i) for i in range(self.size))

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def __repr__(self):
        return f"{self.base!r}[T]/(deg {self.degree})"


# ---------------------------------------------------------------------------
# Embeddings between absolute fields
# ---------------------------------------------------------------------------


def embedding(sub, sup, rng=None):
    """Canonical embedding sub -> sup between absolute fields over GF(p).

    The image of sub's generator is the root of sub's modulus in sup with
    the smallest integer encoding; the map is verified on the generator.
    Returns (embed, section) where section inverts embed on its image and
    raises if applied outside it.
    """
    if sub.p != sup.p:
        raise ValueError("different characteristics")
    if sup.degree % sub.degree != 0:
        raise ValueError("no embedding: degree does not divide")
    rng = rng or random.Random(0x5EED)
    if sub.degree == 1:
        embed = lambda c: sup.from_coords((c,) + (0,) * (sup.degree - 1))

        def section(x):
            co = sup.coords(x)
            if any(c for c in co[1:]):
                raise ValueError("element is not in the prime subfield")
            return co[0]

        return embed, section
    lifted = tuple(
        sup.from_coords((c,) + (0,) * (sup.degree - 1)) for c in sub.modulus
    )
    rts = polys.roots(sup, lifted, rng)
    if not rts:
        raise RuntimeError("no root of subfield modulus found")  # pragma: no cover
    root = rts[0]
    powers = [sup.one]
    for _ in range(sub.degree - 1):
        powers.append(sup.mul(powers[-1], root))

    def embed(c):
        acc = sup.zero
        for coeff, pw in zip(sub.coords(c), powers):
            if coeff:
                acc = sup.add(acc, _scalar_int_mul(sup, coeff, pw))
        return acc

    pf = PrimeField(sub.p)
    cols = [sup.coords(pw) for pw in powers]
    full = linalg.extend_to_basis(pf, tuple(cols), sup.degree)
    inv_full = linalg.inverse(pf, linalg.transpose(full))

    def section(x):
        sol = linalg.mat_vec(pf, inv_full, sup.coords(x))
        if any(sol[sub.degree :]):
            raise ValueError("element is not in the subfield image")
        return sub.from_coords(sol[: sub.degree])

    return embed, section


def _scalar_int_mul(F, k, x):
    """k*x for an integer scalar k, via repeated addition mod p."""
    acc = F.zero
    for _ in range(k % F.p):
        acc = F.add(acc, x)
    return acc


# ---------------------------------------------------------------------------
# Galois structure
# ---------------------------------------------------------------------------


class AbsoluteGalois:
    """Extension top/base of absolute fields with theta the base-power map.

    ``gen`` fixes the power basis used for relative coordinates; it defaults
    to the canonical generator of top and must generate top over base.
    """

    def __init__(self, top, base, gen=None):
        self.ring = top
        self.base = base
        if top.degree % base.degree != 0:
            raise ValueError("incompatible degrees")
        self.r = top.degree // base.degree
        self.q = base.size
        self.embed_base, self.section_base = embedding(base, top)
        self.gen = top.x_element if gen is None else gen
        powers = [top.one]
        for _ in range(self.r - 1):
            powers.append(top.mul(powers[-1], self.gen))
        self.gen_powers = powers
        pf = PrimeField(top.p)
        base_units = [self.embed_base(b) for b in _p_basis(base)]
        cols = []
        for pw in powers:
            for bu in base_units:
                cols.append(top.coords(top.mul(bu, pw)))
        mat = linalg.transpose(tuple(cols))
        self._rel_inv = linalg.inverse(pf, mat)
        self._pf = pf
        self._theta_exp = None
        self._minpoly = None

    def theta(self, x, i=1):
        """theta^i(x) where theta is the q-power Frobenius over the base."""
        i %= self.r
        T = self.ring
        if getattr(T, "tabled", False):
            if x == 0:
                return 0
            if self._theta_exp is None:
                self._theta_exp = [
                    pow(self.q, j, T.size - 1) for j in range(self.r)
                ]
            return T._exp[(T._log[x] * self._theta_exp[i]) % (T.size - 1)]
        j = i * _log_p(self.q, T.p)
        return T.frobenius_p(x, j)

    def trace(self, x):
        T = self.ring
        acc = x
        cur = x
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            acc = T.add(acc, cur)
        return self.section_base(acc)

    def norm(self, x):
        T = self.ring
        acc = x
        cur = x
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            acc = T.mul(acc, cur)
        return self.section_base(acc)

    def rel_coords(self, x):
        """Coordinates of x in the power basis of gen over the base."""
        sol = linalg.mat_vec(self._pf, self._rel_inv, self.ring.coords(x))
        step = self.base.degree
        return tuple(
            self.base.from_coords(sol[i * step : (i + 1) * step])
            for i in range(self.r)
        )

    def rel_from_coords(self, coords):
        acc = self.ring.zero
        for c, pw in zip(coords, self.gen_powers):
            if c != self.base.zero:
                acc = self.ring.add(acc, self.ring.mul(self.embed_base(c), pw))
        return acc

    def min_poly_over_base(self):
        """Minimal polynomial of gen over the base (degree r, monic)."""
        if self._minpoly is None:
            T = self.ring
            poly = (T.neg(self.gen), T.one)
            conj = self.gen
            for _ in range(self.r - 1):
                conj = self.theta(conj)
                poly = polys.mul(T, poly, (T.neg(conj), T.one))
            self._minpoly = tuple(self.section_base(c) for c in poly)
        return self._minpoly

    def is_unit(self, x):
        return x != self.ring.zero

    def inv(self, x):
        return self.ring.inv(x)

    def norm_preimage(self, y, rng=None):
        return _field_norm_preimage(self, y, rng)

    def hilbert90(self, z, rng=None):
        return _hilbert90(self, z, rng)


class QuotientGalois:
    """K_l = base[T]/(m) with theta acting on T and fixing the base.

    ``theta_gen`` is the image of T under theta; theta is the unique base
    algebra endomorphism sending T there.  The quotient may be etale; the
    component fields, projections and CRT embeddings are built lazily.
    """

    def __init__(self, ring, theta_gen, r):
        self.ring = ring
        self.base = ring.base
        self.r = r
        if ring.degree != r:
            raise ValueError("theta order must match the rank")
        self._theta_pows = {}  # i -> powers of theta^i(T)
        self._theta_gen = theta_gen
        self._components = None
        self.gen_powers = [ring.one]
        for _ in range(r - 1):
            self.gen_powers.append(ring.mul(self.gen_powers[-1], ring.x_element))

    def embed_base(self, c):
        return self.ring.from_base(c)

    def section_base(self, x):
        B = self.base
        if any(c != B.zero for c in x[1:]):
            raise ValueError("element does not lie in the base")
        return x[0]

    def _theta_images(self, i):
        if i not in self._theta_pows:
            img_T = self.ring.x_element
            for _ in range(i):
                img_T = self._apply_linear(self._theta_pows_of(self._theta_gen), img_T)
            pows = [self.ring.one]
            for _ in range(self.r - 1):
                pows.append(self.ring.mul(pows[-1], img_T))
            self._theta_pows[i] = pows
        return self._theta_pows[i]

    def _theta_pows_of(self, img_T):
        if 1 not in self._theta_pows:
            pows = [self.ring.one]
            for _ in range(self.r - 1):
                pows.append(self.ring.mul(pows[-1], img_T))
            self._theta_pows[1] = pows
        return self._theta_pows[1]

    def _apply_linear(self, pows, x):
        R = self.ring
        B = self.base
        acc = R.zero
        for c, img in zip(x, pows):
            if c != B.zero:
                acc = R.add(acc, R.scalar_mul(c, img))
        return acc

    def theta(self, x, i=1):
        i %= self.r
        if i == 0:
            return x
        return self._apply_linear(self._theta_images(i), x)

    def trace(self, x):
        R = self.ring
        acc = x
        cur = x
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            acc = R.add(acc, cur)
        return self.section_base(acc)

    def norm(self, x):
        R = self.ring
        acc = x
        cur = x
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            acc = R.mul(acc, cur)
        return self.section_base(acc)

    def rel_coords(self, x):
        return x

    def rel_from_coords(self, coords):
        return tuple(coords)

    def is_unit(self, x):
        return self.ring.is_unit(x)

    def inv(self, x):
        return self.ring.inv(x)

    # -- etale component structure -------------------------------------------

    def components(self):
        """The etale decomposition: list of (field, project, idempotent).

        Factors of the modulus are canonically ordered; theta may permute
        the components, so componentwise constructions must go through the
        CRT idempotents returned here.
        """
        if self._components is None:
            B = self.base
            rng = random.Random(0xE7A1E)
            factors = polys.factor_squarefree(B, self.ring.modulus, rng)
            comps = []
            for m_j in factors:
                Lj = RelativeExtension(B, m_j)
                others = (self.ring.one,)
                prod = (B.one,)
                for m_k in factors:
                    if m_k is not m_j:
                        prod = polys.mul(B, prod, m_k)
                inv_prod = polys.invert_mod(B, polys.mod(B, prod, m_j), m_j)
                idem = polys.mod(
                    B, polys.mul(B, prod, inv_prod), self.ring.modulus
                )
                comps.append(
                    (
                        Lj,
                        _make_projection(B, m_j, Lj),
                        self.ring._pad(idem),
                    )
                )
            self._components = comps
        return self._components

    def crt(self, values):
        """Assemble the element with the given etale components."""
        comps = self.components()
        R = self.ring
        acc = R.zero
        for (Lj, _proj, idem), val in zip(comps, values):
            lifted = R._pad(polys.normalize(self.base, val))
            acc = R.add(acc, R.mul(lifted, idem))
        return acc

    def norm_preimage(self, y, rng=None):
        """x with Norm(x) = y, built on the first etale component.

        The element equal to a field preimage on the first component and 1
        elsewhere has global norm equal to the component field norm, since
        theta cyclically permutes the components.
        """
        B = self.base
        if y == B.zero or not B.is_unit(y):
            raise ValueError("norm preimage needs an invertible target")
        comps = self.components()
        if len(comps) == 1 and self.ring.is_field:
            gal = _component_galois(self, 0)
            x = _field_norm_preimage(gal, y, rng)
            out = self.ring._pad(polys.normalize(B, x))
        else:
            gal = _component_galois(self, 0)
            x0 = _field_norm_preimage(gal, y, rng)
            vals = [x0] + [comps[j][0].one for j in range(1, len(comps))]
            out = self.crt(vals)
        if self.norm(out) != y:  # pragma: no cover - construction invariant
            raise RuntimeError("norm preimage construction failed")
        return out

    def hilbert90(self, z, rng=None):
        return _hilbert90(self, z, rng)


def _make_projection(B, m_j, Lj):
    def project(x):
        return Lj._pad(polys.mod(B, polys.normalize(B, x), m_j))

    return project


class _ComponentGalois:
    """Field extension L_j / base inside an etale quotient, with its own
    Frobenius (the base-size power map)."""

    def __init__(self, L, d):
        self.ring = L
        self.base = L.base
        self.r = d
        self.q = L.base.size

    def theta(self, x, i=1):
        return self.ring.pow(x, pow(self.q, i % self.r, self.ring.size - 1))

    def norm(self, x):
        R = self.ring
        acc = x
        cur = x
        for _ in range(self.r - 1):
            cur = self.theta(cur)
            acc = R.mul(acc, cur)
        B = self.base
        if any(c != B.zero for c in acc[1:]):
            raise ValueError("norm did not land in the base")
        return acc[0]

    def embed_base(self, c):
        return self.ring.from_base(c)


def _component_galois(qg, j):
    Lj = qg.components()[j][0]
    return _ComponentGalois(Lj, Lj.degree)


def _field_norm_preimage(gal, y, rng=None):
    """Solve Norm(x) = y in a genuine field extension.

    Strategy: if gcd(d, q-1) = 1 the preimage is the explicit power y^t with
    t*d = 1 mod (q-1); otherwise find a multiplicative generator h of the
    top field (deterministic scan, orders certified with a factorization of
    the group order), take the baby-step giant-step discrete log of y in
    the base against Norm(h), and return the matching power of h.
    """
    B = gal.base
    R = gal.ring
    d = gal.r
    if y == B.zero:
        raise ValueError("norm preimage of zero")
    if y == B.one:
        return R.one
    Q = B.size - 1
    if _gcd_int(d, Q) == 1:
        t = pow(d, -1, Q)
        x = _ring_pow(R, gal.embed_base(y), t)
        if _norm_value(gal, x) == y:
            return x
    if getattr(R, "tabled", False):
        h = R.generator
    else:
        h = _find_generator(R, R.size - 1)
    w = _norm_value(gal, h)
    a = _bsgs_dlog(B, w, y, Q)
    if a is None:  # pragma: no cover - Norm(h) generates the base units
        raise RuntimeError("norm preimage: dlog failed")
    return _ring_pow(R, h, a)


def _norm_value(gal, x):
    R = gal.ring
    acc = x
    cur = x
    for _ in range(gal.r - 1):
        cur = gal.theta(cur)
        acc = R.mul(acc, cur)
    if isinstance(R, RelativeExtension):
        B = R.base
        if any(c != B.zero for c in acc[1:]):
            raise RuntimeError("norm did not land in the base")
        return acc[0]
    return gal.section_base(acc)


def _ring_pow(R, x, e):
    if hasattr(R, "pow"):
        return R.pow(x, e)
    raise TypeError("ring without pow")  # pragma: no cover


def _find_generator(R, n_units):
    """Smallest-encoding multiplicative generator of a finite field R."""
    from sympy import factorint  # deferred: sympy import is slow

    prime_divs = sorted(factorint(n_units))
    for code in range(1, R.size):
        cand = R.decode(code)
        if cand == R.zero:
            continue
        if not _is_unit_generic(R, cand):
            continue
        if all(_ring_pow(R, cand, n_units // t) != R.one for t in prime_divs):
            return cand
    raise RuntimeError("no generator found")  # pragma: no cover


def _is_unit_generic(R, x):
    if hasattr(R, "is_unit"):
        return R.is_unit(x)
    return x != R.zero


def _bsgs_dlog(B, g, y, order):
    """Discrete log of y base g in the cyclic group of units of B."""
    m = _isqrt(order) + 1
    table = {}
    cur = B.one
    for j in range(m):
        table.setdefault(B.encode(cur), j)
        cur = B.mul(cur, g)
    factor = B.inv(B.pow(g, m))
    gamma = y
    for i in range(m + 1):
        j = table.get(B.encode(gamma))
        if j is not None:
            return (i * m + j) % order
        gamma = B.mul(gamma, factor)
    return None


def _hilbert90(gal, z, rng=None):
    """An invertible zeta with theta(zeta) = z * zeta, for norm-1 z.

    Uses the averaging operator v -> sum_i (prod_{j<i} theta^j(z)) theta^i(v)
    and inverts its first invertible value; candidate v are scanned over the
    power basis, then random elements.
    """
    R = gal.ring
    if _norm_value_or_none(gal, z) != gal.base.one:
        raise ValueError("hilbert90 requires a norm-1 input")
    if z == _ring_one(gal):
        return _ring_one(gal)
    prefix = [_ring_one(gal)]
    cur = _ring_one(gal)
    for i in range(gal.r - 1):
        cur = R.mul(cur, gal.theta(z, i))
        prefix.append(cur)

    def average(v):
        acc = R.zero
        for i in range(gal.r):
            acc = R.add(acc, R.mul(prefix[i], _theta_i(gal, v, i)))
        return acc

    candidates = _h90_candidates(gal, rng)
    for v in candidates:
        w = average(v)
        if _is_unit_generic(R, w):
            zeta = R.inv(w)
            if gal.theta(zeta) != R.mul(z, zeta):  # pragma: no cover
                raise RuntimeError("hilbert90 averaging failed")
            return zeta
    raise RuntimeError("hilbert90 found no invertible average")  # pragma: no cover


def _theta_i(gal, x, i):
    return gal.theta(x, i)


def _ring_one(gal):
    return gal.ring.one


def _norm_value_or_none(gal, z):
    try:
        return gal.norm(z)
    except ValueError:
        return None


def _h90_candidates(gal, rng):
    R = gal.ring
    if hasattr(gal, "gen_powers"):
        yield from gal.gen_powers
    rng = rng or random.Random(0x90)
    for _ in range(64):
        yield R.random_element(rng)


# ---------------------------------------------------------------------------
# operation-style wrappers around a Galois handle
# ---------------------------------------------------------------------------


def frobenius(gal, a, i=1):
    """theta^i(a) for the declared extension; i may be negative."""
    return gal.theta(a, i)


def trace(gal, a):
    return gal.trace(a)


def norm(gal, a):
    return gal.norm(a)


def norm_preimage(gal, y, rng=None):
    """Some x with Norm(x) = y, deterministic for a fixed seed."""
    return gal.norm_preimage(y, rng)


def hilbert90(gal, z, rng=None):
    """Invertible zeta with theta(zeta) = z zeta, for norm-1 z."""
    return gal.hilbert90(z, rng)


# ---------------------------------------------------------------------------
# quadratic character
# ---------------------------------------------------------------------------


def is_square(F, a):
    """Euler's criterion; zero counts as a square."""
    if a == F.zero:
        return True
    return F.pow(a, (F.size - 1) // 2) == F.one


def sqrt(F, a):
    """A square root of a, or None; deterministic tie-break by encoding."""
    if a == F.zero:
        return F.zero
    if getattr(F, "tabled", False):
        e = F.dlog(a)
        if e % 2:
            return None
        r = F.exp_gen(e // 2)
    else:
        if not is_square(F, a):
            return None
        r = _tonelli_shanks(F, a)
    other = F.neg(r)
    return r if F.encode(r) <= F.encode(other) else other


def _tonelli_shanks(F, a):
    q = F.size
    if q % 4 == 3:
        return F.pow(a, (q + 1) // 4)
    s = 0
    t = q - 1
    while t % 2 == 0:
        t //= 2
        s += 1
    n = None
    for code in range(1, q):
        cand = F.decode(code)
        if not is_square(F, cand):
            n = cand
            break
    c = F.pow(n, t)
    x = F.pow(a, (t + 1) // 2)
    b = F.pow(a, t)
    m = s
    while b != F.one:
        i = 0
        b2 = b
        while b2 != F.one:
            b2 = F.mul(b2, b2)
            i += 1
        e = F.pow(c, 1 << (m - i - 1))
        x = F.mul(x, e)
        c = F.mul(e, e)
        b = F.mul(b, c)
        m = i
    return x


# ---------------------------------------------------------------------------
# misc helpers
# ---------------------------------------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _isqrt(n):
    import math

    return math.isqrt(n)


def _log_p(q, p):
    """a with p^a = q."""
    a = 0
    while q > 1:
        q //= p
        a += 1
    return a


def _p_basis(F):
    """The GF(p)-basis 1, x, x^2, ... of an absolute field."""
    out = [F.one]
    for _ in range(F.degree - 1):
        out.append(F.mul(out[-1], F.x_element if F.degree > 1 else F.one))
    return out
