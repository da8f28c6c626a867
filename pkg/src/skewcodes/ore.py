"""Skew polynomial arithmetic K[X; theta] and central quotients.

Multiplication follows the twisted law X*c = theta(c)*X.  Skew polynomials
are tuples of coefficient-ring values in ascending X-degree with no trailing
zeros (zero polynomial = empty tuple); an :class:`OreRing` carries the
coefficient ring and the automorphism.  Central quotients (by a monic
polynomial in the center with theta-fixed coefficients and invertible
constant term) are handled by :class:`OreQuotient`, which also implements
the star adjunction f = sum f_i X^i -> sum X^(-i) f_i, rewritten with
nonnegative exponents modulo the central modulus.

Left and right Euclidean division both exist; the right gcd and left lcm
are computed by the extended right-division Euclidean algorithm.  Over an
etale coefficient algebra the division raises as soon as a leading
coefficient is a zero divisor; callers split into components instead (the
decomposition module does this via linear algebra).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg


class OreRing:
    """Coefficient ring plus the twisting automorphism theta of finite order."""

    def __init__(self, ring, theta, theta_order):
        self.ring = ring
        self.theta = theta  # theta(x, i) applies theta^i
        self.theta_order = theta_order

    def normalize(self, coeffs):
        coeffs = list(coeffs)
        zero = self.ring.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        return tuple(coeffs)

    def __repr__(self):
        return f"OreRing({self.ring!r})"


def degree(f):
    return len(f) - 1


def add(R, f, g):
    ring = R.ring
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ring.add(out[i], c)
    return R.normalize(out)


def neg(R, f):
    ring = R.ring
    return tuple(ring.neg(c) for c in f)


def sub(R, f, g):
    return add(R, f, neg(R, g))


def scale_left(R, c, f):
    ring = R.ring
    if c == ring.zero:
        return ()
    return R.normalize([ring.mul(c, a) for a in f])


def mul(R, f, g):
    """Ore product: (a X^i)(b X^j) = a theta^i(b) X^(i+j)."""
    ring = R.ring
    if not f or not g:
        return ()
    out = [ring.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == ring.zero:
            continue
        for j, b in enumerate(g):
            if b == ring.zero:
                continue
            out[i + j] = ring.add(out[i + j], ring.mul(a, R.theta(b, i)))
    return R.normalize(out)


def x_power(R, n):
    return (R.ring.zero,) * n + (R.ring.one,)


def right_divmod(R, f, g):
    """(q, r) with f = q g + r, deg r < deg g.

    Needs an invertible leading coefficient in g; over an etale algebra a
    zero-divisor lead raises ZeroDivisionError to signal a component split.
    """
    ring = R.ring
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    dg = degree(g)
    lead = g[-1]
    rem = list(f)
    if degree(f) < dg:
        return (), tuple(f)
    quo = [ring.zero] * (degree(f) - dg + 1)
    for i in range(degree(f), dg - 1, -1):
        c = rem[i]
        if c == ring.zero:
            continue
        t = i - dg
        c = ring.mul(c, ring.inv(R.theta(lead, t)))
        quo[t] = c
        for j, b in enumerate(g):
            if b != ring.zero:
                rem[t + j] = ring.sub(rem[t + j], ring.mul(c, R.theta(b, t)))
    return R.normalize(quo), R.normalize(rem)


def left_divmod(R, f, g):
    """(q, r) with f = g q + r, deg r < deg g."""
    ring = R.ring
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    dg = degree(g)
    lead_inv = ring.inv(g[-1])
    rem = list(f)
    if degree(f) < dg:
        return (), tuple(f)
    quo = [ring.zero] * (degree(f) - dg + 1)
    for i in range(degree(f), dg - 1, -1):
        c = rem[i]
        if c == ring.zero:
            continue
        t = i - dg
        c = R.theta(ring.mul(lead_inv, c), -dg)
        quo[t] = c
        for j, b in enumerate(g):
            if b != ring.zero:
                rem[j + t] = ring.sub(rem[j + t], ring.mul(b, R.theta(c, j)))
    return R.normalize(quo), R.normalize(rem)


def monic(R, f):
    if not f:
        return ()
    ring = R.ring
    if f[-1] == ring.one:
        return f
    return scale_left(R, ring.inv(f[-1]), f)


def rgcd(R, f, g):
    """Monic greatest common right divisor."""
    while g:
        f, g = g, right_divmod(R, f, g)[1]
    return monic(R, f)


def right_xgcd(R, f, g):
    """(d, u, v) with u f + v g = d the monic right gcd."""
    r0, r1 = f, g
    u0, u1 = (R.ring.one,), ()
    v0, v1 = (), (R.ring.one,)
    while r1:
        q, r = right_divmod(R, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(R, u0, mul(R, q, u1))
        v0, v1 = v1, sub(R, v0, mul(R, q, v1))
    if r0 and r0[-1] != R.ring.one:
        c = R.ring.inv(r0[-1])
        r0 = scale_left(R, c, r0)
        u0 = scale_left(R, c, u0)
        v0 = scale_left(R, c, v0)
    return r0, u0, v0


def llcm2(R, f, g):
    """Monic left least common multiple of two skew polynomials."""
    if not f or not g:
        raise ValueError("llcm of the zero polynomial")
    r0, r1 = f, g
    u0, u1 = (R.ring.one,), ()
    while r1:
        q, r = right_divmod(R, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(R, u0, mul(R, q, u1))
    # now u1 f = -v1 g is the left lcm (the first combination that hits zero)
    return monic(R, mul(R, u1, f))


def llcm(R, polys_list):
    items = [f for f in polys_list]
    if not items:
        raise ValueError("llcm of an empty family")
    acc = monic(R, items[0])
    for f in items[1:]:
        acc = llcm2(R, acc, f)
    return acc


class OreQuotient:
    """K[X;theta] modulo a central monic modulus with theta-fixed coefficients."""

    def __init__(self, oring, modulus):
        self.R = oring
        self.modulus = oring.normalize(modulus)
        ring = oring.ring
        if self.modulus[-1] != ring.one:
            raise ValueError("central modulus must be monic")
        for c in self.modulus:
            if oring.theta(c, 1) != c:
                raise ValueError("central modulus must have theta-fixed coefficients")
        self.n = degree(self.modulus)
        self._x_inv = None
        self._x_pows_neg = {}
        c0 = self.modulus[0]
        self.x_invertible = c0 != ring.zero and _try_unit(ring, c0)

    def reduce(self, f):
        if degree(f) < self.n:
            return self.R.normalize(f)
        return right_divmod(self.R, f, self.modulus)[1]

    def add(self, f, g):
        return add(self.R, f, g)

    def mul(self, f, g):
        return self.reduce(mul(self.R, f, g))

    def x_inverse(self):
        """The representative of X^(-1): X * x_inverse() = 1 mod modulus."""
        if not self.x_invertible:
            raise ValueError("X is not invertible modulo this central modulus")
        if self._x_inv is None:
            ring = self.R.ring
            c0_inv = ring.inv(self.modulus[0])
            coeffs = [
                ring.neg(ring.mul(self.modulus[j], c0_inv))
                for j in range(1, self.n + 1)
            ]
            self._x_inv = self.R.normalize(coeffs)
        return self._x_inv

    def x_power(self, i):
        """X^i mod modulus for any integer i (negative allowed)."""
        if i >= 0:
            return self.reduce(x_power(self.R, i))
        i = -i
        if i not in self._x_pows_neg:
            inv = self.x_inverse()
            acc = (self.R.ring.one,)
            for _ in range(i):
                acc = self.mul(acc, inv)
            self._x_pows_neg[i] = acc
        return self._x_pows_neg[i]

    def star(self, f, coeff_map=None, reduce_first=True):
        """The adjunction sum f_i X^i -> sum X^(-i) m(f_i), reduced mod modulus.

        ``coeff_map`` post-composes a ring map m on the coefficients (used
        for the partial adjunctions, where m is the component involution).
        ``reduce_first`` must be disabled when the input represents a class
        of a *different* central quotient (the source of a partial
        adjunction between tau-paired components); the output is always
        reduced against this quotient's modulus.
        """
        if not self.x_invertible:
            raise ValueError("star needs X invertible modulo the central modulus")
        R = self.R
        ring = R.ring
        if reduce_first:
            f = self.reduce(f)
        if coeff_map is not None:
            f = tuple(coeff_map(c) for c in f)
        acc = ()
        two_term = degree(f) <= self.n and all(
            c == ring.zero for c in self.modulus[1:-1]
        )  # modulus of the shape X^n - c0'
        if two_term:
            c_top = ring.neg(self.modulus[0])  # X^n = c_top, central unit
            c_inv = ring.inv(c_top)
            out = [ring.zero] * self.n
            for i, fi in enumerate(f):
                if fi == ring.zero:
                    continue
                if i == 0:
                    out[0] = ring.add(out[0], fi)
                else:
                    # X^(-i) f_i = theta^(-i)(f_i) c_inv X^(n-i)
                    out[self.n - i] = ring.add(
                        out[self.n - i],
                        ring.mul(R.theta(fi, -i), c_inv),
                    )
            return R.normalize(out)
        for i, fi in enumerate(f):
            if fi == ring.zero:
                continue
            term = mul(R, self.x_power(-i), (fi,))
            acc = add(R, acc, self.reduce(term))
        return acc

    def normalize_generator(self, f):
        """Monic minimal-degree generator of the left ideal generated by f."""
        f = self.reduce(f)
        if not f:
            raise ValueError("the zero class does not generate a proper ideal")
        return rgcd(self.R, f, self.modulus)

    def is_zero_product(self, f, g):
        return not self.mul(f, g)


def _try_unit(ring, c):
    if hasattr(ring, "is_unit"):
        return ring.is_unit(c)
    return c != ring.zero


# ---------------------------------------------------------------------------
# reduced trace and the trace pairing
# ---------------------------------------------------------------------------


def reduced_trace(f, gal, k):
    """T_rd(f) = sum_i Trace(f_{ir}) Y^i in F[Y]/(Y^k - 1)-like coefficients.

    ``gal`` is the AbsoluteGalois handle for K/F; ``f`` must already be
    reduced modulo the degree-rk central modulus.  Returns a length-k tuple
    over the base field (not trimmed).
    """
    r = gal.r
    B = gal.base
    out = []
    for i in range(k):
        idx = i * r
        c = f[idx] if idx < len(f) else gal.ring.zero
        out.append(gal.trace(c) if c != gal.ring.zero else B.zero)
    return tuple(out)


def pairing(f, g, quotient, gal, k):
    """<f, g> = T_rd(f g*) for f, g in the central quotient."""
    prod = quotient.mul(quotient.reduce(f), quotient.star(g))
    return reduced_trace(prod, gal, k)


# ---------------------------------------------------------------------------
# evaluation as semilinear operators
# ---------------------------------------------------------------------------


def mult_matrix(gal, c):
    """Matrix over the base of multiplication by c in the power basis."""
    B = gal.base
    cols = [gal.rel_coords(gal.ring.mul(c, bv)) for bv in gal.gen_powers]
    return linalg.transpose(tuple(cols))


def eval_semilinear(gal, x, f):
    """Matrix over the base of f(x.theta): v -> sum f_i (x theta)^i (v).

    ``gal`` carries K_l over F_l; x must be invertible for the map to be an
    algebra isomorphism image, but the matrix is defined for any x.
    """
    ring = gal.ring
    B = gal.base
    r = gal.r
    images = list(gal.gen_powers)  # (x theta)^i applied to the basis, i = 0
    out = [[B.zero] * r for _ in range(r)]
    for i, fi in enumerate(f):
        if fi != ring.zero:
            for j in range(r):
                vc = gal.rel_coords(ring.mul(fi, images[j]))
                for kdx in range(r):
                    out[kdx][j] = B.add(out[kdx][j], vc[kdx])
        if i < len(f) - 1:
            images = [ring.mul(x, gal.theta(v)) for v in images]
    return tuple(tuple(row) for row in out)


def kernel_subspace(gal, x, f):
    """RREF basis (rows) of ker f(x theta) inside K_l = base^r."""
    M = eval_semilinear(gal, x, f)
    return linalg.nullspace(gal.base, M, gal.r)


# ---------------------------------------------------------------------------
# public wrapper
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrePoly:
    """A skew polynomial: coefficient tuple (ascending) over an OreRing."""

    oring: OreRing
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", self.oring.normalize(self.coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        self._check(other)
        return OrePoly(self.oring, add(self.oring, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return OrePoly(self.oring, sub(self.oring, self.coeffs, other.coeffs))

    def __mul__(self, other):
        self._check(other)
        return OrePoly(self.oring, mul(self.oring, self.coeffs, other.coeffs))

    def _check(self, other):
        if other.oring is not self.oring:
            raise ValueError("skew polynomials over different rings")

    def serialize(self):
        ring = self.oring.ring
        return [list(ring.coords(c)) for c in self.coeffs]
