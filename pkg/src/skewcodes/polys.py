"""Dense univariate polynomial arithmetic over an arbitrary coefficient field.

Polynomials are tuples of field element values in ascending degree order,
with no trailing zeros; the zero polynomial is the empty tuple.  All
functions take the coefficient field object as first argument and never
mutate their inputs.  The field object must provide zero/one constants and
add/sub/neg/mul/inv/pow methods (see finite_field).

Irreducibility testing uses Rabin's criterion and factorization uses
distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
splitting, which requires odd characteristic.
"""

from __future__ import annotations


def normalize(F, coeffs):
    """Trim trailing zeros and return a canonical tuple."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == F.zero:
        coeffs.pop()
    return tuple(coeffs)


def degree(f):
    """Degree of f, with the zero polynomial mapped to -1."""
    return len(f) - 1


def constant(F, c):
    return () if c == F.zero else (c,)


def x_power(F, n):
    """The monomial x^n."""
    return (F.zero,) * n + (F.one,)


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return normalize(F, out)


def neg(F, f):
    return tuple(F.neg(c) for c in f)


def sub(F, f, g):
    return add(F, f, neg(F, g))


def scale(F, c, f):
    if c == F.zero:
        return ()
    return normalize(F, [F.mul(c, a) for a in f])


def mul(F, f, g):
    if not f or not g:
        return ()
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == F.zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return normalize(F, out)


def shift(F, f, n):
    """Multiply by x^n."""
    if not f:
        return ()
    return (F.zero,) * n + tuple(f)


def divmod_poly(F, f, g):
    """Return (q, r) with f = q*g + r and deg r < deg g.

    The leading coefficient of g must be invertible.
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = F.inv(g[-1])
    rem = list(f)
    dg = len(g) - 1
    if len(rem) - 1 < dg:
        return (), tuple(rem)
    quo = [F.zero] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == F.zero:
            continue
        c = F.mul(c, lead_inv)
        quo[i - dg] = c
        for j, b in enumerate(g):
            rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, b))
    return normalize(F, quo), normalize(F, rem)


def mod(F, f, g):
    return divmod_poly(F, f, g)[1]


def monic(F, f):
    if not f:
        return ()
    if f[-1] == F.one:
        return f
    return scale(F, F.inv(f[-1]), f)


def gcd(F, f, g):
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return (d, u, v) with u*f + v*g = d = gcd(f, g), d monic."""
    r0, r1 = f, g
    u0, u1 = (F.one,), ()
    v0, v1 = (), (F.one,)
    while r1:
        q, r = divmod_poly(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(F, u0, mul(F, q, u1))
        v0, v1 = v1, sub(F, v0, mul(F, q, v1))
    if r0 and r0[-1] != F.one:
        c = F.inv(r0[-1])
        r0, u0, v0 = scale(F, c, r0), scale(F, c, u0), scale(F, c, v0)
    return r0, u0, v0


def invert_mod(F, f, m):
    """Inverse of f modulo m; raises ZeroDivisionError if not coprime."""
    d, u, _ = xgcd(F, f, m)
    if degree(d) != 0:
        raise ZeroDivisionError("element is not invertible in the quotient")
    return mod(F, u, m)


def pow_mod(F, f, e, m):
    result = (F.one,)
    base = mod(F, f, m)
    while e > 0:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def eval_poly(F, f, a):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, a), c)
    return acc


def derivative(F, f):
    out = []
    for i in range(1, len(f)):
        c = f[i]
        s = F.zero
        for _ in range(i % F.char):
            s = F.add(s, c)
        out.append(s)
    return normalize(F, out)


def reciprocal(F, f):
    """Reversed coefficient list (the reciprocal polynomial)."""
    return normalize(F, tuple(reversed(f)))


def is_palindromic(F, f):
    """Nonzero constant term and collinear to its reciprocal."""
    if not f or f[0] == F.zero:
        return False
    rec = reciprocal(F, f)
    if len(rec) != len(f):
        return False
    c = F.mul(f[-1], F.inv(rec[-1]))
    return all(F.mul(c, rec[i]) == f[i] for i in range(len(f)))


def is_irreducible(F, f):
    """Rabin irreducibility test over the field F of size q."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    q = F.size
    x = x_power(F, 1)
    primes = _prime_divisors(n)
    for t in primes:
        h = sub(F, _frobenius_power(F, f, q, n // t), x)
        if degree(gcd(F, h, f)) != 0:
            return False
    h = sub(F, _frobenius_power(F, f, q, n), x)
    return not h


def _frobenius_power(F, f, q, j):
    """x^(q^j) mod f."""
    h = x_power(F, 1)
    for _ in range(j):
        h = pow_mod(F, h, q, f)
    return h


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree(F, f):
    return degree(gcd(F, f, derivative(F, f))) == 0


def factor_squarefree(F, f, rng):
    """Monic irreducible factors of a squarefree polynomial, sorted canonically.

    Distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
    (odd characteristic only).  The output order is independent of rng: the
    factors are sorted by (degree, encoded coefficients).
    """
    f = monic(F, f)
    if not squarefree(F, f):
        raise ValueError("factor_squarefree requires a squarefree polynomial")
    factors = []
    q = F.size
    h = x_power(F, 1)
    d = 0
    rest = f
    while degree(rest) > 0:
        d += 1
        if 2 * d > degree(rest):
            factors.append(rest)
            break
        h = pow_mod(F, h, q, rest)
        g = gcd(F, sub(F, h, x_power(F, 1)), rest)
        if degree(g) > 0:
            factors.extend(_equal_degree_split(F, g, d, rng))
            rest = divmod_poly(F, rest, g)[0]
            h = mod(F, h, rest)
    factors.sort(key=lambda p: (degree(p), tuple(F.encode(c) for c in p)))
    return factors


def _equal_degree_split(F, f, d, rng):
    n = degree(f)
    if n == d:
        return [f]
    q = F.size
    exponent = (q**d - 1) // 2
    while True:
        h = normalize(F, [F.decode(rng.randrange(F.size)) for _ in range(n)])
        if degree(h) < 1:
            continue
        g = gcd(F, h, f)
        if 0 < degree(g) < n:
            break
        g = sub(F, pow_mod(F, h, exponent, f), (F.one,))
        g = gcd(F, g, f)
        if 0 < degree(g) < n:
            break
    left = _equal_degree_split(F, g, d, rng)
    right = _equal_degree_split(F, divmod_poly(F, f, g)[0], d, rng)
    return left + right


def roots(F, f, rng):
    """Roots of f in F (without multiplicity), sorted by encoding."""
    q = F.size
    h = sub(F, _frobenius_power(F, f, q, 1), x_power(F, 1))
    g = gcd(F, h, f)
    found = []
    stack = [g]
    while stack:
        u = stack.pop()
        if degree(u) == 0:
            continue
        if degree(u) == 1:
            found.append(F.neg(u[0]))
            continue
        for part in _equal_degree_split(F, u, 1, rng):
            if degree(part) == 1:
                found.append(F.neg(part[0]))
            else:
                stack.append(part)
    found.sort(key=F.encode)
    return found
