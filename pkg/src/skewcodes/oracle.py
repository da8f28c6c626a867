"""Brute-force ground truth at tiny scale.

Everything here enumerates raw objects with no shortcuts: all K-subspaces
of K^n via RREF matrices, filtered for stability under the twisted cyclic
shift (left multiplication by X) and tested against the coordinatewise
bilinear form; all s-dimensional subspaces of a sesquilinear space, tested
by the Gram sandwich.  Budgets are hard caps with explicit errors; the
oracle is a test dependency, never a production fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import codes as codes_mod
from . import geometry, linalg, ore


@dataclass
class OracleReport:
    params: object
    n_subspaces: int = 0
    n_stable: int = 0
    n_selforthogonal: int = 0
    n_selfdual: int = 0
    selfdual_generators: list = field(default_factory=list)
    selfdual_subspaces: list = field(default_factory=list)

    def serialize(self):
        return {
            "params": self.params.serialize(),
            "n_subspaces": self.n_subspaces,
            "n_stable": self.n_stable,
            "n_selforthogonal": self.n_selforthogonal,
            "n_selfdual": self.n_selfdual,
            "selfdual_generators": [
                [list(c) for c in gen] for gen in self.selfdual_generators
            ],
        }


def brute_codes(params, budget=10**6):
    """Exhaustive scan of all skew cyclic codes of length rk over K.

    Enumerates every K-subspace of K^(rk), keeps the ones stable under the
    theta-twisted cyclic shift, and tests selfduality as equality with the
    coordinatewise orthogonal complement.  Only the default central modulus
    X^(rk) - 1 carries the coordinatewise duality, so explicit moduli are
    rejected.
    """
    if not params.is_default_modulus():
        raise ValueError("the coordinatewise oracle needs the modulus Y^k - 1")
    D = codes_mod._field_data(params)
    K, KG = D["K"], D["KG"]
    n = params.n_code
    total = sum(geometry.q_binomial(n, d, K.size) for d in range(n + 1))
    if total > budget:
        raise codes_mod.BudgetExceeded(
            f"{total} subspaces exceed the oracle budget {budget}"
        )
    report = OracleReport(params=params)
    report.n_subspaces = total
    quotient = codes_mod._quotient(params)
    for rows in geometry.enumerate_subspaces(K, n):
        if not _shift_stable(K, KG, rows):
            continue
        report.n_stable += 1
        perp = _coordinatewise_perp(K, rows, n)
        contained = _row_space_contains(K, perp, rows)
        if contained:
            report.n_selforthogonal += 1
        if rows == perp:
            report.n_selfdual += 1
            gen = _generator_from_rows(K, quotient, rows, n)
            report.selfdual_generators.append(
                [K.coords(c) for c in gen]
            )
            report.selfdual_subspaces.append(rows)
    return report


def _shift_stable(K, KG, rows):
    """Closed under multiplication by X: twisted cyclic shift of coordinates."""
    if not rows:
        return True
    n = len(rows[0])
    shifted = []
    for row in rows:
        new = [K.zero] * n
        for j, c in enumerate(row):
            new[(j + 1) % n] = KG.theta(c)
        shifted.append(tuple(new))
    return all(
        linalg.solve(K, linalg.transpose(rows), s) is not None for s in shifted
    )


def _coordinatewise_perp(K, rows, n):
    """RREF basis of the orthogonal for sum x_i y_i (no conjugation)."""
    if not rows:
        return linalg.identity(K, n)
    return linalg.nullspace(K, rows, n)


def _row_space_contains(K, big, small):
    if not small:
        return True
    if not big:
        return False
    return all(
        linalg.solve(K, linalg.transpose(big), row) is not None for row in small
    )


def _generator_from_rows(K, quotient, rows, n):
    """Normalized monic generator of the ideal spanned by the rows."""
    if not rows:
        return quotient.modulus
    acc = quotient.modulus
    R = quotient.R
    for row in rows:
        poly = R.normalize(row)
        acc = ore.rgcd(R, acc, poly)
    return acc


def brute_isotropic(space, s=None, budget=10**6):
    """Exhaustive count of the s-dimensional totally isotropic subspaces.

    Returns (count, witnesses).  s defaults to dim/2.
    """
    F = space.field_obj
    if s is None:
        if space.dim % 2:
            raise ValueError("give s explicitly in odd dimension")
        s = space.dim // 2
    total = geometry.q_binomial(space.dim, s, F.size)
    if total > budget:
        raise codes_mod.BudgetExceeded(
            f"{total} subspaces exceed the oracle budget {budget}"
        )
    witnesses = []
    for rows in geometry.enumerate_subspaces(F, space.dim, dims=[s]):
        if space.is_isotropic_subspace(rows):
            witnesses.append(rows)
    return len(witnesses), witnesses
