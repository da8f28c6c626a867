"""Component data of the central quotient and the explicit bijection.

For a separable palindromic central modulus P(Y) over F, the quotient
K[X;theta]/(P(X^r)) splits along the irreducible factors P_l of P.  Each
:class:`FactorComponent` carries the residue field F_l = F[Y]/(P_l), the
distinguished root y_l, the algebra K_l = K (x) F_l, a norm preimage x_l of
y_l, the involution partner tau(l) read off the reciprocal polynomial, the
transport map sigma_l with sigma_l(y_l) = 1/y_{tau(l)}, and the twist
element zeta_l (Hilbert 90 applied to z_l = x_l sigma(x_{tau(l)}),
symmetrized first as zeta + sigma(zeta) and, where that vanishes, as
zeta/y + sigma(zeta/y), chosen per etale component).

Component indices are canonical: factors are sorted by degree and encoded
coefficients, so the decomposition is reproducible across runs.  The heavy
per-component data (fields, x_l, zeta_l) is built lazily because existence
tests and counting only need the factor shapes.

The two directions of the bijection between subspace families and codes are
``code_from_subspaces`` and ``subspaces_from_code``.  Inside a component
with K_l a field, the ideal of a subspace is the left lcm of the linear
factors X - x_l theta(v)/v; over an etale K_l the same ideal is produced by
solving for the skew polynomial whose semilinear evaluation is a projector
with the prescribed kernel, which avoids dividing by zero divisors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import finite_field as ff
from . import geometry, linalg, ore, polys

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
NONPALINDROMIC = "nonpalindromic"


@dataclass
class FactorComponent:
    """All per-factor data; heavy fields populated by Decomposition._build."""

    index: int
    P_l: tuple  # irreducible factor, tuple over F
    e: int
    q_l: int
    tau_partner: int
    symmetry_class: str
    # built lazily:
    Fl: object = None
    embed_F: object = None  # F -> F_l
    y_l: object = None  # in F_l
    KlG: object = None  # galois handle for K_l over F_l
    x_l: object = None  # in K_l
    z_l: object = None
    zeta_l: object = None
    sigma_F: object = None  # F_l -> F_{tau(l)}
    _built: bool = False
    _gram_cache: dict = dc_field(default_factory=dict)

    @property
    def is_palindromic(self):
        return self.tau_partner == self.index

    def sigma_K(self, x):
        """id (x) sigma_l : K_l -> K_{tau(l)}, acting on the F_l-coordinates."""
        if self.e == 1:
            return x
        return tuple(self.sigma_F(c) for c in x)


class Decomposition:
    """Factorization of a palindromic separable central modulus plus the
    component structure used by the code-geometry bijection."""

    def __init__(self, F, K, KG, central_Y, seed=0):
        self.F = F
        self.K = K
        self.KG = KG
        self.r = KG.r
        self.s = self.r // 2  # meaningful when r is even
        self.seed = seed
        central_Y = polys.monic(F, polys.normalize(F, central_Y))
        if polys.degree(central_Y) < 1:
            raise ValueError("central modulus must be nonconstant")
        if central_Y[0] == F.zero:
            raise ValueError("central modulus must have a nonzero constant term")
        if not polys.is_palindromic(F, central_Y):
            raise ValueError("central modulus must be palindromic")
        if not polys.squarefree(F, central_Y):
            raise ValueError(
                "central modulus is inseparable; use the inseparable routines"
            )
        self.central_Y = central_Y
        self.k = polys.degree(central_Y)
        rng = random.Random(seed ^ 0xFAC70)
        factors = polys.factor_squarefree(F, central_Y, rng)
        self._init_components(factors)
        self.oring = ore.OreRing(K, KG.theta, self.r)
        self.quotient = ore.OreQuotient(self.oring, self.central_to_X(central_Y))
        self._crt_idempotents = None

    def _init_components(self, factors):
        F = self.F
        taus = []
        for P_l in factors:
            rec = polys.monic(F, polys.reciprocal(F, P_l))
            taus.append(factors.index(rec))
        comps = []
        for idx, P_l in enumerate(factors):
            e = polys.degree(P_l)
            if taus[idx] != idx:
                cls = NONPALINDROMIC
            elif e == 1 and (
                P_l[0] == F.neg(F.one) or P_l[0] == F.one
            ):
                cls = EUCLIDEAN
            else:
                cls = HERMITIAN
            comps.append(
                FactorComponent(
                    index=idx,
                    P_l=P_l,
                    e=e,
                    q_l=F.size**e,
                    tau_partner=taus[idx],
                    symmetry_class=cls,
                )
            )
        self.components = comps
        self.I_eucl = [c.index for c in comps if c.symmetry_class == EUCLIDEAN]
        self.I_herm = [c.index for c in comps if c.symmetry_class == HERMITIAN]
        self.J = [
            (c.index, c.tau_partner)
            for c in comps
            if c.tau_partner > c.index
        ]
        for idx, t in enumerate(taus):
            if taus[t] != idx:
                raise RuntimeError("tau is not an involution")  # pragma: no cover

    # -- lifting the center into K[X;theta] -----------------------------------

    def central_to_X(self, poly_Y):
        """P(Y) as a skew polynomial in X via Y = X^r."""
        K = self.K
        out = [K.zero] * (self.r * polys.degree(poly_Y) + 1)
        for j, c in enumerate(poly_Y):
            if c != self.F.zero:
                out[j * self.r] = self.KG.embed_base(c)
        return self.oring.normalize(out)

    # -- component construction ------------------------------------------------

    def component(self, l):
        comp = self.components[l]
        if not comp._built:
            self._build_pair(comp)
        return comp

    def _build_pair(self, comp):
        partner = self.components[comp.tau_partner]
        rep = comp if comp.index <= partner.index else partner
        other = partner if rep is comp else comp
        self._build_fields(rep)
        if other is not rep:
            self._build_fields(other)
        self._link_sigma(rep, other)
        self._build_twist(rep, other)
        rep._built = True
        other._built = True

    def _build_fields(self, comp):
        F = self.F
        K = self.K
        if comp.e == 1:
            comp.Fl = F
            comp.embed_F = lambda c: c
            comp.y_l = F.neg(comp.P_l[0])
            comp.KlG = self.KG
            return
        Fl = ff.make_extension(F.p, F.degree * comp.e)
        embed_F, _section = ff.embedding(F, Fl)
        lifted = tuple(embed_F(c) for c in comp.P_l)
        rts = polys.roots(Fl, lifted, random.Random(self.seed ^ comp.index))
        y_l = rts[0]
        comp.Fl = Fl
        comp.embed_F = embed_F
        comp.y_l = y_l
        comp._FlG = ff.AbsoluteGalois(Fl, F, gen=y_l)
        mK = self.KG.min_poly_over_base()
        mK_l = tuple(embed_F(c) for c in mK)
        Kl = ff.RelativeExtension(Fl, mK_l)
        theta_g = self.KG.rel_coords(self.KG.theta(self.KG.gen))
        theta_gen = tuple(embed_F(c) for c in theta_g)
        comp.KlG = ff.QuotientGalois(Kl, theta_gen, self.r)

    def _link_sigma(self, rep, other):
        """sigma maps determined by y_l -> 1/y_{tau(l)}.

        For a degree-1 factor the residue field is F itself and the only
        F-algebra self-map is the identity, which is consistent: the roots
        of a degree-1 pair are each other's inverses by definition of tau.
        """
        if rep.e == 1:
            rep.sigma_F = lambda c: c
            other.sigma_F = rep.sigma_F
            return
        inv_y_other = other.Fl.inv(other.y_l)
        rep.sigma_F = _power_basis_map(rep._FlG, other.Fl, other.embed_F, inv_y_other)
        if other is not rep:
            inv_y_rep = rep.Fl.inv(rep.y_l)
            other.sigma_F = _power_basis_map(
                other._FlG, rep.Fl, rep.embed_F, inv_y_rep
            )

    def _build_twist(self, rep, other):
        """x_l, z_l and the Hilbert-90 element zeta_l for the pair."""
        pair = [rep] if other is rep else [rep, other]
        for comp in pair:
            gal = comp.KlG
            if comp.y_l == comp.Fl.one:
                comp.x_l = _ring_one(gal)
            else:
                comp.x_l = gal.norm_preimage(comp.y_l)
            if gal.norm(comp.x_l) != comp.y_l:  # pragma: no cover
                raise RuntimeError("norm preimage invariant failed")
        ring = rep.KlG.ring
        z = ring.mul(
            rep.x_l,
            other.sigma_K(other.x_l) if other is not rep else rep.sigma_K(rep.x_l),
        )
        rep.z_l = z
        if rep.KlG.norm(z) != rep.Fl.one:  # pragma: no cover
            raise RuntimeError("z_l must have norm 1")
        zeta0 = rep.KlG.hilbert90(z, random.Random(self.seed ^ 0x2E7A))
        if other is not rep:
            rep.zeta_l = zeta0
            other.zeta_l = rep.sigma_K(zeta0)
            other.z_l = other.KlG.ring.mul(other.x_l, rep.sigma_K(rep.x_l))
            self._check_zeta(rep)
            self._check_zeta(other)
            return
        cand1 = ring.add(zeta0, rep.sigma_K(zeta0))
        if _ring_is_unit(rep.KlG, cand1):
            rep.zeta_l = cand1
        else:
            y_in_K = _embed_base(rep.KlG, rep.y_l)
            z_over_y = ring.mul(zeta0, rep.KlG.inv(y_in_K))
            cand2 = ring.add(z_over_y, rep.sigma_K(z_over_y))
            rep.zeta_l = self._mix_candidates(rep, cand1, cand2)
        self._check_zeta(rep)

    def _mix_candidates(self, comp, cand1, cand2):
        """Pick cand1 where it is nonzero, cand2 elsewhere, per etale factor.

        The vanishing locus of cand1 is stable under theta and sigma, so the
        mixture still satisfies both twist equations.
        """
        gal = comp.KlG
        if not hasattr(gal, "components"):
            return cand2
        ring = gal.ring
        acc = ring.zero
        for Lc, proj, idem in gal.components():
            chosen = cand1 if proj(cand1) != Lc.zero else cand2
            acc = ring.add(acc, ring.mul(idem, chosen))
        return acc

    def _check_zeta(self, comp):
        gal = comp.KlG
        ring = gal.ring
        zeta = comp.zeta_l
        if not _ring_is_unit(gal, zeta):
            raise RuntimeError("zeta_l is not invertible")  # pragma: no cover
        if gal.theta(zeta) != ring.mul(comp.z_l, zeta):  # pragma: no cover
            raise RuntimeError("zeta_l twist equation failed")
        if comp.is_palindromic and comp.sigma_K(zeta) != zeta:  # pragma: no cover
            raise RuntimeError("zeta_l symmetry failed")

    # -- sesquilinear structure -------------------------------------------------

    def sesquilinear_form(self, l, twist=None):
        """The SesquiSpace on K_l for a palindromic component.

        With a twist (xi, t), the Gram is Tr(zeta xi T^i theta^t(T^j)) and
        the kind flips to the skew variants at t = s.
        """
        comp = self.component(l)
        if not comp.is_palindromic:
            raise ValueError("no sesquilinear form on a nonpalindromic component")
        xi, t = (twist.xi, twist.t) if twist is not None else (None, 0)
        cache_key = (
            "gram",
            t,
            None if xi is None else _encode_ring(comp.KlG, xi),
        )
        if cache_key not in comp._gram_cache:
            gal = comp.KlG
            ring = gal.ring
            w = comp.zeta_l if xi is None else ring.mul(comp.zeta_l, xi)
            basis = gal.gen_powers
            theta_basis = [gal.theta(b, t) for b in basis]
            gram = tuple(
                tuple(
                    gal.trace(ring.mul(w, ring.mul(bi, tbj)))
                    for tbj in theta_basis
                )
                for bi in basis
            )
            euclid = comp.symmetry_class == EUCLIDEAN
            if t == 0:
                kind = "euclidean" if euclid else "hermitian"
            else:
                kind = "skew_euclidean" if euclid else "skew_hermitian"
            sigma = None if euclid else comp.sigma_F
            comp._gram_cache[cache_key] = geometry.SesquiSpace(
                field_obj=comp.Fl, gram=gram, kind=kind, sigma=sigma
            )
        return comp._gram_cache[cache_key]

    # -- the bijection, component by component ---------------------------------

    def component_generator(self, l, rows):
        """Generator in K[X;theta] of the ideal of the subspace at component l.

        The result is reduced against P_l(X^r) and normalized (monic, minimal
        degree in the component quotient).
        """
        comp = self.component(l)
        gal = comp.KlG
        ring = gal.ring
        r = self.r
        if len(rows) == 0:
            fX = self._substitute_poly(comp, (ring.one,))
        else:
            if comp.e == 1 or ring.is_field:
                vs = [gal.rel_from_coords(row) for row in rows]
                oringl = ore.OreRing(ring, gal.theta, r)
                factors = []
                for v in vs:
                    c = ring.mul(comp.x_l, ring.mul(gal.theta(v), gal.inv(v)))
                    factors.append((ring.neg(c), ring.one))
                f_l = ore.llcm(oringl, factors)
            else:
                f_l = self._etale_generator(comp, rows)
            fX = self._substitute_poly(comp, f_l)
        PlX = self.central_to_X(comp.P_l)
        return ore.rgcd(self.oring, fX, PlX)

    def component_local_generator(self, l, rows):
        """Generator of the subspace ideal inside K_l[X;theta]/(X^r - y_l).

        Over a field K_l this is the monic minimal-degree generator (the
        left lcm of the linear factors, degree = dim of the subspace); over
        an etale K_l the projector-solve generator of degree < r is
        returned instead, since a monic minimal-degree generator need not
        exist there.
        """
        comp = self.component(l)
        gal = comp.KlG
        ring = gal.ring
        if len(rows) == 0:
            return (ring.one,)
        if comp.e == 1 or ring.is_field:
            oringl = ore.OreRing(ring, gal.theta, self.r)
            factors = []
            for row in rows:
                v = gal.rel_from_coords(row)
                c = ring.mul(comp.x_l, ring.mul(gal.theta(v), gal.inv(v)))
                factors.append((ring.neg(c), ring.one))
            f = ore.llcm(oringl, factors)
            y_in_ring = _embed_base(gal, comp.y_l)
            comp_mod = ore.sub(oringl, ore.x_power(oringl, self.r), (y_in_ring,))
            return ore.rgcd(oringl, f, comp_mod)
        return self._etale_generator(comp, rows)

    def _etale_generator(self, comp, rows):
        """Skew polynomial whose semilinear evaluation is a projector with
        kernel exactly the row span; degree < r, solved over F_l."""
        gal = comp.KlG
        Fl = comp.Fl
        r = self.r
        full = linalg.extend_to_basis(Fl, rows, r)
        T = linalg.transpose(full)
        Tinv = linalg.inverse(Fl, T)
        d = len(rows)
        diag = tuple(
            tuple(
                Fl.one if (i == j and i >= d) else Fl.zero for j in range(r)
            )
            for i in range(r)
        )
        proj = linalg.mat_mul(Fl, T, linalg.mat_mul(Fl, diag, Tinv))
        # unknowns: coefficients f_i = sum_j c_{ij} T^j; equations over F_l
        ring = gal.ring
        images = [list(gal.gen_powers)]
        for _ in range(r - 1):
            prev = images[-1]
            images.append(
                [ring.mul(comp.x_l, gal.theta(v)) for v in prev]
            )
        cols = []
        for i in range(r):
            for j in range(r):
                Tj = gal.gen_powers[j]
                col = []
                for m in range(r):
                    val = ring.mul(Tj, images[i][m])
                    col.extend(val)
                cols.append(tuple(col))
        M = linalg.transpose(tuple(cols))
        rhs = tuple(proj[kdx][m] for m in range(r) for kdx in range(r))
        sol = linalg.solve(Fl, M, rhs)
        if sol is None:  # pragma: no cover - evaluation is an isomorphism
            raise RuntimeError("etale generator solve failed")
        coeffs = []
        for i in range(r):
            coeffs.append(tuple(sol[i * r : (i + 1) * r]))
        oringl = ore.OreRing(ring, gal.theta, r)
        return oringl.normalize(coeffs)

    def _substitute_poly(self, comp, f_l):
        """Replace y_l by X^r in a K_l[X;theta] polynomial, landing in K[X]."""
        K = self.K
        out = {}
        for i, c in enumerate(f_l):
            for j, kappa in enumerate(self.to_K_ypolys(comp, c)):
                if kappa != K.zero:
                    out[j * self.r + i] = K.add(
                        out.get(j * self.r + i, K.zero), kappa
                    )
        if not out:
            return ()
        coeffs = [K.zero] * (max(out) + 1)
        for idx, v in out.items():
            coeffs[idx] = v
        return self.oring.normalize(coeffs)

    def to_K_ypolys(self, comp, c):
        """K_l element as a list of K coefficients of powers of y_l."""
        K = self.K
        if comp.e == 1:
            return (c,)
        coords = []  # coords[i][j]: F-coefficient of y^j in the T^i coordinate
        for ci in c:
            coords.append(comp._FlG.rel_coords(ci))
        out = []
        for j in range(comp.e):
            out.append(self.KG.rel_from_coords(tuple(co[j] for co in coords)))
        return tuple(out)

    def from_K_ypolys(self, comp, kappas):
        """Inverse of to_K_ypolys: sum kappa_j y_l^j as a K_l element."""
        if comp.e == 1:
            return kappas[0]
        Fl = comp.Fl
        y_pows = [Fl.one]
        for _ in range(comp.e - 1):
            y_pows.append(Fl.mul(y_pows[-1], comp.y_l))
        coords = [self.KG.rel_coords(kp) for kp in kappas]
        out = []
        for i in range(self.r):
            acc = Fl.zero
            for j in range(len(kappas)):
                cij = coords[j][i]
                if cij != self.F.zero:
                    acc = Fl.add(acc, Fl.mul(comp.embed_F(cij), y_pows[j]))
            out.append(acc)
        return tuple(out)

    def reduce_mod_component(self, f, l):
        """f mod P_l(X^r), as a K_l[X;theta] polynomial of degree < r."""
        comp = self.component(l)
        PlX = self.central_to_X(comp.P_l)
        rem = ore.right_divmod(self.oring, f, PlX)[1]
        gal = comp.KlG
        buckets = [[self.K.zero] * comp.e for _ in range(self.r)]
        for idx, c in enumerate(rem):
            buckets[idx % self.r][idx // self.r] = c
        coeffs = [self.from_K_ypolys(comp, tuple(b)) for b in buckets]
        oringl = ore.OreRing(gal.ring, gal.theta, self.r)
        return oringl.normalize(coeffs)

    def component_kernel(self, f, l):
        """RREF rows of ker (f mod P_l)(x_l theta) inside K_l."""
        comp = self.component(l)
        f_l = self.reduce_mod_component(f, l)
        if not f_l:
            return linalg.identity(comp.Fl, self.r)
        return ore.kernel_subspace(comp.KlG, comp.x_l, f_l)

    # -- CRT and the two directions of the bijection ---------------------------

    def crt_idempotents(self):
        if self._crt_idempotents is None:
            F = self.F
            out = []
            for comp in self.components:
                prod = (F.one,)
                for c2 in self.components:
                    if c2 is not comp:
                        prod = polys.mul(F, prod, c2.P_l)
                inv = polys.invert_mod(F, polys.mod(F, prod, comp.P_l), comp.P_l)
                idem = polys.mod(
                    F, polys.mul(F, prod, inv), self.central_Y
                )
                out.append(self.central_to_X(idem))
            self._crt_idempotents = out
        return self._crt_idempotents

    def crt_combine(self, parts):
        """f with f = f_l mod P_l(X^r) for the given component parts."""
        acc = ()
        for f_l, idem in zip(parts, self.crt_idempotents()):
            acc = ore.add(self.oring, acc, ore.mul(self.oring, idem, f_l))
        return self.quotient.reduce(acc)

    def code_from_subspaces(self, family):
        """Algorithm: normalized generator from a family of subspaces.

        ``family`` maps component index to RREF rows; palindromic components
        need a maximal isotropic subspace, the representative of each
        tau-pair takes any subspace, and partners are filled in through the
        duality relation f_l f_{tau(l)}* = P_l(Y).
        """
        parts = [None] * len(self.components)
        for l in self.I_eucl + self.I_herm:
            rows = family[l]
            space = self.sesquilinear_form(l)
            if len(rows) != self.r // 2:
                raise ValueError("palindromic components need half-dimension subspaces")
            if not space.is_isotropic_subspace(rows):
                raise ValueError("subspace is not isotropic")
            parts[l] = self.component_generator(l, rows)
        for (l, m) in self.J:
            rows = family[l]
            f_l = self.component_generator(l, rows)
            parts[l] = f_l
            PlX = self.central_to_X(self.components[l].P_l)
            g, rem = ore.left_divmod(self.oring, PlX, f_l)
            if rem:  # pragma: no cover - f_l right-divides its component modulus
                raise RuntimeError("component generator does not divide P_l")
            PmX = self.central_to_X(self.components[m].P_l)
            qm = ore.OreQuotient(self.oring, PmX)
            sg = qm.star(g, reduce_first=False)
            parts[m] = ore.rgcd(self.oring, sg, PmX) if sg else PmX
        f = self.crt_combine(parts)
        return self.quotient.normalize_generator(f)

    def subspaces_from_code(self, f):
        """Kernels of the semilinear evaluations, one subspace per component."""
        return {
            comp.index: self.component_kernel(f, comp.index)
            for comp in self.components
        }

    def dual_code(self, f):
        """Normalized generator of the orthogonal ideal: star of the
        cofactor in f g = P."""
        if not self.quotient.reduce(f):
            # the zero ideal, generated by the modulus itself: dual is everything
            return (self.K.one,)
        f = self.quotient.normalize_generator(f)
        g, rem = ore.left_divmod(self.oring, self.quotient.modulus, f)
        if rem:
            raise ValueError("generator does not divide the central modulus")
        sg = self.quotient.star(g)
        if not sg:
            return self.quotient.modulus  # dual of the full code is the zero ideal
        return self.quotient.normalize_generator(sg)

    # -- partial adjunctions (component level) ---------------------------------

    def component_quotient(self, l):
        """E^(l) = K_l[X;theta]/(X^r - 1) with its twisted adjunctions."""
        comp = self.component(l)
        gal = comp.KlG
        oringl = ore.OreRing(gal.ring, gal.theta, self.r)
        modulus = ore.sub(oringl, ore.x_power(oringl, self.r), (gal.ring.one,))
        return ore.OreQuotient(oringl, modulus)

    # -- serialization -----------------------------------------------------------

    def serialize(self):
        """JSON-ready dump: per-component factor data plus the twist
        elements x_l and zeta_l for reproducibility."""
        F = self.F
        out = {
            "q": F.size,
            "r": self.r,
            "central_modulus": [F.encode(c) for c in self.central_Y],
            "components": [],
        }
        for comp0 in self.components:
            comp = self.component(comp0.index)
            gal = comp.KlG
            ring = gal.ring
            enc = ring.encode if hasattr(ring, "encode") else (lambda v: v)
            out["components"].append(
                {
                    "index": comp.index,
                    "P_l": [F.encode(c) for c in comp.P_l],
                    "q_l": comp.q_l,
                    "symmetry_class": comp.symmetry_class,
                    "tau_partner": comp.tau_partner,
                    "x_l": enc(comp.x_l),
                    "zeta_l": enc(comp.zeta_l),
                }
            )
        return out


def _ring_one(gal):
    return gal.ring.one


def _embed_base(gal, c):
    if hasattr(gal.ring, "from_base"):
        return gal.ring.from_base(c)
    return gal.embed_base(c)


def _ring_is_unit(gal, x):
    R = gal.ring
    if hasattr(R, "is_unit"):
        return R.is_unit(x)
    return x != R.zero


def _encode_ring(gal, x):
    R = gal.ring
    return R.encode(x) if hasattr(R, "encode") else x


def _power_basis_map(src_gal, dst_field, dst_embed, dst_image):
    """The F-algebra map src -> dst sending src's gen to dst_image."""
    pows = [dst_field.one]
    for _ in range(src_gal.r - 1):
        pows.append(dst_field.mul(pows[-1], dst_image))

    def mapped(x):
        acc = dst_field.zero
        for c, pw in zip(src_gal.rel_coords(x), pows):
            if c != src_gal.base.zero:
                acc = dst_field.add(acc, dst_field.mul(dst_embed(c), pw))
        return acc

    return mapped


def build_decomposition(q, r, central_modulus=None, k=1, seed=0):
    """Decomposition for K/F of degree r over F of size q.

    ``central_modulus`` is a coefficient list over F (constant term first,
    encoded); the default is Y^k - 1.  Inseparable or nonpalindromic moduli
    are rejected with a pointer to the right routine.
    """
    p, a = _split_prime_power(q)
    F = ff.make_extension(p, a)
    K = ff.make_extension(p, a * r)
    KG = ff.AbsoluteGalois(K, F)
    if central_modulus is None:
        central = [F.neg(F.one)] + [F.zero] * (k - 1) + [F.one]
    else:
        central = [
            c if not isinstance(c, int) else F.decode(c % F.size)
            for c in central_modulus
        ]
    return Decomposition(F, K, KG, central, seed=seed)


def _split_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            a = 0
            qq = q
            while qq % p == 0:
                qq //= p
                a += 1
            if qq != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, a
    raise ValueError("invalid field size")
