"""Cocyclic modules over F ▸◂ U(g) with SAYD coefficients.

Three operator bundles share one interface (faces, degeneracies, τ on a
graded space of Vec cochains): the standard module M⊗H^{⊗q}, and the rows
and columns of the bicocyclic module M⊗U^{⊗p}⊗F^{⊗q}.  ``check_cocyclic``
verifies the full set of cocyclic relations for any of them.
"""

import random

from .exactlin import Fraction, Vec
from .report import Report

REF = {
    "face-face": "∂_j∂_i = ∂_i∂_{j−1}  (i < j)",
    "degen-degen": "σ_jσ_i = σ_iσ_{j+1}  (i ≤ j)",
    "degen-face": "σ_j∂_i = ∂_iσ_{j−1} (i<j), Id (i=j,j+1), ∂_{i−1}σ_j (i>j+1)",
    "tau-face": "τ∂_i = ∂_{i−1}τ,  τ∂_0 = ∂_{q+1}",
    "tau-degen": "τσ_i = σ_{i−1}τ,  τσ_0 = σ_qτ²",
    "tau-cyclic": "τ^{q+1} = Id",
    "b-square": "b² = 0",
    "B-square": "B² = 0",
    "bB": "bB + Bb = 0",
    "psi-roundtrip": "Ψ⁻¹Ψ = Id,  ΨΨ⁻¹ = Id",
    "psi-intertwine": "Ψ(→∂_i↑∂_i) = ∂_iΨ,  Ψ(→σ_j↑σ_j) = σ_jΨ,  Ψ(→τ↑τ) = τΨ",
}


class CocyclicOps:
    """Linear extension and memoisation around key-level operators.

    Subclasses implement ``_face(i, key, n)``, ``_degen(j, key, n)``,
    ``_tau(key, n)`` and ``sample(rng, n)``; ``n`` is the degree of ``key``.
    """

    name = "cocyclic"

    def __init__(self):
        self._memo = {}

    def _cached(self, tag, key, fn):
        k = (tag, key)
        hit = self._memo.get(k)
        if hit is None:
            hit = fn()
            self._memo[k] = hit
        return hit

    def face(self, i, c, n):
        if not 0 <= i <= n + 1:
            raise ValueError(f"face index {i} out of range in degree {n}")
        return c.linear(lambda k: self._cached(("f", i, n), k, lambda: self._face(i, k, n)))

    def degen(self, j, c, n):
        if not 0 <= j <= n - 1:
            raise ValueError(f"degeneracy index {j} out of range in degree {n}")
        return c.linear(lambda k: self._cached(("s", j, n), k, lambda: self._degen(j, k, n)))

    def tau(self, c, n):
        if n == 0:
            return Vec(c)
        return c.linear(lambda k: self._cached(("t", n), k, lambda: self._tau(k, n)))

    def normalize(self, c, n):
        """Projection onto ∩ ker σ_j: every leg x ↦ x − ε(x)1."""
        out = Vec()
        for key, x in c.items():
            for k, y in self._normalize_key(key).items():
                out.add_term(k, x * y)
        return out

    def tau_power(self, c, n, k):
        for _ in range(k):
            c = self.tau(c, n)
        return c

    def b(self, c, n):
        out = Vec()
        for i in range(n + 2):
            out.iadd(self.face(i, c, n), (-1) ** i)
        return out

    def B(self, c, n):
        """Connes boundary; it squares to zero on normalized cochains."""
        if n == 0:
            return Vec()
        t = self.degen(n - 1, self.tau(c, n), n)
        out = Vec()
        for i in range(n):
            out.iadd(t, (-1) ** ((n - 1) * i))
            t = self.tau(t, n - 1)
        return out


def check_cocyclic(ops, q_max=2, samples=3, seed=0):
    rep = Report("cocyclic")
    rng = random.Random(seed)
    tag = ops.name

    def eq(rel, w, lhs, rhs):
        rep.expect(f"cocyclic.{rel}", REF[rel], (tag,) + w, lhs, rhs)

    for n in range(q_max + 1):
        for s in range(samples):
            c = ops.sample(rng, n)
            w = (n, s)
            for j in range(n + 3):
                for i in range(j):
                    eq("face-face", w + (i, j), ops.face(j, ops.face(i, c, n), n + 1), ops.face(i, ops.face(j - 1, c, n), n + 1))
            for j in range(n - 1):
                for i in range(j + 1):
                    eq("degen-degen", w + (i, j), ops.degen(j, ops.degen(i, c, n), n - 1), ops.degen(i, ops.degen(j + 1, c, n), n - 1))
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = ops.degen(j, ops.face(i, c, n), n + 1)
                    if i < j:
                        rhs = ops.face(i, ops.degen(j - 1, c, n), n - 1)
                    elif i in (j, j + 1):
                        rhs = c
                    else:
                        rhs = ops.face(i - 1, ops.degen(j, c, n), n - 1)
                    eq("degen-face", w + (i, j), lhs, rhs)
            tc = ops.tau(c, n)
            for i in range(1, n + 2):
                eq("tau-face", w + (i,), ops.tau(ops.face(i, c, n), n + 1), ops.face(i - 1, tc, n))
            eq("tau-face", w + (0,), ops.tau(ops.face(0, c, n), n + 1), ops.face(n + 1, c, n))
            for i in range(1, n):
                eq("tau-degen", w + (i,), ops.tau(ops.degen(i, c, n), n - 1), ops.degen(i - 1, tc, n))
            if n >= 1:
                eq("tau-degen", w + (0,), ops.tau(ops.degen(0, c, n), n - 1), ops.degen(n - 1, ops.tau(tc, n), n))
            eq("tau-cyclic", w, ops.tau_power(c, n, n + 1), c)
            eq("b-square", w, ops.b(ops.b(c, n), n + 1), Vec())
            c = ops.normalize(c, n)
            bc = ops.b(c, n)
            Bc = ops.B(c, n)
            if n >= 2:
                eq("B-square", w, ops.B(Bc, n - 1), Vec())
            lhs = ops.B(bc, n + 1)
            if n >= 1:
                lhs = lhs + ops.b(Bc, n - 1)
            eq("bB", w, lhs, Vec())
    return rep


# helpers on the Hopf algebras

def f_iterated_coproduct(F, e, legs):
    """Δ^{(legs)} of an F monomial as a Vec over tuples of monomials."""
    if legs == 0:
        return Vec({(): F.mono_counit(e)}) if F.mono_counit(e) else Vec()
    out = Vec.unit((e,))
    for _ in range(legs - 1):
        nxt = Vec()
        for key, c in out.items():
            for (a, b), d in F.mono_coproduct(key[-1]).items():
                nxt.add_term(key[:-1] + (a, b), c * d)
        out = nxt
    return out


def iterated_coaction(lh, u, legs):
    """u⟨0⟩ ⊗ u⟨1⟩ ⊗ … ⊗ u⟨legs⟩ as a Vec over (ukey, (f1, …, f_legs))."""
    if legs == 0:
        return Vec.unit((u, ()))
    out = Vec()
    for (u0, g), c in lh.coaction_mono(u).items():
        for fs, d in f_iterated_coproduct(lh.F, g, legs).items():
            out.add_term((u0, fs), c * d)
    return out


def _twisted_spread(lh, us, n):
    """Σ u^1⟨0⟩…u^n⟨0⟩ ⊗ (F-slot j = Π_{i<j} u^i⟨j−i⟩) for U monomials us.

    Returns a Vec over ((u0_1, …, u0_n), (g_1, …, g_n)).
    """
    F = lh.F
    out = Vec.unit(((), (F.zero_key,) * n))
    for i, u in enumerate(us):
        nxt = Vec()
        for co, c in iterated_coaction(lh, u, n - 1 - i).items():
            u0, legs = co
            for (zs, gs), d in out.items():
                gs2 = list(gs)
                for r, leg in enumerate(legs):
                    gs2[i + 1 + r] = F.mono_mul(gs2[i + 1 + r], leg)
                nxt.add_term((zs + (u0,), tuple(gs2)), c * d)
        out = nxt
    return out


def bullet(lh, u, fs):
    """u • (f^1 ⊗ … ⊗ f^n) for U element u and a Vec over F^{⊗n} keys."""
    out = Vec()
    for ukey, a in u.items():
        for ftup, b in fs.items():
            n = len(ftup)
            if n == 0:
                e = lh.U.counit(Vec.unit(ukey))
                if e:
                    out.add_term((), a * b * e)
                continue
            for legs, c in lh.U.mono_coproduct(ukey, n).items():
                for (zs, gs), d in _twisted_spread(lh, legs, n).items():
                    acc = Vec.unit(())
                    for z, g, f in zip(zs, gs, ftup):
                        slot = lh.F.mul(Vec.unit(g), lh.act_mono(z, f))
                        acc = Vec.from_terms((k + (x,), v * y) for k, v in acc.items() for x, y in slot.items())
                    out.iadd(acc, a * b * c * d)
    return out


def _project_legs(legs, unit, counit):
    parts = []
    for x in legs:
        e = counit(x)
        p = Vec.unit(x)
        if e:
            p.add_term(unit, -e)
        parts.append(p)
    return _tensor_key(parts)


def _tensor_key(parts):
    acc = Vec.unit(())
    for p in parts:
        acc = Vec.from_terms((k + (x,), v * y) for k, v in acc.items() for x, y in p.items())
    return acc


# per-algebra memo of h_diagonal on basis elements; the algebra object is
# kept alive alongside its table so the id stays valid
_H_DIAG = {}


def h_diagonal(H, h, keys):
    """h·(x1⊗…⊗xq) = h(1)x1 ⊗ … ⊗ h(q)xq."""
    q = len(keys)
    if q == 0:
        e = H.counit(h)
        return Vec({(): e}) if e else Vec()
    memo = _H_DIAG.setdefault(id(H), (H, {}))[1]
    out = Vec()
    for hk, y in h.items():
        key = (hk, keys)
        hit = memo.get(key)
        if hit is None:
            hit = Vec()
            for legs, c in H.iterated_coproduct(Vec.unit(hk), q).items():
                parts = [H.mul(Vec.unit(a), Vec.unit(x)) for a, x in zip(legs, keys)]
                hit.iadd(_tensor_key(parts), c)
            memo[key] = hit
        out.iadd(hit, y)
    return out


def u_diagonal(U, u, keys):
    q = len(keys)
    if q == 0:
        e = U.counit(u)
        return Vec({(): e}) if e else Vec()
    out = Vec()
    for legs, c in U.coproduct(u, q).items():
        parts = [U.mono_mul(a, x) for a, x in zip(legs, keys)]
        out.iadd(_tensor_key(parts), c)
    return out


def f_diagonal(F, f, keys):
    q = len(keys)
    out = Vec()
    for e, a in f.items():
        for legs, c in f_iterated_coproduct(F, e, q).items():
            out.add_term(tuple(F.mono_mul(x, y) for x, y in zip(legs, keys)), a * c)
    return out


# the standard module C^q(H, M) = M ⊗ H^{⊗q}

class StandardCocyclic(CocyclicOps):
    """Keys are (module index, (h^1, …, h^q)) with H basis keys."""

    name = "standard"

    def __init__(self, S, degree=2, terms=2):
        super().__init__()
        self.S, self.H = S, S.H
        self.degree, self.terms = degree, terms

    def _face(self, i, key, n):
        a, hs = key
        H = self.H
        if i == 0:
            return Vec.unit((a, ((H.F.zero_key, H.U.zero_key),) + hs))
        if i == n + 1:
            return Vec.from_terms(((b, hs + (k,)), c) for (k, b), c in self.S.coaction_basis(a).items())
        return Vec.from_terms(
            ((a, hs[: i - 1] + (x, y) + hs[i:]), c) for (x, y), c in H.basis_coproduct(hs[i - 1]).items()
        )

    def _degen(self, j, key, n):
        a, hs = key
        e = self.H.counit(Vec.unit(hs[j]))
        return Vec({(a, hs[:j] + hs[j + 1:]): e}) if e else Vec()

    def _normalize_key(self, key):
        a, hs = key
        H = self.H
        unit = (H.F.zero_key, H.U.zero_key)
        return _project_legs(hs, unit, lambda k: H.counit(Vec.unit(k))).map_keys(lambda t: (a, t))

    def _tau(self, key, n):
        a, hs = key
        H, S = self.H, self.S
        out = Vec()
        for (k, b), c in S.coaction_basis(a).items():
            rest = hs[1:] + (k,)
            for (x1, x2), d in H.basis_coproduct(hs[0]).items():
                mb = S.act_basis(b, x1)
                if not mb:
                    continue
                moved = h_diagonal(H, H.basis_antipode(x2), rest)
                for bb, y in mb.items():
                    for t, z in moved.items():
                        out.add_term((bb, t), c * d * y * z)
        return out

    def sample(self, rng, n):
        # τ-orbits grow fast with the number of slots; use linear legs from degree 3 on
        basis = self.H.basis_upto(self.degree if n < 3 else 1)
        out = Vec()
        for _ in range(self.terms):
            key = (rng.randrange(self.S.dim), tuple(rng.choice(basis) for _ in range(n)))
            out.add_term(key, Fraction(rng.choice([-2, -1, 1, 2, 3])))
        return out


# the bicocyclic module M ⊗ U^{⊗p} ⊗ F^{⊗q}

class Bicocyclic:
    """Operators on keys (module index, (u^1, …, u^p), (f^1, …, f^q))."""

    def __init__(self, S, degree=2, terms=2):
        self.S, self.H = S, S.H
        self.lh = S.H.lh
        self.F, self.U = self.lh.F, self.lh.U
        self.degree, self.terms = degree, terms
        self._rows, self._columns, self._right = {}, {}, {}

    def bullet(self, u, fs):
        return bullet(self.lh, u, fs)

    def right_action(self, a, fs, ukey):
        """(m_a ⊗ f̃)·u = δ(u(1))S(u(2))·m ⊗ S(u(3))•f̃, via the SAYD action."""
        hit = self._right.get((a, fs, ukey))
        if hit is not None:
            return hit
        U, F = self.U, self.F
        out = Vec()
        for (u1, u2), c in U.mono_coproduct(ukey).items():
            mb = self.S.act_basis(a, (F.zero_key, u1))
            if not mb:
                continue
            moved = self.bullet(U.mono_antipode(u2), Vec.unit(fs))
            for b, x in mb.items():
                for t, y in moved.items():
                    out.add_term((b, t), c * x * y)
        self._right[(a, fs, ukey)] = out
        return out

    def coaction_leg(self, a, us):
        """m_a ⊗ ũ ↦ Σ m_b ⊗ ũ⟨0⟩ ⊗ S(ũ⟨1⟩)σS(m⟨1⟩) as Vec over (b, us0, g)."""
        F = self.F
        out = Vec()
        spread = Vec.unit(((), F.zero_key))
        for u in us:
            nxt = Vec()
            for (u0, g), c in self.lh.coaction_mono(u).items():
                for (zs, h), d in spread.items():
                    nxt.add_term((zs + (u0,), F.mono_mul(h, g)), c * d)
            spread = nxt
        for ((g, _), b), c in self.S.coaction_basis(a).items():
            for (zs, h), d in spread.items():
                for k, x in F.mul(Vec.unit(g), F.mono_antipode(h)).items():
                    out.add_term((b, zs, k), c * d * x)
        return out

    def rows(self, q):
        ops = self._rows.get(q)
        if ops is None:
            ops = self._rows[q] = RowOps(self, q)
        return ops

    def columns(self, p):
        ops = self._columns.get(p)
        if ops is None:
            ops = self._columns[p] = ColumnOps(self, p)
        return ops

    def sample(self, rng, p, q):
        ub = self.U.basis_upto(self.degree)
        fb = self.F.basis_upto(self.degree)
        out = Vec()
        for _ in range(self.terms):
            key = (rng.randrange(self.S.dim), tuple(rng.choice(ub) for _ in range(p)), tuple(rng.choice(fb) for _ in range(q)))
            out.add_term(key, Fraction(rng.choice([-2, -1, 1, 2, 3])))
        return out


class RowOps(CocyclicOps):
    """Horizontal operators (degree p, q fixed)."""

    def __init__(self, bico, q):
        super().__init__()
        self.bc, self.q = bico, q
        self.name = f"row-q{q}"

    def _face(self, i, key, n):
        a, us, fs = key
        U = self.bc.U
        z = U.zero_key
        if i == 0:
            return Vec.unit((a, (z,) + us, fs))
        if i == n + 1:
            return Vec.unit((a, us + (z,), fs))
        return Vec.from_terms(
            ((a, us[: i - 1] + (x, y) + us[i:], fs), c) for (x, y), c in U.mono_coproduct(us[i - 1]).items()
        )

    def _degen(self, j, key, n):
        a, us, fs = key
        if any(us[j]):
            return Vec()
        return Vec.unit((a, us[:j] + us[j + 1:], fs))

    def _normalize_key(self, key):
        a, us, fs = key
        U = self.bc.U
        return _project_legs(us, U.zero_key, lambda k: U.counit(Vec.unit(k))).map_keys(lambda t: (a, t, fs))

    def _tau(self, key, n):
        a, us, fs = key
        bc = self.bc
        U = bc.U
        out = Vec()
        rest = us[1:] + (U.zero_key,)
        for (x, y), c in U.mono_coproduct(us[0]).items():
            moved = u_diagonal(U, U.mono_antipode(y), rest)
            if not moved:
                continue
            for (b, ft), d in bc.right_action(a, fs, x).items():
                for t, w in moved.items():
                    out.add_term((b, t, ft), c * d * w)
        return out

    def sample(self, rng, n):
        return self.bc.sample(rng, n, self.q)


class ColumnOps(CocyclicOps):
    """Vertical operators (degree q, p fixed)."""

    def __init__(self, bico, p):
        super().__init__()
        self.bc, self.p = bico, p
        self.name = f"column-p{p}"

    def _face(self, i, key, n):
        a, us, fs = key
        F = self.bc.F
        if i == 0:
            return Vec.unit((a, us, (F.zero_key,) + fs))
        if i == n + 1:
            return Vec.from_terms(((b, zs, fs + (k,)), c) for (b, zs, k), c in self.bc.coaction_leg(a, us).items())
        return Vec.from_terms(
            ((a, us, fs[: i - 1] + (x, y) + fs[i:]), c) for (x, y), c in F.mono_coproduct(fs[i - 1]).items()
        )

    def _degen(self, j, key, n):
        a, us, fs = key
        e = self.bc.F.mono_counit(fs[j])
        return Vec({(a, us, fs[:j] + fs[j + 1:]): e}) if e else Vec()

    def _normalize_key(self, key):
        a, us, fs = key
        F = self.bc.F
        return _project_legs(fs, F.zero_key, F.mono_counit).map_keys(lambda t: (a, us, t))

    def _tau(self, key, n):
        a, us, fs = key
        F = self.bc.F
        out = Vec()
        s = F.mono_antipode(fs[0])
        for (b, zs, k), c in self.bc.coaction_leg(a, us).items():
            for t, d in f_diagonal(F, s, fs[1:] + (k,)).items():
                out.add_term((b, zs, t), c * d)
        return out

    def sample(self, rng, n):
        return self.bc.sample(rng, self.p, n)


class DiagonalOps(CocyclicOps):
    """The diagonal D^n with ∂_i = →∂_i↑∂_i, σ_j = →σ_j↑σ_j, τ = →τ↑τ."""

    name = "diagonal"

    def __init__(self, bico):
        super().__init__()
        self.bc = bico

    def _face(self, i, key, n):
        a, us, fs = key
        v = self.bc.columns(n).face(i, Vec.unit(key), n)
        return self.bc.rows(n + 1).face(i, v, n)

    def _degen(self, j, key, n):
        v = self.bc.columns(n).degen(j, Vec.unit(key), n)
        return self.bc.rows(n - 1).degen(j, v, n)

    def _tau(self, key, n):
        v = self.bc.columns(n).tau(Vec.unit(key), n)
        return self.bc.rows(n).tau(v, n)

    def _normalize_key(self, key):
        n = len(key[1])
        return self.bc.rows(n).normalize(self.bc.columns(n).normalize(Vec.unit(key), n), n)

    def sample(self, rng, n):
        return self.bc.sample(rng, n, n)


def psi_diag(bico, c):
    """D^n → C^n(H, M):  m⊗ũ⊗f̃ ↦ m ⊗ f^1▸◂u^1⟨0⟩ ⊗ f^2u^1⟨1⟩▸◂u^2⟨0⟩ ⊗ …"""
    F = bico.F
    out = Vec()
    for (a, us, fs), x in c.items():
        if len(us) != len(fs):
            raise ValueError("bidegree mismatch: psi needs p = q")
        n = len(us)
        for (zs, gs), d in _twisted_spread(bico.lh, us, n).items():
            out.add_term((a, tuple((F.mono_mul(f, g), z) for f, g, z in zip(fs, gs, zs))), x * d)
    return out


def psi_diag_inv(bico, c):
    """C^n(H, M) → D^n, inverse of ``psi_diag``."""
    F, lh = bico.F, bico.lh
    out = Vec()
    for (a, hs), x in c.items():
        n = len(hs)
        fs = [h[0] for h in hs]
        us = [h[1] for h in hs]
        acc = Vec.unit(((), (F.zero_key,) * n))
        for i in range(n - 1):
            nxt = Vec()
            for (u0, legs), c1 in iterated_coaction(lh, us[i], n - 1 - i).items():
                for (zs, gs), d in acc.items():
                    gs2 = list(gs)
                    # slot j receives leg n−j (1-based legs, reversed)
                    for r, leg in enumerate(legs):
                        j = n - 1 - r
                        gs2[j] = F.mono_mul(gs2[j], leg)
                    nxt.add_term((zs + (u0,), tuple(gs2)), c1 * d)
            acc = nxt
        for (zs, gs), d in acc.items():
            us_out = zs + (us[-1],) if n else ()
            parts = [F.mul(Vec.unit(f), F.mono_antipode(g)) for f, g in zip(fs, gs)]
            for ft, y in _tensor_key(parts).items():
                out.add_term((a, us_out, ft), x * d * y)
    return out


def check_psi(bico, n_max=2, samples=3, seed=0):
    rep = Report("cocyclic")
    rng = random.Random(seed)
    std = StandardCocyclic(bico.S, bico.degree, bico.terms)
    diag = DiagonalOps(bico)
    for n in range(n_max + 1):
        for s in range(samples):
            d = diag.sample(rng, n)
            c = std.sample(rng, n)
            w = (n, s)
            rep.expect("cocyclic.psi-roundtrip", REF["psi-roundtrip"], w + ("D",), psi_diag_inv(bico, psi_diag(bico, d)), d)
            rep.expect("cocyclic.psi-roundtrip", REF["psi-roundtrip"], w + ("C",), psi_diag(bico, psi_diag_inv(bico, c)), c)
            pd = psi_diag(bico, d)
            for i in range(n + 2):
                rep.expect("cocyclic.psi-intertwine", REF["psi-intertwine"], w + ("face", i),
                           psi_diag(bico, diag.face(i, d, n)), std.face(i, pd, n))
            for j in range(n):
                rep.expect("cocyclic.psi-intertwine", REF["psi-intertwine"], w + ("degen", j),
                           psi_diag(bico, diag.degen(j, d, n)), std.degen(j, pd, n))
            rep.expect("cocyclic.psi-intertwine", REF["psi-intertwine"], w + ("tau",),
                       psi_diag(bico, diag.tau(d, n)), std.tau(pd, n))
    return rep
