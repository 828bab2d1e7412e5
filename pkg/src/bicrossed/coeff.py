"""Induced (g, F)-modules and the coefficient module ^σM_δ over F ▸◂ U(g).

Module vectors are Vecs over basis indices.  The F-coaction of an induced
module is a matrix ``coaction[b][a]`` with ∇m_a = Σ_b m_b ⊗ coaction[b][a].
"""

import random

from .exactlin import Fraction, Vec
from .hopf import canonical_mpi
from .liealg import check_module
from .report import Report

REF = {
    "induced": "∇(X·m) = X⟨0⟩·m⟨0⟩⊗X⟨1⟩m⟨1⟩ + m⟨0⟩⊗X▷m⟨1⟩",
    "comodule": "(∇⊗id)∇ = (id⊗Δ)∇,  (id⊗ε)∇ = id",
    "pairing": "v·m = ⟨m⟨1⟩, v⟩ m⟨0⟩",
    "compat": "ζ·(X·m) − X·(ζ·m) = (ζ▷X)·m + (ζ◁X)·m",
    "yd": "(h(2)·m)⟨0⟩⊗(h(2)·m)⟨1⟩h(1) = h(1)·m⟨0⟩⊗h(2)m⟨1⟩",
    "ayd": "∇(m·h) = S(h(3))m⟨−1⟩h(1) ⊗ m⟨0⟩·h(2)",
    "stability": "m⟨0⟩·m⟨−1⟩ = m",
}


class InducedModule:
    """Left g1-module with a right F-coaction (and optionally a g2-action)."""

    def __init__(self, name, g1_module, coaction, g2_module=None):
        self.name = name
        self.dim = g1_module.dim
        self.g1 = g1_module.as_left()
        self.g2 = g2_module.as_left() if g2_module is not None else None
        self.coaction_matrix = [[Vec(c) for c in row] for row in coaction]
        self._uact = {}

    @property
    def names(self):
        return self.g1.names

    def act_gen(self, i, m):
        return self.g1.act(i, m)

    def act_U(self, U, u, m):
        """Left action of U(g1) on a module vector."""
        out = Vec()
        for e, c in u.items():
            for a, x in m.items():
                key = (e, a)
                hit = self._uact.get(key)
                if hit is None:
                    hit = Vec.unit(a)
                    for k in reversed(U.word(e)):
                        hit = self.g1.act(k, hit)
                    self._uact[key] = hit
                out.iadd(hit, c * x)
        return out

    def coaction(self, m):
        """∇m as a Vec over (module index, F monomial)."""
        out = Vec()
        for a, x in m.items():
            for b in range(self.dim):
                for e, c in self.coaction_matrix[b][a].items():
                    out.add_term((b, e), x * c)
        return out


def trivial_module(g1, F, g2=None):
    from .liealg import LieModule

    return InducedModule(
        "trivial",
        LieModule.trivial(g1, 1, "left"),
        [[F.one()]],
        LieModule.trivial(g2, 1, "left") if g2 is not None else None,
    )


def check_induced_module(M, lh, degree=3, mp=None, pairing=None):
    rep = Report("induced")
    F, U = lh.F, lh.U
    rep.extend(check_module(lh.g, M.g1))
    # comodule laws of the coefficient matrix
    for a in range(M.dim):
        for b in range(M.dim):
            lhs = F.coproduct(M.coaction_matrix[b][a])
            rhs = Vec()
            for k in range(M.dim):
                for x, c in M.coaction_matrix[b][k].items():
                    for y, d in M.coaction_matrix[k][a].items():
                        rhs.add_term((x, y), c * d)
            rep.expect("sayd.comodule", REF["comodule"], (M.names[b], M.names[a]), lhs, rhs)
            rep.expect(
                "sayd.comodule", REF["comodule"], (M.names[b], M.names[a], "ε"),
                F.counit(M.coaction_matrix[b][a]), Fraction(1 if a == b else 0),
            )
    for i in range(lh.m):
        for a in range(M.dim):
            m = Vec.unit(a)
            lhs = M.coaction(M.act_gen(i, m))
            rhs = Vec()
            for (b, e), c in M.coaction(m).items():
                for (x0, x1), d in lh.coaction_gen(i).items():
                    xm = M.act_U(U, Vec.unit(x0), Vec.unit(b))
                    for b2, w in xm.items():
                        rhs.add_term((b2, F.mono_mul(x1, e)), c * d * w)
                for e2, w in lh.act_gen_mono(i, e).items():
                    rhs.add_term((b, e2), c * w)
            rep.expect("sayd.induced", REF["induced"], (lh.g.names[i], M.names[a]), lhs, rhs)
    if M.g2 is not None and mp is not None:
        g2 = mp.g2
        rep.extend(check_module(g2, M.g2))
        for a_ in range(g2.dim):
            for i in range(lh.m):
                for a in range(M.dim):
                    m = Vec.unit(a)
                    lhs = M.g2.act(a_, M.g1.act(i, m)) - M.g1.act(i, M.g2.act(a_, m))
                    rhs = Vec()
                    for j, c in mp.tri(Vec.unit(a_), Vec.unit(i)).items():
                        rhs.iadd(M.g1.act(j, m), c)
                    for b, c in mp.tle(Vec.unit(a_), Vec.unit(i)).items():
                        rhs.iadd(M.g2.act(b, m), c)
                    rep.expect("sayd.module-compatibility", REF["compat"], (g2.names[a_], lh.g.names[i], M.names[a]), lhs, rhs)
        if pairing is not None:
            U2 = mp.U2
            for v in U2.basis_upto(degree):
                for a in range(M.dim):
                    lhs = Vec.unit(a)
                    for k in reversed(U2.word(v)):
                        lhs = M.g2.act(k, lhs)
                    rhs = Vec()
                    for (b, e), c in M.coaction(Vec.unit(a)).items():
                        rhs.add_term(b, c * pairing.eval_mono(e, v))
                    rep.expect("sayd.pairing-consistency", REF["pairing"], (v, M.names[a]), lhs, rhs)
    return rep


class YDModule:
    """Left H-module, right H-comodule: (f▸◂u)m = ε(f)u·m,  m ↦ m⟨0⟩⊗m⟨1⟩▸◂1."""

    def __init__(self, H, M):
        self.H, self.M = H, M

    def act(self, h, m):
        out = Vec()
        for (f, u), c in h.items():
            e = self.H.F.mono_counit(f)
            if e:
                out.iadd(self.M.act_U(self.H.U, Vec.unit(u), m), c * e)
        return out

    def coaction(self, m):
        z = self.H.U.zero_key
        return self.M.coaction(m).map_keys(lambda k: (k[0], (k[1], z)))


def check_yd(H, M, degree=2, samples=10, seed=0):
    rep = Report("sayd")
    Y = YDModule(H, M)
    rng = random.Random(seed)
    hs = [Vec.unit(k) for k in H.basis_upto(degree)] + [H.random_element(rng, degree) for _ in range(samples)]
    for n, h in enumerate(hs):
        d = H.coproduct(h)
        for a in range(M.dim):
            m = Vec.unit(a)
            lhs, rhs = Vec(), Vec()
            for (h1, h2), c in d.items():
                for (b, k), x in Y.coaction(Y.act(Vec.unit(h2), m)).items():
                    for k2, y in H.mul(Vec.unit(k), Vec.unit(h1)).items():
                        lhs.add_term((b, k2), c * x * y)
                for (b, k), x in Y.coaction(m).items():
                    for b2, y in Y.act(Vec.unit(h1), Vec.unit(b)).items():
                        for k2, z in H.mul(Vec.unit(h2), Vec.unit(k)).items():
                            rhs.add_term((b2, k2), c * x * y * z)
            rep.expect("sayd.yd", REF["yd"], (n, M.names[a]), lhs, rhs)
    return rep


class SAYDModule:
    """^σM_δ: right action m◁(f▸◂u) = ε(f)δ(u(2))S(u(1))·m and left coaction
    m ↦ σS(m⟨1⟩)▸◂1 ⊗ m⟨0⟩.

    ``delta_twist`` and ``sigma_power`` exist to build deliberately broken
    variants for negative controls.
    """

    def __init__(self, H, M, delta_twist=True, sigma_power=1):
        self.H, self.M = H, M
        self.dim = M.dim
        self.delta_twist = delta_twist
        _, sigma = canonical_mpi(H.lh)
        self.sigma = H.F.power(sigma, sigma_power)
        self._act = {}
        self._coact = {}

    def _u_delta(self, u):
        return self.H.lh.delta_U(Vec.unit(u)) if self.delta_twist else self.H.U.counit(Vec.unit(u))

    def act_basis(self, a, key):
        hk = (a, key)
        hit = self._act.get(hk)
        if hit is None:
            f, u = key
            H = self.H
            hit = Vec()
            e = H.F.mono_counit(f)
            if e:
                for (u1, u2), c in H.U.mono_coproduct(u).items():
                    d = self._u_delta(u2)
                    if d:
                        su = H.U.mono_antipode(u1)
                        hit.iadd(self.M.act_U(H.U, su, Vec.unit(a)), c * d * e)
            self._act[hk] = hit
        return hit

    def act(self, m, h):
        out = Vec()
        for a, x in m.items():
            for key, c in h.items():
                out.iadd(self.act_basis(a, key), x * c)
        return out

    def coaction_basis(self, a):
        hit = self._coact.get(a)
        if hit is None:
            H = self.H
            F = H.F
            hit = Vec()
            for (b, e), c in self.M.coaction(Vec.unit(a)).items():
                for g, d in F.mul(self.sigma, F.mono_antipode(e)).items():
                    hit.add_term(((g, H.U.zero_key), b), c * d)
            self._coact[a] = hit
        return hit

    def coaction(self, m):
        """Vec over (H basis key, module index)."""
        out = Vec()
        for a, x in m.items():
            out.iadd(self.coaction_basis(a), x)
        return out


def check_sayd(S, degree=2, samples=10, seed=0):
    rep = Report("sayd")
    H = S.H
    rng = random.Random(seed)
    basis = H.basis_upto(degree)
    hs = [Vec.unit(k) for k in basis] + [H.random_element(rng, degree) for _ in range(samples)]
    names = S.M.names
    for a in range(S.dim):
        m = Vec.unit(a)
        back = Vec()
        for (k, b), c in S.coaction(m).items():
            back.iadd(S.act_basis(b, k), c)
        rep.expect("sayd.stability", REF["stability"], names[a], back, m)
    for n, h in enumerate(hs):
        w = basis[n] if n < len(basis) else ("sample", n - len(basis))
        d3 = H.iterated_coproduct(h, 3)
        for a in range(S.dim):
            m = Vec.unit(a)
            lhs = S.coaction(S.act(m, h))
            rhs = Vec()
            co = S.coaction(m)
            for (h1, h2, h3), c in d3.items():
                left = H.basis_antipode(h3)
                for (k, b), x in co.items():
                    t = H.mul(H.mul(left, Vec.unit(k)), Vec.unit(h1))
                    mb = S.act_basis(b, h2)
                    for kk, y in t.items():
                        for bb, z in mb.items():
                            rhs.add_term((kk, bb), c * x * y * z)
            rep.expect("sayd.ayd", REF["ayd"], (w, names[a]), lhs, rhs)
    return rep
