"""Reduced bicomplexes: ^σM_δ ⊗ ∧g ⊗ F^{⊗q} with (∂_g, b_F, B_F), the
Poincaré isomorphism, and the dual M ⊗ ∧g* ⊗ F^{⊗q} with (∂_{g*}, b*_F).

Chains are Vecs keyed ``(a, I, fs)``: module index, strictly increasing index
tuple into g (or g*), and a tuple of F monomials.
"""

import math
import random
from itertools import combinations, permutations

from .cyclichom import ColumnOps, bullet, check_cocyclic
from .exactlin import Fraction, SparseMatrix, Vec
from .hopf import canonical_mpi
from .liealg import ce_coboundary, cohomology_dims, lie_homology_boundary, sort_sign
from .report import Report

REF = {
    "homology-square": "∂_g² = 0",
    "dual-square": "∂_{g*}² = 0,  b*_F² = 0",
    "total-square": "(∂_{g*} + (−1)^p b*_F)² = 0",
    "poincare-inverse": "𝔇𝔇⁻¹ = 𝔇⁻¹𝔇 = Id",
    "poincare-coaction": "∇_{M⊗∧g*} = 𝔇⁻¹∘∇_{^σM_δ⊗∧g}∘𝔇",
    "volume-coaction": "∇*(ϖ*) = σ⊗ϖ*",
    "poincare-transfer": "b*_F = 𝔇⁻¹ b_F 𝔇",
    "alpha-b": "b_U∘α̃ = 0",
    "alpha-B": "B_U∘α̃ = α̃∘∂_g",
    "alpha-bF": "b_F-column∘α̃ = α̃∘b_F",
}


class _RightTensor:
    """M ⊗ F^{⊗q} as a right g-module; basis keys are (a, fs)."""

    side = "right"

    def __init__(self, fn):
        self._fn = fn

    def act(self, i, vec):
        out = Vec()
        for key, c in vec.items():
            out.iadd(self._fn(i, key), c)
        return out


def _split(c):
    return Vec({((a, fs), idx): x for (a, idx, fs), x in c.items()})


def _join(c):
    return Vec({(a, idx, fs): x for ((a, fs), idx), x in c.items()})


def wedge_coaction(lh, idx):
    """X^{i1}∧…∧X^{ip} ↦ Σ X^{l1}∧…∧X^{lp} ⊗ f_{i1}^{l1}⋯f_{ip}^{lp}; Vec over (I, g)."""
    F = lh.F
    out = Vec.unit(((), F.zero_key))
    for i in idx:
        nxt = Vec()
        for (ls, g), c in out.items():
            for l in range(lh.m):
                for e, d in lh.coef[i][l].items():
                    nxt.add_term((ls + (l,), F.mono_mul(g, e)), c * d)
        out = nxt
    res = Vec()
    for (ls, g), c in out.items():
        sg, key = sort_sign(ls)
        if sg:
            res.add_term((key, g), sg * c)
    return res


def dual_wedge_coaction(lh, idx):
    """θ^{i1}∧…∧θ^{iq} ↦ Σ f_{l1}^{i1}⋯f_{lq}^{iq} ⊗ θ^{l1}∧…; Vec over (g, I)."""
    F = lh.F
    out = Vec.unit((F.zero_key, ()))
    for i in idx:
        nxt = Vec()
        for (g, ls), c in out.items():
            for l in range(lh.m):
                for e, d in lh.coef[l][i].items():
                    nxt.add_term((F.mono_mul(g, e), ls + (l,)), c * d)
        out = nxt
    res = Vec()
    for (g, ls), c in out.items():
        sg, key = sort_sign(ls)
        if sg:
            res.add_term((g, key), sg * c)
    return res


class ReducedComplex:
    """^σM_δ ⊗ ∧^p g ⊗ F^{⊗q} for a SAYD module built on an induced module."""

    def __init__(self, S, degree=2, terms=2):
        self.S = S
        self.H = S.H
        self.lh = S.H.lh
        self.F, self.U, self.g = self.lh.F, self.lh.U, self.lh.g
        self.M = S.M
        self.degree, self.terms = degree, terms
        self.module = _RightTensor(self._liebd_action)
        self.dual_module = _RightTensor(self._dual_action)
        self._f_ops = {}

    # the g actions on M ⊗ F^{⊗q}
    def _liebd_action(self, i, key):
        """(m⊗f̃)◁X = δ(X)m⊗f̃ − X·m⊗f̃ − m⊗X•f̃."""
        a, fs = key
        out = Vec()
        for b, x in self.S.act_basis(a, (self.F.zero_key, self.U.unit_key(i))).items():
            out.add_term((b, fs), x)
        for t, x in bullet(self.lh, self.U.gen(i), Vec.unit(fs)).items():
            out.add_term((a, t), -x)
        return out

    def _dual_action(self, i, key):
        """(m⊗f̃)◀X = −X·m⊗f̃ − m⊗X•f̃."""
        a, fs = key
        out = Vec()
        for b, x in self.M.act_gen(i, Vec.unit(a)).items():
            out.add_term((b, fs), -x)
        for t, x in bullet(self.lh, self.U.gen(i), Vec.unit(fs)).items():
            out.add_term((a, t), -x)
        return out

    # homology direction
    def boundary_g(self, c):
        return _join(lie_homology_boundary(self.g, self.module, _split(c)))

    def coaction_leg(self, a, idx):
        """Σ m_b ⊗ α⟨0⟩ ⊗ S(α⟨1⟩)σS(m⟨1⟩); Vec over (b, I, k)."""
        F = self.F
        out = Vec()
        wc = wedge_coaction(self.lh, idx)
        for ((g, _), b), c in self.S.coaction_basis(a).items():
            for (I, h), d in wc.items():
                for k, x in F.mul(Vec.unit(g), F.mono_antipode(h)).items():
                    out.add_term((b, I, k), c * d * x)
        return out

    def f_ops(self, p):
        """b_F, τ_F, B_F as the cocyclic structure in the F-degree (p fixed)."""
        ops = self._f_ops.get(p)
        if ops is None:
            ops = self._f_ops[p] = ColumnOps(self, p)
            ops.name = f"reduced-p{p}"
        return ops

    def b_F(self, c, q):
        p = _lie_degree(c)
        return self.f_ops(p).b(c, q)

    def tau_F(self, c, q):
        return self.f_ops(_lie_degree(c)).tau(c, q)

    def B_F(self, c, q):
        return self.f_ops(_lie_degree(c)).B(c, q)

    def sample(self, rng, p, q):
        fb = self.F.basis_upto(self.degree)
        out = Vec()
        if p > self.g.dim:
            return out
        for _ in range(self.terms):
            idx = tuple(sorted(rng.sample(range(self.g.dim), p)))
            key = (rng.randrange(self.M.dim), idx, tuple(rng.choice(fb) for _ in range(q)))
            out.add_term(key, Fraction(rng.choice([-2, -1, 1, 2, 3])))
        return out

    # dual side
    def boundary_dual_g(self, c):
        return _join(ce_coboundary(self.g, self.dual_module, _split(c)))

    def b_star_F(self, c, q):
        F = self.F
        out = Vec()
        for (a, idx, fs), x in c.items():
            out.add_term((a, idx, (F.zero_key,) + fs), x)
            for i in range(1, q + 1):
                for (y, z), d in F.mono_coproduct(fs[i - 1]).items():
                    out.add_term((a, idx, fs[: i - 1] + (y, z) + fs[i:]), (-1) ** i * x * d)
            last = (-1) ** (q + 1) * x
            for (b, e), d in self.M.coaction(Vec.unit(a)).items():
                s = F.mono_antipode(e)
                for (g, I), w in dual_wedge_coaction(self.lh, idx).items():
                    for k, y in F.mul(s, Vec.unit(g)).items():
                        out.add_term((b, I, fs + (k,)), last * d * w * y)
        return out

    def total_dual(self, c):
        """∂_{g*} + (−1)^p b*_F on bihomogeneous pieces (p = exterior degree)."""
        out = Vec()
        for key, x in c.items():
            piece = Vec.unit(key, x)
            out.iadd(self.boundary_dual_g(piece))
            out.iadd(self.b_star_F(piece, len(key[2])), (-1) ** len(key[1]))
        return out

    # Poincaré duality
    def poincare(self, c):
        """M⊗∧^q g*⊗F^{⊗p} → M⊗∧^{m−q} g⊗F^{⊗p}, dropping the ϖ* factor."""
        out = Vec()
        top = tuple(range(self.g.dim))
        for (a, idx, fs), x in c.items():
            for rest, s in contract_all(idx, top).items():
                out.add_term((a, rest, fs), x * s)
        return out

    def poincare_inv(self, c):
        table = self._poincare_table()
        out = Vec()
        for (a, idx, fs), x in c.items():
            pre, s = table[idx]
            out.add_term((a, pre, fs), x / s)
        return out

    def _poincare_table(self):
        if not hasattr(self, "_ptab"):
            top = tuple(range(self.g.dim))
            self._ptab = {}
            for q in range(self.g.dim + 1):
                for idx in combinations(top, q):
                    (rest, s), = contract_all(idx, top).items()
                    self._ptab[rest] = (idx, s)
        return self._ptab

    def coaction_sigma_wedge(self, c):
        """∇(m⊗Y) = m⟨0⟩⊗Y⟨0⟩⊗σ^{−1}m⟨1⟩Y⟨1⟩ on ^σM_δ⊗∧g⊗F^{⊗p}; extra F leg appended."""
        F = self.F
        out = Vec()
        for (a, idx, fs), x in c.items():
            wc = wedge_coaction(self.lh, idx)
            for ((g, _), b), d in self.S.coaction_basis(a).items():
                s = F.mono_antipode(g)
                for (I, h), w in wc.items():
                    for k, y in F.mul(s, Vec.unit(h)).items():
                        out.add_term((b, I, fs + (k,)), x * d * w * y)
        return out

    def coaction_dual_module(self, c):
        """∇(m⊗α) = m⟨0⟩⊗α⟨0⟩⊗m⟨1⟩S(α⟨−1⟩); extra F leg appended."""
        F = self.F
        out = Vec()
        for (a, idx, fs), x in c.items():
            dc = dual_wedge_coaction(self.lh, idx)
            for (b, e), d in self.M.coaction(Vec.unit(a)).items():
                for (g, I), w in dc.items():
                    for k, y in F.mul(Vec.unit(e), F.mono_antipode(g)).items():
                        out.add_term((b, I, fs + (k,)), x * d * w * y)
        return out

    # antisymmetrization into the bicocyclic module
    def antisymmetrize(self, c):
        U = self.U
        out = Vec()
        for (a, idx, fs), x in c.items():
            p = len(idx)
            scale = Fraction(1, math.factorial(p))
            for perm in permutations(range(p)):
                sg, _ = sort_sign(perm)
                us = tuple(U.unit_key(idx[k]) for k in perm)
                out.add_term((a, us, fs), x * sg * scale)
        return out


def _lie_degree(c):
    degs = {len(k[1]) for k in c}
    if len(degs) > 1:
        raise ValueError("chain is not homogeneous in the exterior degree")
    return degs.pop() if degs else 0


def contract_all(idx, top):
    """ι(θ^{i1}∧…∧θ^{iq}) ϖ = ι(θ^{iq})∘…∘ι(θ^{i1}) ϖ; Vec over index tuples."""
    cur = Vec.unit(tuple(top))
    for j in idx:
        nxt = Vec()
        for t, c in cur.items():
            if j in t:
                r = t.index(j)
                nxt.add_term(t[:r] + t[r + 1:], -c if r % 2 else c)
        cur = nxt
    return cur


def check_reduced(R, p_max=2, q_max=2, samples=3, seed=0, bicocyclic=None):
    """Squares, Poincaré compatibilities and the α̃ chain-map relations."""
    rep = Report("reduced")
    rng = random.Random(seed)
    m = R.g.dim
    p_max = min(p_max, m)
    for p in range(p_max + 1):
        rep.extend(check_cocyclic(R.f_ops(p), q_max, max(1, samples // 2), seed + p))
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            for s in range(samples):
                w = (p, q, s)
                c = R.sample(rng, p, q)
                rep.expect("reduced.homology-square", REF["homology-square"], w, R.boundary_g(R.boundary_g(c)), Vec())
                d = R.sample(rng, p, q)
                rep.expect("reduced.dual-square", REF["dual-square"], w + ("g*",), R.boundary_dual_g(R.boundary_dual_g(d)), Vec())
                rep.expect("reduced.dual-square", REF["dual-square"], w + ("F",), R.b_star_F(R.b_star_F(d, q), q + 1), Vec())
                rep.expect("reduced.total-square", REF["total-square"], w, R.total_dual(R.total_dual(d)), Vec())
                rep.expect("reduced.poincare-inverse", REF["poincare-inverse"], w, R.poincare_inv(R.poincare(d)), d)
                rep.expect("reduced.poincare-inverse", REF["poincare-inverse"], w + ("inv",), R.poincare(R.poincare_inv(c)), c)
                rep.expect("reduced.poincare-transfer", REF["poincare-transfer"], w,
                           R.poincare(R.b_star_F(d, q)), R.b_F(R.poincare(d), q))
    for q in range(m + 1):
        for idx in combinations(range(m), q):
            for a in range(R.M.dim):
                d = Vec.unit((a, idx, ()))
                lhs = R.poincare(R.coaction_dual_module(d))
                rhs = R.coaction_sigma_wedge(R.poincare(d))
                rep.expect("reduced.poincare-coaction", REF["poincare-coaction"], (a, idx), lhs, rhs)
    top = tuple(range(m))
    _, sigma = canonical_mpi(R.lh)
    rep.expect("reduced.volume-coaction", REF["volume-coaction"], top,
               dual_wedge_coaction(R.lh, top), Vec({(k, top): c for k, c in sigma.items()}))
    if bicocyclic is not None:
        for p in range(p_max + 1):
            rows = {q: bicocyclic.rows(q) for q in range(q_max + 1)}
            for q in range(q_max + 1):
                for s in range(samples):
                    w = (p, q, s)
                    c = R.sample(rng, p, q)
                    ac = R.antisymmetrize(c)
                    rep.expect("reduced.alpha-b", REF["alpha-b"], w, rows[q].b(ac, p), Vec())
                    rep.expect("reduced.alpha-B", REF["alpha-B"], w, rows[q].B(ac, p),
                               R.antisymmetrize(R.boundary_g(c)))
                    rep.expect("reduced.alpha-bF", REF["alpha-bF"], w, bicocyclic.columns(p).b(ac, q),
                               R.antisymmetrize(R.b_F(c, q)))
    return rep


def e0_collapse(R, max_degree=None):
    """Total cohomology of the dual bicomplex truncated in the F-degree, folded by parity.

    Only meaningful when F is trivial: then every column is finite.
    """
    if R.F.n:
        raise ValueError("collapse computation needs the trivial Hopf algebra")
    m = R.g.dim
    top = m if max_degree is None else max_degree
    zero = R.F.zero_key

    def basis(n):
        out = []
        for q in range(n + 1):
            p = n - q
            if p > m:
                continue
            for idx in combinations(range(m), p):
                for a in range(R.M.dim):
                    out.append((a, idx, (zero,) * q))
        return out

    bases = [basis(n) for n in range(top + 2)]
    mats = []
    for n in range(top + 1):
        ix = {k: i for i, k in enumerate(bases[n + 1])}
        cols = []
        for key in bases[n]:
            d = R.total_dual(Vec.unit(key))
            cols.append({ix[k]: c for k, c in d.items()})
        mats.append(SparseMatrix.from_columns(len(bases[n + 1]), cols))
    dims = cohomology_dims(mats, [len(b) for b in bases]).dims[: top + 1]
    even = sum(d for n, d in enumerate(dims) if n % 2 == 0)
    odd = sum(d for n, d in enumerate(dims) if n % 2 == 1)
    return dims, (even, odd)
