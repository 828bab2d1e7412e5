"""Commutative Hopf algebras by presentation, Lie-Hopf data, and the
bicrossed product F ▸◂ U(g).

F-elements are Vecs keyed by integer exponent tuples over the generators
(negative entries only on invertible, group-like generators).  Elements of
F ▸◂ U(g) are Vecs keyed by ``(F exponents, PBW exponents)``.  Tensors are
Vecs keyed by tuples of such keys.
"""

import random
from itertools import permutations

from .exactlin import Fraction, Vec
from .liealg import adjoint_trace_character, sort_sign
from .matched import Enveloping
from .report import Report

REF = {
    "coassoc": "(Δ⊗id)Δ = (id⊗Δ)Δ",
    "counit": "(ε⊗id)Δ = id = (id⊗ε)Δ",
    "antipode": "m(S⊗id)Δ = ηε = m(id⊗S)Δ",
    "group-like": "Δg = g⊗g for invertible generators",
    "derivation": "X▷(fg) = (X▷f)g + f(X▷g)",
    "action-bracket": "[X,Y]▷f = X▷(Y▷f) − Y▷(X▷f)",
    "counit-vanish": "ε(X▷f) = 0",
    "delta-equivariance": "Δ(X▷f) = X•Δ(f),  X•(f¹⊗f²) = X⟨0⟩▷f¹⊗X⟨1⟩f² + f¹⊗X▷f²",
    "structure-identity": "f^k_{j,i} − f^k_{i,j} = Σ C^k_{s,r} f_i^r f_j^s + Σ C^l_{i,j} f_l^k",
    "coefficient-coproduct": "Δ(f_i^j) = Σ_k f_k^j ⊗ f_i^k",
    "coaction-commutator": "∇(XY − YX) = ∇[X,Y]",
    "coaction-coalgebra": "u⟨0⟩(1)⊗u⟨0⟩(2)⊗u⟨1⟩ = u(1)⟨0⟩⊗u(2)⟨0⟩⊗u(1)⟨1⟩u(2)⟨1⟩",
    "coaction-counit": "ε(u⟨0⟩)u⟨1⟩ = ε(u)1",
    "action-unit": "u▷1 = ε(u)1",
    "action-multiplicative": "u▷(fg) = (u(1)▷f)(u(2)▷g)",
    "action-counit": "ε(u▷f) = ε(u)ε(f)",
    "action-coproduct": "Δ(u▷f) = u(1)⟨0⟩▷f(1) ⊗ u(1)⟨1⟩(u(2)▷f(2))",
    "coaction-unit": "∇(1) = 1⊗1",
    "coaction-product": "∇(uv) = u(1)⟨0⟩v⟨0⟩ ⊗ u(1)⟨1⟩(u(2)▷v⟨1⟩)",
    "coaction-action": "u(2)⟨0⟩⊗(u(1)▷f)u(2)⟨1⟩ = u(1)⟨0⟩⊗u(1)⟨1⟩(u(2)▷f)",
    "comodule": "(∇⊗id)∇ = (id⊗Δ)∇,  (id⊗ε)∇ = id",
    "H-coassoc": "(Δ⊗id)Δ = (id⊗Δ)Δ on F▸◂U",
    "H-counit": "(ε⊗id)Δ = id = (id⊗ε)Δ on F▸◂U",
    "H-antipode": "m(S⊗id)Δ = ηε = m(id⊗S)Δ on F▸◂U",
    "H-multiplicative": "Δ(hk) = Δ(h)Δ(k),  ε(hk) = ε(h)ε(k)",
    "H-associative": "(hk)l = h(kl)",
    "sigma-group-like": "Δσ = σ⊗σ, ε(σ) = 1",
    "delta-sigma": "δ(σ) = 1",
    "twisted-antipode": "S_δ²(h) = σ h σ⁻¹",
}


class HopfPresentation:
    """Commutative Hopf algebra on named generators."""

    def __init__(self, names, invertible, epsilon, coproduct, antipode):
        self.names = list(names)
        self.n = len(self.names)
        self.invertible = list(invertible)
        self.eps = [Fraction(x) for x in epsilon]
        self.cop = [Vec(c) for c in coproduct]
        self.anti = [Vec(s) for s in antipode]
        self.zero_key = (0,) * self.n
        self._mcop = {}
        self._manti = {}
        self._gpow = {}

    @classmethod
    def trivial(cls):
        return cls([], [], [], [], [])

    def one(self):
        return Vec.unit(self.zero_key)

    def unit_key(self, i, power=1):
        e = [0] * self.n
        e[i] = power
        return tuple(e)

    def gen(self, i, power=1):
        return Vec.unit(self.unit_key(i, power))

    def validate(self, x):
        for e in x:
            for i, k in enumerate(e):
                if k < 0 and not self.invertible[i]:
                    raise ValueError(f"negative exponent on non-invertible generator {self.names[i]}")
        return x

    # algebra
    @staticmethod
    def mono_mul(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, x, y):
        out = Vec()
        for a, c in x.items():
            for b, d in y.items():
                out.add_term(self.mono_mul(a, b), c * d)
        return out

    def prod(self, xs):
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def inverse(self, x):
        if len(x) != 1:
            raise ValueError("only monomials are invertible")
        (e, c), = x.items()
        return self.validate(Vec.unit(tuple(-k for k in e), 1 / c))

    def power(self, x, k):
        if k < 0:
            return self.power(self.inverse(x), -k)
        out = self.one()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def tmul(self, s, t):
        """Product in F^{⊗n} (keys are tuples of monomials)."""
        out = Vec()
        for a, c in s.items():
            for b, d in t.items():
                out.add_term(tuple(self.mono_mul(x, y) for x, y in zip(a, b)), c * d)
        return out

    def tpower(self, t, k, legs=2):
        if k < 0:
            if len(t) != 1:
                raise ValueError("only group-like coproducts are invertible")
            (key, c), = t.items()
            t = Vec.unit(tuple(tuple(-x for x in m) for m in key), 1 / c)
            k = -k
        out = Vec.unit((self.zero_key,) * legs)
        for _ in range(k):
            out = self.tmul(out, t)
        return out

    # coalgebra
    def mono_coproduct(self, e):
        hit = self._mcop.get(e)
        if hit is None:
            hit = Vec.unit((self.zero_key, self.zero_key))
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    p = self._gpow.get(key)
                    if p is None:
                        p = self.tpower(self.cop[i], k)
                        self._gpow[key] = p
                    hit = self.tmul(hit, p)
            self._mcop[e] = hit
        return hit

    def coproduct(self, x):
        return x.linear(self.mono_coproduct)

    def mono_counit(self, e):
        out = Fraction(1)
        for i, k in enumerate(e):
            if k:
                out *= self.eps[i] ** k
        return out

    def counit(self, x):
        return sum((c * self.mono_counit(e) for e, c in x.items()), Fraction(0))

    def mono_antipode(self, e):
        hit = self._manti.get(e)
        if hit is None:
            hit = self.prod(self.power(self.anti[i], k) for i, k in enumerate(e) if k)
            self._manti[e] = hit
        return hit

    def antipode(self, x):
        return x.linear(self.mono_antipode)

    def basis_upto(self, degree):
        """Monomials with Σ|e_i| ≤ degree (negative powers on invertible generators)."""
        out = [self.zero_key]
        frontier = [self.zero_key]
        seen = {self.zero_key}
        for _ in range(degree):
            nxt = []
            for e in frontier:
                for i in range(self.n):
                    steps = (1, -1) if self.invertible[i] else (1,)
                    for s in steps:
                        f = list(e)
                        if f[i] * s < 0:
                            continue
                        f[i] += s
                        f = tuple(f)
                        if f not in seen:
                            seen.add(f)
                            nxt.append(f)
            out.extend(sorted(nxt, key=lambda f: (sum(map(abs, f)), f)))
            frontier = nxt
        return out

    def random_element(self, rng, degree, terms=3):
        basis = self.basis_upto(degree)
        out = Vec()
        for _ in range(terms):
            out.add_term(rng.choice(basis), Fraction(rng.randint(-3, 3)))
        return out


def check_hopf_axioms_F(F, degree=3):
    rep = Report("hopf-F")
    for i in range(F.n):
        if F.invertible[i]:
            rep.expect(
                "hopfF.group-like", REF["group-like"], F.names[i],
                F.cop[i], Vec.unit((F.unit_key(i), F.unit_key(i))),
            )
    for e in F.basis_upto(degree):
        x = Vec.unit(e)
        d = F.mono_coproduct(e)
        left = Vec()
        right = Vec()
        for (a, b), c in d.items():
            for (a1, a2), c1 in F.mono_coproduct(a).items():
                left.add_term((a1, a2, b), c * c1)
            for (b1, b2), c2 in F.mono_coproduct(b).items():
                right.add_term((a, b1, b2), c * c2)
        rep.expect("hopfF.coassociativity", REF["coassoc"], e, left, right)
        l1, l2 = Vec(), Vec()
        for (a, b), c in d.items():
            l1.add_term(b, c * F.mono_counit(a))
            l2.add_term(a, c * F.mono_counit(b))
        rep.expect("hopfF.counit", REF["counit"], (e, "left"), l1, x)
        rep.expect("hopfF.counit", REF["counit"], (e, "right"), l2, x)
        s1, s2 = Vec(), Vec()
        for (a, b), c in d.items():
            s1.iadd(F.mul(F.mono_antipode(a), Vec.unit(b)), c)
            s2.iadd(F.mul(Vec.unit(a), F.mono_antipode(b)), c)
        eps = F.one() * F.mono_counit(e)
        rep.expect("hopfF.antipode", REF["antipode"], (e, "left"), s1, eps)
        rep.expect("hopfF.antipode", REF["antipode"], (e, "right"), s2, eps)
    return rep


class LieHopf:
    """g-Hopf algebra data: ``action[i][k]`` is X_i ▷ (generator k) and
    ``coef[i][j]`` is f_i^j, so that ∇X_i = Σ_j X_j ⊗ f_i^j."""

    def __init__(self, g1, F, action, coef):
        self.g = g1
        self.F = F
        self.U = Enveloping(g1)
        self.m = g1.dim
        self.action = [[Vec(a) for a in row] for row in action]
        self.coef = [[Vec(c) for c in row] for row in coef]
        self._actg = {}
        self._act = {}
        self._coact = {}

    # U(g) acting on F
    def act_gen_mono(self, i, e):
        key = (i, e)
        hit = self._actg.get(key)
        if hit is not None:
            return hit
        F = self.F
        hit = Vec()
        for k, p in enumerate(e):
            if not p:
                continue
            # d(g^p) = p g^{p-1} dg
            lower = list(e)
            lower[k] -= 1
            hit.iadd(F.mul(Vec.unit(tuple(lower)), self.action[i][k]), p)
        self._actg[key] = hit
        return hit

    def act_gen(self, i, x):
        return x.linear(lambda e: self.act_gen_mono(i, e))

    def act_mono(self, u, e):
        key = (u, e)
        hit = self._act.get(key)
        if hit is None:
            hit = Vec.unit(e)
            for k in reversed(self.U.word(u)):
                hit = self.act_gen(k, hit)
            self._act[key] = hit
        return hit

    def act(self, u, x):
        out = Vec()
        for a, c in u.items():
            for e, d in x.items():
                out.iadd(self.act_mono(a, e), c * d)
        return out

    # F coacting on U(g)
    def coaction_gen(self, i):
        return Vec.from_terms(
            ((self.U.unit_key(j), e), c) for j in range(self.m) for e, c in self.coef[i][j].items()
        )

    def _coaction_prepend(self, k, rest):
        """∇(X_k v) from ∇v by the product rule for a primitive left factor."""
        U, F = self.U, self.F
        out = Vec()
        ck = self.coaction_gen(k)
        for (v0, v1), c in rest.items():
            for (x0, x1), d in ck.items():
                for w, a in U.mono_mul(x0, v0).items():
                    out.add_term((w, F.mono_mul(x1, v1)), c * d * a)
            for e, a in self.act_gen_mono(k, v1).items():
                out.add_term((v0, e), c * a)
        return out

    def coaction_mono(self, u):
        hit = self._coact.get(u)
        if hit is not None:
            return hit
        if not any(u):
            hit = Vec.unit((u, self.F.zero_key))
        else:
            k = next(i for i, x in enumerate(u) if x)
            rest = list(u)
            rest[k] -= 1
            hit = self._coaction_prepend(k, self.coaction_mono(tuple(rest)))
        self._coact[u] = hit
        return hit

    def coaction(self, u):
        return u.linear(self.coaction_mono)

    def coaction_word(self, word):
        """∇ of the (unordered) product X_{w0} X_{w1} … by the product rule."""
        out = Vec.unit((self.U.zero_key, self.F.zero_key))
        for k in reversed(word):
            out = self._coaction_prepend(k, out)
        return out

    def bullet(self, i, t):
        """X_i • on F⊗F."""
        out = Vec()
        ck = self.coaction_gen(i)
        for (a, b), c in t.items():
            for (x0, x1), d in ck.items():
                for e, w in self.act_mono(x0, a).items():
                    out.add_term((e, self.F.mono_mul(x1, b)), c * d * w)
            for e, w in self.act_gen_mono(i, b).items():
                out.add_term((a, e), c * w)
        return out

    def second_order(self, k, j, i):
        """f^k_{j,i} = X_i ▷ f^k_j."""
        return self.act_gen(i, self.coef[j][k])

    def delta_U(self, u):
        d = adjoint_trace_character(self.g)
        out = Fraction(0)
        for e, c in u.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t *= d[i] ** k
            out += t
        return out


def check_lie_hopf(lh, degree=3):
    rep = Report("liehopf")
    F, g = lh.F, lh.g
    basis = F.basis_upto(degree)
    for i in range(lh.m):
        for e in basis:
            x = Vec.unit(e)
            for e2 in basis:
                if sum(map(abs, e)) + sum(map(abs, e2)) > degree:
                    continue
                y = Vec.unit(e2)
                lhs = lh.act_gen(i, F.mul(x, y))
                rhs = F.mul(lh.act_gen(i, x), y) + F.mul(x, lh.act_gen(i, y))
                rep.expect("liehopf.derivation", REF["derivation"], (g.names[i], e, e2), lhs, rhs)
            rep.expect("liehopf.counit-vanish", REF["counit-vanish"], (g.names[i], e), F.counit(lh.act_gen(i, x)), 0)
            lhs = F.coproduct(lh.act_gen(i, x))
            rhs = lh.bullet(i, F.coproduct(x))
            rep.expect("liehopf.delta-equivariance", REF["delta-equivariance"], (g.names[i], e), lhs, rhs)
            for j in range(lh.m):
                lhs = Vec()
                for k, c in g.bracket_basis(i, j).items():
                    lhs.iadd(lh.act_gen(k, x), c)
                rhs = lh.act_gen(i, lh.act_gen(j, x)) - lh.act_gen(j, lh.act_gen(i, x))
                rep.expect("liehopf.action-bracket", REF["action-bracket"], (g.names[i], g.names[j], e), lhs, rhs)
    m = lh.m
    for i in range(m):
        for j in range(m):
            for k in range(m):
                lhs = lh.second_order(k, j, i) - lh.second_order(k, i, j)
                rhs = Vec()
                for s in range(m):
                    for r in range(m):
                        c = g.C(k, s, r)
                        if c:
                            rhs.iadd(F.mul(lh.coef[i][r], lh.coef[j][s]), c)
                for l in range(m):
                    c = g.C(l, i, j)
                    if c:
                        rhs.iadd(lh.coef[l][k], c)
                rep.expect(
                    "liehopf.structure-identity", REF["structure-identity"],
                    (g.names[i], g.names[j], g.names[k]), lhs, rhs,
                )
    for i in range(m):
        for j in range(m):
            lhs = F.coproduct(lh.coef[i][j])
            rhs = Vec()
            for k in range(m):
                for a, c in lh.coef[k][j].items():
                    for b, d in lh.coef[i][k].items():
                        rhs.add_term((a, b), c * d)
            rep.expect("liehopf.coefficient-coproduct", REF["coefficient-coproduct"], (i, j), lhs, rhs)
    for i in range(m):
        for j in range(m):
            lhs = lh.coaction_word((i, j)) - lh.coaction_word((j, i))
            rhs = lh.coaction(g.bracket_basis(i, j).map_keys(lh.U.unit_key))
            rep.expect("liehopf.coaction-commutator", REF["coaction-commutator"], (g.names[i], g.names[j]), lhs, rhs)
    return rep


class Bicrossed:
    """The Hopf algebra F ▸◂ U(g) built from a Lie-Hopf datum."""

    def __init__(self, lh):
        self.lh = lh
        self.F = lh.F
        self.U = lh.U
        self._mul = {}
        self._cop = {}
        self._anti = {}

    def one(self):
        return Vec.unit((self.F.zero_key, self.U.zero_key))

    def from_F(self, f):
        return f.map_keys(lambda e: (e, self.U.zero_key))

    def from_U(self, u):
        return u.map_keys(lambda e: (self.F.zero_key, e))

    def pair(self, f, u):
        out = Vec()
        for a, c in f.items():
            for b, d in u.items():
                out.add_term((a, b), c * d)
        return out

    # algebra
    def _mul_core(self, u, g, v):
        key = (u, g, v)
        hit = self._mul.get(key)
        if hit is None:
            hit = Vec()
            for (u1, u2), c in self.U.mono_coproduct(u).items():
                left = self.lh.act_mono(u1, g)
                right = self.U.mono_mul(u2, v)
                for a, x in left.items():
                    for b, y in right.items():
                        hit.add_term((a, b), c * x * y)
            self._mul[key] = hit
        return hit

    def mul(self, x, y):
        out = Vec()
        F = self.F
        for (f, u), c in x.items():
            for (g, v), d in y.items():
                for (a, b), w in self._mul_core(u, g, v).items():
                    out.add_term((F.mono_mul(f, a), b), c * d * w)
        return out

    def prod(self, xs):
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    # coalgebra
    def basis_coproduct(self, key):
        hit = self._cop.get(key)
        if hit is None:
            f, u = key
            F = self.F
            hit = Vec()
            for (f1, f2), a in F.mono_coproduct(f).items():
                for (u1, u2), b in self.U.mono_coproduct(u).items():
                    for (w, g), c in self.lh.coaction_mono(u1).items():
                        hit.add_term(((f1, w), (F.mono_mul(f2, g), u2)), a * b * c)
            self._cop[key] = hit
        return hit

    def coproduct(self, x):
        return x.linear(self.basis_coproduct)

    def iterated_coproduct(self, x, legs):
        """Δ^{(legs)}, splitting the last leg repeatedly."""
        if legs == 1:
            return x.map_keys(lambda k: (k,))
        out = self.coproduct(x)
        for _ in range(legs - 2):
            nxt = Vec()
            for key, c in out.items():
                for (a, b), d in self.basis_coproduct(key[-1]).items():
                    nxt.add_term(key[:-1] + (a, b), c * d)
            out = nxt
        return out

    def counit(self, x):
        return sum(
            (c * self.F.mono_counit(f) * (1 if not any(u) else 0) for (f, u), c in x.items()),
            Fraction(0),
        )

    def basis_antipode(self, key):
        hit = self._anti.get(key)
        if hit is None:
            f, u = key
            F, U = self.F, self.U
            hit = Vec()
            for (u0, g), c in self.lh.coaction_mono(u).items():
                left = self.from_U(U.mono_antipode(u0))
                right = self.from_F(F.mono_antipode(F.mono_mul(f, g)))
                hit.iadd(self.mul(left, right), c)
            self._anti[key] = hit
        return hit

    def antipode(self, x):
        return x.linear(self.basis_antipode)

    def basis_upto(self, degree):
        out = []
        for f in self.F.basis_upto(degree):
            for u in self.U.basis_upto(degree - sum(map(abs, f))):
                out.append((f, u))
        return out

    def random_element(self, rng, degree, terms=3):
        basis = self.basis_upto(degree)
        out = Vec()
        for _ in range(terms):
            out.add_term(rng.choice(basis), Fraction(rng.randint(-3, 3)))
        return out

    # modular pair
    def delta(self, x):
        return sum(
            (c * self.F.mono_counit(f) * self.lh.delta_U(Vec.unit(u)) for (f, u), c in x.items()),
            Fraction(0),
        )

    def twisted_antipode(self, x):
        """S_δ(h) = δ(h(1)) S(h(2))."""
        out = Vec()
        for (a, b), c in self.coproduct(x).items():
            d = self.delta(Vec.unit(a))
            if d:
                out.iadd(self.basis_antipode(b), c * d)
        return out


def determinant(F, mat):
    """Leibniz expansion of a square matrix of F-elements."""
    n = len(mat)
    out = Vec()
    for perm in permutations(range(n)):
        sg, _ = sort_sign(perm)
        out.iadd(F.prod(mat[i][perm[i]] for i in range(n)), sg)
    return out


def canonical_mpi(lh):
    """(δ on the g-basis, σ = det[f_i^j])."""
    return adjoint_trace_character(lh.g), determinant(lh.F, lh.coef)


def check_mpi(H, degree=3):
    rep = Report("mpi")
    F = H.F
    _, sigma = canonical_mpi(H.lh)
    rep.expect("mpi.sigma-group-like", REF["sigma-group-like"], "σ", F.coproduct(sigma), F.tmul(
        sigma.map_keys(lambda e: (e, F.zero_key)), sigma.map_keys(lambda e: (F.zero_key, e))))
    rep.expect("mpi.sigma-group-like", REF["sigma-group-like"], "ε(σ)", F.counit(sigma), 1)
    s = H.from_F(sigma)
    rep.expect("mpi.delta-sigma", REF["delta-sigma"], "σ▸◂1", H.delta(s), 1)
    try:
        s_inv = H.from_F(F.inverse(sigma))
    except ValueError:
        rep.expect("mpi.sigma-group-like", REF["sigma-group-like"], "σ invertible", sigma, "monomial")
        return rep
    gens = [H.from_F(F.gen(i)) for i in range(F.n)]
    gens += [H.from_F(F.gen(i, -1)) for i in range(F.n) if F.invertible[i]]
    gens += [H.from_U(H.U.gen(i)) for i in range(H.U.n)]
    # products of generators up to the degree bound
    frontier = [((), H.one())]
    seen = []
    for _ in range(degree):
        nxt = []
        for word, h in frontier:
            for k, gk in enumerate(gens):
                nxt.append((word + (k,), H.mul(h, gk)))
        seen.extend(nxt)
        frontier = nxt
    for word, h in seen:
        lhs = H.twisted_antipode(H.twisted_antipode(h))
        rhs = H.mul(H.mul(s, h), s_inv)
        rep.expect("mpi.twisted-antipode-square", REF["twisted-antipode"], word, lhs, rhs)
    return rep


def check_matched_pair_hopf(H, degree=3, samples=20, seed=0):
    """Matched-pair axioms between U(g) and F, then Hopf axioms of F ▸◂ U."""
    rep = Report("bicrossed")
    lh, F, U = H.lh, H.F, H.U
    rng = random.Random(seed)
    ubasis = U.basis_upto(degree)
    fbasis = F.basis_upto(degree)
    us = [Vec.unit(u) for u in ubasis] + [U.random_element(rng, degree) for _ in range(samples)]
    fs = [Vec.unit(f) for f in fbasis] + [F.random_element(rng, degree) for _ in range(samples)]

    def Fpair(x, y):
        return Vec.from_terms(((a, b), c * d) for a, c in x.items() for b, d in y.items())

    for n, u in enumerate(us):
        w = ("u", n if n >= len(ubasis) else ubasis[n])
        nab = lh.coaction(u)
        du = U.coproduct(u)
        # coaction-coalgebra
        lhs = Vec()
        for (u0, g), c in nab.items():
            for (a, b), d in U.mono_coproduct(u0).items():
                lhs.add_term((a, b, g), c * d)
        rhs = Vec()
        for (u1, u2), c in du.items():
            for (a, g1), d in lh.coaction_mono(u1).items():
                for (b, g2), e in lh.coaction_mono(u2).items():
                    rhs.add_term((a, b, F.mono_mul(g1, g2)), c * d * e)
        rep.expect("bicrossed.coaction-coalgebra", REF["coaction-coalgebra"], w, lhs, rhs)
        lhs = Vec()
        for (u0, g), c in nab.items():
            if not any(u0):
                lhs.add_term(g, c)
        rep.expect("bicrossed.coaction-counit", REF["coaction-counit"], w, lhs, F.one() * U.counit(u))
        rep.expect("bicrossed.action-unit", REF["action-unit"], w, lh.act(u, F.one()), F.one() * U.counit(u))
        # comodule law of ∇ on U
        lhs, rhs = Vec(), Vec()
        for (u0, g), c in nab.items():
            for (a, b), d in lh.coaction_mono(u0).items():
                lhs.add_term((a, b, g), c * d)
            for (a, b), d in F.mono_coproduct(g).items():
                rhs.add_term((u0, a, b), c * d)
        rep.expect("bicrossed.comodule", REF["comodule"], w, lhs, rhs)
        for m, f in enumerate(fs):
            if n >= len(ubasis) and m >= len(fbasis) and (n + m) % 3:
                continue  # thin out random-by-random pairs
            wf = w + ("f", m if m >= len(fbasis) else fbasis[m])
            uf = lh.act(u, f)
            rep.expect("bicrossed.action-counit", REF["action-counit"], wf, F.counit(uf), U.counit(u) * F.counit(f))
            # action-coproduct
            lhs = F.coproduct(uf)
            rhs = Vec()
            df = F.coproduct(f)
            for (u1, u2), c in du.items():
                for (u0, g), d in lh.coaction_mono(u1).items():
                    for (f1, f2), e in df.items():
                        a = lh.act_mono(u0, f1)
                        b = F.mul(Vec.unit(g), lh.act_mono(u2, f2))
                        rhs.iadd(Fpair(a, b), c * d * e)
            rep.expect("bicrossed.action-coproduct", REF["action-coproduct"], wf, lhs, rhs)
            # coaction-action
            lhs, rhs = Vec(), Vec()
            for (u1, u2), c in du.items():
                left = lh.act(Vec.unit(u1), f)
                for (w0, g), d in lh.coaction_mono(u2).items():
                    for e, x in F.mul(left, Vec.unit(g)).items():
                        lhs.add_term((w0, e), c * d * x)
                right = lh.act(Vec.unit(u2), f)
                for (w0, g), d in lh.coaction_mono(u1).items():
                    for e, x in F.mul(Vec.unit(g), right).items():
                        rhs.add_term((w0, e), c * d * x)
            rep.expect("bicrossed.coaction-action", REF["coaction-action"], wf, lhs, rhs)
        for a in fbasis:
            for b in fbasis:
                if sum(map(abs, a)) + sum(map(abs, b)) > degree:
                    continue
                lhs = lh.act(u, Vec.unit(F.mono_mul(a, b)))
                rhs = Vec()
                for (u1, u2), c in du.items():
                    rhs.iadd(F.mul(lh.act_mono(u1, a), lh.act_mono(u2, b)), c)
                rep.expect("bicrossed.action-multiplicative", REF["action-multiplicative"], w + (a, b), lhs, rhs)
    rep.expect("bicrossed.coaction-unit", REF["coaction-unit"], "1", lh.coaction(U.one()), Vec.unit((U.zero_key, F.zero_key)))
    # coaction-product on pairs of monomials
    for a in ubasis:
        for b in ubasis:
            if sum(a) + sum(b) > degree:
                continue
            lhs = lh.coaction(U.mono_mul(a, b))
            rhs = Vec()
            for (a1, a2), c in U.mono_coproduct(a).items():
                for (x0, x1), d in lh.coaction_mono(a1).items():
                    for (y0, y1), e in lh.coaction_mono(b).items():
                        prod_u = U.mono_mul(x0, y0)
                        prod_f = F.mul(Vec.unit(x1), lh.act_mono(a2, y1))
                        for p, s in prod_u.items():
                            for q, t in prod_f.items():
                                rhs.add_term((p, q), c * d * e * s * t)
            rep.expect("bicrossed.coaction-product", REF["coaction-product"], (a, b), lhs, rhs)
    rep.extend(check_hopf_H(H, degree, samples, seed))
    return rep


def check_hopf_H(H, degree=3, samples=20, seed=0):
    rep = Report("bicrossed")
    rng = random.Random(seed + 1)
    hb = H.basis_upto(degree)
    hs = [Vec.unit(k) for k in hb] + [H.random_element(rng, degree) for _ in range(samples)]
    for n, h in enumerate(hs):
        w = hb[n] if n < len(hb) else ("sample", n - len(hb))
        d = H.coproduct(h)
        lhs, rhs = Vec(), Vec()
        for (a, b), c in d.items():
            for (a1, a2), e in H.basis_coproduct(a).items():
                lhs.add_term((a1, a2, b), c * e)
            for (b1, b2), e in H.basis_coproduct(b).items():
                rhs.add_term((a, b1, b2), c * e)
        rep.expect("bicrossed.H-coassociativity", REF["H-coassoc"], w, lhs, rhs)
        l1, l2 = Vec(), Vec()
        for (a, b), c in d.items():
            l1.add_term(b, c * H.counit(Vec.unit(a)))
            l2.add_term(a, c * H.counit(Vec.unit(b)))
        rep.expect("bicrossed.H-counit", REF["H-counit"], (w, "left"), l1, h)
        rep.expect("bicrossed.H-counit", REF["H-counit"], (w, "right"), l2, h)
        s1, s2 = Vec(), Vec()
        for (a, b), c in d.items():
            s1.iadd(H.mul(H.basis_antipode(a), Vec.unit(b)), c)
            s2.iadd(H.mul(Vec.unit(a), H.basis_antipode(b)), c)
        eps = H.one() * H.counit(h)
        rep.expect("bicrossed.H-antipode", REF["H-antipode"], (w, "left"), s1, eps)
        rep.expect("bicrossed.H-antipode", REF["H-antipode"], (w, "right"), s2, eps)
    small = [k for k in hb if sum(map(abs, k[0])) + sum(k[1]) <= max(1, degree - 1)]
    for a in small:
        for b in small:
            x, y = Vec.unit(a), Vec.unit(b)
            xy = H.mul(x, y)
            lhs = H.coproduct(xy)
            rhs = Vec()
            for (x1, x2), c in H.basis_coproduct(a).items():
                for (y1, y2), d in H.basis_coproduct(b).items():
                    p = H.mul(Vec.unit(x1), Vec.unit(y1))
                    q = H.mul(Vec.unit(x2), Vec.unit(y2))
                    for k1, s in p.items():
                        for k2, t in q.items():
                            rhs.add_term((k1, k2), c * d * s * t)
            rep.expect("bicrossed.H-multiplicative", REF["H-multiplicative"], (a, b), lhs, rhs)
            rep.expect(
                "bicrossed.H-multiplicative", REF["H-multiplicative"], (a, b, "ε"),
                H.counit(xy), H.counit(x) * H.counit(y),
            )
    for _ in range(max(1, samples // 5)):
        x, y, z = (H.random_element(rng, 2) for _ in range(3))
        rep.expect("bicrossed.H-associativity", REF["H-associative"], "sample",
                   H.mul(H.mul(x, y), z), H.mul(x, H.mul(y, z)))
    return rep
