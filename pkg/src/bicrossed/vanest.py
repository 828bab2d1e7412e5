"""The F–U(g2) pairing, θ maps, the ∗-action, the relative bicomplex
(M⊗∧^p g1*⊗∧^q l*)^h with ↑∂ and →∂, the isomorphism ♮ and the van Est map 𝒱.

Relative cells are Vecs keyed ``(a, I, J)``: module index, increasing g1
indices, increasing g2 indices outside h.  Cochains on the double crossed sum
use ``liealg`` keys ``(a, K)`` with g1 first and g2 shifted by ``dim g1``.
"""

import random
from itertools import combinations, permutations, product

from .cyclichom import bullet
from .exactlin import Fraction, SparseMatrix, Vec, membership, rank_kernel, row_space
from .liealg import (
    CohomologyResult,
    LieModule,
    ce_cohomology,
    ce_coboundary,
    cohomology_dims,
    contract,
    sort_sign,
)
from .matched import act_left, act_right, matrix_coefficient_eval, mutual_actions
from .reduced import _RightTensor
from .report import Report

REF = {
    "unit": "⟨1, v⟩ = ε(v),  ⟨f, 1⟩ = ε(f)",
    "coproduct": "⟨f, v v'⟩ = ⟨f(1), v⟩⟨f(2), v'⟩",
    "antipode": "⟨S(f), v⟩ = ⟨f, S(v)⟩",
    "balanced": "⟨u▷f, v⟩ = ⟨f, v◁u⟩",
    "coaction-compatibility": "u⟨0⟩⟨v, u⟨1⟩⟩ = v▷u",
    "star-unit": "ṽ∗1 = ṽ",
    "star-action": "(ṽ∗u)∗u' = ṽ∗(uu')",
    "theta-linear": "θ(u•c)(ṽ) = θ(c)(ṽ∗u)",
    "theta-hochschild": "θ∘b*_F = b_{U(g2)}∘θ",
    "up-square": "↑∂² = 0",
    "right-square": "→∂² = 0",
    "anticommute": "↑∂→∂ = →∂↑∂",
    "natural-inverse": "♮⁻¹♮ = Id,  ♮♮⁻¹ = Id",
    "natural-chain": "♮∘∂_a = (↑∂ − (−1)^p →∂)∘♮",
    "invariance": "𝒱(c) ∈ (M⊗∧g1*⊗∧l*)^h",
    "degenerate": "𝒱(…⊗1⊗…) = 0",
    "vanest-right": "𝒱∘b*_F = →∂∘𝒱",
    "vanest-up": "𝒱∘∂_{g*} = ↑∂∘𝒱",
    "cohomology-routes": "H(Tot (M⊗∧g1*⊗∧l*)^h) = H(a, h, M)",
}


class Pairing:
    """⟨f, v⟩ for f ∈ F and v ∈ U(g2), extended from generator values.

    Generator values come from matrix coefficients f_i^j(v) whenever the
    generator occurs among the entries of the coaction matrix.  ``overrides``
    maps a generator name to ``{"coefficient": [i, j], "scale": c}`` or
    ``{"character": [c_0, …]}`` (a group-like generator; c_b = ⟨g, ζ_b⟩).
    """

    def __init__(self, mp, lh, overrides=None):
        self.mp, self.lh = mp, lh
        self.F, self.U2 = lh.F, mp.U2
        self.base = []
        overrides = overrides or {}
        for k, name in enumerate(self.F.names):
            rule = overrides.get(name)
            if rule is None:
                rule = self._find_coefficient(k)
            if "character" in rule:
                vals = [Fraction(x) for x in rule["character"]]
                if len(vals) != self.U2.n:
                    raise ValueError(f"character for {name} needs {self.U2.n} values")
                self.base.append(("character", vals))
            else:
                i, j = rule["coefficient"]
                self.base.append(("coefficient", (i, j, Fraction(rule.get("scale", 1)))))
        self._gen = {}
        self._inv = {}
        self._mono = {}

    def _find_coefficient(self, k):
        g = self.F.gen(k)
        for i, row in enumerate(self.lh.coef):
            for j, entry in enumerate(row):
                if entry == g:
                    return {"coefficient": [i, j]}
        raise ValueError(f"no pairing data for generator {self.F.names[k]}")

    def generator(self, k, v):
        key = (k, v)
        hit = self._gen.get(key)
        if hit is None:
            kind, data = self.base[k]
            if kind == "character":
                hit = Fraction(1)
                for b, e in enumerate(v):
                    hit *= data[b] ** e
            else:
                i, j, scale = data
                hit = scale * matrix_coefficient_eval(self.mp, i, j, Vec.unit(v))
            self._gen[key] = hit
        return hit

    def inverse_generator(self, k, v):
        """⟨g⁻¹, v⟩ from ε(v) = ⟨g, v(1)⟩⟨g⁻¹, v(2)⟩."""
        key = (k, v)
        hit = self._inv.get(key)
        if hit is None:
            lead = self.generator(k, self.U2.zero_key)
            if not lead:
                raise ValueError(f"generator {self.F.names[k]} pairs to zero with 1")
            acc = Fraction(1 if v == self.U2.zero_key else 0)
            for (v1, v2), c in self.U2.mono_coproduct(v).items():
                if v1 != self.U2.zero_key:
                    acc -= c * self.generator(k, v1) * self.inverse_generator(k, v2)
            hit = acc / lead
            self._inv[key] = hit
        return hit

    def eval_mono(self, f, v):
        key = (f, v)
        hit = self._mono.get(key)
        if hit is None:
            k = next((i for i, e in enumerate(f) if e), None)
            if k is None:
                hit = Fraction(1 if v == self.U2.zero_key else 0)
            else:
                step = 1 if f[k] > 0 else -1
                rest = list(f)
                rest[k] -= step
                rest = tuple(rest)
                one = self.generator if step > 0 else self.inverse_generator
                hit = Fraction(0)
                for (v1, v2), c in self.U2.mono_coproduct(v).items():
                    x = one(k, v1)
                    if x:
                        hit += c * x * self.eval_mono(rest, v2)
            self._mono[key] = hit
        return hit

    def eval(self, f, v):
        return sum((a * b * self.eval_mono(e, w) for e, a in f.items() for w, b in v.items()), Fraction(0))


def check_pairing(P, degree=3):
    rep = Report("pairing")
    F, U2, lh, mp = P.F, P.U2, P.lh, P.mp
    fs = F.basis_upto(degree)
    vs = U2.basis_upto(degree)
    for v in vs:
        rep.expect("pairing.unit", REF["unit"], ("1", v), P.eval_mono(F.zero_key, v), U2.counit(Vec.unit(v)))
    for f in fs:
        rep.expect("pairing.unit", REF["unit"], (f, "1"), P.eval_mono(f, U2.zero_key), F.mono_counit(f))
        cop = F.mono_coproduct(f)
        for v in vs:
            rep.expect(
                "pairing.antipode", REF["antipode"], (f, v),
                P.eval(F.mono_antipode(f), Vec.unit(v)), P.eval(Vec.unit(f), U2.mono_antipode(v)),
            )
            for w in vs:
                if U2.degree(v) + U2.degree(w) > degree:
                    continue
                lhs = P.eval(Vec.unit(f), U2.mono_mul(v, w))
                rhs = sum((c * P.eval_mono(x, v) * P.eval_mono(y, w) for (x, y), c in cop.items()), Fraction(0))
                rep.expect("pairing.coproduct", REF["coproduct"], (f, v, w), lhs, rhs)
    U1 = mp.U1
    for u in U1.basis_upto(degree):
        uv = Vec.unit(u)
        for v in vs:
            if U1.degree(u) + U2.degree(v) > degree:
                continue
            left, right = mutual_actions(mp, Vec.unit(v), uv)
            for f in fs:
                lhs = P.eval(lh.act(uv, Vec.unit(f)), Vec.unit(v))
                rep.expect("pairing.balanced", REF["balanced"], (u, f, v), lhs, P.eval(Vec.unit(f), right))
            co = Vec()
            for (x0, x1), c in lh.coaction_mono(u).items():
                co.add_term(x0, c * P.eval_mono(x1, v))
            rep.expect("pairing.coaction-compatibility", REF["coaction-compatibility"], (u, v), co, left)
    return rep


def theta_map(P, c, vs):
    """θ(c)(v¹⊗…⊗v^q) for c keyed ``(…, fs)`` with ``fs`` last; Vec over the rest."""
    out = Vec()
    for key, x in c.items():
        fs = key[-1]
        w = x
        for f, v in zip(fs, vs):
            w *= P.eval_mono(f, v)
            if not w:
                break
        if w:
            out.add_term(key[:-1] if len(key) > 2 else key[0], w)
    return out


def _tensor(vecs):
    out = Vec.unit(())
    for v in vecs:
        nxt = Vec()
        for t, c in out.items():
            for k, d in v.items():
                nxt.add_term(t + (k,), c * d)
        out = nxt
    return out


def star_action(mp, vt, u):
    """(v¹⊗…⊗v^q)∗u = v¹◁(v²(1)⋯v^q(1)▷u(1)) ⊗ … ⊗ v^q(q)◁u(q)."""
    U1, U2 = mp.U1, mp.U2
    out = Vec()
    for vs, x in vt.items():
        q = len(vs)
        for ukey, y in u.items():
            if q == 0:
                out.add_term((), x * y * U1.counit(Vec.unit(ukey)))
                continue
            splits = [U2.mono_coproduct(v, j + 1).items() if j else [((v,), Fraction(1))] for j, v in enumerate(vs)]
            for us, cu in U1.mono_coproduct(ukey, q).items():
                for pick in product(*splits):
                    coef = x * y * cu
                    for _, c in pick:
                        coef *= c
                    slots = []
                    for k in range(q):
                        w = U2.one()
                        for j in range(k + 1, q):
                            w = U2.mul(w, Vec.unit(pick[j][0][k]))
                        inner = act_left(mp, w, Vec.unit(us[k]))
                        slots.append(act_right(mp, Vec.unit(pick[k][0][k]), inner))
                    out.iadd(_tensor(slots), coef)
    return out


def check_levi(mp, h):
    h = sorted(h)
    g1, g2 = mp.g1, mp.g2
    if any(not 0 <= x < g2.dim for x in h):
        raise ValueError(f"h index out of range for g₂ of dimension {g2.dim}")
    if not g2.is_subalgebra(h):
        raise ValueError("h not a subalgebra of g₂")
    hs = set(h)
    for x in h:
        z = Vec.unit(x)
        for i in range(g1.dim):
            if any(b not in hs for b in mp.tle(z, Vec.unit(i))):
                raise ValueError("h not g₁-invariant")
        for i in range(g1.dim):
            for j in range(g1.dim):
                X, Y = Vec.unit(i), Vec.unit(j)
                lhs = mp.tri(z, g1.bracket(X, Y))
                rhs = g1.bracket(mp.tri(z, X), Y) + g1.bracket(X, mp.tri(z, Y))
                if lhs != rhs:
                    raise ValueError("h does not act by derivations on g₁")
    return h


def _eval_wedge(idx, args):
    """θ^idx evaluated on basis vectors ``args`` (both index tuples)."""
    if len(idx) != len(args):
        return 0
    sg, key = sort_sign(args)
    return sg if key == idx else 0


def _split_up(c):
    return Vec({((a, J), I): x for (a, I, J), x in c.items()})


def _join_up(c):
    return Vec({(a, I, J): x for ((a, J), I), x in c.items()})


def _split_right(c):
    return Vec({((a, I), J): x for (a, I, J), x in c.items()})


def _join_right(c):
    return Vec({(a, I, J): x for ((a, I), J), x in c.items()})


def bidegree(key):
    return len(key[1]), len(key[2])


class RelativeBicomplex:
    """(M⊗∧^p g1*⊗∧^q l*)^h, l = g2/h, for an a-module M given by its g1 and g2 actions."""

    def __init__(self, mp, M, h=()):
        if M.g2 is None:
            raise ValueError(f"module {M.name} has no g₂ action")
        self.mp, self.M = mp, M
        self.h = check_levi(mp, h)
        self.g1, self.g2, self.a = mp.g1, mp.g2, mp.a
        self.n1 = mp.g1.dim
        self.comp = [b for b in range(mp.g2.dim) if b not in set(self.h)]
        self.a_module = LieModule(M.dim, M.g1.action + M.g2.action, "left", M.names)
        self.up_module = _RightTensor(self._up_action)
        self.right_module = _RightTensor(self._right_action)
        self._cells = {}

    def _up_action(self, i, key):
        """(m⊗ν)◀X = −X·m⊗ν − m⊗X·ν,  (X·ν)(ζ) = ν(ζ◁X)."""
        a, J = key
        out = Vec()
        for b, x in self.M.g1.act(i, Vec.unit(a)).items():
            out.add_term((b, J), -x)
        for r, j in enumerate(J):
            for b in self.comp:
                c = self.mp.Q.get((b, i), Vec()).get(j)
                if c:
                    sg, K = sort_sign(J[:r] + (b,) + J[r + 1:])
                    if sg:
                        out.add_term((a, K), -sg * c)
        return out

    def _right_action(self, b, key):
        """(m⊗μ)◀ζ = −ζ·m⊗μ − m⊗ζ·μ,  (ζ·μ)(X) = −μ(ζ▷X)."""
        a, I = key
        out = Vec()
        for a2, x in self.M.g2.act(b, Vec.unit(a)).items():
            out.add_term((a2, I), -x)
        for r, i in enumerate(I):
            for k in range(self.n1):
                c = self.mp.P.get((b, k), Vec()).get(i)
                if c:
                    sg, K = sort_sign(I[:r] + (k,) + I[r + 1:])
                    if sg:
                        out.add_term((a, K), sg * c)
        return out

    def right_act_U(self, w, v):
        """Right U(g2)-action on M⊗∧g1* (keys ``(a, I)``) by a PBW monomial."""
        for k in self.mp.U2.word(v):
            w = self.right_module.act(k, w)
        return w

    def up(self, c):
        return _join_up(ce_coboundary(self.g1, self.up_module, _split_up(c)))

    def right(self, c):
        # left-module sign convention, the one b*_F carries through θ
        return -_join_right(ce_coboundary(self.g2, self.right_module, _split_right(c)))

    def total(self, c):
        """↑∂ − (−1)^p →∂, the differential ♮ transports from ∂_a."""
        out = self.up(c)
        for key, x in c.items():
            out.iadd(self.right(Vec.unit(key, x)), -((-1) ** len(key[1])))
        return out

    # ♮
    def natural(self, omega):
        """♮(ω)(Z¹…Z^p | ζ¹…ζ^q) = ω(Z¹,…,Z^p, ζ¹,…,ζ^q)."""
        n1 = self.n1
        out = Vec()
        for (a, K), x in omega.items():
            I = tuple(k for k in K if k < n1)
            J = tuple(k - n1 for k in K if k >= n1)
            out.add_term((a, I, J), x * _eval_wedge(K, I + tuple(n1 + j for j in J)))
        return out

    def natural_inv(self, c):
        """Shuffle sum Σ_{σ∈Sh(p,q)} (−1)^σ μ(args_σ(1..p)) ν(args_σ(p+1..))."""
        n1 = self.n1
        out = Vec()
        for (a, I, J), x in c.items():
            p = len(I)
            args = tuple(sorted(I + tuple(n1 + j for j in J)))
            total = 0
            for pos in combinations(range(len(args)), p):
                rest = tuple(r for r in range(len(args)) if r not in pos)
                sg, _ = sort_sign(pos + rest)
                mu = _eval_wedge(I, tuple(args[r] for r in pos))
                nu = _eval_wedge(tuple(n1 + j for j in J), tuple(args[r] for r in rest))
                total += sg * mu * nu
            out.add_term((a, args), x * total)
        return out

    def a_coboundary(self, omega):
        return ce_coboundary(self.a, self.a_module.as_right(), omega)

    def lie_derivative(self, x, c):
        """L_ζ on a cell, ζ ∈ h (cells are basic, so L_ζ = ι_ζ∂)."""
        return self.natural(contract(self.n1 + x, self.a_coboundary(self.natural_inv(c))))

    # cells
    def ambient(self, p, q):
        return [
            (a, I, J)
            for I in combinations(range(self.n1), p)
            for J in combinations(self.comp, q)
            for a in range(self.M.dim)
        ]

    def _cell_data(self, p, q):
        hit = self._cells.get((p, q))
        if hit is None:
            amb = self.ambient(p, q)
            ix = {k: n for n, k in enumerate(amb)}
            if not self.h:
                inv = row_space([{n: Fraction(1)} for n in range(len(amb))], len(amb))
                moved = row_space([], len(amb))
            else:
                cols = []
                for key in amb:
                    col = {}
                    for r, x in enumerate(self.h):
                        for k2, c in self.lie_derivative(x, Vec.unit(key)).items():
                            col[r * len(amb) + ix[k2]] = c
                    cols.append(col)
                _, inv = rank_kernel(SparseMatrix.from_columns(len(self.h) * len(amb), cols))
                images = []
                for x in self.h:
                    for key in amb:
                        d = self.lie_derivative(x, Vec.unit(key))
                        if d:
                            images.append({ix[k]: c for k, c in d.items()})
                moved = row_space(images, len(amb))
                if inv.dim + moved.dim != len(amb):
                    raise ValueError("h does not act semisimply on the cochains")
            hit = (amb, ix, inv, moved)
            self._cells[(p, q)] = hit
        return hit

    def cell_basis(self, p, q):
        amb, _, inv, _ = self._cell_data(p, q)
        return [Vec({amb[n]: c for n, c in v.items()}) for v in inv.vectors]

    def project(self, c):
        """Projection onto h-invariants along Σ_ζ im L_ζ."""
        if not self.h:
            return c
        out = Vec()
        pieces = {}
        for key, x in c.items():
            pieces.setdefault(bidegree(key), Vec()).add_term(key, x)
        for (p, q), piece in pieces.items():
            amb, ix, inv, moved = self._cell_data(p, q)
            sol = _solve(list(inv.vectors) + list(moved.vectors), {ix[k]: x for k, x in piece.items()}, len(amb))
            for n, v in enumerate(inv.vectors):
                if sol[n]:
                    out.iadd(Vec({amb[k]: y for k, y in v.items()}), sol[n])
        return out

    def is_invariant(self, c):
        return all(not self.lie_derivative(x, c) for x in self.h)

    def total_cohomology(self, max_degree=None):
        return self.cohomology(max_degree).dims

    def cohomology(self, max_degree=None):
        """Dimensions and representative cocycles of the total complex."""
        top = self.n1 + len(self.comp)
        if max_degree is not None:
            top = min(top, max_degree + 1)
        bases, keys = [], []
        for n in range(top + 1):
            b = []
            for p in range(n + 1):
                if p <= self.n1 and n - p <= len(self.comp):
                    b.extend(self.cell_basis(p, n - p))
            bases.append(b)
            keys.append(sorted({k for v in b for k in v}))
        mats = []
        for n in range(top):
            kix = {k: r for r, k in enumerate(keys[n + 1])}
            tgt = row_space([{kix[k]: c for k, c in v.items()} for v in bases[n + 1]], len(keys[n + 1]))
            cols = []
            for v in bases[n]:
                d = self.total(v)
                if any(k not in kix for k in d):
                    raise ValueError(f"total differential leaves the invariant cells at degree {n}")
                coords = membership({kix[k]: c for k, c in d.items()}, tgt)
                if coords is None:
                    raise ValueError(f"total differential leaves the invariant cells at degree {n}")
                cols.append({r: c for r, c in enumerate(coords) if c})
            mats.append(SparseMatrix.from_columns(tgt.dim, cols))
            bases[n + 1] = [Vec({keys[n + 1][i]: c for i, c in v.items()}) for v in tgt.vectors]
        res = cohomology_dims(mats, [len(b) for b in bases])
        reps = []
        for n, coords in enumerate(res.representatives):
            row = []
            for v in coords:
                c = Vec()
                for i, x in v.items():
                    c.iadd(bases[n][i], x)
                row.append(c)
            reps.append(row)
        cut = len(res.dims) if max_degree is None else max_degree + 1
        return CohomologyResult(res.dims[:cut], reps[:cut])

    def sample(self, rng, p, q, terms=2):
        amb = self.ambient(p, q)
        out = Vec()
        if not amb:
            return out
        for _ in range(terms):
            out.add_term(rng.choice(amb), Fraction(rng.choice([-2, -1, 1, 2, 3])))
        return self.project(out)


def _solve(vectors, target, dim):
    """Coefficients x with Σ x_n vectors[n] = target (vectors independent)."""
    rows = {}
    for n, v in enumerate(vectors):
        for k, c in v.items():
            rows.setdefault(k, {})[n] = c
    aug = []
    for k in range(dim):
        r = dict(rows.get(k, {}))
        t = target.get(k)
        if t:
            r[len(vectors)] = t
        aug.append(r)
    basis = row_space(aug, len(vectors) + 1)
    sol = [Fraction(0)] * len(vectors)
    for pc, row in zip(basis.pivots, basis.vectors):
        if pc == len(vectors):
            raise ValueError("inconsistent system")
        sol[pc] = row.get(len(vectors), Fraction(0))
    return sol


def van_est(P, RB, c):
    """𝒱(m⊗ω⊗f¹…f^q)(X|ξ) = ω(X) Σ_σ (−1)^σ ⟨ξ^{σ(1)}, f¹⟩⋯⟨ξ^{σ(q)}, f^q⟩ m, then π^0."""
    U2 = P.U2
    out = Vec()
    for (a, I, fs), x in c.items():
        q = len(fs)
        for J in combinations(RB.comp, q):
            s = Fraction(0)
            for perm in permutations(range(q)):
                sg, _ = sort_sign(perm)
                t = Fraction(sg)
                for k in range(q):
                    t *= P.eval_mono(fs[k], U2.unit_key(J[perm[k]]))
                    if not t:
                        break
                s += t
            if s:
                out.add_term((a, I, J), x * s)
    return RB.project(out)


def _hochschild(P, RB, c, vs):
    """b_{U(g2)}(θ c)(v¹…v^{q+1}) with trivial left action and the →∂ right action."""
    U2 = P.U2
    q = len(vs) - 1
    out = theta_map(P, c, vs[1:]) * U2.counit(Vec.unit(vs[0]))
    for i in range(1, q + 1):
        prod = U2.mono_mul(vs[i - 1], vs[i])
        for w, y in prod.items():
            out.iadd(theta_map(P, c, vs[: i - 1] + (w,) + vs[i + 1:]), (-1) ** i * y)
    out.iadd(RB.right_act_U(theta_map(P, c, vs[:q]), vs[q]), (-1) ** (q + 1))
    return out


def check_relative(RB, samples=3, seed=0):
    rep = Report("vanest")
    rng = random.Random(seed)
    n1, nl = RB.n1, len(RB.comp)
    for p in range(n1 + 1):
        for q in range(nl + 1):
            for s in range(samples):
                c = RB.sample(rng, p, q)
                w = (RB.M.name, p, q, s)
                rep.expect("vanest.up-square", REF["up-square"], w, RB.up(RB.up(c)), Vec())
                rep.expect("vanest.right-square", REF["right-square"], w, RB.right(RB.right(c)), Vec())
                rep.expect("vanest.anticommute", REF["anticommute"], w, RB.up(RB.right(c)), RB.right(RB.up(c)))
                rep.expect("vanest.natural-inverse", REF["natural-inverse"], w, RB.natural(RB.natural_inv(c)), c)
                omega = RB.natural_inv(c)
                rep.expect("vanest.natural-inverse", REF["natural-inverse"], w, RB.natural_inv(RB.natural(omega)), omega)
                rep.expect("vanest.natural-chain", REF["natural-chain"], w, RB.natural(RB.a_coboundary(omega)), RB.total(c))
                if RB.h:
                    rep.expect("vanest.invariance", REF["invariance"], w, RB.is_invariant(RB.total(c)), True)
    dims = RB.total_cohomology()
    ref = ce_cohomology(RB.a, RB.a_module, [RB.n1 + x for x in RB.h]).dims
    rep.expect("vanest.cohomology-routes", REF["cohomology-routes"], RB.M.name, dims, ref)
    return rep


def check_van_est(P, RB, R, p_max=2, q_max=2, samples=3, seed=0, degree=2):
    """Pairing-side identities of θ and ∗, and the two chain-map identities of 𝒱.

    ``R`` is the ReducedComplex of the same module (dual side).
    """
    rep = Report("vanest")
    rng = random.Random(seed)
    mp, lh = P.mp, P.lh
    U1, U2 = mp.U1, mp.U2
    vb = U2.basis_upto(degree)
    ub = U1.basis_upto(degree)
    for q in range(1, 4):
        for s in range(samples):
            vt = Vec.unit(tuple(rng.choice(vb) for _ in range(q)))
            u1, u2 = rng.choice(ub), rng.choice(ub)
            w = (q, s)
            rep.expect("vanest.star-unit", REF["star-unit"], w, star_action(mp, vt, U1.one()), vt)
            lhs = star_action(mp, star_action(mp, vt, Vec.unit(u1)), Vec.unit(u2))
            rhs = star_action(mp, vt, U1.mono_mul(u1, u2))
            rep.expect("vanest.star-action", REF["star-action"], w + (u1, u2), lhs, rhs)
    for p in range(p_max + 1):
        for q in range(q_max + 1):
            for s in range(samples):
                c = R.sample(rng, p, q)
                w = (RB.M.name, p, q, s)
                # θ-linearity of the ∗-action
                u = rng.choice(ub)
                uc = Vec()
                for (a, I, fs), x in c.items():
                    for t, y in bullet(lh, Vec.unit(u), Vec.unit(fs)).items():
                        uc.add_term((a, I, t), x * y)
                vs = tuple(rng.choice(vb) for _ in range(q))
                rhs = Vec()
                for t, y in star_action(mp, Vec.unit(vs), Vec.unit(u)).items():
                    rhs.iadd(theta_map(P, c, t), y)
                rep.expect("vanest.theta-linear", REF["theta-linear"], w + (u, vs), theta_map(P, uc, vs), rhs)
                vs1 = tuple(rng.choice(vb) for _ in range(q + 1))
                rep.expect(
                    "vanest.theta-hochschild", REF["theta-hochschild"], w + (vs1,),
                    theta_map(P, R.b_star_F(c, q), vs1), _hochschild(P, RB, c, vs1),
                )
                if q:
                    k = rng.randrange(q)
                    deg = Vec({(a, I, fs[:k] + (R.F.zero_key,) + fs[k + 1:]): x for (a, I, fs), x in c.items()})
                    rep.expect("vanest.degenerate", REF["degenerate"], w, van_est(P, RB, deg), Vec())
                V = van_est(P, RB, c)
                if RB.h:
                    rep.expect("vanest.invariance", REF["invariance"], w, RB.is_invariant(V), True)
                rep.expect("vanest.vanest-right", REF["vanest-right"], w, van_est(P, RB, R.b_star_F(c, q)), RB.right(V))
                rep.expect("vanest.vanest-up", REF["vanest-up"], w, van_est(P, RB, R.boundary_dual_g(c)), RB.up(V))
    return rep


def compute_relative_cohomology(mp, M, h=(), max_degree=None):
    return RelativeBicomplex(mp, M, h).total_cohomology(max_degree)
