"""Matched pairs of Lie algebras and the enveloping-algebra calculus they need.

Elements of an enveloping algebra are Vecs keyed by PBW exponent tuples in
the fixed basis order.  For the double crossed sum the order is the g1 basis
followed by the g2 basis, so a normal-ordered monomial of U(g1 ⋈ g2) is
literally a pair (g1 part, g2 part).
"""

import random
from functools import lru_cache
from math import comb

from .exactlin import Fraction, Vec
from .liealg import LieAlgebra, check_jacobi
from .report import Report

REF = {
    "g2-bracket": "[ζ,ξ]▷X = ζ▷(ξ▷X) − ξ▷(ζ▷X)",
    "g1-bracket": "ζ◁[X,Y] = (ζ◁X)◁Y − (ζ◁Y)◁X",
    "left-derivation": "ζ▷[X,Y] = [ζ▷X,Y] + [X,ζ▷Y] + (ζ◁X)▷Y − (ζ◁Y)▷X",
    "right-derivation": "[ζ,ξ]◁X = [ζ◁X,ξ] + [ζ,ξ◁X] + ζ◁(ξ▷X) − ξ◁(ζ▷X)",
    "left-product": "v▷(u¹u²) = (v(1)▷u¹(1))((v(2)◁u¹(2))▷u²), 1◁u = ε(u)",
    "right-product": "(v¹v²)◁u = (v¹◁(v²(1)▷u(1)))(v²(2)◁u(2)), v▷1 = ε(v)",
    "cocommutation": "v(1)◁u(1) ⊗ v(2)▷u(2) = v(2)◁u(2) ⊗ v(1)▷u(1)",
    "psi": "Ψ(v⊗u) = v(1)▷u(1) ⊗ v(2)◁u(2)",
    "coefficient-coproduct": "f_i^j(v¹v²) = Σ_k f_k^j(v¹) f_i^k(v²)",
}

# identity ids reported by the checkers below
IDS = {
    "g2-bracket": "matched.g2-bracket-acts",
    "g1-bracket": "matched.g1-bracket-acts",
    "left-derivation": "matched.left-action-derivation",
    "right-derivation": "matched.right-action-derivation",
    "left-product": "mutual.left-action-product",
    "right-product": "mutual.right-action-product",
    "cocommutation": "mutual.cocommutation",
    "psi": "mutual.psi-legs",
    "coefficient-coproduct": "mutual.coefficient-coproduct",
}


class Enveloping:
    """U(g) with PBW basis ``X^e = X_0^{e_0} … X_{n-1}^{e_{n-1}}``."""

    def __init__(self, lie):
        self.lie = lie
        self.n = lie.dim
        self._mg = {}
        self._mm = {}
        self._anti = {}
        self._cop = {}
        self.zero_key = (0,) * self.n

    # construction
    def one(self):
        return Vec.unit(self.zero_key)

    def unit_key(self, i, power=1):
        e = [0] * self.n
        e[i] = power
        return tuple(e)

    def gen(self, i):
        return Vec.unit(self.unit_key(i))

    @staticmethod
    def word(e):
        w = []
        for i, k in enumerate(e):
            w.extend([i] * k)
        return tuple(w)

    def from_word(self, word):
        out = self.one()
        for k in word:
            out = self.times_gen(out, k)
        return out

    @staticmethod
    def degree(e):
        return sum(e)

    # multiplication
    def mono_times_gen(self, e, k):
        key = (e, k)
        hit = self._mg.get(key)
        if hit is not None:
            return hit
        last = max((i for i, x in enumerate(e) if x), default=-1)
        if k >= last:
            f = list(e)
            f[k] += 1
            res = Vec.unit(tuple(f))
        else:
            # X^e X_k = (X^{e'} X_k) X_l + X^{e'} [X_l, X_k]
            f = list(e)
            f[last] -= 1
            f = tuple(f)
            res = Vec()
            for m, c in self.mono_times_gen(f, k).items():
                res.iadd(self.mono_times_gen(m, last), c)
            for j, c in self.lie.bracket_basis(last, k).items():
                res.iadd(self.mono_times_gen(f, j), c)
        self._mg[key] = res
        return res

    def times_gen(self, x, k):
        out = Vec()
        for e, c in x.items():
            out.iadd(self.mono_times_gen(e, k), c)
        return out

    def mono_mul(self, e, f):
        key = (e, f)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        res = Vec.unit(e)
        for k in self.word(f):
            res = self.times_gen(res, k)
        self._mm[key] = res
        return res

    def mul(self, x, y):
        out = Vec()
        for e, a in x.items():
            for f, b in y.items():
                out.iadd(self.mono_mul(e, f), a * b)
        return out

    # Hopf structure
    def counit(self, x):
        return x.get(self.zero_key, Fraction(0))

    def mono_coproduct(self, e, legs=2):
        """Iterated coproduct of a monomial; keys are tuples of ``legs`` monomials."""
        key = (e, legs)
        hit = self._cop.get(key)
        if hit is not None:
            return hit
        terms = {(): Fraction(1)}
        for k in e:
            terms = {
                t + (split,): val * c for t, val in terms.items() for split, c in _compositions(k, legs)
            }
        hit = Vec()
        for t, c in terms.items():
            hit.add_term(tuple(tuple(s[leg] for s in t) for leg in range(legs)), c)
        self._cop[key] = hit
        return hit

    def coproduct(self, x, legs=2):
        out = Vec()
        for e, c in x.items():
            out.iadd(self.mono_coproduct(e, legs), c)
        return out

    def mono_antipode(self, e):
        hit = self._anti.get(e)
        if hit is None:
            w = self.word(e)
            hit = self.from_word(tuple(reversed(w))) * (-1) ** len(w)
            self._anti[e] = hit
        return hit

    def antipode(self, x):
        return x.linear(self.mono_antipode)

    def basis_upto(self, degree):
        out = []
        for d in range(degree + 1):
            out.extend(_exponents(self.n, d))
        return out

    def random_element(self, rng, degree, terms=3):
        basis = self.basis_upto(degree)
        out = Vec()
        for _ in range(terms):
            out.add_term(rng.choice(basis), Fraction(rng.randint(-3, 3)))
        return out


@lru_cache(maxsize=None)
def _compositions(k, legs):
    """Ways to write k = k_1 + … + k_legs with multinomial weights."""
    if legs == 1:
        return ((((k,)), Fraction(1)),)
    out = []
    for first in range(k + 1):
        for rest, c in _compositions(k - first, legs - 1):
            out.append(((first,) + rest, c * comb(k, first)))
    return tuple(out)


def _exponents(n, d):
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _exponents(n - 1, d - first):
            out.append((first,) + rest)
    return out


class MatchedPair:
    """(g1, g2) with ``ζ_a ▷ X_i = Σ_j P[(a,i)][j] X_j`` and
    ``ζ_a ◁ X_i = Σ_b Q[(a,i)][b] ζ_b``."""

    def __init__(self, g1, g2, left_action, right_action):
        self.g1 = g1
        self.g2 = g2
        self.P = {k: Vec({j: Fraction(c) for j, c in v.items() if c}) for k, v in left_action.items()}
        self.Q = {k: Vec({j: Fraction(c) for j, c in v.items() if c}) for k, v in right_action.items()}
        self._sum = None
        self._Ua = None
        self.U1 = Enveloping(g1)
        self.U2 = Enveloping(g2)
        self._psi = {}

    def tri(self, z, x):
        """ζ ▷ X for vectors ζ ∈ g2, X ∈ g1."""
        out = Vec()
        for a, s in z.items():
            for i, t in x.items():
                out.iadd(self.P.get((a, i), Vec()), s * t)
        return out

    def tle(self, z, x):
        """ζ ◁ X."""
        out = Vec()
        for a, s in z.items():
            for i, t in x.items():
                out.iadd(self.Q.get((a, i), Vec()), s * t)
        return out

    @property
    def a(self):
        if self._sum is None:
            self._sum = double_crossed_sum(self)
        return self._sum

    @property
    def Ua(self):
        if self._Ua is None:
            self._Ua = Enveloping(self.a)
        return self._Ua

    def i1(self, e):
        return e + (0,) * self.g2.dim

    def i2(self, e):
        return (0,) * self.g1.dim + e

    def split(self, e):
        m = self.g1.dim
        return e[:m], e[m:]

    def psi_mono(self, v, u):
        key = (v, u)
        hit = self._psi.get(key)
        if hit is None:
            prod = self.Ua.mono_mul(self.i2(v), self.i1(u))
            hit = prod.map_keys(self.split)
            self._psi[key] = hit
        return hit


def check_matched_pair(mp):
    rep = Report("matched")
    g1, g2 = mp.g1, mp.g2
    n1, n2 = g1.dim, g2.dim
    u = Vec.unit
    for a in range(n2):
        for b in range(n2):
            for i in range(n1):
                z, xi, x = u(a), u(b), u(i)
                lhs = mp.tri(g2.bracket(z, xi), x)
                rhs = mp.tri(z, mp.tri(xi, x)) - mp.tri(xi, mp.tri(z, x))
                rep.expect(IDS["g2-bracket"], REF["g2-bracket"], (g2.names[a], g2.names[b], g1.names[i]), lhs, rhs)
                lhs = mp.tle(g2.bracket(z, xi), x)
                rhs = g2.bracket(mp.tle(z, x), xi) + g2.bracket(z, mp.tle(xi, x))
                rhs.iadd(mp.tle(z, mp.tri(xi, x)))
                rhs.iadd(mp.tle(xi, mp.tri(z, x)), -1)
                rep.expect(IDS["right-derivation"], REF["right-derivation"], (g2.names[a], g2.names[b], g1.names[i]), lhs, rhs)
    for a in range(n2):
        for i in range(n1):
            for j in range(n1):
                z, x, y = u(a), u(i), u(j)
                lhs = mp.tle(z, g1.bracket(x, y))
                rhs = mp.tle(mp.tle(z, x), y) - mp.tle(mp.tle(z, y), x)
                rep.expect(IDS["g1-bracket"], REF["g1-bracket"], (g2.names[a], g1.names[i], g1.names[j]), lhs, rhs)
                lhs = mp.tri(z, g1.bracket(x, y))
                rhs = g1.bracket(mp.tri(z, x), y) + g1.bracket(x, mp.tri(z, y))
                rhs.iadd(mp.tri(mp.tle(z, x), y))
                rhs.iadd(mp.tri(mp.tle(z, y), x), -1)
                rep.expect(IDS["left-derivation"], REF["left-derivation"], (g2.names[a], g1.names[i], g1.names[j]), lhs, rhs)
    return rep


def double_crossed_sum(mp):
    """Lie algebra on g1 ⊕ g2 with [ζ, X] = ζ▷X + ζ◁X."""
    n1 = mp.g1.dim
    st = {}
    for (i, j), v in mp.g1.structure.items():
        st[(i, j)] = Vec(v)
    for (a, b), v in mp.g2.structure.items():
        st[(n1 + a, n1 + b)] = v.map_keys(lambda k: n1 + k)
    for a in range(mp.g2.dim):
        for i in range(n1):
            w = mp.tri(Vec.unit(a), Vec.unit(i)) + mp.tle(Vec.unit(a), Vec.unit(i)).map_keys(lambda k: n1 + k)
            if w:
                st[(n1 + a, i)] = w
                st[(i, n1 + a)] = -w
    return LieAlgebra(mp.g1.names + mp.g2.names, st)


def _restrict(a, part):
    pos = {k: n for n, k in enumerate(part)}
    st = {}
    for i in part:
        for j in part:
            v = a.bracket_basis(i, j)
            if any(k not in pos for k in v):
                raise ValueError("part not a subalgebra")
            if v:
                st[(pos[i], pos[j])] = v.map_keys(pos.__getitem__)
    return LieAlgebra([a.names[k] for k in part], st)


def decompose(a, part1, part2):
    """Matched pair (g1, g2) whose double crossed sum is ``a``."""
    part1, part2 = list(part1), list(part2)
    if sorted(part1 + part2) != list(range(a.dim)):
        raise ValueError("split must partition the basis")
    g1, g2 = _restrict(a, part1), _restrict(a, part2)
    p1 = {k: n for n, k in enumerate(part1)}
    p2 = {k: n for n, k in enumerate(part2)}
    P, Q = {}, {}
    for an, ak in enumerate(part2):
        for xn, xk in enumerate(part1):
            br = a.bracket_basis(ak, xk)
            P[(an, xn)] = Vec({p1[k]: c for k, c in br.items() if k in p1})
            Q[(an, xn)] = Vec({p2[k]: c for k, c in br.items() if k in p2})
    return MatchedPair(g1, g2, P, Q)


def psi_factorize(mp, v, u):
    """Ψ(v⊗u) ∈ U(g1)⊗U(g2), keys ``(g1 monomial, g2 monomial)``."""
    out = Vec()
    for f, b in v.items():
        for e, a in u.items():
            out.iadd(mp.psi_mono(f, e), a * b)
    return out


def recombine(mp, t):
    """μ∘(i1⊗i2) of an element of U(g1)⊗U(g2), inside U(a)."""
    out = Vec()
    for (e, f), c in t.items():
        out.iadd(mp.Ua.mono_mul(mp.i1(e), mp.i2(f)), c)
    return out


def embed_product(mp, v, u):
    """i2(v) i1(u) computed in U(a)."""
    return mp.Ua.mul(v.map_keys(mp.i2), u.map_keys(mp.i1))


def mutual_actions(mp, v, u):
    """(v▷u, v◁u) from the counit legs of Ψ."""
    t = psi_factorize(mp, v, u)
    z1, z2 = mp.U1.zero_key, mp.U2.zero_key
    left, right = Vec(), Vec()
    for (e, f), c in t.items():
        if f == z2:
            left.add_term(e, c)
        if e == z1:
            right.add_term(f, c)
    return left, right


def psi_from_actions(mp, v, u):
    """Σ v(1)▷u(1) ⊗ v(2)◁u(2), rebuilt from the mutual actions alone."""
    out = Vec()
    for (v1, v2), a in mp.U2.coproduct(v).items():
        for (u1, u2), b in mp.U1.coproduct(u).items():
            left = act_left(mp, Vec.unit(v1), Vec.unit(u1))
            right = act_right(mp, Vec.unit(v2), Vec.unit(u2))
            for x, c in left.items():
                for y, d in right.items():
                    out.add_term((x, y), a * b * c * d)
    return out


def act_left(mp, v, u):
    return mutual_actions(mp, v, u)[0]


def act_right(mp, v, u):
    return mutual_actions(mp, v, u)[1]


def matrix_coefficient_eval(mp, i, j, v):
    """f_i^j(v): the X_j-coefficient of v▷X_i."""
    return act_left(mp, v, mp.U1.gen(i)).get(mp.U1.unit_key(j), Fraction(0))


def check_mutual_pair(mp, depth=3, samples=20, seed=0):
    """Mutual-pair laws, Ψ recombination and the f_i^j coproduct law."""
    rep = Report("mutual")
    rng = random.Random(seed)
    U1, U2 = mp.U1, mp.U2
    b1 = U1.basis_upto(depth)
    b2 = U2.basis_upto(depth)

    def pairs(n):
        out = [(Vec.unit(v), Vec.unit(u)) for v in b2 for u in b1 if sum(v) + sum(u) <= depth]
        for _ in range(n):
            out.append((U2.random_element(rng, depth), U1.random_element(rng, depth)))
        return out

    for v, u in pairs(samples):
        rep.expect(IDS["psi"], REF["psi"], (v, u), psi_factorize(mp, v, u), psi_from_actions(mp, v, u))
        # unit laws
        rep.expect(IDS["left-product"], REF["left-product"], ("1◁u", u), act_right(mp, U2.one(), u), U2.one() * U1.counit(u))
        rep.expect(IDS["right-product"], REF["right-product"], ("v▷1", v), act_left(mp, v, U1.one()), U1.one() * U2.counit(v))
        # cocommutation
        lhs, rhs = Vec(), Vec()
        for (v1, v2), a in U2.coproduct(v).items():
            for (u1, u2), b in U1.coproduct(u).items():
                l1, r1 = mutual_actions(mp, Vec.unit(v1), Vec.unit(u1))
                l2, r2 = mutual_actions(mp, Vec.unit(v2), Vec.unit(u2))
                for x, c in r1.items():
                    for y, d in l2.items():
                        lhs.add_term((x, y), a * b * c * d)
                for x, c in r2.items():
                    for y, d in l1.items():
                        rhs.add_term((x, y), a * b * c * d)
        rep.expect(IDS["cocommutation"], REF["cocommutation"], (v, u), lhs, rhs)

    for _ in range(max(1, samples // 2)):
        v = U2.random_element(rng, 2)
        u1 = U1.random_element(rng, 2)
        u2 = U1.random_element(rng, 1)
        lhs = act_left(mp, v, U1.mul(u1, u2))
        rhs = Vec()
        for (va, vb), a in U2.coproduct(v).items():
            for (ua, ub), b in U1.coproduct(u1).items():
                left = act_left(mp, Vec.unit(va), Vec.unit(ua))
                mid = act_right(mp, Vec.unit(vb), Vec.unit(ub))
                rhs.iadd(U1.mul(left, act_left(mp, mid, u2)), a * b)
        rep.expect(IDS["left-product"], REF["left-product"], (v, u1, u2), lhs, rhs)

        v1 = U2.random_element(rng, 1)
        v2 = U2.random_element(rng, 2)
        u = U1.random_element(rng, 2)
        lhs = act_right(mp, U2.mul(v1, v2), u)
        rhs = Vec()
        for (va, vb), a in U2.coproduct(v2).items():
            for (ua, ub), b in U1.coproduct(u).items():
                inner = act_left(mp, Vec.unit(va), Vec.unit(ua))
                rhs.iadd(U2.mul(act_right(mp, v1, inner), act_right(mp, Vec.unit(vb), Vec.unit(ub))), a * b)
        rep.expect(IDS["right-product"], REF["right-product"], (v1, v2, u), lhs, rhs)

    n1 = mp.g1.dim
    for v1 in b2:
        for v2 in b2:
            if sum(v1) + sum(v2) > depth:
                continue
            prod = U2.mono_mul(v1, v2)
            for i in range(n1):
                for j in range(n1):
                    lhs = sum(
                        (c * matrix_coefficient_eval(mp, i, j, Vec.unit(m)) for m, c in prod.items()),
                        Fraction(0),
                    )
                    rhs = sum(
                        (
                            matrix_coefficient_eval(mp, k, j, Vec.unit(v1))
                            * matrix_coefficient_eval(mp, i, k, Vec.unit(v2))
                            for k in range(n1)
                        ),
                        Fraction(0),
                    )
                    rep.expect(
                        IDS["coefficient-coproduct"], REF["coefficient-coproduct"], (i, j, v1, v2), lhs, rhs
                    )
    return rep


def check_all_matched(mp):
    rep = Report("matched")
    rep.extend(check_jacobi(mp.g1))
    rep.extend(check_jacobi(mp.g2))
    rep.extend(check_matched_pair(mp))
    return rep
