"""Lie algebras given by structure constants, their modules, and
Chevalley-Eilenberg (co)homology, absolute and relative.

Cochains in ``V ⊗ ∧^q g*`` are :class:`Vec` objects keyed by ``(a, I)`` with
``a`` a module basis index and ``I`` a strictly increasing tuple of indices of
the dual basis ``θ^i``.  Chains in ``V ⊗ ∧^p g`` use the same layout with
``I`` indexing the basis ``X_i``.
"""

from dataclasses import dataclass
from itertools import combinations

from .exactlin import (
    Fraction,
    NotAComplex,
    SparseMatrix,
    Vec,
    membership,
    quotient_dimension,
    rank_kernel,
    row_space,
)
from .report import Report

REF_JACOBI = "[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] = 0"
REF_ANTISYM = "C^k_ij = -C^k_ji"


def sort_sign(seq):
    """Sort a sequence of indices, returning ``(sign, tuple)``; sign 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def wedge_front(k, idx):
    """θ^k ∧ θ^idx expressed as ``(sign, sorted)`` or ``(0, None)``."""
    if k in idx:
        return 0, None
    pos = sum(1 for i in idx if i < k)
    return (-1 if pos % 2 else 1), tuple(sorted(idx + (k,)))


class LieAlgebra:
    """Finite-dimensional Lie algebra with raw structure constants.

    ``structure[(i, j)]`` is the Vec of ``[X_i, X_j]``.  The constructor does
    not symmetrize; use :meth:`from_brackets` for that.
    """

    def __init__(self, names, structure):
        self.names = list(names)
        self.dim = len(self.names)
        self.structure = {}
        for (i, j), v in structure.items():
            v = Vec({k: Fraction(c) for k, c in v.items() if c})
            if v:
                self.structure[(i, j)] = v

    @classmethod
    def from_brackets(cls, names, brackets):
        """``brackets[(i, j)] = {k: c}`` for some pairs; the rest follow by antisymmetry."""
        full = {}
        for (i, j), v in brackets.items():
            v = Vec({k: Fraction(c) for k, c in v.items() if c})
            if i == j:
                if v:
                    raise ValueError(f"[X_{i}, X_{i}] must vanish")
                continue
            for key, w in (((i, j), v), ((j, i), -v)):
                if key in full and full[key] != w:
                    raise ValueError(f"inconsistent bracket for {key}")
                full[key] = w
        return cls(names, full)

    @classmethod
    def abelian(cls, names):
        return cls(names, {})

    def index(self, name):
        return self.names.index(name)

    def bracket_basis(self, i, j):
        return self.structure.get((i, j), Vec())

    def C(self, k, i, j):
        return self.structure.get((i, j), {}).get(k, Fraction(0))

    def bracket(self, x, y):
        out = Vec()
        for i, a in x.items():
            for j, b in y.items():
                out.iadd(self.bracket_basis(i, j), a * b)
        return out

    def ad_matrix(self, i):
        """Columns ``ad(X_i)(X_j)``."""
        return [self.bracket_basis(i, j) for j in range(self.dim)]

    def is_subalgebra(self, idx):
        s = set(idx)
        for i in idx:
            for j in idx:
                if any(k not in s for k in self.bracket_basis(i, j)):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.names == other.names
            and self.structure == other.structure
        )

    def __repr__(self):
        return f"LieAlgebra({self.names})"


def check_jacobi(g):
    rep = Report("jacobi")
    n = g.dim
    for i in range(n):
        for j in range(n):
            rep.expect(
                "jacobi.antisymmetry", REF_ANTISYM, (g.names[i], g.names[j]),
                g.bracket_basis(i, j), -g.bracket_basis(j, i),
            )
    for i, j, k in combinations(range(n), 3):
        x, y, z = Vec.unit(i), Vec.unit(j), Vec.unit(k)
        tot = g.bracket(x, g.bracket(y, z))
        tot.iadd(g.bracket(y, g.bracket(z, x)))
        tot.iadd(g.bracket(z, g.bracket(x, y)))
        rep.expect("jacobi.jacobi", REF_JACOBI, (g.names[i], g.names[j], g.names[k]), tot, Vec())
    return rep


def adjoint_trace_character(g):
    """δ(X_i) = Tr ad(X_i) = Σ_k C^k_{i,k}."""
    return [sum((g.C(k, i, k) for k in range(g.dim)), Fraction(0)) for i in range(g.dim)]


class LieModule:
    """Finite-dimensional module: ``action[i][a]`` is the image of basis
    vector ``m_a`` under ``X_i`` (as a Vec over module indices)."""

    def __init__(self, dim, action, side="right", names=None):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.dim = dim
        self.side = side
        self.names = list(names) if names else [f"m{a}" for a in range(dim)]
        self.action = [
            [Vec({b: Fraction(c) for b, c in col.items() if c}) for col in mat] for mat in action
        ]

    @classmethod
    def trivial(cls, g, dim=1, side="right"):
        return cls(dim, [[Vec() for _ in range(dim)] for _ in range(g.dim)], side)

    @classmethod
    def adjoint(cls, g):
        """Left adjoint module ``X·Y = [X, Y]``."""
        return cls(g.dim, [g.ad_matrix(i) for i in range(g.dim)], "left", g.names)

    def act(self, i, vec):
        out = Vec()
        for a, c in vec.items():
            out.iadd(self.action[i][a], c)
        return out

    def flipped(self):
        """Same underlying space with ``v◁X = -X·v`` (or back)."""
        other = "left" if self.side == "right" else "right"
        return LieModule(self.dim, [[-c for c in mat] for mat in self.action], other, self.names)

    def as_right(self):
        return self if self.side == "right" else self.flipped()

    def as_left(self):
        return self if self.side == "left" else self.flipped()


def check_module(g, V):
    """ρ([X_i,X_j]) = ρ(X_i)ρ(X_j) − ρ(X_j)ρ(X_i) (left) or reversed (right)."""
    rep = Report("module")
    for i in range(g.dim):
        for j in range(g.dim):
            for a in range(V.dim):
                m = Vec.unit(a)
                lhs = Vec()
                for k, c in g.bracket_basis(i, j).items():
                    lhs.iadd(V.act(k, m), c)
                if V.side == "left":
                    rhs = V.act(i, V.act(j, m)) - V.act(j, V.act(i, m))
                else:
                    rhs = V.act(j, V.act(i, m)) - V.act(i, V.act(j, m))
                rep.expect("module.bracket", "ρ([X,Y]) = [ρ(X), ρ(Y)]", (i, j, a), lhs, rhs)
    return rep


def _dR_theta(g, k):
    """∂_dR θ^k = Σ_{s<t} C^k_{s,t} θ^s∧θ^t, as Vec over sorted pairs."""
    out = Vec()
    for s in range(g.dim):
        for t in range(s + 1, g.dim):
            c = g.C(k, s, t)
            if c:
                out.add_term((s, t), c)
    return out


def de_rham(g, idx):
    """∂_dR on the monomial θ^idx, extended as a degree-one derivation."""
    out = Vec()
    for r, k in enumerate(idx):
        sgn_r = -1 if r % 2 else 1
        for (s, t), c in _dR_theta(g, k).items():
            sg, key = sort_sign(idx[:r] + (s, t) + idx[r + 1:])
            if sg:
                out.add_term(key, sgn_r * sg * c)
    return out


def ce_coboundary(g, V, omega):
    """∂(v⊗ω) = Σ_i vX_i ⊗ θ^i∧ω + v ⊗ ∂_dR ω  for a right module V."""
    if V.side != "right":
        raise ValueError("ce_coboundary expects a right module")
    out = Vec()
    for (a, idx), c in omega.items():
        if len(idx) >= g.dim:
            continue
        m = Vec.unit(a)
        for i in range(g.dim):
            sg, key = wedge_front(i, idx)
            if not sg:
                continue
            for b, x in V.act(i, m).items():
                out.add_term((b, key), sg * c * x)
        for key, x in de_rham(g, idx).items():
            out.add_term((a, key), c * x)
    return out


def lie_homology_boundary(g, V, chain):
    """Σ_i (−1)^{i+1} (v◁X_i) ⊗ (drop i) + Σ_{i<j} (−1)^{i+j} v ⊗ [X_i,X_j]∧(drop i,j)."""
    if V.side != "right":
        raise ValueError("lie_homology_boundary expects a right module")
    out = Vec()
    for (a, idx), c in chain.items():
        p = len(idx)
        m = Vec.unit(a)
        for i in range(p):
            sg = 1 if i % 2 == 0 else -1  # (-1)^{(i+1)+1} with 1-based positions
            rest = idx[:i] + idx[i + 1:]
            for b, x in V.act(idx[i], m).items():
                out.add_term((b, rest), sg * c * x)
        for i in range(p):
            for j in range(i + 1, p):
                sg = 1 if (i + j) % 2 == 0 else -1
                rest = idx[:i] + idx[i + 1:j] + idx[j + 1:]
                for k, x in g.bracket_basis(idx[i], idx[j]).items():
                    s2, key = sort_sign((k,) + rest)
                    if s2:
                        out.add_term((a, key), sg * s2 * c * x)
    return out


def contract(j, omega):
    """ι_{X_j} on V⊗∧g* (evaluation of the first slot)."""
    out = Vec()
    for (a, idx), c in omega.items():
        if j in idx:
            r = idx.index(j)
            out.add_term((a, idx[:r] + idx[r + 1:]), -c if r % 2 else c)
    return out


def cochain_basis(vdim, indices, q):
    return [(a, I) for I in combinations(sorted(indices), q) for a in range(vdim)]


def relative_invariant_basis(g, h, V, q):
    """Basis of (V⊗∧^q(g/h)*)^h as a list of cochain Vecs.

    Cochains on g/h are those killed by every ι_X with X ∈ h, i.e. spanned by
    θ^k for k outside h.  On such cochains the Lie derivative is ι_X∘∂.
    """
    h = list(h)
    if not g.is_subalgebra(h):
        raise ValueError("h not a subalgebra")
    V = V.as_right()
    comp = [k for k in range(g.dim) if k not in set(h)]
    amb = cochain_basis(V.dim, comp, q)
    if not h:
        return [Vec.unit(key) for key in amb]
    full = cochain_basis(V.dim, range(g.dim), q)
    full_ix = {key: n for n, key in enumerate(full)}
    # stack the Lie derivatives of all h-basis elements into one matrix
    rows = len(h) * len(full)
    cols = []
    for key in amb:
        d = ce_coboundary(g, V, Vec.unit(key))
        col = {}
        for r, x in enumerate(h):
            for k2, c in contract(x, d).items():
                col[r * len(full) + full_ix[k2]] = c
        cols.append(col)
    _, ker = rank_kernel(SparseMatrix.from_columns(rows, cols))
    return [Vec({amb[n]: c for n, c in v.items()}) for v in ker.vectors]


def ce_matrix(g, V, q, src=None, dst=None):
    """Matrix of ∂: C^q → C^{q+1} in the given (or full) bases of keys."""
    V = V.as_right()
    src = src if src is not None else cochain_basis(V.dim, range(g.dim), q)
    dst = dst if dst is not None else cochain_basis(V.dim, range(g.dim), q + 1)
    dix = {key: n for n, key in enumerate(dst)}
    cols = []
    for key in src:
        d = ce_coboundary(g, V, Vec.unit(key))
        cols.append({dix[k]: c for k, c in d.items()})
    return SparseMatrix.from_columns(len(dst), cols)


@dataclass
class CohomologyResult:
    dims: list
    representatives: list


def cohomology_dims(matrices, dims=None):
    """Cohomology of C^0 → C^1 → … given the coboundary matrices.

    ``matrices[q]`` maps degree q to degree q+1.  ``dims`` gives the cochain
    dimensions (inferred from the matrices when omitted).
    """
    if dims is None:
        dims = [m.cols for m in matrices] + ([matrices[-1].rows] if matrices else [])
    for q, m in enumerate(matrices):
        if m.cols != dims[q] or m.rows != dims[q + 1]:
            raise ValueError(f"shape mismatch at degree {q}")
    for q in range(len(matrices) - 1):
        if not (matrices[q + 1] @ matrices[q]).is_zero():
            raise NotAComplex(f"not a complex: d∘d ≠ 0 at degree {q}")
    out, reps = [], []
    for q, n in enumerate(dims):
        if q < len(matrices):
            _, ker = rank_kernel(matrices[q])
        else:
            ker = row_space([{i: Fraction(1)} for i in range(n)], n)
        if q > 0 and q - 1 < len(matrices):
            prev = matrices[q - 1]
            im = row_space([c for c in _columns(prev) if c], n)
        else:
            im = row_space([], n)
        out.append(quotient_dimension(im, ker))
        chosen = list(im.vectors)
        mine = []
        for v in ker.vectors:
            span = row_space(chosen, n)
            if membership(v, span) is None:
                chosen.append(v)
                mine.append(v)
        reps.append(mine)
    return CohomologyResult(out, reps)


def _columns(m):
    cols = [dict() for _ in range(m.cols)]
    for (r, c), v in m.entries.items():
        cols[c][r] = v
    return cols


def ce_cohomology(g, V, h=(), max_degree=None):
    """Dimensions of H^q(g, h, V) via relative invariant cochains."""
    V = V.as_right()
    top = g.dim - len(tuple(h))
    top = top if max_degree is None else min(top, max_degree + 1)
    bases = [relative_invariant_basis(g, h, V, q) for q in range(top + 1)]
    full = [cochain_basis(V.dim, range(g.dim), q) for q in range(top + 1)]
    mats = []
    for q in range(top):
        ix = {key: n for n, key in enumerate(full[q + 1])}
        tgt = row_space([{ix[k]: c for k, c in b.items()} for b in bases[q + 1]], len(full[q + 1]))
        # coordinates relative to the echelonized target basis
        cols = []
        for b in bases[q]:
            d = ce_coboundary(g, V, b)
            coords = membership({ix[k]: c for k, c in d.items()}, tgt)
            if coords is None:
                raise NotAComplex(f"coboundary leaves relative cochains at degree {q}")
            cols.append({n: c for n, c in enumerate(coords) if c})
        mats.append(SparseMatrix.from_columns(tgt.dim, cols))
        bases[q + 1] = [Vec({full[q + 1][i]: c for i, c in v.items()}) for v in tgt.vectors]
    dims = [len(b) for b in bases]
    res = cohomology_dims(mats, dims)
    if max_degree is not None:
        res = CohomologyResult(res.dims[: max_degree + 1], res.representatives[: max_degree + 1])
    return res
