"""Exact rational linear algebra on sparse data.

Scalars are :class:`fractions.Fraction`.  Matrices and vectors are stored as
dictionaries without zero entries.  :class:`Vec` doubles as the generic
"formal linear combination" type used by every algebra in the package: keys
are hashable basis labels, values are nonzero rationals.
"""

from fractions import Fraction

__all__ = [
    "Fraction",
    "Vec",
    "parse_rational",
    "SparseMatrix",
    "SubspaceBasis",
    "rank_kernel",
    "row_space",
    "membership",
    "quotient_dimension",
    "NotAComplex",
]


def parse_rational(text):
    """Parse ``"p/q"``, ``"p"`` or an int into a reduced Fraction."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"rationals must be strings or ints, got {text!r}")
    s = text.strip()
    try:
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


class Vec(dict):
    """Sparse formal linear combination ``{basis label: Fraction}``."""

    __slots__ = ()

    @classmethod
    def unit(cls, key, coef=1):
        return cls({key: Fraction(coef)}) if coef else cls()

    @classmethod
    def from_terms(cls, terms):
        out = cls()
        for k, c in terms:
            out.add_term(k, c)
        return out

    def add_term(self, key, coef):
        if not coef:
            return
        c = self.get(key, 0) + coef
        if c:
            self[key] = c if type(c) is Fraction else Fraction(c)
        else:
            self.pop(key, None)

    def iadd(self, other, scale=1):
        if scale:
            for k, c in other.items():
                self.add_term(k, scale * c)
        return self

    def __add__(self, other):
        return Vec(self).iadd(other)

    def __sub__(self, other):
        return Vec(self).iadd(other, -1)

    def __neg__(self):
        return Vec({k: -c for k, c in self.items()})

    def __mul__(self, scalar):
        if not scalar:
            return Vec()
        return Vec({k: c * scalar for k, c in self.items()})

    __rmul__ = __mul__

    def map_keys(self, fn):
        out = Vec()
        for k, c in self.items():
            out.add_term(fn(k), c)
        return out

    def linear(self, fn):
        """Extend ``fn: key -> Vec`` linearly."""
        out = Vec()
        for k, c in self.items():
            out.iadd(fn(k), c)
        return out

    def sorted_items(self):
        return sorted(self.items(), key=lambda kc: repr(kc[0]))


def _bits(x):
    return x.numerator.bit_length() + x.denominator.bit_length()


class SparseMatrix:
    """rows x cols matrix with entries ``{(r, c): Fraction}``."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r},{c}) outside {rows}x{cols}")
            if v:
                clean[(r, c)] = Fraction(v)
        self.entries = clean

    @classmethod
    def from_dense(cls, rows):
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return cls(nr, nc, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from a list of sparse column dicts ``{row: value}``."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(rows, len(columns), ent)

    def transpose(self):
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def apply(self, vec):
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                s = out.get(r, 0) + v * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (k, c), v in other.entries.items():
            by_row.setdefault(k, []).append((c, v))
        ent = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                ent[(r, c)] = ent.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, ent)

    def is_zero(self):
        return not self.entries

    def dense(self):
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m


class SubspaceBasis:
    """Reduced echelon basis of a subspace of Q^ambient_dim."""

    __slots__ = ("ambient_dim", "vectors", "pivots")

    def __init__(self, ambient_dim, vectors, pivots):
        self.ambient_dim = ambient_dim
        self.vectors = vectors
        self.pivots = pivots

    def __len__(self):
        return len(self.vectors)

    @property
    def dim(self):
        return len(self.vectors)

    def __repr__(self):
        return f"SubspaceBasis(ambient={self.ambient_dim}, dim={self.dim})"


def _reduce_rows(rows, ncols):
    """Row-reduce a list of sparse row dicts to reduced echelon form.

    Columns are scanned left to right; among the remaining rows with a nonzero
    entry in the column, the entry of smallest bit size is chosen (ties go to
    the earliest row), which keeps coefficients small and the result
    deterministic.
    """
    rows = [dict(r) for r in rows if r]
    by_col = {}
    for idx, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, set()).add(idx)
    alive = set(range(len(rows)))
    basis = []  # (pivot column, row dict)
    for col in sorted(by_col):
        cands = [i for i in by_col.get(col, ()) if i in alive and rows[i].get(col)]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (_bits(rows[i][col]), i))
        alive.discard(piv)
        prow = rows[piv]
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        for i in cands:
            if i == piv:
                continue
            r = rows[i]
            f = r[col]
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    if c not in r:
                        by_col.setdefault(c, set()).add(i)
                    r[c] = nv
                else:
                    r.pop(c, None)
        basis.append((col, prow))
    # back substitution for reduced form
    basis.sort(key=lambda t: t[0])
    for k in range(len(basis) - 1, -1, -1):
        pc, prow = basis[k]
        for j in range(k):
            qc, qrow = basis[j]
            f = qrow.get(pc)
            if f:
                for c, v in prow.items():
                    nv = qrow.get(c, 0) - f * v
                    if nv:
                        qrow[c] = nv
                    else:
                        qrow.pop(c, None)
    return basis


def row_space(vectors, ambient_dim):
    """Echelonized basis of the span of sparse vectors."""
    for v in vectors:
        for c in v:
            if not 0 <= c < ambient_dim:
                raise IndexError(f"coordinate {c} outside dimension {ambient_dim}")
    basis = _reduce_rows(vectors, ambient_dim)
    return SubspaceBasis(ambient_dim, [r for _, r in basis], [c for c, _ in basis])


def rank_kernel(m):
    """Return ``(rank, kernel basis)`` of a SparseMatrix."""
    basis = _reduce_rows(m.row_dicts(), m.cols)
    pivots = [c for c, _ in basis]
    pivset = set(pivots)
    kern = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for pc, prow in basis:
            f = prow.get(free)
            if f:
                v[pc] = -f
        kern.append(v)
    return len(basis), row_space(kern, m.cols)


def membership(v, s):
    """Coefficients expressing ``v`` in the basis ``s``, or None."""
    for c in v:
        if not 0 <= c < s.ambient_dim:
            raise ValueError(f"dimension mismatch: coordinate {c} vs ambient {s.ambient_dim}")
    rem = {c: Fraction(x) for c, x in v.items() if x}
    coeffs = [Fraction(0)] * len(s.vectors)
    for k, (pc, row) in enumerate(zip(s.pivots, s.vectors)):
        f = rem.get(pc)
        if not f:
            continue
        coeffs[k] = f
        for c, x in row.items():
            nv = rem.get(c, 0) - f * x
            if nv:
                rem[c] = nv
            else:
                rem.pop(c, None)
    if rem:
        return None
    return coeffs


class NotAComplex(ValueError):
    pass


def quotient_dimension(image, kernel):
    """dim kernel - dim image, after checking image is inside kernel."""
    if image.ambient_dim != kernel.ambient_dim:
        raise ValueError("ambient dimensions differ")
    for v in image.vectors:
        if membership(v, kernel) is None:
            raise NotAComplex("image not contained in kernel")
    return kernel.dim - image.dim
