"""Dense exact linear algebra over Q(i).

Matrices are small (at most 72x72 regular representations, 24-dim
modules), so plain Gaussian elimination in exact arithmetic is the
right tool; canonical forms and correctness beat asymptotics here.
Besides the elimination core this module provides the algebra-level
primitives the representation theory rests on: closing a set of
matrices to a subalgebra, the trace-form radical (= Jacobson radical in
characteristic zero), and Newton-style idempotent lifting modulo a
nilpotent ideal.
"""

from __future__ import annotations

from .scalars import GQ, ONE, ZERO

Vector = list  # list[GQ]


class ExactMatrix:
    """Dense matrix over Q(i), row-major entries, immutable by convention."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        flat = [_as_gq(x) for r in rows for x in r]
        return ExactMatrix(n, m, flat)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        e = [ZERO] * (n * n)
        for k in range(n):
            e[k * n + k] = ONE
        return ExactMatrix(n, n, e)

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, [ZERO] * (rows * cols))

    # -- access ----------------------------------------------------------

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def col(self, c: int) -> Vector:
        return [self.entries[r * self.cols + c] for r in range(self.rows)]

    def row_list(self):
        return [self.row(r) for r in range(self.rows)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "ExactMatrix":
        c = _as_gq(c)
        return ExactMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [ZERO] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            orow = i * m
            for p in range(k):
                x = arow[p]
                if not x:
                    continue
                brow = p * m
                for j in range(m):
                    y = b[brow + j]
                    if y:
                        out[orow + j] = out[orow + j] + x * y
        return ExactMatrix(n, m, out)

    def matvec(self, v: Vector) -> Vector:
        if self.cols != len(v):
            raise ValueError("shape mismatch in matvec")
        out = []
        for i in range(self.rows):
            s = ZERO
            row = i * self.cols
            for j, x in enumerate(v):
                if x:
                    e = self.entries[row + j]
                    if e:
                        s = s + e * x
            out.append(s)
        return out

    def transpose(self) -> "ExactMatrix":
        out = [ZERO] * (self.rows * self.cols)
        for r in range(self.rows):
            for c in range(self.cols):
                out[c * self.rows + r] = self.entries[r * self.cols + c]
        return ExactMatrix(self.cols, self.rows, out)

    def trace(self) -> GQ:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        s = ZERO
        for k in range(self.rows):
            s = s + self.entries[k * self.cols + k]
        return s

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, (i,j) block = self[i,j] * other."""
        n, m = self.rows, self.cols
        p, q = other.rows, other.cols
        out = [ZERO] * (n * p * m * q)
        for i in range(n):
            for j in range(m):
                a = self.entries[i * m + j]
                if not a:
                    continue
                for r in range(p):
                    for c in range(q):
                        b = other.entries[r * q + c]
                        if b:
                            out[(i * p + r) * (m * q) + (j * q + c)] = a * b
        return ExactMatrix(n * p, m * q, out)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries)))

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        body = "; ".join(
            " ".join(str(x) for x in self.row(r)) for r in range(self.rows)
        )
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"


def _as_gq(x) -> GQ:
    return x if isinstance(x, GQ) else GQ(x)


# -- elimination core ------------------------------------------------------


def rref(rows: list[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form (in place on a copy); returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + [[ZERO] * ncols] * (len(rows) - r), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m.row_list())[1])


def kernel_basis(m: ExactMatrix) -> list[Vector]:
    """Basis of the right null space; len = cols - rank."""
    rows, pivots = rref(m.row_list())
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def solve(a: ExactMatrix, b: Vector):
    """One solution of a x = b, or None if inconsistent."""
    aug = [a.row(r) + [b[r]] for r in range(a.rows)]
    rows, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [ZERO] * a.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][a.cols]
    return x


def invert(m: ExactMatrix):
    """Inverse matrix, or None if singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    aug = [m.row(r) + ExactMatrix.identity(n).row(r) for r in range(n)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return ExactMatrix.from_rows([rows[r][n:] for r in range(n)])


class Subspace:
    """Incremental row space kept in reduced echelon form."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[Vector] = []
        self.pivots: list[int] = []

    def reduce(self, vec: Vector) -> Vector:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec: Vector) -> bool:
        """Insert vec; True iff it enlarged the space."""
        v = self.reduce(vec)
        p = next((c for c in range(self.ncols) if v[c]), None)
        if p is None:
            return False
        inv = v[p].inverse()
        v = [inv * x for x in v]
        for k in range(len(self.rows)):
            if self.rows[k][p]:
                f = self.rows[k][p]
                self.rows[k] = [a - f * b for a, b in zip(self.rows[k], v)]
        at = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, p)
        return True

    def contains(self, vec: Vector) -> bool:
        return not any(self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)


# -- matrix algebras ---------------------------------------------------------


def _vec(m: ExactMatrix) -> Vector:
    return m.entries


def subalgebra_closure(
    gens: list[ExactMatrix], unital: bool = True, max_dim: int | None = None
) -> list[ExactMatrix]:
    """Basis of the smallest (unital) subalgebra of n x n matrices
    containing gens, by saturating products against an echelon basis."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].rows
    for g in gens:
        if g.rows != n or g.cols != n:
            raise ValueError("generators must be square of equal size")
    cap = max_dim if max_dim is not None else n * n
    span = Subspace(n * n)
    basis: list[ExactMatrix] = []
    seeds = ([ExactMatrix.identity(n)] if unital else []) + list(gens)
    queue = []
    for s in seeds:
        if span.add(_vec(s)):
            basis.append(s)
            queue.append(s)
    while queue:
        new = queue.pop(0)
        for b in list(basis):
            for prod in (new * b, b * new):
                if span.add(_vec(prod)):
                    basis.append(prod)
                    queue.append(prod)
                    if len(basis) > cap:
                        raise RuntimeError("closure exceeded dimension cap")
    return basis


def check_product_closed(basis: list[ExactMatrix]) -> bool:
    n = basis[0].rows
    span = Subspace(n * n)
    for b in basis:
        span.add(_vec(b))
    return all(
        span.contains(_vec(x * y)) for x in basis for y in basis
    )


def trace_form_radical(basis: list[ExactMatrix]) -> list[ExactMatrix]:
    """Radical of the trace form t(x,y) = tr(xy) on the span of basis.

    For a matrix algebra over a characteristic-zero field this kernel
    is exactly the Jacobson radical.  The input must be closed under
    products (checked).
    """
    if not check_product_closed(basis):
        raise ValueError("basis does not span a product-closed algebra")
    d = len(basis)
    gram = ExactMatrix(
        d, d, [(basis[i] * basis[j]).trace() for i in range(d) for j in range(d)]
    )
    radical = []
    for coeffs in kernel_basis(gram):
        acc = ExactMatrix.zeros(basis[0].rows, basis[0].cols)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(c)
        radical.append(acc)
    return radical


def lift_idempotent(
    e0: ExactMatrix,
    radical: list[ExactMatrix],
    algebra: list[ExactMatrix] | None = None,
) -> ExactMatrix:
    """Lift an idempotent-mod-radical to an exact idempotent.

    Iterates e <- 3e^2 - 2e^3, which squares the defect e^2 - e at each
    step; with the defect in a nilpotent ideal this converges in
    log2(nilpotency index) steps.  Raises if e0 is not idempotent
    modulo the radical span or if iteration fails to converge.
    """
    n = e0.rows
    span = Subspace(n * n)
    for r in radical:
        span.add(_vec(r))
    defect = e0 * e0 - e0
    if not span.contains(_vec(defect)):
        raise ValueError("e0 is not idempotent modulo the radical")
    e = e0
    limit = max(1, n.bit_length() + 2)
    for _ in range(limit):
        e2 = e * e
        if e2 == e:
            return e
        e = e2.scale(3) - (e2 * e).scale(2)
    if e * e == e:
        return e
    raise RuntimeError("idempotent lifting did not converge; radical not nilpotent?")


def minimal_polynomial(m: ExactMatrix, reduce_mod: Subspace | None = None) -> list[GQ]:
    """Monic minimal polynomial of m, low-degree coefficients first.

    With reduce_mod set, computes the minimal polynomial of the image
    of m in the quotient of the matrix space by that subspace (used for
    endomorphisms modulo the radical).
    """
    n = m.rows
    power = ExactMatrix.identity(n)
    vecs: list[Vector] = []
    span = Subspace(n * n)
    for _ in range(n * n + 1):
        v = reduce_mod.reduce(_vec(power)) if reduce_mod else _vec(power)
        vecs.append(v)
        if not span.add(v):
            break
        power = power * m
    k = len(vecs) - 1  # vecs[k] depends on the earlier ones
    rows = [[vecs[j][c] for j in range(k)] for c in range(n * n)]
    coeffs = solve(ExactMatrix.from_rows(rows), [-x for x in vecs[k]])
    assert coeffs is not None
    return list(coeffs) + [ONE]
