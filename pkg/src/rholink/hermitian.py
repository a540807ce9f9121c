"""Exact Hermitian signature, complex symplectic spaces and Maslov triple indices.

The signature routine is a congruence diagonalization that works for any
exact scalar type providing field arithmetic plus ``conjugate``,
``is_zero`` and ``real_sign`` (Gaussian rationals here, cyclotomic numbers
in the signature-function module).  No eigenvalues and no floating point:
the count of positive and negative diagonal entries after congruence is
the signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gaussian import G_I, G_ONE, G_ZERO, GaussianRational

Vector = tuple[GaussianRational, ...]


# -- generic congruence diagonalization --------------------------------------


def signature_of_entries(entries: Sequence[Sequence]) -> int:
    """Signature (#positive - #negative diagonal values) of a Hermitian matrix.

    Works in place on a copy.  Pivots are taken in row order (first nonzero
    diagonal entry); when the whole remaining diagonal vanishes, the first
    nonzero off-diagonal entry a = A[i][j] is used to create the positive
    pivot 2*|a|^2 via the basis change e_i -> e_i + conj(a)*e_j.
    """
    n = len(entries)
    a = [list(row) for row in entries]
    live = list(range(n))
    sig = 0
    while live:
        pivot = next((i for i in live if not a[i][i].is_zero()), None)
        if pivot is None:
            spot = next(
                ((i, j) for i in live for j in live if not a[i][j].is_zero()), None
            )
            if spot is None:
                break  # remaining block is zero: contributes nothing
            i, j = spot
            t = a[i][j].conjugate()
            tc = t.conjugate()
            for k in live:
                a[i][k] = a[i][k] + tc * a[j][k]
            for k in live:
                a[k][i] = a[k][i] + a[k][j] * t
            continue
        d = a[pivot][pivot]
        sig += d.real_sign()
        live.remove(pivot)
        col = {j: a[j][pivot] / d for j in live}
        for j in live:
            cj = col[j]
            if cj.is_zero():
                continue
            row_p = a[pivot]
            row_j = a[j]
            for k in live:
                row_j[k] = row_j[k] - cj * row_p[k]
    return sig


# -- Hermitian matrices over the Gaussian rationals ---------------------------


@dataclass(frozen=True)
class HermitianMatrix:
    """Square matrix equal to its conjugate transpose (checked on construction)."""

    entries: tuple[Vector, ...]

    def __init__(self, entries: Sequence[Sequence[GaussianRational]]):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Hermitian matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if rows[j][i] != rows[i][j].conjugate():
                    raise ValueError(
                        f"not Hermitian at ({i},{j}): {rows[i][j]} vs {rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def signature(self) -> int:
        return signature_of_entries(self.entries)


def hermitian_from_rational_symmetric(rows: Sequence[Sequence]) -> HermitianMatrix:
    """Lift a symmetric matrix of rationals to a Hermitian one."""
    return HermitianMatrix(
        [[GaussianRational(x) for x in row] for row in rows]
    )


def signature(h: HermitianMatrix) -> int:
    """Signature of a Hermitian matrix (zero eigenvalues contribute 0)."""
    return h.signature()


def signature_of_rational_symmetric(rows: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational matrix (framed linking matrices etc.)."""
    return hermitian_from_rational_symmetric(rows).signature()


# -- exact linear algebra on row vectors -------------------------------------


def _rref(rows: list[list[GaussianRational]]) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form; returns nonzero rows and pivot columns."""
    rows = [row[:] for row in rows]
    m = len(rows)
    width = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(width):
        src = next((i for i in range(r, m) if not rows[i][c].is_zero()), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = G_ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def row_space(vectors: Sequence[Vector]) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given vectors."""
    if not vectors:
        return []
    reduced, _ = _rref([list(v) for v in vectors])
    return [tuple(row) for row in reduced]


def rank(vectors: Sequence[Vector]) -> int:
    return len(row_space(vectors))


def same_span(u: Sequence[Vector], w: Sequence[Vector]) -> bool:
    return row_space(u) == row_space(w)


def sum_span(u: Sequence[Vector], w: Sequence[Vector]) -> list[Vector]:
    return row_space(list(u) + list(w))


def intersect_spans(u: Sequence[Vector], w: Sequence[Vector]) -> list[Vector]:
    """Basis of span(u) & span(w) by the Zassenhaus double-block reduction."""
    if not u or not w:
        return []
    width = len(u[0])
    block = [list(v) + list(v) for v in u] + [list(v) + [G_ZERO] * width for v in w]
    reduced, _ = _rref(block)
    out = []
    for row in reduced:
        if all(x.is_zero() for x in row[:width]):
            tail = row[width:]
            if not all(x.is_zero() for x in tail):
                out.append(tuple(tail))
    return row_space(out)


def solve_combination(
    columns: Sequence[Vector], target: Vector
) -> list[GaussianRational] | None:
    """One solution x of sum_i x_i * columns[i] = target, or None."""
    height = len(target)
    width = len(columns)
    aug = [[columns[j][i] for j in range(width)] + [target[i]] for i in range(height)]
    reduced, pivots = _rref(aug)
    if width in pivots:
        return None  # inconsistent
    x = [G_ZERO] * width
    for row, c in zip(reduced, pivots):
        x[c] = row[width]
    return x


def scale_vector(c: GaussianRational, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def add_vectors(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


# -- symplectic spaces and Lagrangians ----------------------------------------


def _det(rows: list[list[GaussianRational]]) -> GaussianRational:
    """Exact determinant by fraction-full Gaussian elimination."""
    a = [row[:] for row in rows]
    n = len(a)
    det = G_ONE
    for c in range(n):
        src = next((i for i in range(c, n) if not a[i][c].is_zero()), None)
        if src is None:
            return G_ZERO
        if src != c:
            a[c], a[src] = a[src], a[c]
            det = -det
        det = det * a[c][c]
        inv = G_ONE / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if not f.is_zero():
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


@dataclass(frozen=True)
class SymplecticSpace:
    """C^(2m) with a nondegenerate skew-Hermitian form, conjugate-linear in
    the first slot: form(x, y) = x^H . omega . y."""

    omega: tuple[Vector, ...]

    def __init__(self, omega: Sequence[Sequence[GaussianRational]]):
        rows = tuple(tuple(row) for row in omega)
        n = len(rows)
        if n % 2 != 0:
            raise ValueError("symplectic space must have even dimension")
        for row in rows:
            if len(row) != n:
                raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[j][i] != -rows[i][j].conjugate():
                    raise ValueError(f"form is not skew-Hermitian at ({i},{j})")
        if _det([list(r) for r in rows]).is_zero():
            raise ValueError("form is degenerate")
        object.__setattr__(self, "omega", rows)

    @property
    def dim(self) -> int:
        return len(self.omega)

    def form(self, u: Vector, v: Vector) -> GaussianRational:
        total = G_ZERO
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            uc = ui.conjugate()
            row = self.omega[i]
            for j, vj in enumerate(v):
                if not vj.is_zero() and not row[j].is_zero():
                    total = total + uc * row[j] * vj
        return total

    @staticmethod
    def standard(m: int) -> "SymplecticSpace":
        """Basis (mu_1..mu_m, la_1..la_m) with form(mu_i, la_j) = -delta_ij."""
        n = 2 * m
        rows = [[G_ZERO] * n for _ in range(n)]
        for i in range(m):
            rows[i][m + i] = -G_ONE
            rows[m + i][i] = G_ONE
        return SymplecticSpace(rows)


def is_lagrangian(space: SymplecticSpace, vectors: Sequence[Vector]) -> bool:
    """True iff the span equals its own orthogonal complement under the form.

    Since the form is nondegenerate this is equivalent to: the span is
    isotropic and has half the ambient dimension.
    """
    for v in vectors:
        if len(v) != space.dim:
            raise ValueError("vector dimension does not match the space")
    basis = row_space(vectors)
    if 2 * len(basis) != space.dim:
        return False
    return all(
        space.form(u, v).is_zero() for i, u in enumerate(basis) for v in basis[i:]
    )


@dataclass(frozen=True)
class Lagrangian:
    """A Lagrangian subspace, validated on construction."""

    space: SymplecticSpace
    basis: tuple[Vector, ...]

    def __init__(self, space: SymplecticSpace, vectors: Sequence[Sequence[GaussianRational]]):
        vecs = [tuple(v) for v in vectors]
        if rank(vecs) != len(vecs):
            raise ValueError("Lagrangian basis vectors are linearly dependent")
        if not is_lagrangian(space, vecs):
            raise ValueError("subspace is not Lagrangian")
        # the given basis is kept as-is: downstream results must not depend
        # on any canonical choice, and tests exercise exactly that
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "basis", tuple(vecs))


def span_lagrangian(space: SymplecticSpace, vectors: Sequence[Sequence]) -> Lagrangian:
    """Build a Lagrangian from integer/rational/Gaussian entries."""
    return Lagrangian(
        space,
        [
            [x if isinstance(x, GaussianRational) else GaussianRational(x) for x in v]
            for v in vectors
        ],
    )


def _check_same_space(space: SymplecticSpace, *lagrangians: Lagrangian) -> None:
    for lag in lagrangians:
        if lag.space.omega != space.omega:
            raise ValueError("Lagrangian does not live in the given space")


def triple_form(
    space: SymplecticSpace, l1: Lagrangian, l2: Lagrangian, l3: Lagrangian
) -> HermitianMatrix:
    """The Hermitian form psi on (L1+L2) & L3 whose signature is the triple index.

    Each basis vector v of the intersection is split as v = a1 + a2 with
    a1 in L1 and a2 in L2 (any solution; the form does not depend on the
    choice), and psi(v, w) = form(a1(v), a2(w)).
    """
    _check_same_space(space, l1, l2, l3)
    both = sum_span(l1.basis, l2.basis)
    inter = intersect_spans(both, l3.basis)
    columns = list(l1.basis) + list(l2.basis)
    parts1 = []
    parts2 = []
    for v in inter:
        x = solve_combination(columns, v)
        if x is None:  # cannot happen: v lies in L1 + L2 by construction
            raise RuntimeError("decomposition v = a1 + a2 failed")
        a1 = tuple(
            sum((x[i] * l1.basis[i][c] for i in range(len(l1.basis))), G_ZERO)
            for c in range(space.dim)
        )
        a2 = add_vectors(v, scale_vector(-G_ONE, a1))
        parts1.append(a1)
        parts2.append(a2)
    psi = [
        [space.form(parts1[i], parts2[j]) for j in range(len(inter))]
        for i in range(len(inter))
    ]
    return HermitianMatrix(psi)


def maslov_triple(
    space: SymplecticSpace, l1: Lagrangian, l2: Lagrangian, l3: Lagrangian
) -> int:
    """Maslov triple index: the signature of the form built by triple_form."""
    return triple_form(space, l1, l2, l3).signature()


def symplectic_from_hermitian(h: HermitianMatrix) -> SymplecticSpace:
    """Twist a nondegenerate Hermitian form by i to get a symplectic space.

    This is the middle-degree convention for ambient manifolds of dimension
    4k+1; the 3-manifold computations in this package never need it, so it
    is provided for completeness and only lightly exercised.
    """
    if h.n % 2 != 0:
        raise ValueError("need even rank to form a symplectic space")
    rows = [[G_I * x for x in row] for row in h.entries]
    return SymplecticSpace(rows)
