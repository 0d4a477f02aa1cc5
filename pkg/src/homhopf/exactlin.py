"""Exact rational linear and multilinear algebra on immutable nested tuples.

Every value is built from `fractions.Fraction` scalars: vectors are tuples
of scalars, matrices are tuples of row tuples, rank-3 tensors are tuples of
matrices.  Three conventions are fixed package-wide:

* matrices are row-image maps: ``m[i][j]`` is the ``e_j``-coefficient of the
  image of basis vector ``e_i``; maps therefore compose left to right, and
  ``apply_map(m, v)[j] == sum_i v[i] * m[i][j]``;
* a multiplication tensor stores ``e_i . e_j = sum_k t[i][j][k] e_k`` and a
  comultiplication tensor stores ``delta(e_i) = sum t[i][j][k] e_j (x) e_k``;
* tensor-product indices flatten row-major: the pair ``(i, j)`` with a
  second factor of dimension ``m`` becomes ``i * m + j``.

All functions are pure and all results are hashable, so they are safe to
share between threads and to memoize.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import chain
from typing import Iterable, Iterator

from .errors import DimensionMismatch, SingularMatrixError

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]
Tensor3 = tuple[Matrix, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text: str) -> Fraction:
    """Parse an exact rational written as ``p`` or ``p/q`` (q > 0 after reduction)."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in scalar {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(text))


def format_scalar(value: Fraction) -> str:
    """Canonical text form of a scalar: ``p`` for integers, else ``p/q``."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# vectors


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vector_from_entries(n: int, entries: dict[int, Fraction]) -> Vector:
    return tuple(entries.get(i, ZERO) for i in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    if c == ONE:
        return v
    return tuple(c * a for a in v)


def nonzeros(v: Iterable[Fraction]) -> Iterator[tuple[int, Fraction]]:
    """Yield ``(index, value)`` for the nonzero entries of a vector."""
    for i, a in enumerate(v):
        if a:
            yield i, a


def add_scaled(acc: list[Fraction], c: Fraction, v: Vector) -> None:
    """In-place ``acc += c * v`` skipping zero entries."""
    if not c:
        return
    for i, a in enumerate(v):
        if a:
            acc[i] += c * a


# ---------------------------------------------------------------------------
# matrices


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def matrix_from_entries(rows: int, cols: int, entries: dict[tuple[int, int], Fraction]) -> Matrix:
    return tuple(tuple(entries.get((i, j), ZERO) for j in range(cols)) for i in range(rows))


def matrix_from_rows(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def mat_shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def apply_map(m: Matrix, v: Vector) -> Vector:
    """Image of the vector ``v`` under the row-image map ``m``."""
    if len(v) != len(m):
        raise DimensionMismatch(f"cannot apply {mat_shape(m)} map to length-{len(v)} vector")
    acc = [ZERO] * len(m[0])
    for i, c in nonzeros(v):
        add_scaled(acc, c, m[i])
    return tuple(acc)


def mat_compose(f: Matrix, g: Matrix) -> Matrix:
    """Row-image composition: apply ``f`` first, then ``g`` (matrix product f.g)."""
    if len(f[0]) != len(g):
        raise DimensionMismatch(
            f"cannot compose {mat_shape(f)} with {mat_shape(g)}: inner dimensions differ"
        )
    cols = len(g[0])
    out = []
    for row in f:
        acc = [ZERO] * cols
        for k, c in nonzeros(row):
            add_scaled(acc, c, g[k])
        out.append(tuple(acc))
    return tuple(out)


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals.

    Raises SingularMatrixError carrying the rank found when no inverse exists.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch(f"cannot invert non-square {mat_shape(m)} matrix")
    a = [list(row) for row in m]
    inv = [list(row) for row in identity(n)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv[rank], inv[pivot] = inv[pivot], inv[rank]
        p = a[rank][col]
        if p != ONE:
            a[rank] = [x / p for x in a[rank]]
            inv[rank] = [x / p for x in inv[rank]]
        for r in range(n):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[rank])]
                inv[r] = [x - c * y for x, y in zip(inv[r], inv[rank])]
        rank += 1
    if rank != n:
        raise SingularMatrixError(f"singular matrix: rank {rank} of {n}", rank=rank)
    return tuple(tuple(row) for row in inv)


def is_invertible(m: Matrix) -> bool:
    try:
        mat_inverse(m)
    except SingularMatrixError:
        return False
    return True


@lru_cache(maxsize=None)
def _cached_inverse(m: Matrix) -> Matrix:
    return mat_inverse(m)


@lru_cache(maxsize=None)
def alpha_power(alpha: Matrix, k: int) -> Matrix:
    """Exact k-th power of a structure map, memoized per ``(alpha, k)``.

    Negative powers require invertibility and raise SingularMatrixError
    otherwise.  ``alpha_power(a, 0)`` is the identity.
    """
    n = len(alpha)
    if k == 0:
        return identity(n)
    if k < 0:
        return alpha_power(_cached_inverse(alpha), -k)
    if k == 1:
        return alpha
    return mat_compose(alpha_power(alpha, k - 1), alpha)


def kron(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product under row-major pair indexing ``p = i * dim(g) + j``."""
    out = []
    for frow in f:
        for grow in g:
            out.append(tuple(a * b for a in frow for b in grow))
    return tuple(out)


# ---------------------------------------------------------------------------
# rank-3 tensors


def tensor3_from_entries(
    shape: tuple[int, int, int], entries: dict[tuple[int, int, int], Fraction]
) -> Tensor3:
    n1, n2, n3 = shape
    return tuple(
        tuple(tuple(entries.get((i, j, k), ZERO) for k in range(n3)) for j in range(n2))
        for i in range(n1)
    )


def tensor3_shape(t: Tensor3) -> tuple[int, int, int]:
    return len(t), len(t[0]) if t else 0, len(t[0][0]) if t and t[0] else 0


def bilinear_apply(t: Tensor3, x: Vector, y: Vector) -> Vector:
    """Evaluate the bilinear map ``t`` on a pair of vectors: sum x_i y_j t[i][j][.]."""
    n1, n2, n3 = tensor3_shape(t)
    if len(x) != n1 or len(y) != n2:
        raise DimensionMismatch(
            f"bilinear map of shape {(n1, n2, n3)} applied to lengths {len(x)}, {len(y)}"
        )
    acc = [ZERO] * n3
    for i, xi in nonzeros(x):
        ti = t[i]
        for j, yj in nonzeros(y):
            add_scaled(acc, xi * yj, ti[j])
    return tuple(acc)


def tensor3_entries(t: Tensor3) -> Iterator[tuple[int, int, int, Fraction]]:
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            for k, c in enumerate(row):
                if c:
                    yield i, j, k, c


def flatten_pair(row_of_rows: Matrix) -> Vector:
    """Flatten an n2 x n3 coefficient block into a vector on the product space."""
    return tuple(chain.from_iterable(row_of_rows))


def comul_vector(comul: Tensor3, i: int) -> Vector:
    """Coefficients of ``delta(e_i)`` as a dense vector on the tensor square."""
    return flatten_pair(comul[i])


def mul_matrix(mul: Tensor3) -> Matrix:
    """The multiplication tensor as a row-image map ``H (x) H -> H``."""
    return tuple(chain.from_iterable(mul))


def comul_matrix(comul: Tensor3) -> Matrix:
    """The comultiplication tensor as a row-image map ``H -> H (x) H``."""
    return tuple(flatten_pair(plane) for plane in comul)
