"""Hom-algebraic domain types and the axiom checkers.

Every checker quantifies over basis multi-indices (multilinearity reduces the
universally quantified identities to basis cases), compares exact vectors,
and returns a CheckReport.  A failing identity is data, not an error: the
report entry records the lexicographically first failing index together with
both sides' full coefficient vectors.

Structural invariants (shapes, invertibility of structure maps) are enforced
at construction; algebraic axioms are only ever checker verdicts, so broken
objects can be built deliberately to exercise the checkers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatch, SingularMatrixError
from .exactlin import (
    ONE,
    ZERO,
    Matrix,
    Tensor3,
    Vector,
    add_scaled,
    alpha_power,
    apply_map,
    bilinear_apply,
    comul_vector,
    identity,
    is_invertible,
    kron,
    mat_compose,
    mat_shape,
    nonzeros,
    tensor3_shape,
)

# ---------------------------------------------------------------------------
# domain types


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DimensionMismatch(message)


@dataclass(frozen=True)
class HomAlgebra:
    """A unital Hom-associative algebra by structure constants.

    ``mul[i][j][k]`` is the ``e_k``-coefficient of ``e_i . e_j``; ``unit`` is
    the coordinate vector of the unit element; ``alpha`` is the (invertible)
    structure map as a row-image matrix.
    """

    dim: int
    mul: Tensor3
    unit: Vector
    alpha: Matrix

    def __post_init__(self):
        n = self.dim
        _require(tensor3_shape(self.mul) == (n, n, n), "multiplication tensor shape")
        _require(len(self.unit) == n, "unit vector length")
        _require(mat_shape(self.alpha) == (n, n), "structure map shape")
        if not is_invertible(self.alpha):
            raise SingularMatrixError("structure map must be invertible")


@dataclass(frozen=True)
class HomCoalgebra:
    """A counital Hom-coassociative coalgebra by structure constants.

    ``comul[i][j][k]`` is the ``e_j (x) e_k``-coefficient of ``delta(e_i)``;
    ``counit`` is the counit as a covector.
    """

    dim: int
    comul: Tensor3
    counit: Vector
    alpha: Matrix

    def __post_init__(self):
        n = self.dim
        _require(tensor3_shape(self.comul) == (n, n, n), "comultiplication tensor shape")
        _require(len(self.counit) == n, "counit covector length")
        _require(mat_shape(self.alpha) == (n, n), "structure map shape")
        if not is_invertible(self.alpha):
            raise SingularMatrixError("structure map must be invertible")


@dataclass(frozen=True)
class HomBialgebra:
    algebra: HomAlgebra
    coalgebra: HomCoalgebra

    def __post_init__(self):
        _require(self.algebra.dim == self.coalgebra.dim, "bialgebra factor dimensions")
        _require(self.algebra.alpha == self.coalgebra.alpha, "bialgebra structure maps")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mul(self) -> Tensor3:
        return self.algebra.mul

    @property
    def unit(self) -> Vector:
        return self.algebra.unit

    @property
    def comul(self) -> Tensor3:
        return self.coalgebra.comul

    @property
    def counit(self) -> Vector:
        return self.coalgebra.counit

    @property
    def alpha(self) -> Matrix:
        return self.algebra.alpha


@dataclass(frozen=True)
class HomHopfAlgebra:
    bialgebra: HomBialgebra
    antipode: Matrix

    def __post_init__(self):
        n = self.bialgebra.dim
        _require(mat_shape(self.antipode) == (n, n), "antipode shape")

    @property
    def dim(self) -> int:
        return self.bialgebra.dim

    @property
    def mul(self) -> Tensor3:
        return self.bialgebra.mul

    @property
    def unit(self) -> Vector:
        return self.bialgebra.unit

    @property
    def comul(self) -> Tensor3:
        return self.bialgebra.comul

    @property
    def counit(self) -> Vector:
        return self.bialgebra.counit

    @property
    def alpha(self) -> Matrix:
        return self.bialgebra.alpha

    @property
    def algebra(self) -> HomAlgebra:
        return self.bialgebra.algebra

    @property
    def coalgebra(self) -> HomCoalgebra:
        return self.bialgebra.coalgebra


def hopf_algebra(
    dim: int,
    mul: Tensor3,
    unit: Vector,
    comul: Tensor3,
    counit: Vector,
    alpha: Matrix,
    antipode: Matrix,
) -> HomHopfAlgebra:
    """Assemble a HomHopfAlgebra from flat structure constants."""
    return HomHopfAlgebra(
        HomBialgebra(
            HomAlgebra(dim, mul, unit, alpha),
            HomCoalgebra(dim, comul, counit, alpha),
        ),
        antipode,
    )


def algebra_of(obj) -> HomAlgebra:
    """Coerce any of the structure types to its underlying Hom-algebra."""
    if isinstance(obj, HomAlgebra):
        return obj
    if isinstance(obj, HomBialgebra):
        return obj.algebra
    if isinstance(obj, HomHopfAlgebra):
        return obj.bialgebra.algebra
    raise TypeError(f"no algebra structure on {type(obj).__name__}")


def coalgebra_of(obj) -> HomCoalgebra:
    """Coerce any of the structure types to its underlying Hom-coalgebra."""
    if isinstance(obj, HomCoalgebra):
        return obj
    if isinstance(obj, HomBialgebra):
        return obj.coalgebra
    if isinstance(obj, HomHopfAlgebra):
        return obj.bialgebra.coalgebra
    raise TypeError(f"no coalgebra structure on {type(obj).__name__}")


def bialgebra_of(obj) -> HomBialgebra:
    if isinstance(obj, HomBialgebra):
        return obj
    if isinstance(obj, HomHopfAlgebra):
        return obj.bialgebra
    raise TypeError(f"no bialgebra structure on {type(obj).__name__}")


@dataclass(frozen=True)
class ModuleAction:
    """A left action of ``actor`` on ``carrier``: ``act[h][m][m']``."""

    actor: object
    carrier: object
    act: Tensor3

    def __post_init__(self):
        na, nc = self.actor.dim, self.carrier.dim
        _require(tensor3_shape(self.act) == (na, nc, nc), "action tensor shape")
        if not is_invertible(self.carrier.alpha):
            raise SingularMatrixError("carrier structure map must be invertible")


@dataclass(frozen=True)
class ComoduleCoaction:
    """A right coaction ``rho: M -> M (x) C`` of ``coactor`` on ``carrier``.

    ``coact[m][m'][c]`` is the ``e_m' (x) e_c``-coefficient of ``rho(e_m)``.
    """

    coactor: object
    carrier: object
    coact: Tensor3

    def __post_init__(self):
        nc, nm = self.coactor.dim, self.carrier.dim
        _require(tensor3_shape(self.coact) == (nm, nm, nc), "coaction tensor shape")


@dataclass(frozen=True)
class PairingForm:
    """A non-degenerate bilinear form linking two Hom-Hopf algebras.

    ``gram[i][j]`` is the pairing of the i-th basis vector of ``left`` with
    the j-th basis vector of ``right``.
    """

    left: HomHopfAlgebra
    right: HomHopfAlgebra
    gram: Matrix

    def __post_init__(self):
        _require(mat_shape(self.gram) == (self.left.dim, self.right.dim), "gram shape")
        if not is_invertible(self.gram):
            raise SingularMatrixError("pairing must be non-degenerate")


@dataclass(frozen=True)
class TwoCocycle:
    """A bilinear form on a Hom-bialgebra, tagged left or right."""

    algebra: HomBialgebra
    gram: Matrix
    side: str

    def __post_init__(self):
        n = self.algebra.dim
        _require(mat_shape(self.gram) == (n, n), "cocycle gram shape")
        if self.side not in ("left", "right"):
            raise ValueError(f"cocycle side must be 'left' or 'right', got {self.side!r}")


@dataclass(frozen=True)
class RMatrix:
    """An element ``R = sum entries[i][j] e_i (x) e_j`` of ``H (x) H``."""

    host: HomBialgebra
    entries: Matrix

    def __post_init__(self):
        n = self.host.dim
        _require(mat_shape(self.entries) == (n, n), "R-matrix shape")

    def as_vector(self) -> Vector:
        return tuple(c for row in self.entries for c in row)


@dataclass(frozen=True)
class MatchedPairData:
    """Two Hom-bialgebras acting on each other.

    ``left_action[h][a][a']`` is the A-valued action of H on A and
    ``right_action[h][a][h']`` the H-valued action of A on H.
    """

    A: object
    H: object
    left_action: Tensor3
    right_action: Tensor3

    def __post_init__(self):
        na, nh = self.A.dim, self.H.dim
        _require(tensor3_shape(self.left_action) == (nh, na, na), "left action shape")
        _require(tensor3_shape(self.right_action) == (nh, na, nh), "right action shape")


@dataclass(frozen=True)
class Witness:
    index: tuple[int, ...]
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class CheckEntry:
    axiom_id: str
    passed: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.passed == (self.witness is not None):
            raise ValueError("a check entry carries a witness exactly when it fails")


def make_entry(axiom_id: str, passed: bool, index=(), lhs=(), rhs=()) -> CheckEntry:
    """A report entry; failures always carry a witness (possibly empty)."""
    if passed:
        return CheckEntry(axiom_id, True)
    return CheckEntry(axiom_id, False, Witness(tuple(index), tuple(lhs), tuple(rhs)))


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[CheckEntry, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckEntry, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def entry(self, axiom_id: str) -> CheckEntry:
        for c in self.checks:
            if c.axiom_id == axiom_id:
                return c
        raise KeyError(axiom_id)


def merge_reports(*reports: CheckReport) -> CheckReport:
    checks: list[CheckEntry] = []
    for r in reports:
        checks.extend(r.checks)
    return CheckReport(tuple(checks))


def _sweep(axiom_id: str, indices, lhs_fn, rhs_fn) -> CheckEntry:
    """Compare two basis-indexed expressions, recording the first failure."""
    for idx in indices:
        lhs = lhs_fn(*idx)
        rhs = rhs_fn(*idx)
        if lhs != rhs:
            return CheckEntry(axiom_id, False, Witness(idx, tuple(lhs), tuple(rhs)))
    return CheckEntry(axiom_id, True)


def _scalar(x: Fraction) -> Vector:
    return (x,)


# ---------------------------------------------------------------------------
# products on tensor powers

# The tensor square of a Hom-algebra carries the componentwise product with
# structure map alpha (x) alpha; the tensor cube analogously.  The helpers
# below evaluate those products on dense vectors, skipping zero entries.


def tensor_square_product(mul: Tensor3, n: int, u: Vector, v: Vector) -> Vector:
    out = [ZERO] * (n * n)
    for p, cu in nonzeros(u):
        p0, p1 = divmod(p, n)
        for q, cv in nonzeros(v):
            q0, q1 = divmod(q, n)
            c = cu * cv
            for a, ca in nonzeros(mul[p0][q0]):
                base = a * n
                cca = c * ca
                for b, cb in nonzeros(mul[p1][q1]):
                    out[base + b] += cca * cb
    return tuple(out)


def tensor_cube_product(mul: Tensor3, n: int, u: Vector, v: Vector) -> Vector:
    n2 = n * n
    out = [ZERO] * (n * n2)
    for p, cu in nonzeros(u):
        p0, rest = divmod(p, n2)
        p1, p2 = divmod(rest, n)
        for q, cv in nonzeros(v):
            q0, qrest = divmod(q, n2)
            q1, q2 = divmod(qrest, n)
            c = cu * cv
            for a, ca in nonzeros(mul[p0][q0]):
                ca_ = c * ca
                for b, cb in nonzeros(mul[p1][q1]):
                    cb_ = ca_ * cb
                    base = a * n2 + b * n
                    for d, cd in nonzeros(mul[p2][q2]):
                        out[base + d] += cb_ * cd
    return tuple(out)


def comul_of_vector(comul: Tensor3, v: Vector, n: int) -> Vector:
    """Coefficients of ``delta(v)`` on the tensor square."""
    out = [ZERO] * (n * n)
    for i, c in nonzeros(v):
        add_scaled(out, c, comul_vector(comul, i))
    return tuple(out)


# ---------------------------------------------------------------------------
# checkers


def check_hom_algebra(obj) -> CheckReport:
    """Unital Hom-associativity: alpha multiplicativity, twisted units and
    the Hom-associative law alpha(a)(bc) = (ab)alpha(c)."""
    A = algebra_of(obj)
    n, mul, unit, alpha = A.dim, A.mul, A.unit, A.alpha
    rng = range(n)

    checks = [
        _sweep(
            "algebra.alpha-multiplicative",
            product(rng, rng),
            lambda i, j: apply_map(alpha, mul[i][j]),
            lambda i, j: bilinear_apply(mul, alpha[i], alpha[j]),
        ),
        _sweep(
            "algebra.alpha-fixes-unit",
            [()],
            lambda: apply_map(alpha, unit),
            lambda: unit,
        ),
        _sweep(
            "algebra.left-unit",
            product(rng),
            lambda i: bilinear_apply(mul, unit, _basis(n, i)),
            lambda i: alpha[i],
        ),
        _sweep(
            "algebra.right-unit",
            product(rng),
            lambda i: bilinear_apply(mul, _basis(n, i), unit),
            lambda i: alpha[i],
        ),
        _sweep(
            "algebra.hom-associative",
            product(rng, rng, rng),
            lambda i, j, k: bilinear_apply(mul, alpha[i], mul[j][k]),
            lambda i, j, k: bilinear_apply(mul, mul[i][j], alpha[k]),
        ),
    ]
    return CheckReport(tuple(checks))


def _basis(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def check_hom_coalgebra(obj) -> CheckReport:
    """Counital Hom-coassociativity of a coalgebra."""
    C = coalgebra_of(obj)
    n, comul, counit, alpha = C.dim, C.comul, C.counit, C.alpha
    rng = range(n)

    def counit_of(v: Vector) -> Fraction:
        return sum((c * counit[i] for i, c in nonzeros(v)), ZERO)

    def left_counit(i):
        out = [ZERO] * n
        for j, row in enumerate(comul[i]):
            if counit[j]:
                add_scaled(out, counit[j], row)
        return tuple(out)

    def right_counit(i):
        out = [ZERO] * n
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                if counit[k]:
                    out[j] += c * counit[k]
        return tuple(out)

    def comul_alpha(i):
        out = [ZERO] * (n * n)
        for t, c in nonzeros(alpha[i]):
            add_scaled(out, c, comul_vector(comul, t))
        return tuple(out)

    def alpha_alpha_comul(i):
        out = [ZERO] * (n * n)
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                for a, ca in nonzeros(alpha[j]):
                    base = a * n
                    cca = c * ca
                    for b, cb in nonzeros(alpha[k]):
                        out[base + b] += cca * cb
        return tuple(out)

    def coassoc_left(i):
        # (delta (x) alpha) of delta(e_i)
        out = [ZERO] * (n * n * n)
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                dj = comul_vector(comul, j)
                for p, cp in nonzeros(dj):
                    base = p * n
                    for q, cq in nonzeros(alpha[k]):
                        out[base + q] += c * cp * cq
        return tuple(out)

    def coassoc_right(i):
        # (alpha (x) delta) of delta(e_i)
        out = [ZERO] * (n * n * n)
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                dk = comul_vector(comul, k)
                for p, cp in nonzeros(alpha[j]):
                    base = p * n * n
                    for q, cq in nonzeros(dk):
                        out[base + q] += c * cp * cq
        return tuple(out)

    checks = [
        _sweep(
            "coalgebra.counit-alpha",
            product(rng),
            lambda i: _scalar(counit_of(alpha[i])),
            lambda i: _scalar(counit[i]),
        ),
        _sweep("coalgebra.alpha-comultiplicative", product(rng), comul_alpha, alpha_alpha_comul),
        _sweep("coalgebra.left-counit", product(rng), left_counit, lambda i: alpha[i]),
        _sweep("coalgebra.right-counit", product(rng), right_counit, lambda i: alpha[i]),
        _sweep("coalgebra.hom-coassociative", product(rng), coassoc_left, coassoc_right),
    ]
    return CheckReport(tuple(checks))


def check_hom_bialgebra(obj) -> CheckReport:
    """Comultiplication and counit are morphisms of Hom-algebras."""
    B = bialgebra_of(obj)
    n, mul, unit, comul, counit = B.dim, B.mul, B.unit, B.comul, B.counit
    rng = range(n)

    def counit_of(v: Vector) -> Fraction:
        return sum((c * counit[i] for i, c in nonzeros(v)), ZERO)

    unit_sq = tuple(a * b for a in unit for b in unit)

    checks = [
        _sweep(
            "bialgebra.comul-multiplicative",
            product(rng, rng),
            lambda i, j: comul_of_vector(comul, mul[i][j], n),
            lambda i, j: tensor_square_product(
                mul, n, comul_vector(comul, i), comul_vector(comul, j)
            ),
        ),
        _sweep(
            "bialgebra.comul-unit",
            [()],
            lambda: comul_of_vector(comul, unit, n),
            lambda: unit_sq,
        ),
        _sweep(
            "bialgebra.counit-multiplicative",
            product(rng, rng),
            lambda i, j: _scalar(counit_of(mul[i][j])),
            lambda i, j: _scalar(counit[i] * counit[j]),
        ),
        _sweep(
            "bialgebra.counit-unit",
            [()],
            lambda: _scalar(counit_of(unit)),
            lambda: _scalar(ONE),
        ),
    ]
    return CheckReport(tuple(checks))


def check_antipode(H: HomHopfAlgebra) -> CheckReport:
    """Antipode identities plus the derived anti-(co)morphism properties."""
    n, mul, unit, comul, counit, alpha, S = (
        H.dim,
        H.mul,
        H.unit,
        H.comul,
        H.counit,
        H.alpha,
        H.antipode,
    )
    rng = range(n)

    def convolve_left(i):
        # S(h_1) h_2
        out = [ZERO] * n
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                add_scaled(out, c, bilinear_apply(mul, S[j], _basis(n, k)))
        return tuple(out)

    def convolve_right(i):
        # h_1 S(h_2)
        out = [ZERO] * n
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                add_scaled(out, c, bilinear_apply(mul, _basis(n, j), S[k]))
        return tuple(out)

    def anti_comul_lhs(i):
        return comul_of_vector(comul, S[i], n)

    def anti_comul_rhs(i):
        # S(h_2) (x) S(h_1)
        out = [ZERO] * (n * n)
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                for a, ca in nonzeros(S[k]):
                    base = a * n
                    for b, cb in nonzeros(S[j]):
                        out[base + b] += c * ca * cb
        return tuple(out)

    checks = [
        _sweep(
            "antipode.commutes-with-alpha",
            product(rng),
            lambda i: apply_map(S, alpha[i]),
            lambda i: apply_map(alpha, S[i]),
        ),
        _sweep(
            "antipode.left",
            product(rng),
            convolve_left,
            lambda i: tuple(counit[i] * u for u in unit),
        ),
        _sweep(
            "antipode.right",
            product(rng),
            convolve_right,
            lambda i: tuple(counit[i] * u for u in unit),
        ),
        _sweep("antipode.anti-comultiplicative", product(rng), anti_comul_lhs, anti_comul_rhs),
        _sweep(
            "antipode.anti-multiplicative",
            product(rng, rng),
            lambda i, j: apply_map(S, mul[i][j]),
            lambda i, j: bilinear_apply(mul, S[j], S[i]),
        ),
        _sweep(
            "antipode.preserves-counit",
            product(rng),
            lambda i: _scalar(sum((c * counit[t] for t, c in nonzeros(S[i])), ZERO)),
            lambda i: _scalar(counit[i]),
        ),
    ]
    return CheckReport(tuple(checks))


def run_hopf_suite(H: HomHopfAlgebra) -> CheckReport:
    """Full chain: algebra, coalgebra, bialgebra compatibility, antipode."""
    return merge_reports(
        check_hom_algebra(H),
        check_hom_coalgebra(H),
        check_hom_bialgebra(H),
        check_antipode(H),
    )


def check_module(m: ModuleAction) -> CheckReport:
    """Left module axioms for an action of a Hom-algebra."""
    act = m.act
    actor = algebra_of(m.actor)
    alpha_m = m.carrier.alpha
    na, nm = actor.dim, m.carrier.dim
    ra, rm = range(na), range(nm)

    checks = [
        _sweep(
            "module.unit-acts-as-alpha",
            product(rm),
            lambda i: bilinear_apply(act, actor.unit, _basis(nm, i)),
            lambda i: alpha_m[i],
        ),
        _sweep(
            "module.alpha-equivariant",
            product(ra, rm),
            lambda a, i: apply_map(alpha_m, act[a][i]),
            lambda a, i: bilinear_apply(act, actor.alpha[a], alpha_m[i]),
        ),
        _sweep(
            "module.hom-associative",
            product(ra, ra, rm),
            lambda a, b, i: bilinear_apply(act, actor.alpha[a], act[b][i]),
            lambda a, b, i: bilinear_apply(act, actor.mul[a][b], alpha_m[i]),
        ),
    ]
    return CheckReport(tuple(checks))


def check_module_algebra(m: ModuleAction) -> CheckReport:
    """Module axioms plus the module Hom-algebra compatibilities."""
    actor = bialgebra_of(m.actor)
    carrier = algebra_of(m.carrier)
    act = m.act
    na, nc = actor.dim, carrier.dim
    alpha2 = alpha_power(actor.alpha, 2)

    def acts_on_product(h, a, b):
        return bilinear_apply(act, alpha2[h], carrier.mul[a][b])

    def product_of_actions(h, a, b):
        out = [ZERO] * nc
        for j, row in enumerate(actor.comul[h]):
            for k, c in nonzeros(row):
                add_scaled(out, c, bilinear_apply(carrier.mul, act[j][a], act[k][b]))
        return tuple(out)

    checks = list(check_module(m).checks)
    checks.append(
        _sweep(
            "module-algebra.multiplicative",
            product(range(na), range(nc), range(nc)),
            acts_on_product,
            product_of_actions,
        )
    )
    checks.append(
        _sweep(
            "module-algebra.unit",
            product(range(na)),
            lambda h: bilinear_apply(act, _basis(na, h), carrier.unit),
            lambda h: tuple(actor.counit[h] * u for u in carrier.unit),
        )
    )
    return CheckReport(tuple(checks))


def check_comodule(c: ComoduleCoaction) -> CheckReport:
    """Right comodule axioms for a coaction ``rho: M -> M (x) C``."""
    coactor = coalgebra_of(c.coactor)
    coact = c.coact
    alpha_m = c.carrier.alpha
    nm, nc = c.carrier.dim, coactor.dim
    rm = range(nm)

    def counit_reduces(i):
        out = [ZERO] * nm
        for a, row in enumerate(coact[i]):
            for b, v in nonzeros(row):
                if coactor.counit[b]:
                    out[a] += v * coactor.counit[b]
        return tuple(out)

    def equivariant_lhs(i):
        # (alpha_M (x) alpha_C) rho(e_i)
        out = [ZERO] * (nm * nc)
        for a, row in enumerate(coact[i]):
            for b, v in nonzeros(row):
                for p, cp in nonzeros(alpha_m[a]):
                    base = p * nc
                    for q, cq in nonzeros(coactor.alpha[b]):
                        out[base + q] += v * cp * cq
        return tuple(out)

    def equivariant_rhs(i):
        out = [ZERO] * (nm * nc)
        for t, ct in nonzeros(alpha_m[i]):
            for a, row in enumerate(coact[t]):
                for b, v in nonzeros(row):
                    out[a * nc + b] += ct * v
        return tuple(out)

    def coassoc_lhs(i):
        # (rho (x) alpha_C) rho(e_i) in M (x) C (x) C
        out = [ZERO] * (nm * nc * nc)
        for a, row in enumerate(coact[i]):
            for b, v in nonzeros(row):
                for a2, row2 in enumerate(coact[a]):
                    for c1, v2 in nonzeros(row2):
                        base = (a2 * nc + c1) * nc
                        for c2, v3 in nonzeros(coactor.alpha[b]):
                            out[base + c2] += v * v2 * v3
        return tuple(out)

    def coassoc_rhs(i):
        # (alpha_M (x) delta_C) rho(e_i)
        out = [ZERO] * (nm * nc * nc)
        for a, row in enumerate(coact[i]):
            for b, v in nonzeros(row):
                for p, cp in nonzeros(alpha_m[a]):
                    for c1, rowc in enumerate(coactor.comul[b]):
                        base = (p * nc + c1) * nc
                        for c2, cc in nonzeros(rowc):
                            out[base + c2] += v * cp * cc
        return tuple(out)

    checks = [
        _sweep("comodule.counit-reduces-to-alpha", product(rm), counit_reduces, lambda i: alpha_m[i]),
        _sweep("comodule.alpha-equivariant", product(rm), equivariant_lhs, equivariant_rhs),
        _sweep("comodule.hom-coassociative", product(rm), coassoc_lhs, coassoc_rhs),
    ]
    return CheckReport(tuple(checks))


def check_comodule_coalgebra(c: ComoduleCoaction) -> CheckReport:
    """Comodule axioms plus the comodule Hom-coalgebra compatibilities."""
    coactor = bialgebra_of(c.coactor)
    carrier = coalgebra_of(c.carrier)
    coact = c.coact
    nm, nh = carrier.dim, coactor.dim
    alpha2 = alpha_power(coactor.alpha, 2)

    def counit_condition(i):
        out = [ZERO] * nh
        for a, row in enumerate(coact[i]):
            if carrier.counit[a]:
                add_scaled(out, carrier.counit[a], row)
        return tuple(out)

    def comul_lhs(i):
        # c_(0)1 (x) c_(0)2 (x) alpha_H^2(c_(1))
        out = [ZERO] * (nm * nm * nh)
        for a, row in enumerate(coact[i]):
            for b, v in nonzeros(row):
                for m1, rowm in enumerate(carrier.comul[a]):
                    for m2, vm in nonzeros(rowm):
                        base = (m1 * nm + m2) * nh
                        for h, vh in nonzeros(alpha2[b]):
                            out[base + h] += v * vm * vh
        return tuple(out)

    def comul_rhs(i):
        # c_1(0) (x) c_2(0) (x) c_1(1) c_2(1)
        out = [ZERO] * (nm * nm * nh)
        for c1, rowc in enumerate(carrier.comul[i]):
            for c2, vc in nonzeros(rowc):
                for d1, row1 in enumerate(coact[c1]):
                    for h1, v1 in nonzeros(row1):
                        for d2, row2 in enumerate(coact[c2]):
                            for h2, v2 in nonzeros(row2):
                                base = (d1 * nm + d2) * nh
                                coeff = vc * v1 * v2
                                add_scaled_slice(out, base, coeff, coactor.mul[h1][h2])
        return tuple(out)

    checks = list(check_comodule(c).checks)
    checks.append(
        _sweep(
            "comodule-coalgebra.counit",
            product(range(nm)),
            counit_condition,
            lambda i: tuple(carrier.counit[i] * u for u in coactor.unit),
        )
    )
    checks.append(
        _sweep("comodule-coalgebra.comultiplicative", product(range(nm)), comul_lhs, comul_rhs)
    )
    return CheckReport(tuple(checks))


def add_scaled_slice(acc: list, base: int, c: Fraction, v: Vector) -> None:
    if not c:
        return
    for i, a in enumerate(v):
        if a:
            acc[base + i] += c * a


def check_module_coalgebra(m: ModuleAction) -> CheckReport:
    """Module axioms plus comultiplicativity of a coalgebra-valued action."""
    actor = bialgebra_of(m.actor)
    carrier = coalgebra_of(m.carrier)
    act = m.act
    nh, nc = actor.dim, carrier.dim

    def comul_of_action(h, c):
        return comul_of_vector(carrier.comul, act[h][c], nc)

    def action_of_comul(h, c):
        out = [ZERO] * (nc * nc)
        for h1, rowh in enumerate(actor.comul[h]):
            for h2, vh in nonzeros(rowh):
                for c1, rowc in enumerate(carrier.comul[c]):
                    for c2, vc in nonzeros(rowc):
                        v1 = act[h1][c1]
                        v2 = act[h2][c2]
                        coeff = vh * vc
                        for a, ca in nonzeros(v1):
                            base = a * nc
                            for b, cb in nonzeros(v2):
                                out[base + b] += coeff * ca * cb
        return tuple(out)

    checks = list(check_module(m).checks)
    checks.append(
        _sweep(
            "module-coalgebra.comultiplicative",
            product(range(nh), range(nc)),
            comul_of_action,
            action_of_comul,
        )
    )
    checks.append(
        _sweep(
            "module-coalgebra.counit",
            product(range(nh), range(nc)),
            lambda h, c: _scalar(
                sum((v * carrier.counit[d] for d, v in nonzeros(act[h][c])), ZERO)
            ),
            lambda h, c: _scalar(actor.counit[h] * carrier.counit[c]),
        )
    )
    return CheckReport(tuple(checks))


def check_cotwisting(C, D, phi: Matrix) -> CheckReport:
    """The four coherence conditions of a cotwisting map ``C (x) D -> D (x) C``."""
    C = coalgebra_of(C)
    D = coalgebra_of(D)
    nc, nd = C.dim, D.dim
    _require(mat_shape(phi) == (nc * nd, nd * nc), "cotwisting map shape")
    from .exactlin import comul_matrix

    cmat = comul_matrix(C.comul)
    dmat = comul_matrix(D.comul)
    i_c, i_d = identity(nc), identity(nd)

    lhs1 = mat_compose(phi, kron(dmat, C.alpha))
    rhs1 = mat_compose(mat_compose(kron(C.alpha, dmat), kron(phi, i_d)), kron(i_d, phi))
    lhs2 = mat_compose(phi, kron(D.alpha, cmat))
    rhs2 = mat_compose(mat_compose(kron(cmat, D.alpha), kron(i_c, phi)), kron(phi, i_c))
    lhs3 = mat_compose(phi, kron(D.alpha, C.alpha))
    rhs3 = mat_compose(kron(C.alpha, D.alpha), phi)

    pairs = list(product(range(nc), range(nd)))

    def row(m, c, d):
        return m[c * nd + d]

    def counit_first(c, d):
        # kill the C-leg of the output: eps_C(c^phi) d^phi
        out = [ZERO] * nd
        for t, v in nonzeros(phi[c * nd + d]):
            dp, cp = divmod(t, nc)
            if C.counit[cp]:
                out[dp] += v * C.counit[cp]
        return tuple(out)

    def counit_second(c, d):
        out = [ZERO] * nc
        for t, v in nonzeros(phi[c * nd + d]):
            dp, cp = divmod(t, nc)
            if D.counit[dp]:
                out[cp] += v * D.counit[dp]
        return tuple(out)

    checks = [
        _sweep(
            "cotwisting.comul-second-factor",
            pairs,
            lambda c, d: row(lhs1, c, d),
            lambda c, d: row(rhs1, c, d),
        ),
        _sweep(
            "cotwisting.comul-first-factor",
            pairs,
            lambda c, d: row(lhs2, c, d),
            lambda c, d: row(rhs2, c, d),
        ),
        _sweep(
            "cotwisting.alpha-compatible",
            pairs,
            lambda c, d: row(lhs3, c, d),
            lambda c, d: row(rhs3, c, d),
        ),
        _sweep(
            "cotwisting.counit-first-factor",
            pairs,
            counit_first,
            lambda c, d: tuple(C.counit[c] * x for x in _basis(nd, d)),
        ),
        _sweep(
            "cotwisting.counit-second-factor",
            pairs,
            counit_second,
            lambda c, d: tuple(D.counit[d] * x for x in _basis(nc, c)),
        ),
    ]
    return CheckReport(tuple(checks))


def check_twisting(A, B, t: Matrix) -> CheckReport:
    """The three conditions of a twisting map ``B (x) A -> A (x) B``."""
    A = algebra_of(A)
    B = algebra_of(B)
    na, nb = A.dim, B.dim
    _require(mat_shape(t) == (nb * na, na * nb), "twisting map shape")
    from .exactlin import mul_matrix

    amat = mul_matrix(A.mul)
    bmat = mul_matrix(B.mul)
    i_a, i_b = identity(na), identity(nb)

    lhs1 = mat_compose(t, kron(A.alpha, B.alpha))
    rhs1 = mat_compose(kron(B.alpha, A.alpha), t)
    lhs2 = mat_compose(kron(bmat, A.alpha), t)
    rhs2 = mat_compose(mat_compose(kron(i_b, t), kron(t, i_b)), kron(A.alpha, bmat))
    lhs3 = mat_compose(kron(B.alpha, amat), t)
    rhs3 = mat_compose(mat_compose(kron(t, i_a), kron(i_a, t)), kron(amat, B.alpha))

    def sweep_matrix(axiom_id, lhs, rhs):
        return _sweep(
            axiom_id,
            [(i,) for i in range(len(lhs))],
            lambda i: lhs[i],
            lambda i: rhs[i],
        )

    checks = [
        sweep_matrix("twisting.alpha-compatible", lhs1, rhs1),
        sweep_matrix("twisting.second-factor-product", lhs2, rhs2),
        sweep_matrix("twisting.first-factor-product", lhs3, rhs3),
    ]
    return CheckReport(tuple(checks))


def check_matched_pair(mp: MatchedPairData) -> CheckReport:
    """Module Hom-coalgebra conditions on both actions plus the three
    compatibility laws of a matched pair."""
    A = bialgebra_of(mp.A)
    H = bialgebra_of(mp.H)
    na, nh = A.dim, H.dim
    left, right = mp.left_action, mp.right_action
    ah_i1 = alpha_power(H.alpha, -1)
    ah_i2 = alpha_power(H.alpha, -2)
    ah_i3 = alpha_power(H.alpha, -3)
    aa_i1 = alpha_power(A.alpha, -1)
    aa_i2 = alpha_power(A.alpha, -2)
    aa_i3 = alpha_power(A.alpha, -3)

    checks = list(
        _prefixed(
            "matched-pair.left-action.",
            check_module_coalgebra(ModuleAction(H, A, left)).checks,
        )
    )

    # right module Hom-coalgebra axioms for the action of A on H
    rh, ra = range(nh), range(na)

    def r_act(hvec: Vector, avec: Vector) -> Vector:
        out = [ZERO] * nh
        for h, ch in nonzeros(hvec):
            for a, ca in nonzeros(avec):
                add_scaled(out, ch * ca, right[h][a])
        return tuple(out)

    checks.append(
        _sweep(
            "matched-pair.right-action.unit",
            product(rh),
            lambda h: r_act(_basis(nh, h), A.unit),
            lambda h: H.alpha[h],
        )
    )
    checks.append(
        _sweep(
            "matched-pair.right-action.alpha-equivariant",
            product(rh, ra),
            lambda h, a: apply_map(H.alpha, right[h][a]),
            lambda h, a: r_act(H.alpha[h], A.alpha[a]),
        )
    )
    checks.append(
        _sweep(
            "matched-pair.right-action.hom-associative",
            product(rh, ra, ra),
            lambda h, a, b: r_act(right[h][a], A.alpha[b]),
            lambda h, a, b: r_act(H.alpha[h], A.mul[a][b]),
        )
    )
    checks.append(
        _sweep(
            "matched-pair.right-action.comultiplicative",
            product(rh, ra),
            lambda h, a: comul_of_vector(H.comul, right[h][a], nh),
            lambda h, a: _pairwise_action(H.comul[h], A.comul[a], right, nh),
        )
    )
    checks.append(
        _sweep(
            "matched-pair.right-action.counit",
            product(rh, ra),
            lambda h, a: _scalar(sum((v * H.counit[t] for t, v in nonzeros(right[h][a])), ZERO)),
            lambda h, a: _scalar(H.counit[h] * A.counit[a]),
        )
    )

    def l_act(hvec: Vector, avec: Vector) -> Vector:
        out = [ZERO] * na
        for h, ch in nonzeros(hvec):
            for a, ca in nonzeros(avec):
                add_scaled(out, ch * ca, left[h][a])
        return tuple(out)

    def product_acts_right(h, g, a):
        # (hg) <- a
        return r_act(H.mul[h][g], _basis(na, a))

    def product_acts_right_rhs(h, g, a):
        out = [ZERO] * nh
        for g1, rowg in enumerate(H.comul[g]):
            for g2, vg in nonzeros(rowg):
                for a1, rowa in enumerate(A.comul[a]):
                    for a2, va in nonzeros(rowa):
                        inner = l_act(ah_i2[g1], aa_i3[a1])
                        first = r_act(_basis(nh, h), inner)
                        second = r_act(ah_i1[g2], aa_i2[a2])
                        add_scaled(out, vg * va, bilinear_apply(H.mul, first, second))
        return tuple(out)

    def acts_on_product(h, a, b):
        return l_act(_basis(nh, h), A.mul[a][b])

    def acts_on_product_rhs(h, a, b):
        out = [ZERO] * na
        for h1, rowh in enumerate(H.comul[h]):
            for h2, vh in nonzeros(rowh):
                for a1, rowa in enumerate(A.comul[a]):
                    for a2, va in nonzeros(rowa):
                        first = l_act(ah_i2[h1], aa_i1[a1])
                        second = l_act(r_act(ah_i3[h2], aa_i2[a2]), _basis(na, b))
                        add_scaled(out, vh * va, bilinear_apply(A.mul, first, second))
        return tuple(out)

    def exchange(h, a, flip: bool):
        out = [ZERO] * (nh * na)
        for h1, rowh in enumerate(H.comul[h]):
            for h2, vh in nonzeros(rowh):
                for a1, rowa in enumerate(A.comul[a]):
                    for a2, va in nonzeros(rowa):
                        if flip:
                            u = right[h2][a2]
                            v = left[h1][a1]
                        else:
                            u = right[h1][a1]
                            v = left[h2][a2]
                        coeff = vh * va
                        for p, cp in nonzeros(u):
                            base = p * na
                            for q, cq in nonzeros(v):
                                out[base + q] += coeff * cp * cq
        return tuple(out)

    checks.append(
        _sweep(
            "matched-pair.product-acts-right",
            product(rh, rh, ra),
            product_acts_right,
            product_acts_right_rhs,
        )
    )
    checks.append(
        _sweep(
            "matched-pair.acts-on-product", product(rh, ra, ra), acts_on_product, acts_on_product_rhs
        )
    )
    checks.append(
        _sweep(
            "matched-pair.exchange-symmetry",
            product(rh, ra),
            lambda h, a: exchange(h, a, False),
            lambda h, a: exchange(h, a, True),
        )
    )
    return CheckReport(tuple(checks))


def _pairwise_action(comul_h_plane: Matrix, comul_a_plane: Matrix, right: Tensor3, nh: int) -> Vector:
    # h_1 <- a_1 (x) h_2 <- a_2 summed over both comultiplications
    out = [ZERO] * (nh * nh)
    for h1, rowh in enumerate(comul_h_plane):
        for h2, vh in nonzeros(rowh):
            for a1, rowa in enumerate(comul_a_plane):
                for a2, va in nonzeros(rowa):
                    coeff = vh * va
                    for p, cp in nonzeros(right[h1][a1]):
                        base = p * nh
                        for q, cq in nonzeros(right[h2][a2]):
                            out[base + q] += coeff * cp * cq
    return tuple(out)


def _prefixed(prefix: str, checks) -> list[CheckEntry]:
    return [CheckEntry(prefix + c.axiom_id, c.passed, c.witness) for c in checks]


def check_dual_pair(P: PairingForm) -> CheckReport:
    """Compatibility of a non-degenerate pairing with units, products,
    coproducts, structure maps and antipodes.

    The coproduct-side condition whose printed form is type-inconsistent is
    checked in the reading symmetric to the product-side one; the swapped
    alternative is reported as an extra informational entry.
    """
    A, B, gram = P.left, P.right, P.gram
    na, nb = A.dim, B.dim
    a2 = alpha_power(A.alpha, 2)
    b2 = alpha_power(B.alpha, 2)
    sb_inv = mat_compose(identity(nb), _safe_inverse(B.antipode))

    def pair(u: Vector, v: Vector) -> Fraction:
        total = ZERO
        for i, ci in nonzeros(u):
            for j, cj in nonzeros(v):
                total += ci * cj * gram[i][j]
        return total

    ra, rb = range(na), range(nb)
    a2gram = mat_compose(a2, gram)
    gramb2t = mat_compose(gram, tuple(zip(*b2)))

    def mul_left(i, ip, j):
        return _scalar(pair(A.mul[i][ip], _basis(nb, j)))

    def mul_left_rhs(i, ip, j):
        total = ZERO
        for b1, row in enumerate(B.comul[j]):
            for bb2, v in nonzeros(row):
                total += v * a2gram[i][b1] * a2gram[ip][bb2]
        return _scalar(total)

    def mul_right(i, j, jp):
        return _scalar(pair(_basis(na, i), B.mul[j][jp]))

    def mul_right_rhs(i, j, jp):
        total = ZERO
        for a1, row in enumerate(A.comul[i]):
            for aa2, v in nonzeros(row):
                total += v * gramb2t[a1][j] * gramb2t[aa2][jp]
        return _scalar(total)

    def mul_right_swapped(i, j, jp):
        total = ZERO
        for a1, row in enumerate(A.comul[i]):
            for aa2, v in nonzeros(row):
                total += v * gramb2t[a1][jp] * gramb2t[aa2][j]
        return _scalar(total)

    checks = [
        make_entry("pairing.non-degenerate", is_invertible(gram)),
        _sweep(
            "pairing.unit-right",
            product(ra),
            lambda i: _scalar(pair(_basis(na, i), B.unit)),
            lambda i: _scalar(A.counit[i]),
        ),
        _sweep(
            "pairing.unit-left",
            product(rb),
            lambda j: _scalar(pair(A.unit, _basis(nb, j))),
            lambda j: _scalar(B.counit[j]),
        ),
        _sweep(
            "pairing.alpha-invariant",
            product(ra, rb),
            lambda i, j: _scalar(pair(A.alpha[i], B.alpha[j])),
            lambda i, j: _scalar(gram[i][j]),
        ),
        _sweep("pairing.mul-comul-left", product(ra, ra, rb), mul_left, mul_left_rhs),
        _sweep("pairing.mul-comul-right", product(ra, rb, rb), mul_right, mul_right_rhs),
        _sweep(
            "pairing.mul-comul-right-swapped", product(ra, rb, rb), mul_right, mul_right_swapped
        ),
        _sweep(
            "pairing.antipode",
            product(ra, rb),
            lambda i, j: _scalar(pair(A.antipode[i], _basis(nb, j))),
            lambda i, j: _scalar(pair(_basis(na, i), sb_inv[j])),
        ),
    ]
    return CheckReport(tuple(checks))


def _safe_inverse(m: Matrix) -> Matrix:
    from .exactlin import mat_inverse

    return mat_inverse(m)


def check_cocycle(sigma: TwoCocycle) -> CheckReport:
    """Structure-map invariance, the (left or right) cocycle law, and
    normality, each as a separate verdict."""
    B = sigma.algebra
    gram = sigma.gram
    n = B.dim
    alpha2 = alpha_power(B.alpha, 2)
    rng = range(n)

    def sig(u: Vector, v: Vector) -> Fraction:
        total = ZERO
        for i, ci in nonzeros(u):
            row = gram[i]
            for j, cj in nonzeros(v):
                if row[j]:
                    total += ci * cj * row[j]
        return total

    def alpha_invariant(i, j):
        return _scalar(sig(B.alpha[i], B.alpha[j]))

    def left_lhs(h, l, k):
        # sigma(l1, k1) sigma(alpha^2(h), l2 k2)
        total = ZERO
        for l1, rowl in enumerate(B.comul[l]):
            for l2, vl in nonzeros(rowl):
                for k1, rowk in enumerate(B.comul[k]):
                    for k2, vk in nonzeros(rowk):
                        if gram[l1][k1]:
                            total += vl * vk * gram[l1][k1] * sig(alpha2[h], B.mul[l2][k2])
        return _scalar(total)

    def left_rhs(h, l, k):
        # sigma(h1, l1) sigma(h2 l2, alpha^2(k))
        total = ZERO
        for h1, rowh in enumerate(B.comul[h]):
            for h2, vh in nonzeros(rowh):
                for l1, rowl in enumerate(B.comul[l]):
                    for l2, vl in nonzeros(rowl):
                        if gram[h1][l1]:
                            total += vh * vl * gram[h1][l1] * sig(B.mul[h2][l2], alpha2[k])
        return _scalar(total)

    def right_lhs(h, l, k):
        # sigma(alpha^2(h), l1 k1) sigma(l2, k2)
        total = ZERO
        for l1, rowl in enumerate(B.comul[l]):
            for l2, vl in nonzeros(rowl):
                for k1, rowk in enumerate(B.comul[k]):
                    for k2, vk in nonzeros(rowk):
                        if gram[l2][k2]:
                            total += vl * vk * gram[l2][k2] * sig(alpha2[h], B.mul[l1][k1])
        return _scalar(total)

    def right_rhs(h, l, k):
        # sigma(h1 l1, alpha^2(k)) sigma(h2, l2)
        total = ZERO
        for h1, rowh in enumerate(B.comul[h]):
            for h2, vh in nonzeros(rowh):
                for l1, rowl in enumerate(B.comul[l]):
                    for l2, vl in nonzeros(rowl):
                        if gram[h2][l2]:
                            total += vh * vl * gram[h2][l2] * sig(B.mul[h1][l1], alpha2[k])
        return _scalar(total)

    checks = [
        _sweep(
            "cocycle.alpha-invariant",
            product(rng, rng),
            alpha_invariant,
            lambda i, j: _scalar(gram[i][j]),
        )
    ]
    if sigma.side == "left":
        checks.append(_sweep("cocycle.left-condition", product(rng, rng, rng), left_lhs, left_rhs))
    else:
        checks.append(
            _sweep("cocycle.right-condition", product(rng, rng, rng), right_lhs, right_rhs)
        )
    checks.append(
        _sweep(
            "cocycle.normal",
            product(rng),
            lambda h: (sig(B.unit, _basis(n, h)), sig(_basis(n, h), B.unit)),
            lambda h: (B.counit[h], B.counit[h]),
        )
    )
    return CheckReport(tuple(checks))


def check_quasitriangular(H, R: RMatrix) -> CheckReport:
    """The three quasitriangularity axioms; products are taken componentwise
    in the tensor-square and tensor-cube Hom-algebras."""
    B = bialgebra_of(H)
    n, mul, comul, alpha = B.dim, B.mul, B.comul, B.alpha
    rvec = R.as_vector()
    n2 = n * n
    rng = range(n)

    def comul_op(i):
        out = [ZERO] * n2
        for j, row in enumerate(comul[i]):
            for k, c in nonzeros(row):
                out[k * n + j] += c
        return tuple(out)

    def intertwine_lhs(i):
        return tensor_square_product(mul, n, comul_op(i), rvec)

    def intertwine_rhs(i):
        return tensor_square_product(mul, n, rvec, comul_vector(comul, i))

    # (delta (x) alpha) R and (alpha (x) delta) R on the tensor cube
    def comul_alpha_r():
        out = [ZERO] * (n2 * n)
        for p, c in nonzeros(rvec):
            p0, p1 = divmod(p, n)
            dp = comul_vector(comul, p0)
            for t, ct in nonzeros(dp):
                base = t * n
                for q, cq in nonzeros(alpha[p1]):
                    out[base + q] += c * ct * cq
        return tuple(out)

    def alpha_comul_r():
        out = [ZERO] * (n2 * n)
        for p, c in nonzeros(rvec):
            p0, p1 = divmod(p, n)
            dp = comul_vector(comul, p1)
            for t, ct in nonzeros(alpha[p0]):
                base = t * n2
                for q, cq in nonzeros(dp):
                    out[base + q] += c * ct * cq
        return tuple(out)

    def r13(u: Vector) -> Vector:
        out = [ZERO] * (n2 * n)
        for p, c in nonzeros(u):
            p0, p1 = divmod(p, n)
            for m, cm in nonzeros(B.unit):
                out[(p0 * n + m) * n + p1] += c * cm
        return tuple(out)

    def r23(u: Vector) -> Vector:
        out = [ZERO] * (n2 * n)
        for p, c in nonzeros(u):
            p0, p1 = divmod(p, n)
            for m, cm in nonzeros(B.unit):
                out[(m * n + p0) * n + p1] += c * cm
        return tuple(out)

    def r12(u: Vector) -> Vector:
        out = [ZERO] * (n2 * n)
        for p, c in nonzeros(u):
            p0, p1 = divmod(p, n)
            for m, cm in nonzeros(B.unit):
                out[(p0 * n + p1) * n + m] += c * cm
        return tuple(out)

    lhs2 = comul_alpha_r()
    rhs2 = tensor_cube_product(mul, n, r13(rvec), r23(rvec))
    lhs3 = alpha_comul_r()
    rhs3 = tensor_cube_product(mul, n, r13(rvec), r12(rvec))

    checks = [
        _sweep("quasitriangular.intertwines-comul", product(rng), intertwine_lhs, intertwine_rhs),
        _sweep("quasitriangular.left-hexagon", [()], lambda: lhs2, lambda: rhs2),
        _sweep("quasitriangular.right-hexagon", [()], lambda: lhs3, lambda: rhs3),
    ]
    return CheckReport(tuple(checks))


def check_comodule_algebra(A, c: ComoduleCoaction) -> CheckReport:
    """Right comodule axioms plus multiplicativity and unitality of the
    coaction on a Hom-algebra carrier."""
    alg = algebra_of(A)
    coactor = bialgebra_of(c.coactor)
    coact = c.coact
    nm, nh = alg.dim, coactor.dim

    def coact_of_vector(v: Vector) -> Vector:
        out = [ZERO] * (nm * nh)
        for i, ci in nonzeros(v):
            for a, row in enumerate(coact[i]):
                base = a * nh
                for b, vv in nonzeros(row):
                    out[base + b] += ci * vv
        return tuple(out)

    def mult_lhs(i, j):
        return coact_of_vector(alg.mul[i][j])

    def mult_rhs(i, j):
        # a_(0) b_(0) (x) a_(1) b_(1)
        out = [ZERO] * (nm * nh)
        for a1, rowa in enumerate(coact[i]):
            for h1, va in nonzeros(rowa):
                for b1, rowb in enumerate(coact[j]):
                    for h2, vb in nonzeros(rowb):
                        coeff = va * vb
                        for p, cp in nonzeros(alg.mul[a1][b1]):
                            base = p * nh
                            for q, cq in nonzeros(coactor.mul[h1][h2]):
                                out[base + q] += coeff * cp * cq
        return tuple(out)

    unit_image = tuple(a * b for a in alg.unit for b in coactor.unit)

    checks = list(check_comodule(c).checks)
    checks.append(
        _sweep("comodule-algebra.multiplicative", product(range(nm), range(nm)), mult_lhs, mult_rhs)
    )
    checks.append(
        _sweep(
            "comodule-algebra.unit",
            [()],
            lambda: coact_of_vector(alg.unit),
            lambda: unit_image,
        )
    )
    return CheckReport(tuple(checks))


def check_left_comodule_algebra(A, coactor, coact: Tensor3) -> CheckReport:
    """Mirrored, left-sided comodule Hom-algebra conditions.

    ``coact[m][c][m']`` holds the ``e_c (x) e_m'`` coefficient of
    ``rho(e_m)`` for a coaction ``rho: M -> C (x) M``.
    """
    alg = algebra_of(A)
    co = bialgebra_of(coactor)
    nm, nh = alg.dim, co.dim
    alpha_m = alg.alpha
    rm = range(nm)

    def counit_reduces(i):
        out = [ZERO] * nm
        for b, row in enumerate(coact[i]):
            if co.counit[b]:
                add_scaled(out, co.counit[b], row)
        return tuple(out)

    def equivariant_lhs(i):
        out = [ZERO] * (nh * nm)
        for b, row in enumerate(coact[i]):
            for a, v in nonzeros(row):
                for q, cq in nonzeros(co.alpha[b]):
                    base = q * nm
                    for p, cp in nonzeros(alpha_m[a]):
                        out[base + p] += v * cq * cp
        return tuple(out)

    def equivariant_rhs(i):
        out = [ZERO] * (nh * nm)
        for t, ct in nonzeros(alpha_m[i]):
            for b, row in enumerate(coact[t]):
                for a, v in nonzeros(row):
                    out[b * nm + a] += ct * v
        return tuple(out)

    def coassoc_lhs(i):
        # (delta_C (x) alpha_M) rho(e_i)
        out = [ZERO] * (nh * nh * nm)
        for b, row in enumerate(coact[i]):
            for a, v in nonzeros(row):
                for c1, rowc in enumerate(co.comul[b]):
                    for c2, vc in nonzeros(rowc):
                        base = (c1 * nh + c2) * nm
                        for p, cp in nonzeros(alpha_m[a]):
                            out[base + p] += v * vc * cp
        return tuple(out)

    def coassoc_rhs(i):
        # (alpha_C (x) rho) rho(e_i)
        out = [ZERO] * (nh * nh * nm)
        for b, row in enumerate(coact[i]):
            for a, v in nonzeros(row):
                for c1, vc in nonzeros(co.alpha[b]):
                    for c2, rowa in enumerate(coact[a]):
                        base = (c1 * nh + c2) * nm
                        for p, cp in nonzeros(rowa):
                            out[base + p] += v * vc * cp
        return tuple(out)

    def coact_of_vector(v: Vector) -> Vector:
        out = [ZERO] * (nh * nm)
        for i, ci in nonzeros(v):
            for b, row in enumerate(coact[i]):
                base = b * nm
                for a, vv in nonzeros(row):
                    out[base + a] += ci * vv
        return tuple(out)

    def mult_rhs(i, j):
        out = [ZERO] * (nh * nm)
        for b1, rowa in enumerate(coact[i]):
            for a1, va in nonzeros(rowa):
                for b2, rowb in enumerate(coact[j]):
                    for a2, vb in nonzeros(rowb):
                        coeff = va * vb
                        for q, cq in nonzeros(co.mul[b1][b2]):
                            base = q * nm
                            for p, cp in nonzeros(alg.mul[a1][a2]):
                                out[base + p] += coeff * cq * cp
        return tuple(out)

    unit_image = tuple(b * a for b in co.unit for a in alg.unit)

    checks = [
        _sweep("left-comodule.counit-reduces-to-alpha", product(rm), counit_reduces, lambda i: alpha_m[i]),
        _sweep("left-comodule.alpha-equivariant", product(rm), equivariant_lhs, equivariant_rhs),
        _sweep("left-comodule.hom-coassociative", product(rm), coassoc_lhs, coassoc_rhs),
        _sweep(
            "left-comodule-algebra.multiplicative",
            product(rm, rm),
            lambda i, j: coact_of_vector(alg.mul[i][j]),
            mult_rhs,
        ),
        _sweep(
            "left-comodule-algebra.unit",
            [()],
            lambda: coact_of_vector(alg.unit),
            lambda: unit_image,
        ),
    ]
    return CheckReport(tuple(checks))
