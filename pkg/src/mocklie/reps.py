"""Representations of JJ algebras and bimodules of pre-JJ algebras.

A ``JJRep`` is a family of module maps ``rho_i`` (one per basis element of a
commutative Jacobi-identity algebra, extended linearly) subject to

    rho(x*y) = -(rho(x) rho(y) + rho(y) rho(x)).

A ``PreJJBimodule`` is a pair of families ``l_x``, ``r_x`` over a left pre-JJ
algebra.  The operational bimodule conditions used here are the three that
make the semidirect sum a pre-JJ algebra, checked on all basis pairs:

    (left)   l_{xy} + l_x l_y = -(l_{yx} + l_y l_x)
    (mixed)  r_y l_x + l_x r_y = -(r_y r_x + r_{xy})
    (right)  r_{xy} + r_y r_x = -(r_y l_x + l_x r_y)

(the mixed and right families coincide term by term; both are evaluated and
tagged so a report shows exactly which printed condition broke).  The
two-condition variant that replaces mixed/right with
``[l_x, r_y] = -[l_y, r_x]`` is available separately as a diagnostic; it is
strictly weaker, and the divergence is observable.

Checks fold the underlying algebra's own identity into the verdict (witness
tag ``"algebra"``) so that the semidirect-sum equivalences hold verbatim
for arbitrary candidate maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    Algebra,
    CheckReport,
    DEFAULT_MAX_WITNESSES,
    _DEFECT_GENERATORS,
    default_labels,
    left_mult,
    report_from_defects,
    right_mult,
    sub_adjacent,
)
from .errors import PreconditionError, ShapeError
from .fields import require_same_field
from .linalg import LinearMap, Vector, vec_zero


def _validate_map_family(alg: Algebra, maps, what: str) -> int:
    maps = tuple(maps)
    if len(maps) != alg.dim:
        raise ShapeError(f"{what}: need one map per basis element of the algebra")
    dims = {(m.rows, m.cols) for m in maps}
    if len(dims) != 1:
        raise ShapeError(f"{what}: maps have inconsistent shapes {dims}")
    rows, cols = dims.pop()
    if rows != cols:
        raise ShapeError(f"{what}: module maps must be square, got {rows}x{cols}")
    for m in maps:
        require_same_field(alg.field, m.field)
    return rows


@dataclass(frozen=True)
class JJRep:
    """Candidate representation of a JJ algebra on an m-dimensional module."""

    algebra: Algebra
    maps: tuple[LinearMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        _validate_map_family(self.algebra, self.maps, "representation")

    @property
    def module_dim(self) -> int:
        return self.maps[0].rows

    def rho(self, x: Vector) -> LinearMap:
        """The map attached to an algebra vector, extended linearly."""
        f = self.algebra.field
        acc = LinearMap.zeros(f, self.module_dim, self.module_dim)
        for xi, m in zip(x, self.maps):
            if xi != f.zero:
                acc = acc.add(m.scale(xi))
        return acc

    @classmethod
    def zero(cls, algebra: Algebra, module_dim: int) -> "JJRep":
        z = LinearMap.zeros(algebra.field, module_dim, module_dim)
        return cls(algebra, tuple(z for _ in range(algebra.dim)))

    @classmethod
    def adjoint(cls, algebra: Algebra) -> "JJRep":
        """The algebra acting on itself by (left) multiplication."""
        return cls(algebra, tuple(left_mult(algebra, algebra.basis(i))
                                  for i in range(algebra.dim)))


@dataclass(frozen=True)
class PreJJBimodule:
    """Candidate bimodule (l, r) of a pre-JJ algebra on an m-dim space."""

    algebra: Algebra
    left: tuple[LinearMap, ...]
    right: tuple[LinearMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        m1 = _validate_map_family(self.algebra, self.left, "left maps")
        m2 = _validate_map_family(self.algebra, self.right, "right maps")
        if m1 != m2:
            raise ShapeError("left and right map families act on different spaces")

    @property
    def module_dim(self) -> int:
        return self.left[0].rows

    @classmethod
    def zero(cls, algebra: Algebra, module_dim: int) -> "PreJJBimodule":
        z = LinearMap.zeros(algebra.field, module_dim, module_dim)
        zs = tuple(z for _ in range(algebra.dim))
        return cls(algebra, zs, zs)

    @classmethod
    def regular(cls, algebra: Algebra) -> "PreJJBimodule":
        """The regular bimodule (L, R, A): the algebra acting on itself."""
        n = algebra.dim
        return cls(
            algebra,
            tuple(left_mult(algebra, algebra.basis(i)) for i in range(n)),
            tuple(right_mult(algebra, algebra.basis(i)) for i in range(n)),
        )


def _linear_combination(maps, coeffs, field, m):
    acc = LinearMap.zeros(field, m, m)
    for ci, mp in zip(coeffs, maps):
        if ci != field.zero:
            acc = acc.add(mp.scale(ci))
    return acc


def _matrix_defects(prefix_iter):
    # flatten (indices, matrix, tag) into (indices, row-major vector, tag)
    for indices, mat, tag in prefix_iter:
        yield indices, tuple(x for row in mat.entries for x in row), tag


def _algebra_defects(alg: Algebra, kind: str):
    for indices, defect in _DEFECT_GENERATORS[kind](alg):
        yield indices, defect, "algebra"


def _rep_condition_defects(rep: JJRep):
    alg = rep.algebra
    f = alg.field
    m = rep.module_dim
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            target = _linear_combination(rep.maps, alg.c[i][j], f, m)
            anti = rep.maps[i].mul(rep.maps[j]).add(rep.maps[j].mul(rep.maps[i]))
            yield (i, j), target.add(anti), "representation"


def check_jj_rep(rep: JJRep, max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Check rho(x*y) = -(rho(x)rho(y) + rho(y)rho(x)) on all basis pairs.

    The verdict also covers the underlying algebra's ``jj`` identity (witness
    tag ``"algebra"``), so arbitrary candidates get a plain pass/fail answer.
    Matrix defects are reported flattened row-major.
    """
    defects = itertools.chain(
        _algebra_defects(rep.algebra, "jj"),
        _matrix_defects(_rep_condition_defects(rep)),
    )
    return report_from_defects("jj_representation", rep.algebra.field,
                               defects, max_witnesses)


def dual_rep(rep: JJRep) -> JJRep:
    """The dual representation, realized as matrix transposition.

    Passing the representation check is preserved and reflected: the dual
    passes exactly when the original does.
    """
    return JJRep(rep.algebra, tuple(m.transpose() for m in rep.maps))


def jj_semidirect(rep: JJRep) -> Algebra:
    """Semidirect sum algebra on A + V with (x+u)(y+w) = xy + rho(x)w + rho(y)u.

    Requires a valid representation (the construction is only a JJ algebra in
    that case); raises ``PreconditionError`` otherwise.
    """
    report = check_jj_rep(rep)
    if not report.passed:
        raise PreconditionError(
            "jj_semidirect needs a valid representation", [("rho", report)]
        )
    return _semidirect_table(rep.algebra, rep.maps, rep.maps, rep.module_dim)


def _semidirect_table(alg, left_maps, right_maps, m) -> Algebra:
    # products: e_i e_j from alg; e_i v = left_i(v); v e_j = right_j(v); v w = 0
    f = alg.field
    n = alg.dim
    dim = n + m
    labels = alg.labels + default_labels(m, "v")
    if len(set(labels)) != dim:
        labels = default_labels(dim)
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < n and j < n:
                row.append(alg.c[i][j] + vec_zero(f, m))
            elif i < n:
                row.append(vec_zero(f, n) + left_maps[i].column(j - n))
            elif j < n:
                row.append(vec_zero(f, n) + right_maps[j].column(i - n))
            else:
                row.append(vec_zero(f, dim))
        table.append(tuple(row))
    return Algebra(f, labels, tuple(table))


def _bimodule_condition_defects(bm: PreJJBimodule):
    alg = bm.algebra
    f = alg.field
    m = bm.module_dim
    n = alg.dim
    l, r = bm.left, bm.right

    def lmap(coeffs):
        return _linear_combination(l, coeffs, f, m)

    def rmap(coeffs):
        return _linear_combination(r, coeffs, f, m)

    for i in range(n):
        for j in range(i, n):
            d = lmap(alg.c[i][j]).add(l[i].mul(l[j]))
            d = d.add(lmap(alg.c[j][i])).add(l[j].mul(l[i]))
            yield (i, j), d, "left"
    for i in range(n):
        for j in range(n):
            d = r[j].mul(l[i]).add(l[i].mul(r[j]))
            d = d.add(r[j].mul(r[i])).add(rmap(alg.c[i][j]))
            yield (i, j), d, "mixed"
    for i in range(n):
        for j in range(n):
            d = rmap(alg.c[i][j]).add(r[j].mul(r[i]))
            d = d.add(r[j].mul(l[i])).add(l[i].mul(r[j]))
            yield (i, j), d, "right"


def check_prejj_bimodule(bm: PreJJBimodule,
                         max_witnesses: int = DEFAULT_MAX_WITNESSES) -> CheckReport:
    """Check the three semidirect-product bimodule conditions on basis pairs.

    The underlying algebra's ``left_pre_jj`` identity is folded into the
    verdict (tag ``"algebra"``); with that convention the check passes exactly
    when ``prejj_semidirect`` produces a left pre-JJ algebra, for completely
    arbitrary map families.
    """
    defects = itertools.chain(
        _algebra_defects(bm.algebra, "left_pre_jj"),
        _matrix_defects(_bimodule_condition_defects(bm)),
    )
    return report_from_defects("prejj_bimodule", bm.algebra.field,
                               defects, max_witnesses)


def _bimodule_displayed_defects(bm: PreJJBimodule):
    alg = bm.algebra
    f = alg.field
    m = bm.module_dim
    n = alg.dim
    l, r = bm.left, bm.right
    for i in range(n):
        for j in range(i, n):
            d = l[i].mul(r[j]).add(r[j].mul(l[i]))
            d = d.add(l[j].mul(r[i])).add(r[i].mul(l[j]))
            yield (i, j), d, "eqbimodule1"
    for i in range(n):
        for j in range(i, n):
            d = _linear_combination(l, alg.c[i][j], f, m).add(l[i].mul(l[j]))
            d = d.add(_linear_combination(l, alg.c[j][i], f, m)).add(l[j].mul(l[i]))
            yield (i, j), d, "eqbimodule2"


def check_prejj_bimodule_displayed(bm: PreJJBimodule,
                                   max_witnesses: int = DEFAULT_MAX_WITNESSES,
                                   ) -> CheckReport:
    """Diagnostic check of the two displayed bimodule conditions only.

    This variant ([l_x, r_y] = -[l_y, r_x] plus the left condition) is weaker
    than the operational three-condition set: candidates exist that pass it
    while their semidirect sum is not pre-JJ.  It is exposed so the divergence
    can be observed rather than silently resolved.
    """
    defects = itertools.chain(
        _algebra_defects(bm.algebra, "left_pre_jj"),
        _matrix_defects(_bimodule_displayed_defects(bm)),
    )
    return report_from_defects("prejj_bimodule_displayed", bm.algebra.field,
                               defects, max_witnesses)


def prejj_semidirect(bm: PreJJBimodule) -> Algebra:
    """Semidirect sum (x+u)(y+w) = xy + l_x w + r_y u on A + V.

    Deliberately not gated on the bimodule conditions: the result is left
    pre-JJ exactly when ``check_prejj_bimodule`` passes, and both directions
    of that equivalence are meant to be testable.
    """
    return _semidirect_table(bm.algebra, bm.left, bm.right, bm.module_dim)


def sum_rep(bm: PreJJBimodule) -> JJRep:
    """The representation l + r of the sub-adjacent algebra.

    Requires a valid bimodule; the result always passes ``check_jj_rep``.
    """
    report = check_prejj_bimodule(bm)
    if not report.passed:
        raise PreconditionError(
            "sum_rep needs a valid bimodule", [("bimodule", report)]
        )
    return JJRep(
        sub_adjacent(bm.algebra),
        tuple(li.add(ri) for li, ri in zip(bm.left, bm.right)),
    )


def dual_bimodule(bm: PreJJBimodule) -> PreJJBimodule:
    """The dual bimodule (r^T, l^T): transposes with the two families swapped.

    An involution; the bimodule check verdict is preserved exactly.
    """
    return PreJJBimodule(
        bm.algebra,
        tuple(m.transpose() for m in bm.right),
        tuple(m.transpose() for m in bm.left),
    )
