"""Exhaustive enumeration and isomorphism reduction over prime fields.

Structure constants of a dim-n algebra are flattened to length-n^3 tuples in
lexicographic (i, j, k) order; for n = 2 the order is (a1, a2, b1, b2, c1, c2,
d1, d2) matching e1e1 = a1 e1 + a2 e2, e1e2 = b1 e1 + b2 e2, e2e1 = ...,
e2e2 = ....  The defining equation system of each identity kind is generated
mechanically from the identity on basis triples, never transcribed from a
printed list, so enumeration over GF(p) is a plain scan of all p^(n^3)
tuples with early exit.

Orbits are computed by closing each unassigned solution under the full
GL_n(F_p) basis-change action; at desk scale (p <= 7, n <= 2) this is exact
and cheap.  Everything is deterministic: solutions are produced in
lexicographic order, orbit representatives are the lexicographically
smallest members, censuses compare byte-identical across runs and worker
counts.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import Algebra, IDENTITY_KINDS, apply_basis_change, default_labels
from .errors import FieldError, ShapeError
from .fields import PrimeField, RationalField, characteristic_warnings
from .linalg import LinearMap

DEFAULT_MAX_SCAN = 10_000_000


@dataclass(frozen=True)
class ConstantTuple:
    """Flattened structure constants of one algebra, in (i, j, k) lex order."""

    dim: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.dim ** 3:
            raise ShapeError("constant tuple length must be dim^3")


@dataclass(frozen=True)
class Orbit:
    representative: tuple
    size: int


@dataclass(frozen=True)
class OrbitCensus:
    """All solutions of one identity over GF(p), grouped into GL-orbits."""

    field: PrimeField
    kind: str
    dim: int
    total: int
    orbits: tuple[Orbit, ...]
    warnings: tuple[str, ...] = ()
    metadata: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if sum(o.size for o in self.orbits) != self.total:
            raise ShapeError("orbit sizes must sum to the solution count")


def algebra_from_tuple(field, dim: int, entries, labels=None) -> Algebra:
    """Unflatten a constant tuple into an Algebra."""
    it = iter(entries)
    tensor = [
        [[next(it) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)
    ]
    return Algebra.from_tensor(field, tensor, labels=labels or default_labels(dim))


def tuple_from_algebra(alg: Algebra) -> tuple:
    return tuple(x for row in alg.c for vec in row for x in vec)


# ---------------------------------------------------------------------------
# fast identity predicates on raw mod-p tuples
# ---------------------------------------------------------------------------

def _prod(c, n, p, i, j, k):
    # coordinate k of e_i * e_j
    return c[(i * n + j) * n + k]


def _vec_prod_basis(c, n, p, vec, k):
    # (sum_m vec[m] e_m) * e_k
    return tuple(
        sum(vec[m] * _prod(c, n, p, m, k, t) for m in range(n)) % p
        for t in range(n)
    )


def _basis_prod_vec(c, n, p, i, vec):
    return tuple(
        sum(vec[m] * _prod(c, n, p, i, m, t) for m in range(n)) % p
        for t in range(n)
    )


def _row(c, n, i, j):
    base = (i * n + j) * n
    return c[base:base + n]


def _antiassociator_raw(c, n, p, i, j, k):
    left = _vec_prod_basis(c, n, p, _row(c, n, i, j), k)
    right = _basis_prod_vec(c, n, p, i, _row(c, n, j, k))
    return tuple((a + b) % p for a, b in zip(left, right))


def _passes_antiassociative(c, n, p):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if any(_antiassociator_raw(c, n, p, i, j, k)):
                    return False
    return True


def _passes_left_pre_jj(c, n, p):
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                d1 = _antiassociator_raw(c, n, p, i, j, k)
                d2 = _antiassociator_raw(c, n, p, j, i, k)
                if any((a + b) % p for a, b in zip(d1, d2)):
                    return False
    return True


def _passes_right_pre_jj(c, n, p):
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                d1 = _antiassociator_raw(c, n, p, i, j, k)
                d2 = _antiassociator_raw(c, n, p, i, k, j)
                if any((a + b) % p for a, b in zip(d1, d2)):
                    return False
    return True


def _passes_operad(c, n, p):
    return _passes_left_pre_jj(c, n, p)


def _passes_jj(c, n, p):
    for i in range(n):
        for j in range(i + 1, n):
            if any((a - b) % p for a, b in zip(_row(c, n, i, j), _row(c, n, j, i))):
                return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t1 = _vec_prod_basis(c, n, p, _row(c, n, i, j), k)
                t2 = _vec_prod_basis(c, n, p, _row(c, n, k, i), j)
                t3 = _vec_prod_basis(c, n, p, _row(c, n, j, k), i)
                if any((a + b + d) % p for a, b, d in zip(t1, t2, t3)):
                    return False
    return True


_RAW_PREDICATES = {
    "antiassociative": _passes_antiassociative,
    "left_pre_jj": _passes_left_pre_jj,
    "right_pre_jj": _passes_right_pre_jj,
    "operad": _passes_operad,
    "jj": _passes_jj,
}


def _scan_slab(p: int, n: int, kind: str, prefix: tuple) -> list[tuple]:
    """All solutions whose tuple starts with ``prefix``, in lex order."""
    predicate = _RAW_PREDICATES[kind]
    free = n ** 3 - len(prefix)
    out = []
    for tail in itertools.product(range(p), repeat=free):
        c = prefix + tail
        if predicate(c, n, p):
            out.append(c)
    return out


def enumerate_solutions(dim: int, field, kind: str, candidates=None,
                        max_scan: int = DEFAULT_MAX_SCAN,
                        workers: int = 1) -> list[ConstantTuple]:
    """All structure-constant tuples of dimension ``dim`` passing ``kind``.

    Over a prime field this scans all p^(dim^3) tuples (guarded by
    ``max_scan``) in lexicographic order.  Over the rationals no enumeration
    is possible; pass explicit ``candidates`` and they are verified instead.
    """
    if kind not in IDENTITY_KINDS:
        raise FieldError(f"unknown identity kind {kind!r}")
    if isinstance(field, RationalField):
        if candidates is None:
            raise FieldError(
                "exhaustive enumeration needs a prime field; over the "
                "rationals supply candidate tuples to verify"
            )
        out = []
        for cand in candidates:
            entries = tuple(field.of(x) for x in cand)
            alg = algebra_from_tuple(field, dim, entries)
            from .algebra import passes_identity

            if passes_identity(alg, kind):
                out.append(ConstantTuple(dim, entries))
        return out
    if not isinstance(field, PrimeField):
        raise FieldError(f"unsupported field {field!r}")
    p = field.p
    if candidates is not None:
        out = []
        for cand in candidates:
            c = tuple(field.of(x) for x in cand)
            if _RAW_PREDICATES[kind](c, dim, p):
                out.append(ConstantTuple(dim, c))
        return out
    count = p ** (dim ** 3)
    if count > max_scan:
        raise FieldError(
            f"scan of {count} tuples exceeds the limit of {max_scan}; "
            f"raise max_scan to force it"
        )
    prefixes = [(v,) for v in range(p)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_slab, [p] * p, [dim] * p,
                                   [kind] * p, prefixes))
    else:
        chunks = [_scan_slab(p, dim, kind, pre) for pre in prefixes]
    return [ConstantTuple(dim, c) for chunk in chunks for c in chunk]


@lru_cache(maxsize=None)
def gl_matrices(p: int, n: int) -> tuple:
    """All invertible n x n matrices over GF(p), as flat row-major tuples."""
    out = []
    for flat in itertools.product(range(p), repeat=n * n):
        if _det_raw(flat, n, p) != 0:
            out.append(flat)
    return tuple(out)


def _det_raw(flat, n, p):
    m = [list(flat[r * n:(r + 1) * n]) for r in range(n)]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            if m[r][col] % p:
                factor = m[r][col] * inv % p
                for cc in range(col, n):
                    m[r][cc] = (m[r][cc] - factor * m[col][cc]) % p
    return det % p


def _inv_raw(flat, n, p):
    m = [list(flat[r * n:(r + 1) * n]) for r in range(n)]
    aug = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] % p)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(m[col][col], -1, p)
        m[col] = [x * inv % p for x in m[col]]
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and m[r][col] % p:
                factor = m[r][col]
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[col])]
                aug[r] = [(x - factor * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(x for row in aug for x in row)


def transport_tuple(c: tuple, flat_p: tuple, n: int, p: int,
                    flat_p_inv: tuple | None = None) -> tuple:
    """Structure constants in the basis whose columns are given by ``flat_p``."""
    if flat_p_inv is None:
        flat_p_inv = _inv_raw(flat_p, n, p)
    cols = [[flat_p[r * n + i] for r in range(n)] for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            w = [0] * n
            for a in range(n):
                ca = cols[i][a]
                if not ca:
                    continue
                for b in range(n):
                    cb = cols[j][b]
                    if not cb:
                        continue
                    s = ca * cb % p
                    base = (a * n + b) * n
                    for k in range(n):
                        w[k] = (w[k] + s * c[base + k]) % p
            for k in range(n):
                out.append(
                    sum(flat_p_inv[k * n + t] * w[t] for t in range(n)) % p
                )
    return tuple(out)


def find_isomorphism(a: Algebra, b: Algebra, bound: int = 2,
                     max_scan: int = DEFAULT_MAX_SCAN) -> LinearMap | None:
    """Search for an invertible P with apply_basis_change(a, P) == b.

    Over a prime field the scan covers all of GL_n; over the rationals it
    covers integer matrices with entries in [-bound, bound].  Returns the
    first matrix found in scan order, or None when the search space is
    exhausted.
    """
    if a.field != b.field:
        raise FieldError("isomorphism search needs a common field")
    if a.dim != b.dim:
        raise ShapeError("isomorphism search needs equal dimensions")
    n = a.dim
    f = a.field
    if isinstance(f, PrimeField):
        p = f.p
        if p ** (n * n) > max_scan:
            raise FieldError(
                f"GL scan over {p ** (n * n)} matrices exceeds {max_scan}"
            )
        ca, cb = tuple_from_algebra(a), tuple_from_algebra(b)
        for flat in gl_matrices(p, n):
            if transport_tuple(ca, flat, n, p) == cb:
                rows = tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
                return LinearMap(f, rows)
        return None
    entries = range(-bound, bound + 1)
    for flat in itertools.product(entries, repeat=n * n):
        rows = tuple(tuple(f.of(x) for x in flat[r * n:(r + 1) * n]) for r in range(n))
        mat = LinearMap(f, rows)
        if not mat.is_invertible():
            continue
        if apply_basis_change(a, mat).c == b.c:
            return mat
    return None


def classify(dim: int, field: PrimeField, kind: str,
             max_scan: int = DEFAULT_MAX_SCAN, workers: int = 1) -> OrbitCensus:
    """Census of all solutions of ``kind`` in dimension 1 or 2 over GF(p).

    Solutions are grouped into GL-orbits by full closure; each orbit is named
    by its lexicographically smallest member.  Output is deterministic for
    any worker count.
    """
    if dim not in (1, 2):
        raise ShapeError("classification is implemented for dimensions 1 and 2")
    if not isinstance(field, PrimeField):
        raise FieldError("classification runs over prime fields")
    p = field.p
    solutions = enumerate_solutions(dim, field, kind,
                                    max_scan=max_scan, workers=workers)
    tuples = [s.entries for s in solutions]
    solution_set = set(tuples)
    gl = gl_matrices(p, dim)
    inverses = {flat: _inv_raw(flat, dim, p) for flat in gl}
    assigned = set()
    orbits = []
    for c in tuples:
        if c in assigned:
            continue
        orbit = {transport_tuple(c, flat, dim, p, inverses[flat]) for flat in gl}
        if not orbit <= solution_set:
            raise FieldError(
                "orbit escaped the solution set; identity is not basis-invariant"
            )
        assigned |= orbit
        orbits.append(Orbit(representative=min(orbit), size=len(orbit)))
    return OrbitCensus(
        field=field,
        kind=kind,
        dim=dim,
        total=len(tuples),
        orbits=tuple(orbits),
        warnings=characteristic_warnings(field),
        metadata={
            "scanned": p ** (dim ** 3),
            "gl_order": len(gl),
            "workers": workers,
        },
    )
