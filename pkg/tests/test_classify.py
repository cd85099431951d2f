import pytest

from conftest import GF2, GF3, GF5, brute_force_antiassociative, seeded
from mocklie.algebra import IDENTITY_KINDS, check_identity, passes_identity
from mocklie.catalog import class_algebras
from mocklie.classify import (
    ConstantTuple,
    algebra_from_tuple,
    classify,
    enumerate_solutions,
    find_isomorphism,
    gl_matrices,
    transport_tuple,
    tuple_from_algebra,
)
from mocklie.errors import FieldError, ShapeError
from mocklie.fields import QQ, prime_field
from mocklie.linalg import LinearMap


ZERO8 = (0,) * 8
SQUARE_TUPLE = (0, 1, 0, 0, 0, 0, 0, 0)   # e1e1 = e2
THIRD_TUPLE = (0, 0, 0, 0, 0, 1, 0, 0)    # e2e1 = e2
CUBE_TUPLE = (0, 0, 0, 0, 0, 0, 1, 0)     # e2e2 = e1


def test_flattening_order_matches_convention(classes_f5):
    assert tuple_from_algebra(classes_f5["e1e1=e2"]) == SQUARE_TUPLE
    assert tuple_from_algebra(classes_f5["e2e1=e2"]) == THIRD_TUPLE
    assert tuple_from_algebra(classes_f5["e2e2=e1"]) == CUBE_TUPLE
    alg = algebra_from_tuple(GF5, 2, SQUARE_TUPLE)
    assert alg.c[0][0] == (0, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_enumeration_matches_independent_brute_force(p):
    oracle = set(map(tuple, brute_force_antiassociative(p)))
    field = prime_field(p)
    lib = {s.entries for s in enumerate_solutions(2, field, "antiassociative")}
    assert lib == oracle
    assert len(oracle) == {2: 28, 3: 9}[p]


def test_zero_tuple_is_always_a_solution():
    for field in (GF2, GF3, GF5):
        for kind in IDENTITY_KINDS:
            sols = {s.entries for s in enumerate_solutions(2, field, kind)}
            assert (0,) * 8 in sols


def test_class_tuple_membership_over_f5(f5_anti_solutions):
    sols = set(f5_anti_solutions)
    assert ZERO8 in sols
    assert SQUARE_TUPLE in sols
    assert CUBE_TUPLE in sols
    # the catalogued third class does not satisfy the identity it is filed
    # under; the mechanical system generation rules it out
    assert THIRD_TUPLE not in sols


def test_enumeration_is_sorted_and_fixed_size(f5_anti_solutions):
    assert list(f5_anti_solutions) == sorted(f5_anti_solutions)
    assert len(f5_anti_solutions) == 25


def test_prejj_census_equals_antiassociative_over_f5(f5_anti_solutions):
    prejj = {s.entries for s in enumerate_solutions(2, GF5, "left_pre_jj")}
    assert prejj == set(f5_anti_solutions)


def test_prejj_census_strictly_larger_over_f2():
    anti = {s.entries for s in enumerate_solutions(2, GF2, "antiassociative")}
    prejj = {s.entries for s in enumerate_solutions(2, GF2, "left_pre_jj")}
    assert anti < prejj
    assert len(prejj) == 58


def test_every_antiassociative_solution_passes_prejj_checks(f5_anti_solutions):
    for entries in f5_anti_solutions:
        alg = algebra_from_tuple(GF5, 2, entries)
        for kind in ("left_pre_jj", "right_pre_jj", "operad"):
            assert check_identity(alg, kind).passed


def test_rational_mode_verifies_candidates():
    out = enumerate_solutions(
        2, QQ, "antiassociative",
        candidates=[ZERO8, SQUARE_TUPLE, THIRD_TUPLE, CUBE_TUPLE],
    )
    verified = [tuple(int(x) for x in c.entries) for c in out]
    assert verified == [ZERO8, SQUARE_TUPLE, CUBE_TUPLE]


def test_rational_mode_requires_candidates():
    with pytest.raises(FieldError):
        enumerate_solutions(2, QQ, "antiassociative")


def test_scan_guard():
    with pytest.raises(FieldError, match="exceeds"):
        enumerate_solutions(2, prime_field(11), "antiassociative")


def test_constant_tuple_length_checked():
    with pytest.raises(ShapeError):
        ConstantTuple(2, (0,) * 7)


# ---------------------------------------------------------------------------
# isomorphism search
# ---------------------------------------------------------------------------

def test_identity_isomorphism(classes_f5):
    alg = classes_f5["e1e1=e2"]
    iso = find_isomorphism(alg, alg)
    assert iso == LinearMap.identity(GF5, 2)


def test_scaling_isomorphism_over_f5():
    a = algebra_from_tuple(GF5, 2, SQUARE_TUPLE)
    b = algebra_from_tuple(GF5, 2, (0, 2, 0, 0, 0, 0, 0, 0))
    iso = find_isomorphism(a, b)
    assert iso is not None
    moved = transport_tuple(SQUARE_TUPLE, tuple(x for row in iso.entries for x in row), 2, 5)
    assert moved == (0, 2, 0, 0, 0, 0, 0, 0)


def test_square_and_cube_classes_are_isomorphic(classes_f5, classes_qq):
    iso5 = find_isomorphism(classes_f5["e1e1=e2"], classes_f5["e2e2=e1"])
    assert iso5 is not None
    iso_qq = find_isomorphism(classes_qq["e1e1=e2"], classes_qq["e2e2=e1"], bound=1)
    assert iso_qq is not None
    from mocklie.algebra import apply_basis_change, structure_equal

    assert structure_equal(
        apply_basis_change(classes_qq["e1e1=e2"], iso_qq), classes_qq["e2e2=e1"]
    )


def test_zero_is_not_isomorphic_to_nonzero(classes_f5):
    assert find_isomorphism(classes_f5["zero"], classes_f5["e2e2=e1"]) is None


def test_iso_dimension_mismatch():
    with pytest.raises(ShapeError):
        find_isomorphism(
            algebra_from_tuple(GF5, 2, ZERO8),
            algebra_from_tuple(GF5, 1, (0,)),
        )


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_dim1():
    census5 = classify(1, GF5, "antiassociative")
    assert census5.total == 1
    assert [o.representative for o in census5.orbits] == [(0,)]
    # characteristic 2 admits the extra idempotent line and carries a warning
    census2 = classify(1, GF2, "antiassociative")
    assert census2.total == 2
    assert len(census2.orbits) == 2
    assert census2.warnings


def test_classify_dim2_f5_antiassociative():
    census = classify(2, GF5, "antiassociative")
    assert census.total == 25
    assert [(o.representative, o.size) for o in census.orbits] == [
        (ZERO8, 1),
        (CUBE_TUPLE, 24),
    ]
    assert census.metadata["scanned"] == 5 ** 8
    assert census.metadata["gl_order"] == 480


def test_classify_dim2_f5_prejj_matches_antiassociative():
    anti = classify(2, GF5, "antiassociative")
    prejj = classify(2, GF5, "left_pre_jj")
    assert [(o.representative, o.size) for o in anti.orbits] == [
        (o.representative, o.size) for o in prejj.orbits
    ]


def test_classify_dim2_f2():
    census = classify(2, GF2, "antiassociative")
    assert census.total == 28
    assert sum(o.size for o in census.orbits) == 28
    assert len(census.orbits) == 8


def test_orbit_members_share_all_verdicts():
    rng = seeded(50)
    base = CUBE_TUPLE
    gl = gl_matrices(5, 2)
    for _ in range(20):
        flat = gl[rng.randrange(len(gl))]
        moved = transport_tuple(base, flat, 2, 5)
        alg_a = algebra_from_tuple(GF5, 2, base)
        alg_b = algebra_from_tuple(GF5, 2, moved)
        for kind in IDENTITY_KINDS:
            assert passes_identity(alg_a, kind) == passes_identity(alg_b, kind)


def test_classify_deterministic_and_worker_independent():
    a = classify(2, GF3, "antiassociative")
    b = classify(2, GF3, "antiassociative")
    c = classify(2, GF3, "antiassociative", workers=2)
    assert a.orbits == b.orbits == c.orbits
    assert a.total == c.total


def test_classify_guards():
    with pytest.raises(FieldError, match="exceeds"):
        classify(2, prime_field(11), "antiassociative")
    with pytest.raises(ShapeError):
        classify(3, GF2, "antiassociative")
    with pytest.raises(FieldError):
        classify(2, QQ, "antiassociative")


def test_orbit_representative_is_lex_smallest():
    census = classify(2, GF3, "left_pre_jj")
    gl = gl_matrices(3, 2)
    for orbit in census.orbits:
        members = {
            transport_tuple(orbit.representative, flat, 2, 3) for flat in gl
        }
        assert orbit.representative == min(members)
        assert orbit.size == len(members)
