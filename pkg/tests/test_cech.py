import random
from pathlib import Path

import pytest
from sympy import Matrix

from symkernel.cech import (
    ChainComplex,
    Cover,
    DoubleComplex,
    GroupAction,
    check_equivalence,
    check_euler,
    check_full_exactness,
    check_homotopies,
    check_reorderings,
    check_total_complexes,
    check_transitive_kernels,
    enumerate_covers,
    euler_char,
    full_cech,
    homotopy_witness,
    is_finitistic,
    is_unifibrant,
    point_complex,
    random_cover,
    reduced_cech,
    reorder_iso,
    smith,
    total_complex,
    transitive_actions,
    transitive_kernel,
    unifibrant_witnesses,
)
from symkernel.codec import decode_cover, load_json
from symkernel.errors import (
    NonCommutingSquareError,
    NotSurjectiveError,
    NotTransitiveError,
    NotUnifibrantError,
    ShapeError,
)
from symkernel.rings import GF, QQ
from symkernel.suite import cover_check

# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def load_cover(name: str) -> Cover:

    return decode_cover(load_json(RESOURCES / name))


def test_sample_cover_is_unifibrant():

    cover = load_cover("sample_cover.json")

    assert cover.profile("a") == (1, 1)
    assert cover.profile("b") == (1, 0)
    assert unifibrant_witnesses(cover) == {"a": 0, "b": 0}
    assert is_unifibrant(cover)
    assert is_finitistic(cover)
    assert [euler_char(cover, x) for x in cover.base] == [0, 0]
    assert reduced_cech(cover).is_exact()


def test_double_cover_is_not_unifibrant():

    cover = load_cover("double_cover.json")
    homology = reduced_cech(cover).homology()

    assert euler_char(cover, "a") == -1
    assert not is_unifibrant(cover)
    assert not is_finitistic(cover)
    assert homology[1].is_zero()
    assert homology[0].rank == 1
    with pytest.raises(NotUnifibrantError):
        homotopy_witness(cover, "a")


def test_uncovered_point():

    cover = Cover.from_profiles([[1, 0]])

    assert cover.uncovered == ["p1"]
    with pytest.raises(NotSurjectiveError):
        is_finitistic(cover)


def test_piece_must_land_in_base():

    with pytest.raises(ShapeError):
        decode_cover({"base": ["a"], "pieces": [{"elements": ["p"], "map": {"p": "b"}}]})


def test_augmentation_and_faces():

    cover = load_cover("sample_cover.json")
    C = reduced_cech(cover)

    assert C.rank(1) == 2
    assert C.rank(0) == 3
    assert C.rank(-1) == 1
    assert (C.d(0) * C.d(-1)).is_zero_matrix
    assert C.euler_characteristic() == 0


def test_full_complex_exact_above_truncation():

    C = full_cech(load_cover("double_cover.json"), 3)
    homology = C.homology()

    assert C.rank(-1) == 4
    assert all(homology[k].is_zero() for k in C.degrees if k > -3)


def test_homotopy_contracts():

    cover = load_cover("sample_cover.json")
    for x in cover.base:
        assert homotopy_witness(cover, x).verify()


def test_point_complex_depends_on_profile():

    first = Cover.from_profiles([[1, 2], [2, 1]])
    second = Cover.from_profiles([[2, 1], [1, 2]])

    assert point_complex(first, "p0") is point_complex(second, "p1")


def test_reorder_isomorphism():

    cover = Cover.from_profiles([[1, 1], [2, 0], [1, 1]])
    there = reorder_iso(cover, (0, 1, 2), (2, 0, 1))
    back = reorder_iso(cover, (2, 0, 1), (0, 1, 2))

    assert there.is_isomorphism()
    assert there.then(back).is_identity()


def test_enumerated_covers():

    covers = list(enumerate_covers(2, 2, 2))

    assert covers
    assert all(c.surjective for c in covers)
    assert check_equivalence(covers).ok
    assert check_euler(covers).ok
    assert check_homotopies(covers).ok
    assert check_reorderings(covers).ok


def test_random_covers_are_surjective():

    rng = random.Random(13)
    covers = [random_cover(rng, max_piece_size=1) for _ in range(10)]

    assert all(c.surjective for c in covers)
    assert check_full_exactness(covers, 3).ok


def test_smith_form():

    M = Matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    decomposition = smith(M)

    assert decomposition.factors == (2, 6, 12)
    assert decomposition.verify(M)


def test_complex_validation():

    with pytest.raises(ShapeError):
        ChainComplex({0: ["a"], 1: ["b"]}, {0: Matrix([[1, 1]])})
    with pytest.raises(ShapeError):
        ChainComplex({0: ["a"], 1: ["b"], 2: ["c"]}, {0: Matrix([[1]]), 1: Matrix([[1]])})


def test_total_complex():

    ranks = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    one = Matrix([[1]])
    double = DoubleComplex(
        ranks, {(0, 0): one, (0, 1): one}, {(0, 0): one, (1, 0): one}
    )
    tot = total_complex(double)

    assert tot.ranks() == {0: 1, 1: 2, 2: 1}
    assert tot.is_exact()
    assert check_total_complexes(random.Random(2), 10).ok

    broken = DoubleComplex(ranks, {(0, 0): one, (0, 1): one}, {(0, 0): one, (1, 0): -one * 2})
    with pytest.raises(NonCommutingSquareError):
        total_complex(broken)


def test_transitive_kernels():

    cyclic = GroupAction.from_generators(3, [[1, 2, 0]], "cyclic")
    found = transitive_kernel(cyclic)

    assert found.kernel_is_diagonal
    assert found.image_rank == 2
    assert found.cokernel_free
    assert transitive_kernel(cyclic, GF(3)).image_rank == 2
    assert check_transitive_kernels(transitive_actions(4, 8), (QQ, GF(2))).ok


def test_intransitive_action():

    with pytest.raises(NotTransitiveError):
        transitive_kernel(GroupAction.from_generators(3, [[1, 0, 2]]))


def test_cover_check_reports():

    cover = load_cover("double_cover.json")

    assert cover_check(cover, "unifibrant") == {
        "check": "unifibrant", "ok": False, "witnesses": [{"x": "a", "piece": None}],
    }
    assert cover_check(cover, "finitistic")["euler"] == [{"x": "a", "chi": -1}]
    report = cover_check(cover, "homology", 2)
    assert not report["ok"]
    assert report["reduced"]["0"] == {"rank": 1, "torsion": []}


def test_homology_depth_only_truncates_the_full_complex():

    cover = Cover.from_profiles([[1], [1]])
    report = cover_check(cover, "homology", 0)

    assert is_finitistic(cover)
    assert report["ok"]
    assert report["full_exact"]
    assert set(report["reduced"]) == {"1", "0", "-1"}
    assert all(h == {"rank": 0, "torsion": []} for h in report["reduced"].values())
