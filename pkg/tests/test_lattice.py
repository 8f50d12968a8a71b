import numpy as np
import pytest

from colorsurgery.codes import (
    build_thin_code,
    build_triangular_code,
    kernel_distance,
    min_weight_logical,
    sector_distance,
)
from colorsurgery.lattice import (
    ColorLattice,
    Face,
    LatticeError,
    center_color,
    edge_color,
    is_center,
    red_partner,
    triangular_region,
    trimmed_faces,
    verify_lattice,
)
from colorsurgery.pauli import commutes, gf2_rank


@pytest.mark.parametrize("d,n,faces", [(3, 7, 3), (5, 19, 9), (7, 37, 18)])
def test_triangular_counts(d, n, faces):
    patch = build_triangular_code(d)
    assert patch.n == n == (3 * d * d + 1) // 4
    assert len(patch.lattice.faces) == faces
    assert patch.k == 1


def test_triangular_qubit_density_limit():
    # (3d^2+1)/4 / d^2 -> 3/4
    d = 25
    assert abs((3 * d * d + 1) / 4 / d**2 - 0.75) < 1e-3


def test_triangular_boundaries_have_distinct_colors():
    patch = build_triangular_code(5)
    labels = sorted(b.label for b in patch.lattice.boundaries)
    assert labels == ["b", "g", "r"]
    for b in patch.lattice.boundaries:
        assert len(b.sites) == 5


def test_even_distance_rejected():
    with pytest.raises(LatticeError):
        build_triangular_code(4)
    with pytest.raises(LatticeError):
        build_triangular_code(1)


def test_verify_valid_triangular_lattice():
    patch = build_triangular_code(3)
    rep = verify_lattice(patch.lattice)
    assert rep.ok and rep.single_type_faces == []


def test_verify_flags_adjacent_same_color():
    patch = build_triangular_code(3)
    lat = patch.lattice
    faces = [Face(f.center, f.color, f.sites, f.kinds) for f in lat.faces]
    faces[1] = Face(faces[1].center, faces[0].color, faces[1].sites, faces[1].kinds)
    broken = ColorLattice(sites=lat.sites, faces=faces, boundaries=lat.boundaries)
    rep = verify_lattice(broken)
    assert any("share an edge" in v for v in rep.violations)


def test_red_edges_form_perfect_matching_of_plane():
    sites, _ = triangular_region(9)
    for p in sites:
        q = red_partner(p)
        assert red_partner(q) == p
        assert edge_color(p, q) == "r"


@pytest.mark.parametrize("d", [3, 5])
def test_triangular_brute_force_distance(d):
    patch = build_triangular_code(d)
    assert sector_distance(patch.lattice, "X", d) == d
    assert sector_distance(patch.lattice, "Z", d) == d


def test_stabilizers_commute_and_logicals_check():
    for d in (3, 5, 7):
        patch = build_triangular_code(d)
        assert patch.check()


def test_thin_code_3_7():
    patch = build_thin_code(3, 7)
    assert patch.k == 2
    assert min_weight_logical(patch.lattice, "X", 4)[0] == 3
    assert kernel_distance(patch.lattice, "X") == 3
    assert kernel_distance(patch.lattice, "Z") == 7
    rep = verify_lattice(patch.lattice)
    assert rep.ok
    assert rep.single_type_faces  # x/z-marked faces are intentional
    labels = sorted(b.label for b in patch.lattice.boundaries)
    assert labels == ["pauli-X", "pauli-X", "pauli-Z", "pauli-Z"]


def test_thin_code_3_3_symmetric():
    patch = build_thin_code(3, 3)
    assert patch.k == 2
    assert kernel_distance(patch.lattice, "X") == 3
    assert kernel_distance(patch.lattice, "Z") == 3


def test_thin_code_exhaustive_weight_bound():
    patch = build_thin_code(3, 7)
    # no Z logical up to weight 6, one at weight 7
    assert min_weight_logical(patch.lattice, "Z", 6) is None
    assert min_weight_logical(patch.lattice, "Z", 7)[0] == 7


def test_thin_code_rejects_bad_distances():
    with pytest.raises(LatticeError):
        build_thin_code(2, 7)
    with pytest.raises(LatticeError):
        build_thin_code(3, 1)


def test_json_round_trip():
    patch = build_thin_code(3, 3)
    text = patch.lattice.to_json()
    back = ColorLattice.from_json(text)
    assert back.sites == patch.lattice.sites
    assert [f.sites for f in back.faces] == [f.sites for f in patch.lattice.faces]
    assert [f.kinds for f in back.faces] == [f.kinds for f in patch.lattice.faces]
    assert [(b.label, b.sites) for b in back.boundaries] == [
        (b.label, b.sites) for b in patch.lattice.boundaries
    ]
