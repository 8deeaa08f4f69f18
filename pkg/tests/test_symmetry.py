import random

import numpy as np
import pytest

from quadcover import covers, symmetry
from quadcover.covers import SixTuple
from quadcover.gf import Mat, gl2_enumerate


def _identity():
    return symmetry.SymmetryElement(Mat.identity(12))


def test_s5_generator_names_and_u1_block():
    gens = symmetry.s5_generators()
    assert [g.provenance for g in gens] == ["(01)", "(02)", "(03)", "(04)"]
    g01 = gens[0]
    # (01) fixes the u1 block: first two matrix rows are unit rows
    assert list(g01.mat.array[0]) == [1] + [0] * 11
    assert list(g01.mat.array[1]) == [0, 1] + [0] * 10


def test_swap_04_example(u3):
    g04 = symmetry.s5_generators()[3]
    assert g04.apply(u3) == SixTuple.parse("1,0,1,0,0,1,0,3,1,2,2,4")


def test_swaps_are_involutions():
    ident = _identity()
    for g in symmetry.s5_generators():
        assert g * g == ident


def test_swaps_square_to_identity_on_admissible_tuples():
    rng = random.Random(3)
    arr = covers.admissible_array(5)
    sample = [SixTuple.from_residues(arr[rng.randrange(len(arr))]) for _ in range(50)]
    for g in symmetry.s5_generators():
        for t in sample:
            assert g.apply(g.apply(t)) == t


def test_gl2_action_examples(u3):
    ident = symmetry.gl2_action([[1, 0], [0, 1]])
    assert ident == _identity()
    scale = symmetry.gl2_action([[2, 0], [0, 2]])
    assert scale.apply(u3) == SixTuple.parse("2,0,2,0,0,2,3,2,1,4,2,2")
    with pytest.raises(ValueError):
        symmetry.gl2_action([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        symmetry.gl2_action(Mat.identity(12))


def test_gl2_action_preserves_admissibility():
    rng = random.Random(41)
    arr = covers.admissible_array(5)
    mats = gl2_enumerate(5)
    for _ in range(100):
        t = SixTuple.from_residues(arr[rng.randrange(len(arr))])
        g = symmetry.gl2_action(mats[rng.randrange(len(mats))])
        assert covers.is_admissible(g.apply(t))


def test_group_closure_orders():
    gc = symmetry.group_closure(5)
    assert gc.s5_order == 120
    assert gc.gl2_order == 480
    assert gc.order == 57600
    assert len(gc.elements) == 57600
    assert len(gc.s5_elements) == 120
    assert _identity() in gc.s5_elements


def test_swaps_commute_with_every_gl2_element():
    swaps = symmetry.s5_generators()
    for m in gl2_enumerate(5):
        block = symmetry.gl2_action(m)
        for s in swaps:
            left = (s.mat * block.mat).array
            right = (block.mat * s.mat).array
            assert np.array_equal(left, right)  # literal matrices commute


def test_orbit_partition(representatives):
    part = symmetry.orbit_partition(5)
    sizes = sorted(o.size for o in part.orbits)
    assert sizes == [28800, 57600, 57600, 57600]
    assert sum(sizes) == 201600
    assert all(57600 % s == 0 for s in sizes)
    stabs = {o.size: o.stabilizer_order for o in part.orbits}
    assert stabs == {28800: 2, 57600: 1}
    ids = {name: part.orbit_of(t) for name, t in representatives.items()}
    assert sorted(ids.values()) == [0, 1, 2, 3]


def test_orbit_representative_is_lex_minimal():
    part = symmetry.orbit_partition(5)
    arr = covers.admissible_array(5)
    for orb in part.orbits:
        members = arr[orb.member_indices]
        codes = covers.encode_rows(members)
        rep_code = covers.encode_rows(np.array([orb.representative.residues]))[0]
        assert rep_code == codes.min()
        assert orb.size == len(orb.member_indices)


def test_stabilizer_order_by_direct_count(u1, u3):
    # count closure elements fixing the tuple; must equal |G| / orbit size
    gc = symmetry.group_closure(5)
    for t, expected in ((u1, 2), (u3, 1)):
        vec = np.array(t.residues, dtype=np.int64)
        fixers = sum(
            1 for g in gc.elements if tuple(g.mat.apply(vec)) == t.residues
        )
        assert fixers == expected


def test_gl2_block_action_is_faithful():
    # closure of the block generators alone, keyed on the sum-zero action
    blocks = [symmetry.gl2_action(m) for m in symmetry.gf.gl2_generators(5)]
    assert len(symmetry.mulclose(blocks)) == 480


def test_orbit_lookup_stable_under_group(u3):
    part = symmetry.orbit_partition(5)
    oid = part.orbit_of(u3)
    rng = random.Random(17)
    elements = symmetry.group_closure(5).elements
    for _ in range(25):
        g = elements[rng.randrange(len(elements))]
        assert part.orbit_of(g.apply(u3)) == oid


def test_action_preserves_admissibility_exhaustively():
    arr = covers.admissible_array(5)
    codes = covers.encode_rows(arr)
    for g in symmetry.default_generators(5):
        imgs = g.mat.apply_rows(arr)
        img_codes = covers.encode_rows(imgs)
        pos = np.searchsorted(codes, img_codes)
        assert (pos < len(codes)).all()
        assert (codes[pos] == img_codes).all()


def test_orbits_on_a_single_closed_orbit(u1):
    # one orbit is itself closed under the action; exercise the
    # list-of-SixTuple input path on the smallest one
    part = symmetry.orbit_partition(5)
    arr = covers.admissible_array(5)
    orb = part.orbits[part.orbit_of(u1)]
    assert orb.size == 28800
    members = [SixTuple.from_residues(r) for r in arr[orb.member_indices]]
    sub = symmetry.orbits(members)
    assert len(sub) == 1
    assert sub[0].size == 28800
    assert sub[0].stabilizer_order == 2
    assert sub[0].representative == orb.representative


def test_orbits_fails_loudly_off_closed_set(u3):
    with pytest.raises(ValueError, match="outside the input set"):
        symmetry.orbits([u3])


def test_orbits_rejects_duplicates(u3):
    with pytest.raises(ValueError, match="duplicates"):
        symmetry.orbits([u3, u3])
