"""Acceptance gate: every reproduction target, one test per criterion.

All criteria are exact (zero tolerance).  Run with `pytest -v -s` to see
one printed pass/fail line per criterion.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from quadcover import canonical, covers, exact, golden, picard, sheaves, symmetry
from quadcover.covers import SixTuple
from quadcover.picard import ZERO, canonical_class, configuration, intersect


def _check(num, desc, fn):
    try:
        fn()
    except Exception:
        print(f"criterion {num:2d} [{desc}]: FAIL")
        raise
    print(f"criterion {num:2d} [{desc}]: PASS")


@pytest.fixture(scope="module")
def reps():
    return {k: SixTuple.from_residues(v) for k, v in golden.REFERENCE_TUPLES.items()}


def test_criterion_01_admissible_count():
    def body():
        assert len(covers.admissible_array(5)) == 201600

    _check(1, "admissible count 201600", body)


def test_criterion_02_orbit_partition(reps):
    def body():
        part = symmetry.orbit_partition(5)
        assert sorted(o.size for o in part.orbits) == [28800, 57600, 57600, 57600]
        ids = {name: part.orbit_of(t) for name, t in reps.items()}
        assert len(set(ids.values())) == 4

    _check(2, "4 orbits {28800, 3 x 57600}, reps distinct", body)


def test_criterion_03_group_orders():
    def body():
        gc = symmetry.group_closure(5)
        assert gc.s5_order == 120
        assert gc.order == 57600
        swaps = symmetry.s5_generators(5)
        from quadcover.gf import gl2_enumerate

        for m in gl2_enumerate(5):
            block = symmetry.gl2_action(m)
            for s in swaps:
                assert np.array_equal(
                    (s.mat * block.mat).array, (block.mat * s.mat).array
                )

    _check(3, "group orders 120 / 57600 and commutation", body)


def test_criterion_04_homology():
    def body():
        pres = picard.h1_complement()
        assert pres.rank == 5
        assert pres.torsion == ()
        # certified directly on the Smith normal form of the 10x5 matrix
        factors = exact.invariant_factors(picard.intersection_matrix())
        assert list(factors) == [1, 1, 1, 1, 1]

    _check(4, "complement homology free of rank 5", body)


def test_criterion_05_sheaf_table(reps):
    def body():
        table = sheaves.sheaf_table(reps["U3"], 5)
        assert len(table) == 25
        for cs in table:
            assert tuple(cs.cls) == golden.SHEAF_TABLE_U3[cs.chi]

    _check(5, "U3 character sheaf table, 25 entries", body)


def test_criterion_06_coeff_table(reps):
    def body():
        for chi, row in golden.COEFF_ROWS_U3.items():
            assert tuple(sheaves.coeffs(reps["U3"], chi, 5)) == row

    _check(6, "U3 residue rows (1,3),(2,1),(3,2),(4,1)", body)


def test_criterion_07_invariants(reps):
    def body():
        for name, t in reps.items():
            inv = sheaves.invariants(t, 5)
            assert {"k2": inv.k2, "chi": inv.chi, "pg": inv.pg, "q": inv.q} == (
                golden.INVARIANTS[name]
            )
        adj = canonical_class() + Fraction(4, 5) * configuration().total_branch_class()
        assert 25 * intersect(adj, adj) == 45

    _check(7, "invariants (45, 5, 4, 0) and q = 2 twins", body)


def test_criterion_08_ram_curves(reps):
    def body():
        for r in sheaves.ram_curve_numbers(reps["U3"], 5):
            assert (r.selfint, r.kdot, r.genus) == (-1, 3, 2)

    _check(8, "ten ramification curves (-1, 3, genus 2)", body)


def test_criterion_09_canonical(reps):
    def body():
        rep = canonical.degree_certificate(reps["U3"], 5)
        ref = golden.CANONICAL_U3
        assert dict(rep.basis.entries) == ref["basis"]
        assert rep.fixed_part == ref["fixed_part"]
        points = {bp.pair: bp.type.multiplicities() for bp in rep.base_points}
        assert points == ref["base_points"]
        assert rep.moving_selfint == 38
        assert rep.type_square_sum == 19
        assert rep.degree_product == 19

    _check(9, "canonical: basis, fixed R3, 5 base points, degree 19", body)


def test_criterion_10_property_suites(reps):
    def body():
        arr = covers.admissible_array(5)
        codes = covers.encode_rows(arr)
        # generators preserve admissibility on the full enumerated set
        for g in symmetry.default_generators(5):
            img_codes = covers.encode_rows(g.mat.apply_rows(arr))
            pos = np.searchsorted(codes, img_codes)
            assert (pos < len(codes)).all() and (codes[pos] == img_codes).all()

        # sheaf integrality: all 25 characters on 500 random tuples
        rng = random.Random(1234)
        for _ in range(500):
            t = SixTuple.from_residues(arr[rng.randrange(len(arr))])
            for a in range(5):
                for b in range(5):
                    sheaves.sheaf(t, (a, b), 5)

        # epsilon identity on 200 random triples
        curves = configuration().curves
        for _ in range(200):
            t = SixTuple.from_residues(arr[rng.randrange(len(arr))])
            chi = (rng.randrange(5), rng.randrange(5))
            chi2 = (rng.randrange(5), rng.randrange(5))
            total = ZERO
            for e, curve in zip(sheaves.epsilon(t, chi, chi2, 5), curves):
                total = total + e * curve.cls
            s1 = sheaves.sheaf(t, chi, 5).cls
            s2 = sheaves.sheaf(t, chi2, 5).cls
            s12 = sheaves.sheaf(t, ((chi[0] + chi2[0]) % 5, (chi[1] + chi2[1]) % 5), 5).cls
            assert s1 + s2 - s12 == total

        # blow-up square sums against the resultant oracle
        x, y = sympy.symbols("x y")
        b = canonical.basis(reps["U3"], 5)
        fixed = canonical.fixed_part(b)
        for pair in sorted(golden.CANONICAL_U3["base_points"]):
            ideal = canonical.local_ideal(b, fixed, pair, 5)
            expected = canonical.resolve_type(ideal).square_sum()
            while True:
                f = sum(rng.randint(1, 50) * x ** i * y ** j for i, j in ideal.generators)
                g = sum(rng.randint(1, 50) * x ** i * y ** j for i, j in ideal.generators)
                poly = sympy.Poly(sympy.resultant(f, g, x), y)
                if not poly.is_zero:
                    break
            assert min(m[0] for m in poly.monoms()) == expected

    _check(10, "property suites (closure, integrality, epsilon, oracle)", body)
