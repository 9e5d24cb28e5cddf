"""Tests for automorphism families and the pullback action."""

import pytest
from hypothesis import given, settings
from sympy import ImmutableMatrix, Rational

from src.autact import (
    Automorphism,
    aut_family,
    h3_lift,
    is_bialgebra_automorphism,
    is_lie_automorphism,
    parse_phi_document,
    phi0,
    psi,
    pullback,
    pullback_matrix,
    quaternion_rotation,
    restrict_to_derived,
    sample_aut,
    sl2_adjoint,
    stabilizer_family,
    translation,
    wedge_square,
)
from src.bialg import Cobracket, LieBialgebra
from src.classify import STANDARD_LABELS, ClassTag, representative
from src.errors import DocumentError, NotAnAutomorphismError, ShapeError, SingularMatrixError
from src.exactnum import identity, mat
from src.liealg import CatalogLabel, Family, catalog_build, derived_subalgebra
from tests.strategies import invertible_matrices, nonzero_rationals, rationals

H3 = CatalogLabel(Family.H3)
R3 = CatalogLabel(Family.R3)
R3_MINUS_ONE = CatalogLabel(Family.R3_LAMBDA, Rational(-1))
R3_PRIME_ZERO = CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(0))
NON_ABELIAN_LABELS = [l for l in STANDARD_LABELS if l.family not in (Family.ABELIAN2, Family.ABELIAN3)]


# -- Helpers ---------------------------------------------------------------


def _act(label: CatalogLabel, rows, **params) -> ImmutableMatrix:
    phi = aut_family(label).instantiate(**params)
    assert is_lie_automorphism(catalog_build(label), phi)
    return pullback_matrix(phi, mat(rows))


class TestMembership:
    @pytest.mark.parametrize("label", STANDARD_LABELS, ids=lambda l: l.name)
    def test_sampled_family_members_are_automorphisms(self, label):
        g = catalog_build(label)
        for phi in sample_aut(aut_family(label), seed=17, count=8):
            assert is_lie_automorphism(g, phi.phi)

    def test_discrete_generators(self):
        assert is_lie_automorphism(catalog_build(R3_MINUS_ONE), phi0())
        assert is_lie_automorphism(catalog_build(R3_PRIME_ZERO), psi())
        assert not is_lie_automorphism(catalog_build(CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(1))), psi())
        assert not is_lie_automorphism(catalog_build(CatalogLabel(Family.R3_LAMBDA, Rational(1, 2))), phi0())

    def test_rejects_non_automorphisms(self):
        g = catalog_build(H3)
        assert not is_lie_automorphism(g, mat([[1, 0, 0], [0, 1, 0], [0, 0, 2]]))
        assert not is_lie_automorphism(g, mat([[1, 0], [0, 1]]))
        with pytest.raises(NotAnAutomorphismError):
            Automorphism(g, mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))

    def test_compose_and_inverse(self):
        g = catalog_build(R3)
        spec = aut_family(R3)
        first = Automorphism(g, spec.instantiate(mu=2, rho=1, a=3, b=-1))
        second = Automorphism(g, spec.instantiate(mu=-1, rho=4, a=0, b=2))
        assert first.compose(first.inverse()).phi == identity(3)
        assert first.compose(second).phi == first.phi * second.phi

    def test_h3_lift_and_translation(self):
        lifted = h3_lift(mat([[1, 2], [3, 4]]))
        assert lifted.phi[2, 2] == -2
        assert translation(catalog_build(R3), 1, -1).phi == mat([[1, 0, 1], [0, 1, -1], [0, 0, 1]])
        with pytest.raises(SingularMatrixError):
            h3_lift(mat([[1, 2], [2, 4]]))

    @settings(max_examples=100, deadline=None)
    @given(invertible_matrices(2), invertible_matrices(2))
    def test_h3_lift_is_a_homomorphism(self, s, t):
        assert h3_lift(ImmutableMatrix(s * t)).phi == h3_lift(s).compose(h3_lift(t)).phi

    @settings(max_examples=30, deadline=None)
    @given(rationals(), rationals(), rationals(), rationals())
    def test_quaternion_rotations_preserve_su2(self, a, b, c, d):
        if (a, b, c, d) == (0, 0, 0, 0):
            return
        rot = quaternion_rotation(a, b, c, d)
        assert rot.T * rot == identity(3)
        assert rot.det() == 1
        assert is_lie_automorphism(catalog_build(CatalogLabel(Family.SU2)), rot)

    @settings(max_examples=30, deadline=None)
    @given(nonzero_rationals(), rationals(), rationals())
    def test_unimodular_conjugation_preserves_sl2(self, a, b, c):
        s = ImmutableMatrix([[a, b], [c, (1 + b * c) / a]])
        assert is_lie_automorphism(catalog_build(CatalogLabel(Family.SL2R)), sl2_adjoint(s))

    def test_restrict_to_derived(self):
        g = catalog_build(R3)
        phi = aut_family(R3).instantiate(mu=2, rho=3, a=5, b=1)
        block = restrict_to_derived(phi, derived_subalgebra(g))
        assert block == mat([[2, 3], [0, 2]])

    @pytest.mark.parametrize("label", NON_ABELIAN_LABELS, ids=lambda l: l.name)
    def test_restriction_to_derived_is_a_homomorphism(self, label):
        derived = derived_subalgebra(catalog_build(label))
        samples = sample_aut(aut_family(label), seed=29, count=12)
        for phi, other in zip(samples, samples[1:]):
            product = restrict_to_derived(phi.compose(other).phi, derived)
            assert product is not None
            assert product == restrict_to_derived(phi.phi, derived) * restrict_to_derived(other.phi, derived)


class TestPullback:
    def test_h3_reduction_step(self):
        out = _act(H3, [[0, 1, 0], [0, -2, 0], [2, 3, -1]], mu=1, rho=5, sigma=0, nu=2, a=4, b=7)
        assert out == mat([[0, 1, 0], [0, 1, 0], [-1, 3, -1]])

    def test_r3_reduction_step(self):
        out = _act(R3, [[0, 4, 0], [0, 0, 0], [0, 2, 4]], mu=2, rho=3, a=5, b=1)
        assert out == mat([[0, 3, Rational(5, 2)], [0, 0, 0], [0, 2, 3]])

    def test_swap_on_r3_minus_one(self):
        out = pullback_matrix(phi0(), mat([[1, 2, 0], [0, -3, -1], [3, 0, -2]]))
        assert out == mat([[-2, -1, 0], [0, 3, 2], [-3, 0, 1]])

    def test_rotation_on_r3_prime_zero(self):
        out = _act(R3_PRIME_ZERO, [[1, 0, 3], [0, 0, -1], [0, 0, 0]], mu=1, sigma=2, a=0, b=0)
        fifth = Rational(1, 5)
        assert out == mat([[fifth, -2 * fifth, 3 * fifth], [0, 0, -fifth], [0, 0, 2 * fifth]])

    def test_right_action(self):
        g = catalog_build(R3_MINUS_ONE)
        delta = Cobracket.from_rows([[1, 2, 0], [0, -3, -1], [3, 0, -2]])
        LieBialgebra(g, delta)
        first, second = sample_aut(aut_family(R3_MINUS_ONE), seed=3, count=2)
        combined = pullback(first.compose(second), delta)
        assert combined == pullback(second, pullback(first, delta))

    def test_identity_acts_trivially(self):
        delta = Cobracket.from_rows([[0, 1, 0], [0, 0, 0], [0, 2, -1]])
        assert pullback(identity(3), delta) == delta

    def test_wedge_square_of_singular_matrix(self):
        with pytest.raises(SingularMatrixError):
            wedge_square(mat([[1, 0, 0], [0, 0, 0], [0, 0, 1]]))

    @settings(max_examples=100, deadline=None)
    @given(invertible_matrices(3), invertible_matrices(3))
    def test_wedge_square_determinant_and_product(self, phi, other):
        assert wedge_square(phi).det() == phi.det() ** 2
        assert wedge_square(ImmutableMatrix(phi * other)) == wedge_square(phi) * wedge_square(other)

    @settings(max_examples=50, deadline=None)
    @given(invertible_matrices(2))
    def test_wedge_square_in_the_plane_is_the_determinant(self, phi):
        assert wedge_square(phi) == ImmutableMatrix([[phi.det()]])

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            pullback_matrix(identity(2), Cobracket.zero(3).m)


class TestFamilies:
    def test_sampling_is_deterministic(self):
        spec = aut_family(H3)
        first = [a.phi for a in sample_aut(spec, seed=9, count=5)]
        second = [a.phi for a in sample_aut(spec, seed=9, count=5)]
        assert first == second

    def test_discrete_generator_is_mixed_in(self):
        phis = [a.phi for a in sample_aut(aut_family(R3_MINUS_ONE), seed=1, count=40)]
        assert any(phi[2, 2] == -1 for phi in phis)
        assert any(phi[2, 2] == 1 for phi in phis)

    def test_describe(self):
        d = aut_family(R3_PRIME_ZERO).describe()
        assert d["params"] == ["mu", "sigma", "a", "b"]
        assert d["discrete"] == [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]]

    @pytest.mark.parametrize(
        "tag",
        [
            ClassTag.make(H3, "H3-I", {"b3": 2}),
            ClassTag.make(CatalogLabel(Family.SU2), "SU2", {"norm2": 4}),
            ClassTag.make(CatalogLabel(Family.AFF2), "AFF2-MU", {"mu": 3}),
            ClassTag.make(CatalogLabel(Family.AFF2), "AFF2-0"),
        ],
        ids=lambda t: t.case_id,
    )
    def test_stabilizers_fix_their_representative(self, tag):
        spec = stabilizer_family(tag)
        b = LieBialgebra(catalog_build(tag.algebra), representative(tag))
        for phi in sample_aut(spec, seed=4, count=10):
            assert is_bialgebra_automorphism(b, phi.phi)

    def test_no_stabilizer_recorded(self):
        assert stabilizer_family(ClassTag.make(R3, "R3-B")) is None


class TestPhiDocument:
    def test_accepts_object_or_rows(self):
        rows = [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "-1"]]
        assert parse_phi_document({"phi": rows}, 3) == phi0()
        assert parse_phi_document(rows, 3) == phi0()

    @pytest.mark.parametrize("doc", [{"phi": [[1, 0]]}, [[1, 0], [0]], {"phi": [[1, 0], [0, "y"]]}, "phi"])
    def test_rejects(self, doc):
        with pytest.raises(DocumentError):
            parse_phi_document(doc, 2)
