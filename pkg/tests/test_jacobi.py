import pytest
from hypothesis import given

import hypothesis.strategies as st
from conftest import algebra_elements, group_elements, nilpotent_elements
from jacobi_orbits.errors import NotUnimodularError
from jacobi_orbits.jacobi import (
    BASIS,
    AlgebraElement,
    GroupElement,
    P_J,
    Q_J,
    R_J,
    S_J,
    SiegelJacobiPoint,
    X_J,
    Y_J,
    Z_J,
    adjoint,
    adjoint_via_embedding,
    algebra_from_matrix,
    bracket,
    bracket_closed_form,
    c1_invariant,
    embed_algebra,
    embed_group,
    group_inv,
    group_mul,
    invariants,
    is_nilpotent,
    orbit_dimension,
    power_identity_check,
    rho_invariant,
    sj_action,
)
from jacobi_orbits.matrices import Mat, mat_rank
from jacobi_orbits.scalars import Rat, rat


class TestGroup:
    def test_heisenberg_twist(self):
        g = group_mul(GroupElement.translation(1, 0, 0),
                      GroupElement.translation(0, 1, 0))
        assert g == GroupElement.translation(1, 1, 1)

    def test_identity_is_neutral(self):
        g = GroupElement.of(2, 3, 1, 2, 1, 2, 3)
        assert group_mul(g, GroupElement.identity()) == g
        assert group_mul(GroupElement.identity(), g) == g

    def test_unimodularity_enforced(self):
        with pytest.raises(NotUnimodularError):
            GroupElement.of(2, 0, 0, 2)

    @given(group_elements(), group_elements())
    def test_embedding_is_homomorphism(self, g1, g2):
        assert embed_group(group_mul(g1, g2)) == embed_group(g1) * embed_group(g2)

    @given(group_elements())
    def test_inverse(self, g):
        assert group_mul(g, group_inv(g)) == GroupElement.identity()
        assert embed_group(group_inv(g)) == embed_group(g).inverse()

    @given(group_elements(), group_elements(), group_elements())
    def test_associativity(self, g1, g2, g3):
        assert group_mul(group_mul(g1, g2), g3) == group_mul(g1, group_mul(g2, g3))

    def test_embed_example(self):
        g = GroupElement.translation(1, 2, 3)
        want = Mat([[rat(1), rat(0), rat(0), rat(2)],
                    [rat(1), rat(1), rat(2), rat(3)],
                    [rat(0), rat(0), rat(1), rat(-1)],
                    [rat(0), rat(0), rat(0), rat(1)]])
        assert embed_group(g) == want
        assert embed_group(GroupElement.identity()) == Mat.identity(4)

    @given(group_elements())
    def test_embedding_is_symplectic(self, g):
        z, o = rat(0), rat(1)
        j = Mat([[z, z, o, z], [z, z, z, o], [-o, z, z, z], [z, -o, z, z]])
        m = embed_group(g)
        assert m.transpose() * j * m == j

    @given(group_elements())
    def test_json_round_trip(self, g):
        assert GroupElement.from_json(g.to_json()) == g


class TestAlgebra:
    def test_embed_algebra_patterns(self):
        assert embed_algebra(AlgebraElement.of()).is_zero()
        xm = embed_algebra(X_J)
        assert xm[0, 0] == 1 and xm[2, 2] == -1
        assert sum(1 for row in xm.rows for e in row if e) == 2
        pm = embed_algebra(P_J)
        assert pm[1, 0] == 1 and pm[2, 3] == -1
        assert sum(1 for row in pm.rows for e in row if e) == 2

    @given(algebra_elements())
    def test_pullback_round_trip(self, v):
        assert algebra_from_matrix(embed_algebra(v)) == v

    def test_basis_brackets(self):
        assert bracket(X_J, Y_J) == 2 * Z_J
        assert bracket(P_J, Q_J) == 2 * R_J
        # Oracle: 4x4 commutator of the realizations, frozen to -P.
        m1, m2 = embed_algebra(X_J), embed_algebra(P_J)
        assert algebra_from_matrix(m1 * m2 - m2 * m1) == -1 * P_J
        assert bracket(X_J, P_J) == -1 * P_J

    @given(algebra_elements(), algebra_elements())
    def test_bracket_closed_form_agrees(self, v1, v2):
        assert bracket(v1, v2) == bracket_closed_form(v1, v2)

    @given(algebra_elements(), algebra_elements())
    def test_bracket_antisymmetry(self, v1, v2):
        assert bracket(v1, v2) == -1 * bracket(v2, v1)

    @given(algebra_elements(), algebra_elements(), algebra_elements())
    def test_jacobi_identity(self, a, b, c):
        total = (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a))
                 + bracket(c, bracket(a, b)))
        assert total.is_zero()

    @given(algebra_elements())
    def test_center(self, v):
        assert bracket(v, R_J).is_zero()


class TestAdjoint:
    @given(group_elements(), algebra_elements())
    def test_closed_form_equals_conjugation(self, g, v):
        assert adjoint(g, v) == adjoint_via_embedding(g, v)

    def test_shear_instance(self):
        g = GroupElement.translation(-1, 0, 0)
        assert adjoint(g, AlgebraElement.of(0, 1, 1, 1, 2, 0)) == \
            AlgebraElement.of(0, 1, 1, 1, 0, -2)

    def test_rotation_sends_p_to_q(self):
        g = GroupElement.of(0, -1, 1, 0)
        # Oracle: conjugation of the embedded matrices.
        assert adjoint_via_embedding(g, P_J) == Q_J
        assert adjoint(g, P_J) == Q_J

    @given(group_elements())
    def test_center_fixed(self, g):
        assert adjoint(g, R_J) == R_J

    @given(group_elements(), algebra_elements(), algebra_elements())
    def test_linearity(self, g, v1, v2):
        assert adjoint(g, v1 + v2) == adjoint(g, v1) + adjoint(g, v2)

    @given(group_elements(), group_elements(), algebra_elements())
    def test_action_composition(self, g1, g2, v):
        assert adjoint(group_mul(g1, g2), v) == adjoint(g1, adjoint(g2, v))

    @given(group_elements(), algebra_elements())
    def test_bracket_equivariance(self, g, v):
        w = S_J + P_J
        assert adjoint(g, bracket(w, v)) == bracket(adjoint(g, w), adjoint(g, v))


class TestInvariants:
    def test_f_example(self):
        assert invariants(AlgebraElement.of(0, "1/2", "1/2", 1, 0, 0)).f == -1

    def test_i_example_via_sampling_oracle(self):
        # Oracle: I is the value of f - c1*r, constant along conjugations.
        v = X_J + R_J
        seen = {invariants(adjoint(g, v)).i
                for g in _conjugator_sample()}
        assert seen == {rat(-1)}

    def test_rho_example_via_sampling_oracle(self):
        v = S_J + 3 * R_J
        seen = {invariants(adjoint(g, v)).rho for g in _conjugator_sample()}
        assert seen == {rat(3)}

    @given(group_elements(), algebra_elements())
    def test_c1_and_i_invariant(self, g, v):
        moved = adjoint(g, v)
        assert c1_invariant(moved) == c1_invariant(v)
        assert invariants(moved).i == invariants(v).i

    @given(group_elements(), nilpotent_elements())
    def test_nilpotent_stability_and_sign_z(self, g, v):
        moved = adjoint(g, v)
        assert is_nilpotent(moved)
        if v.z:
            assert (moved.z > 0) == (v.z > 0)

    def test_rho_undefined_off_locus(self):
        assert invariants(X_J).rho is None                 # c1 != 0
        assert invariants(P_J).rho is None                 # (x,y,z) = 0
        assert invariants(S_J + P_J).rho is None           # f != 0
        assert invariants(S_J).rho == 0

    def test_rho_two_formulas_agree(self):
        # f = 0 point with y+z and y-z both nonzero: (p, q) = s(x, y+z);
        # the assertion inside rho_invariant exercises the squaring identity.
        s = rat("2/3")
        v = AlgebraElement.of(3, 4, 5, 3 * s, 9 * s, 7)
        assert not invariants(v).f
        assert rho_invariant(v) is not None


class TestNilpotency:
    def test_examples(self):
        assert is_nilpotent(AlgebraElement.of(3, 4, 5, 7, -2, 9))
        assert not is_nilpotent(X_J)

    @given(algebra_elements())
    def test_matrix_power_oracle(self, v):
        m = embed_algebra(v)
        assert is_nilpotent(v) == (m ** 4).is_zero()

    @given(algebra_elements(), st.integers(1, 4))
    def test_power_identity(self, v, k):
        assert power_identity_check(v, k)

    def test_power_identity_examples(self):
        assert power_identity_check(X_J, 1)
        assert power_identity_check(X_J, 2)
        with pytest.raises(ValueError):
            power_identity_check(X_J, 0)


class TestOrbitDimension:
    def test_center_is_fixed_point(self):
        assert orbit_dimension(R_J) == 0
        # mat_rank oracle: the matrix of w -> [w, R] is identically zero.
        cols = [bracket(e, R_J).coords() for e in BASIS]
        assert mat_rank(list(zip(*cols))) == 0

    def test_p_orbit_via_explicit_image(self):
        # Oracle: [w, P] = (0, 0, 0, -x1, -y1_entry, -2 q1) spans 3 dims.
        image = [bracket(e, P_J).coords() for e in BASIS]
        assert mat_rank(image) == 3
        assert orbit_dimension(P_J) == 3

    def test_reference_dimensions(self):
        assert orbit_dimension(S_J) == 3
        assert orbit_dimension(X_J) == 4
        assert orbit_dimension(AlgebraElement.of()) == 0


class TestSiegelJacobiAction:
    def test_identity_fixes_base_point(self):
        pt = SiegelJacobiPoint(1j, 0j)
        out = sj_action(GroupElement.identity(), pt)
        assert out.tau == 1j and out.zeta == 0j

    def test_translation(self):
        pt = SiegelJacobiPoint(1j, 0j)
        out = sj_action(GroupElement.translation(2, 3, 5), pt)
        assert abs(out.tau - 1j) < 1e-12
        assert abs(out.zeta - (2j + 3)) < 1e-12

    def test_stabilizer_rotation(self):
        # (k, (0,0,kappa)) with k in SO(2) fixes (i, 0); rational circle point.
        k = GroupElement.of("3/5", "4/5", "-4/5", "3/5", 0, 0, 7)
        out = sj_action(k, SiegelJacobiPoint(1j, 0j))
        assert abs(out.tau - 1j) < 1e-12 and abs(out.zeta) < 1e-12

    def test_upper_half_plane_preserved(self):
        g = GroupElement.of(0, -1, 1, 0, 1, 2, 3)
        out = sj_action(g, SiegelJacobiPoint(0.3 + 0.7j, 0.2 + 0.1j))
        assert out.tau.imag > 0

    def test_invalid_point_rejected(self):
        with pytest.raises(ValueError):
            SiegelJacobiPoint(1 - 1j, 0j)


def _conjugator_sample():
    gs = []
    for a, b, c, d in ((1, 0, 0, 1), (1, 2, 0, 1), (0, -1, 1, 0),
                       (2, 1, 1, 1), (Rat(1, 3), 0, 5, 3)):
        for lam, mu, kappa in ((0, 0, 0), (1, 2, 3), (Rat(-1, 2), Rat(2, 7), 1)):
            gs.append(GroupElement.of(a, b, c, d, lam, mu, kappa))
    return gs


@given(algebra_elements())
def test_element_json_round_trip(v):
    assert AlgebraElement.from_json(v.to_json()) == v


def test_nilpotency_matrix_oracle_bulk():
    # Module contract: agreement with the 4th-power oracle on 1000 elements.
    from jacobi_orbits.sampling import Stream
    s = Stream(102, "nilp-oracle")
    for _ in range(1000):
        v = s.nilpotent_element(zero_sl2_fraction=1) if s.bool() \
            else s.algebra_element()
        assert is_nilpotent(v) == (embed_algebra(v) ** 4).is_zero()
