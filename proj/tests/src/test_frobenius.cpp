#include <doctest.h>

#include "helpers.hpp"

using namespace ybetest;

namespace {

// Symmetric invariant form on the dual numbers pairing u with x:
// B(u,x) = B(x,u) = 1, B(u,u) = B(x,x) = 0.
BilinearForm trace_form(FieldSpec f = FieldSpec::rationals()) {
    Algebra d = dual_num(f);
    Matrix b(f, 2, 2);
    b.at(0, 1) = Scalar::one(f);
    b.at(1, 0) = Scalar::one(f);
    return BilinearForm(d, b);
}

}  // namespace

TEST_CASE("frobenius validation") {
    Report ok = validate_frobenius(trace_form(), true);
    CHECK(ok.pass);
    CHECK(ok.find("nondegenerate") != nullptr);
    CHECK(ok.find("invariant") != nullptr);
    CHECK(ok.find("symmetric") != nullptr);

    // Identity matrix on the zero algebra: trivially Frobenius.
    BilinearForm z(zero_alg2(), Matrix::identity(Q(), 2));
    CHECK(validate_frobenius(z, true).pass);

    // Identity matrix on Nil2 fails invariance at (e1, e1, e2).
    BilinearForm bad(nil2(), Matrix::identity(Q(), 2));
    Report r = validate_frobenius(bad, true);
    CHECK_FALSE(r.pass);
    const IdentityCheck* inv = r.find("invariant");
    REQUIRE(inv != nullptr);
    CHECK_FALSE(inv->pass);
    REQUIRE(inv->witness.has_value());
    CHECK(inv->witness->indices == std::vector<int>{0, 0, 1});

    // Singular form: failed check, not an exception.
    BilinearForm sing(zero_alg2(), Matrix(Q(), 2, 2));
    Report rs = validate_frobenius(sing, true);
    CHECK_FALSE(rs.pass);
    CHECK_FALSE(rs.find("nondegenerate")->pass);
}

TEST_CASE("phi swaps the basis for the trace form") {
    BilinearForm b = trace_form();
    LinearMap p = phi(b);
    CHECK(equal(p.apply_basis(0), basis_vec(Q(), 2, 1)));  // phi(u) = x*
    CHECK(equal(p.apply_basis(1), basis_vec(Q(), 2, 0)));  // phi(x) = u*
    CHECK(phi_intertwining(b).pass);
    CHECK(phi_intertwining(b).find("eq:invariant1") != nullptr);

    BilinearForm sing(zero_alg2(), Matrix(Q(), 2, 2));
    CHECK_THROWS_AS(phi(sing), std::invalid_argument);
}

TEST_CASE("form from an invariant tensor") {
    // s = u (x) x + x (x) u inverts to the trace form.
    Algebra d = dual_num();
    BilinearForm b = form_from_invariant_tensor(tensor_from(d, {0, 1, 1, 0}));
    CHECK(b.bmat == trace_form().bmat);
    CHECK(validate_frobenius(b, true).pass);

    BilinearForm bi = form_from_invariant_tensor(
        Tensor2(zero_alg2(), Matrix::identity(Q(), 2)));
    CHECK(bi.bmat == Matrix::identity(Q(), 2));

    // Non-invariant symmetric tensor on Nil2 is refused.
    CHECK_THROWS(form_from_invariant_tensor(
        Tensor2(nil2(), Matrix::identity(Q(), 2))));
    // Singular invariant tensor is refused.
    CHECK_THROWS(form_from_invariant_tensor(tensor_from(d, {0, 0, 0, 1})));
}

TEST_CASE("adjoint classification under the trace form") {
    BilinearForm b = trace_form();
    AdjointVerdict zero = adjoint_check(LinearMap::zero(Q(), 2, 2), b);
    CHECK(zero.self_adjoint);
    CHECK(zero.skew_adjoint);
    AdjointVerdict id = adjoint_check(LinearMap::identity(Q(), 2), b);
    CHECK(id.self_adjoint);
    CHECK_FALSE(id.skew_adjoint);

    // f(u) = x, f(x) = 0 is self-adjoint: B(f(u),u) = B(x,u) = 1 = B(u,f(u)).
    AdjointVerdict n = adjoint_check(map_from(Q(), 2, 2, {0, 0, 1, 0}), b);
    CHECK(n.self_adjoint);
    CHECK_FALSE(n.skew_adjoint);

    // diag(1,-1) is skew-adjoint for the antidiagonal form.
    AdjointVerdict s = adjoint_check(diag_map(Q(), {1, -1}), b);
    CHECK(s.skew_adjoint);
    CHECK_FALSE(s.self_adjoint);
}

TEST_CASE("transport through phi") {
    BilinearForm b = trace_form();
    CHECK(transport(LinearMap::zero(Q(), 2, 2), b).mat.is_zero());

    // With bmat = identity, transport is composition with the identity.
    BilinearForm bi(zero_alg2(), Matrix::identity(Q(), 2));
    LinearMap f = map_from(Q(), 2, 2, {1, 2, 3, 4});
    CHECK(transport(f, bi) == f);

    // Transport of a skew-adjoint map yields a skew tensor, of a self-adjoint
    // map a symmetric tensor.
    Algebra d = dual_num();
    Tensor2 ts = map_as_tensor(d, transport(diag_map(Q(), {1, -1}), b));
    CHECK(ts.is_skew());
    Tensor2 tsym = map_as_tensor(d, transport(map_from(Q(), 2, 2, {0, 0, 1, 0}), b));
    CHECK(tsym.is_symmetric());
}

TEST_CASE("equivalence chain: trivial and structured instances") {
    BilinearForm b = trace_form();
    LinearMap zero = LinearMap::zero(Q(), 2, 2);
    Report r = verify_frobenius_equivalence(zero, zero, b, sc(Q(), -1));
    CHECK(r.pass);
    CHECK(r.find("thm:equivalence:1") != nullptr);
    CHECK(r.find("thm:equivalence:2a:+") != nullptr);
    CHECK(r.find("thm:equivalence:2b:+") != nullptr);  // kappa = -1 branch

    Report r0 = verify_frobenius_equivalence(zero, zero, b, sc(Q(), 0));
    CHECK(r0.pass);
    CHECK(r0.find("co:equivalence1") != nullptr);

    // A gate failure (non-self-adjoint beta) stops before the assertions.
    Report g = verify_frobenius_equivalence(zero, diag_map(Q(), {1, -1}), b,
                                            sc(Q(), -1));
    CHECK_FALSE(g.pass);
    CHECK_FALSE(g.find("gate-beta-self-adjoint")->pass);
    CHECK(g.find("thm:equivalence:1") == nullptr);
}

TEST_CASE("equivalence chain: seeded random scan") {
    BilinearForm b = trace_form();
    Rng rng(20260824);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        // alpha skew-adjoint: a diag(1,-1); beta self-adjoint: [[p,q],[s,p]].
        LinearMap alpha = diag_map(Q(), {1, -1}).scaled(rng.scalar(Q()));
        Matrix bm(Q(), 2, 2);
        bm.at(0, 0) = rng.scalar(Q());
        bm.at(1, 1) = bm.at(0, 0);
        bm.at(0, 1) = rng.scalar(Q());
        bm.at(1, 0) = rng.scalar(Q());
        LinearMap beta(2, 2, bm);
        Scalar kappa = (t % 2 == 0) ? sc(Q(), -1) : sc(Q(), 0);
        Report r = verify_frobenius_equivalence(alpha, beta, b, kappa);
        for (const IdentityCheck& c : r.checks) {
            if (c.id.rfind("gate-", 0) == 0) continue;
            INFO("seed trial ", t, " check ", c.id);
            CHECK(c.pass);
            ++checked;
        }
    }
    CHECK(checked > 0);
}
