#include <doctest.h>

#include "helpers.hpp"

using namespace ybetest;

TEST_CASE("double of an algebra with its regular module") {
    for (const Algebra& a : {nil2(), dual_num()}) {
        BimoduleKAlgebra v =
            BimoduleKAlgebra::with_zero_product(regular_bimodule(a));
        DoubleContext ctx = hat_algebra(a, v);
        CHECK(ctx.dim_hat() == 4);
        CHECK(validate_algebra(ctx.hat).pass);
        // A-block keeps the original product.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(ctx.hat.c(i, j, k) == a.c(i, j, k));
        // Dual block squares to zero.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(is_zero(
                    ctx.hat.mul_basis(ctx.vstar_index(i), ctx.vstar_index(j))));
        // Dual actions transpose the module actions.
        for (int i = 0; i < 2; ++i) {
            CHECK(ctx.dual.left[i] == v.module.right[i].transposed());
            CHECK(ctx.dual.right[i] == v.module.left[i].transposed());
        }
    }
}

TEST_CASE("homomorphisms embed into the top-right corner") {
    Algebra a = nil2();
    BimoduleKAlgebra v = BimoduleKAlgebra::with_zero_product(regular_bimodule(a));
    DoubleContext ctx = hat_algebra(a, v);

    CHECK(hom_as_hat_tensor(ctx, LinearMap::zero(Q(), 2, 2)).is_zero());

    // gamma = id maps to sum_i e_i (x) v*_i.
    Tensor2 t = hom_as_hat_tensor(ctx, LinearMap::identity(Q(), 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool corner = (j >= 2) && (j - 2 == i);
            CHECK(t.t.at(i, j) == (corner ? Scalar::one(Q()) : sc(Q(), 0)));
        }

    Rng rng(41);
    LinearMap g = rng.map(Q(), 2);
    auto [plus, minus] = tilde_pm(ctx, g);
    CHECK(plus.is_symmetric());
    CHECK(minus.is_skew());
    CHECK((plus + minus) == hom_as_hat_tensor(ctx, g).scaled(sc(Q(), 2)));
}

TEST_CASE("balanced property lifts to the double") {
    Algebra a = nil2();
    BimoduleKAlgebra v = BimoduleKAlgebra::with_zero_product(regular_bimodule(a));
    DoubleContext ctx = hat_algebra(a, v);

    auto [l0, b0] = lifted_balanced_check(ctx, LinearMap::zero(Q(), 2, 2));
    CHECK(l0);
    CHECK(b0);
    auto [l1, b1] = lifted_balanced_check(ctx, LinearMap::identity(Q(), 2));
    CHECK(l1);
    CHECK(b1);

    // Exhaustive agreement over F3.
    Algebra a3 = nil2(F(3));
    DoubleContext c3 = hat_algebra(
        a3, BimoduleKAlgebra::with_zero_product(regular_bimodule(a3)));
    for (const Matrix& m : enumerate(SearchSpace::map(F(3), 2, 2))) {
        auto [lifted, base] = lifted_balanced_check(c3, LinearMap(2, 2, m));
        CHECK(lifted == base);
    }
}

TEST_CASE("skew lift equivalence for extended operators") {
    Algebra a3 = nil2(F(3));
    DoubleContext ctx = hat_algebra(
        a3, BimoduleKAlgebra::with_zero_product(regular_bimodule(a3)));
    LinearMap zero = LinearMap::zero(F(3), 2, 2);
    Report r = verify_skewgm(ctx, zero, zero, sc(F(3), 2));
    CHECK(r.find("thm:skewgm") != nullptr);
    CHECK(r.pass);

    Rng rng(53);
    for (int t = 0; t < 60; ++t) {
        Report rr = verify_skewgm(ctx, rng.map(F(3), 2),
                                  LinearMap::identity(F(3), 2).scaled(rng.scalar(F(3))),
                                  rng.scalar(F(3)));
        CHECK(rr.find("thm:skewgm")->pass);
    }
}

TEST_CASE("double-sided Yang-Baxter correspondences for Rota-Baxter maps") {
    Algebra n = nil2();
    LinearMap p = diag_map(Q(), {2, 1});  // weight-0 Rota-Baxter on Nil2

    Report r0 = double_aybe_tests(n, p, sc(Q(), 1));
    CHECK(r0.find("co:motoaybe1:ii")->pass);
    CHECK(r0.pass);

    // Direct corroboration: the skew lift solves the equation in the double.
    BimoduleKAlgebra v = BimoduleKAlgebra::with_zero_product(regular_bimodule(n));
    DoubleContext ctx = hat_algebra(n, v);
    auto [tp, tm] = tilde_pm(ctx, p);
    CHECK(aybe_residual(tm).is_zero());
    CHECK(tm.is_skew());

    // Weight 1: P = -id on the dual numbers, item (v) plus both solution forms.
    Algebra d = dual_num();
    LinearMap mid = LinearMap::identity(Q(), 2).scaled(sc(Q(), -1));
    Report r1 = double_aybe_tests(d, mid, sc(Q(), 1));
    CHECK(r1.find("co:motoaybe1:v")->pass);
    CHECK(r1.find("co:motoaybe1:iv:+")->pass);
    CHECK(r1.find("co:motoaybe1:iv:-")->pass);
    CHECK(r1.pass);

    CHECK_THROWS_AS(double_aybe_tests(d, mid, sc(Q(), 0)), std::invalid_argument);

    // Exhaustive boolean scan over F3.
    Algebra n3 = nil2(F(3));
    for (const Matrix& m : enumerate(SearchSpace::map(F(3), 2, 2))) {
        Report r = double_aybe_tests(n3, LinearMap(2, 2, m), sc(F(3), 1));
        CHECK(r.pass);
    }
}

TEST_CASE("generalized-equation lift conditions") {
    Algebra n = nil2();
    BimoduleKAlgebra v = BimoduleKAlgebra::with_zero_product(regular_bimodule(n));
    DoubleContext ctx = hat_algebra(n, v);

    GaybeLiftVerdict z = gaybe_lift_conditions(ctx, LinearMap::zero(Q(), 2, 2));
    CHECK(z.conditions());
    CHECK(z.lifted);
    CHECK(z.consistent());

    GaybeLiftVerdict o = gaybe_lift_conditions(ctx, diag_map(Q(), {2, 1}));
    CHECK(o.consistent());

    // Exhaustive consistency over F3.
    Algebra n3 = nil2(F(3));
    DoubleContext c3 = hat_algebra(
        n3, BimoduleKAlgebra::with_zero_product(regular_bimodule(n3)));
    for (const Matrix& m : enumerate(SearchSpace::map(F(3), 2, 2)))
        CHECK(gaybe_lift_conditions(c3, LinearMap(2, 2, m)).consistent());
}

TEST_CASE("lambda-scaled conditions for extended operators") {
    Algebra n = nil2();
    OperatorContext ctx = OperatorContext::regular_zero_product(n, sc(Q(), 0),
                                                                sc(Q(), 1),
                                                                sc(Q(), 0));
    LinearMap zero = LinearMap::zero(Q(), 2, 2);
    Report r = gaybe_o_conditions(ctx, zero, zero);
    CHECK(r.find("co:motoaybe2:i") != nullptr);
    CHECK(r.find("co:motoaybe2:i")->pass);
    CHECK(r.find("eq:lambdakmucon1") != nullptr);

    // The gate rejects a pair that is not an extended operator.
    OperatorContext bad = OperatorContext::regular_zero_product(n, sc(Q(), 0),
                                                                sc(Q(), -1),
                                                                sc(Q(), 0));
    CHECK_THROWS_AS(gaybe_o_conditions(bad, zero, LinearMap::identity(Q(), 2)),
                    std::invalid_argument);
}
