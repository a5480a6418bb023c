#include <doctest.h>

#include "helpers.hpp"

using namespace ybetest;

TEST_CASE("field spec parsing and properties") {
    CHECK(FieldSpec::parse("Q") == Q());
    CHECK(FieldSpec::parse("F3") == F(3));
    CHECK(FieldSpec::parse("Fp:5") == F(5));
    CHECK(FieldSpec::parse("F3").str() == "Fp:3");
    CHECK(Q().has_half());
    CHECK(F(3).has_half());
    CHECK_FALSE(F(2).has_half());
    CHECK_THROWS_AS(FieldSpec::parse("F4"), FieldError);
    CHECK_THROWS_AS(FieldSpec::parse("bogus"), FieldError);
}

TEST_CASE("scalar canonical form over Q") {
    Scalar half = Scalar::parse(Q(), "1/2");
    Scalar alt = Scalar::parse(Q(), "2/4");
    CHECK(half == alt);
    CHECK(half.str() == "1/2");
    CHECK((half + half) == Scalar::one(Q()));
    CHECK((half * sc(Q(), 2)) == Scalar::one(Q()));
    CHECK(half.inverse() == sc(Q(), 2));
    CHECK((-half).str() == "-1/2");
}

TEST_CASE("scalar residues over F_p") {
    Scalar a = sc(F(5), 7);
    CHECK(a == sc(F(5), 2));
    CHECK(a.str() == "2");
    CHECK((-a) == sc(F(5), 3));
    CHECK(Scalar::parse(F(5), "1/2") == sc(F(5), 3));  // 2 * 3 = 6 = 1 mod 5
    CHECK(sc(F(5), 2).inverse() == sc(F(5), 3));
    CHECK_THROWS_AS(Scalar::parse(F(2), "1/2"), FieldError);
    CHECK_THROWS_AS(sc(F(5), 0).inverse(), FieldError);
}

TEST_CASE("mixed-field arithmetic is refused") {
    CHECK_THROWS_AS(sc(Q(), 1) + sc(F(3), 1), FieldError);
}

TEST_CASE("mod_inverse and is_prime") {
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(0, 5), FieldError);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("matrix inverse is exact") {
    Matrix m(Q(), 2, 2);
    m.at(0, 0) = sc(Q(), 1);
    m.at(0, 1) = sc(Q(), 2);
    m.at(1, 0) = sc(Q(), 3);
    m.at(1, 1) = sc(Q(), 4);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == Matrix::identity(Q(), 2));
    CHECK(inv->at(0, 0) == sc(Q(), -2));
    CHECK(inv->at(0, 1) == Scalar::one(Q()));
    CHECK(inv->at(1, 0) == Scalar::parse(Q(), "3/2"));
    CHECK(inv->at(1, 1) == Scalar::parse(Q(), "-1/2"));

    Matrix s(Q(), 2, 2);
    s.at(0, 0) = sc(Q(), 1);
    s.at(0, 1) = sc(Q(), 2);
    s.at(1, 0) = sc(Q(), 2);
    s.at(1, 1) = sc(Q(), 4);
    CHECK_FALSE(s.inverse().has_value());
}

TEST_CASE("matrix algebra over F_p") {
    Matrix m(F(3), 2, 2);
    m.at(0, 0) = sc(F(3), 1);
    m.at(0, 1) = sc(F(3), 2);
    m.at(1, 1) = sc(F(3), 1);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == Matrix::identity(F(3), 2));
    CHECK(inv->at(0, 1) == sc(F(3), 1));  // -2 = 1 mod 3
}

TEST_CASE("linear map composition and application") {
    LinearMap f = diag_map(Q(), {2, 3});
    LinearMap g = map_from(Q(), 2, 2, {0, 1, 1, 0});
    LinearMap fg = f.compose(g);
    Vec e0 = basis_vec(Q(), 2, 0);
    CHECK(equal(fg.apply(e0), scale(sc(Q(), 3), basis_vec(Q(), 2, 1))));
    CHECK(equal(g.apply_basis(1), basis_vec(Q(), 2, 0)));
    CHECK((f + g) == map_from(Q(), 2, 2, {2, 1, 1, 3}));
    CHECK(f.scaled(sc(Q(), 2)) == diag_map(Q(), {4, 6}));
}

TEST_CASE("report records first witness and merges with prefixes") {
    Report r;
    IdentityAccumulator acc("demo");
    acc.observe({0, 0}, zero_vec(Q(), 1));
    Vec bad = {sc(Q(), 5)};
    acc.observe({0, 1}, bad);
    acc.observe({1, 0}, bad);
    acc.emit(r);
    CHECK_FALSE(r.pass);
    const IdentityCheck* c = r.find("demo");
    REQUIRE(c != nullptr);
    REQUIRE(c->witness.has_value());
    CHECK(c->witness->indices == std::vector<int>{0, 1});
    CHECK(equal(c->witness->residual, bad));

    Report outer;
    outer.merge("pre-", r);
    CHECK(outer.find("pre-demo") != nullptr);
    CHECK_FALSE(outer.pass);
}
