#include <doctest.h>

#include "helpers.hpp"

#include <fstream>
#include <sstream>

using namespace ybetest;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kFixtureDir = YBELAB_FIXTURE_DIR;

}  // namespace

TEST_CASE("scalar serialization") {
    CHECK(scalar_to_json(sc(Q(), 5)) == nlohmann::json(5));
    CHECK(scalar_to_json(Scalar::parse(Q(), "1/2")) == nlohmann::json("1/2"));
    CHECK(scalar_to_json(Scalar::parse(Q(), "-2/4")) == nlohmann::json("-1/2"));
    CHECK(scalar_from_json(Q(), nlohmann::json("3/6"), "/x") ==
          Scalar::parse(Q(), "1/2"));
    CHECK(scalar_from_json(F(5), nlohmann::json("1/2"), "/x") == sc(F(5), 3));
    CHECK_THROWS_AS(scalar_from_json(F(2), nlohmann::json("1/2"), "/tensors/t"),
                    BundleError);
    CHECK_THROWS_AS(scalar_from_json(Q(), nlohmann::json(true), "/x"), BundleError);
}

TEST_CASE("fixture bundles load and validate") {
    Bundle nil = load_bundle(kFixtureDir + "/nil2.json");
    REQUIRE(nil.algebras.count("Nil2") == 1);
    const Algebra& n = nil.algebras.at("Nil2");
    CHECK(n == nil2());
    CHECK(validate_algebra(n).pass);
    REQUIRE(nil.maps.count("P0") == 1);
    REQUIRE(nil.maps.count("P21") == 1);
    CHECK(nil.maps.at("P21") == diag_map(Q(), {2, 1}));
    CHECK(rota_baxter_residual(n, nil.maps.at("P21"), sc(Q(), 0)).pass);

    Bundle ut = load_bundle(kFixtureDir + "/ut2.json");
    REQUIRE(ut.tensors.count("r_flagship") == 1);
    CHECK(ut.tensors.at("r_flagship") == flagship_tensor());
    CHECK(aybe_residual(ut.tensors.at("r_flagship")).is_zero());

    Bundle dn = load_bundle(kFixtureDir + "/dualnum.json");
    REQUIRE(dn.forms.count("trace") == 1);
    CHECK(validate_frobenius(dn.forms.at("trace"), true).pass);
    CHECK(dn.algebras.at("DualNum") == dual_num());

    CHECK(load_bundle(kFixtureDir + "/zeroalg2.json")
              .algebras.at("ZeroAlg2")
              .constants()
              .is_zero());
    CHECK(load_bundle(kFixtureDir + "/m2.json").algebras.at("M2") == m2());
}

TEST_CASE("canonical round trip is byte-identical") {
    for (const std::string name :
         {"zeroalg2", "nil2", "dualnum", "ut2", "m2"}) {
        std::string path = kFixtureDir + "/" + name + ".json";
        Bundle b = load_bundle(path);
        CHECK(canonical_dump(bundle_to_json(b)) == slurp(path));
    }
}

TEST_CASE("schema violations carry their path") {
    nlohmann::json j = {{"field", "Q"},
                        {"algebras",
                         {{"bad", {{"dim", 2}, {"c", nlohmann::json::array()}}}}}};
    try {
        bundle_from_json(j);
        FAIL("expected BundleError");
    } catch (const BundleError& e) {
        CHECK(std::string(e.what()).find("/algebras/bad/c") != std::string::npos);
    }

    CHECK_THROWS_AS(bundle_from_json(nlohmann::json{{"field", "F4"}}), BundleError);
    CHECK_THROWS_AS(bundle_from_json(nlohmann::json::object()), BundleError);

    // Unknown algebra reference.
    nlohmann::json t = {{"field", "Q"},
                        {"tensors",
                         {{"r", {{"algebra", "ghost"},
                                 {"t", {{0, 0}, {0, 0}}}}}}}};
    try {
        bundle_from_json(t);
        FAIL("expected BundleError");
    } catch (const BundleError& e) {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("saving and reloading preserves every section") {
    Bundle b;
    b.field = F(5);
    b.algebras.emplace("N", nil2(F(5)));
    Bimodule reg = regular_bimodule(b.algebras.at("N"));
    b.bimodules.emplace("V", reg);
    b.maps.emplace("f", diag_map(F(5), {2, 3}));
    b.tensors.emplace("r", tensor_from(b.algebras.at("N"), {1, 2, 3, 4}));
    Matrix bm(F(5), 2, 2);
    bm.at(0, 1) = sc(F(5), 1);
    bm.at(1, 0) = sc(F(5), 1);
    b.forms.emplace("B", BilinearForm(b.algebras.at("N"), bm));

    nlohmann::json j = bundle_to_json(b);
    Bundle back = bundle_from_json(j);
    CHECK(back.field == F(5));
    CHECK(back.algebras.at("N") == b.algebras.at("N"));
    CHECK(back.bimodules.at("V").left[0] == reg.left[0]);
    CHECK(back.maps.at("f") == b.maps.at("f"));
    CHECK(back.tensors.at("r") == b.tensors.at("r"));
    CHECK(back.forms.at("B").bmat == bm);
    CHECK(canonical_dump(bundle_to_json(back)) == canonical_dump(j));
}
