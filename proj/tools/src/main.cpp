#include <CLI11.hpp>

#include "ybelab/bundle.hpp"
#include "ybelab/doubling.hpp"
#include "ybelab/fixtures.hpp"
#include "ybelab/search.hpp"

#include <filesystem>
#include <iostream>
#include <random>

namespace {

using namespace ybe;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string verb;
    std::string target;
    std::string algebra;       // bundle path or fixture name
    std::string bimodule;      // bundle bimodule name
    std::string map_name = "0";
    std::string beta_name = "0";
    std::string tensor_name;
    std::string form_name;
    std::string weight = "0";
    std::string mass = "0";
    std::string eaybe_mass = "0";
    std::string field = "Q";
    bool exhaustive = false;
    long trials = 100;
    unsigned long seed = 1;
    int workers = 1;
    bool json = false;
    bool strict = false;
    bool skew = false;
    bool symmetric = false;
    int dim_v = 0;  // 0: same as the algebra (regular bimodule)
    std::string out = "fixtures";
};

struct Inputs {
    FieldSpec field;
    Bundle bundle;
    bool has_bundle = false;
    Algebra algebra;
};

Inputs load_inputs(const Options& o) {
    Inputs in;
    in.field = FieldSpec::parse(o.field);
    std::string name = o.algebra.empty() ? "Nil2" : o.algebra;
    if (std::filesystem::exists(name)) {
        in.bundle = load_bundle(name);
        in.has_bundle = true;
        in.field = in.bundle.field;
        if (in.bundle.algebras.empty())
            throw BundleError(name + ": bundle contains no algebra");
        in.algebra = in.bundle.algebras.begin()->second;
    } else {
        in.algebra = fixtures::by_name(name, in.field);
    }
    return in;
}

LinearMap resolve_map(const Inputs& in, const std::string& name, int src, int dst) {
    if (name == "0") return LinearMap::zero(in.field, src, dst);
    if (name == "id") {
        if (src != dst) throw std::invalid_argument("identity needs equal dimensions");
        return LinearMap::identity(in.field, src);
    }
    if (in.has_bundle) {
        auto it = in.bundle.maps.find(name);
        if (it != in.bundle.maps.end()) return it->second;
    }
    throw std::invalid_argument("unknown map: " + name);
}

Tensor2 resolve_tensor(const Inputs& in, const std::string& name) {
    if (name.empty() || name == "0") return Tensor2::zero(in.algebra);
    if (in.has_bundle) {
        auto it = in.bundle.tensors.find(name);
        if (it != in.bundle.tensors.end()) return it->second;
    }
    throw std::invalid_argument("unknown tensor: " + name);
}

BilinearForm resolve_form(const Inputs& in, const std::string& name) {
    if (name == "trace" && in.algebra == fixtures::dual_num(in.field))
        return BilinearForm(in.algebra, fixtures::dual_num_trace_form(in.field));
    if (in.has_bundle) {
        auto it = in.bundle.forms.find(name);
        if (it != in.bundle.forms.end()) return it->second;
    }
    throw std::invalid_argument("unknown form: " + name);
}

std::pair<Scalar, Scalar> parse_mass(FieldSpec f, const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return {Scalar::parse(f, s), Scalar::zero(f)};
    return {Scalar::parse(f, s.substr(0, comma)), Scalar::parse(f, s.substr(comma + 1))};
}

OperatorContext make_context(const Inputs& in, const Options& o) {
    Scalar lambda = Scalar::parse(in.field, o.weight);
    auto [kappa, mu] = parse_mass(in.field, o.mass);
    if (!o.bimodule.empty()) {
        if (!in.has_bundle) throw std::invalid_argument("--bimodule requires a bundle");
        auto it = in.bundle.bimodules.find(o.bimodule);
        if (it == in.bundle.bimodules.end())
            throw std::invalid_argument("unknown bimodule: " + o.bimodule);
        return OperatorContext(in.algebra, BimoduleKAlgebra::with_zero_product(it->second),
                               lambda, kappa, mu);
    }
    return OperatorContext::regular(in.algebra, lambda, kappa, mu);
}

void emit_report(const Report& report, bool json) {
    if (json)
        std::cout << canonical_dump(report.to_json());
    else
        std::cout << report.text();
}

// ---------------------------------------------------------------- check ----

const std::vector<std::string> kCheckTargets = {
    "associativity", "bimodule", "eq:rbo",      "eq:aop",        "eq:gmybe",
    "balanced",      "averaging", "nijenhuis",  "aybe",          "aayb",
    "eaybe",         "gaybe",     "eq:aybeform", "eq:opweight1", "frobenius"};

int run_check(const Options& o) {
    Inputs in = load_inputs(o);
    int n = in.algebra.dim();
    Report report;

    if (o.target == "associativity") {
        report = validate_algebra(in.algebra);
    } else if (o.target == "bimodule") {
        OperatorContext ctx = make_context(in, o);
        report = validate_bimodule(ctx.module.module);
    } else if (o.target == "eq:rbo") {
        report = rota_baxter_residual(in.algebra, resolve_map(in, o.map_name, n, n),
                                      Scalar::parse(in.field, o.weight));
    } else if (o.target == "eq:aop") {
        OperatorContext ctx = make_context(in, o);
        report = o_operator_residual(ctx, resolve_map(in, o.map_name, ctx.dimR(), n));
    } else if (o.target == "eq:gmybe") {
        OperatorContext ctx = make_context(in, o);
        report = extended_o_residual(ctx, resolve_map(in, o.map_name, ctx.dimR(), n),
                                     resolve_map(in, o.beta_name, ctx.dimR(), n));
    } else if (o.target == "balanced") {
        OperatorContext ctx = make_context(in, o);
        report = balanced_residual(ctx, resolve_map(in, o.map_name, ctx.dimR(), n), true);
    } else if (o.target == "averaging") {
        report = check_averaging(in.algebra, resolve_map(in, o.map_name, n, n));
    } else if (o.target == "nijenhuis") {
        report = check_nijenhuis(in.algebra, resolve_map(in, o.map_name, n, n));
    } else if (o.target == "aybe") {
        report.record("aybe", aybe_residual(resolve_tensor(in, o.tensor_name)).is_zero());
    } else if (o.target == "aayb") {
        report.record("aayb", aayb_residual(resolve_tensor(in, o.tensor_name)).is_zero());
    } else if (o.target == "eaybe") {
        Scalar eps = Scalar::parse(in.field, o.eaybe_mass);
        report.record("eaybe",
                      eaybe_residual(resolve_tensor(in, o.tensor_name), eps).is_zero());
    } else if (o.target == "gaybe") {
        report.record("gaybe", gaybe_pass(resolve_tensor(in, o.tensor_name)));
    } else if (o.target == "eq:aybeform") {
        report = operator_form_residual(resolve_tensor(in, o.tensor_name));
    } else if (o.target == "eq:opweight1") {
        report = circle_weight1_residuals(resolve_tensor(in, o.tensor_name));
    } else if (o.target == "frobenius") {
        report = validate_frobenius(resolve_form(in, o.form_name), o.symmetric);
    } else {
        throw std::invalid_argument("unknown check target: " + o.target);
    }
    emit_report(report, o.json);
    return report.pass ? kExitPass : kExitFail;
}

// ------------------------------------------------------------ construct ----

const std::vector<std::string> kConstructTargets = {
    "semidirect", "hat",      "star",     "diamond", "dual-product",
    "coproduct",  "aguiar",   "phi",      "transport", "form"};

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json cube_json(const Cube& c) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < c.dim(); ++i) {
        nlohmann::json slice = nlohmann::json::array();
        for (int j = 0; j < c.dim(); ++j) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < c.dim(); ++k) row.push_back(scalar_to_json(c.at(i, j, k)));
            slice.push_back(std::move(row));
        }
        out.push_back(std::move(slice));
    }
    return out;
}

int run_construct(const Options& o) {
    Inputs in = load_inputs(o);
    int n = in.algebra.dim();
    nlohmann::json out;
    out["target"] = o.target;

    if (o.target == "semidirect") {
        OperatorContext ctx = make_context(in, o);
        Algebra s = semidirect_sum(in.algebra, ctx.module, true);
        out["dim"] = s.dim();
        out["c"] = cube_json(s.constants());
    } else if (o.target == "hat") {
        OperatorContext ctx = make_context(in, o);
        DoubleContext dc = hat_algebra(in.algebra, ctx.module);
        out["dim"] = dc.dim_hat();
        out["c"] = cube_json(dc.hat.constants());
    } else if (o.target == "star") {
        OperatorContext ctx = make_context(in, o);
        ProductTable t = star_product(ctx, resolve_map(in, o.map_name, ctx.dimR(), n));
        out["provenance"] = t.provenance;
        out["table"] = cube_json(t.table);
        out["associative"] = t.validate_associative().pass;
    } else if (o.target == "diamond") {
        OperatorContext ctx = make_context(in, o);
        auto [p, m] = diamond_products(ctx, resolve_map(in, o.beta_name, ctx.dimR(), n));
        out["plus"] = cube_json(p.table);
        out["minus"] = cube_json(m.table);
    } else if (o.target == "dual-product") {
        ProductTable t = dual_product(resolve_tensor(in, o.tensor_name));
        out["provenance"] = t.provenance;
        out["table"] = cube_json(t.table);
        out["associative"] = t.validate_associative().pass;
    } else if (o.target == "coproduct") {
        out["mat"] = matrix_json(coproduct(resolve_tensor(in, o.tensor_name)).mat);
    } else if (o.target == "aguiar") {
        out["mat"] = matrix_json(aguiar_map(resolve_tensor(in, o.tensor_name)).mat);
    } else if (o.target == "phi") {
        out["mat"] = matrix_json(phi(resolve_form(in, o.form_name)).mat);
    } else if (o.target == "transport") {
        LinearMap f = resolve_map(in, o.map_name, n, n);
        out["mat"] = matrix_json(transport(f, resolve_form(in, o.form_name)).mat);
    } else if (o.target == "form") {
        BilinearForm b = form_from_invariant_tensor(resolve_tensor(in, o.tensor_name));
        out["bmat"] = matrix_json(b.bmat);
    } else {
        throw std::invalid_argument("unknown construct target: " + o.target);
    }
    std::cout << canonical_dump(out);
    return kExitPass;
}

// --------------------------------------------------------------- search ----

const std::vector<std::string> kPredicates = {"aybe", "aayb", "eaybe", "gaybe",
                                              "rb",   "o_op", "ext_o"};

int run_search(const Options& o) {
    Inputs in = load_inputs(o);
    if (in.field.kind != FieldKind::PrimeField)
        throw std::invalid_argument("search requires a prime field (--field F<p>)");
    int n = in.algebra.dim();
    OperatorContext ctx = make_context(in, o);
    Scalar eps = Scalar::parse(in.field, o.eaybe_mass);
    LinearMap beta = resolve_map(in, o.beta_name, ctx.dimR(), n);
    PredicateFn pred = make_predicate(o.target, ctx, eps, beta);

    bool map_shape = o.target == "rb" || o.target == "o_op" || o.target == "ext_o";
    SearchSpace space =
        map_shape ? SearchSpace::map(in.field, n, ctx.dimR())
                  : SearchSpace::tensor(in.field, n,
                                        o.skew ? Symmetry::Skew
                                               : (o.symmetric ? Symmetry::Symmetric
                                                              : Symmetry::None));
    SolutionSet set = search(space, o.target, pred, o.workers);
    if (o.json) {
        std::cout << canonical_dump(set.to_json());
    } else {
        std::cout << set.predicate << " on " << set.space << ": "
                  << set.elements.size() << " solutions / " << set.scanned
                  << " candidates\n";
        for (const auto& e : set.elements) {
            std::cout << " ";
            for (long v : e) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return kExitPass;
}

// --------------------------------------------------------------- verify ----

struct VerifyOutcome {
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;  // gate/hypothesis not met
    std::uint64_t violations = 0;
};

bool asserts_pass(const Report& r) {
    for (const auto& c : r.checks)
        if (c.id.rfind("gate-", 0) != 0 && !c.pass) return false;
    return true;
}

Bimodule zero_action_bimodule(const Algebra& a, int dim) {
    Bimodule v;
    v.algebra = a;
    v.dim = dim;
    for (int i = 0; i < a.dim(); ++i) {
        v.left.emplace_back(a.field(), dim, dim);
        v.right.emplace_back(a.field(), dim, dim);
    }
    return v;
}

BimoduleKAlgebra module_for(const Inputs& in, const Options& o) {
    if (o.dim_v == 0 || o.dim_v == in.algebra.dim())
        return BimoduleKAlgebra::with_zero_product(regular_bimodule(in.algebra));
    return BimoduleKAlgebra::with_zero_product(
        zero_action_bimodule(in.algebra, o.dim_v));
}

LinearMap random_map(FieldSpec f, int src, int dst, std::mt19937_64& rng) {
    Matrix m(f, dst, src);
    if (f.kind == FieldKind::PrimeField) {
        std::uniform_int_distribution<long> d(0, f.p - 1);
        for (int i = 0; i < dst; ++i)
            for (int j = 0; j < src; ++j) m.at(i, j) = Scalar(f, d(rng));
    } else {
        std::uniform_int_distribution<long> d(-3, 3);
        for (int i = 0; i < dst; ++i)
            for (int j = 0; j < src; ++j) m.at(i, j) = Scalar(f, d(rng));
    }
    return LinearMap(src, dst, std::move(m));
}

using VerifyFn = VerifyOutcome (*)(const Inputs&, const Options&);

VerifyOutcome verify_co_mop(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    Scalar lambda = Scalar::parse(in.field, o.weight);
    auto run_one = [&](const LinearMap& alpha) {
        ++out.instances;
        if (!shift_equivalence(in.algebra, alpha, lambda).pass) ++out.violations;
    };
    if (o.exhaustive) {
        for (const Matrix& m : enumerate(SearchSpace::map(in.field, n, n)))
            run_one(LinearMap(n, n, m));
    } else {
        std::mt19937_64 rng(o.seed);
        for (long t = 0; t < o.trials; ++t) run_one(random_map(in.field, n, n, rng));
    }
    return out;
}

VerifyOutcome verify_thm_ansatz(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    Scalar lambda = Scalar::parse(in.field, o.weight);
    Scalar minus_one = -Scalar::one(in.field);
    OperatorContext ctx = OperatorContext::regular(in.algebra, lambda, minus_one, lambda);
    auto betas = enumerate(SearchSpace::map(in.field, n, n));
    auto alphas = betas;
    for (const Matrix& bm : betas) {
        LinearMap beta(n, n, bm);
        bool gate = true;
        for (int sign : {+1, -1}) {
            Scalar mu = sign > 0 ? lambda : -lambda;
            OperatorContext g(in.algebra, ctx.module, lambda, minus_one, mu);
            if (!balanced_residual(g, beta, true).pass) gate = false;
        }
        if (!gate) {
            out.skipped += alphas.size();
            continue;
        }
        for (const Matrix& am : alphas) {
            LinearMap alpha(n, n, am);
            ++out.instances;
            Report r = verify_ansatz(ctx, alpha + beta, alpha - beta);
            if (!asserts_pass(r)) ++out.violations;
        }
    }
    return out;
}

VerifyOutcome verify_thm_aybea(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    const Algebra& a = in.algebra;
    int n = a.dim();
    Scalar one = Scalar::one(in.field), zero = Scalar::zero(in.field);
    Scalar four = one + one + one + one;
    if (four.is_zero()) throw FieldError("mass (kappa+1)/4 needs 1/4: refuse p=2");
    Bimodule dual = dual_bimodule(regular_bimodule(a));
    std::vector<Scalar> kappas = {-one, zero, one};
    for (const Matrix& m : enumerate(SearchSpace::tensor(in.field, n))) {
        Tensor2 r(a, m);
        auto [skew, sym] = sym_skew_split(r);
        auto [inv, bal, hom] = invariance_tri_check(sym);
        if (!(inv && bal && hom)) {
            ++out.skipped;
            continue;
        }
        for (const Scalar& kappa : kappas) {
            ++out.instances;
            bool lhs = eaybe_residual(r, (kappa + one) * four.inverse()).is_zero();
            OperatorContext ctx(a, BimoduleKAlgebra::with_zero_product(dual), zero,
                                kappa, zero);
            bool rhs = extended_o_residual(ctx, tensor_as_map(skew), tensor_as_map(sym),
                                           true)
                           .find("eq:gmybe")
                           ->pass;
            if (lhs != rhs) ++out.violations;
        }
    }
    return out;
}

VerifyOutcome verify_thm_skewgm(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    DoubleContext dc = hat_algebra(in.algebra, module_for(in, o));
    auto [kappa, mu] = parse_mass(in.field, o.mass);
    (void)mu;
    LinearMap beta = LinearMap::zero(in.field, dc.dim_v(), dc.dim_a());
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, dc.dim_a(), dc.dim_v()))) {
        ++out.instances;
        Report r = verify_skewgm(dc, LinearMap(dc.dim_v(), dc.dim_a(), m), beta, kappa);
        if (!asserts_pass(r)) ++out.violations;
    }
    return out;
}

VerifyOutcome verify_thm_maybeequi(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    DoubleContext dc = hat_algebra(in.algebra, module_for(in, o));
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, dc.dim_a(), dc.dim_v()))) {
        ++out.instances;
        if (!gaybe_lift_conditions(dc, LinearMap(dc.dim_v(), dc.dim_a(), m)).consistent())
            ++out.violations;
    }
    return out;
}

VerifyOutcome verify_co_motoaybe1(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    Scalar lambda = Scalar::parse(in.field, o.weight);
    if (lambda.is_zero()) lambda = Scalar::one(in.field);
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, n, n))) {
        ++out.instances;
        if (!double_aybe_tests(in.algebra, LinearMap(n, n, m), lambda).pass)
            ++out.violations;
    }
    return out;
}

VerifyOutcome verify_co_motoaybe2(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    OperatorContext ctx = make_context(in, o);
    LinearMap beta = resolve_map(in, o.beta_name, ctx.dimR(), n);
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, n, ctx.dimR()))) {
        LinearMap alpha(ctx.dimR(), n, m);
        try {
            Report r = gaybe_o_conditions(ctx, alpha, beta);
            ++out.instances;
            if (!r.find("co:motoaybe2:i")->pass) ++out.violations;
        } catch (const std::invalid_argument&) {
            ++out.skipped;
        }
    }
    return out;
}

VerifyOutcome verify_le_product(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    OperatorContext ctx = make_context(in, o);
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, n, ctx.dimR()))) {
        ++out.instances;
        auto [assoc, criterion] = assoc_criterion_check(ctx, LinearMap(ctx.dimR(), n, m));
        if (assoc != criterion) ++out.violations;
    }
    return out;
}

VerifyOutcome verify_le_syin(const Inputs& in, const Options&) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    for (const Matrix& m :
         enumerate(SearchSpace::tensor(in.field, n, Symmetry::Symmetric))) {
        ++out.instances;
        auto [inv, bal, hom] = invariance_tri_check(Tensor2(in.algebra, m));
        if (inv != (bal && hom)) ++out.violations;
    }
    return out;
}

VerifyOutcome verify_le_syco(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    DoubleContext dc = hat_algebra(in.algebra, module_for(in, o));
    for (const Matrix& m : enumerate(SearchSpace::map(in.field, dc.dim_a(), dc.dim_v()))) {
        ++out.instances;
        auto [lifted, base] = lifted_balanced_check(dc, LinearMap(dc.dim_v(), dc.dim_a(), m));
        if (lifted != base) ++out.violations;
    }
    return out;
}

VerifyOutcome verify_pp_bialgebra(const Inputs& in, const Options&) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    for (const Matrix& m : enumerate(SearchSpace::tensor(in.field, n))) {
        ++out.instances;
        Tensor2 r(in.algebra, m);
        try {
            ProductTable dual = dual_product(r);
            if (dual.validate_associative().pass != gaybe_pass(r)) ++out.violations;
        } catch (const std::logic_error&) {
            ++out.violations;
        }
    }
    return out;
}

VerifyOutcome verify_co_ii_mybe(const Inputs& in, const Options& o) {
    VerifyOutcome out;
    int n = in.algebra.dim();
    Scalar eps = Scalar::parse(in.field, o.eaybe_mass);
    for (const Matrix& m : enumerate(SearchSpace::tensor(in.field, n))) {
        Tensor2 r(in.algebra, m);
        if (!eaybe_residual(r, eps).is_zero()) {
            ++out.skipped;
            continue;
        }
        auto [skew, sym] = sym_skew_split(r);
        (void)skew;
        auto [inv, bal, hom] = invariance_tri_check(sym);
        if (!(inv && bal && hom)) {
            ++out.skipped;
            continue;
        }
        ++out.instances;
        if (!gaybe_pass(r)) ++out.violations;
    }
    return out;
}

const std::vector<std::pair<std::string, VerifyFn>> kVerifyRegistry = {
    {"thm:ansatz", verify_thm_ansatz},
    {"thm:aybea", verify_thm_aybea},
    {"thm:skewgm", verify_thm_skewgm},
    {"thm:maybeequi", verify_thm_maybeequi},
    {"co:motoaybe1", verify_co_motoaybe1},
    {"co:motoaybe2", verify_co_motoaybe2},
    {"le:product", verify_le_product},
    {"le:syin", verify_le_syin},
    {"le:syco", verify_le_syco},
    {"pp:bialgebra", verify_pp_bialgebra},
    {"co:mop", verify_co_mop},
    {"co:II-MYBE", verify_co_ii_mybe},
};

int run_verify(const Options& o) {
    Inputs in = load_inputs(o);
    for (const auto& [id, fn] : kVerifyRegistry) {
        if (id != o.target) continue;
        VerifyOutcome v = fn(in, o);
        if (o.json) {
            nlohmann::json j;
            j["target"] = id;
            j["instances"] = v.instances;
            j["skipped"] = v.skipped;
            j["violations"] = v.violations;
            j["pass"] = v.violations == 0;
            std::cout << canonical_dump(j);
        } else {
            std::cout << id << ": " << v.instances << " instances, " << v.skipped
                      << " skipped, " << v.violations << " violations -> "
                      << (v.violations == 0 ? "PASS" : "FAIL") << "\n";
        }
        return v.violations == 0 ? kExitPass : kExitFail;
    }
    throw std::invalid_argument("unknown verify target: " + o.target);
}

// ------------------------------------------------------------- fixtures ----

Bundle fixture_bundle(const std::string& name) {
    FieldSpec q = FieldSpec::rationals();
    Bundle b;
    b.field = q;
    if (name == "zeroalg2") {
        b.algebras.emplace("ZeroAlg2", fixtures::zero_alg2(q));
    } else if (name == "nil2") {
        Algebra a = fixtures::nil2(q);
        b.algebras.emplace("Nil2", a);
        b.maps.emplace("P0", LinearMap::zero(q, 2, 2));
        Matrix p(q, 2, 2);
        p.at(0, 0) = Scalar(q, 2);
        p.at(1, 1) = Scalar(q, 1);
        b.maps.emplace("P21", LinearMap(2, 2, p));  // weight-0 sample operator
    } else if (name == "dualnum") {
        Algebra a = fixtures::dual_num(q);
        b.algebras.emplace("DualNum", a);
        b.forms.emplace("trace", BilinearForm(a, fixtures::dual_num_trace_form(q)));
        b.maps.emplace("P0", LinearMap::zero(q, 2, 2));
    } else if (name == "ut2") {
        Algebra a = fixtures::ut2(q);
        b.algebras.emplace("UT2", a);
        Matrix t(q, 3, 3);
        t.at(0, 1) = Scalar(q, 1);
        t.at(1, 0) = Scalar(q, -1);
        b.tensors.emplace("r_flagship", Tensor2(a, t));
    } else if (name == "m2") {
        b.algebras.emplace("M2", fixtures::m2(q));
    } else {
        throw std::invalid_argument("unknown fixture: " + name);
    }
    return b;
}

int run_fixtures(const Options& o) {
    std::filesystem::create_directories(o.out);
    for (const std::string& name : {"zeroalg2", "nil2", "dualnum", "ut2", "m2"}) {
        std::string path = o.out + "/" + name + ".json";
        save_bundle(fixture_bundle(name), path);
        std::cout << path << "\n";
    }
    return kExitPass;
}

void print_registry() {
    std::cout << "verbs: check construct search verify fixtures\n";
    std::cout << "check targets:";
    for (const auto& t : kCheckTargets) std::cout << " " << t;
    std::cout << "\nconstruct targets:";
    for (const auto& t : kConstructTargets) std::cout << " " << t;
    std::cout << "\nsearch predicates:";
    for (const auto& t : kPredicates) std::cout << " " << t;
    std::cout << "\nverify targets:";
    for (const auto& [id, fn] : kVerifyRegistry) std::cout << " " << id;
    std::cout << "\nfixtures: ZeroAlg2 Nil2 DualNum UT2 M2\n";
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"ybelab: exact checks, constructions and searches for "
                 "Rota-Baxter-type operator identities and Yang-Baxter-type "
                 "tensor equations"};
    app.require_subcommand(0, 1);
    bool list = false;
    app.add_flag("--list", list, "List registered verbs and targets");

    auto add_common = [&](CLI::App* sub, bool needs_target) {
        if (needs_target)
            sub->add_option("target", o.target, "Registered target id")->required();
        sub->add_option("--algebra", o.algebra, "Bundle path or fixture name");
        sub->add_option("--bimodule", o.bimodule, "Bimodule name from the bundle");
        sub->add_option("--map", o.map_name, "Map name from the bundle, or 0 / id");
        sub->add_option("--beta", o.beta_name, "Modification map name, or 0 / id");
        sub->add_option("--tensor", o.tensor_name, "Tensor name from the bundle");
        sub->add_option("--form", o.form_name, "Form name from the bundle, or trace");
        sub->add_option("--weight", o.weight, "Weight lambda");
        sub->add_option("--mass", o.mass, "Mass kappa[,mu]");
        sub->add_option("--eaybe-mass", o.eaybe_mass, "Extended-equation mass epsilon");
        sub->add_option("--field", o.field, "Q | F<p> | Fp:<p>");
        sub->add_flag("--exhaustive", o.exhaustive, "Exhaustive enumeration");
        sub->add_option("--trials", o.trials, "Random trial count");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--workers", o.workers, "Worker thread count");
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--strict-matched-pair", o.strict, "Literal-text matched-pair mode");
        sub->add_flag("--skew", o.skew, "Skew symmetry constraint");
        sub->add_flag("--symmetric", o.symmetric, "Symmetric constraint");
        sub->add_option("--dimV", o.dim_v, "Module dimension (0: regular bimodule)");
    };

    CLI::App* check = app.add_subcommand("check", "Evaluate one identity residual");
    add_common(check, true);
    CLI::App* construct = app.add_subcommand("construct", "Build a derived structure");
    add_common(construct, true);
    CLI::App* search_cmd = app.add_subcommand("search", "Exhaustive predicate search");
    add_common(search_cmd, true);
    CLI::App* verify = app.add_subcommand("verify", "Run a theorem equivalence scan");
    add_common(verify, true);
    verify->get_option("--field")->default_str("F3");
    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Write fixture bundles");
    fixtures_cmd->add_option("--out", o.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (list) {
        print_registry();
        return kExitPass;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kExitUsage;
    }

    // subcommand default handling: verify defaults to F3 fields
    if (verify->parsed() && !verify->get_option("--field")->count()) o.field = "F3";

    try {
        if (check->parsed()) return run_check(o);
        if (construct->parsed()) return run_construct(o);
        if (search_cmd->parsed()) return run_search(o);
        if (verify->parsed()) return run_verify(o);
        if (fixtures_cmd->parsed()) return run_fixtures(o);
    } catch (const BundleError& e) {
        std::cerr << "bundle error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FieldError& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
