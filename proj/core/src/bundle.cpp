#include "ybelab/bundle.hpp"

#include <fstream>

namespace ybe {

nlohmann::json scalar_to_json(const Scalar& s) {
    BigInt num = boost::multiprecision::numerator(s.value());
    BigInt den = boost::multiprecision::denominator(s.value());
    if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
        return num.convert_to<std::int64_t>();
    return num.str() + "/" + den.str();
}

Scalar scalar_from_json(FieldSpec f, const nlohmann::json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Scalar(f, BigRational(j.get<std::int64_t>()));
        if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    } catch (const std::exception& e) {
        throw BundleError(path + ": scalar not representable: " + e.what());
    }
    throw BundleError(path + ": expected an integer or \"a/b\" string");
}

static const nlohmann::json& expect(const nlohmann::json& j, const std::string& key,
                                    const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw BundleError(path + ": missing key \"" + key + "\"");
    return j.at(key);
}

static int expect_dim(const nlohmann::json& j, const std::string& key,
                      const std::string& path) {
    const nlohmann::json& v = expect(j, key, path);
    if (!v.is_number_integer() || v.get<int>() < 0)
        throw BundleError(path + "/" + key + ": expected a nonnegative integer");
    return v.get<int>();
}

static Matrix parse_matrix(FieldSpec f, const nlohmann::json& j, int rows, int cols,
                           const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw BundleError(path + ": expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        std::string rpath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw BundleError(rpath + ": expected " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = scalar_from_json(f, row.at(k),
                                          rpath + "[" + std::to_string(k) + "]");
    }
    return m;
}

static Cube parse_cube(FieldSpec f, const nlohmann::json& j, int n,
                       const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw BundleError(path + ": expected " + std::to_string(n) + " slices");
    Cube c(f, n);
    for (int i = 0; i < n; ++i) {
        std::string ipath = path + "[" + std::to_string(i) + "]";
        Matrix slice = parse_matrix(f, j.at(i), n, n, ipath);
        for (int jj = 0; jj < n; ++jj)
            for (int k = 0; k < n; ++k) c.at(i, jj, k) = slice.at(jj, k);
    }
    return c;
}

static nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

static nlohmann::json cube_to_json(const Cube& c) {
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

static const Algebra& resolve_algebra(const Bundle& b, const nlohmann::json& j,
                                      const std::string& path) {
    const nlohmann::json& name = expect(j, "algebra", path);
    if (!name.is_string()) throw BundleError(path + "/algebra: expected a name string");
    auto it = b.algebras.find(name.get<std::string>());
    if (it == b.algebras.end())
        throw BundleError(path + "/algebra: unknown algebra \"" +
                          name.get<std::string>() + "\"");
    return it->second;
}

Bundle bundle_from_json(const nlohmann::json& j) {
    Bundle b;
    const nlohmann::json& field = expect(j, "field", "");
    if (!field.is_string()) throw BundleError("/field: expected a field string");
    try {
        b.field = FieldSpec::parse(field.get<std::string>());
    } catch (const std::exception& e) {
        throw BundleError(std::string("/field: ") + e.what());
    }

    if (j.contains("algebras")) {
        for (const auto& [name, spec] : j.at("algebras").items()) {
            std::string path = "/algebras/" + name;
            int n = expect_dim(spec, "dim", path);
            Algebra a(parse_cube(b.field, expect(spec, "c", path), n, path + "/c"));
            if (spec.contains("labels")) {
                std::vector<std::string> labels;
                for (const auto& l : spec.at("labels")) labels.push_back(l.get<std::string>());
                a.set_labels(std::move(labels));
            }
            b.algebras.emplace(name, std::move(a));
        }
    }
    if (j.contains("bimodules")) {
        for (const auto& [name, spec] : j.at("bimodules").items()) {
            std::string path = "/bimodules/" + name;
            Bimodule v;
            v.algebra = resolve_algebra(b, spec, path);
            v.dim = expect_dim(spec, "dim", path);
            const nlohmann::json& left = expect(spec, "left", path);
            const nlohmann::json& right = expect(spec, "right", path);
            int na = v.algebra.dim();
            if (!left.is_array() || static_cast<int>(left.size()) != na)
                throw BundleError(path + "/left: expected " + std::to_string(na) +
                                  " action matrices");
            if (!right.is_array() || static_cast<int>(right.size()) != na)
                throw BundleError(path + "/right: expected " + std::to_string(na) +
                                  " action matrices");
            for (int i = 0; i < na; ++i) {
                v.left.push_back(parse_matrix(b.field, left.at(i), v.dim, v.dim,
                                              path + "/left[" + std::to_string(i) + "]"));
                v.right.push_back(parse_matrix(b.field, right.at(i), v.dim, v.dim,
                                               path + "/right[" + std::to_string(i) + "]"));
            }
            b.bimodules.emplace(name, std::move(v));
        }
    }
    if (j.contains("maps")) {
        for (const auto& [name, spec] : j.at("maps").items()) {
            std::string path = "/maps/" + name;
            const nlohmann::json& mat = expect(spec, "mat", path);
            if (!mat.is_array() || mat.empty() || !mat.at(0).is_array())
                throw BundleError(path + "/mat: expected a nonempty matrix");
            int rows = static_cast<int>(mat.size());
            int cols = static_cast<int>(mat.at(0).size());
            b.maps.emplace(name, LinearMap(cols, rows,
                                           parse_matrix(b.field, mat, rows, cols,
                                                        path + "/mat")));
        }
    }
    if (j.contains("tensors")) {
        for (const auto& [name, spec] : j.at("tensors").items()) {
            std::string path = "/tensors/" + name;
            const Algebra& a = resolve_algebra(b, spec, path);
            b.tensors.emplace(name,
                              Tensor2(a, parse_matrix(b.field, expect(spec, "t", path),
                                                      a.dim(), a.dim(), path + "/t")));
        }
    }
    if (j.contains("forms")) {
        for (const auto& [name, spec] : j.at("forms").items()) {
            std::string path = "/forms/" + name;
            const Algebra& a = resolve_algebra(b, spec, path);
            b.forms.emplace(name,
                            BilinearForm(a, parse_matrix(b.field,
                                                         expect(spec, "bmat", path),
                                                         a.dim(), a.dim(),
                                                         path + "/bmat")));
        }
    }
    return b;
}

static std::string algebra_name_of(const Bundle& b, const Algebra& a) {
    for (const auto& [name, alg] : b.algebras)
        if (alg == a) return name;
    throw BundleError("object references an algebra that is not in the bundle");
}

nlohmann::json bundle_to_json(const Bundle& b) {
    nlohmann::json j;
    j["field"] = b.field.str();
    j["algebras"] = nlohmann::json::object();
    for (const auto& [name, a] : b.algebras) {
        nlohmann::json spec;
        spec["dim"] = a.dim();
        spec["c"] = cube_to_json(a.constants());
        if (!a.labels().empty()) spec["labels"] = a.labels();
        j["algebras"][name] = std::move(spec);
    }
    j["bimodules"] = nlohmann::json::object();
    for (const auto& [name, v] : b.bimodules) {
        nlohmann::json spec;
        spec["algebra"] = algebra_name_of(b, v.algebra);
        spec["dim"] = v.dim;
        nlohmann::json left = nlohmann::json::array(), right = nlohmann::json::array();
        for (const Matrix& m : v.left) left.push_back(matrix_to_json(m));
        for (const Matrix& m : v.right) right.push_back(matrix_to_json(m));
        spec["left"] = std::move(left);
        spec["right"] = std::move(right);
        j["bimodules"][name] = std::move(spec);
    }
    j["maps"] = nlohmann::json::object();
    for (const auto& [name, f] : b.maps) j["maps"][name] = {{"mat", matrix_to_json(f.mat)}};
    j["tensors"] = nlohmann::json::object();
    for (const auto& [name, t] : b.tensors)
        j["tensors"][name] = {{"algebra", algebra_name_of(b, t.algebra)},
                              {"t", matrix_to_json(t.t)}};
    j["forms"] = nlohmann::json::object();
    for (const auto& [name, f] : b.forms)
        j["forms"][name] = {{"algebra", algebra_name_of(b, f.algebra)},
                            {"bmat", matrix_to_json(f.bmat)}};
    return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Bundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BundleError("cannot open bundle file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw BundleError(path + ": invalid JSON: " + e.what());
    }
    return bundle_from_json(j);
}

void save_bundle(const Bundle& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BundleError("cannot write bundle file: " + path);
    out << canonical_dump(bundle_to_json(b));
}

}  // namespace ybe
