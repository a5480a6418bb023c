#ifndef YBELAB_BUNDLE_HPP
#define YBELAB_BUNDLE_HPP

#include "ybelab/frobenius.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ybe {

/// Schema violation; the message carries the path to the offending key.
class BundleError : public std::runtime_error {
public:
    explicit BundleError(const std::string& what) : std::runtime_error(what) {}
};

/// "algebra-bundle v1": one field, named algebras / bimodules / maps /
/// tensors / forms. Scalars are JSON integers or "a/b" strings.
struct Bundle {
    FieldSpec field;
    std::map<std::string, Algebra> algebras;
    std::map<std::string, Bimodule> bimodules;
    std::map<std::string, LinearMap> maps;
    std::map<std::string, Tensor2> tensors;
    std::map<std::string, BilinearForm> forms;
};

Bundle bundle_from_json(const nlohmann::json& j);
nlohmann::json bundle_to_json(const Bundle& b);

Bundle load_bundle(const std::string& path);
void save_bundle(const Bundle& b, const std::string& path);

/// Canonical serialization: sorted keys, canonical scalars, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(FieldSpec f, const nlohmann::json& j, const std::string& path);

}  // namespace ybe

#endif
