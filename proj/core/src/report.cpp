#include "ybelab/report.hpp"

#include <sstream>

namespace ybe {

void Report::record(const std::string& id, bool ok,
                    const std::vector<int>& indices, const Vec& residual) {
    IdentityCheck c;
    c.id = id;
    c.pass = ok;
    if (!ok) {
        c.witness = Witness{indices, residual};
        pass = false;
    }
    checks.push_back(std::move(c));
}

void Report::merge(const std::string& prefix, const Report& sub) {
    for (const auto& c : sub.checks) {
        IdentityCheck copy = c;
        copy.id = prefix + c.id;
        if (!copy.pass) pass = false;
        checks.push_back(std::move(copy));
    }
}

const IdentityCheck* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        if (c.witness) {
            jc["witness"]["indices"] = c.witness->indices;
            auto& res = jc["witness"]["residual"];
            res = nlohmann::json::array();
            for (const auto& s : c.witness->residual) res.push_back(s.str());
        }
        j["checks"].push_back(std::move(jc));
    }
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.id;
        if (c.witness) {
            os << "  at (";
            for (size_t i = 0; i < c.witness->indices.size(); ++i)
                os << (i ? "," : "") << c.witness->indices[i];
            os << ") residual [";
            for (size_t i = 0; i < c.witness->residual.size(); ++i)
                os << (i ? "," : "") << c.witness->residual[i].str();
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

void IdentityAccumulator::observe(const std::vector<int>& indices, const Vec& residual) {
    if (!pass_) return;
    if (!is_zero(residual)) {
        pass_ = false;
        indices_ = indices;
        residual_ = residual;
    }
}

void IdentityAccumulator::observe(const std::vector<int>& indices, bool ok) {
    if (!pass_ || ok) return;
    pass_ = false;
    indices_ = indices;
}

}  // namespace ybe
