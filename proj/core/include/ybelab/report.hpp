#ifndef YBELAB_REPORT_HPP
#define YBELAB_REPORT_HPP

#include "ybelab/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ybe {

/// First counterexample of a failed identity: the basis indices it was
/// evaluated at plus the nonzero residual vector.
struct Witness {
    std::vector<int> indices;
    Vec residual;
};

struct IdentityCheck {
    std::string id;  // identity ids follow the source equation labels, e.g. "eq:rbo"
    bool pass = true;
    std::optional<Witness> witness;
};

/// Structured verdict: pass iff every checked identity passes; witnesses are
/// deterministic (first failure in lexicographic basis order).
struct Report {
    bool pass = true;
    std::vector<IdentityCheck> checks;

    /// Appends a check; on the first failing residual at `indices` records the
    /// witness and latches the overall verdict.
    void record(const std::string& id, bool ok,
                const std::vector<int>& indices = {}, const Vec& residual = {});

    /// Merges a sub-report, prefixing its identity ids.
    void merge(const std::string& prefix, const Report& sub);

    const IdentityCheck* find(const std::string& id) const;

    nlohmann::json to_json() const;
    std::string text() const;
};

/// Helper used by all residual evaluators: fold one evaluated identity
/// instance into a per-identity accumulator.
class IdentityAccumulator {
public:
    explicit IdentityAccumulator(std::string id) : id_(std::move(id)) {}

    void observe(const std::vector<int>& indices, const Vec& residual);
    void observe(const std::vector<int>& indices, bool ok);

    void emit(Report& report) const { report.record(id_, pass_, indices_, residual_); }
    bool pass() const { return pass_; }

private:
    std::string id_;
    bool pass_ = true;
    std::vector<int> indices_;
    Vec residual_;
};

}  // namespace ybe

#endif
