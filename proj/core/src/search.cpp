#include "ybelab/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ybe {

SearchSpace SearchSpace::tensor(FieldSpec f, int n, Symmetry sym) {
    if (f.kind != FieldKind::PrimeField)
        throw std::invalid_argument("search spaces require a prime field");
    SearchSpace s;
    s.shape = Shape::Tensor;
    s.rows = s.cols = n;
    s.field = f;
    s.symmetry = sym;
    return s;
}

SearchSpace SearchSpace::map(FieldSpec f, int target_dim, int source_dim) {
    if (f.kind != FieldKind::PrimeField)
        throw std::invalid_argument("search spaces require a prime field");
    SearchSpace s;
    s.shape = Shape::Map;
    s.rows = target_dim;
    s.cols = source_dim;
    s.field = f;
    s.symmetry = Symmetry::None;
    return s;
}

std::vector<std::pair<int, int>> SearchSpace::free_positions() const {
    if (shape == Shape::Map && symmetry != Symmetry::None)
        throw std::invalid_argument("symmetry constraints apply to tensor spaces only");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            switch (symmetry) {
                case Symmetry::None:
                    out.emplace_back(i, j);
                    break;
                case Symmetry::Symmetric:
                    if (i <= j) out.emplace_back(i, j);
                    break;
                case Symmetry::Skew:
                    // diagonal forced to 0 unless char 2, where -x = x
                    if (i < j || (i == j && field.p == 2)) out.emplace_back(i, j);
                    break;
            }
        }
    return out;
}

BigInt SearchSpace::candidate_count() const {
    BigInt count = 1;
    size_t free_count = free_positions().size();
    for (size_t i = 0; i < free_count; ++i) count *= field.p;
    return count;
}

std::string SearchSpace::describe() const {
    std::string kind = shape == Shape::Tensor ? "tensor" : "map";
    std::string sym = symmetry == Symmetry::None
                          ? ""
                          : (symmetry == Symmetry::Symmetric ? ",symmetric" : ",skew");
    return kind + " " + std::to_string(rows) + "x" + std::to_string(cols) + " over " +
           field.str() + sym;
}

std::uint64_t search_budget() {
    if (const char* env = std::getenv("YBELAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("YBELAB_BUDGET must be a positive integer");
    }
    return 10000000ULL;
}

Matrix candidate_at(const SearchSpace& space, std::uint64_t index) {
    auto free = space.free_positions();
    Matrix m(space.field, space.rows, space.cols);
    // lexicographic: the first free position is the most significant digit
    for (auto it = free.rbegin(); it != free.rend(); ++it) {
        long digit = static_cast<long>(index % space.field.p);
        index /= space.field.p;
        m.at(it->first, it->second) = Scalar(space.field, digit);
    }
    if (space.symmetry == Symmetry::Symmetric) {
        for (auto [i, j] : free)
            if (i != j) m.at(j, i) = m.at(i, j);
    } else if (space.symmetry == Symmetry::Skew) {
        for (auto [i, j] : free)
            if (i != j) m.at(j, i) = -m.at(i, j);
    }
    return m;
}

static std::uint64_t checked_count(const SearchSpace& space) {
    BigInt count = space.candidate_count();
    std::uint64_t budget = search_budget();
    if (count > budget)
        throw std::runtime_error("search budget exceeded: " + count.str() +
                                 " candidates > budget " + std::to_string(budget));
    return count.convert_to<std::uint64_t>();
}

std::vector<Matrix> enumerate(const SearchSpace& space) {
    std::uint64_t count = checked_count(space);
    std::vector<Matrix> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(candidate_at(space, i));
    return out;
}

PredicateFn make_predicate(const std::string& name, const OperatorContext& ctx,
                           const Scalar& eps, const LinearMap& beta) {
    const Algebra a = ctx.algebra;
    if (name == "aybe")
        return [a](const Matrix& m) { return aybe_residual(Tensor2(a, m)).is_zero(); };
    if (name == "aayb")
        return [a](const Matrix& m) { return aayb_residual(Tensor2(a, m)).is_zero(); };
    if (name == "eaybe")
        return [a, eps](const Matrix& m) {
            return eaybe_residual(Tensor2(a, m), eps).is_zero();
        };
    if (name == "gaybe")
        return [a](const Matrix& m) { return gaybe_pass(Tensor2(a, m)); };
    if (name == "rb") {
        Scalar lambda = ctx.weight;
        return [a, lambda](const Matrix& m) {
            return rota_baxter_residual(a, LinearMap(a.dim(), a.dim(), m), lambda).pass;
        };
    }
    if (name == "o_op")
        return [ctx](const Matrix& m) {
            return o_operator_residual(ctx, LinearMap(ctx.dimR(), ctx.dimA(), m)).pass;
        };
    if (name == "ext_o")
        return [ctx, beta](const Matrix& m) {
            return extended_o_residual(ctx, LinearMap(ctx.dimR(), ctx.dimA(), m), beta)
                .pass;
        };
    throw std::invalid_argument("unknown predicate: " + name);
}

static std::vector<long> matrix_coeffs(const Matrix& m) {
    std::vector<long> out;
    out.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.push_back(static_cast<long>(m.at(i, j).value().convert_to<BigInt>()));
    return out;
}

bool SolutionSet::contains(const std::vector<long>& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

nlohmann::json SolutionSet::to_json() const {
    nlohmann::json j;
    j["space"] = space;
    j["predicate"] = predicate;
    j["field"] = field.str();
    j["rows"] = rows;
    j["cols"] = cols;
    j["scanned"] = scanned;
    j["count"] = elements.size();
    j["elements"] = elements;
    return j;
}

SolutionSet search(const SearchSpace& space, const std::string& predicate_name,
                   const PredicateFn& pred, int workers) {
    std::uint64_t count = checked_count(space);
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > count && count > 0)
        workers = static_cast<int>(count);

    std::vector<std::vector<std::vector<long>>> found(workers);
    std::vector<std::thread> threads;
    std::uint64_t chunk = workers > 0 ? count / workers : 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = chunk * w;
        std::uint64_t hi = (w == workers - 1) ? count : chunk * (w + 1);
        threads.emplace_back([&, w, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) {
                Matrix m = candidate_at(space, i);
                if (pred(m)) found[w].push_back(matrix_coeffs(m));
            }
        });
    }
    for (auto& t : threads) t.join();

    SolutionSet out;
    out.space = space.describe();
    out.predicate = predicate_name;
    out.field = space.field;
    out.rows = space.rows;
    out.cols = space.cols;
    out.scanned = count;
    for (auto& part : found)
        out.elements.insert(out.elements.end(), part.begin(), part.end());
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                       out.elements.end());
    return out;
}

Report compare_sets(
    const SolutionSet& s1, const SolutionSet& s2,
    const std::function<std::vector<long>(const std::vector<long>&)>& transform) {
    if (s1.field != s2.field)
        throw std::invalid_argument("solution sets live over different fields");
    std::vector<std::vector<long>> lhs = s1.elements;
    if (transform) {
        for (auto& e : lhs) e = transform(e);
        std::sort(lhs.begin(), lhs.end());
        lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
    }
    Report report;
    IdentityAccumulator acc("set-equality");
    for (const auto& e : lhs)
        if (!s2.contains(e)) {
            std::vector<int> idx(e.begin(), e.end());
            acc.observe(idx, false);
            break;
        }
    if (acc.pass())
        for (const auto& e : s2.elements) {
            bool in_lhs = std::binary_search(lhs.begin(), lhs.end(), e);
            if (!in_lhs) {
                std::vector<int> idx(e.begin(), e.end());
                acc.observe(idx, false);
                break;
            }
        }
    acc.observe({}, lhs.size() == s2.elements.size());
    acc.emit(report);
    return report;
}

Matrix element_matrix(const SolutionSet& s, const std::vector<long>& e) {
    Matrix m(s.field, s.rows, s.cols);
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j)
            m.at(i, j) = Scalar(s.field, e[static_cast<size_t>(i) * s.cols + j]);
    return m;
}

}  // namespace ybe
