#ifndef YBELAB_SEARCH_HPP
#define YBELAB_SEARCH_HPP

#include "ybelab/tensors.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ybe {

enum class Symmetry { None, Symmetric, Skew };

/// Finite candidate space over a prime field: either n x n tensor coefficient
/// matrices (optionally constrained symmetric/skew) or m x n operator
/// matrices. Enumeration order is lexicographic over the free coefficients,
/// row-major, values 0..p-1.
struct SearchSpace {
    enum class Shape { Tensor, Map };

    Shape shape = Shape::Tensor;
    int rows = 0;
    int cols = 0;
    FieldSpec field;
    Symmetry symmetry = Symmetry::None;

    static SearchSpace tensor(FieldSpec f, int n, Symmetry sym = Symmetry::None);
    static SearchSpace map(FieldSpec f, int target_dim, int source_dim);

    /// Free coefficient slots in enumeration order.
    std::vector<std::pair<int, int>> free_positions() const;
    /// p^(free coefficient count).
    BigInt candidate_count() const;
    std::string describe() const;
};

/// Enumeration budget: YBELAB_BUDGET env var, default 10^7.
std::uint64_t search_budget();

/// Candidate with the given lexicographic index (no budget check).
Matrix candidate_at(const SearchSpace& space, std::uint64_t index);

/// Materializes the whole space in order; throws std::runtime_error with the
/// candidate count when it exceeds the budget.
std::vector<Matrix> enumerate(const SearchSpace& space);

using PredicateFn = std::function<bool(const Matrix&)>;

/// Named residual predicates: aybe | aayb | eaybe | gaybe | rb | o_op |
/// ext_o. Weight/mass parameters come from ctx (rb uses ctx.weight, ext_o
/// uses ctx.{weight,kappa,mu}); eps is the eaybe mass; beta is the fixed
/// modification for ext_o. Unknown names throw std::invalid_argument.
PredicateFn make_predicate(const std::string& name, const OperatorContext& ctx,
                           const Scalar& eps = Scalar(),
                           const LinearMap& beta = LinearMap());

/// Sorted duplicate-free list of solution coefficient vectors (full matrix,
/// row-major residues); identical output for any worker count.
struct SolutionSet {
    std::string space;
    std::string predicate;
    FieldSpec field;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<long>> elements;
    std::uint64_t scanned = 0;

    bool contains(const std::vector<long>& e) const;
    nlohmann::json to_json() const;
};

/// Exhaustive filter with deterministic range partitioning over `workers`
/// threads. Budget-checked like enumerate.
SolutionSet search(const SearchSpace& space, const std::string& predicate_name,
                   const PredicateFn& pred, int workers = 1);

/// Set equality up to an optional coefficient transform applied to s1's
/// elements; witnesses are the first elements of the symmetric difference.
Report compare_sets(
    const SolutionSet& s1, const SolutionSet& s2,
    const std::function<std::vector<long>(const std::vector<long>&)>& transform = {});

/// Rebuilds the matrix behind a stored coefficient vector.
Matrix element_matrix(const SolutionSet& s, const std::vector<long>& e);

}  // namespace ybe

#endif
