#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "tqft/diagram/sliced.hpp"

namespace tqft {

// Color assigned to a slot: a concrete label, or the regular color
// Omega = sum_i d_i X_i.
constexpr int kOmega = -1;

using Tree = std::vector<int>;  // e[0..n-1]; e[i] is the charge after strand i

// Matrix of a diagram on the left-associated fusion-tree bases of its top
// (source) and bottom (target) objects; entries[target][source]. Trees of
// different total charge never mix.
struct MorphismMatrix {
    std::vector<Tree> source;
    std::vector<Tree> target;
    ScalarMatrix entries;

    bool is_scalar() const { return source.size() == 1 && target.size() == 1 && source[0].empty() && target[0].empty(); }
    const CycloScalar& scalar() const;  // throws unless is_scalar()
};

// Admissible left-associated trees over the given objects.
std::vector<Tree> enumerate_trees(const std::vector<int>& objects, const PremodularData& c);

struct VecKeyHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
        return h;
    }
};

// Evaluates sliced diagrams over one category, caching braid and vertex
// coefficients between calls. Not thread-safe; use one per thread.
class Evaluator {
public:
    explicit Evaluator(CategoryPtr c) : c_(std::move(c)) {}
    const PremodularData& category() const { return *c_; }

    // slot_colors[k] is a label index or kOmega; missing entries mean Omega.
    MorphismMatrix evaluate(const SlicedDiagram& d, const std::vector<int>& slot_colors = {});
    CycloScalar evaluate_closed(const SlicedDiagram& d, const std::vector<int>& slot_colors = {});

private:
    using Coeffs = std::vector<std::pair<int, CycloScalar>>;
    const Coeffs& braid(int e_prev, int x, int y, int e_next, int e_mid, bool under);

    CategoryPtr c_;
    std::unordered_map<std::vector<int>, Coeffs, VecKeyHash> braid_cache_;
};

// One-shot helpers.
MorphismMatrix evaluate(const SlicedDiagram& d, CategoryPtr c, const std::vector<int>& slot_colors = {});
CycloScalar evaluate_closed(const SlicedDiagram& d, CategoryPtr c, const std::vector<int>& slot_colors = {});

}  // namespace tqft
