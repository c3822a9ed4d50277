#include "tqft/links/rt.hpp"

#include "tqft/category/invariants.hpp"
#include "tqft/errors.hpp"

#include <thread>

namespace tqft {

CycloScalar colored_evaluate(const FramedLink& L, const std::vector<int>& coloring, Evaluator& ev) {
    if (coloring.size() != L.size())
        throw Error("coloring-error", "expected " + std::to_string(L.size()) + " colors, got " + std::to_string(coloring.size()));
    for (int col : coloring)
        if (col != kOmega && (col < 0 || col >= ev.category().size())) throw Error("coloring-error", "unknown label");
    return ev.evaluate_closed(mirror(L.diagram), coloring);
}

CycloScalar colored_evaluate(const FramedLink& L, const std::vector<int>& coloring, CategoryPtr c) {
    Evaluator ev(std::move(c));
    return colored_evaluate(L, coloring, ev);
}

CycloScalar omega_evaluate(const FramedLink& L, CategoryPtr c, int threads) {
    std::vector<int> coloring(L.size(), kOmega);
    if (L.size() == 0 || threads <= 1) return colored_evaluate(L, coloring, c);
    const int n = c->size();
    std::vector<CycloScalar> part(n, CycloScalar(0));
    auto work = [&](int w) {
        Evaluator ev(c);
        std::vector<int> col = coloring;
        for (int i = w; i < n; i += threads) {
            col[0] = i;
            part[i] = c->d(i) * colored_evaluate(L, col, ev);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(threads, n); ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    CycloScalar total(0);
    for (const auto& s : part) total += s;
    return total;
}

CycloScalar zrt3(const FramedLink& L, CategoryPtr c, int threads) {
    require_modular(*c);
    const CycloScalar& kappa = require_kappa(*c);
    const CycloScalar& sqrtD = require_sqrtD(*c);
    int sigma = link_signature(L);
    CycloScalar omega = omega_evaluate(L, c, threads);
    return kappa.pow(-sigma) * sqrtD.pow(-static_cast<long>(L.size()) - 1) * omega;
}

}  // namespace tqft
