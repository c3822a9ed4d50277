#include "tqft/statesum/statesum.hpp"

#include <cstdlib>
#include <map>
#include <thread>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

// Colorings counted (without evaluation) when reporting an exceeded budget.
constexpr std::uint64_t kProjectionCap = 4000000;

// Per-triangle list of tetrahedra whose last face (in triangle order) it is.
std::vector<std::vector<int>> closing_tets(const OrderedTriangulation& t) {
    std::vector<std::vector<int>> out(t.triangles().size());
    for (size_t q = 0; q < t.tetrahedra().size(); ++q) {
        int last = 0;
        for (int k = 0; k < 4; ++k) last = std::max(last, t.face_of(q, k));
        out[last].push_back(static_cast<int>(q));
    }
    return out;
}

std::vector<int> tet_choices(const OrderedTriangulation& t, const PremodularData& c, const std::vector<int>& tri, int q) {
    std::vector<int> out;
    int s0 = tri[t.face_of(q, 0)], s1 = tri[t.face_of(q, 1)], s2 = tri[t.face_of(q, 2)], s3 = tri[t.face_of(q, 3)];
    for (int x : c.products(s0, s2))
        if (c.N(s1, s3, x)) out.push_back(x);
    return out;
}

}  // namespace

void enumerate_colorings(const OrderedTriangulation& t, const PremodularData& c,
                         const std::function<bool(const CSBColoring&)>& f) {
    const int nt = static_cast<int>(t.triangles().size());
    const int nq = static_cast<int>(t.tetrahedra().size());
    auto closing = closing_tets(t);
    CSBColoring lam{std::vector<int>(nt, 0), std::vector<int>(nq, 0)};
    std::vector<std::vector<int>> choices(nq);
    bool stop = false;

    std::function<void(int)> tets = [&](int q) {
        if (stop) return;
        if (q == nq) {
            if (!f(lam)) stop = true;
            return;
        }
        for (int x : choices[q]) {
            lam.tet[q] = x;
            tets(q + 1);
            if (stop) return;
        }
    };
    std::function<void(int)> tris = [&](int s) {
        if (stop) return;
        if (s == nt) {
            for (int q = 0; q < nq; ++q) choices[q] = tet_choices(t, c, lam.tri, q);
            tets(0);
            return;
        }
        for (int x = 0; x < c.size(); ++x) {
            lam.tri[s] = x;
            bool ok = true;
            for (int q : closing[s])
                if (tet_choices(t, c, lam.tri, q).empty()) {
                    ok = false;
                    break;
                }
            if (ok) tris(s + 1);
            if (stop) return;
        }
    };
    tris(0);
}

std::uint64_t count_colorings(const OrderedTriangulation& t, const PremodularData& c, std::uint64_t limit) {
    std::uint64_t n = 0;
    enumerate_colorings(t, c, [&](const CSBColoring&) { return ++n <= limit; });
    return n;
}

PentachoronLabels pentachoron_labels(const OrderedTriangulation& t, int p, const CSBColoring& lam) {
    PentachoronLabels out;
    for (int a = 0; a < 5; ++a) {
        out.tet[a] = lam.tet[t.tet_of(p, a)];
        for (int b = a + 1; b < 5; ++b) out.tri[a][b] = out.tri[b][a] = lam.tri[t.tri_of(p, a, b)];
    }
    return out;
}

std::uint64_t budget_from_env() {
    const char* s = std::getenv("TQFT_BUDGET");
    if (!s || !*s) return kDefaultBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0') throw ParseError(std::string("TQFT_BUDGET is not a number: ") + s);
    return v;
}

CycloScalar cy_statesum(const OrderedTriangulation& t, CategoryPtr cp, const StatesumOptions& opt) {
    const PremodularData& c = *cp;
    const std::uint64_t per = t.pentachora().size() * static_cast<std::uint64_t>(c.size()) * c.size();
    const std::uint64_t max_colorings = opt.budget / per;
    std::uint64_t n = count_colorings(t, c, max_colorings);
    if (n > max_colorings) {
        // finish the count for the report, but cap the extra work
        const std::uint64_t cap = std::max<std::uint64_t>(64 * max_colorings + 64, kProjectionCap);
        std::uint64_t projected = count_colorings(t, c, cap);
        std::string more = projected > cap ? "more than " : "";
        throw Error("budget-error", "state sum needs " + more + std::to_string(projected * per) +
                                        " weighted operations (" + more + std::to_string(projected) +
                                        " colorings); budget is " + std::to_string(opt.budget));
    }

    std::vector<CSBColoring> all;
    all.reserve(n);
    enumerate_colorings(t, c, [&](const CSBColoring& l) {
        all.push_back(l);
        return true;
    });

    const int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(all.size())));
    std::vector<CycloScalar> partial(workers, CycloScalar(0));
    auto work = [&](int w) {
        Evaluator ev(cp);
        std::map<std::vector<int>, CycloScalar> memo;
        CycloScalar acc(0);
        for (size_t i = w; i < all.size(); i += workers) {
            const CSBColoring& lam = all[i];
            CycloScalar term(1);
            for (int x : lam.tri) term *= c.d(x);
            for (int x : lam.tet) term *= opt.normalization == Normalization::Dual ? c.d(x) : c.d_inv(x);
            for (size_t p = 0; p < t.pentachora().size() && !term.is_zero(); ++p) {
                PentachoronLabels pl = pentachoron_labels(t, static_cast<int>(p), lam);
                int sign = t.pentachora()[p].sign;
                std::vector<int> key{sign};
                for (int a = 0; a < 5; ++a)
                    for (int b = a + 1; b < 5; ++b) key.push_back(pl.tri[a][b]);
                key.insert(key.end(), pl.tet.begin(), pl.tet.end());
                auto it = memo.find(key);
                if (it == memo.end()) it = memo.emplace(key, fifteen_j(pl, sign, ev, opt.gauge)).first;
                term *= it->second;
                if (opt.normalization == Normalization::Cky)
                    for (int x : pl.tet) term *= c.d(x);
            }
            acc += term;
        }
        partial[w] = acc;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    CycloScalar total(0);
    for (const auto& s : partial) total += s;
    return total * c.global_dim().pow(t.vertex_count() - t.edge_count());
}

}  // namespace tqft
