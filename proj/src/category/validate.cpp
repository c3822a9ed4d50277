#include "tqft/category/validate.hpp"

#include <set>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

class Checker {
public:
    Checker(const PremodularData& c, size_t cap) : c_(c), cap_(cap) {}

    bool full() const { return rep.failures.size() >= cap_; }

    void expect(const char* axiom, std::initializer_list<int> w, const CycloScalar& lhs, const CycloScalar& rhs) {
        if (lhs == rhs || full()) return;
        AxiomFailure f{axiom, {}, lhs, rhs};
        for (int x : w) f.witness.push_back(x >= 0 && x < c_.size() ? c_.labels[x] : std::to_string(x));
        rep.failures.push_back(std::move(f));
    }

    void note(const char* axiom, const std::string& what) {
        if (full()) return;
        rep.failures.push_back({axiom, {what}, CycloScalar(0), CycloScalar(0)});
    }

    ValidationReport rep;

private:
    const PremodularData& c_;
    size_t cap_;
};

// Checks on the raw fields that finalize() would either reject or silently
// normalize (unit rows, explicit unit entries).
void check_raw(const PremodularData& c, Checker& ck) {
    int n = c.size();
    std::set<std::array<int, 3>> seen;
    for (const auto& t : c.fusion)
        if (!seen.insert(t).second)
            ck.note("multiplicity-free", "fusion triple listed twice: N > 1 is not supported");
    if (n > 0 && static_cast<int>(c.dual.size()) == n) {
        if (c.dual[0] != 0) ck.note("duality", "the unit must be self-dual");
        for (int i = 0; i < n; ++i)
            if (c.dual[i] >= 0 && c.dual[i] < n && c.dual[c.dual[i]] != i) ck.note("duality", "dual is not an involution at " + c.labels[i]);
    }
    if (!c.qdim.empty()) ck.expect("unit-dimension", {0}, c.qdim[0], CycloScalar(1));
    if (!c.twist.empty()) ck.expect("unit-twist", {0}, c.twist[0], CycloScalar(1));
    for (const auto& [k, v] : c.F)
        if (k[0] == 0 || k[1] == 0 || k[2] == 0) ck.expect("unit-F", {k[0], k[1], k[2], k[3], k[4], k[5]}, v, CycloScalar(1));
    for (const auto& [k, v] : c.R)
        if (k[0] == 0 || k[1] == 0) ck.expect("unit-R", {k[0], k[1], k[2]}, v, CycloScalar(1));
}

void check_fusion(const PremodularData& c, Checker& ck) {
    int n = c.size();
    for (int a = 0; a < n; ++a) {
        ck.expect("dual-dimension", {a}, c.d(a), c.d(c.dual[a]));
        ck.expect("dual-twist", {a}, c.theta(a), c.theta(c.dual[a]));
        for (int b = 0; b < n; ++b) {
            if (c.N(a, b, 0) != (b == c.dual[a])) ck.note("duality", "unit channel of " + c.labels[a] + " x " + c.labels[b]);
            CycloScalar sum(0);
            for (int k : c.products(a, b)) {
                sum += c.d(k);
                if (!c.N(b, a, k)) ck.note("commutativity", c.labels[a] + " x " + c.labels[b] + " -> " + c.labels[k]);
            }
            ck.expect("dimension", {a, b}, c.d(a) * c.d(b), sum);
        }
    }
    for (const auto& [k, v] : c.F)
        if (!(c.N(k[0], k[1], k[4]) && c.N(k[4], k[2], k[3]) && c.N(k[1], k[2], k[5]) && c.N(k[0], k[5], k[3])))
            ck.note("admissibility", "F entry on an inadmissible tuple");
    for (const auto& [k, v] : c.R)
        if (!c.N(k[0], k[1], k[2])) ck.note("admissibility", "R entry on an inadmissible tuple");
}

// F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
void check_pentagon(const PremodularData& c, Checker& ck) {
    int n = c.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        if (ck.full()) return;
                        for (int f : c.products(a, b))
                            for (int g : c.products(f, cc)) {
                                if (!c.N(g, d, e)) continue;
                                for (int l : c.products(cc, d)) {
                                    if (!c.N(f, l, e)) continue;
                                    for (int k : c.products(b, l)) {
                                        if (!c.N(a, k, e)) continue;
                                        CycloScalar lhs = c.f_symbol(f, cc, d, e, g, l) * c.f_symbol(a, b, l, e, f, k);
                                        CycloScalar rhs(0);
                                        for (int h : c.products(b, cc))
                                            rhs += c.f_symbol(a, b, cc, g, f, h) * c.f_symbol(a, h, d, e, g, k) *
                                                   c.f_symbol(b, cc, d, k, h, l);
                                        ck.expect("pentagon", {a, b, cc, d, e, f, g, k, l}, lhs, rhs);
                                    }
                                }
                            }
                    }
}

CycloScalar finv(const PremodularData& c, int a, int b, int cc, int d, int f, int e) {
    const FBlock* blk = c.fblock(a, b, cc, d);
    if (!blk || blk->col_of[f] < 0 || blk->row_of[e] < 0) return CycloScalar(0);
    return blk->Finv[blk->col_of[f]][blk->row_of[e]];
}

// R^{af}_d F^{bca}_d[f,g] = sum_e (F^{abc}_d)^{-1}[f,e] R^{ab}_e F^{bac}_d[e,g] R^{ac}_g, and the
// same with every R^{xy} replaced by (R^{yx})^{-1}.
void check_hexagons(const PremodularData& c, Checker& ck) {
    int n = c.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int d = 0; d < n; ++d) {
                    if (ck.full()) return;
                    for (int f : c.products(b, cc)) {
                        if (!c.N(a, f, d)) continue;
                        for (int g : c.products(cc, a)) {
                            if (!c.N(b, g, d)) continue;
                            CycloScalar fl = c.f_symbol(b, cc, a, d, f, g);
                            CycloScalar l1 = c.r_symbol(a, f, d) * fl;
                            CycloScalar l2 = c.r_inverse(f, a, d) * fl;
                            CycloScalar r1(0), r2(0);
                            for (int e : c.products(a, b)) {
                                if (!c.N(e, cc, d)) continue;
                                CycloScalar common = finv(c, a, b, cc, d, f, e) * c.f_symbol(b, a, cc, d, e, g);
                                if (common.is_zero()) continue;
                                r1 += common * c.r_symbol(a, b, e) * c.r_symbol(a, cc, g);
                                r2 += common * c.r_inverse(b, a, e) * c.r_inverse(cc, a, g);
                            }
                            ck.expect("hexagon-1", {a, b, cc, d, f, g}, l1, r1);
                            ck.expect("hexagon-2", {a, b, cc, d, f, g}, l2, r2);
                        }
                    }
                }
}

void check_ribbon(const PremodularData& c, Checker& ck) {
    int n = c.size();
    for (int a = 0; a < n; ++a) {
        CycloScalar tr(0);
        for (int k : c.products(a, a)) tr += c.d(k) * c.r_symbol(a, a, k);
        ck.expect("ribbon-trace", {a}, c.theta(a) * c.d(a), tr);
        ck.expect("pivotal", {a}, c.epsilon(a) * c.epsilon(c.dual[a]), CycloScalar(1));
        for (int b = 0; b < n; ++b)
            for (int k : c.products(a, b))
                ck.expect("balancing", {a, b, k}, c.r_symbol(a, b, k) * c.r_symbol(b, a, k),
                          c.theta(k) * c.theta_inv(a) * c.theta_inv(b));
    }
}

void check_roots(const PremodularData& c, Checker& ck) {
    if (c.sqrt_qdim)
        for (int a = 0; a < c.size(); ++a) ck.expect("sqrt-qdim", {a}, (*c.sqrt_qdim)[a] * (*c.sqrt_qdim)[a], c.d(a));
    if (c.sqrtD) ck.expect("sqrt-D", {}, *c.sqrtD * *c.sqrtD, c.global_dim());
    if (c.kappa) {
        ck.expect("kappa", {}, *c.kappa * *c.kappa * c.p_minus(), c.p_plus());
        // kappa sqrtD = p_+ is forced only when p_+ p_- = D (the modular case)
        if (c.sqrtD && c.p_plus() * c.p_minus() == c.global_dim())
            ck.expect("kappa-sqrtD", {}, *c.kappa * *c.sqrtD, c.p_plus());
    }
}

}  // namespace

ValidationReport validate(const PremodularData& raw, size_t max_failures) {
    Checker ck(raw, max_failures);
    check_raw(raw, ck);
    PremodularData c = raw;
    try {
        c.finalize();
    } catch (const Error& e) {
        ck.note("structure", e.what());
        ck.rep.passed = false;
        return ck.rep;
    }
    check_fusion(c, ck);
    check_ribbon(c, ck);
    check_roots(c, ck);
    check_hexagons(c, ck);
    check_pentagon(c, ck);
    ck.rep.passed = ck.rep.failures.empty();
    return ck.rep;
}

}  // namespace tqft
