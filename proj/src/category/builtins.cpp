#include <functional>
#include <map>
#include <mutex>

#include "tqft/category/premodular.hpp"
#include "tqft/errors.hpp"

namespace tqft {

namespace {

using Z = CycloScalar;

// Admissible triples from a predicate; the unit rows are added by finalize().
void fill_fusion(PremodularData& c, const std::function<bool(int, int, int)>& ok) {
    int n = c.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                if (ok(a, b, k)) c.fusion.push_back({a, b, k});
}

// Picks kappa = zeta_N^m with kappa^2 p_- = p_+, preferring the root for which
// p_+ / kappa has positive real part (so sqrtD is the positive root when the
// category is modular). sqrtD is only derived here when p_+ p_- = D.
void attach_anomaly(PremodularData& c) {
    Z pp(0), pm(0), D(0);
    for (int a = 0; a < c.size(); ++a) {
        Z d2 = c.qdim[a] * c.qdim[a];
        pp += c.twist[a] * d2;
        pm += c.twist[a].inverse() * d2;
        D += d2;
    }
    int N = c.root_order;
    for (int m = 0; m < N; ++m) {
        Z k = Z::zeta(N, m);
        if (k * k * pm != pp) continue;
        if ((pp / k).to_complex().real() <= 0) continue;
        c.kappa = k;
        if (pp * pm == D) c.sqrtD = pp / k;
        return;
    }
}

void attach_pointed_sqrt(PremodularData& c) {
    for (const auto& d : c.qdim)
        if (!d.is_one()) return;
    c.sqrt_qdim = std::vector<Z>(c.size(), Z(1));
}

PremodularData make_trivial() {
    PremodularData c;
    c.name = "trivial";
    c.root_order = 1;
    c.labels = {"1"};
    c.dual = {0};
    c.qdim = {Z(1)};
    c.twist = {Z(1)};
    c.kappa = Z(1);
    c.sqrtD = Z(1);
    c.sqrt_qdim = std::vector<Z>{Z(1)};
    return c;
}

// Z/2 fusion rules with F^{sss}_s = f, R^{ss}_1 = r, theta_s = t.
PremodularData make_z2(const std::string& name, int N, Z f, Z r, Z t) {
    PremodularData c;
    c.name = name;
    c.root_order = N;
    c.labels = {"1", "s"};
    c.dual = {0, 1};
    fill_fusion(c, [](int a, int b, int k) { return (a ^ b) == k; });
    c.qdim = {Z(1), Z(1)};
    c.twist = {Z(1), t};
    c.F[{1, 1, 1, 1, 0, 0}] = f;
    c.R[{1, 1, 0}] = r;
    return c;
}

PremodularData make_fibonacci() {
    PremodularData c;
    c.name = "fibonacci";
    c.root_order = 20;
    c.labels = {"1", "tau"};
    c.dual = {0, 1};
    fill_fusion(c, [](int a, int b, int k) {
        if (a == 0) return b == k;
        if (b == 0) return a == k;
        return true;  // tau tau -> 1 + tau
    });
    Z z = Z::zeta(20, 1);
    Z phi = Z(1) + z.pow(4) + z.pow(16);
    Z phinv = phi - Z(1);
    c.qdim = {Z(1), phi};
    c.twist = {Z(1), z.pow(8)};
    // sqrt-free gauge of the usual unitary solution
    c.F[{1, 1, 1, 1, 0, 0}] = phinv;
    c.F[{1, 1, 1, 1, 0, 1}] = Z(1);
    c.F[{1, 1, 1, 1, 1, 0}] = phinv;
    c.F[{1, 1, 1, 1, 1, 1}] = -phinv;
    c.F[{1, 1, 1, 0, 1, 1}] = Z(1);
    c.R[{1, 1, 0}] = z.pow(12);
    c.R[{1, 1, 1}] = z.pow(6);
    return c;
}

PremodularData make_ising() {
    PremodularData c;
    c.name = "ising";
    c.root_order = 16;
    c.labels = {"1", "sigma", "psi"};
    c.dual = {0, 1, 2};
    const int s = 1, p = 2;
    fill_fusion(c, [&](int a, int b, int k) {
        if (a == 0) return b == k;
        if (b == 0) return a == k;
        if (a == s && b == s) return k == 0 || k == p;
        if (a == p && b == p) return k == 0;
        return k == s;  // sigma psi = psi sigma = sigma
    });
    Z z = Z::zeta(16, 1);
    Z r2 = z.pow(2) + z.pow(14);
    c.qdim = {Z(1), r2, Z(1)};
    c.twist = {Z(1), z, Z(-1)};
    Z h = r2.inverse();
    // every admissible F entry with non-unit a,b,c is 1 except the three below
    for (int a : {s, p})
        for (int b : {s, p})
            for (int cc : {s, p})
                for (int d = 0; d < 3; ++d)
                    for (int e = 0; e < 3; ++e)
                        for (int f = 0; f < 3; ++f) {
                            auto in = [&](int x, int y, int k) {
                                if (x == 0) return y == k;
                                if (y == 0) return x == k;
                                if (x == s && y == s) return k == 0 || k == p;
                                if (x == p && y == p) return k == 0;
                                return k == s;
                            };
                            if (in(a, b, e) && in(e, cc, d) && in(b, cc, f) && in(a, f, d)) c.F[{a, b, cc, d, e, f}] = Z(1);
                        }
    c.F[{s, s, s, s, 0, 0}] = h;
    c.F[{s, s, s, s, 0, p}] = h;
    c.F[{s, s, s, s, p, 0}] = h;
    c.F[{s, s, s, s, p, p}] = -h;
    c.F[{s, p, s, p, s, s}] = Z(-1);
    c.F[{p, s, p, s, s, s}] = Z(-1);
    c.R[{s, s, 0}] = z.pow(15);
    c.R[{s, s, p}] = z.pow(3);
    c.R[{s, p, s}] = z.pow(12);
    c.R[{p, s, s}] = z.pow(12);
    c.R[{p, p, 0}] = Z(-1);
    return c;
}

// SU(2)_k at q = exp(pi i/(k+2)). Labels are twice-spins 0..k. The 6j symbols
// are the Kirillov-Reshetikhin ones moved to a gauge free of square roots:
// F^{abc}_d[e,f] = (-1)^{a+b+c+d} [2f+1] Delta(a,d,f)^2 Delta(b,c,f)^2 * Racah sum.
PremodularData make_su2(int k) {
    PremodularData c;
    c.name = "su2_" + std::to_string(k);
    const int h = k + 2;
    c.root_order = 8 * h;
    const int N = c.root_order;
    for (int t = 0; t <= k; ++t) c.labels.push_back(t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2");
    c.dual.resize(k + 1);
    for (int t = 0; t <= k; ++t) c.dual[t] = t;
    auto adm = [k](int a, int b, int e) {
        return e >= std::abs(a - b) && e <= a + b && (a + b + e) % 2 == 0 && a + b + e <= 2 * k;
    };
    fill_fusion(c, adm);

    // w = zeta_{4h}, q = w^2
    Z w = Z::zeta(N, 2);
    Z q = w * w, qi = q.inverse();
    Z qden = (q - qi).inverse();
    std::vector<Z> qint(2 * k + 4), qfact(2 * k + 4);
    qfact[0] = Z(1);
    for (int n = 0; n < static_cast<int>(qint.size()); ++n) {
        qint[n] = (q.pow(n) - qi.pow(n)) * qden;
        if (n > 0) qfact[n] = qfact[n - 1] * qint[n];
    }
    // arguments below are twice-spins; all the sums that appear are even
    auto fact = [&](int twice) -> const Z& { return qfact.at(twice / 2); };
    auto delta2 = [&](int a, int b, int e) { return fact(a + b - e) * fact(a - b + e) * fact(-a + b + e) / fact(a + b + e + 2); };
    auto sgn = [](int twice) { return (twice / 2) % 2 == 0 ? 1 : -1; };

    for (int t = 0; t <= k; ++t) {
        c.qdim.push_back(qint[t + 1]);
        c.twist.push_back(w.pow(t * (t + 2)));  // q^{2j(j+1)}
    }
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int e = 0; e <= k; ++e) {
                if (!adm(a, b, e)) continue;
                int ex = e * (e + 2) - a * (a + 2) - b * (b + 2);  // 4 (j(j+1) - ...)
                // q^{ex/4} = w^{ex/2}
                Z r = w.pow(ex / 2);
                if (sgn(e - a - b) < 0) r = -r;
                c.R[{a, b, e}] = r;
            }
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            for (int cc = 1; cc <= k; ++cc)
                for (int d = 0; d <= k; ++d)
                    for (int e = 0; e <= k; ++e) {
                        if (!adm(a, b, e) || !adm(e, cc, d)) continue;
                        for (int f = 0; f <= k; ++f) {
                            if (!adm(b, cc, f) || !adm(a, f, d)) continue;
                            int lo = std::max({a + b + e, cc + d + e, a + d + f, b + cc + f});
                            int hi = std::min({a + b + cc + d, a + cc + e + f, b + d + e + f});
                            Z sum(0);
                            for (int z2 = lo; z2 <= hi; z2 += 2) {
                                Z term = fact(z2 + 2) / (fact(z2 - a - b - e) * fact(z2 - cc - d - e) * fact(z2 - a - d - f) *
                                                         fact(z2 - b - cc - f) * fact(a + b + cc + d - z2) *
                                                         fact(a + cc + e + f - z2) * fact(b + d + e + f - z2));
                                sum += sgn(z2) > 0 ? term : -term;
                            }
                            Z val = qint[f + 1] * delta2(a, d, f) * delta2(b, cc, f) * sum;
                            if (sgn(a + b + cc + d) < 0) val = -val;
                            c.F[{a, b, cc, d, e, f}] = val;
                        }
                    }
    return c;
}

PremodularData make(const std::string& name) {
    PremodularData c;
    if (name == "trivial") return make_trivial();
    if (name == "semion") {
        c = make_z2("semion", 8, Z(-1), Z::zeta(8, 2), Z::zeta(8, 2));
    } else if (name == "repZ2") {
        c = make_z2("repZ2", 8, Z(1), Z(1), Z(1));
        c.kappa = Z(1);
        c.sqrtD = Z::zeta(8, 1) - Z::zeta(8, 3);
    } else if (name == "fibonacci") {
        c = make_fibonacci();
    } else if (name == "ising") {
        c = make_ising();
    } else if (name.rfind("su2_", 0) == 0 && name.size() == 5 && name[4] >= '1' && name[4] <= '4') {
        c = make_su2(name[4] - '0');
    } else {
        throw Error("catalog-miss", "no built-in category named '" + name + "'");
    }
    if (!c.kappa) attach_anomaly(c);
    attach_pointed_sqrt(c);
    return c;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"trivial", "semion", "repZ2", "fibonacci", "ising", "su2_1", "su2_2", "su2_3", "su2_4"};
}

CategoryPtr builtin(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, CategoryPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    auto c = std::make_shared<PremodularData>(make(name));
    c->finalize();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(name, c).first->second;
}

}  // namespace tqft
