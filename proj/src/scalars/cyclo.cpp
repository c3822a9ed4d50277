#include "tqft/scalars/cyclo.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

struct FieldData : CycloField {
    // xpow[m] = x^m mod Phi_N for 0 <= m < N, as coefficient vectors of length phi.
    std::vector<std::vector<long>> xpow;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // Both monic with integer coefficients.
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
        long c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    return q;
}

std::vector<long> cyclotomic_poly(int N, std::map<int, std::vector<long>>& memo) {
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    std::vector<long> p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d, memo));
    memo[N] = p;
    return p;
}

std::unique_ptr<FieldData> build_field(int N) {
    static std::map<int, std::vector<long>> memo;  // guarded by caller's mutex
    auto f = std::make_unique<FieldData>();
    f->N = N;
    f->poly = cyclotomic_poly(N, memo);
    f->phi = static_cast<int>(f->poly.size()) - 1;
    f->xpow.assign(N, std::vector<long>(f->phi, 0));
    std::vector<long> cur(f->phi, 0);
    cur[0] = 1;
    for (int m = 0; m < N; ++m) {
        f->xpow[m] = cur;
        // multiply by x and reduce
        std::vector<long> nxt(f->phi, 0);
        long top = cur[f->phi - 1];
        for (int i = f->phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        nxt[0] = 0;
        if (top != 0)
            for (int j = 0; j < f->phi; ++j) nxt[j] -= top * f->poly[j];
        cur = nxt;
    }
    return f;
}

std::mutex g_field_mutex;
std::map<int, std::unique_ptr<FieldData>> g_fields;

const FieldData* field_data(int N) {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields.find(N);
    if (it != g_fields.end()) return it->second.get();
    auto f = build_field(N);
    const FieldData* p = f.get();
    g_fields.emplace(N, std::move(f));
    return p;
}

const FieldData* data_of(const CycloField* f) { return static_cast<const FieldData*>(f); }

std::atomic<double> g_tol{1e-9};

void add_scaled(mpz_class& acc, const mpz_class& c, long s) {
    if (s > 0)
        mpz_addmul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s));
    else if (s < 0)
        mpz_submul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-s));
}

}  // namespace

const CycloField* cyclo_field(int N) {
    if (N < 1) throw Error("invalid-root-order", "root order must be positive, got " + std::to_string(N));
    return field_data(N);
}

double inexact_tolerance() { return g_tol.load(); }
void set_inexact_tolerance(double tol) { g_tol.store(tol); }

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

CycloScalar::CycloScalar() : f_(cyclo_field(1)), num_(1, 0), den_(1) {}

CycloScalar::CycloScalar(long v) : f_(cyclo_field(1)), num_(1, v), den_(1) {}

CycloScalar CycloScalar::rational(const mpq_class& q) {
    CycloScalar s;
    mpq_class c = q;
    c.canonicalize();
    s.num_[0] = c.get_num();
    s.den_ = c.get_den();
    return s;
}

CycloScalar CycloScalar::zeta(int N, long k) {
    CycloScalar s;
    s.f_ = cyclo_field(N);
    long m = ((k % N) + N) % N;
    const auto& xp = data_of(s.f_)->xpow[m];
    s.num_.assign(xp.begin(), xp.end());
    s.den_ = 1;
    return s;
}

CycloScalar CycloScalar::normalize(const std::vector<mpq_class>& raw, int N) {
    const CycloField* f = cyclo_field(N);
    if (static_cast<int>(raw.size()) > N)
        throw Error("invalid-coefficients", "more coefficients than the root order");
    mpz_class den = 1;
    for (const auto& c : raw) {
        mpq_class t = c;
        t.canonicalize();
        den = lcm(den, mpz_class(t.get_den()));
    }
    CycloScalar s;
    s.f_ = f;
    s.num_.assign(f->phi, 0);
    s.den_ = den;
    const auto& xp = data_of(f)->xpow;
    for (size_t i = 0; i < raw.size(); ++i) {
        mpq_class t = raw[i];
        t.canonicalize();
        mpz_class c = t.get_num() * (den / t.get_den());
        if (c == 0) continue;
        for (int j = 0; j < f->phi; ++j) add_scaled(s.num_[j], c, xp[i][j]);
    }
    s.canon();
    return s;
}

CycloScalar CycloScalar::approx(std::complex<double> z) {
    CycloScalar s;
    s.exact_ = false;
    s.z_ = z;
    return s;
}

void CycloScalar::canon() {
    if (!exact_) return;
    mpz_class g = den_;
    bool allzero = true;
    for (const auto& c : num_) {
        if (c == 0) continue;
        allzero = false;
        if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (allzero) {
        den_ = 1;
        for (auto& c : num_) c = 0;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

bool CycloScalar::is_zero() const {
    if (!exact_) return std::abs(z_) <= inexact_tolerance();
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (!exact_) return std::abs(z_ - 1.0) <= inexact_tolerance();
    if (den_ != 1 || num_[0] != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    if (!exact_) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

mpq_class CycloScalar::rational_value() const {
    if (!is_rational()) throw Error("not-rational", "scalar is not rational");
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> CycloScalar::coeffs() const {
    if (!exact_) throw Error("inexact-scalar", "coefficients requested from an approximate scalar");
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        mpq_class q(c, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

CycloScalar CycloScalar::promote(int M) const {
    if (!exact_ || M == f_->N) return *this;
    if (M % f_->N != 0) throw Error("invalid-root-order", "cannot promote to a non-multiple root order");
    const CycloField* g = cyclo_field(M);
    const auto& xp = data_of(g)->xpow;
    int step = M / f_->N;
    CycloScalar s;
    s.f_ = g;
    s.num_.assign(g->phi, 0);
    s.den_ = den_;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& v = xp[(i * step) % M];
        for (int j = 0; j < g->phi; ++j) add_scaled(s.num_[j], num_[i], v[j]);
    }
    s.canon();
    return s;
}

CycloScalar CycloScalar::galois(long k) const {
    if (!exact_) {
        // only the identity and complex conjugation make sense here
        if (k == 1) return *this;
        if (k == -1) return approx(std::conj(z_));
        throw Error("invalid-galois", "approximate scalars support conjugation only");
    }
    int N = f_->N;
    long kk = ((k % N) + N) % N;
    if (N > 1 && std::gcd(kk, static_cast<long>(N)) != 1)
        throw Error("invalid-galois", "exponent not coprime to root order");
    const auto& xp = data_of(f_)->xpow;
    CycloScalar s;
    s.f_ = f_;
    s.num_.assign(f_->phi, 0);
    s.den_ = den_;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& v = xp[(i * kk) % N];
        for (int j = 0; j < f_->phi; ++j) add_scaled(s.num_[j], num_[i], v[j]);
    }
    s.canon();
    return s;
}

void CycloScalar::align(CycloScalar& a, CycloScalar& b) {
    if (a.f_ == b.f_) return;
    long M = std::lcm(static_cast<long>(a.f_->N), static_cast<long>(b.f_->N));
    a = a.promote(static_cast<int>(M));
    b = b.promote(static_cast<int>(M));
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    if (!exact_ || !o.exact_) {
        *this = approx(to_complex() + o.to_complex());
        return *this;
    }
    if (o.f_ != f_) {
        CycloScalar b = o;
        align(*this, b);
        return *this += b;
    }
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= o.den_;
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= o.den_;
    }
    canon();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar CycloScalar::operator-() const {
    CycloScalar s = *this;
    if (!exact_) {
        s.z_ = -z_;
        return s;
    }
    for (auto& c : s.num_) c = -c;
    return s;
}

void CycloScalar::reduce_poly(std::vector<mpz_class>& p) const {
    int phi = f_->phi;
    for (int k = static_cast<int>(p.size()) - 1; k >= phi; --k) {
        if (p[k] == 0) continue;
        for (int j = 0; j < phi; ++j) add_scaled(p[k - phi + j], p[k], -f_->poly[j]);
        p[k] = 0;
    }
    p.resize(phi);
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    if (!exact_ || !o.exact_) {
        *this = approx(to_complex() * o.to_complex());
        return *this;
    }
    if (o.f_ != f_) {
        if (o.f_->N == 1) {
            for (auto& c : num_) c *= o.num_[0];
            den_ *= o.den_;
            canon();
            return *this;
        }
        if (f_->N == 1) {
            CycloScalar r = o;
            r *= *this;
            return *this = r;
        }
        CycloScalar b = o;
        align(*this, b);
        return *this *= b;
    }
    int phi = f_->phi;
    if (phi == 1) {
        num_[0] *= o.num_[0];
        den_ *= o.den_;
        canon();
        return *this;
    }
    std::vector<mpz_class> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.num_[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
        }
    }
    reduce_poly(prod);
    num_ = std::move(prod);
    den_ *= o.den_;
    canon();
    return *this;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw Error("div-by-zero", "inverse of zero");
    if (!exact_) return approx(1.0 / z_);
    if (is_rational()) {
        CycloScalar s = *this;
        std::swap(s.num_[0], s.den_);
        if (s.den_ < 0) {
            s.den_ = -s.den_;
            s.num_[0] = -s.num_[0];
        }
        return s;
    }
    // a^{-1} = (prod of the nontrivial conjugates) / norm(a)
    int N = f_->N;
    CycloScalar others(1);
    for (long k = 2; k < N; ++k)
        if (std::gcd(k, static_cast<long>(N)) == 1) others *= galois(k);
    CycloScalar norm = *this * others;
    if (!norm.is_rational()) throw Error("internal", "norm is not rational");
    return others * norm.inverse();
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (!a.exact_ || !b.exact_) return std::abs(a.to_complex() - b.to_complex()) <= inexact_tolerance();
    if (a.f_ == b.f_) return a.den_ == b.den_ && a.num_ == b.num_;
    CycloScalar x = a, y = b;
    CycloScalar::align(x, y);
    return x.den_ == y.den_ && x.num_ == y.num_;
}

std::complex<double> CycloScalar::to_complex() const {
    if (!exact_) return z_;
    double re = 0, im = 0;
    double d = den_.get_d();
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / f_->N;
        double c = num_[i].get_d() / d;
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {re, im};
}

std::string CycloScalar::to_string() const {
    std::ostringstream os;
    if (!exact_) {
        os << "~(" << z_.real() << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i)";
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpq_class q(num_[i], den_);
        q.canonicalize();
        bool neg = q < 0;
        if (neg) q = -q;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0)
            os << q.get_str();
        else {
            if (q != 1) os << q.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    if (!is_rational()) os << " (z = zeta_" << f_->N << ")";
    return os.str();
}

}  // namespace tqft
