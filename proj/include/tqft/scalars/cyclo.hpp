#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace tqft {

// Arithmetic data for Q(zeta_N): the cyclotomic polynomial and its degree.
struct CycloField {
    int N = 1;
    int phi = 1;
    std::vector<long> poly;  // monic Phi_N, poly[i] = coefficient of x^i, size phi+1
};

// Shared, lazily built field descriptors. Thread-safe.
const CycloField* cyclo_field(int N);

// Element of Q(zeta_N) in the power basis reduced modulo Phi_N, stored as an
// integer numerator vector over one positive common denominator. A second,
// approximate representation (complex double) is used for categories whose
// data is only known numerically; approximate values compare with a tolerance.
class CycloScalar {
public:
    CycloScalar();
    CycloScalar(long v);  // NOLINT: implicit from integers is intended
    static CycloScalar rational(const mpq_class& q);
    static CycloScalar zeta(int N, long k);
    static CycloScalar normalize(const std::vector<mpq_class>& raw, int N);
    static CycloScalar approx(std::complex<double> z);

    int root_order() const { return f_->N; }
    bool is_exact() const { return exact_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()
    std::vector<mpq_class> coeffs() const;

    CycloScalar promote(int M) const;  // requires root_order() | M
    CycloScalar galois(long k) const;  // zeta -> zeta^k, gcd(k, N) = 1
    CycloScalar conj() const { return galois(-1); }
    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator/=(const CycloScalar& o);
    CycloScalar operator-() const;

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    // Readable form, e.g. "1/2 + 3*z^2 - z^5 (z = zeta_20)".
    std::string to_string() const;

private:
    void canon();
    void reduce_poly(std::vector<mpz_class>& p) const;
    static void align(CycloScalar& a, CycloScalar& b);

    const CycloField* f_;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
    bool exact_ = true;
    std::complex<double> z_{};
};

// Absolute tolerance used when comparing approximate scalars.
double inexact_tolerance();
void set_inexact_tolerance(double tol);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace tqft
