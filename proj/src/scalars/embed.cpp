#include "tqft/scalars/embed.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

std::string mpfr_fixed(mpfr_t x, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    if (s.size() > 1 && s[0] == '-') {
        bool allzero = true;
        for (char c : s.substr(1))
            if (c != '0' && c != '.') allzero = false;
        if (allzero) s = s.substr(1);
    }
    return s;
}

std::string double_fixed(double v, int digits) {
    std::vector<char> buf(64 + digits);
    std::snprintf(buf.data(), buf.size(), "%.*f", digits, v);
    return buf.data();
}

}  // namespace

ComplexApprox embed_complex(const CycloScalar& a, int digits) {
    if (digits < 1) throw Error("invalid-digits", "digits must be at least 1");
    ComplexApprox out;
    if (!a.is_exact()) {
        auto z = a.to_complex();
        out.re = double_fixed(z.real(), digits);
        out.im = double_fixed(z.imag(), digits);
        out.radius = inexact_tolerance();
        return out;
    }
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219281) + 40);
    mpfr_t re, im, pi2, ang, c, s, q;
    mpfr_inits2(prec, re, im, pi2, ang, c, s, q, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
    auto coeffs = a.coeffs();
    int N = a.root_order();
    double abs_sum = 1.0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        abs_sum += std::abs(coeffs[i].get_d());
        mpfr_mul_ui(ang, pi2, i, MPFR_RNDN);
        mpfr_div_ui(ang, ang, N, MPFR_RNDN);
        mpfr_sin_cos(s, c, ang, MPFR_RNDN);
        mpfr_set_q(q, coeffs[i].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(c, c, q, MPFR_RNDN);
        mpfr_mul(s, s, q, MPFR_RNDN);
        mpfr_add(re, re, c, MPFR_RNDN);
        mpfr_add(im, im, s, MPFR_RNDN);
    }
    out.re = mpfr_fixed(re, digits);
    out.im = mpfr_fixed(im, digits);
    // arithmetic error plus the rounding of the printed value
    out.radius = abs_sum * std::ldexp(1.0, -static_cast<int>(prec) + 8) + 0.5 * std::pow(10.0, -digits);
    mpfr_clears(re, im, pi2, ang, c, s, q, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::string format_complex(const CycloScalar& a, int digits) {
    ComplexApprox z = embed_complex(a, digits);
    std::string im = z.im;
    if (!im.empty() && im[0] == '-') return z.re + "-" + im.substr(1) + "i";
    return z.re + "+" + im + "i";
}

}  // namespace tqft
