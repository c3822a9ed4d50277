#pragma once

#include <string>

#include "tqft/scalars/cyclo.hpp"

namespace tqft {

// Value under zeta_N -> exp(2 pi i / N), as decimal strings with `digits`
// significant digits after the point, plus a bound on the absolute error of
// each component.
struct ComplexApprox {
    std::string re;
    std::string im;
    double radius = 0.0;
};

ComplexApprox embed_complex(const CycloScalar& a, int digits);

// "a+bi" display form.
std::string format_complex(const CycloScalar& a, int digits);

}  // namespace tqft
