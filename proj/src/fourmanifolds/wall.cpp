#include "tqft/fourmanifolds/wall.hpp"

#include "tqft/errors.hpp"
#include "tqft/scalars/linalg.hpp"

namespace tqft {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error("invalid-lagrangian", what); }

IntMatrix int_matrix(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_array()) throw ParseError(std::string("triple needs matrix '") + name + "'");
    IntMatrix m;
    for (const auto& row : j[name]) {
        if (!row.is_array()) throw ParseError(std::string("matrix '") + name + "' must be a list of rows");
        std::vector<long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ParseError(std::string("matrix '") + name + "' must be integral");
            r.push_back(x.get<long>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

long form(const IntMatrix& w, const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) s += x[i] * w[i][j] * y[j];
    return s;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix q(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long x : m[i]) q[i].push_back(mpq_class(x));
    return q;
}

mpq_class qform(const IntMatrix& w, const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
    mpq_class s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            if (w[i][j] != 0) s += x[i] * w[i][j] * y[j];
    return s;
}

}  // namespace

LagrangianTriple lagrangian_triple_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("Lagrangian triple must be an object");
    return {int_matrix(j, "omega"), int_matrix(j, "L1"), int_matrix(j, "L2"), int_matrix(j, "L3")};
}

void check_lagrangian_triple(const LagrangianTriple& t) {
    size_t n = t.omega.size();
    if (n == 0 || n % 2 != 0) invalid("omega must be a nonempty 2g x 2g matrix");
    for (const auto& row : t.omega)
        if (row.size() != n) invalid("omega is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (t.omega[i][j] != -t.omega[j][i]) invalid("omega is not skew-symmetric");
    if (rational_rank(to_rational(t.omega)) != n) invalid("omega is degenerate");
    size_t g = n / 2;
    for (const auto* L : {&t.L1, &t.L2, &t.L3}) {
        if (L->size() != g) invalid("each Lagrangian needs g rows");
        for (const auto& row : *L)
            if (row.size() != n) invalid("Lagrangian rows must have length 2g");
        if (rational_rank(to_rational(*L)) != g) invalid("Lagrangian rows are not independent");
        for (const auto& x : *L)
            for (const auto& y : *L)
                if (form(t.omega, x, y) != 0) invalid("subspace is not isotropic");
    }
}

int wall_index(const LagrangianTriple& t) {
    check_lagrangian_triple(t);
    size_t n = t.omega.size(), g = n / 2;
    // (a, b, c) with a L1 + b L2 + c L3 = 0: the null space of the transpose
    RationalMatrix mt(n, std::vector<mpq_class>(3 * g));
    const IntMatrix* Ls[3] = {&t.L1, &t.L2, &t.L3};
    for (size_t blk = 0; blk < 3; ++blk)
        for (size_t r = 0; r < g; ++r)
            for (size_t col = 0; col < n; ++col) mt[col][blk * g + r] = (*Ls[blk])[r][col];
    RationalMatrix null = rational_nullspace(mt);
    auto vec = [&](const std::vector<mpq_class>& coef, size_t blk) {
        std::vector<mpq_class> x(n, 0);
        for (size_t r = 0; r < g; ++r)
            for (size_t col = 0; col < n; ++col) x[col] += coef[blk * g + r] * (*Ls[blk])[r][col];
        return x;
    };
    size_t k = null.size();
    RationalMatrix gram(k, std::vector<mpq_class>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) gram[i][j] = qform(t.omega, vec(null[i], 0), vec(null[j], 1));
    return signature(gram);
}

}  // namespace tqft
