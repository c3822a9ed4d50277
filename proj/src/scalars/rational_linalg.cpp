#include <numeric>

#include "tqft/errors.hpp"
#include "tqft/scalars/linalg.hpp"

namespace tqft {

ScalarMatrix identity_matrix(size_t n) {
    ScalarMatrix m = zero_matrix(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ScalarMatrix zero_matrix(size_t rows, size_t cols) {
    return ScalarMatrix(rows, std::vector<CycloScalar>(cols, CycloScalar(0)));
}

ScalarMatrix mat_mul(const ScalarMatrix& a, const ScalarMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw Error("shape-mismatch", "matrix product dimensions differ");
    ScalarMatrix c = zero_matrix(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

ScalarMatrix mat_scale(const ScalarMatrix& a, const CycloScalar& s) {
    ScalarMatrix c = a;
    for (auto& row : c)
        for (auto& x : row) x *= s;
    return c;
}

bool mat_equal(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

size_t mat_rank(ScalarMatrix a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        CycloScalar inv = a[r][c].inverse();
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            CycloScalar f = a[i][c] * inv;
            for (size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

CycloScalar mat_det(ScalarMatrix a) {
    size_t n = a.size();
    CycloScalar det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return CycloScalar(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        CycloScalar inv = a[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            CycloScalar f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

ScalarMatrix mat_inverse(ScalarMatrix a) {
    size_t n = a.size();
    ScalarMatrix inv = identity_matrix(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw Error("singular-matrix", "matrix is not invertible");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        CycloScalar pinv = a[c][c].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= pinv;
            inv[c][j] *= pinv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            CycloScalar f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
                if (!inv[c][j].is_zero()) inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

int signature(RationalMatrix a) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) throw Error("not-symmetric", "signature requires a symmetric matrix");
    std::vector<size_t> live(n);
    std::iota(live.begin(), live.end(), 0);
    int sig = 0;
    while (!live.empty()) {
        size_t pos = live.size();
        for (size_t t = 0; t < live.size(); ++t)
            if (a[live[t]][live[t]] != 0) {
                pos = t;
                break;
            }
        if (pos == live.size()) {
            // fold the first nonzero off-diagonal pair into a diagonal entry
            bool found = false;
            for (size_t t = 0; t < live.size() && !found; ++t)
                for (size_t u = t + 1; u < live.size() && !found; ++u) {
                    size_t i = live[t], j = live[u];
                    if (a[i][j] == 0) continue;
                    for (size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
                    for (size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
                    pos = t;
                    found = true;
                }
            if (!found) break;  // remaining block is zero
        }
        size_t p = live[pos];
        mpq_class piv = a[p][p];
        sig += piv > 0 ? 1 : -1;
        live.erase(live.begin() + pos);
        for (size_t i : live) {
            if (a[i][p] == 0) continue;
            mpq_class f = a[i][p] / piv;
            for (size_t j : live) a[i][j] -= f * a[p][j];
        }
        for (size_t i : live) a[i][p] = a[p][i] = 0;
    }
    return sig;
}

namespace {

// Reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(RationalMatrix& a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        mpq_class inv = 1 / a[r][c];
        for (size_t j = 0; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rational_rank(RationalMatrix a) { return rref(a).size(); }

RationalMatrix rational_nullspace(const RationalMatrix& m) {
    RationalMatrix a = m;
    size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    RationalMatrix basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace tqft
