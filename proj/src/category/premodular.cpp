#include "tqft/category/premodular.hpp"

#include "tqft/errors.hpp"

namespace tqft {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("invalid-category", what); }

CycloScalar lift(const CycloScalar& s, int N) {
    if (!s.is_exact()) return s;
    if (N % s.root_order() != 0)
        bad("scalar in Q(zeta_" + std::to_string(s.root_order()) + ") does not embed in Q(zeta_" + std::to_string(N) + ")");
    return s.promote(N);
}

}  // namespace

int PremodularData::label_index(const std::string& nm) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == nm) return static_cast<int>(i);
    return -1;
}

void PremodularData::finalize() {
    n_ = size();
    const int n = n_;
    if (n == 0) bad("no labels");
    if (static_cast<int>(dual.size()) != n) bad("dual has wrong length");
    if (static_cast<int>(qdim.size()) != n || static_cast<int>(twist.size()) != n) bad("qdim/twist have wrong length");
    for (int i = 0; i < n; ++i)
        if (dual[i] < 0 || dual[i] >= n) bad("dual out of range");
    if (root_order < 1) throw Error("invalid-root-order", "root order must be positive");

    for (auto& x : qdim) x = lift(x, root_order);
    for (auto& x : twist) x = lift(x, root_order);
    for (auto& [k, v] : F) v = lift(v, root_order);
    for (auto& [k, v] : R) v = lift(v, root_order);
    if (sqrt_qdim) {
        if (static_cast<int>(sqrt_qdim->size()) != n) bad("sqrt_qdim has wrong length");
        for (auto& x : *sqrt_qdim) x = lift(x, root_order);
    }
    if (sqrtD) sqrtD = lift(*sqrtD, root_order);
    if (kappa) kappa = lift(*kappa, root_order);

    nmat_.assign(n * n * n, 0);
    for (const auto& t : fusion) {
        for (int x : t)
            if (x < 0 || x >= n) bad("fusion triple out of range");
        nmat_[(t[0] * n + t[1]) * n + t[2]] = 1;
    }
    // the unit acts trivially whether or not the file lists it
    for (int a = 0; a < n; ++a) {
        nmat_[(0 * n + a) * n + a] = 1;
        nmat_[(a * n + 0) * n + a] = 1;
        nmat_[(a * n + dual[a]) * n + 0] = 1;
    }
    prod_.assign(n * n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (N(a, b, c)) prod_[a * n + b].push_back(c);

    fblocks_.assign(n * n * n * n, nullptr);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    auto blk = std::make_shared<FBlock>();
                    for (int e = 0; e < n; ++e)
                        if (N(a, b, e) && N(e, c, d)) blk->rows.push_back(e);
                    for (int f = 0; f < n; ++f)
                        if (N(b, c, f) && N(a, f, d)) blk->cols.push_back(f);
                    if (blk->rows.size() != blk->cols.size())
                        bad("fusion rules are not associative at (" + labels[a] + "," + labels[b] + "," + labels[c] + "; " +
                            labels[d] + ")");
                    if (blk->rows.empty()) continue;
                    size_t m = blk->rows.size();
                    blk->row_of.assign(n, -1);
                    blk->col_of.assign(n, -1);
                    for (size_t i = 0; i < m; ++i) {
                        blk->row_of[blk->rows[i]] = static_cast<int>(i);
                        blk->col_of[blk->cols[i]] = static_cast<int>(i);
                    }
                    blk->F = zero_matrix(m, m);
                    for (size_t i = 0; i < m; ++i)
                        for (size_t j = 0; j < m; ++j) {
                            int e = blk->rows[i], f = blk->cols[j];
                            if (a == 0 || b == 0 || c == 0) {
                                blk->F[i][j] = 1;  // single channel on each side
                                continue;
                            }
                            auto it = F.find({a, b, c, d, e, f});
                            if (it == F.end())
                                bad("missing F entry (" + labels[a] + "," + labels[b] + "," + labels[c] + "," + labels[d] +
                                    "," + labels[e] + "," + labels[f] + ")");
                            blk->F[i][j] = it->second;
                        }
                    try {
                        blk->Finv = mat_inverse(blk->F);
                    } catch (const Error&) {
                        bad("singular F matrix at (" + labels[a] + "," + labels[b] + "," + labels[c] + "; " + labels[d] + ")");
                    }
                    fblocks_[((a * n + b) * n + c) * n + d] = blk;
                }

    rtab_.assign(n * n * n, CycloScalar(0));
    rinv_.assign(n * n * n, CycloScalar(0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c : products(a, b)) {
                CycloScalar r(1);
                if (a != 0 && b != 0) {
                    auto it = R.find({a, b, c});
                    if (it == R.end()) bad("missing R entry (" + labels[a] + "," + labels[b] + "," + labels[c] + ")");
                    r = it->second;
                }
                if (r.is_zero()) bad("zero R entry");
                rtab_[(a * n + b) * n + c] = r;
                rinv_[(a * n + b) * n + c] = r.inverse();
            }

    lambda_.assign(n, CycloScalar(1));
    eps_.assign(n, CycloScalar(1));
    twist_inv_.resize(n);
    qdim_inv_.resize(n);
    for (int a = 0; a < n; ++a) {
        if (twist[a].is_zero() || qdim[a].is_zero()) bad("zero twist or dimension");
        twist_inv_[a] = twist[a].inverse();
        qdim_inv_[a] = qdim[a].inverse();
        const FBlock* b1 = fblock(a, dual[a], a, a);
        const FBlock* b2 = fblock(dual[a], a, dual[a], dual[a]);
        if (!b1 || !b2) bad("duality channels missing");
        const CycloScalar& f1 = b1->F[b1->row_of[0]][b1->col_of[0]];
        const CycloScalar& f2 = b2->F[b2->row_of[0]][b2->col_of[0]];
        if (f1.is_zero()) bad("F^{a a* a}_a[1,1] vanishes; duality is degenerate");
        lambda_[a] = f1.inverse();
        eps_[a] = qdim[a] * f2;
    }

    D_ = CycloScalar(0);
    pplus_ = CycloScalar(0);
    pminus_ = CycloScalar(0);
    for (int a = 0; a < n; ++a) {
        CycloScalar d2 = qdim[a] * qdim[a];
        D_ += d2;
        pplus_ += twist[a] * d2;
        pminus_ += twist_inv_[a] * d2;
    }
    finalized_ = true;
}

CycloScalar PremodularData::f_symbol(int a, int b, int c, int d, int e, int f) const {
    const FBlock* blk = fblock(a, b, c, d);
    if (!blk || blk->row_of[e] < 0 || blk->col_of[f] < 0) return CycloScalar(0);
    return blk->F[blk->row_of[e]][blk->col_of[f]];
}

}  // namespace tqft
