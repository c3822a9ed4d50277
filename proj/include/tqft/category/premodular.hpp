#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tqft/scalars/cyclo.hpp"
#include "tqft/scalars/linalg.hpp"

namespace tqft {

// F^{abc}_d as a matrix: rows are the left-associated channels e (a b -> e),
// columns the right-associated channels f (b c -> f).
struct FBlock {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> row_of;  // label -> row index or -1
    std::vector<int> col_of;  // label -> column index or -1
    ScalarMatrix F;
    ScalarMatrix Finv;
};

// Skeletal multiplicity-free premodular category. Build the raw fields, then
// call finalize() to derive lookup tables; the object is immutable afterwards.
class PremodularData {
public:
    std::string name;
    int root_order = 1;
    std::vector<std::string> labels;  // labels[0] is the unit
    std::vector<int> dual;
    std::vector<std::array<int, 3>> fusion;  // admissible (i, j, k) with N_ij^k = 1
    std::vector<CycloScalar> qdim;
    std::vector<CycloScalar> twist;
    // F entries with a, b, c all non-unit; unit entries are implied.
    std::map<std::array<int, 6>, CycloScalar> F;
    // R entries with a, b both non-unit; unit entries are implied.
    std::map<std::array<int, 3>, CycloScalar> R;
    std::optional<std::vector<CycloScalar>> sqrt_qdim;
    std::optional<CycloScalar> sqrtD;
    std::optional<CycloScalar> kappa;

    // Throws Error("invalid-category", ...) on structural problems (unknown
    // labels, multiplicities, missing entries). Coherence axioms are checked by
    // validate(), not here.
    void finalize();
    bool finalized() const { return finalized_; }

    int size() const { return static_cast<int>(labels.size()); }
    int label_index(const std::string& name) const;  // -1 if absent
    bool N(int a, int b, int c) const { return nmat_[(a * n_ + b) * n_ + c] != 0; }
    const std::vector<int>& products(int a, int b) const { return prod_[a * n_ + b]; }

    // F^{abc}_d[e,f]; zero when inadmissible. Unit-label entries are 1.
    CycloScalar f_symbol(int a, int b, int c, int d, int e, int f) const;
    // nullptr when the space Hom(d, a b c) is zero
    const FBlock* fblock(int a, int b, int c, int d) const { return fblocks_[((a * n_ + b) * n_ + c) * n_ + d].get(); }
    const CycloScalar& r_symbol(int a, int b, int c) const { return rtab_[(a * n_ + b) * n_ + c]; }
    const CycloScalar& r_inverse(int a, int b, int c) const { return rinv_[(a * n_ + b) * n_ + c]; }

    // lambda_a = 1 / F^{a a* a}_a[0,0], the normalization of ev_a.
    const CycloScalar& lambda(int a) const { return lambda_[a]; }
    // epsilon_a = d_a F^{a* a a*}_{a*}[0,0]: pivotal sign relating the two evaluations.
    const CycloScalar& epsilon(int a) const { return eps_[a]; }
    const CycloScalar& theta(int a) const { return twist[a]; }
    const CycloScalar& theta_inv(int a) const { return twist_inv_[a]; }
    const CycloScalar& d(int a) const { return qdim[a]; }
    const CycloScalar& d_inv(int a) const { return qdim_inv_[a]; }

    const CycloScalar& global_dim() const { return D_; }
    const CycloScalar& p_plus() const { return pplus_; }
    const CycloScalar& p_minus() const { return pminus_; }

private:
    bool finalized_ = false;
    int n_ = 0;
    std::vector<char> nmat_;
    std::vector<std::vector<int>> prod_;
    std::vector<std::shared_ptr<FBlock>> fblocks_;
    std::vector<CycloScalar> rtab_, rinv_;
    std::vector<CycloScalar> lambda_, eps_, twist_inv_, qdim_inv_;
    CycloScalar D_, pplus_, pminus_;
};

using CategoryPtr = std::shared_ptr<const PremodularData>;

// Catalog: trivial, semion, repZ2, fibonacci, ising, su2_1 .. su2_4.
std::vector<std::string> builtin_names();
CategoryPtr builtin(const std::string& name);  // throws Error("catalog-miss")

}  // namespace tqft
