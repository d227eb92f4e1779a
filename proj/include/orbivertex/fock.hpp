#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "orbivertex/cyclo.hpp"
#include "orbivertex/partitions.hpp"

namespace orbivertex {

// Stone positions are half-integers p; we store the integer m = p - 1/2.
// A partition rho sits at m_i = rho_i - i.
std::vector<int> maya_positions(const Partition& rho, int count);
// inverse of maya_positions for a charge-zero set of `count` top stones
Partition from_positions(std::vector<int> m);

class MayaState {
public:
    MayaState() = default;
    explicit MayaState(const Partition& rho);
    // positions given as m = p - 1/2
    MayaState(std::set<int> occupied_nonneg, std::set<int> vacant_neg);

    const std::set<int>& occupied_nonneg() const { return occ_; }
    const std::set<int>& vacant_neg() const { return vac_; }
    int charge() const { return static_cast<int>(occ_.size()) - static_cast<int>(vac_.size()); }
    bool occupied(int m) const { return m >= 0 ? occ_.count(m) > 0 : vac_.count(m) == 0; }
    Partition partition() const;

private:
    std::set<int> occ_, vac_;
};

// modified Frobenius coordinates, stored as alpha_i - 1/2 and beta_i - 1/2
struct Frobenius {
    std::vector<int> a, b;
    bool operator==(const Frobenius&) const = default;
};
Frobenius frobenius(const Partition& rho);
Partition from_frobenius(const Frobenius& f);

// colored diagram helpers; box (i, j) is row i, column j, 1-based, color j - i mod n
int box_color(int i, int j, int n);
std::vector<int> color_counts(const Partition& lbar, int n);
bool balanced(const Partition& lbar, int n);
// h[i-1][j-1][k] = number of color-k boxes in the hook of (i, j)
std::vector<std::vector<std::vector<int>>> hook_colors(const Partition& lbar, int n);
// n_k = sum_i (i - 1) * #(color k boxes in row i)
std::vector<int> row_weights(const Partition& lbar, int n);

MultiPartition n_quotient(const Partition& lbar, int n);
Partition combine(const MultiPartition& lam);

struct Strip {
    Partition shape;
    int ht;
    int from;                  // Maya position (m) of the moved stone
    std::optional<int> beta;   // stones jumped in the quotient diagram, when n | length
};
// all ways of adding a border strip of length len; beta filled when n | len
std::vector<Strip> add_border_strips(const Partition& lbar, int len, int n = 1);
// all ways of removing a border strip of length len
std::vector<Strip> remove_border_strips(const Partition& lbar, int len);

// finite linear combination of basis vectors v_lambda
class FockVector {
public:
    explicit FockVector(int n = 1) : n_(n) {}
    static FockVector vacuum(int n);

    int n() const { return n_; }
    const std::map<MultiPartition, CycNum>& terms() const { return terms_; }
    CycNum coeff(const MultiPartition& lam) const;
    void add(const MultiPartition& lam, const CycNum& c);
    FockVector& operator+=(const FockVector& o);
    FockVector scaled(const CycNum& c) const;

private:
    int n_;
    std::map<MultiPartition, CycNum> terms_;
};

// alpha_{-k} acting on tensor factor i
FockVector alpha_minus(const FockVector& v, int factor, int k);
// E_{p,p} for half-integer p = m + 1/2 acting on factor i
FockVector energy(const FockVector& v, int factor, int m);
// F_T = sum_p (p^2/2) E_{p,p} on factor i; eigenvalue is the content sum
FockVector cut_join(const FockVector& v, int factor);
// sum of contents j - i
long content_sum(const Partition& rho);

}  // namespace orbivertex
