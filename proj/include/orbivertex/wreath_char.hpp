#pragma once

#include <map>
#include <memory>
#include <vector>

#include "orbivertex/cyclo.hpp"
#include "orbivertex/partitions.hpp"

namespace orbivertex {

struct CharTable {
    int n = 1, d = 0;
    std::vector<MultiPartition> irreps;
    std::vector<MultiPartition> classes;
    std::vector<std::vector<CycNum>> chi;  // chi[irrep][class]
    std::vector<long> z;                   // per class

    int irrep_index(const MultiPartition& lam) const;
    int class_index(const MultiPartition& mu) const;
    const CycNum& at(const MultiPartition& lam, const MultiPartition& mu) const {
        return chi[irrep_index(lam)][class_index(mu)];
    }

    std::map<MultiPartition, int> irrep_pos, class_pos;
};

// memoized per (n, d); safe to call from several threads
std::shared_ptr<const CharTable> char_table(int n, int d);
CycNum character(const MultiPartition& lam, const MultiPartition& mu);

// one column: prod over parts (d, k) of sum_j xi^{-kj} alpha^j_{-d} applied to the vacuum
std::map<MultiPartition, CycNum> character_column(const MultiPartition& mu);

long dimension(const MultiPartition& lam);
long hook_dimension(const Partition& rho);

struct CentralChars {
    long fT = 0;
    std::vector<CycNum> f;  // f[i], i = 0..n-1 (f[0] = d)
};
// closed forms: f_i = sum_j xi^{-ij} |lam_j|, f_T = content sum over color-0 boxes
CentralChars central_chars(const MultiPartition& lam);
// ratio definitions through the character table
CentralChars central_chars_from_table(const MultiPartition& lam);

// chi_{lbar}(n^d) / dim(lam) via one n-strip removal sequence
long sign_ratio(const MultiPartition& lam);
long sign_ratio_of_diagram(const Partition& lbar, int n);

// classical Murnaghan-Nakayama character of S_m
long mn_character(const Partition& lam, const Partition& mu);

}  // namespace orbivertex
