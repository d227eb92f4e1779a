#pragma once

#include <string>
#include <vector>

#include "orbivertex/report.hpp"

namespace orbivertex {

// Sweeps over all labels up to a size bound, each returning one merged report.

// row/column orthogonality and chi(-nu) = conj chi(nu) for n <= max_n, nd <= max_nd
CheckReport suite_characters(int max_n, int max_nd);
// closed central characters against character ratios
CheckReport suite_central_chars(int max_n, int max_d);
// combine(n_quotient(p)) = p and n_quotient(combine(lam)) = lam for |lbar| <= max_size
CheckReport suite_quotients(int max_n, int max_size);
// tableau sums against the hook-content form for |lbar| <= max_size
CheckReport suite_loop_schur(int max_n, int max_size, long order);
// border strip theorems for |lbar| <= max_size, l <= max_l, all k
CheckReport suite_strips(int max_n, int max_size, int max_l, long order);
// ratio(sigma) = (-1)^{beta + ht + shift} ratio(lambda) over all kn strip additions,
// |lambda| <= max_d, k <= max_k
CheckReport suite_sign_lemma(int max_n, int max_d, int max_k, int shift);
// identities I, II, III
CheckReport suite_reduction(int max_n, int max_d, long order);
// R-1 at a in {0, 1, 1/n} and R-2 at every k
CheckReport suite_relations(int max_n, int max_d, long order);
// structure and leading determinants of the invertibility matrix; solve_order > 0
// also checks Phi alpha = beta
CheckReport suite_appendix(int max_n, int max_d, long solve_order = 0);
// the listed gerbe configurations (n, k, b, d) with n <= max_n, d <= max_d
CheckReport suite_theorem2(int max_n, int max_d, long order);

struct GerbeCase {
    int n, k;
    std::string b;
    int d;
};
const std::vector<GerbeCase>& theorem2_cases();

}  // namespace orbivertex
