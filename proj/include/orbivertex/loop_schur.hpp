#pragma once

#include "orbivertex/partitions.hpp"
#include "orbivertex/report.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// Sum over SSYT (entries >= 0) of prod q_{c}^{w + k(j-i)/n}, c the color of
// box (i, j); series in q_vars(n) to total q-degree `order`.
PuiseuxSeries loop_schur_ssyt(const Partition& lbar, int n, long order, int k = 0);

// prod q_i^{n_i} / prod (1 - prod q_i^{h_i(box)}) with lbar = combine(lam)
FactoredSeries loop_schur_factored(const MultiPartition& lam);
// the same for any diagram, balanced or not
FactoredSeries loop_schur_factored(const Partition& lbar, int n);
PuiseuxSeries loop_schur_closed(const MultiPartition& lam, long order);

// prod over boxes of q_{j-i}^{j-i}, as a scaled exponent in q_vars(n)
Exp content_monomial(const Partition& lbar, int n);
// S_lam * (content monomial)^{k/n}
FactoredSeries shifted_schur_factored(const MultiPartition& lam, int k);
FactoredSeries shifted_schur_factored(const Partition& lbar, int n, int k);
PuiseuxSeries shifted_schur(const MultiPartition& lam, int k, long order);

// k = 0: S_lam / (1 - (q_0...q_{n-1})^l) = sum (-1)^ht S_sigma
// k != 0: sum (-1)^ht S^k_sigma = 0; sums over l*n strips added to lbar
CheckReport verify_strip_theorem(const MultiPartition& lam, int l, int k, long order);

}  // namespace orbivertex
