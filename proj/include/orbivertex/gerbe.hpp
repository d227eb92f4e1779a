#pragma once

#include <gmpxx.h>

#include "orbivertex/report.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// Tot(L_b + L_{-b-2}) over the gerbe G_k; b + k/n must be an integer
struct LocalGerbe {
    int n = 1;
    int k = 0;
    mpq_class b = -1;

    int e() const;  // gcd(k, n)
    void validate() const;
    std::string str() const;
};

// (-1)^{db} sum_mu Vtilde_mu(b) z_mu Vtilde_{g_k mu}(0) in gw_vars(n); (-1)^{db} = e^{i pi d b}
PuiseuxSeries gw_potential(const LocalGerbe& X, int d, long order);

// sum_lam P_lam E_lam P_lam'(q_0, q_{n-1}, ..., q_1) as factored terms in q_vars(n)
std::vector<FactoredSeries> dt_potential_terms(const LocalGerbe& X, int d);
// the same after q_0 -> -q_0 and q -> -e^{iu}, q_k -> xi_n^{-1} e^{L_k}
PuiseuxSeries dt_potential(const LocalGerbe& X, int d, long order);

CheckReport verify_theorem2(const LocalGerbe& X, int d, long order);

}  // namespace orbivertex
