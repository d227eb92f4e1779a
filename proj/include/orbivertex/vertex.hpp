#pragma once

#include <string>
#include <vector>

#include "orbivertex/partitions.hpp"
#include "orbivertex/report.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// q -> e^{2 pi i t_q} e^{i u}, q_k -> xi_n^{-1} e^{L_k} (k > 0); q_0 = q / prod q_k.
// t_q = 0 for the vertex correspondence, 1/2 for the gerbe correspondence.
struct ChangeOfVariables {
    int n = 1;
    VarSetPtr source;  // q_vars(n)
    VarSetPtr target;  // gw_vars(n)
    std::vector<VariableImage> images;
};
ChangeOfVariables theorem_map(int n, bool gerbe_sign = false);

// substitution of an exact (polynomial) q-series
PuiseuxSeries change_of_variables(const PuiseuxSeries& f, const ChangeOfVariables& cv, long order);

// framed DT vertex as a factored rational function in q_vars(n); n*a must be integral
FactoredSeries dt_vertex_factored(const MultiPartition& lam, const mpq_class& a);
PuiseuxSeries dt_vertex(const MultiPartition& lam, const mpq_class& a, long order);

// the framed DT vertex after the change of variables, in log-linear form; memoized
LogLinear dt_vertex_image(const MultiPartition& lam, const mpq_class& a, long order, long extra_slack = 0,
                          bool gerbe_sign = false);

// exp(a (i f_T u + sum_i xi_{2n}^{-i} f_i x_i)) in gw_vars(n)
LogLinear framing_exponential(const MultiPartition& lam, const mpq_class& a);

// sum_lam Ptilde_lam(a) chi_lam(mu) / z_mu after the change of variables
PuiseuxSeries gw_vertex(const MultiPartition& mu, const mpq_class& a, long order);
// the same family for every class of size d, in char-table class order
std::vector<PuiseuxSeries> gw_vertex_family(int n, int d, const mpq_class& a, long order);

// Laurent expansion of csc(c u) in the variable `var` of vs, to grade order
PuiseuxSeries csc_series(const mpq_class& c, VarSetPtr vs, int var, long order);
// (1/z_tau) prod_j (i (-1)^{d_j} / 2) csc(d_j u / 2): the closed form of the
// vertex at a = 0 for a purely untwisted class tau
PuiseuxSeries untwisted_vertex(const MultiPartition& tau, long order);

// Reduction identities, checked for all labels of total size <= d
CheckReport check_identity_I(int n, int d, long order);
CheckReport check_identity_II(int n, int d, long order);
CheckReport check_identity_III(int n, int d, long order);
CheckReport check_reduction(const std::string& which, int n, int d, long order);

}  // namespace orbivertex
