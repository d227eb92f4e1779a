#pragma once

#include <functional>
#include <vector>

#include "orbivertex/partitions.hpp"
#include "orbivertex/report.hpp"
#include "orbivertex/series.hpp"
#include "orbivertex/wreath_char.hpp"

namespace orbivertex {

struct HurwitzGF {
    int n = 1;
    MultiPartition nu, mu;
    PuiseuxSeries value;
    bool size_mismatch = false;  // |nu| != |mu|: value is zero
};

// sum_lam chi_lam(mu)/z_mu chi_lam(nu)/z_nu exp(exponent(lam)), exponent exact and of positive valuation
PuiseuxSeries character_sum(const MultiPartition& nu, const MultiPartition& mu,
                            const std::function<PuiseuxSeries(const MultiPartition&)>& exponent, long order);

// generating function of disconnected wreath Hurwitz numbers in gw_vars(n)
HurwitzGF burnside(const MultiPartition& nu, const MultiPartition& mu, long order);
// the same with f_T u -> i a f_T u and f_i x_i -> a xi_{2n}^{-i} f_i x_i
PuiseuxSeries h_tilde(const MultiPartition& nu, const MultiPartition& mu, const mpq_class& a, long order);

// coefficient of u^r/r! x^gamma/gamma! in the Burnside series; gamma[i-1] = number of xi^i points
mpq_class wreath_hurwitz_count(const MultiPartition& nu, const MultiPartition& mu, int r, const std::vector<int>& gamma);
CycNum wreath_hurwitz_count_cyc(const MultiPartition& nu, const MultiPartition& mu, int r,
                                const std::vector<int>& gamma);

// sum_nu chi_lam(nu) chi_sig(g(nu)) / z_nu with g = negation (k < 0) or g_k
std::vector<std::vector<CycNum>> contraction_matrix(int n, int d, long k);

// Vtilde_mu(0) = sum_nu Vtilde_nu(a) z_nu Htilde_{-nu,mu}(a) for all |mu| <= d
CheckReport check_R1(int n, int d, const mpq_class& a, long order);
// 0 = sum_nu Vtilde_nu(0) z_nu Htilde_{g_k nu, mu}(k/n) for all mu with an untwisted part
CheckReport check_R2(int n, int d, int k, long order);
CheckReport check_relations(const std::string& which, int n, int d, int k, const mpq_class& a, long order);

// H(x+y, u+v) = sum_sigma H_{nu,sigma}(x,u) z_sigma H_{-sigma,mu}(y,v) and H_{nu,-mu}(0,0) = delta/z_mu
CheckReport check_hurwitz_identities(int n, int d, long order);

struct PhiBlock {
    Partition tau;
    int i = 0;             // index of the twist window D^i
    std::vector<int> h;    // twisting partition of the remaining parts
    std::vector<int> rows; // positions in PhiReport::rows
    std::vector<int> cols; // positions in PhiReport::cols
    CycNum det;            // determinant of the leading coefficients
    CycNum det_closed;     // closed Vandermonde form
};

struct PhiReport {
    int n = 1, d = 0;
    std::vector<RowIndex> rows;
    std::vector<MultiPartition> cols;
    std::vector<int> hbar;                      // per column
    std::vector<std::vector<PuiseuxSeries>> phi_x1;  // entries at u = x_2 = ... = 0, equal sizes only
    std::vector<PhiBlock> blocks;
    CheckReport check;
};

// builds the invertibility matrix and checks its structure; solve_order > 0
// additionally checks Phi alpha = beta with the vertex from the DT side
PhiReport phi_matrix(int n, int d, long order, long solve_order = 0);

}  // namespace orbivertex
