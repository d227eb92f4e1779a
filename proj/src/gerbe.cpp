#include "orbivertex/gerbe.hpp"

#include <numeric>
#include <set>

#include "orbivertex/fock.hpp"
#include "orbivertex/hurwitz.hpp"
#include "orbivertex/loop_schur.hpp"
#include "orbivertex/vertex.hpp"
#include "orbivertex/wreath_char.hpp"

namespace orbivertex {

int LocalGerbe::e() const { return std::gcd(k, n); }

void LocalGerbe::validate() const {
    if (n < 1) throw DomainError("gerbe needs n >= 1");
    if (k < 0 || k >= n) throw DomainError("gerbe class k must lie in 0..n-1");
    mpq_class s = b + frac(k, n);
    if (s.get_den() != 1) throw DomainError("b + k/n must be an integer");
}

std::string LocalGerbe::str() const {
    return "X(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",b=" + b.get_str() + ")";
}

PuiseuxSeries gw_potential(const LocalGerbe& X, int d, long order) {
    X.validate();
    auto t = char_table(X.n, d);
    auto B = contraction_matrix(X.n, d, X.k);
    mpq_class db = X.b * d;
    CycNum sign = CycNum::from_turn(db / 2);
    PuiseuxSeries out(gw_vars(X.n), order);
    size_t N = t->irreps.size();
    for (size_t l = 0; l < N; ++l)
        for (size_t s = 0; s < N; ++s) {
            if (B[l][s].is_zero()) continue;
            LogLinear w = dt_vertex_image(t->irreps[l], X.b, order, d) * dt_vertex_image(t->irreps[s], 0, order, d);
            out += w.expand(order).scaled(sign * B[l][s]);
        }
    return out;
}

std::vector<FactoredSeries> dt_potential_terms(const LocalGerbe& X, int d) {
    X.validate();
    int n = X.n;
    auto vs = q_vars(n);
    long D = vs->D;
    mpq_class dnb = X.b * d * n;
    if (dnb.get_den() != 1) throw DomainError("d n b must be an integer");
    std::vector<int> reverse(n);
    for (int i = 0; i < n; ++i) reverse[i] = (n - i) % n;
    std::vector<FactoredSeries> out;
    for (const auto& lam : char_table(n, d)->irreps) {
        Partition lbar = combine(lam);
        FactoredSeries P = loop_schur_factored(lam);
        P.mono = Exp{};
        FactoredSeries Pt = loop_schur_factored(n_quotient(lbar.conjugate(), n));
        Pt.mono = Exp{};
        FactoredSeries E(vs);
        E.coeff = CycNum(mpz_odd_p(dnb.get_num_mpz_t()) ? -1 : 1);
        for (int i = 1; i <= lbar.length(); ++i)
            for (int j = 1; j <= lbar[i - 1]; ++j) {
                mpq_class ex = (X.b + 2) * i - X.b * j - 1;
                ex *= D;
                if (ex.get_den() != 1) throw DomainError("fractional exponent beyond the q-variable scale");
                E.mono[mod(j - i, n)] += static_cast<int16_t>(ex.get_num().get_si());
            }
        out.push_back(P * E * Pt.permute(reverse));
    }
    return out;
}

PuiseuxSeries dt_potential(const LocalGerbe& X, int d, long order) {
    ChangeOfVariables cv = theorem_map(X.n, true);
    PuiseuxSeries out(cv.target, order);
    for (const auto& F : dt_potential_terms(X, d))
        out += F.negate_variable(0).to_loglinear(cv.images, cv.target, order).expand(order);
    return out;
}

CheckReport verify_theorem2(const LocalGerbe& X, int d, long order) {
    CheckReport rep;
    rep.name = "theorem 2 " + X.str() + " d=" + std::to_string(d);
    auto gw = gw_potential(X, d, order);
    auto dt = dt_potential(X, d, order);
    compare_series(gw, dt, X.str(), rep);
    std::set<Exp> sup;
    for (const auto* s : {&gw, &dt})
        for (const auto& t : s->terms()) sup.insert(t.e);
    rep.coefficients = static_cast<long>(sup.size());
    return rep;
}

}  // namespace orbivertex
