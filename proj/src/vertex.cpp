#include "orbivertex/vertex.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "orbivertex/fock.hpp"
#include "orbivertex/loop_schur.hpp"
#include "orbivertex/wreath_char.hpp"

namespace orbivertex {

namespace {

CycNum xi2n(int n, long p) { return CycNum::root(2L * n, p); }

// (-xi_{2n})^d prod_l xi_n^{l d_l}
CycNum framing_constant(const MultiPartition& lam) {
    int n = lam.n();
    CycNum c = (-xi2n(n, 1)).pow(lam.size());
    long s = 0;
    for (int l = 0; l < n; ++l) s += static_cast<long>(l) * lam[l].size();
    return c * CycNum::root(n, s);
}

long integral(const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw DomainError(std::string(what) + " must be integral");
    return q.get_num().get_si();
}

// content monomial raised to the power r, in scaled units of q_vars(n)
Exp content_power(const MultiPartition& lam, const mpq_class& r) {
    Exp c = content_monomial(combine(lam), lam.n());
    Exp out{};
    for (int i = 0; i < lam.n(); ++i) out[i] = static_cast<int16_t>(integral(r * c[i], "content exponent"));
    return out;
}

Exp exp_plus(Exp a, const Exp& b) {
    for (int i = 0; i < kMaxVars; ++i) a[i] = static_cast<int16_t>(a[i] + b[i]);
    return a;
}

void add_support(const PuiseuxSeries& s, std::set<Exp>& out) {
    for (const auto& t : s.terms())
        if (t.g < s.precision()) out.insert(t.e);
}

MultiPartition single_part(int n, int k) { return MultiPartition::from_parts(n, {{k, 0}}); }

mpq_class bernoulli(int m) {
    static std::mutex mu;
    static std::vector<mpq_class> B{mpq_class(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(B.size()) <= m) {
        int k = static_cast<int>(B.size());
        mpq_class s = 0;
        mpz_class binom = 1;  // C(k+1, j)
        for (int j = 0; j < k; ++j) {
            s += binom * B[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        mpq_class b = -s / (k + 1);
        b.canonicalize();
        B.push_back(b);
    }
    return B[m];
}

}  // namespace

ChangeOfVariables theorem_map(int n, bool gerbe_sign) {
    ChangeOfVariables cv;
    cv.n = n;
    cv.source = q_vars(n);
    cv.target = gw_vars(n);
    std::vector<PuiseuxSeries> L(n, PuiseuxSeries(cv.target));
    for (int k = 1; k < n; ++k)
        for (int i = 1; i < n; ++i) {
            CycNum c = -CycNum::root(n, -static_cast<long>(i) * k) * CycNum(frac(1, n)) * (xi2n(n, i) - xi2n(n, -i));
            L[k] += PuiseuxSeries::variable(cv.target, i, c);
        }
    PuiseuxSeries L0 = PuiseuxSeries::variable(cv.target, 0, CycNum::I());
    for (int k = 1; k < n; ++k) L0 -= L[k];
    mpq_class tq = gerbe_sign ? mpq_class(1, 2) : mpq_class(0);
    // turns are not reduced mod 1: they fix the branch of fractional powers
    mpq_class t0 = tq + frac(n - 1, n);
    cv.images.push_back({t0, CycNum(1), Exp{}, L0});
    for (int k = 1; k < n; ++k) cv.images.push_back({-frac(1, n), CycNum(1), Exp{}, L[k]});
    return cv;
}

PuiseuxSeries change_of_variables(const PuiseuxSeries& f, const ChangeOfVariables& cv, long order) {
    if (!f.exact()) throw DomainError("change of variables needs an exact q-series; use the factored form");
    return substitute(f, cv.images, cv.target, order);
}

FactoredSeries dt_vertex_factored(const MultiPartition& lam, const mpq_class& a) {
    int n = lam.n();
    long na = integral(a * n, "n*a");
    long d = lam.size();
    FactoredSeries F = loop_schur_factored(lam);
    F.coeff = framing_constant(lam).pow(-na) * CycNum(sign_ratio(lam) * (d % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) F.mono[i] = static_cast<int16_t>(F.mono[i] + d * n);
    F.mono = exp_plus(F.mono, content_power(lam, -a));
    return F;
}

PuiseuxSeries dt_vertex(const MultiPartition& lam, const mpq_class& a, long order) {
    return dt_vertex_factored(lam, a).expand(order);
}

LogLinear dt_vertex_image(const MultiPartition& lam, const mpq_class& a, long order, long extra_slack,
                          bool gerbe_sign) {
    using Key = std::tuple<MultiPartition, std::string, long, long, bool>;
    static std::mutex mu;
    static std::map<Key, LogLinear> cache;
    Key key{lam, a.get_str(), order, extra_slack, gerbe_sign};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ChangeOfVariables cv = theorem_map(lam.n(), gerbe_sign);
    LogLinear W = dt_vertex_factored(lam, a).to_loglinear(cv.images, cv.target, order, extra_slack);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, W);
    return W;
}

LogLinear framing_exponential(const MultiPartition& lam, const mpq_class& a) {
    int n = lam.n();
    auto vs = gw_vars(n);
    CentralChars cc = central_chars(lam);
    LogLinear E;
    E.log = PuiseuxSeries(vs);
    E.log += PuiseuxSeries::variable(vs, 0, CycNum(a) * CycNum::I() * CycNum(cc.fT));
    for (int i = 1; i < n; ++i) E.log += PuiseuxSeries::variable(vs, i, CycNum(a) * xi2n(n, -i) * cc.f[i]);
    return E;
}

PuiseuxSeries gw_vertex(const MultiPartition& mu, const mpq_class& a, long order) {
    auto t = char_table(mu.n(), mu.size());
    int c = t->class_index(mu);
    PuiseuxSeries out(gw_vars(mu.n()), order);
    CycNum iz(frac(1, t->z[c]));
    for (size_t l = 0; l < t->irreps.size(); ++l) {
        if (t->chi[l][c].is_zero()) continue;
        out += dt_vertex_image(t->irreps[l], a, order).expand(order).scaled(t->chi[l][c] * iz);
    }
    return out;
}

std::vector<PuiseuxSeries> gw_vertex_family(int n, int d, const mpq_class& a, long order) {
    auto t = char_table(n, d);
    std::vector<PuiseuxSeries> W;
    for (const auto& lam : t->irreps) W.push_back(dt_vertex_image(lam, a, order).expand(order));
    std::vector<PuiseuxSeries> out;
    for (size_t c = 0; c < t->classes.size(); ++c) {
        PuiseuxSeries s(gw_vars(n), order);
        CycNum iz(frac(1, t->z[c]));
        for (size_t l = 0; l < W.size(); ++l)
            if (!t->chi[l][c].is_zero()) s += W[l].scaled(t->chi[l][c] * iz);
        out.push_back(s);
    }
    return out;
}

PuiseuxSeries csc_series(const mpq_class& c, VarSetPtr vs, int var, long order) {
    long D = vs->D, w = vs->weight[var];
    long P = order * D;
    PuiseuxSeries out(vs, P);
    mpq_class fact = 1;  // (2k)!
    for (int k = 0;; ++k) {
        if (k > 0) fact *= (2 * k - 1) * (2 * k);
        long e = 2L * k - 1;
        if (w * e * D >= P) break;
        mpz_class two = 1;
        two <<= (2 * k);  // 2^{2k}, so 2 (2^{2k-1} - 1) = 2^{2k} - 2
        mpq_class coef = mpq_class(two - 2) * bernoulli(2 * k) / fact;
        if (k % 2 == 0) coef = -coef;
        mpq_class cp = 1;
        if (e >= 0)
            for (long j = 0; j < e; ++j) cp *= c;
        else
            cp = 1 / c;
        coef *= cp;
        coef.canonicalize();
        Exp x{};
        x[var] = static_cast<int16_t>(e * D);
        out.add_term(x, CycNum(coef));
    }
    return out;
}

PuiseuxSeries untwisted_vertex(const MultiPartition& tau, long order) {
    if (!tau.untwisted()) throw DomainError("untwisted_vertex needs a purely untwisted class");
    auto vs = gw_vars(tau.n());
    long slack = std::max(0, tau.length() - 1);
    PuiseuxSeries out = PuiseuxSeries::constant(vs, CycNum(frac(1, tau.z())));
    for (const auto& p : tau.parts()) {
        CycNum pre = CycNum::I() * CycNum(frac(p.size % 2 ? -1 : 1, 2));
        out *= csc_series(frac(p.size, 2), vs, 0, order + slack).scaled(pre);
    }
    return out.truncated(order * vs->D);
}

CheckReport check_identity_I(int n, int d, long order) {
    CheckReport rep;
    rep.name = "identity I";
    ChangeOfVariables cv = theorem_map(n);
    for (int s = 1; s <= d; ++s)
        for (const auto& lam : multipartitions_of(n, s))
            for (mpq_class a : {frac(1, n), mpq_class(1)}) {
                FactoredSeries F(cv.source);
                F.coeff = framing_constant(lam).pow(integral(a * n, "n*a"));
                F.mono = content_power(lam, a);
                PuiseuxSeries lhs = F.to_loglinear(cv.images, cv.target, order).expand(order);
                PuiseuxSeries rhs = framing_exponential(lam, a).expand(order);
                compare_series(lhs, rhs, lam.str() + " a=" + a.get_str(), rep);
            }
    return rep;
}

CheckReport check_identity_II(int n, int d, long order) {
    CheckReport rep;
    rep.name = "identity II";
    auto vs = q_vars(n);
    std::map<MultiPartition, PuiseuxSeries> P;
    for (int s = 0; s <= d; ++s)
        for (const auto& lam : multipartitions_of(n, s)) P.emplace(lam, dt_vertex(lam, 0, order));
    std::set<Exp> support;
    for (int s = 1; s <= d; ++s)
        for (int k = 1; k <= s; ++k) {
            auto big = char_table(n, s);
            auto small = char_table(n, s - k);
            FactoredSeries factor(vs);
            factor.coeff = CycNum(k % 2 ? -1 : 1);
            Exp qk{}, qh{};
            for (int i = 0; i < n; ++i) {
                qh[i] = static_cast<int16_t>(k * n);
                qk[i] = static_cast<int16_t>(2 * k * n);
            }
            factor.mono = qh;
            factor.den.push_back({CycNum(1), qk});
            PuiseuxSeries fs = factor.expand(order);
            for (const auto& mu : small->classes) {
                MultiPartition muk = mu + single_part(n, k);
                PuiseuxSeries lhs(vs, order * vs->D), rhs(vs, order * vs->D);
                for (const auto& lam : big->irreps) lhs += P.at(lam).scaled(big->at(lam, muk));
                for (const auto& sig : small->irreps) rhs += P.at(sig).scaled(small->at(sig, mu));
                rhs = (fs * rhs).truncated(order * vs->D);
                add_support(lhs, support);
                add_support(rhs, support);
                compare_series(lhs, rhs, muk.str(), rep);
            }
        }
    rep.coefficients = static_cast<long>(support.size());
    return rep;
}

CheckReport check_identity_III(int n, int d, long order) {
    CheckReport rep;
    rep.name = "identity III";
    auto vs = q_vars(n);
    long support_total = 0;
    for (int s = 1; s <= d; ++s) {
        auto big = char_table(n, s);
        for (int k = 1; k < n; ++k) {
            std::map<MultiPartition, PuiseuxSeries> shifted;
            for (const auto& lam : big->irreps) {
                FactoredSeries F = dt_vertex_factored(lam, 0);
                F.mono = exp_plus(F.mono, content_power(lam, frac(k, n)));
                shifted.emplace(lam, F.expand(order));
            }
            for (int kp = 1; kp <= s; ++kp)
                for (const auto& nu : char_table(n, s - kp)->classes) {
                    MultiPartition m = nu + single_part(n, kp);
                    PuiseuxSeries sum(vs, order * vs->D);
                    std::set<Exp> support;
                    for (const auto& lam : big->irreps) {
                        const CycNum& chi = big->at(lam, m);
                        if (chi.is_zero()) continue;
                        add_support(shifted.at(lam), support);
                        sum += shifted.at(lam).scaled(chi);
                    }
                    support_total += static_cast<long>(support.size());
                    compare_series(sum, PuiseuxSeries(vs, order * vs->D),
                                   m.str() + " k=" + std::to_string(k), rep);
                }
        }
    }
    rep.coefficients = support_total;
    return rep;
}

CheckReport check_reduction(const std::string& which, int n, int d, long order) {
    if (which == "I") return check_identity_I(n, d, order);
    if (which == "II") return check_identity_II(n, d, order);
    if (which == "III") return check_identity_III(n, d, order);
    throw DomainError("unknown identity " + which);
}

}  // namespace orbivertex
