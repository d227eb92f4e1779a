#include "orbivertex/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "orbivertex/vertex.hpp"

namespace orbivertex {

namespace {

CycNum xi2n(int n, long p) { return CycNum::root(2L * n, p); }

// exp(a (i f_T u + sum xi_{2n}^{-i} f_i x_i)) expanded; memoized
PuiseuxSeries tilde_exponential(const MultiPartition& sig, const mpq_class& a, long order) {
    using Key = std::tuple<MultiPartition, std::string, long>;
    static std::mutex mu;
    static std::map<Key, PuiseuxSeries> cache;
    Key key{sig, a.get_str(), order};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    PuiseuxSeries e = framing_exponential(sig, a).expand(order);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, e);
    return e;
}

void add_support(const PuiseuxSeries& s, std::set<Exp>& out) {
    for (const auto& t : s.terms())
        if (t.g < s.precision()) out.insert(t.e);
}

std::vector<MultiPartition> untwisted_classes(int n, int s) {
    std::vector<MultiPartition> out;
    for (const auto& p : partitions_of(s)) {
        std::vector<Partition> c(n);
        c[0] = p;
        out.emplace_back(n, c);
    }
    return out;
}

CycNum det(std::vector<std::vector<CycNum>> A) {
    size_t N = A.size();
    CycNum d(1);
    for (size_t c = 0; c < N; ++c) {
        size_t p = c;
        while (p < N && A[p][c].is_zero()) ++p;
        if (p == N) return CycNum(0);
        if (p != c) {
            std::swap(A[p], A[c]);
            d = -d;
        }
        d *= A[c][c];
        CycNum inv = A[c][c].inv();
        for (size_t r = c + 1; r < N; ++r) {
            if (A[r][c].is_zero()) continue;
            CycNum f = A[r][c] * inv;
            for (size_t j = c; j < N; ++j) A[r][j] -= f * A[c][j];
        }
    }
    return d;
}

// determinant of a small matrix of series by the permutation expansion
PuiseuxSeries series_det(const std::vector<std::vector<PuiseuxSeries>>& A, VarSetPtr vs, long prec) {
    size_t N = A.size();
    if (N > 8) throw DomainError("series determinant limited to 8x8");
    std::vector<size_t> p(N);
    std::iota(p.begin(), p.end(), 0);
    PuiseuxSeries out(vs, prec);
    do {
        int inversions = 0;
        for (size_t i = 0; i < N; ++i)
            for (size_t j = i + 1; j < N; ++j) inversions += p[i] > p[j];
        PuiseuxSeries t = PuiseuxSeries::constant(vs, CycNum(inversions % 2 ? -1 : 1)).truncated(prec);
        for (size_t i = 0; i < N && !t.is_zero(); ++i) t = (t * A[i][p[i]]).truncated(prec);
        out += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

mpq_class factorial_q(int k) { return mpq_class(factorial(k)); }

}  // namespace

PuiseuxSeries character_sum(const MultiPartition& nu, const MultiPartition& mu,
                            const std::function<PuiseuxSeries(const MultiPartition&)>& exponent, long order) {
    if (nu.size() != mu.size()) throw DomainError("character_sum: size mismatch");
    auto t = char_table(mu.n(), mu.size());
    int cm = t->class_index(mu), cn = t->class_index(nu);
    CycNum w(frac(1, t->z[cm] * t->z[cn]));
    PuiseuxSeries out;
    bool first = true;
    for (size_t l = 0; l < t->irreps.size(); ++l) {
        CycNum c = t->chi[l][cm] * t->chi[l][cn];
        if (c.is_zero()) continue;
        PuiseuxSeries e = exp_series(exponent(t->irreps[l]), order).scaled(c * w);
        if (first) {
            out = e;
            first = false;
        } else {
            out += e;
        }
    }
    if (first) {
        auto vs = exponent(t->irreps[0]).vars();
        out = PuiseuxSeries(vs, order * vs->D);
    }
    return out;
}

HurwitzGF burnside(const MultiPartition& nu, const MultiPartition& mu, long order) {
    HurwitzGF h;
    h.n = mu.n();
    h.nu = nu;
    h.mu = mu;
    auto vs = gw_vars(h.n);
    if (nu.size() != mu.size()) {
        h.size_mismatch = true;
        h.value = PuiseuxSeries(vs, order * vs->D);
        return h;
    }
    h.value = character_sum(
        nu, mu,
        [&](const MultiPartition& lam) {
            CentralChars cc = central_chars(lam);
            PuiseuxSeries e = PuiseuxSeries::variable(vs, 0, CycNum(cc.fT));
            for (int i = 1; i < h.n; ++i) e += PuiseuxSeries::variable(vs, i, cc.f[i]);
            return e;
        },
        order);
    return h;
}

PuiseuxSeries h_tilde(const MultiPartition& nu, const MultiPartition& mu, const mpq_class& a, long order) {
    auto vs = gw_vars(mu.n());
    if (nu.size() != mu.size()) throw DomainError("h_tilde: size mismatch");
    auto t = char_table(mu.n(), mu.size());
    int cm = t->class_index(mu), cn = t->class_index(nu);
    CycNum w(frac(1, t->z[cm] * t->z[cn]));
    PuiseuxSeries out(vs, order * vs->D);
    for (size_t l = 0; l < t->irreps.size(); ++l) {
        CycNum c = t->chi[l][cm] * t->chi[l][cn];
        if (c.is_zero()) continue;
        out += tilde_exponential(t->irreps[l], a, order).scaled(c * w);
    }
    return out;
}

CycNum wreath_hurwitz_count_cyc(const MultiPartition& nu, const MultiPartition& mu, int r,
                                const std::vector<int>& gamma) {
    int n = mu.n();
    if (static_cast<int>(gamma.size()) != n - 1) throw DomainError("gamma needs one entry per nontrivial twist");
    long deg = r;
    for (int g : gamma) deg += g;
    HurwitzGF h = burnside(nu, mu, deg + 1);
    if (h.size_mismatch) return CycNum(0);
    Exp e{};
    e[0] = static_cast<int16_t>(r);
    mpq_class scale = factorial_q(r);
    for (int i = 1; i < n; ++i) {
        e[i] = static_cast<int16_t>(gamma[i - 1]);
        scale *= factorial_q(gamma[i - 1]);
    }
    return h.value.coeff(e) * CycNum(scale);
}

mpq_class wreath_hurwitz_count(const MultiPartition& nu, const MultiPartition& mu, int r,
                               const std::vector<int>& gamma) {
    CycNum c = wreath_hurwitz_count_cyc(nu, mu, r, gamma);
    if (!c.is_rational()) throw DomainError("Hurwitz count is not rational");
    return c.rational();
}

std::vector<std::vector<CycNum>> contraction_matrix(int n, int d, long k) {
    auto t = char_table(n, d);
    size_t N = t->irreps.size();
    std::vector<std::vector<CycNum>> B(N, std::vector<CycNum>(N));
    for (size_t c = 0; c < t->classes.size(); ++c) {
        const auto& nu = t->classes[c];
        int gc = t->class_index(k < 0 ? nu.negate() : nu.g(k));
        CycNum iz(frac(1, t->z[c]));
        for (size_t l = 0; l < N; ++l) {
            if (t->chi[l][c].is_zero()) continue;
            CycNum a = t->chi[l][c] * iz;
            for (size_t s = 0; s < N; ++s)
                if (!t->chi[s][gc].is_zero()) B[l][s] += a * t->chi[s][gc];
        }
    }
    return B;
}

namespace {

// sum_{lam,sig} B[lam][sig] chi_sig(mu)/z_mu W_lam(a_w) E_sig(a_e), one series per class mu
std::vector<PuiseuxSeries> contracted_relation(int n, int s, const std::vector<std::vector<CycNum>>& B,
                                               const mpq_class& aw, const mpq_class& ae, long order,
                                               std::vector<long>* support) {
    auto t = char_table(n, s);
    auto vs = gw_vars(n);
    size_t N = t->irreps.size();
    std::vector<LogLinear> W, E;
    for (const auto& lam : t->irreps) {
        W.push_back(dt_vertex_image(lam, aw, order));
        E.push_back(framing_exponential(lam, ae));
    }
    std::map<std::pair<size_t, size_t>, PuiseuxSeries> prod;
    for (size_t l = 0; l < N; ++l)
        for (size_t g = 0; g < N; ++g)
            if (!B[l][g].is_zero()) prod.emplace(std::pair{l, g}, (W[l] * E[g]).expand(order));
    std::vector<PuiseuxSeries> out;
    for (size_t c = 0; c < t->classes.size(); ++c) {
        PuiseuxSeries acc(vs, order * vs->D);
        std::set<Exp> sup;
        CycNum iz(frac(1, t->z[c]));
        for (const auto& [lg, p] : prod) {
            CycNum w = B[lg.first][lg.second] * t->chi[lg.second][c];
            if (w.is_zero()) continue;
            add_support(p, sup);
            acc += p.scaled(w * iz);
        }
        if (support) support->push_back(static_cast<long>(sup.size()));
        out.push_back(acc);
    }
    return out;
}

}  // namespace

CheckReport check_R1(int n, int d, const mpq_class& a, long order) {
    CheckReport rep;
    rep.name = "relation R-1 a=" + a.get_str();
    for (int s = 1; s <= d; ++s) {
        auto t = char_table(n, s);
        auto B = contraction_matrix(n, s, -1);
        auto rhs = contracted_relation(n, s, B, a, a, order, nullptr);
        auto lhs = gw_vertex_family(n, s, 0, order);
        for (size_t c = 0; c < t->classes.size(); ++c) {
            compare_series(lhs[c], rhs[c], t->classes[c].str(), rep);
        }
    }
    return rep;
}

CheckReport check_R2(int n, int d, int k, long order) {
    CheckReport rep;
    rep.name = "relation R-2 k=" + std::to_string(k);
    if (k <= 0 || k >= n) throw DomainError("R-2 needs 1 <= k <= n-1");
    auto vs = gw_vars(n);
    for (int s = 1; s <= d; ++s) {
        auto t = char_table(n, s);
        auto B = contraction_matrix(n, s, k);
        std::vector<long> sup;
        auto sums = contracted_relation(n, s, B, 0, frac(k, n), order, &sup);
        for (size_t c = 0; c < t->classes.size(); ++c) {
            if (t->classes[c][0].length() == 0) continue;
            compare_series(sums[c], PuiseuxSeries(vs, order * vs->D), t->classes[c].str(), rep);
            rep.coefficients += sup[c];
        }
    }
    return rep;
}

CheckReport check_relations(const std::string& which, int n, int d, int k, const mpq_class& a, long order) {
    if (which == "R1") return check_R1(n, d, a, order);
    if (which == "R2") return check_R2(n, d, k, order);
    throw DomainError("unknown relation " + which);
}

CheckReport check_hurwitz_identities(int n, int d, long order) {
    CheckReport rep;
    rep.name = "hurwitz identities";
    std::vector<std::string> names{"u"};
    for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("v");
    for (int i = 1; i < n; ++i) names.push_back("y" + std::to_string(i));
    auto vs = make_varset(names, 1);
    auto lin = [&](const MultiPartition& lam, bool left, bool right) {
        CentralChars cc = central_chars(lam);
        PuiseuxSeries e(vs);
        for (int side = 0; side < 2; ++side) {
            if ((side == 0 && !left) || (side == 1 && !right)) continue;
            int off = side * n;
            e += PuiseuxSeries::variable(vs, off, CycNum(cc.fT));
            for (int i = 1; i < n; ++i) e += PuiseuxSeries::variable(vs, off + i, cc.f[i]);
        }
        return e;
    };
    for (int s = 1; s <= d; ++s) {
        auto t = char_table(n, s);
        for (const auto& nu : t->classes)
            for (const auto& mu : t->classes) {
                HurwitzGF h = burnside(nu, mu.negate(), 1);
                CycNum expect = nu == mu ? CycNum(frac(1, mu.z())) : CycNum(0);
                compare_series(h.value, PuiseuxSeries::constant(gw_vars(n), expect), "orth " + nu.str() + mu.str(),
                               rep, 1);
                auto lhs = character_sum(nu, mu, [&](const MultiPartition& l) { return lin(l, true, true); }, order);
                PuiseuxSeries rhs(vs, order);
                for (const auto& sg : t->classes) {
                    auto a = character_sum(nu, sg, [&](const MultiPartition& l) { return lin(l, true, false); }, order);
                    auto b = character_sum(sg.negate(), mu, [&](const MultiPartition& l) { return lin(l, false, true); },
                                           order);
                    rhs += (a * b).scaled(CycNum(sg.z()));
                }
                compare_series(lhs, rhs, "degeneration " + nu.str() + mu.str(), rep);
            }
    }
    return rep;
}

PhiReport phi_matrix(int n, int d, long order, long solve_order) {
    PhiReport R;
    R.n = n;
    R.d = d;
    R.check.name = "appendix matrix";
    R.rows = c_set(n, d);
    R.cols = b_set(n, d);
    if (R.rows.size() != R.cols.size()) {
        R.check.fail({"index sets", "", std::to_string(R.rows.size()), std::to_string(R.cols.size())});
        return R;
    }
    if (n == 1 || R.cols.empty()) return R;
    for (const auto& eta : R.cols) R.hbar.push_back(eta_data(eta).hbar1);
    size_t N = R.rows.size();

    // specialization u = x_2 = ... = 0 of the equal-size entries
    auto vs = gw_vars(n);
    long K = order;
    std::map<Partition, long> hsum;
    for (size_t c = 0; c < N; ++c) hsum[R.cols[c].underlying()] += R.hbar[c];
    for (const auto& [tau, s] : hsum) K = std::max(K, s + 2);
    R.phi_x1.assign(N, std::vector<PuiseuxSeries>(N, PuiseuxSeries(vs, K)));
    for (size_t r = 0; r < N; ++r) {
        const auto& [mu, k, src] = R.rows[r];
        for (size_t c = 0; c < N; ++c) {
            const auto& eta = R.cols[c];
            if (eta.size() != mu.size()) continue;
            CycNum scale = xi2n(n, -1) * CycNum(frac(k, n));
            auto e = character_sum(
                eta.g(k), mu,
                [&](const MultiPartition& sig) {
                    return PuiseuxSeries::variable(vs, 1, scale * central_chars(sig).f[1]);
                },
                K);
            R.phi_x1[r][c] = e.scaled(CycNum(eta.z()));
        }
    }

    // upper block-triangular in |eta| and block diagonal across underlying partitions
    for (size_t r = 0; r < N; ++r)
        for (size_t c = 0; c < N; ++c) {
            const auto& mu = R.rows[r].mu;
            const auto& eta = R.cols[c];
            if (eta.size() != mu.size() || eta.underlying() == mu.underlying()) continue;
            compare_series(R.phi_x1[r][c], PuiseuxSeries(vs, K), "off-block " + mu.str() + " " + eta.str(), R.check);
        }

    // sub-blocks Phi^i_h inside each Phi_tau
    std::map<std::tuple<Partition, int, std::vector<int>>, PhiBlock> blocks;
    auto sigma_of = [&](int tau1, int h) {
        int c = std::gcd(tau1, n);
        std::vector<int> s;
        for (int k = 1; k < n; ++k)
            if (mod(-h + static_cast<long>(tau1) * k, n) == mod(-(h % c), n)) s.push_back(k);
        return s;
    };
    for (size_t c = 0; c < N; ++c) {
        const auto& eta = R.cols[c];
        Partition tau = eta.underlying();
        int cc = std::gcd(tau[0], n);
        int h1 = eta_data(eta).first.twist;
        int i = h1 / cc + 1;
        auto key = std::make_tuple(tau, i, twisting_partition(drop_first(eta)));
        auto& b = blocks[key];
        b.tau = tau;
        b.i = i;
        b.h = std::get<2>(key);
        b.cols.push_back(static_cast<int>(c));
        if (sigma_of(tau[0], h1) != eta_data(eta).sigma)
            R.check.fail({"sigma " + eta.str(), "", "", ""});
    }
    for (size_t r = 0; r < N; ++r) {
        const auto& [mu, k, src] = R.rows[r];
        Partition tau = mu.underlying();
        int cc = std::gcd(tau[0], n);
        if (appendix_order(mu).front().twist != 0) R.check.fail({"m_1 " + mu.str(), "", "", ""});
        int found = 0;
        for (int i = 1; i * cc <= n; ++i) {
            int rep_h = std::max((i - 1) * cc, 1);
            if (rep_h >= i * cc || rep_h >= n) continue;
            auto s = sigma_of(tau[0], rep_h);
            if (std::find(s.begin(), s.end(), k) == s.end()) continue;
            ++found;
            auto h = twisting_partition(drop_first(mu).negate().g(k));
            auto key = std::make_tuple(tau, i, h);
            auto& b = blocks[key];
            b.tau = tau;
            b.i = i;
            b.h = h;
            b.rows.push_back(static_cast<int>(r));
        }
        if (found != 1) R.check.fail({"row " + mu.str() + " k=" + std::to_string(k), "", std::to_string(found), "1"});
    }

    for (auto& [key, b] : blocks) {
        std::string label = b.tau.str() + " i=" + std::to_string(b.i);
        if (b.rows.size() != b.cols.size()) {
            R.check.fail({"non-square block " + label, "", std::to_string(b.rows.size()), std::to_string(b.cols.size())});
            continue;
        }
        size_t M = b.rows.size();
        std::vector<std::vector<CycNum>> L(M, std::vector<CycNum>(M)), V(M, std::vector<CycNum>(M));
        CycNum pre(1);
        for (size_t y = 0; y < M; ++y) {
            const auto& [mu, k, src] = R.rows[b.rows[y]];
            pre *= CycNum(frac(1, mu.aut()));
            for (size_t x = 0; x < M; ++x) {
                const auto& eta = R.cols[b.cols[x]];
                int hb = R.hbar[b.cols[x]];
                const auto& e = R.phi_x1[b.rows[y]][b.cols[x]];
                Exp ex{};
                ex[1] = static_cast<int16_t>(hb);
                if (e.valuation() < hb) R.check.fail({"leading degree " + label, exp_str(*vs, e.terms().front().e), "", ""});
                L[y][x] = e.coeff(ex);
                mpq_class kn = frac(k, n);
                CycNum base = xi2n(n, -1) * CycNum(kn * eta_data(eta).first.size);
                CycNum predicted = CycNum(frac(eta.aut(), mu.aut())) * base.pow(hb) * CycNum(frac(1, factorial(hb)));
                if (L[y][x] != predicted) R.check.fail({"leading term " + label, exp_str(*vs, ex), L[y][x].str(), predicted.str()});
                mpq_class p = 1;
                for (int j = 0; j < hb; ++j) p *= kn;
                V[y][x] = CycNum(p);
            }
        }
        for (size_t x = 0; x < M; ++x) {
            const auto& eta = R.cols[b.cols[x]];
            int hb = R.hbar[b.cols[x]];
            CycNum f = CycNum(eta.aut()) * (xi2n(n, -1) * CycNum(eta_data(eta).first.size)).pow(hb) *
                       CycNum(frac(1, factorial(hb)));
            pre *= f;
        }
        b.det = det(L);
        b.det_closed = pre * det(V);
        ++R.check.cases;
        R.check.coefficients += static_cast<long>(M * M);
        if (b.det.is_zero()) R.check.fail({"singular leading block " + label, "", "0", "nonzero"});
        if (b.det != b.det_closed) R.check.fail({"leading determinant " + label, "", b.det.str(), b.det_closed.str()});
        R.blocks.push_back(b);
    }

    // columns: every entry of Phi_tau has degree >= hbar of its column; det(Phi_tau) != 0
    for (const auto& [tau, s] : hsum) {
        std::vector<size_t> rs, cs;
        for (size_t r = 0; r < N; ++r)
            if (R.rows[r].mu.underlying() == tau) rs.push_back(r);
        for (size_t c = 0; c < N; ++c)
            if (R.cols[c].underlying() == tau) cs.push_back(c);
        if (rs.size() != cs.size()) continue;
        std::vector<std::vector<PuiseuxSeries>> A;
        for (size_t r : rs) {
            A.emplace_back();
            for (size_t c : cs) {
                const auto& e = R.phi_x1[r][c];
                if (e.valuation() < R.hbar[c]) R.check.fail({"column degree " + tau.str(), "", "", ""});
                A.back().push_back(e);
            }
        }
        PuiseuxSeries D = series_det(A, vs, K);
        ++R.check.cases;
        if (D.is_zero()) R.check.fail({"singular block " + tau.str(), "", "0", "nonzero"});
        else
            R.check.notes.push_back("det Phi_" + tau.str() + " has x1-valuation " + std::to_string(D.valuation()) +
                                    " (sum of hbar = " + std::to_string(s) + ")");
    }

    if (solve_order > 0) {
        long P = solve_order + 2L * d;
        std::map<MultiPartition, PuiseuxSeries> alpha;
        for (const auto& eta : R.cols) alpha.emplace(eta, gw_vertex(eta, 0, P));
        for (size_t r = 0; r < N; ++r) {
            const auto& [mu, k, src] = R.rows[r];
            mpq_class kn = frac(k, n);
            PuiseuxSeries lhs(vs, P), beta(vs, P);
            for (const auto& eta : R.cols) {
                if (eta.size() > mu.size()) continue;
                PuiseuxSeries entry(vs, P);
                if (eta.size() == mu.size()) {
                    entry = h_tilde(eta.g(k), mu, kn, P).scaled(CycNum(eta.z()));
                } else {
                    for (const auto& tau : untwisted_classes(n, mu.size() - eta.size())) {
                        auto nu = tau + eta;
                        entry += (untwisted_vertex(tau, P) * h_tilde(nu.g(k), mu, kn, P)).scaled(CycNum(nu.z()));
                    }
                }
                lhs += entry * alpha.at(eta);
            }
            for (const auto& tau : untwisted_classes(n, mu.size()))
                beta -= (untwisted_vertex(tau, P) * h_tilde(tau.g(k), mu, kn, P)).scaled(CycNum(tau.z()));
            compare_series(lhs, beta, "Phi alpha = beta at " + mu.str() + " k=" + std::to_string(k), R.check,
                           solve_order);
        }
    }
    return R;
}

}  // namespace orbivertex
