#include "orbivertex/loop_schur.hpp"

#include <functional>
#include <set>

#include "orbivertex/fock.hpp"

namespace orbivertex {

PuiseuxSeries loop_schur_ssyt(const Partition& lbar, int n, long order, int k) {
    auto vs = q_vars(n);
    const long D = vs->D;
    long P = order * D;
    Exp shift = content_monomial(lbar, n);
    for (auto& v : shift) v = static_cast<int16_t>(v * k / n);
    long budget = P - vs->grade(shift);  // scaled grade left for the entries

    std::vector<std::pair<int, int>> boxes;
    for (int i = 1; i <= lbar.length(); ++i)
        for (int j = 1; j <= lbar[i - 1]; ++j) boxes.push_back({i, j});
    std::vector<std::vector<int>> T(lbar.length());
    for (int i = 0; i < lbar.length(); ++i) T[i].assign(lbar[i], 0);

    std::vector<PuiseuxSeries::Term> raw;
    Exp e{};
    std::function<void(size_t, long)> rec = [&](size_t b, long used) {
        if (b == boxes.size()) {
            Exp m = e;
            for (int c = 0; c < n; ++c) m[c] = static_cast<int16_t>(m[c] + shift[c]);
            raw.push_back({m, vs->grade(m), CycNum(1)});
            return;
        }
        auto [i, j] = boxes[b];
        int lo = 0;
        if (j > 1) lo = std::max(lo, T[i - 1][j - 2]);
        if (i > 1) lo = std::max(lo, T[i - 2][j - 1] + 1);
        int c = box_color(i, j, n);
        for (int w = lo; used + w * D < budget; ++w) {
            T[i - 1][j - 1] = w;
            e[c] = static_cast<int16_t>(e[c] + w * D);
            rec(b + 1, used + w * D);
            e[c] = static_cast<int16_t>(e[c] - w * D);
        }
    };
    rec(0, 0);
    return PuiseuxSeries::from_map(vs, P, std::move(raw));
}

FactoredSeries loop_schur_factored(const MultiPartition& lam) { return loop_schur_factored(combine(lam), lam.n()); }

FactoredSeries loop_schur_factored(const Partition& lbar, int n) {
    auto vs = q_vars(n);
    FactoredSeries F(vs);
    auto w = row_weights(lbar, n);
    for (int c = 0; c < n; ++c) F.mono[c] = static_cast<int16_t>(w[c] * vs->D);
    for (const auto& row : hook_colors(lbar, n))
        for (const auto& h : row) {
            Exp m{};
            for (int c = 0; c < n; ++c) m[c] = static_cast<int16_t>(h[c] * vs->D);
            F.den.push_back({CycNum(1), m});
        }
    return F;
}

PuiseuxSeries loop_schur_closed(const MultiPartition& lam, long order) { return loop_schur_factored(lam).expand(order); }

Exp content_monomial(const Partition& lbar, int n) {
    const int D = 2 * n;
    Exp e{};
    for (int i = 1; i <= lbar.length(); ++i)
        for (int j = 1; j <= lbar[i - 1]; ++j) {
            int c = box_color(i, j, n);
            e[c] = static_cast<int16_t>(e[c] + (j - i) * D);
        }
    return e;
}

FactoredSeries shifted_schur_factored(const MultiPartition& lam, int k) {
    return shifted_schur_factored(combine(lam), lam.n(), k);
}

FactoredSeries shifted_schur_factored(const Partition& lbar, int n, int k) {
    FactoredSeries F = loop_schur_factored(lbar, n);
    Exp c = content_monomial(lbar, n);
    for (int i = 0; i < n; ++i) F.mono[i] = static_cast<int16_t>(F.mono[i] + c[i] * k / n);
    return F;
}

PuiseuxSeries shifted_schur(const MultiPartition& lam, int k, long order) {
    return shifted_schur_factored(lam, k).expand(order);
}

CheckReport verify_strip_theorem(const MultiPartition& lam, int l, int k, long order) {
    int n = lam.n();
    auto vs = q_vars(n);
    CheckReport rep;
    rep.name = "strip theorem";
    PuiseuxSeries rhs(vs, order * vs->D);
    std::set<Exp> support;  // monomials touched by any summand
    for (const auto& st : add_border_strips(combine(lam), l * n, n)) {
        auto sig = n_quotient(st.shape, n);
        PuiseuxSeries s = k == 0 ? loop_schur_closed(sig, order) : shifted_schur(sig, k, order);
        for (const auto& t : s.terms()) support.insert(t.e);
        rhs += st.ht % 2 ? -s : s;
    }
    PuiseuxSeries lhs(vs, order * vs->D);
    if (k == 0) {
        FactoredSeries F = loop_schur_factored(lam);
        Exp m{};
        for (int c = 0; c < n; ++c) m[c] = static_cast<int16_t>(l * vs->D);
        F.den.push_back({CycNum(1), m});
        lhs = F.expand(order);
    }
    std::string label = lam.str() + " l=" + std::to_string(l) + " k=" + std::to_string(k);
    compare_series(lhs, rhs, label, rep, order * vs->D);
    for (const auto& t : lhs.terms()) support.insert(t.e);
    rep.coefficients = static_cast<long>(support.size());
    return rep;
}

}  // namespace orbivertex
