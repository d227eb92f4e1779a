#include "orbivertex/suites.hpp"

#include "orbivertex/fock.hpp"
#include "orbivertex/gerbe.hpp"
#include "orbivertex/hurwitz.hpp"
#include "orbivertex/loop_schur.hpp"
#include "orbivertex/vertex.hpp"
#include "orbivertex/wreath_char.hpp"

namespace orbivertex {

namespace {

void expect(CheckReport& rep, bool ok, const std::string& label, const std::string& lhs = "",
            const std::string& rhs = "") {
    ++rep.cases;
    ++rep.coefficients;
    if (!ok) rep.fail({label, "", lhs, rhs});
}

}  // namespace

CheckReport suite_characters(int max_n, int max_nd) {
    CheckReport rep;
    rep.name = "character tables";
    for (int n = 1; n <= max_n; ++n)
        for (int d = 1; n * d <= max_nd; ++d) {
            auto t = char_table(n, d);
            size_t N = t->irreps.size();
            std::string tag = std::to_string(n) + "," + std::to_string(d);
            for (size_t a = 0; a < N; ++a)
                for (size_t b = 0; b < N; ++b) {
                    CycNum row, col;
                    for (size_t c = 0; c < N; ++c) {
                        row += t->chi[a][c] * t->chi[b][c].conj() * CycNum(frac(1, t->z[c]));
                        col += t->chi[c][a] * t->chi[c][b].conj();
                    }
                    expect(rep, row == CycNum(a == b ? 1 : 0), "row orthogonality " + tag, row.str());
                    expect(rep, col == CycNum(a == b ? t->z[a] : 0), "column orthogonality " + tag, col.str());
                }
            for (size_t l = 0; l < N; ++l)
                for (size_t c = 0; c < N; ++c) {
                    const auto& v = t->chi[l][t->class_index(t->classes[c].negate())];
                    expect(rep, v == t->chi[l][c].conj(), "conjugation " + t->irreps[l].str() + t->classes[c].str());
                }
        }
    return rep;
}

CheckReport suite_central_chars(int max_n, int max_d) {
    CheckReport rep;
    rep.name = "central characters";
    for (int n = 1; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d)
            for (const auto& lam : char_table(n, d)->irreps) {
                auto a = central_chars(lam), b = central_chars_from_table(lam);
                expect(rep, a.fT == b.fT, "f_T " + lam.str(), std::to_string(a.fT), std::to_string(b.fT));
                for (int i = 0; i < n; ++i)
                    expect(rep, a.f[i] == b.f[i], "f_" + std::to_string(i) + " " + lam.str(), a.f[i].str(),
                           b.f[i].str());
            }
    return rep;
}

CheckReport suite_quotients(int max_n, int max_size) {
    CheckReport rep;
    rep.name = "n-quotients";
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; n * d <= max_size; ++d) {
            long balanced_count = 0;
            for (const auto& p : partitions_of(n * d)) {
                if (!balanced(p, n)) continue;
                ++balanced_count;
                auto q = n_quotient(p, n);
                expect(rep, q.size() == d && combine(q) == p, "combine . quotient " + p.str(), combine(q).str(),
                       p.str());
            }
            auto all = multipartitions_of(n, d);
            expect(rep, balanced_count == static_cast<long>(all.size()), "bijection count n=" + std::to_string(n));
            for (const auto& lam : all)
                expect(rep, n_quotient(combine(lam), n) == lam, "quotient . combine " + lam.str());
        }
    return rep;
}

CheckReport suite_loop_schur(int max_n, int max_size, long order) {
    CheckReport rep;
    rep.name = "loop Schur functions";
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m * n <= max_size; ++m)
            for (const auto& lam : multipartitions_of(n, m)) {
                Partition lbar = combine(lam);
                compare_series(loop_schur_ssyt(lbar, n, order), loop_schur_closed(lam, order),
                               std::to_string(n) + ":" + lbar.str(), rep);
            }
    return rep;
}

CheckReport suite_strips(int max_n, int max_size, int max_l, long order) {
    CheckReport rep;
    rep.name = "border strip theorems";
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m * n <= max_size; ++m)
            for (const auto& lam : multipartitions_of(n, m))
                for (int l = 1; l <= max_l; ++l)
                    for (int k = 0; k < n; ++k) rep.merge(verify_strip_theorem(lam, l, k, order));
    return rep;
}

CheckReport suite_sign_lemma(int max_n, int max_d, int max_k, int shift) {
    CheckReport rep;
    rep.name = "sign ratio under strip addition";
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d <= max_d; ++d)
            for (const auto& lam : multipartitions_of(n, d))
                for (int k = 1; k <= max_k; ++k)
                    for (const auto& st : add_border_strips(combine(lam), k * n, n)) {
                        long before = sign_ratio(lam), after = sign_ratio(n_quotient(st.shape, n));
                        long predicted = ((*st.beta + st.ht + shift) % 2 ? -1 : 1) * before;
                        expect(rep, after == predicted,
                               std::to_string(n) + ":" + combine(lam).str() + " -> " + st.shape.str(),
                               std::to_string(after), std::to_string(predicted));
                    }
    return rep;
}

CheckReport suite_reduction(int max_n, int max_d, long order) {
    CheckReport rep;
    rep.name = "reduction identities";
    for (int n = 1; n <= max_n; ++n)
        for (const char* w : {"I", "II", "III"}) rep.merge(check_reduction(w, n, max_d, order));
    return rep;
}

CheckReport suite_relations(int max_n, int max_d, long order) {
    CheckReport rep;
    rep.name = "localization relations";
    for (int n = 1; n <= max_n; ++n) {
        std::vector<mpq_class> as{0, 1};
        if (n > 1) as.push_back(frac(1, n));
        for (const auto& a : as) rep.merge(check_R1(n, max_d, a, order));
        for (int k = 1; k < n; ++k) rep.merge(check_R2(n, max_d, k, order));
    }
    return rep;
}

CheckReport suite_appendix(int max_n, int max_d, long solve_order) {
    CheckReport rep;
    rep.name = "invertibility matrix";
    for (int n = 1; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) rep.merge(phi_matrix(n, d, 4, solve_order).check);
    return rep;
}

const std::vector<GerbeCase>& theorem2_cases() {
    static const std::vector<GerbeCase> cases{
        {1, 0, "-1", 1}, {1, 0, "-1", 2}, {2, 0, "-1", 1}, {2, 1, "-1/2", 1}, {2, 0, "-2", 1}};
    return cases;
}

CheckReport suite_theorem2(int max_n, int max_d, long order) {
    CheckReport rep;
    rep.name = "GW/DT for local gerbes";
    for (const auto& c : theorem2_cases()) {
        if (c.n > max_n || c.d > max_d) continue;
        rep.merge(verify_theorem2(LocalGerbe{c.n, c.k, parse_rational(c.b)}, c.d, order));
    }
    return rep;
}

}  // namespace orbivertex
