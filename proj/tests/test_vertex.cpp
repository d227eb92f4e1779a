#include "doctest.h"
#include "orbivertex/fock.hpp"
#include "orbivertex/vertex.hpp"
#include "orbivertex/wreath_char.hpp"
#include "oracles.hpp"

using namespace orbivertex;

namespace {

CycNum coeff_u(const PuiseuxSeries& s, int p) {
    Exp e{};
    e[0] = static_cast<int16_t>(p);
    return s.coeff(e);
}

}  // namespace

TEST_CASE("change of variables constants") {
    auto cv = theorem_map(2);
    auto vs = cv.source;
    Exp q1{};
    q1[1] = static_cast<int16_t>(vs->D);
    auto img = change_of_variables(PuiseuxSeries::monomial(vs, q1), cv, 6);
    // q_1 -> -exp(i x_1)
    Exp x1{};
    x1[1] = 1;
    CHECK(img.coeff(Exp{}) == CycNum(-1));
    CHECK(img.coeff(x1) == -CycNum::I());
    // q = q_0 q_1 -> e^{iu}
    Exp q{};
    q[0] = q[1] = static_cast<int16_t>(vs->D);
    auto iq = change_of_variables(PuiseuxSeries::monomial(vs, q), cv, 6);
    Exp u{};
    u[0] = 1;
    CHECK(iq.coeff(Exp{}) == CycNum(1));
    CHECK(iq.coeff(u) == CycNum::I());
    CHECK(iq.coeff(x1) == CycNum(0));
    // ring homomorphism on a product
    Exp q0{};
    q0[0] = static_cast<int16_t>(vs->D);
    auto a = change_of_variables(PuiseuxSeries::monomial(vs, q0), cv, 8);
    auto b = change_of_variables(PuiseuxSeries::monomial(vs, q1), cv, 8);
    CheckReport rep;
    compare_series((a * b).truncated(8), change_of_variables(PuiseuxSeries::monomial(vs, q), cv, 8), "hom", rep);
    CHECK(rep.pass);
}

TEST_CASE("DT vertex examples") {
    auto one = MultiPartition(1, {Partition({1})});
    auto vs = q_vars(1);
    auto p = dt_vertex(one, 0, 6);
    // -q^{1/2} / (1 - q)
    for (int k = 0; k < 5; ++k) {
        Exp e{};
        e[0] = static_cast<int16_t>(2 * k + 1);
        CHECK(p.coeff(e) == CycNum(-1));
    }
    CHECK(p.terms().size() == 6);
    // framing at a = 1 is trivial for a single box at n = 1
    CheckReport rep;
    compare_series(dt_vertex(one, 1, 6), p, "a=1", rep);
    CHECK(rep.pass);
    CHECK_THROWS_AS(dt_vertex(one, mpq_class(1, 2), 6), DomainError);
    // n = 2, lambda-bar = (1,1): sign -1, (-1)^1, q^{1/2}, q_1, hooks q0q1 and q0
    auto col = n_quotient(Partition({1, 1}), 2);
    auto F = dt_vertex_factored(col, 0);
    CHECK(F.coeff == CycNum(1));
    CHECK(F.mono[0] == 2);
    CHECK(F.mono[1] == 6);
    CHECK(F.den.size() == 2);
}

TEST_CASE("one-leg vertex at n = 1 is the csc factor") {
    auto one = MultiPartition(1, {Partition({1})});
    auto v = gw_vertex(one, 0, 6);
    CHECK(coeff_u(v, -1) == -CycNum::I());
    CHECK(coeff_u(v, 1) == -CycNum::I() * CycNum(frac(1, 24)));
    for (int d = 1; d <= 3; ++d) {
        auto mu = MultiPartition(1, {Partition({d})});
        CheckReport rep;
        compare_series(gw_vertex(mu, 0, 10), untwisted_vertex(mu, 10), mu.str(), rep);
        CHECK(rep.pass);
    }
    for (mpq_class c : {mpq_class(1, 2), mpq_class(1), mpq_class(3, 2)}) {
        CheckReport rep;
        compare_series(csc_series(c, gw_vars(1), 0, 10), oracle::csc_by_inversion(c, 10), "csc", rep);
        CHECK(rep.pass);
    }
}

TEST_CASE("untwisted parts factor out") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 2; ++d) {
            auto t = char_table(n, d);
            auto fam = gw_vertex_family(n, d, 0, 6);
            for (size_t c = 0; c < t->classes.size(); ++c) {
                const auto& mu = t->classes[c];
                auto rest = mu.tw();
                PuiseuxSeries tw = rest.empty() ? PuiseuxSeries::constant(gw_vars(n), CycNum(1))
                                                : gw_vertex(rest, 0, 6 + mu.untw().length());
                auto expect = (untwisted_vertex(mu.untw(), 6 + rest.length()) * tw).truncated(6);
                CheckReport rep;
                compare_series(fam[c], expect, mu.str(), rep);
                CHECK_MESSAGE(rep.pass, mu.str());
            }
        }
}

TEST_CASE("GW character sum projects back to the DT vertex") {
    for (int n = 1; n <= 2; ++n)
        for (int d = 1; d <= 2; ++d) {
            auto t = char_table(n, d);
            auto vs = q_vars(n);
            std::vector<PuiseuxSeries> V;
            for (const auto& mu : t->classes) {
                PuiseuxSeries s(vs, 8 * vs->D);
                for (const auto& lam : t->irreps)
                    s += dt_vertex(lam, 0, 8).scaled(t->at(lam, mu) * CycNum(frac(1, mu.z())));
                V.push_back(s);
            }
            for (const auto& lam : t->irreps) {
                PuiseuxSeries back(vs, 8 * vs->D);
                for (size_t c = 0; c < t->classes.size(); ++c)
                    back += V[c].scaled(t->chi[t->irrep_index(lam)][c].conj());
                CheckReport rep;
                compare_series(back, dt_vertex(lam, 0, 8), lam.str(), rep);
                CHECK(rep.pass);
            }
        }
}

TEST_CASE("reduction identities") {
    for (int n = 1; n <= 3; ++n) {
        int d = n == 3 ? 2 : 3;
        for (const char* w : {"I", "II", "III"}) {
            auto rep = check_reduction(w, n, d, 6);
            std::string what = std::string(w) + " n=" + std::to_string(n);
            if (rep.first) what += " " + rep.first->label + " " + rep.first->monomial;
            CHECK_MESSAGE(rep.pass, what);
            if (n > 1 || std::string(w) != "III") CHECK(rep.coefficients > 0);
        }
    }
}
