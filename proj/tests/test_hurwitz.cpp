#include <map>
#include <numeric>

#include "doctest.h"
#include "orbivertex/hurwitz.hpp"
#include "orbivertex/vertex.hpp"

using namespace orbivertex;

namespace {

// Z_n wr S_d acting on Z_n x {0..d-1}; a point (c, i) is stored as c*d + i
struct Wreath {
    int n, d;
    using Elem = std::vector<int>;

    Elem make(const std::vector<int>& v, const std::vector<int>& pi) const {
        Elem e(n * d);
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < d; ++i) e[c * d + i] = ((c + v[pi[i]]) % n) * d + pi[i];
        return e;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem e(n * d);
        for (int p = 0; p < n * d; ++p) e[p] = a[b[p]];
        return e;
    }
    std::vector<Elem> all() const {
        std::vector<Elem> out;
        std::vector<int> pi(d);
        std::iota(pi.begin(), pi.end(), 0);
        do {
            std::vector<int> v(d, 0);
            while (true) {
                out.push_back(make(v, pi));
                int j = 0;
                while (j < d && ++v[j] == n) v[j++] = 0;
                if (j == d) break;
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
        return out;
    }
    MultiPartition type(const Elem& e) const {
        std::vector<Part> ps;
        std::vector<bool> seen(d, false);
        for (int i = 0; i < d; ++i) {
            if (seen[i]) continue;
            int len = 0, p = i;
            do {
                seen[p % d] = true;
                p = e[p];
                ++len;
            } while (p % d != i);
            ps.push_back({len, p / d});
        }
        return MultiPartition::from_parts(n, ps);
    }
};

// (1/|G|) #{(a, t_1..t_r, y_1..y_g, b) : product = 1} with a of type nu, t_j untwisted
// transpositions, y_j single twisted points of twist 1, b of type mu
mpq_class brute_count(int n, const MultiPartition& nu, const MultiPartition& mu, int r, int g) {
    int d = mu.size();
    Wreath W{n, d};
    auto G = W.all();
    std::vector<Part> tp{{2, 0}}, yp{{1, 1}};
    for (int i = 2; i < d; ++i) tp.push_back({1, 0});
    for (int i = 1; i < d; ++i) yp.push_back({1, 0});
    auto T = MultiPartition::from_parts(n, tp), Y = MultiPartition::from_parts(n, yp);
    std::map<Wreath::Elem, long> dist;
    for (const auto& e : G)
        if (W.type(e) == nu) dist[e] += 1;
    auto step = [&](const MultiPartition& cls) {
        std::map<Wreath::Elem, long> next;
        for (const auto& [x, c] : dist)
            for (const auto& e : G)
                if (W.type(e) == cls) next[W.mul(x, e)] += c;
        dist = std::move(next);
    };
    for (int j = 0; j < r; ++j) step(T);
    for (int j = 0; j < g; ++j) step(Y);
    long total = 0;
    for (const auto& [x, c] : dist) {
        auto inv = x;
        for (int p = 0; p < n * d; ++p) inv[x[p]] = p;
        if (W.type(inv) == mu) total += c;
    }
    return frac(total, static_cast<long>(G.size()));
}

std::string describe(const CheckReport& rep) {
    std::string s = rep.name;
    if (rep.first) s += " " + rep.first->label + " " + rep.first->monomial + " " + rep.first->lhs + " vs " + rep.first->rhs;
    return s;
}

}  // namespace

TEST_CASE("Hurwitz counts against brute-force enumeration") {
    auto mp = [](int n, const std::vector<Part>& p) { return MultiPartition::from_parts(n, p); };
    // two transpositions joining (1,1) to itself: 1/2 (disconnected, weighted by 1/|G|)
    CHECK(wreath_hurwitz_count(mp(1, {{1, 0}, {1, 0}}), mp(1, {{1, 0}, {1, 0}}), 2, {}) == mpq_class(1, 2));
    for (int n = 1; n <= 2; ++n)
        for (int d = 1; d <= 3; ++d)
            for (const auto& nu : multipartitions_of(n, d))
                for (const auto& mu : multipartitions_of(n, d))
                    for (int r = 0; r <= (d == 3 ? 2 : 3); ++r)
                        for (int g = 0; g <= (n == 2 ? 2 : 0); ++g) {
                            std::vector<int> gamma(n - 1, g);
                            mpq_class got = wreath_hurwitz_count(nu, mu, r, gamma);
                            mpq_class want = brute_count(n, nu, mu, r, g);
                            std::string what =
                                nu.str() + " " + mu.str() + " r=" + std::to_string(r) + " g=" + std::to_string(g);
                            CHECK_MESSAGE(got == want, what);
                        }
}

TEST_CASE("Htilde is the rescaled Burnside series") {
    for (int n = 2; n <= 3; ++n) {
        auto t = char_table(n, 2);
        mpq_class a(1, n);
        for (const auto& nu : t->classes)
            for (const auto& mu : t->classes) {
                auto h = burnside(nu, mu, 5).value.map_coeffs([&](const PuiseuxSeries::Term& tm) {
                    CycNum s = (CycNum::I() * CycNum(a)).pow(tm.e[0]);
                    for (int i = 1; i < n; ++i) s *= (CycNum(a) * CycNum::root(2L * n, -i)).pow(tm.e[i]);
                    return s;
                });
                CheckReport rep;
                compare_series(h_tilde(nu, mu, a, 5), h, nu.str() + mu.str(), rep);
                CHECK_MESSAGE(rep.pass, describe(rep));
            }
    }
}

TEST_CASE("degeneration and orthogonality") {
    for (int n = 1; n <= 3; ++n) {
        auto rep = check_hurwitz_identities(n, n == 3 ? 1 : 2, 4);
        CHECK_MESSAGE(rep.pass, describe(rep));
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("relation R-1 agrees with the uncontracted sum") {
    int n = 2, d = 2;
    mpq_class a(1, 2);
    long order = 5;
    auto t = char_table(n, d);
    auto rep = check_R1(n, d, a, order);
    CHECK_MESSAGE(rep.pass, describe(rep));
    for (const auto& mu : t->classes) {
        PuiseuxSeries rhs(gw_vars(n), order);
        for (const auto& nu : t->classes)
            rhs += (gw_vertex(nu, a, order) * h_tilde(nu.negate(), mu, a, order)).scaled(CycNum(nu.z()));
        CheckReport r;
        compare_series(gw_vertex(mu, 0, order), rhs, mu.str(), r);
        CHECK_MESSAGE(r.pass, describe(r));
    }
}

TEST_CASE("relation R-2 agrees with the uncontracted sum") {
    int n = 2, d = 2, k = 1;
    long order = 5;
    auto t = char_table(n, d);
    for (const auto& mu : t->classes) {
        if (mu[0].empty()) continue;
        PuiseuxSeries s(gw_vars(n), order);
        for (const auto& nu : t->classes)
            s += (gw_vertex(nu, 0, order) * h_tilde(nu.g(k), mu, frac(k, n), order)).scaled(CycNum(nu.z()));
        CheckReport r;
        compare_series(s, PuiseuxSeries(gw_vars(n), order), mu.str(), r);
        CHECK_MESSAGE(r.pass, describe(r));
    }
}

TEST_CASE("localization relations, contracted") {
    for (int n = 1; n <= 3; ++n) {
        int d = n == 3 ? 2 : 3;
        for (mpq_class a : {mpq_class(0), mpq_class(1), mpq_class(1, n)}) {
            auto rep = check_R1(n, d, a, 6);
            CHECK_MESSAGE(rep.pass, describe(rep));
            CHECK(rep.coefficients > 0);
        }
        for (int k = 1; k < n; ++k) {
            auto rep = check_R2(n, d, k, 6);
            CHECK_MESSAGE(rep.pass, describe(rep));
            CHECK(rep.coefficients > 0);
        }
    }
}

TEST_CASE("invertibility matrix") {
    auto R = phi_matrix(2, 1, 4, 4);
    CHECK(R.rows.size() == 1);
    CHECK(R.blocks.size() == 1);
    CHECK_MESSAGE(R.check.pass, describe(R.check));
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= (n == 2 ? 3 : 2); ++d) {
            auto P = phi_matrix(n, d, 4, d <= 2 ? 4 : 0);
            CHECK_MESSAGE(P.check.pass, describe(P.check));
            CHECK(P.rows.size() == P.cols.size());
            for (const auto& b : P.blocks) {
                CHECK(b.rows.size() == b.cols.size());
                CHECK(!b.det.is_zero());
                CHECK(b.det == b.det_closed);
            }
        }
}
