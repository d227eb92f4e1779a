#include "doctest.h"
#include "orbivertex/fock.hpp"
#include "orbivertex/wreath_char.hpp"
#include "oracles.hpp"

using namespace orbivertex;
using oracle::oracle_table;
using oracle::sym_char;

TEST_CASE("small tables") {
    auto t = char_table(1, 2);
    MultiPartition two(1, {Partition({2})}), ones(1, {Partition({1, 1})});
    CHECK(t->at(two, two) == CycNum(1));
    CHECK(t->at(two, ones) == CycNum(1));
    CHECK(t->at(ones, two) == CycNum(-1));
    CHECK(t->at(ones, ones) == CycNum(1));
    auto u = char_table(2, 1);
    auto a = parse_multipartition("2:(1^0)"), b = parse_multipartition("2:(1^1)");
    CHECK(u->at(a, a) == CycNum(1));
    CHECK(u->at(a, b) == CycNum(1));
    CHECK(u->at(b, b) == CycNum(-1));
}

TEST_CASE("tables match the group oracle") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {6, 1}}) {
        auto t = char_table(n, d);
        auto o = oracle_table(n, d, t->irreps, t->classes);
        for (size_t i = 0; i < t->irreps.size(); ++i)
            for (size_t c = 0; c < t->classes.size(); ++c) CHECK(t->chi[i][c] == o[i][c]);
    }
}

TEST_CASE("orthogonality and conjugation") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; n * d <= 6; ++d) {
            auto t = char_table(n, d);
            size_t N = t->irreps.size();
            for (size_t a = 0; a < N; ++a)
                for (size_t b = 0; b < N; ++b) {
                    CycNum row, col;
                    for (size_t c = 0; c < N; ++c) {
                        row += t->chi[a][c] * t->chi[b][c].conj() * CycNum(mpq_class(1, t->z[c]));
                        col += t->chi[c][a] * t->chi[c][b].conj();
                    }
                    CHECK(row == CycNum(a == b ? 1 : 0));
                    CHECK(col == CycNum(a == b ? t->z[a] : 0));
                }
            for (const auto& lam : t->irreps)
                for (const auto& mu : t->classes) CHECK(t->at(lam, mu.negate()) == t->at(lam, mu).conj());
        }
}

TEST_CASE("dimension and central characters") {
    CHECK(dimension(parse_multipartition("2:(1^0,1^1)")) == 2);
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            auto t = char_table(n, d);
            std::vector<Partition> c(n);
            c[0] = Partition(std::vector<int>(d, 1));
            for (const auto& lam : t->irreps) {
                CHECK(t->at(lam, MultiPartition(n, c)) == CycNum(dimension(lam)));
                auto a = central_chars(lam), b = central_chars_from_table(lam);
                CHECK(a.fT == b.fT);
                for (int i = 0; i < n; ++i) CHECK(a.f[i] == b.f[i]);
            }
        }
    CHECK(central_chars(parse_multipartition("2:(1^1)")).f[1] == CycNum(-1));
    CHECK(central_chars(MultiPartition(1, {Partition({2})})).fT == 1);
}

TEST_CASE("g_k twist rule on characters") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            auto t = char_table(n, d);
            for (const auto& lam : t->irreps) {
                long s = 0;
                for (int j = 0; j < n; ++j) s += static_cast<long>(j) * lam[j].size();
                for (const auto& mu : t->classes)
                    for (int k = 0; k < n; ++k)
                        CHECK(t->at(lam, mu.g(k)) == CycNum::root(n, -k * s) * t->at(lam, mu.negate()));
            }
        }
}

TEST_CASE("sign ratio against Murnaghan-Nakayama") {
    CHECK(sign_ratio_of_diagram(Partition({1, 1}), 2) == -1);
    CHECK(sign_ratio_of_diagram(Partition({3}), 3) == 1);
    CHECK_THROWS_AS(sign_ratio_of_diagram(Partition({2, 1}), 2), DomainError);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lam : multipartitions_of(n, d)) {
                Partition lbar = combine(lam);
                long chi = mn_character(lbar, Partition(std::vector<int>(d, n)));
                CHECK(chi == sign_ratio(lam) * dimension(lam));
            }
    for (int m = 1; m <= 5; ++m)
        for (const auto& lam : partitions_of(m))
            for (const auto& mu : partitions_of(m)) CHECK(mn_character(lam, mu) == sym_char(lam, mu.parts));
}
