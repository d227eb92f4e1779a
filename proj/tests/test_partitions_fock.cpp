#include <random>
#include <set>

#include "doctest.h"
#include "orbivertex/fock.hpp"
#include "orbivertex/partitions.hpp"

using namespace orbivertex;

namespace {

MultiPartition mp(const std::string& s) { return parse_multipartition(s); }

// strip predicate on box sets: connected, no 2x2 block
bool is_border_strip(const Partition& big, const Partition& small) {
    std::set<std::pair<int, int>> cells;
    for (int i = 0; i < big.length(); ++i)
        for (int j = small[i]; j < big[i]; ++j) cells.insert({i, j});
    if (cells.empty()) return false;
    for (auto [i, j] : cells)
        if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return false;
    std::set<std::pair<int, int>> seen{*cells.begin()};
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
            if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    return seen.size() == cells.size();
}

int rows_used(const Partition& big, const Partition& small) {
    int r = 0;
    for (int i = 0; i < big.length(); ++i) r += big[i] > small[i];
    return r;
}

}  // namespace

TEST_CASE("centralizer orders") {
    CHECK(mp("1:(1^0)").z() == 1);
    CHECK(mp("2:(1^0,1^0)").z() == 8);
    CHECK(mp("3:(2^1,2^2)").z() == 36);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d)
            for (const auto& mu : multipartitions_of(n, d)) CHECK(mu.z() == mu.negate().z());
}

TEST_CASE("involutions and g_k") {
    CHECK(mp("3:(2^1)").negate() == mp("3:(2^2)"));
    CHECK(mp("3:(3^0,1^1)").tw() == mp("3:(1^1)"));
    CHECK(mp("3:(2^1)").g(0) == mp("3:(2^2)"));
    CHECK(mp("3:(2^0)").g(1) == mp("3:(2^2)"));
    CHECK(mp("2:(2^0)").g(1) == mp("2:(2^0)"));
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d)
            for (const auto& mu : multipartitions_of(n, d))
                for (int k = 0; k < n; ++k) {
                    CHECK(mu.g(k).g(k) == mu);
                    CHECK(mu.negate().g(k).negate() == mu.g(n - k));
                    CHECK(mu.negate().g(k).negate().negate().g(k).negate() == mu);
                }
}

TEST_CASE("text format round trip") {
    auto mu = mp("3:(2^1,1^0|1^2)");
    CHECK(mu[0] == Partition({1}));
    CHECK(mu[1] == Partition({2}));
    CHECK(mu[2] == Partition({1}));
    CHECK(parse_multipartition(mu.str()) == mu);
    CHECK(mp("2:()").empty());
    CHECK_THROWS_AS(mp("2:(1^2)"), DomainError);
    CHECK_THROWS_AS(mp("2(1^0)"), DomainError);
}

TEST_CASE("appendix order and k(eta)") {
    auto e = eta_data(mp("2:(1^1,1^1)"));
    CHECK(e.c == 1);
    CHECK(e.hbar1 == 0);
    CHECK(e.sigma == std::vector<int>{1});
    CHECK(e.k == 1);
    auto f = eta_data(mp("2:(2^1)"));
    CHECK(f.c == 2);
    CHECK(f.hbar1 == 1);
    CHECK(f.sigma == std::vector<int>{1});
    CHECK(f.k == 1);
    auto ord = appendix_order(mp("4:(2^3,2^1)"));
    CHECK(ord[0] == Part{2, 1});
    CHECK(twisting_partition(mp("4:(2^3,2^1)")) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(eta_data(mp("2:(2^0)")), DomainError);

    // total order on random part lists
    std::mt19937 rng(3);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Part> ps;
        for (int i = 0; i < 12; ++i) ps.push_back({1 + static_cast<int>(rng() % 4), static_cast<int>(rng() % n)});
        for (auto& a : ps)
            for (auto& b : ps) {
                CHECK_FALSE((appendix_less(a, b, n) && appendix_less(b, a, n)));
                if (!(a == b)) CHECK((appendix_less(a, b, n) || appendix_less(b, a, n)));
                for (auto& c : ps)
                    if (appendix_less(a, b, n) && appendix_less(b, c, n)) CHECK(appendix_less(a, c, n));
            }
    }
}

TEST_CASE("index sets have equal size") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto B = b_set(n, d);
            auto C = c_set(n, d);
            std::set<RowIndex> distinct(C.begin(), C.end());
            CHECK(distinct.size() == B.size());
            for (const auto& r : C) {
                CHECK(r.mu.underlying() == r.source.underlying());
                CHECK(twisting_partition(r.mu).front() == 0);
            }
        }
}

TEST_CASE("maya and frobenius round trips") {
    for (int s = 0; s <= 9; ++s)
        for (const auto& p : partitions_of(s)) {
            CHECK(MayaState(p).partition() == p);
            CHECK(MayaState(p).charge() == 0);
            CHECK(from_frobenius(frobenius(p)) == p);
            CHECK(from_positions(maya_positions(p, p.length() + 3)) == p);
        }
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> parts;
        int left = 20;
        while (left > 0) {
            int k = 1 + static_cast<int>(rng() % left);
            parts.push_back(k);
            left -= k;
        }
        Partition p(parts);
        CHECK(MayaState(p).partition() == p);
        CHECK(from_frobenius(frobenius(p)) == p);
    }
}

TEST_CASE("colors, hooks and row weights") {
    Partition p({4, 3, 3, 1});
    auto h = hook_colors(p, 3);
    CHECK(box_color(1, 1, 3) == 0);
    CHECK(box_color(1, 2, 3) == 1);
    CHECK(box_color(1, 3, 3) == 2);
    CHECK(box_color(1, 4, 3) == 0);
    auto h2 = hook_colors(Partition({2}), 2);
    CHECK(h2[0][0] == std::vector<int>{1, 1});
    CHECK(h2[0][1] == std::vector<int>{0, 1});
    CHECK(row_weights(Partition({2}), 2) == std::vector<int>{0, 0});
    CHECK(row_weights(Partition({1}), 1) == std::vector<int>{0});
}

TEST_CASE("n-quotient bijection") {
    CHECK(n_quotient(Partition({2}), 2) == mp("2:(1^1)"));
    CHECK(n_quotient(Partition(), 3) == MultiPartition(3));
    CHECK_THROWS_AS(n_quotient(Partition({1}), 2), DomainError);
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; n * d <= 8; ++d) {
            int count = 0;
            for (const auto& p : partitions_of(n * d)) {
                if (!balanced(p, n)) {
                    CHECK_THROWS_AS(n_quotient(p, n), DomainError);
                    continue;
                }
                ++count;
                auto q = n_quotient(p, n);
                CHECK(q.size() == d);
                CHECK(combine(q) == p);
            }
            CHECK(count == static_cast<int>(multipartitions_of(n, d).size()));
            for (const auto& lam : multipartitions_of(n, d)) CHECK(n_quotient(combine(lam), n) == lam);
        }
    }
}

TEST_CASE("border strips against the strip predicate") {
    auto s0 = add_border_strips(Partition(), 2);
    REQUIRE(s0.size() == 2);
    CHECK(s0[0].shape == Partition({2}));
    CHECK(s0[0].ht == 0);
    CHECK(s0[1].shape == Partition({1, 1}));
    CHECK(s0[1].ht == 1);
    for (int s = 0; s <= 6; ++s)
        for (const auto& p : partitions_of(s))
            for (int len = 1; len <= 4; ++len) {
                std::set<Partition> expect;
                for (const auto& q : partitions_of(s + len))
                    if (q.contains(p) && is_border_strip(q, p)) expect.insert(q);
                auto got = add_border_strips(p, len);
                std::set<Partition> gs;
                for (const auto& st : got) {
                    gs.insert(st.shape);
                    CHECK(st.ht == rows_used(st.shape, p) - 1);
                }
                CHECK(gs == expect);
                CHECK(gs.size() == got.size());
                for (const auto& st : remove_border_strips(p, len)) {
                    CHECK(is_border_strip(p, st.shape));
                    CHECK(st.ht == rows_used(p, st.shape) - 1);
                }
            }
}

TEST_CASE("n-strips move one quotient stone") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const auto& lam : multipartitions_of(n, d))
                for (int k = 1; k <= 2; ++k)
                    for (const auto& st : add_border_strips(combine(lam), n * k, n)) {
                        auto sig = n_quotient(st.shape, n);
                        int changed = 0;
                        for (int r = 0; r < n; ++r) {
                            if (sig[r] == lam[r]) continue;
                            ++changed;
                            bool found = false;
                            for (const auto& q : add_border_strips(lam[r], k))
                                if (q.shape == sig[r]) {
                                    found = true;
                                    CHECK(q.ht == *st.beta);
                                }
                            CHECK(found);
                        }
                        CHECK(changed == 1);
                    }
}

TEST_CASE("fock operators") {
    FockVector v = alpha_minus(FockVector::vacuum(1), 0, 1);
    CHECK(v.terms().size() == 1);
    CHECK(v.coeff(MultiPartition(1, {Partition({1})})) == CycNum(1));
    FockVector w = alpha_minus(FockVector::vacuum(1), 0, 2);
    CHECK(w.coeff(MultiPartition(1, {Partition({2})})) == CycNum(1));
    CHECK(w.coeff(MultiPartition(1, {Partition({1, 1})})) == CycNum(-1));
    for (int s = 0; s <= 7; ++s)
        for (const auto& p : partitions_of(s)) {
            FockVector b(1);
            b.add(MultiPartition(1, {p}), CycNum(1));
            CHECK(cut_join(b, 0).coeff(MultiPartition(1, {p})) == CycNum(content_sum(p)));
            MayaState st(p);
            for (int m = -5; m <= 5; ++m) {
                CycNum e = energy(b, 0, m).coeff(MultiPartition(1, {p}));
                CycNum want = m >= 0 ? CycNum(st.occupied(m) ? 1 : 0) : CycNum(st.occupied(m) ? 0 : -1);
                CHECK(e == want);
            }
        }
}
