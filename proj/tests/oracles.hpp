#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "orbivertex/fock.hpp"
#include "orbivertex/series.hpp"
#include "orbivertex/wreath_char.hpp"

// Independent oracles shared by the unit tests and the acceptance binary.
namespace oracle {

using namespace orbivertex;

// Brute-force oracle: irreducible characters of Z_n wr S_d as induced
// characters from Z_n wr (S_{d_0} x ... x S_{d_{n-1}}), evaluated by summing
// over the whole group.
struct Elem {
    std::vector<int> t;  // twist per position
    std::vector<int> s;  // permutation, s[i] = image of i
};

struct Wreath {
    int n, d;
    std::vector<Elem> all;

    Wreath(int n_, int d_) : n(n_), d(d_) {
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> t(d, 0);
            while (true) {
                all.push_back({t, perm});
                int i = 0;
                while (i < d && ++t[i] == n) t[i++] = 0;
                if (i == d) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // elements act as monomial matrices: g e_x = xi^{t_{s x}} e_{s x}
    Elem mul(const Elem& a, const Elem& b) const {
        Elem c{std::vector<int>(d), std::vector<int>(d)};
        for (int x = 0; x < d; ++x) {
            c.s[x] = a.s[b.s[x]];
            c.t[c.s[x]] = (a.t[a.s[b.s[x]]] + b.t[b.s[x]]) % n;
        }
        return c;
    }
    Elem inv(const Elem& a) const {
        Elem c{std::vector<int>(d), std::vector<int>(d)};
        for (int x = 0; x < d; ++x) c.s[a.s[x]] = x;
        for (int x = 0; x < d; ++x) c.t[c.s[x]] = (n - a.t[x]) % n;
        return c;
    }
    // cycles with twist sums
    MultiPartition cls(const Elem& a) const {
        std::vector<bool> seen(d, false);
        std::vector<Part> ps;
        for (int x = 0; x < d; ++x) {
            if (seen[x]) continue;
            int len = 0, tw = 0, y = x;
            while (!seen[y]) {
                seen[y] = true;
                tw += a.t[y];
                y = a.s[y];
                ++len;
            }
            ps.push_back({len, tw % n});
        }
        return MultiPartition::from_parts(n, ps);
    }
};

// independent S_m character by removing rim hooks through the strip predicate
inline long sym_char(const Partition& lam, std::vector<int> mu) {
    if (mu.empty()) return 1;
    int k = mu.back();
    mu.pop_back();
    long v = 0;
    for (const auto& q : partitions_of(lam.size() - k)) {
        if (!lam.contains(q)) continue;
        std::set<std::pair<int, int>> cells;
        for (int i = 0; i < lam.length(); ++i)
            for (int j = q[i]; j < lam[i]; ++j) cells.insert({i, j});
        bool ok = true;
        for (auto [i, j] : cells)
            if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) ok = false;
        std::set<std::pair<int, int>> seen{*cells.begin()};
        std::vector<std::pair<int, int>> st{*cells.begin()};
        while (!st.empty()) {
            auto [i, j] = st.back();
            st.pop_back();
            for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
                if (cells.count(nb) && seen.insert(nb).second) st.push_back(nb);
        }
        if (!ok || seen.size() != cells.size()) continue;
        int rows = 0;
        for (int i = 0; i < lam.length(); ++i) rows += lam[i] > q[i];
        v += ((rows - 1) % 2 ? -1 : 1) * sym_char(q, mu);
    }
    return v;
}

inline std::vector<std::vector<CycNum>> oracle_table(int n, int d, const std::vector<MultiPartition>& irreps,
                                             const std::vector<MultiPartition>& classes) {
    Wreath G(n, d);
    std::vector<std::vector<CycNum>> out(irreps.size(), std::vector<CycNum>(classes.size()));
    std::vector<Elem> reps(classes.size());
    for (const auto& g : G.all) {
        auto c = G.cls(g);
        auto it = std::find(classes.begin(), classes.end(), c);
        reps[it - classes.begin()] = g;
    }
    for (size_t li = 0; li < irreps.size(); ++li) {
        const auto& lam = irreps[li];
        std::vector<int> block(d);
        int pos = 0;
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < lam[j].size(); ++r) block[pos++] = j;
        long hsize = 1;
        for (int j = 0; j < n; ++j) hsize *= factorial(lam[j].size()) * ipow(n, lam[j].size());
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            CycNum acc;
            for (const auto& x : G.all) {
                Elem h = G.mul(G.mul(x, reps[ci]), G.inv(x));
                bool inside = true;
                for (int y = 0; y < d; ++y)
                    if (block[h.s[y]] != block[y]) inside = false;
                if (!inside) continue;
                CycNum v(1);
                for (int y = 0; y < d; ++y) v *= CycNum::root(n, -static_cast<long>(block[y]) * h.t[y]);
                for (int j = 0; j < n; ++j) {
                    std::vector<bool> seen(d, false);
                    std::vector<int> cyc;
                    for (int y = 0; y < d; ++y) {
                        if (block[y] != j || seen[y]) continue;
                        int len = 0, z = y;
                        while (!seen[z]) {
                            seen[z] = true;
                            z = h.s[z];
                            ++len;
                        }
                        cyc.push_back(len);
                    }
                    v *= CycNum(sym_char(lam[j], cyc));
                }
                acc += v;
            }
            out[li][ci] = acc * CycNum(mpq_class(1, hsize));
        }
    }
    return out;
}


// s_lam(1, q, q^2, ...) by Jacobi-Trudi: det h_{lam_i - i + j}, h_k = 1/prod_{i<=k}(1 - q^i)
inline PuiseuxSeries principal_schur(const Partition& lam, long order) {
    auto vs = q_vars(1);
    long D = vs->D;
    auto h = [&](int k) {
        if (k < 0) return PuiseuxSeries(vs, order * D);
        PuiseuxSeries num = PuiseuxSeries::constant(vs, CycNum(1));
        for (int i = 1; i <= k; ++i) {
            PuiseuxSeries f = PuiseuxSeries::constant(vs, CycNum(1));
            Exp e{};
            e[0] = static_cast<int16_t>(i * D);
            f.add_term(e, CycNum(-1));
            num = (num * invert(f, order)).truncated(order * D);
        }
        return num;
    };
    int L = lam.length();
    std::vector<std::vector<PuiseuxSeries>> M(L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) M[i].push_back(h(lam[i] - i + j));
    std::vector<int> p(L);
    std::iota(p.begin(), p.end(), 0);
    PuiseuxSeries out(vs, order * D);
    if (L == 0) return PuiseuxSeries::constant(vs, CycNum(1)).truncated(order * D);
    do {
        int inv = 0;
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j) inv += p[i] > p[j];
        PuiseuxSeries t = PuiseuxSeries::constant(vs, CycNum(inv % 2 ? -1 : 1)).truncated(order * D);
        for (int i = 0; i < L; ++i) t = (t * M[i][p[i]]).truncated(order * D);
        out += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// 1/sin(c u) by inverting the sine Taylor series
inline PuiseuxSeries csc_by_inversion(const mpq_class& c, long order) {
    auto vs = gw_vars(1);
    PuiseuxSeries s(vs, order + 2);
    mpq_class term = c;
    for (long k = 1; k < order + 2; k += 2) {
        Exp e{};
        e[0] = static_cast<int16_t>(k);
        s.add_term(e, CycNum(term));
        term *= -c * c / ((k + 1) * (k + 2));
        term.canonicalize();
    }
    return invert(s, order);
}

}  // namespace oracle
