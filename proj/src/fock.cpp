#include "orbivertex/fock.hpp"

#include <algorithm>
#include <functional>

namespace orbivertex {

std::vector<int> maya_positions(const Partition& rho, int count) {
    if (count < rho.length()) throw DomainError("window shorter than partition length");
    std::vector<int> m(count);
    for (int i = 0; i < count; ++i) m[i] = rho[i] - (i + 1);
    return m;
}

Partition from_positions(std::vector<int> m) {
    std::sort(m.begin(), m.end(), std::greater<>());
    std::vector<int> parts;
    for (size_t i = 0; i < m.size(); ++i) {
        int p = m[i] + static_cast<int>(i) + 1;
        if (p < 0) throw DomainError("stone positions do not describe a charge-zero state");
        parts.push_back(p);
    }
    return Partition(parts);
}

MayaState::MayaState(const Partition& rho) {
    int count = rho.length() + rho[0] + 1;
    auto m = maya_positions(rho, count);
    std::set<int> have(m.begin(), m.end());
    for (int v : m)
        if (v >= 0) occ_.insert(v);
    for (int v = -1; v >= -count; --v)
        if (!have.count(v)) vac_.insert(v);
}

MayaState::MayaState(std::set<int> occupied_nonneg, std::set<int> vacant_neg)
    : occ_(std::move(occupied_nonneg)), vac_(std::move(vacant_neg)) {
    for (int v : occ_)
        if (v < 0) throw DomainError("occupied set must be non-negative positions");
    for (int v : vac_)
        if (v >= 0) throw DomainError("vacant set must be negative positions");
}

Partition MayaState::partition() const {
    if (charge() != 0) throw DomainError("Maya state has nonzero charge");
    int lo = vac_.empty() ? 0 : *vac_.begin();
    std::vector<int> m(occ_.rbegin(), occ_.rend());
    for (int v = -1; v >= lo; --v)
        if (!vac_.count(v)) m.push_back(v);
    return from_positions(m);
}

Frobenius frobenius(const Partition& rho) {
    Frobenius f;
    Partition c = rho.conjugate();
    for (int i = 0; i < rho.length() && rho.parts[i] > i; ++i) {
        f.a.push_back(rho.parts[i] - i - 1);
        f.b.push_back(c.parts[i] - i - 1);
    }
    return f;
}

Partition from_frobenius(const Frobenius& f) {
    if (f.a.size() != f.b.size()) throw DomainError("Frobenius arms and legs differ in number");
    int r = static_cast<int>(f.a.size());
    std::vector<int> rows;
    for (int i = 1; i <= r; ++i) rows.push_back(f.a[i - 1] + i);
    int depth = r ? f.b[0] + 1 : 0;
    for (int i = r + 1; i <= depth; ++i) {
        int c = 0;
        for (int j = 1; j <= r; ++j)
            if (f.b[j - 1] + j >= i) ++c;
        rows.push_back(c);
    }
    Partition p(rows);
    if (!(frobenius(p) == f)) throw DomainError("invalid Frobenius coordinates");
    return p;
}

int box_color(int i, int j, int n) { return static_cast<int>(mod(j - i, n)); }

std::vector<int> color_counts(const Partition& lbar, int n) {
    std::vector<int> c(n, 0);
    for (int i = 1; i <= lbar.length(); ++i)
        for (int j = 1; j <= lbar[i - 1]; ++j) ++c[box_color(i, j, n)];
    return c;
}

bool balanced(const Partition& lbar, int n) {
    auto c = color_counts(lbar, n);
    return std::all_of(c.begin(), c.end(), [&](int v) { return v == c[0]; });
}

std::vector<std::vector<std::vector<int>>> hook_colors(const Partition& lbar, int n) {
    Partition conj = lbar.conjugate();
    std::vector<std::vector<std::vector<int>>> h(lbar.length());
    for (int i = 1; i <= lbar.length(); ++i) {
        h[i - 1].resize(lbar[i - 1], std::vector<int>(n, 0));
        for (int j = 1; j <= lbar[i - 1]; ++j) {
            auto& v = h[i - 1][j - 1];
            for (int jj = j; jj <= lbar[i - 1]; ++jj) ++v[box_color(i, jj, n)];
            for (int ii = i + 1; ii <= conj[j - 1]; ++ii) ++v[box_color(ii, j, n)];
        }
    }
    return h;
}

std::vector<int> row_weights(const Partition& lbar, int n) {
    std::vector<int> w(n, 0);
    for (int i = 1; i <= lbar.length(); ++i)
        for (int j = 1; j <= lbar[i - 1]; ++j) w[box_color(i, j, n)] += i - 1;
    return w;
}

MultiPartition n_quotient(const Partition& lbar, int n) {
    int K = lbar.length() / n + 1;
    auto M = maya_positions(lbar, n * K);
    std::vector<std::vector<int>> per(n);
    for (int v : M) {
        int r = static_cast<int>(mod(v, n));
        per[r].push_back((v - r) / n);
    }
    std::vector<Partition> comps;
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(per[r].size()) != K) throw DomainError("diagram " + lbar.str() + " is not balanced");
        comps.push_back(from_positions(per[r]));
    }
    return MultiPartition(n, comps);
}

Partition combine(const MultiPartition& lam) {
    int n = lam.n();
    int K = 1;
    for (const auto& p : lam.comps()) K = std::max(K, p.length() + 1);
    std::vector<int> M;
    for (int r = 0; r < n; ++r)
        for (int m : maya_positions(lam[r], K)) M.push_back(n * m + r);
    return from_positions(M);
}

namespace {

std::vector<Strip> move_stones(const Partition& lbar, int len, int n, int dir) {
    if (len <= 0) throw DomainError("strip length must be positive");
    int count = lbar.length() + len + 1;
    auto m = maya_positions(lbar, count);
    std::set<int> occ(m.begin(), m.end());
    int floor = m.back();
    auto is_occ = [&](int v) { return v < floor || occ.count(v) > 0; };
    std::vector<Strip> out;
    for (int s : m) {
        int t = s + dir * len;
        if (is_occ(t)) continue;
        int lo = std::min(s, t), hi = std::max(s, t);
        int ht = 0, beta = 0;
        for (int v = lo + 1; v < hi; ++v) {
            if (!is_occ(v)) continue;
            ++ht;
            if (mod(v - s, n) == 0) ++beta;
        }
        std::vector<int> nm;
        for (int v : m) nm.push_back(v == s ? t : v);
        Strip st{from_positions(nm), ht, s, std::nullopt};
        if (len % n == 0) st.beta = beta;
        out.push_back(std::move(st));
    }
    std::sort(out.begin(), out.end(), [](const Strip& a, const Strip& b) { return a.shape > b.shape; });
    return out;
}

}  // namespace

std::vector<Strip> add_border_strips(const Partition& lbar, int len, int n) { return move_stones(lbar, len, n, +1); }

std::vector<Strip> remove_border_strips(const Partition& lbar, int len) {
    // holes all lie above the window floor, so downward moves stay inside it
    return move_stones(lbar, len, 1, -1);
}

FockVector FockVector::vacuum(int n) {
    FockVector v(n);
    v.add(MultiPartition(n), CycNum(1));
    return v;
}

CycNum FockVector::coeff(const MultiPartition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? CycNum(0) : it->second;
}

void FockVector::add(const MultiPartition& lam, const CycNum& c) {
    if (lam.n() != n_) throw DomainError("Fock vector modulus mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

FockVector FockVector::scaled(const CycNum& c) const {
    FockVector out(n_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

namespace {

template <class F>
FockVector act_on_factor(const FockVector& v, int factor, F f) {
    if (factor < 0 || factor >= v.n()) throw DomainError("tensor factor out of range");
    FockVector out(v.n());
    for (const auto& [lam, c] : v.terms()) {
        for (const auto& [rho, w] : f(lam[factor])) {
            std::vector<Partition> comps = lam.comps();
            comps[factor] = rho;
            out.add(MultiPartition(v.n(), comps), c * w);
        }
    }
    return out;
}

}  // namespace

FockVector alpha_minus(const FockVector& v, int factor, int k) {
    return act_on_factor(v, factor, [k](const Partition& rho) {
        std::vector<std::pair<Partition, CycNum>> out;
        for (const auto& s : add_border_strips(rho, k)) out.push_back({s.shape, CycNum(s.ht % 2 ? -1 : 1)});
        return out;
    });
}

FockVector energy(const FockVector& v, int factor, int m) {
    return act_on_factor(v, factor, [m](const Partition& rho) {
        MayaState st(rho);
        std::vector<std::pair<Partition, CycNum>> out;
        if (m >= 0 && st.occupied(m)) out.push_back({rho, CycNum(1)});
        if (m < 0 && !st.occupied(m)) out.push_back({rho, CycNum(-1)});
        return out;
    });
}

FockVector cut_join(const FockVector& v, int factor) {
    return act_on_factor(v, factor, [](const Partition& rho) {
        MayaState st(rho);
        mpq_class s = 0;
        for (int m : st.occupied_nonneg()) s += frac(2 * m + 1, 2) * frac(2 * m + 1, 2) / 2;
        for (int m : st.vacant_neg()) s -= frac(2 * m + 1, 2) * frac(2 * m + 1, 2) / 2;
        return std::vector<std::pair<Partition, CycNum>>{{rho, CycNum(s)}};
    });
}

long content_sum(const Partition& rho) {
    long s = 0;
    for (int i = 1; i <= rho.length(); ++i)
        for (int j = 1; j <= rho[i - 1]; ++j) s += j - i;
    return s;
}

}  // namespace orbivertex
