#include "orbivertex/wreath_char.hpp"

#include <mutex>

#include "orbivertex/fock.hpp"

namespace orbivertex {

int CharTable::irrep_index(const MultiPartition& lam) const {
    auto it = irrep_pos.find(lam);
    if (it == irrep_pos.end()) throw DomainError("irrep " + lam.str() + " not in table");
    return it->second;
}

int CharTable::class_index(const MultiPartition& mu) const {
    auto it = class_pos.find(mu);
    if (it == class_pos.end()) throw DomainError("class " + mu.str() + " not in table");
    return it->second;
}

std::map<MultiPartition, CycNum> character_column(const MultiPartition& mu) {
    int n = mu.n();
    FockVector v = FockVector::vacuum(n);
    for (const auto& p : mu.parts()) {
        FockVector next(n);
        for (int j = 0; j < n; ++j)
            next += alpha_minus(v, j, p.size).scaled(CycNum::root(n, -static_cast<long>(p.twist) * j));
        v = std::move(next);
    }
    return v.terms();
}

namespace {

std::shared_ptr<const CharTable> build_table(int n, int d) {
    auto t = std::make_shared<CharTable>();
    t->n = n;
    t->d = d;
    t->irreps = multipartitions_of(n, d);
    t->classes = t->irreps;
    for (size_t i = 0; i < t->irreps.size(); ++i) {
        t->irrep_pos[t->irreps[i]] = static_cast<int>(i);
        t->class_pos[t->classes[i]] = static_cast<int>(i);
    }
    t->chi.assign(t->irreps.size(), std::vector<CycNum>(t->classes.size()));
    for (size_t c = 0; c < t->classes.size(); ++c) {
        t->z.push_back(t->classes[c].z());
        for (const auto& [lam, val] : character_column(t->classes[c])) t->chi[t->irrep_pos.at(lam)][c] = val;
    }
    return t;
}

}  // namespace

std::shared_ptr<const CharTable> char_table(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const CharTable>> cache;
    if (n < 1 || d < 0) throw DomainError("char_table needs n >= 1, d >= 0");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    auto t = build_table(n, d);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(n, d), t).first->second;
}

CycNum character(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.n() != mu.n() || lam.size() != mu.size()) throw DomainError("irrep and class sizes differ");
    return char_table(lam.n(), lam.size())->at(lam, mu);
}

long hook_dimension(const Partition& rho) {
    Partition c = rho.conjugate();
    mpz_class num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), rho.size());
    for (int i = 0; i < rho.length(); ++i)
        for (int j = 0; j < rho.parts[i]; ++j) den *= rho.parts[i] - j + c.parts[j] - i - 1;
    return mpz_class(num / den).get_si();
}

long dimension(const MultiPartition& lam) {
    long r = factorial(lam.size());
    for (const auto& p : lam.comps()) r = r / factorial(p.size()) * hook_dimension(p);
    return r;
}

CentralChars central_chars(const MultiPartition& lam) {
    int n = lam.n();
    CentralChars out;
    out.f.assign(n, CycNum(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.f[i] += CycNum(lam[j].size()) * CycNum::root(n, -static_cast<long>(i) * j);
    Partition lbar = combine(lam);
    for (int i = 1; i <= lbar.length(); ++i)
        for (int j = 1; j <= lbar[i - 1]; ++j)
            if (box_color(i, j, n) == 0) out.fT += j - i;
    return out;
}

CentralChars central_chars_from_table(const MultiPartition& lam) {
    int n = lam.n(), d = lam.size();
    auto t = char_table(n, d);
    CentralChars out;
    out.f.assign(n, CycNum(0));
    CycNum dim(dimension(lam));
    if (d >= 2) {
        std::vector<int> p(d - 2, 1);
        p.insert(p.begin(), 2);
        std::vector<Partition> c(n);
        c[0] = Partition(p);
        CycNum v = CycNum(mpq_class(static_cast<long>(n) * d * (d - 1), 2)) * t->at(lam, MultiPartition(n, c)) / dim;
        if (!v.is_rational() || v.rational().get_den() != 1) throw DomainError("f_T not integral");
        out.fT = v.rational().get_num().get_si();
    }
    for (int i = 0; i < n && d >= 1; ++i) {
        std::vector<Part> ps(d - 1, Part{1, 0});
        ps.push_back({1, i});
        out.f[i] = CycNum(d) * t->at(lam, MultiPartition::from_parts(n, ps)) / dim;
    }
    return out;
}

long sign_ratio_of_diagram(const Partition& lbar, int n) {
    long s = 1;
    Partition cur = lbar;
    while (!cur.empty()) {
        auto rem = remove_border_strips(cur, n);
        if (rem.empty()) throw DomainError("diagram " + lbar.str() + " is not balanced");
        if (rem.front().ht % 2) s = -s;
        cur = rem.front().shape;
    }
    return s;
}

long sign_ratio(const MultiPartition& lam) { return sign_ratio_of_diagram(combine(lam), lam.n()); }

long mn_character(const Partition& lam, const Partition& mu) {
    static std::mutex m;
    static std::map<std::pair<Partition, Partition>, long> memo;
    if (lam.size() != mu.size()) throw DomainError("character arguments differ in size");
    if (mu.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find({lam, mu});
        if (it != memo.end()) return it->second;
    }
    Partition rest(std::vector<int>(mu.parts.begin() + 1, mu.parts.end()));
    long v = 0;
    for (const auto& s : remove_border_strips(lam, mu.parts[0])) v += (s.ht % 2 ? -1 : 1) * mn_character(s.shape, rest);
    std::lock_guard<std::mutex> lock(m);
    memo[{lam, mu}] = v;
    return v;
}

}  // namespace orbivertex
