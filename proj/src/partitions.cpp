#include "orbivertex/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "orbivertex/cyclo.hpp"

namespace orbivertex {

long factorial(int k) {
    long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!parts.empty() && parts.back() < 0) throw DomainError("partition parts must be positive");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++c[j];
    Partition out;
    out.parts = std::move(c);
    return out;
}

bool Partition::contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 0; i < o.length(); ++i)
        if (o.parts[i] > parts[i]) return false;
    return true;
}

long Partition::aut() const {
    long r = 1;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        r *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(p);
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    if (d >= 0) rec(d, d);
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
                  tok.end());
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= 0) throw DomainError("bad partition part: " + tok);
        parts.push_back(v);
    }
    return Partition(parts);
}

MultiPartition::MultiPartition(int n) : n_(n), comps_(n) {
    if (n < 1) throw DomainError("modulus must be positive");
}

MultiPartition::MultiPartition(int n, std::vector<Partition> comps) : n_(n), comps_(std::move(comps)) {
    if (n < 1) throw DomainError("modulus must be positive");
    if (static_cast<int>(comps_.size()) != n) throw DomainError("need exactly n component partitions");
}

MultiPartition MultiPartition::from_parts(int n, const std::vector<Part>& parts) {
    std::vector<std::vector<int>> c(n);
    for (const auto& p : parts) {
        if (p.size <= 0) throw DomainError("parts must be positive");
        c[mod(p.twist, n)].push_back(p.size);
    }
    std::vector<Partition> comps;
    for (auto& v : c) comps.emplace_back(std::move(v));
    return MultiPartition(n, std::move(comps));
}

std::vector<Part> MultiPartition::parts() const {
    std::vector<Part> out;
    for (int i = 0; i < n_; ++i)
        for (int d : comps_[i].parts) out.push_back({d, i});
    return out;
}

int MultiPartition::size() const {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

int MultiPartition::length() const {
    int s = 0;
    for (const auto& p : comps_) s += p.length();
    return s;
}

bool MultiPartition::untwisted() const {
    for (int i = 1; i < n_; ++i)
        if (!comps_[i].empty()) return false;
    return true;
}

Partition MultiPartition::underlying() const {
    std::vector<int> all;
    for (const auto& p : comps_) all.insert(all.end(), p.parts.begin(), p.parts.end());
    return Partition(all);
}

MultiPartition MultiPartition::negate() const {
    std::vector<Partition> c(n_);
    for (int i = 0; i < n_; ++i) c[mod(-i, n_)] = comps_[i];
    return MultiPartition(n_, std::move(c));
}

MultiPartition MultiPartition::tw() const {
    MultiPartition out = *this;
    out.comps_[0] = Partition();
    return out;
}

MultiPartition MultiPartition::untw() const {
    MultiPartition out(n_);
    out.comps_[0] = comps_[0];
    return out;
}

MultiPartition MultiPartition::g(long k) const {
    std::vector<Part> ps = parts();
    for (auto& p : ps) p.twist = static_cast<int>(mod(p.size * k - p.twist, n_));
    return from_parts(n_, ps);
}

MultiPartition MultiPartition::operator+(const MultiPartition& o) const {
    if (o.n_ != n_) throw DomainError("modulus mismatch");
    std::vector<Part> ps = parts();
    auto q = o.parts();
    ps.insert(ps.end(), q.begin(), q.end());
    return from_parts(n_, ps);
}

long MultiPartition::aut() const {
    long r = 1;
    for (const auto& p : comps_) r *= p.aut();
    return r;
}

long MultiPartition::z() const {
    long r = aut();
    for (const auto& p : comps_)
        for (int d : p.parts) r *= static_cast<long>(n_) * d;
    return r;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    os << n_ << ":(";
    bool first = true;
    for (const auto& p : parts()) {
        os << (first ? "" : ",") << p.size << "^" << p.twist;
        first = false;
    }
    os << ")";
    return os.str();
}

MultiPartition parse_multipartition(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DomainError("expected n:(d^i,...): " + s);
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(s.substr(0, colon), &pos);
        if (pos != colon) throw DomainError("bad modulus");
    } catch (const std::exception&) {
        throw DomainError("bad modulus in " + s);
    }
    if (n < 1) throw DomainError("modulus must be positive");
    std::string body = s.substr(colon + 1);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') throw DomainError("expected parentheses: " + s);
    body = body.substr(1, body.size() - 2);
    std::vector<Part> parts;
    std::string tok;
    for (char& c : body)
        if (c == '|') c = ',';
    std::istringstream is(body);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        try {
            size_t p1 = 0, p2 = 0;
            std::string a = tok.substr(0, caret);
            int d = std::stoi(a, &p1);
            int i = 0;
            if (caret != std::string::npos) {
                std::string b = tok.substr(caret + 1);
                i = std::stoi(b, &p2);
                if (p2 != b.size()) throw DomainError("");
            }
            if (p1 != a.size() || d <= 0 || i < 0 || i >= n) throw DomainError("");
            parts.push_back({d, i});
        } catch (const std::exception&) {
            throw DomainError("bad decorated part '" + tok + "' in " + s);
        }
    }
    return MultiPartition::from_parts(n, parts);
}

std::vector<MultiPartition> multipartitions_of(int n, int d) {
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(n);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            for (const auto& p : partitions_of(left)) {
                cur[i] = p;
                out.emplace_back(n, cur);
            }
            return;
        }
        for (int s = left; s >= 0; --s)
            for (const auto& p : partitions_of(s)) {
                cur[i] = p;
                rec(i + 1, left - s);
            }
    };
    rec(0, d);
    return out;
}

bool appendix_less(const Part& a, const Part& b, int n) {
    if (a.size != b.size) return a.size > b.size;
    long ia = mod(a.twist, gcd_l(a.size, n)), ib = mod(b.twist, gcd_l(b.size, n));
    if (ia != ib) return ia < ib;
    return a.twist < b.twist;
}

std::vector<Part> appendix_order(const MultiPartition& mu) {
    auto ps = mu.parts();
    int n = mu.n();
    std::stable_sort(ps.begin(), ps.end(), [n](const Part& a, const Part& b) { return appendix_less(a, b, n); });
    return ps;
}

std::vector<int> twisting_partition(const MultiPartition& mu) {
    std::vector<int> t;
    for (const auto& p : appendix_order(mu)) t.push_back(p.twist);
    return t;
}

MultiPartition drop_first(const MultiPartition& mu) {
    auto ps = appendix_order(mu);
    if (ps.empty()) throw DomainError("empty multipartition has no first part");
    ps.erase(ps.begin());
    return MultiPartition::from_parts(mu.n(), ps);
}

EtaData eta_data(const MultiPartition& eta) {
    if (eta.empty()) throw DomainError("k(eta) needs a nonempty eta");
    if (!eta[0].empty()) throw DomainError("k(eta) needs every part of eta twisted");
    int n = eta.n();
    EtaData e;
    e.first = appendix_order(eta).front();
    e.c = static_cast<int>(gcd_l(e.first.size, n));
    int h1 = e.first.twist;
    e.hbar1 = static_cast<int>(mod(h1, e.c));
    for (int k = 1; k < n; ++k)
        if (mod(-h1 + static_cast<long>(e.first.size) * k + e.hbar1, n) == 0) e.sigma.push_back(k);
    int idx = (h1 >= 1 && h1 <= e.c - 1) ? e.hbar1 : e.hbar1 + 1;
    if (idx < 1 || idx > static_cast<int>(e.sigma.size()))
        throw DomainError("k(eta) index outside Sigma_eta for " + eta.str());
    e.k = e.sigma[idx - 1];
    return e;
}

std::vector<MultiPartition> b_set(int n, int d) {
    std::vector<MultiPartition> out;
    for (int s = d; s >= 1; --s)
        for (const auto& mu : multipartitions_of(n, s))
            if (mu[0].empty()) out.push_back(mu);
    return out;
}

RowIndex row_from_eta(const MultiPartition& eta) {
    EtaData e = eta_data(eta);
    MultiPartition head = MultiPartition::from_parts(eta.n(), {{e.first.size, 0}});
    MultiPartition mu = head + drop_first(eta).g(e.k).negate();
    return {mu, e.k, eta};
}

std::vector<RowIndex> c_set(int n, int d) {
    std::vector<RowIndex> out;
    for (const auto& eta : b_set(n, d)) out.push_back(row_from_eta(eta));
    return out;
}

}  // namespace orbivertex
