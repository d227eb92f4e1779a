#include "orbivertex/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace orbivertex {

struct CycField {
    long M;
    int phi;
    // red[t] = x^t mod Phi_M for 0 <= t < 2M
    std::vector<std::vector<long>> red;
};

long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            r -= r / p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

std::vector<long> cyclotomic_poly(long m) {
    // x^m - 1 divided by Phi_d for every proper divisor d
    std::vector<long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        auto q = cyclotomic_poly(d);
        // exact division by a monic polynomial
        long dq = static_cast<long>(q.size()) - 1;
        long dp = static_cast<long>(p.size()) - 1;
        std::vector<long> out(dp - dq + 1, 0);
        for (long i = dp; i >= dq; --i) {
            long c = p[i];
            out[i - dq] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
        }
        p = out;
    }
    return p;
}

namespace {

std::mutex g_mu;
std::map<long, std::unique_ptr<CycField>> g_fields;

const CycField* field(long M) {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_fields.find(M);
    if (it != g_fields.end()) return it->second.get();
    auto f = std::make_unique<CycField>();
    f->M = M;
    f->phi = static_cast<int>(euler_phi(M));
    auto P = cyclotomic_poly(M);
    int phi = f->phi;
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    f->red.reserve(2 * M);
    for (long t = 0; t < 2 * M; ++t) {
        f->red.push_back(cur);
        // multiply by x, reduce with x^phi = -sum P[j] x^j
        long top = cur[phi - 1];
        for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top)
            for (int j = 0; j < phi; ++j) cur[j] -= top * P[j];
    }
    const CycField* out = f.get();
    g_fields.emplace(M, std::move(f));
    return out;
}

long lcm(long a, long b) { return a / std::gcd(a, b) * b; }

long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

long CycNum::level() const { return f_ ? f_->M : 1; }

bool CycNum::is_zero() const {
    if (!f_) return sgn(r_) == 0;
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

const mpq_class& CycNum::rational() const {
    if (f_) throw DomainError("cyclotomic number is not rational");
    return r_;
}

std::vector<mpq_class> CycNum::coeffs() const {
    if (!f_) return {r_};
    return c_;
}

void CycNum::normalize() {
    if (!f_) return;
    for (size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) return;
    r_ = c_[0];
    f_ = nullptr;
    c_.clear();
}

CycNum CycNum::root(long d, long p) {
    if (d <= 0) throw DomainError("root of unity order must be positive");
    p = pmod(p, d);
    if (d == 1) return CycNum(1);
    if (d == 2) return CycNum(p == 0 ? 1 : -1);
    CycNum out;
    out.f_ = field(d);
    out.c_.assign(out.f_->phi, mpq_class(0));
    for (int j = 0; j < out.f_->phi; ++j) out.c_[j] = out.f_->red[p][j];
    out.normalize();
    return out;
}

CycNum CycNum::from_turn(const mpq_class& t) {
    mpq_class c = t;
    c.canonicalize();
    mpz_class num = c.get_num(), den = c.get_den();
    long d = den.get_si();
    mpz_class r = num % den;
    return root(d, r.get_si());
}

CycNum CycNum::at_level(long M) const {
    long L = level();
    if (M % L != 0) throw DomainError("cannot embed into a level that is not a multiple");
    if (M <= 2 || (f_ && f_->M == M)) return *this;
    CycNum out;
    out.f_ = field(M);
    out.c_.assign(out.f_->phi, mpq_class(0));
    if (!f_) {
        out.c_[0] = r_;
        return out;
    }
    long s = M / L;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& row = out.f_->red[j * s];
        for (int t = 0; t < out.f_->phi; ++t)
            if (row[t]) out.c_[t] += c_[j] * row[t];
    }
    return out;
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    if (!f_)
        out.r_ = -r_;
    else
        for (auto& c : out.c_) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (!f_ && !o.f_) {
        r_ += o.r_;
        return *this;
    }
    if (!o.f_) {
        c_[0] += o.r_;
        normalize();
        return *this;
    }
    long L = lcm(level(), o.level());
    if (level() != L) *this = at_level(L);
    if (o.level() == L) {
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    } else {
        CycNum t = o.at_level(L);
        for (size_t j = 0; j < c_.size(); ++j) c_[j] += t.c_[j];
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
    if (!o.f_) {
        if (!f_)
            r_ *= o.r_;
        else if (sgn(o.r_) == 0)
            *this = CycNum();
        else
            for (auto& c : c_) c *= o.r_;
        return *this;
    }
    if (!f_) {
        mpq_class s = r_;
        *this = o;
        if (sgn(s) == 0) return *this = CycNum();
        for (auto& c : c_) c *= s;
        return *this;
    }
    long L = lcm(level(), o.level());
    CycNum a = level() == L ? *this : at_level(L);
    CycNum b = o.level() == L ? o : o.at_level(L);
    const CycField* F = a.f_;
    int phi = F->phi;
    std::vector<mpq_class> prod(2 * phi - 1);
    mpq_class t;
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            prod[i + j] += t;
        }
    }
    std::vector<mpq_class> out(prod.begin(), prod.begin() + phi);
    for (int s = phi; s < 2 * phi - 1; ++s) {
        if (sgn(prod[s]) == 0) continue;
        const auto& row = F->red[s];
        for (int j = 0; j < phi; ++j)
            if (row[j]) out[j] += prod[s] * row[j];
    }
    f_ = F;
    c_ = std::move(out);
    normalize();
    return *this;
}

CycNum CycNum::inv() const {
    if (is_zero()) throw DomainError("division by zero in cyclotomic field");
    if (!f_) return CycNum(mpq_class(1) / r_);
    // solve (mult-by-this) y = 1 over Q
    int phi = f_->phi;
    std::vector<std::vector<mpq_class>> A(phi, std::vector<mpq_class>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        CycNum col = *this * root(f_->M, j).at_level(f_->M);
        auto cc = col.at_level(f_->M).c_;
        for (int i = 0; i < phi; ++i) A[i][j] = cc[i];
    }
    A[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (piv < phi && sgn(A[piv][col]) == 0) ++piv;
        if (piv == phi) throw DomainError("singular multiplication matrix");
        std::swap(A[piv], A[col]);
        mpq_class p = A[col][col];
        for (int j = col; j <= phi; ++j) A[col][j] /= p;
        for (int i = 0; i < phi; ++i) {
            if (i == col || sgn(A[i][col]) == 0) continue;
            mpq_class fct = A[i][col];
            for (int j = col; j <= phi; ++j) A[i][j] -= fct * A[col][j];
        }
    }
    CycNum out;
    out.f_ = f_;
    out.c_.resize(phi);
    for (int i = 0; i < phi; ++i) out.c_[i] = A[i][phi];
    out.normalize();
    return out;
}

CycNum CycNum::conj() const {
    if (!f_) return *this;
    CycNum out;
    out.f_ = f_;
    out.c_.assign(f_->phi, mpq_class(0));
    long M = f_->M;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& row = f_->red[pmod(M - static_cast<long>(j), M)];
        for (int t = 0; t < f_->phi; ++t)
            if (row[t]) out.c_[t] += c_[j] * row[t];
    }
    out.normalize();
    return out;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum base = *this, out(1);
    while (e) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

bool CycNum::root_turn(mpq_class& turn) const {
    long M = lcm(level(), 2);
    for (long j = 0; j < M; ++j) {
        if (*this == root(M, j)) {
            turn = frac(j, M);
            turn.canonicalize();
            return true;
        }
    }
    return false;
}

std::complex<double> CycNum::to_complex() const {
    if (!f_) return {r_.get_d(), 0.0};
    std::complex<double> z = 0;
    const double tau = 2.0 * std::acos(-1.0);
    for (size_t j = 0; j < c_.size(); ++j)
        z += c_[j].get_d() * std::polar(1.0, tau * static_cast<double>(j) / f_->M);
    return z;
}

std::string rat_str(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false, digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash || !digit) throw DomainError("malformed rational: " + s);
            slash = true;
            digit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            digit = true;
        } else {
            throw DomainError("malformed rational: " + s);
        }
    }
    if (!digit) throw DomainError("malformed rational: " + s);
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class q(t, 10);
    if (sgn(q.get_den()) == 0) throw DomainError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string CycNum::str() const {
    if (!f_) return rat_str(r_);
    std::ostringstream os;
    bool first = true;
    std::string z = "zeta" + std::to_string(f_->M);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        mpq_class a = abs(c_[j]);
        bool neg = sgn(c_[j]) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << rat_str(a);
            continue;
        }
        if (a != 1) os << rat_str(a) << "*";
        os << z;
        if (j > 1) os << "^" << j;
    }
    return first ? "0" : os.str();
}

CycNum arith(const CycNum& a, const CycNum& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw DomainError("unknown op");
}

CycloContext::CycloContext(int n_) : n(n_), M(lcm(4, 2L * n_)) {
    if (n_ < 1) throw DomainError("n must be positive");
}

CycNum CycloContext::zeta(long d, long p) const {
    if (d <= 0 || M % d != 0) throw DomainError("zeta: " + std::to_string(d) + " does not divide " + std::to_string(M));
    CycNum z = CycNum::root(d, p).at_level(M);
    return z + CycNum(0);  // normalizes
}

}  // namespace orbivertex
