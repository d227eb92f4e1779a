#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orbivertex/cyclo.hpp"

namespace orbivertex {

constexpr int kMaxVars = 8;
// exponents scaled by the VarSet denominator D
using Exp = std::array<int16_t, kMaxVars>;

struct ExpHash {
    size_t operator()(const Exp& e) const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (auto v : e) h = (h ^ static_cast<uint16_t>(v)) * 1099511628211ull;
        return static_cast<size_t>(h);
    }
};

struct VarSet {
    std::vector<std::string> names;
    int D = 1;
    std::vector<int> weight;

    int size() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;
    long grade(const Exp& e) const {
        long g = 0;
        for (int i = 0; i < size(); ++i) g += static_cast<long>(weight[i]) * e[i];
        return g;
    }
    bool operator==(const VarSet& o) const { return names == o.names && D == o.D && weight == o.weight; }
};
using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names, int D, std::vector<int> weight = {});
// q_0..q_{n-1}, D = 2n, each weight 1
VarSetPtr q_vars(int n);
// u, x_1..x_{n-1}, D = 1, each weight 1
VarSetPtr gw_vars(int n);

constexpr long kExact = LONG_MAX / 4;

inline long prec_add(long a, long b) {
    if (a >= kExact || b >= kExact) return kExact;
    return a + b;
}

class PuiseuxSeries {
public:
    struct Term {
        Exp e;
        long g;  // scaled grade
        CycNum c;
    };

    PuiseuxSeries() = default;
    explicit PuiseuxSeries(VarSetPtr vs, long prec = kExact) : vs_(std::move(vs)), prec_(prec) {}
    static PuiseuxSeries constant(VarSetPtr vs, const CycNum& c);
    static PuiseuxSeries monomial(VarSetPtr vs, const Exp& e, const CycNum& c = CycNum(1));
    static PuiseuxSeries variable(VarSetPtr vs, int i, const CycNum& c = CycNum(1));

    const VarSetPtr& vars() const { return vs_; }
    long precision() const { return prec_; }
    bool exact() const { return prec_ >= kExact; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long valuation() const { return terms_.empty() ? prec_ : terms_.front().g; }

    CycNum coeff(const Exp& e) const;
    CycNum coeff(const std::vector<mpq_class>& e) const;
    Exp scaled_exp(const std::vector<mpq_class>& e) const;

    PuiseuxSeries truncated(long prec) const;
    PuiseuxSeries mul_monomial(const Exp& e) const;
    PuiseuxSeries scaled(const CycNum& c) const;
    // multiplies each term by f(term)
    PuiseuxSeries map_coeffs(const std::function<CycNum(const Term&)>& f) const;

    PuiseuxSeries operator-() const { return scaled(CycNum(-1)); }
    PuiseuxSeries& operator+=(const PuiseuxSeries& o);
    PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this += -o; }
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    // adds c*x^e (ignored at or above precision)
    void add_term(const Exp& e, const CycNum& c);
    std::string str() const;

    static PuiseuxSeries from_map(VarSetPtr vs, long prec, std::vector<Term> raw);

private:
    friend class SeriesBuilder;
    VarSetPtr vs_;
    std::vector<Term> terms_;
    long prec_ = kExact;
};

void require_same_vars(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Truncation orders below are in grade units (not scaled by D).
PuiseuxSeries invert(const PuiseuxSeries& f, long order);
PuiseuxSeries exp_series(const PuiseuxSeries& f, long order);
// log of a series with constant term 1
PuiseuxSeries log_series(const PuiseuxSeries& f, long order);

// q_i -> scale * e^{2 pi i turn} * x^mono * exp(log)
struct VariableImage {
    mpq_class turn = 0;
    CycNum scale = CycNum(1);
    Exp mono{};
    PuiseuxSeries log;
};

// Decomposes a series whose lowest term is a unit monomial.
VariableImage image_of(const PuiseuxSeries& g, long order);

PuiseuxSeries substitute(const PuiseuxSeries& f, const std::vector<VariableImage>& images, VarSetPtr target,
                         long order);

// Univariate helpers over CycNum, coefficient vectors truncated at N terms.
namespace uni {
using Poly = std::vector<CycNum>;
Poly mul(const Poly& a, const Poly& b, size_t N);
Poly exp(const Poly& a, size_t N);    // a[0] == 0
Poly log1p(const Poly& a, size_t N);  // log(1 + a), a[0] == 0
Poly inv(const Poly& a, size_t N);    // a[0] != 0
// sum_m p[m] L^m for L of positive valuation, to scaled precision prec
PuiseuxSeries compose(const Poly& p, const PuiseuxSeries& L, long prec);
}  // namespace uni

// coeff * mono * exp(log)
struct LogLinear {
    CycNum coeff = CycNum(1);
    Exp mono{};
    PuiseuxSeries log;

    LogLinear& operator*=(const LogLinear& o);
    friend LogLinear operator*(LogLinear a, const LogLinear& b) { return a *= b; }
    PuiseuxSeries expand(long order) const;
};

// coeff * mono * prod 1/(1 - c_j x^{m_j})
struct DenFactor {
    CycNum c;
    Exp m;
};

class FactoredSeries {
public:
    explicit FactoredSeries(VarSetPtr vs) : vs_(std::move(vs)) {}
    const VarSetPtr& vars() const { return vs_; }

    CycNum coeff = CycNum(1);
    Exp mono{};
    std::vector<DenFactor> den;

    FactoredSeries& operator*=(const FactoredSeries& o);
    friend FactoredSeries operator*(FactoredSeries a, const FactoredSeries& b) { return a *= b; }

    PuiseuxSeries expand(long order) const;
    // x_i -> -x_i; needs integral exponents of x_i everywhere
    FactoredSeries negate_variable(int i) const;
    // x_i -> x_{perm[i]}
    FactoredSeries permute(const std::vector<int>& perm) const;
    // extra_slack: additional grade units of precision kept in the log part so the
    // result can be multiplied by other factors carrying poles
    LogLinear to_loglinear(const std::vector<VariableImage>& images, VarSetPtr target, long order,
                           long extra_slack = 0) const;
    PuiseuxSeries substitute(const std::vector<VariableImage>& images, VarSetPtr target, long order) const {
        return to_loglinear(images, target, order).expand(order);
    }
    std::string str() const;

private:
    VarSetPtr vs_;
};

std::string exp_str(const VarSet& vs, const Exp& e);

}  // namespace orbivertex
