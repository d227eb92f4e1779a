#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbivertex {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CycField;

// Element of Q(xi_M).  Each value carries its own level M; mixed-level
// arithmetic promotes to the lcm.  Level 1 (rationals) is kept separately so
// the common rational case never touches a coefficient vector.
class CycNum {
public:
    CycNum() = default;
    CycNum(long v) : r_(v) {}
    CycNum(const mpq_class& q) : r_(q) { r_.canonicalize(); }

    // xi_d^p at level d
    static CycNum root(long d, long p);
    // e^{2 pi i t}
    static CycNum from_turn(const mpq_class& t);
    static CycNum I() { return root(4, 1); }

    long level() const;
    bool is_zero() const;
    bool is_rational() const { return f_ == nullptr; }
    const mpq_class& rational() const;
    // coefficient vector in the basis 1, xi_M, ..., xi_M^{phi(M)-1}
    std::vector<mpq_class> coeffs() const;
    CycNum at_level(long M) const;

    CycNum conj() const;
    CycNum inv() const;
    CycNum pow(long e) const;
    // if this is a root of unity, its turn in [0,1); otherwise false
    bool root_turn(mpq_class& turn) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) { return (a - b).is_zero(); }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    void normalize();

    const CycField* f_ = nullptr;
    mpq_class r_;                 // used when f_ == nullptr
    std::vector<mpq_class> c_;    // used otherwise, size phi(M)
};

enum class ArithOp { add, sub, mul, div };
CycNum arith(const CycNum& a, const CycNum& b, ArithOp op);

// Fixed field for a modulus n: M = lcm(4, 2n) houses xi_n, xi_{2n} and sqrt(-1).
struct CycloContext {
    explicit CycloContext(int n);
    int n;
    long M;
    CycNum zeta(long d, long p) const;
    CycNum xi(long p) const { return zeta(n, p); }
    CycNum xi2(long p) const { return zeta(2L * n, p); }
};

long euler_phi(long m);
std::vector<long> cyclotomic_poly(long m);  // integer coefficients, low degree first

// canonical a/b
inline mpq_class frac(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

std::string rat_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace orbivertex
