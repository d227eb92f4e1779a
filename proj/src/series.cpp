#include "orbivertex/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace orbivertex {

int VarSet::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    throw DomainError("unknown variable " + name);
}

VarSetPtr make_varset(std::vector<std::string> names, int D, std::vector<int> weight) {
    if (names.size() > static_cast<size_t>(kMaxVars)) throw DomainError("too many variables");
    if (D < 1) throw DomainError("exponent denominator must be positive");
    auto vs = std::make_shared<VarSet>();
    if (weight.empty()) weight.assign(names.size(), 1);
    if (weight.size() != names.size()) throw DomainError("weight vector size mismatch");
    vs->names = std::move(names);
    vs->D = D;
    vs->weight = std::move(weight);
    return vs;
}

VarSetPtr q_vars(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    return make_varset(names, 2 * n);
}

VarSetPtr gw_vars(int n) {
    std::vector<std::string> names{"u"};
    for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    return make_varset(names, 1);
}

namespace {

bool term_less(const PuiseuxSeries::Term& a, const PuiseuxSeries::Term& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.e < b.e;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
    return r;
}

bool exp_zero(const Exp& a) {
    for (auto v : a)
        if (v) return false;
    return true;
}

using Bucket = std::unordered_map<Exp, CycNum, ExpHash>;

PuiseuxSeries from_buckets(const VarSetPtr& vs, long prec, std::vector<Bucket>& B, long offset) {
    std::vector<PuiseuxSeries::Term> raw;
    for (size_t g = 0; g < B.size(); ++g)
        for (auto& [e, c] : B[g])
            if (!c.is_zero()) raw.push_back({e, static_cast<long>(g) + offset, c});
    return PuiseuxSeries::from_map(vs, prec, std::move(raw));
}

PuiseuxSeries exp_scaled(const PuiseuxSeries& f, long P) {
    const auto& vs = f.vars();
    for (const auto& t : f.terms())
        if (t.g <= 0) throw DomainError("exp_series: argument must have positive valuation");
    P = std::min(P, f.precision());
    if (P <= 0) return PuiseuxSeries(vs, P);
    std::vector<Bucket> E(P);
    E[0][Exp{}] = CycNum(1);
    std::vector<std::pair<long, std::pair<Exp, CycNum>>> F;
    for (const auto& t : f.terms())
        if (t.g < P) F.push_back({t.g, {t.e, t.c * CycNum(t.g)}});
    for (long g = 1; g < P; ++g) {
        Bucket& cur = E[g];
        for (const auto& [h, ec] : F) {
            if (h > g) break;
            for (const auto& [e, c] : E[g - h]) {
                auto& slot = cur[exp_add(e, ec.first)];
                slot += ec.second * c;
            }
        }
        if (cur.empty()) continue;
        CycNum ig(mpq_class(1, g));
        for (auto& [e, c] : cur) c *= ig;
    }
    return from_buckets(vs, P, E, 0);
}

// 1/(1+h), h of positive valuation, to scaled precision P
PuiseuxSeries geometric_inverse(const PuiseuxSeries& h, long P) {
    const auto& vs = h.vars();
    P = std::min(P, h.precision());
    if (P <= 0) return PuiseuxSeries(vs, P);
    std::vector<Bucket> G(P);
    G[0][Exp{}] = CycNum(1);
    for (long g = 1; g < P; ++g) {
        Bucket& cur = G[g];
        for (const auto& t : h.terms()) {
            if (t.g > g) break;
            for (const auto& [e, c] : G[g - t.g]) cur[exp_add(e, t.e)] -= t.c * c;
        }
    }
    return from_buckets(vs, P, G, 0);
}

PuiseuxSeries invert_scaled(const PuiseuxSeries& f, long P) {
    if (f.is_zero()) throw DomainError("invert: zero series");
    const auto& T = f.terms();
    long v = T.front().g;
    if (T.size() > 1 && T[1].g == v) throw DomainError("invert: lowest-order part is not a unit monomial");
    CycNum ic = T.front().c.inv();
    Exp m = T.front().e;
    PuiseuxSeries h(f.vars(), f.precision() >= kExact ? kExact : f.precision() - v);
    std::vector<PuiseuxSeries::Term> raw;
    for (size_t i = 1; i < T.size(); ++i) raw.push_back({exp_sub(T[i].e, m), T[i].g - v, T[i].c * ic});
    h = PuiseuxSeries::from_map(f.vars(), h.precision(), std::move(raw));
    PuiseuxSeries G = geometric_inverse(h, P + v);
    Exp neg{};
    for (int i = 0; i < kMaxVars; ++i) neg[i] = static_cast<int16_t>(-m[i]);
    return G.scaled(ic).mul_monomial(neg).truncated(P);
}

PuiseuxSeries log_scaled(const PuiseuxSeries& f, long P) {
    bool one = false;
    for (const auto& t : f.terms()) {
        if (t.g < 0) throw DomainError("log_series: negative-order term");
        if (t.g == 0) {
            if (!exp_zero(t.e) || t.c != CycNum(1)) throw DomainError("log_series: constant term must be 1");
            one = true;
        }
    }
    if (!one) throw DomainError("log_series: constant term must be 1");
    P = std::min(P, f.precision());
    PuiseuxSeries fi = invert_scaled(f, P);
    PuiseuxSeries th = f.map_coeffs([](const PuiseuxSeries::Term& t) { return CycNum(t.g); });
    PuiseuxSeries q = (th * fi).truncated(P);
    return q.map_coeffs([](const PuiseuxSeries::Term& t) {
        if (t.g == 0) throw DomainError("log_series: internal grade error");
        return CycNum(mpq_class(1, t.g));
    });
}

}  // namespace

PuiseuxSeries PuiseuxSeries::from_map(VarSetPtr vs, long prec, std::vector<Term> raw) {
    PuiseuxSeries out(std::move(vs), prec);
    std::sort(raw.begin(), raw.end(), term_less);
    for (auto& t : raw) {
        if (t.g >= prec) continue;
        if (!out.terms_.empty() && out.terms_.back().g == t.g && out.terms_.back().e == t.e) {
            out.terms_.back().c += t.c;
            if (out.terms_.back().c.is_zero()) out.terms_.pop_back();
        } else if (!t.c.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::constant(VarSetPtr vs, const CycNum& c) { return monomial(std::move(vs), Exp{}, c); }

PuiseuxSeries PuiseuxSeries::monomial(VarSetPtr vs, const Exp& e, const CycNum& c) {
    PuiseuxSeries out(vs);
    if (!c.is_zero()) out.terms_.push_back({e, vs->grade(e), c});
    return out;
}

PuiseuxSeries PuiseuxSeries::variable(VarSetPtr vs, int i, const CycNum& c) {
    Exp e{};
    e[i] = static_cast<int16_t>(vs->D);
    return monomial(std::move(vs), e, c);
}

void require_same_vars(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (!a.vars() || !b.vars() || !(*a.vars() == *b.vars())) throw DomainError("variable set mismatch");
}

Exp PuiseuxSeries::scaled_exp(const std::vector<mpq_class>& e) const {
    if (static_cast<int>(e.size()) != vs_->size()) throw DomainError("exponent vector has wrong length");
    Exp out{};
    for (size_t i = 0; i < e.size(); ++i) {
        mpq_class s = e[i] * vs_->D;
        s.canonicalize();
        if (s.get_den() != 1) throw DomainError("exponent outside the 1/D lattice");
        out[i] = static_cast<int16_t>(s.get_num().get_si());
    }
    return out;
}

CycNum PuiseuxSeries::coeff(const Exp& e) const {
    long g = vs_->grade(e);
    if (g >= prec_) throw DomainError("coefficient requested at or above truncation order");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, g, CycNum()}, term_less);
    if (it != terms_.end() && it->g == g && it->e == e) return it->c;
    return CycNum(0);
}

CycNum PuiseuxSeries::coeff(const std::vector<mpq_class>& e) const { return coeff(scaled_exp(e)); }

PuiseuxSeries PuiseuxSeries::truncated(long prec) const {
    PuiseuxSeries out(vs_, std::min(prec, prec_));
    for (const auto& t : terms_) {
        if (t.g >= out.prec_) break;
        out.terms_.push_back(t);
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::mul_monomial(const Exp& e) const {
    long g = vs_->grade(e);
    PuiseuxSeries out(vs_, prec_add(prec_, g));
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({exp_add(t.e, e), t.g + g, t.c});
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

PuiseuxSeries PuiseuxSeries::scaled(const CycNum& c) const {
    PuiseuxSeries out(vs_, prec_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.c *= c;
    return out;
}

PuiseuxSeries PuiseuxSeries::map_coeffs(const std::function<CycNum(const Term&)>& f) const {
    PuiseuxSeries out(vs_, prec_);
    for (const auto& t : terms_) {
        CycNum c = t.c * f(t);
        if (!c.is_zero()) out.terms_.push_back({t.e, t.g, c});
    }
    return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
    if (!vs_) return *this = o;
    require_same_vars(*this, o);
    std::vector<Term> raw;
    raw.reserve(terms_.size() + o.terms_.size());
    // merge of two sorted lists
    size_t i = 0, j = 0;
    long P = std::min(prec_, o.prec_);
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && term_less(terms_[i], o.terms_[j]))) {
            if (terms_[i].g < P) raw.push_back(std::move(terms_[i]));
            ++i;
        } else if (i == terms_.size() || term_less(o.terms_[j], terms_[i])) {
            if (o.terms_[j].g < P) raw.push_back(o.terms_[j]);
            ++j;
        } else {
            if (terms_[i].g < P) {
                CycNum c = terms_[i].c + o.terms_[j].c;
                if (!c.is_zero()) raw.push_back({terms_[i].e, terms_[i].g, c});
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(raw);
    prec_ = P;
    return *this;
}

void PuiseuxSeries::add_term(const Exp& e, const CycNum& c) {
    long g = vs_->grade(e);
    if (g >= prec_ || c.is_zero()) return;
    Term t{e, g, c};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
    if (it != terms_.end() && it->g == g && it->e == e) {
        it->c += c;
        if (it->c.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    require_same_vars(a, b);
    long P = std::min(prec_add(a.precision(), b.valuation()), prec_add(b.precision(), a.valuation()));
    if (a.is_zero() || b.is_zero()) return PuiseuxSeries(a.vars(), P);
    std::unordered_map<Exp, CycNum, ExpHash> acc;
    acc.reserve(a.terms().size() * 4);
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            if (s.g + t.g >= P) break;
            acc[exp_add(s.e, t.e)] += s.c * t.c;
        }
    }
    std::vector<PuiseuxSeries::Term> raw;
    raw.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) raw.push_back({e, a.vars()->grade(e), std::move(c)});
    return PuiseuxSeries::from_map(a.vars(), P, std::move(raw));
}

std::string exp_str(const VarSet& vs, const Exp& e) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < vs.size(); ++i) {
        if (!e[i]) continue;
        if (!first) os << "*";
        first = false;
        os << vs.names[i];
        mpq_class q(e[i], vs.D);
        q.canonicalize();
        if (q != 1) os << "^" << (q.get_den() == 1 ? q.get_str() : "(" + q.get_str() + ")");
    }
    return first ? "1" : os.str();
}

std::string PuiseuxSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.c.str() << ")";
        if (!exp_zero(t.e)) os << "*" << exp_str(*vs_, t.e);
    }
    if (first) os << "0";
    if (!exact()) {
        mpq_class q(prec_, vs_->D);
        q.canonicalize();
        os << " + O(" << q.get_str() << ")";
    }
    return os.str();
}

PuiseuxSeries invert(const PuiseuxSeries& f, long order) { return invert_scaled(f, order * f.vars()->D); }
PuiseuxSeries exp_series(const PuiseuxSeries& f, long order) { return exp_scaled(f, order * f.vars()->D); }
PuiseuxSeries log_series(const PuiseuxSeries& f, long order) { return log_scaled(f, order * f.vars()->D); }

VariableImage image_of(const PuiseuxSeries& g, long order) {
    if (g.is_zero()) throw DomainError("image series is zero");
    const auto& T = g.terms();
    if (T.size() > 1 && T[1].g == T[0].g) throw DomainError("image has no unit leading monomial");
    VariableImage im;
    CycNum c = T[0].c;
    mpq_class turn;
    if (c.root_turn(turn)) {
        im.turn = turn;
    } else {
        im.scale = c;
    }
    im.mono = T[0].e;
    Exp neg{};
    for (int i = 0; i < kMaxVars; ++i) neg[i] = static_cast<int16_t>(-im.mono[i]);
    PuiseuxSeries unit = g.scaled(c.inv()).mul_monomial(neg);
    im.log = log_series(unit, order);
    return im;
}

namespace {

struct ImageEval {
    const std::vector<VariableImage>& im;
    const VarSet& src;
    VarSetPtr tgt;

    CycNum constant(const Exp& E) const {
        CycNum out(1);
        mpq_class turn = 0;
        for (int i = 0; i < src.size(); ++i) {
            if (!E[i]) continue;
            turn += im[i].turn * frac(E[i], src.D);
            if (im[i].scale != CycNum(1)) {
                if (E[i] % src.D) throw DomainError("fractional power of a non-root-of-unity constant");
                out *= im[i].scale.pow(E[i] / src.D);
            }
        }
        turn.canonicalize();
        return out * CycNum::from_turn(turn);
    }
    Exp mono(const Exp& E) const {
        Exp out{};
        for (int j = 0; j < tgt->size(); ++j) {
            long s = 0;
            for (int i = 0; i < src.size(); ++i) s += static_cast<long>(E[i]) * im[i].mono[j];
            if (s % src.D) throw DomainError("image monomial exponent leaves the target lattice");
            out[j] = static_cast<int16_t>(s / src.D);
        }
        return out;
    }
    PuiseuxSeries log(const Exp& E, long prec) const {
        PuiseuxSeries out(tgt, prec);
        for (int i = 0; i < src.size(); ++i) {
            if (!E[i]) continue;
            out += im[i].log.truncated(prec).scaled(CycNum(frac(E[i], src.D)));
        }
        return out;
    }
};

}  // namespace

PuiseuxSeries substitute(const PuiseuxSeries& f, const std::vector<VariableImage>& images, VarSetPtr target,
                         long order) {
    const VarSet& src = *f.vars();
    if (static_cast<int>(images.size()) != src.size()) throw DomainError("substitute: one image per variable required");
    ImageEval ev{images, src, target};
    long P = order * target->D;
    if (!f.exact()) {
        // unknown terms must map above the target order: proportional positive valuations
        mpq_class lam = -1;
        for (int i = 0; i < src.size(); ++i) {
            long v = target->grade(images[i].mono);
            if (!images[i].log.is_zero() && images[i].log.valuation() <= 0)
                throw DomainError("substitute: image log part must have positive valuation");
            mpq_class r(v, static_cast<long>(src.weight[i]) * src.D);
            r.canonicalize();
            if (lam < 0) lam = r;
            if (r != lam || r <= 0)
                throw DomainError("substitute: truncated input needs proportional positive image valuations");
        }
        mpq_class bound = lam * f.precision();
        mpz_class cap = bound.get_num() / bound.get_den();
        if (cap < P) P = cap.get_si();
    }
    PuiseuxSeries out(target, P);
    for (const auto& t : f.terms()) {
        Exp m = ev.mono(t.e);
        long gm = target->grade(m);
        if (gm >= P) continue;
        PuiseuxSeries L = ev.log(t.e, P - gm);
        PuiseuxSeries E = exp_scaled(L, P - gm);
        out += E.scaled(t.c * ev.constant(t.e)).mul_monomial(m).truncated(P);
    }
    return out;
}

namespace uni {

Poly mul(const Poly& a, const Poly& b, size_t N) {
    Poly r(N);
    for (size_t i = 0; i < a.size() && i < N; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < N; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly exp(const Poly& a, size_t N) {
    if (!a.empty() && !a[0].is_zero()) throw DomainError("uni::exp needs zero constant term");
    Poly e(N);
    if (N == 0) return e;
    e[0] = CycNum(1);
    for (size_t n = 1; n < N; ++n) {
        CycNum s;
        for (size_t k = 1; k <= n && k < a.size(); ++k) s += CycNum(static_cast<long>(k)) * a[k] * e[n - k];
        e[n] = s * CycNum(mpq_class(1, n));
    }
    return e;
}

Poly log1p(const Poly& a, size_t N) {
    if (!a.empty() && !a[0].is_zero()) throw DomainError("uni::log1p needs zero constant term");
    Poly L(N);
    auto at = [&](size_t i) { return i < a.size() ? a[i] : CycNum(); };
    for (size_t n = 1; n < N; ++n) {
        CycNum s = CycNum(static_cast<long>(n)) * at(n);
        for (size_t k = 1; k < n; ++k) s -= CycNum(static_cast<long>(k)) * L[k] * at(n - k);
        L[n] = s * CycNum(mpq_class(1, n));
    }
    return L;
}

Poly inv(const Poly& a, size_t N) {
    if (a.empty() || a[0].is_zero()) throw DomainError("uni::inv needs nonzero constant term");
    Poly r(N);
    CycNum i0 = a[0].inv();
    if (N) r[0] = i0;
    for (size_t n = 1; n < N; ++n) {
        CycNum s;
        for (size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * r[n - k];
        r[n] = -s * i0;
    }
    return r;
}

PuiseuxSeries compose(const Poly& p, const PuiseuxSeries& L, long prec) {
    const auto& vs = L.vars();
    prec = std::min(prec, L.precision() >= kExact ? kExact : L.precision());
    if (L.is_zero()) {
        PuiseuxSeries out(vs, prec);
        if (!p.empty()) out.add_term(Exp{}, p[0]);
        return out;
    }
    long v = L.valuation();
    if (v <= 0) throw DomainError("compose: inner series must have positive valuation");
    long have = static_cast<long>(p.size()) * v;
    PuiseuxSeries out(vs, std::min(prec, have));
    PuiseuxSeries pw = PuiseuxSeries::constant(vs, CycNum(1)).truncated(out.precision());
    for (size_t m = 0; m < p.size(); ++m) {
        if (pw.valuation() >= out.precision()) break;
        if (!p[m].is_zero()) out += pw.scaled(p[m]);
        pw = (pw * L).truncated(out.precision());
    }
    return out;
}

}  // namespace uni

LogLinear& LogLinear::operator*=(const LogLinear& o) {
    coeff *= o.coeff;
    for (int i = 0; i < kMaxVars; ++i) mono[i] = static_cast<int16_t>(mono[i] + o.mono[i]);
    log += o.log;
    return *this;
}

PuiseuxSeries LogLinear::expand(long order) const {
    const auto& vs = log.vars();
    long P = order * vs->D;
    long gm = vs->grade(mono);
    PuiseuxSeries E = exp_scaled(log.truncated(P - gm), P - gm);
    return E.scaled(coeff).mul_monomial(mono).truncated(P);
}

FactoredSeries& FactoredSeries::operator*=(const FactoredSeries& o) {
    if (!(*vs_ == *o.vs_)) throw DomainError("variable set mismatch");
    coeff *= o.coeff;
    for (int i = 0; i < kMaxVars; ++i) mono[i] = static_cast<int16_t>(mono[i] + o.mono[i]);
    den.insert(den.end(), o.den.begin(), o.den.end());
    return *this;
}

PuiseuxSeries FactoredSeries::expand(long order) const {
    long P = order * vs_->D;
    long Pp = P - vs_->grade(mono);
    if (Pp <= 0) return PuiseuxSeries(vs_, P);
    PuiseuxSeries acc = PuiseuxSeries::constant(vs_, coeff).truncated(Pp);
    for (const auto& f : den) {
        long g = vs_->grade(f.m);
        if (g <= 0) throw DomainError("expand: denominator monomial must have positive order");
        PuiseuxSeries geo(vs_, Pp);
        CycNum c(1);
        Exp e{};
        for (long k = 0; k * g < Pp; ++k) {
            geo.add_term(e, c);
            c *= f.c;
            e = exp_add(e, f.m);
        }
        acc = acc * geo;
    }
    return acc.mul_monomial(mono).truncated(P);
}

FactoredSeries FactoredSeries::negate_variable(int i) const {
    FactoredSeries out = *this;
    int D = vs_->D;
    auto sign = [&](const Exp& e) {
        if (e[i] % D) throw DomainError("sign flip of a variable with fractional exponent");
        return ((e[i] / D) % 2 == 0) ? CycNum(1) : CycNum(-1);
    };
    out.coeff *= sign(mono);
    for (auto& f : out.den) f.c *= sign(f.m);
    return out;
}

FactoredSeries FactoredSeries::permute(const std::vector<int>& perm) const {
    FactoredSeries out = *this;
    auto apply = [&](const Exp& e) {
        Exp r{};
        for (int i = 0; i < vs_->size(); ++i) r[perm[i]] = static_cast<int16_t>(r[perm[i]] + e[i]);
        return r;
    };
    out.mono = apply(mono);
    for (auto& f : out.den) f.m = apply(f.m);
    return out;
}

namespace {

// -log(1 - r(e^t - 1))
uni::Poly log_regular(const CycNum& r, size_t N) {
    uni::Poly a(N);
    mpq_class f = 1;
    for (size_t k = 1; k < N; ++k) {
        f /= static_cast<long>(k);
        a[k] = -(r * CycNum(f));
    }
    uni::Poly L = uni::log1p(a, N);
    for (auto& c : L) c = -c;
    return L;
}

// -log((e^t - 1)/t)
uni::Poly log_pole(size_t N) {
    uni::Poly a(N);
    mpq_class f = 1;
    for (size_t k = 1; k < N; ++k) {
        f /= static_cast<long>(k + 1);
        a[k] = CycNum(f);
    }
    uni::Poly L = uni::log1p(a, N);
    for (auto& c : L) c = -c;
    return L;
}

}  // namespace

LogLinear FactoredSeries::to_loglinear(const std::vector<VariableImage>& images, VarSetPtr target, long order,
                                       long extra_slack) const {
    const VarSet& src = *vs_;
    if (static_cast<int>(images.size()) != src.size()) throw DomainError("to_loglinear: one image per variable required");
    ImageEval ev{images, src, target};

    enum Kind { geometric, regular, pole };
    struct Item {
        Kind kind;
        CycNum c;
        Exp mono;
        PuiseuxSeries L;
    };
    std::vector<Item> items;
    LogLinear out;
    out.coeff = coeff * ev.constant(mono);
    out.mono = ev.mono(mono);
    for (const auto& f : den) {
        Item it{geometric, f.c * ev.constant(f.m), ev.mono(f.m), ev.log(f.m, kExact)};
        long g = target->grade(it.mono);
        if (g > 0) {
            items.push_back(std::move(it));
            continue;
        }
        if (g < 0 || !exp_zero(it.mono)) throw DomainError("to_loglinear: denominator image is not a unit");
        if (it.c != CycNum(1)) {
            it.kind = regular;
            items.push_back(std::move(it));
            continue;
        }
        const auto& T = it.L.terms();
        if (T.size() != 1 || T[0].g <= 0 || (!it.L.exact() && it.L.precision() <= T[0].g))
            throw DomainError("to_loglinear: pole factor 1/(1 - e^L) needs L to be a single monomial");
        it.kind = pole;
        out.coeff *= -T[0].c.inv();
        out.mono = exp_sub(out.mono, T[0].e);
        items.push_back(std::move(it));
    }
    long P = (order + extra_slack) * target->D - target->grade(out.mono);
    out.log = ev.log(mono, P);
    for (auto& it : items) {
        if (it.kind == geometric) {
            LogLinear x{it.c, it.mono, it.L.truncated(P)};
            PuiseuxSeries one = PuiseuxSeries::constant(target, CycNum(1)).truncated(P);
            PuiseuxSeries X = x.expand(P / target->D + 1).truncated(P);
            out.log -= log_scaled(one - X, P);
            continue;
        }
        if (it.L.is_zero()) {
            if (it.kind == regular) out.coeff *= (CycNum(1) - it.c).inv();
            continue;
        }
        long v = it.L.valuation();
        size_t N = static_cast<size_t>(P / v + 2);
        if (it.kind == regular) {
            CycNum one_minus = CycNum(1) - it.c;
            out.coeff *= one_minus.inv();
            out.log += uni::compose(log_regular(it.c * one_minus.inv(), N), it.L, P);
        } else {
            out.log += uni::compose(log_pole(N), it.L, P);
        }
    }
    out.log = out.log.truncated(P);
    return out;
}

std::string FactoredSeries::str() const {
    std::ostringstream os;
    os << "(" << coeff.str() << ")";
    if (!exp_zero(mono)) os << "*" << exp_str(*vs_, mono);
    for (const auto& f : den) os << "/(1 - (" << f.c.str() << ")*" << exp_str(*vs_, f.m) << ")";
    return os.str();
}

}  // namespace orbivertex
