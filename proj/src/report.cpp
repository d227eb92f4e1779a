#include "orbivertex/report.hpp"

#include <set>

namespace orbivertex {

void CheckReport::merge(const CheckReport& o) {
    cases += o.cases;
    coefficients += o.coefficients;
    if (!o.pass) {
        pass = false;
        if (!first && o.first) first = o.first;
    }
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

bool compare_series(const PuiseuxSeries& a, const PuiseuxSeries& b, const std::string& label, CheckReport& rep,
                    long cap) {
    require_same_vars(a, b);
    ++rep.cases;
    long P = std::min({a.precision(), b.precision(), cap});
    if (P >= kExact) throw DomainError("comparison of exact series needs a cap");
    std::set<Exp> support;
    for (const auto& t : a.terms())
        if (t.g < P) support.insert(t.e);
    for (const auto& t : b.terms())
        if (t.g < P) support.insert(t.e);
    rep.coefficients += static_cast<long>(support.size());
    PuiseuxSeries diff = (a - b).truncated(P);
    if (diff.is_zero()) return true;
    const auto& t = diff.terms().front();
    rep.fail({label, exp_str(*a.vars(), t.e), a.coeff(t.e).str(), b.coeff(t.e).str()});
    return false;
}

}  // namespace orbivertex
