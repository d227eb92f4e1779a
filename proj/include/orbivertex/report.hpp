#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbivertex/series.hpp"

namespace orbivertex {

struct Mismatch {
    std::string label;
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string name;
    long cases = 0;
    long coefficients = 0;
    bool pass = true;
    std::optional<Mismatch> first;
    std::vector<std::string> notes;

    void fail(Mismatch m) {
        pass = false;
        if (!first) first = std::move(m);
    }
    void merge(const CheckReport& o);
};

// compares a and b below the smaller of their precisions (and below cap, in
// scaled grade units); records the first differing coefficient
bool compare_series(const PuiseuxSeries& a, const PuiseuxSeries& b, const std::string& label, CheckReport& rep,
                    long cap = kExact);

}  // namespace orbivertex
