#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "json_out.hpp"
#include "orbivertex/fock.hpp"
#include "orbivertex/gerbe.hpp"
#include "orbivertex/hurwitz.hpp"
#include "orbivertex/loop_schur.hpp"
#include "orbivertex/suites.hpp"
#include "orbivertex/vertex.hpp"

using namespace orbivertex;

namespace {

long default_order() {
    if (const char* v = std::getenv("ORBIVERTEX_ORDER")) {
        try {
            long o = std::stol(v);
            if (o >= 1) return o;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring invalid ORBIVERTEX_ORDER=" << v << "\n";
    }
    return 6;
}

struct Config {
    int n = 1, d = 1, k = 0, max_n = 2, max_d = 2, max_size = 6, threads = 1, r = -1;
    long order = default_order();
    std::string a = "0", b = "-1", shape, mu, nu, lambda, gamma, suite, output;
};

int emit(const ordered_json& j, const Config& c, bool ok) {
    std::string text = j.dump(2) + "\n";
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.output);
        if (!f) throw DomainError("cannot write " + c.output);
        f << text;
    }
    return ok ? 0 : 1;
}

MultiPartition label_for(const std::string& s, int n) {
    auto m = parse_multipartition(s);
    if (m.n() != n) throw DomainError("label " + s + " does not have n = " + std::to_string(n));
    return m;
}

int run_chartable(const Config& c) {
    auto t = char_table(c.n, c.d);
    return emit(to_json(*t), c, true);
}

int run_schur(const Config& c) {
    Partition lbar = parse_partition(c.shape);
    FactoredSeries F = shifted_schur_factored(lbar, c.n, c.k);
    ordered_json j;
    j["n"] = c.n;
    j["shape"] = lbar.str();
    j["quotient"] = balanced(lbar, c.n) ? ordered_json(n_quotient(lbar, c.n).str()) : ordered_json(nullptr);
    j["k"] = c.k;
    j["order"] = c.order;
    j["factored"] = F.str();
    j["series"] = to_json(F.expand(c.order));
    return emit(j, c, true);
}

int run_vertex(const Config& c) {
    mpq_class a = parse_rational(c.a);
    ordered_json j;
    j["n"] = c.n;
    j["a"] = rat_str(a);
    j["order"] = c.order;
    if (!c.lambda.empty()) {
        auto lam = label_for(c.lambda, c.n);
        j["side"] = "dt";
        j["label"] = lam.str();
        j["factored"] = dt_vertex_factored(lam, a).str();
        j["series"] = to_json(dt_vertex(lam, a, c.order));
    } else {
        auto mu = label_for(c.mu, c.n);
        j["side"] = "gw";
        j["label"] = mu.str();
        j["series"] = to_json(gw_vertex(mu, a, c.order));
    }
    return emit(j, c, true);
}

int run_hurwitz(const Config& c) {
    auto nu = label_for(c.nu, c.n), mu = label_for(c.mu, c.n);
    ordered_json j;
    j["n"] = c.n;
    j["nu"] = nu.str();
    j["mu"] = mu.str();
    j["order"] = c.order;
    auto h = burnside(nu, mu, c.order);
    j["burnside"] = to_json(h.value);
    if (c.a != "0") {
        mpq_class a = parse_rational(c.a);
        j["a"] = rat_str(a);
        j["h_tilde"] = h.size_mismatch ? ordered_json(nullptr) : to_json(h_tilde(nu, mu, a, c.order));
    }
    if (c.r >= 0) {
        std::vector<int> gamma(c.n - 1, 0);
        if (!c.gamma.empty()) gamma = parse_partition(c.gamma).parts;
        if (static_cast<int>(gamma.size()) != c.n - 1) throw DomainError("--gamma needs n-1 entries");
        j["r"] = c.r;
        j["gamma"] = gamma;
        j["count"] = wreath_hurwitz_count_cyc(nu, mu, c.r, gamma).str();
    }
    return emit(j, c, true);
}

int run_gerbe(const Config& c) {
    LocalGerbe X{c.n, c.k, parse_rational(c.b)};
    auto gw = gw_potential(X, c.d, c.order);
    auto dt = dt_potential(X, c.d, c.order);
    CheckReport rep;
    rep.name = "gerbe";
    compare_series(gw, dt, X.str(), rep);
    ordered_json j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["b"] = rat_str(X.b);
    j["degree"] = c.d;
    j["order"] = c.order;
    j["gw"] = to_json(gw);
    j["dt"] = to_json(dt);
    j["equal"] = rep.pass;
    j["first_mismatch"] = to_json(rep)["first_mismatch"];
    return emit(j, c, rep.pass);
}

int run_verify(const Config& c, bool single_gerbe) {
    using Job = std::function<CheckReport()>;
    std::vector<std::pair<std::string, Job>> jobs;
    auto add = [&](const std::string& name, Job f) { jobs.emplace_back(name, std::move(f)); };
    const std::string& s = c.suite;
    bool all = s == "all";
    if (s == "reduction" || s == "theorem1" || all)
        add("reduction", [&] { return suite_reduction(c.max_n, c.max_d, c.order); });
    if (s == "relations" || s == "theorem1" || all)
        add("relations", [&] { return suite_relations(c.max_n, c.max_d, c.order); });
    if (s == "appendix" || s == "theorem1" || all) add("appendix", [&] { return suite_appendix(c.max_n, c.max_d); });
    if (s == "strips" || all) add("strips", [&] { return suite_strips(c.max_n, c.max_size, 2, c.order); });
    if (s == "theorem2" || all) {
        if (single_gerbe)
            add("theorem2", [&] { return verify_theorem2(LocalGerbe{c.n, c.k, parse_rational(c.b)}, c.d, c.order); });
        else
            add("theorem2", [&] { return suite_theorem2(c.max_n, c.max_d, c.order); });
    }
    std::vector<CheckReport> results(jobs.size());
    if (c.threads > 1) {
        std::vector<std::future<CheckReport>> fut;
        for (auto& [name, f] : jobs) fut.push_back(std::async(std::launch::async, f));
        for (size_t i = 0; i < fut.size(); ++i) results[i] = fut[i].get();
    } else {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i].second();
    }
    ordered_json j;
    j["suite"] = s;
    j["max_n"] = c.max_n;
    j["max_d"] = c.max_d;
    j["order"] = c.order;
    ordered_json reports = ordered_json::object();
    bool ok = true;
    for (size_t i = 0; i < jobs.size(); ++i) {
        reports[jobs[i].first] = to_json(results[i]);
        ok = ok && results[i].pass;
        if (!results[i].pass && results[i].first)
            std::cerr << jobs[i].first << ": " << results[i].first->label << " at " << results[i].first->monomial
                      << ": " << results[i].first->lhs << " != " << results[i].first->rhs << "\n";
    }
    j["reports"] = reports;
    j["pass"] = ok;
    return emit(j, c, ok);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for the orbifold topological vertex of Z_n-gerbes"};
    app.require_subcommand(1);
    Config c;
    auto order_opt = [&](CLI::App* s) {
        s->add_option("--order", c.order, "truncation order (default $ORBIVERTEX_ORDER or 6)")
            ->check(CLI::PositiveNumber);
        s->add_option("-o,--output", c.output, "write JSON here instead of stdout");
    };
    auto n_opt = [&](CLI::App* s) { s->add_option("--n", c.n, "order of the cyclic group")->check(CLI::Range(1, 12)); };

    auto* ct = app.add_subcommand("chartable", "character table of Z_n wr S_d");
    n_opt(ct);
    ct->add_option("--d", c.d)->check(CLI::Range(0, 12));
    ct->add_option("-o,--output", c.output);

    auto* sc = app.add_subcommand("schur", "loop Schur function of a diagram");
    n_opt(sc);
    sc->add_option("--shape", c.shape, "diagram, e.g. 4,3,3,1")->required();
    sc->add_option("--k", c.k, "shift k of S^k")->check(CLI::NonNegativeNumber);
    order_opt(sc);

    auto* vx = app.add_subcommand("vertex", "framed GW vertex (--mu) or DT vertex (--lambda)");
    n_opt(vx);
    auto* mu_opt = vx->add_option("--mu", c.mu, "conjugacy class, e.g. 2:(1^0,1^1)");
    auto* lam_opt = vx->add_option("--lambda", c.lambda, "irrep label, e.g. 2:(2^1)");
    mu_opt->excludes(lam_opt);
    vx->add_option("--a", c.a, "framing p/q");
    order_opt(vx);

    auto* hz = app.add_subcommand("hurwitz", "wreath Hurwitz generating function");
    n_opt(hz);
    hz->add_option("--nu", c.nu)->required();
    hz->add_option("--mu", c.mu)->required();
    hz->add_option("--a", c.a, "also emit Htilde at this framing");
    hz->add_option("--r", c.r, "emit the count with r simple branch points");
    hz->add_option("--gamma", c.gamma, "twisted point counts gamma_1,...,gamma_{n-1}");
    order_opt(hz);

    auto* gb = app.add_subcommand("gerbe", "GW and DT potentials of a local gerbe");
    n_opt(gb);
    gb->add_option("--k", c.k, "gerbe class")->check(CLI::NonNegativeNumber);
    gb->add_option("--b", c.b, "degree of the first summand, p/q");
    gb->add_option("--degree", c.d)->check(CLI::PositiveNumber);
    order_opt(gb);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", c.suite)
        ->required()
        ->check(CLI::IsMember({"reduction", "relations", "appendix", "theorem1", "theorem2", "strips", "all"}));
    vf->add_option("--max-n", c.max_n)->check(CLI::Range(1, 6));
    vf->add_option("--max-d", c.max_d)->check(CLI::Range(1, 6));
    vf->add_option("--max-size", c.max_size, "diagram size bound for strips")->check(CLI::Range(0, 12));
    vf->add_option("--threads", c.threads, "run suites concurrently")->check(CLI::PositiveNumber);
    auto* vn = vf->add_option("--n", c.n, "theorem2: single gerbe instead of the standard list");
    vf->add_option("--k", c.k)->needs(vn);
    vf->add_option("--b", c.b)->needs(vn);
    vf->add_option("--degree", c.d)->needs(vn);
    order_opt(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    try {
        if (*ct) return run_chartable(c);
        if (*sc) return run_schur(c);
        if (*vx) {
            if (c.mu.empty() && c.lambda.empty()) throw DomainError("vertex needs --mu or --lambda");
            return run_vertex(c);
        }
        if (*hz) return run_hurwitz(c);
        if (*gb) return run_gerbe(c);
        if (*vf) return run_verify(c, vn->count() > 0);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
