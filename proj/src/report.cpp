#include "lhkit/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lhkit/bessel2_reference.hpp"
#include "lhkit/forms.hpp"
#include "lhkit/mops.hpp"
#include "lhkit/odelh.hpp"
#include "lhkit/structure.hpp"

namespace lhkit {

std::optional<CheckKind> check_from_name(const std::string& name) {
    if (name == "functional-eq") return CheckKind::functional_eq;
    if (name == "riccati") return CheckKind::riccati;
    if (name == "r4") return CheckKind::r4;
    if (name == "cd-recurrence") return CheckKind::cd_recurrence;
    if (name == "system") return CheckKind::system;
    if (name == "class") return CheckKind::class_criterion;
    if (name == "window") return CheckKind::window;
    if (name == "section5") return CheckKind::bessel2_reference;
    if (name == "ode") return CheckKind::ode;
    return std::nullopt;
}

std::string check_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::functional_eq: return "functional-eq";
        case CheckKind::riccati: return "riccati";
        case CheckKind::r4: return "r4";
        case CheckKind::cd_recurrence: return "cd-recurrence";
        case CheckKind::system: return "system";
        case CheckKind::class_criterion: return "class";
        case CheckKind::window: return "window";
        case CheckKind::bessel2_reference: return "section5";
        case CheckKind::ode: return "ode";
    }
    return "?";
}

std::vector<CheckEntry> parallel_checks(const std::vector<std::function<CheckEntry()>>& jobs) {
    std::vector<CheckEntry> out(jobs.size());
    unsigned workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("LHKIT_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) workers = static_cast<unsigned>(v);
    }
    if (workers <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            out[i] = jobs[i]();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<size_t>(workers, jobs.size()); ++w)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

namespace {

CheckEntry entry_zero_rational(const std::string& name, int n, const Rational& residual) {
    CheckEntry e;
    e.name = name;
    e.n = n;
    e.pass = residual.is_zero();
    if (!e.pass) e.residual = residual.str();
    return e;
}

CheckEntry entry_zero_poly(const std::string& name, int n, const Polynomial& residual) {
    CheckEntry e;
    e.name = name;
    e.n = n;
    e.pass = residual.is_zero();
    if (!e.pass) e.residual = residual.str();
    return e;
}

std::vector<CheckEntry> suite_functional_eq(const Family& fam, int n_max) {
    const auto res = functional_equation_residual(fam, n_max);
    std::vector<CheckEntry> out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back(entry_zero_rational("functional-eq residual", n, res[n]));
    return out;
}

std::vector<CheckEntry> suite_riccati(const Family& fam, int n_max) {
    std::vector<CheckEntry> out;
    const auto res = riccati_residual_series(fam, n_max);
    for (int j = 0; j <= n_max; ++j)
        out.push_back(entry_zero_rational("riccati series coefficient z^-j", j, res[j]));
    // D_0 from moments must equal the closed form -(c2 + b2 + a1).
    const Polynomial d0 = D0_from_moments(fam);
    const Polynomial d0_closed = D_closed(fam, 0);
    CheckEntry e;
    e.name = "D0 from moments equals -(c2+b2+a1)";
    e.pass = d0 == d0_closed;
    if (!e.pass) {
        e.lhs = d0.str();
        e.rhs = d0_closed.str();
    }
    out.push_back(std::move(e));
    return out;
}

std::vector<CheckEntry> suite_r4(const Family& fam, int n_max) {
    std::vector<std::function<CheckEntry()>> jobs;
    for (int n = 0; n <= n_max; ++n)
        jobs.push_back([&fam, n] { return entry_zero_poly("R4 residual", n, verify_R4(fam, n)); });
    return parallel_checks(jobs);
}

std::vector<CheckEntry> suite_cd(const Family& fam, int n_max) {
    std::vector<CheckEntry> out;
    const auto cd = run_CD_recurrence(fam, n_max);
    for (const auto& pair : cd) {
        {
            CheckEntry e;
            e.name = "C_n: recurrence = closed form = table";
            e.n = pair.n;
            const Polynomial closed = C_closed(fam, pair.n);
            const Polynomial table = fam.C(pair.n);
            e.pass = pair.C == closed && closed == table;
            if (!e.pass) {
                e.lhs = pair.C.str();
                e.rhs = closed.str() + " | " + table.str();
            }
            out.push_back(std::move(e));
        }
        {
            CheckEntry e;
            e.name = "D_n: recurrence = closed form = table";
            e.n = pair.n;
            const Polynomial closed = D_closed(fam, pair.n);
            const Polynomial table = fam.D(pair.n);
            e.pass = pair.D == closed && closed == table;
            if (!e.pass) {
                e.lhs = pair.D.str();
                e.rhs = closed.str() + " | " + table.str();
            }
            out.push_back(std::move(e));
        }
        {
            CheckEntry e;
            e.name = "degree bounds deg C <= 1, deg D <= 0";
            e.n = pair.n;
            e.pass = pair.C.degree() <= 1 && pair.D.degree() <= 0;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<CheckEntry> suite_system(const Family& fam, int n_max) {
    const SystemReport rep = verify_system(fam, n_max);
    std::vector<CheckEntry> out;
    for (const auto& c : rep.checks) {
        CheckEntry e;
        e.name = c.name;
        e.n = c.n;
        e.pass = c.pass;
        if (!c.pass) {
            e.lhs = c.lhs;
            e.rhs = c.rhs;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CheckEntry> suite_class(const Family& fam, int) {
    const ClassZeroReport rep = class_zero_criterion(fam);
    std::vector<CheckEntry> out;
    if (rep.roots.empty()) {
        CheckEntry e;
        e.name = "class zero (phi has no zeros)";
        e.pass = true;
        out.push_back(std::move(e));
        return out;
    }
    for (const auto& r : rep.roots) {
        CheckEntry e;
        e.name = "class zero at phi root " + r.root.str() + ": |B| + |C| + |D| != 0";
        e.pass = !r.all_vanish;
        e.lhs = "(" + r.B_at.str() + ", " + r.C_at.str() + ", " + r.D_at.str() + ")";
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CheckEntry> suite_window(const Family& fam, int n_max) {
    std::vector<std::function<CheckEntry()>> jobs;
    for (int n = 1; n <= n_max; ++n) {
        jobs.push_back([&fam, n] {
            CheckEntry e;
            e.name = "window support in [n, n+2]";
            e.n = n;
            const auto theta = window_structure_check(fam, n);
            e.pass = true;
            std::ostringstream bad;
            for (int mu = 0; mu < static_cast<int>(theta.size()); ++mu) {
                if (mu >= n && mu <= n + 2) continue;
                if (!theta[mu].is_zero()) {
                    e.pass = false;
                    bad << " theta_" << mu << "=" << theta[mu].str();
                }
            }
            if (!e.pass) e.residual = bad.str();
            return e;
        });
    }
    return parallel_checks(jobs);
}

std::vector<CheckEntry> suite_reference(const Family& fam, int n_max) {
    std::vector<CheckEntry> out;
    if (fam.id() != FamilyId::bessel2) {
        CheckEntry e;
        e.name = "reference data exists for bessel2 only";
        e.pass = false;
        e.residual = "family " + fam.name() + " has no transcription";
        out.push_back(std::move(e));
        return out;
    }
    const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
    std::vector<std::function<CheckEntry()>> jobs;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 1; k <= 4; ++k) {
            jobs.push_back([&fam, a, l, r, n, k] {
                const StructureRelation rel = bessel2_relation(a, l, r, n, k);
                return entry_zero_poly("structure relation order " + std::to_string(k), n,
                                       verify_relation(rel, fam));
            });
        }
        jobs.push_back([&fam, a, l, r, n] {
            const OdeCoefficients ode = bessel2_ode(a, l, r, n);
            return entry_zero_poly("fourth-order equation residual (reference coefficients)", n,
                                   ode_residual(ode, fam, n));
        });
    }
    out = parallel_checks(jobs);
    return out;
}

std::vector<CheckEntry> suite_ode(const Family& fam, int n_max) {
    std::vector<std::function<CheckEntry()>> jobs;
    const int lo = 2;
    const int hi = std::max(lo, std::min(n_max, 8));
    for (int n = lo; n <= hi; ++n) {
        jobs.push_back([&fam, n] {
            std::array<StructureRelation, 4> rels = {
                fit_relation(fam, n, 1).relation, fit_relation(fam, n, 2).relation,
                fit_relation(fam, n, 3).relation, fit_relation(fam, n, 4).relation};
            const OdeCoefficients ode = assemble_ode(rels);
            return entry_zero_poly("derived fourth-order equation residual", n,
                                   ode_residual(ode, fam, n));
        });
        // The fourth-order annihilator of P_{n+1} is unique (up to scale) only
        // once deg P_{n+1} is large enough; compare against the reference from
        // n = 3 on.
        if (fam.id() == FamilyId::bessel2 && n >= 3) {
            jobs.push_back([&fam, n] {
                CheckEntry e;
                e.name = "derived equation proportional to reference coefficients";
                e.n = n;
                const Rational a = fam.param("alpha"), l = fam.param("lambda"),
                               r = fam.param("rho");
                std::array<StructureRelation, 4> rels = {
                    fit_relation(fam, n, 1).relation, fit_relation(fam, n, 2).relation,
                    fit_relation(fam, n, 3).relation, fit_relation(fam, n, 4).relation};
                const OdeCoefficients mine = assemble_ode(rels);
                const OdeCoefficients ref = bessel2_ode(a, l, r, n);
                std::optional<Rational> s;
                e.pass = true;
                for (int i = 0; i < 5; ++i) {
                    const auto si = proportionality(mine.hat[i], ref.hat[i]);
                    if (!si || (s && *si != *s)) {
                        e.pass = false;
                        e.residual = "coefficient " + std::to_string(i) + " not proportional";
                        break;
                    }
                    s = si;
                }
                if (e.pass && s) e.residual = "scale " + s->str();
                return e;
            });
        }
    }
    return parallel_checks(jobs);
}

}  // namespace

std::vector<CheckEntry> run_suite(const Family& fam, CheckKind kind, int n_max) {
    switch (kind) {
        case CheckKind::functional_eq: return suite_functional_eq(fam, n_max);
        case CheckKind::riccati: return suite_riccati(fam, std::min(n_max, 20));
        case CheckKind::r4: return suite_r4(fam, n_max);
        case CheckKind::cd_recurrence: return suite_cd(fam, n_max);
        case CheckKind::system: return suite_system(fam, n_max);
        case CheckKind::class_criterion: return suite_class(fam, n_max);
        case CheckKind::window: return suite_window(fam, std::min(n_max, 15));
        case CheckKind::bessel2_reference: return suite_reference(fam, std::min(n_max, 10));
        case CheckKind::ode: return suite_ode(fam, n_max);
    }
    return {};
}

VerificationReport run_selected(const Family& fam, const std::vector<CheckKind>& kinds,
                                int n_max) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.family = fam.name();
    rep.params = fam.params();
    for (CheckKind kind : kinds) {
        auto entries = run_suite(fam, kind, n_max);
        const std::string prefix = check_name(kind) + ": ";
        for (auto& e : entries) {
            e.name = prefix + e.name;
            rep.checks.push_back(std::move(e));
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

VerificationReport run_all(const Family& fam, int n_max) {
    std::vector<CheckKind> kinds = {CheckKind::functional_eq, CheckKind::riccati,
                                    CheckKind::r4,            CheckKind::cd_recurrence,
                                    CheckKind::system,        CheckKind::class_criterion,
                                    CheckKind::window};
    if (fam.id() == FamilyId::bessel2) kinds.push_back(CheckKind::bessel2_reference);
    kinds.push_back(CheckKind::ode);
    return run_selected(fam, kinds, n_max);
}

std::string to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["family"] = rep.family;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : rep.params) params[k] = v.str();
    j["params"] = params;
    j["version"] = kToolVersion;
    j["elapsed_ms"] = rep.elapsed_ms;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        if (c.n >= 0) e["n"] = c.n;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.residual.empty()) e["residual"] = c.residual;
        if (!c.lhs.empty()) e["lhs"] = c.lhs;
        if (!c.rhs.empty()) e["rhs"] = c.rhs;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j.dump(2);
}

std::string to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "family " << rep.family << " (";
    bool first = true;
    for (const auto& [k, v] : rep.params) {
        if (!first) os << ", ";
        os << k << "=" << v.str();
        first = false;
    }
    os << ")\n";

    std::map<std::string, std::pair<int, int>> counts;  // name -> (pass, fail)
    for (const auto& c : rep.checks) {
        const std::string key = c.name.substr(0, c.name.find(':'));
        auto& [p, f] = counts[key];
        (c.pass ? p : f)++;
    }
    for (const auto& [name, pf] : counts)
        os << "  " << name << ": " << pf.first << " pass, " << pf.second << " fail\n";
    for (const auto& c : rep.checks) {
        if (c.pass) continue;
        os << "  FAIL " << c.name;
        if (c.n >= 0) os << " [n=" << c.n << "]";
        if (!c.residual.empty()) os << " residual=" << c.residual;
        if (!c.lhs.empty()) os << " lhs=" << c.lhs << " rhs=" << c.rhs;
        os << "\n";
    }
    os << (rep.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << rep.elapsed_ms << " ms)\n";
    return os.str();
}

}  // namespace lhkit
