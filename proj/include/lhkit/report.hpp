#ifndef LHKIT_REPORT_HPP
#define LHKIT_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lhkit/family.hpp"

namespace lhkit {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verified identity instance. status is pass exactly when the residual
/// is exactly zero; on failure both sides (or the residual) are kept
/// verbatim for forensics.
struct CheckEntry {
    std::string name;
    int n = -1;  // -1 when the check is not indexed by n
    bool pass = false;
    std::string residual;  // exact, optional
    std::string lhs, rhs;  // exact, on failure
};

struct VerificationReport {
    std::string family;
    ParamMap params;
    std::vector<CheckEntry> checks;
    long long elapsed_ms = 0;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

enum class CheckKind {
    functional_eq,
    riccati,
    r4,
    cd_recurrence,
    system,
    class_criterion,
    window,
    bessel2_reference,
    ode,
};

std::optional<CheckKind> check_from_name(const std::string& name);
std::string check_name(CheckKind kind);

/// Runs one suite against a family. Checks indexed by n are dispatched in
/// parallel (capped by LHKIT_THREADS) and collected in deterministic order.
std::vector<CheckEntry> run_suite(const Family& fam, CheckKind kind, int n_max);

/// All suites in order.
VerificationReport run_all(const Family& fam, int n_max);
VerificationReport run_selected(const Family& fam, const std::vector<CheckKind>& kinds, int n_max);

std::string to_json(const VerificationReport& rep);
std::string to_text(const VerificationReport& rep);

/// Deterministic parallel map: evaluates jobs[i] into slot i, with the
/// worker count taken from LHKIT_THREADS (hardware concurrency when unset).
std::vector<CheckEntry> parallel_checks(const std::vector<std::function<CheckEntry()>>& jobs);

}  // namespace lhkit

#endif
