#pragma once

#include "ccg/cca.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace ccg {

struct SweepReport {
    std::string suite;
    long long examined = 0;
    long long passed = 0;
    std::vector<std::string> failures;
    long long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
    std::string summary() const;
};

void write_report(const SweepReport& report, const std::string& path);

/// Replay one of the built-in fixture tables.
///   1: small spanning sets over F_2, at each row's native dimension
///   2: extreme-cardinality sets over F_2^d (8 sparse rows + 8 complements)
///   3: low-cardinality sets over F_3^d, given projectively
///   4: high-cardinality sets over F_3^d (complements of table 3)
///   5: extreme cardinality over F_p^d for p >= 5 (pass p)
///   6: the degree-kappa counterexamples (pass p, or p = 0 for all three)
/// Rows are checked with cca_check and their dim V column.
SweepReport verify_table(int id, int d, int p = 0);

/// Low-cardinality regime: every symmetric zero-free C with |C| < kappa(p)
/// gets a witness; the high-cardinality regime is covered through complement
/// duality on the same sets (or directly when direct_high is set).
SweepReport sweep_proposition(int p, int d, bool direct_high = false,
                              int threads = 0);

/// Brute-force cross-check: for every C in the extreme-degree regimes, the
/// computed core is complete of order p^(dim V) for the found witness V.
SweepReport verify_theorem_end_to_end(int p, int d, bool high_regime = true,
                                      int threads = 0);

/// Certify the degree-kappa(p) counterexample and its complement as
/// non-complete cores.
SweepReport verify_counterexamples(int p);

/// The three counterexample connection sets.
ConnectionSet counterexample_connection_set(int p);

}  // namespace ccg
