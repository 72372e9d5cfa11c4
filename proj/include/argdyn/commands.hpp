#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "argdyn/apx.hpp"
#include "argdyn/conditions.hpp"
#include "argdyn/oracle.hpp"

namespace argdyn {

// Subcommand back ends. Each produces the deterministic report text the
// CLI prints on its report stream; the thin front end in tools/ only
// parses flags and routes errors to the diagnostic stream.

std::string report_extensions(const Framework& f, SemanticsKind k);

std::string report_classify(const Framework& f, const Change& c,
                            SemanticsKind k);

/// Conditions report plus the actually observed classification; any CS
/// whose guaranteed property failed to materialize is flagged (that
/// would be an engine bug). Grounded and preferred only.
std::string report_conditions(const Framework& f, const Change& c,
                              SemanticsKind k);

struct WhatIfOptions {
  ArgumentId z;
  std::string target;        // structural label or status flag name
  std::size_t budget = 1;    // max |I_z|
};

/// All AddArgument(z, I_z) candidates with 1 <= |I_z| <= budget whose
/// change satisfies the target, ordered by |I_z| then lexicographically
/// over the sorted pair lists.
std::vector<AddArgument> whatif_candidates(const Framework& f, SemanticsKind k,
                                           const WhatIfOptions& opts);

/// True iff the classification of (f, change) satisfies the target.
bool change_satisfies_target(const Framework& f, const Change& c,
                             SemanticsKind k, const std::string& target);

std::string report_whatif(const Framework& f, SemanticsKind k,
                          const WhatIfOptions& opts);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  std::size_t max_arguments = 8;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::vector<Violation> violations;
};

/// Randomized proposition suite: seeded random (framework, AddArgument)
/// instances verified under grounded, preferred and stable semantics.
/// Failures reproduce from the seed alone.
VerifySummary run_verify(const VerifyOptions& opts);

std::string report_verify(const VerifySummary& summary,
                          const VerifyOptions& opts);

struct OracleCheckOptions {
  std::uint64_t seed = 1;
  std::size_t count = 500;
  std::size_t max_arguments = 12;
};

struct OracleCheckSummary {
  std::size_t instances = 0;
  std::vector<std::string> mismatches;
};

/// Engine-vs-oracle equivalence on generated instances, all three
/// semantics.
OracleCheckSummary run_oracle_check(const OracleCheckOptions& opts);

std::string report_oracle_check(const OracleCheckSummary& summary,
                                const OracleCheckOptions& opts);

}  // namespace argdyn
