#pragma once

#include <string>
#include <vector>

namespace howe {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // non-empty on failure, or a short summary on pass
};

/// Exact degree arithmetic: the two character-degree routes agree, the degree
/// functional matches, the cuspidal closed form holds, values are positive
/// integers at prime powers.
std::vector<CheckResult> verify_dims(int max_n);

/// Sector sizes against the partition counts, plus the pinned sector sizes.
std::vector<CheckResult> verify_counts(int max_n);

/// The stratum maps against the exhaustive correspondent sets over the full
/// window: per-stratum maximality, unimodal degree profiles, the tau = 0 and
/// stable-range collapses, defect spreads, injectivity, and membership.
std::vector<CheckResult> verify_lemmas(int max_n, int max_n_prime);

/// Rendered tables against the checked-in expected bytes (skipped when
/// golden_dir is empty), pinned correspondence values at (7,10) and (8,10),
/// JSON round-trips, and render determinism.
std::vector<CheckResult> verify_tables(const std::string& golden_dir);

/// First occurrence: scan equality of the two variants across both towers.
std::vector<CheckResult> verify_occurrence(int max_weight);

/// The relation axioms on both one-to-one windows and the injectivity
/// obstruction for every correspondence pair outside them.
std::vector<CheckResult> verify_axioms(int max_n, int max_n_prime);

}  // namespace howe
