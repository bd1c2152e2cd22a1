#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "howe/symbol.hpp"

namespace howe {

/// How the sector of a source symbol pairs with a sector on the other side
/// of a dual pair (U_n, U_n').
struct SectorMap {
    Sector source;
    Sector target;        // meaningful only when target_exists
    bool target_exists = false;
    int tau = 0;          // half the difference of halved weights
    bool even_total = false;

    int d() const { return source.d(); }
    int d_prime() const { return target.d(); }
};

/// Resolves the paired sector on rank n' for a source sector:
///   even n+n':  defect' = 0 when defect = 0, else -defect + 1;
///   odd  n+n':  defect' = -defect - 1.
/// target_exists is false when no symbols of that defect live on rank n'.
SectorMap sector_map(const Sector& source, int n_prime);

/// Membership of the pair (a, b) in the correspondence relation for
/// (U_rank(a), U_rank(b)).  With both bipartitions read row-wise, the even
/// case requires bottom(a)^T within-one-below top(b)^T and
/// bottom(b)^T within-one-below top(a)^T plus the defect rule; the odd case
/// swaps the row roles.  Symmetric in (a, b).
bool in_howe_relation(const Symbol& a, const Symbol& b);
bool in_howe_relation(const Partition& a, const Partition& b);

/// All correspondents of `s` on rank n_prime, by exhaustive filtration of
/// the paired sector.  This is the reference path every map below is tested
/// against; none of them feeds it.
std::vector<Symbol> correspondents(const Symbol& s, int n_prime);

/// Stratum index of a correspondent: the weight drop between the relevant
/// bipartition rows.  Always >= 0 for members of the relation.
int stratum_of(const Symbol& source, const Symbol& target);

/// The explicit stratum-k map (defined for tau >= 0):
///   even: [mu; nu] -> [nu ; mu_2,...] u [tau+k ; mu_1-k]   for 0 <= k <= mu_1
///   odd:  [mu; nu] -> [nu_2,... ; mu] u [nu_1-k ; tau+k]   for 0 <= k <= nu_1
/// Throws NoTargetSector, TauNegative, KOutOfRange.
Symbol theta_k(const Symbol& s, int n_prime, int k);

/// Largest admissible k for theta_k (mu_1 resp. nu_1).
int theta_k_range(const Symbol& s, int n_prime);

/// Degree profile of k -> theta_k: the degrees rise strictly to a unique
/// peak and then fall strictly.  moving_top/moving_bottom record the one
/// entry of each row that moves between consecutive images (steps of +-2).
struct PeakAnalysis {
    int k0 = 0;
    std::vector<long long> degrees;   // degree of theta_k, k = 0..range
    std::vector<int> moving_top;      // k = 0..range (empty when range == 0)
    std::vector<int> moving_bottom;
};

PeakAnalysis peak_analysis(const Symbol& s, int n_prime);

/// k0 recomputed from the closed-form case analysis on the moving-entry
/// progressions; cross-check for peak_analysis().k0.
int peak_k_closed_form(const PeakAnalysis& a, bool even_total);

/// theta_0 when tau >= 0; for tau < 0 the unique preimage of s under the
/// reversed map when it exists.  Empty optional = not defined.
std::optional<Symbol> minimal_theta(const Symbol& s, int n_prime);

/// The selection rule of the greedy sweep: the lt-least element among the
/// candidates of maximal degree.  Requires a non-empty candidate list from
/// one sector.
Symbol greedy_pick(const std::vector<Symbol>& candidates, bool even_total);

/// The greedy one-to-one choice over a whole sector, processed in ascending
/// lt_symbol order: each source takes greedy_pick of its correspondents not
/// claimed by an earlier source.  For tau < 0 the sweep runs on the
/// reversed pair and is inverted, so the result is a partial map.  Pairs
/// are listed in processing order.
std::vector<std::pair<Symbol, Symbol>> greedy_theta_sector(const Sector& source,
                                                           int n_prime);

std::optional<Symbol> greedy_theta(const Symbol& s, int n_prime);

bool is_stable_range(int n, int n_prime);

enum class Tower { even, odd };
enum class Variant { theta, minimal };

/// Smallest rank in the chosen tower (U_0, U_2, ... or U_1, U_3, ...) where
/// the character of p participates: non-empty correspondent set for
/// Variant::theta, defined minimal_theta for Variant::minimal.
int first_occurrence(const Partition& p, Tower tower, Variant variant);

/// A correspondent annotated with the table markers.
struct ThetaEntry {
    Symbol symbol;
    bool natural = false;    // maximal degree among all correspondents of the source
    bool overline = false;   // the greedy choice for the source
    bool cancelled = false;  // claimed by an earlier source in the sweep
};

struct ThetaRow {
    Symbol source;
    /// (k, entries) with k ascending; within a stratum theta_k leads and the
    /// rest follow in ascending (bottom row, top row) bipartition order.
    std::vector<std::pair<int, std::vector<ThetaEntry>>> strata;
};

/// One sector's correspondence table, fully marked.  When tau < 0 the table
/// is built in the reversed direction (rows indexed by the paired sector on
/// n_prime) and `reversed` is set.
struct SectorTable {
    SectorMap map;   // orientation of the rows actually displayed
    bool reversed = false;
    std::vector<ThetaRow> rows;
};

SectorTable sector_table(const Sector& source, int n_prime);

/// Tables for every sector of rank n against rank n_prime.
std::vector<SectorTable> theta_tables(int n, int n_prime);

}  // namespace howe
