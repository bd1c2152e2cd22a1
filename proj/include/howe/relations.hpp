#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "howe/correspondence.hpp"

namespace howe {

/// A character in a Lusztig series, modeled formally: the first tensor
/// factor is an opaque label plus the rank m it consumes, and only the
/// unipotent second factor carries combinatorics.
struct SeriesCharacter {
    std::string first_factor_label;
    int first_factor_size = 0;  // m
    Symbol second_factor;       // unipotent character of U_{ambient_n - m}
    int ambient_n = 0;

    bool operator==(const SeriesCharacter&) const = default;
};

enum class OneToOneMap { minimal, greedy };

/// Transport along the correspondence, acting only through the second
/// factor: the pair (U_{n-m}, U_{n'-m}) carries the unipotent map and the
/// first factor rides along unchanged.  Empty when the unipotent map is
/// undefined.  Requires m <= n_prime.
std::optional<SeriesCharacter> extend_to_series(const SeriesCharacter& chi,
                                                int n_prime, OneToOneMap map);

/// A finite rectangle of dual pairs with, for each (n, n'), a set of
/// related (partition, partition) pairs.
class RelationWindow {
public:
    using PairKey = std::pair<int, int>;
    using PairList = std::vector<std::pair<Partition, Partition>>;

    RelationWindow(int max_n, int max_n_prime)
        : max_n_(max_n), max_n_prime_(max_n_prime) {}

    /// Windows populated from the one-to-one maps (tau < 0 sectors enter
    /// through the reversal) or from the full correspondence.
    static RelationWindow one_to_one_window(OneToOneMap map, int max_n, int max_n_prime);
    static RelationWindow full_theta_window(int max_n, int max_n_prime);

    int max_n() const { return max_n_; }
    int max_n_prime() const { return max_n_prime_; }
    bool contains_key(int n, int n_prime) const;
    const PairList& pairs(int n, int n_prime) const;
    std::vector<PairKey> keys() const;

    void add(int n, int n_prime, Partition a, Partition b);
    /// Removes one pair; returns false when absent.
    bool remove(int n, int n_prime, const Partition& a, const Partition& b);

private:
    int max_n_, max_n_prime_;
    std::map<PairKey, PairList> pairs_;
};

struct Violation {
    std::string kind;
    int n = 0, n_prime = 0;
    std::string detail;
};

/// Every stored pair must appear with both orientations wherever the window
/// covers both key orders.
std::vector<Violation> check_symmetric(const RelationWindow& w);

/// Every character within the participation bound must actually occur:
/// with d the 2-core length, the bound is n' >= n - d when n + n' + d is
/// even and n' >= n + d + 1 when odd.
std::vector<Violation> check_semi_persistent(const RelationWindow& w);

/// Per dual pair, no source and no target may appear twice.
std::vector<Violation> check_one_to_one(const RelationWindow& w);

/// Why a candidate pair cannot extend a one-to-one window at (n, n').
struct MaximalityWitness {
    enum class Kind {
        existing_image,    // the window already maps the candidate source
        backward_image,    // the candidate target is already hit from elsewhere
    };
    Kind kind;
    Partition source, target;  // the pair of the window that blocks the candidate
};

/// For a one-to-one window and a candidate (a, b) not in it, produce the
/// injectivity obstruction to adding it.  Throws CandidateNotInTheta when
/// no obstruction exists and the candidate is not even a correspondence
/// pair (on a genuine one-to-one sub-correspondence window, every
/// correspondence pair outside the window has an obstruction).
MaximalityWitness maximality_witness(const RelationWindow& w, int n, int n_prime,
                                     const Partition& a, const Partition& b);

/// Machine-readable reports: one record per violation with kind, pair, and
/// the symbols involved.
std::string violations_to_json(const std::vector<Violation>& violations);
std::string witness_to_json(const MaximalityWitness& w, int n, int n_prime);

}  // namespace howe
