#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "howe/partition.hpp"

namespace howe {

/// A finite set of distinct non-negative integers, stored strictly
/// decreasing.  Encodes a partition up to the shift equivalence
/// X ~ {x+1 | x in X} u {0}.
class BetaSet {
public:
    BetaSet() = default;

    /// Accepts entries in any order; throws ParseError on duplicates or
    /// negative values.
    explicit BetaSet(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const std::vector<int>& entries() const { return entries_; }
    bool contains(int x) const;

    /// sum(entries) - C(size, 2); non-negative for every valid beta-set.
    long long rank() const;

    /// {x+1 | x in X} u {0}; rank-preserving.
    BetaSet shifted_up() const;

    /// Unique minimal representative of the shift-equivalence class.
    BetaSet reduced() const;

    /// The partition [x_1-(m-1), ..., x_m] with zeros dropped; weight equals
    /// rank() and the value is shift-invariant.
    Partition to_partition() const;

    /// The distinguished representative for a partition: parts are padded
    /// with one extra zero when length(p) + length(2-core) is odd, then
    /// entry i is part_i + (count - i).  rank == weight(p) and the odd/even
    /// split sizes differ by exactly the 2-core length.
    static BetaSet of_partition(const Partition& p);

    bool operator==(const BetaSet&) const = default;
    auto operator<=>(const BetaSet&) const = default;

    std::string to_string() const;  // "{7,2}", empty set "{}"
    static BetaSet parse(std::string_view text);

private:
    std::vector<int> entries_;  // strictly decreasing
};

/// The four derived beta-sets: odd entries, even entries, and their
/// entrywise halvings (x-1)/2 resp. x/2.
struct ParitySplit {
    BetaSet odd;
    BetaSet even;
    BetaSet odd_halved;
    BetaSet even_halved;
};

ParitySplit parity_split(const BetaSet& x);

/// Degree of the character-degree polynomial dim(rho) for the character
/// encoded by x:
///   sum (m-i) x_i  -  sum x_i (x_i + 1) / 2  +  n(n+1)/2  -  C(m, 3)
/// with m = size, n = rank.  Shift-invariant.
long long dim_degree(const BetaSet& x);

}  // namespace howe
