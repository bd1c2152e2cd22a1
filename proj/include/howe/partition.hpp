#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

/// An integer partition in canonical form: strictly positive parts, weakly
/// decreasing, no stored zeros.  Trailing zeros are a view applied at
/// comparison time, never part of the value.
class Partition {
public:
    Partition() = default;

    /// Accepts a weakly decreasing list that may contain trailing zeros;
    /// throws ParseError if the list increases anywhere or has negatives.
    explicit Partition(std::vector<int> parts);

    /// Builds from an arbitrary multiset of non-negative values (sorts,
    /// drops zeros).
    static Partition from_multiset(std::vector<int> values);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// 1-based part access with implicit zero padding.
    int part(int i) const;

    Partition transposed() const;

    /// Hook lengths of all diagram cells, sorted decreasing; size == weight.
    std::vector<int> hook_lengths() const;

    /// Sum of (i-1) * parts[i] over rows; the exponent of the monomial part
    /// of the character-degree polynomial.
    long long weighted_row_sum() const;

    bool operator==(const Partition&) const = default;
    /// Container ordering only; the documented partition order is lex_less.
    auto operator<=>(const Partition&) const = default;

    /// "6,2" with the empty partition rendered "-".
    std::string to_string() const;
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Zero-padded leftmost-first comparison; the first differing part decides
/// and the smaller part makes the smaller partition.
bool lex_less(const Partition& a, const Partition& b);

/// a within one below b: after zero-padding, b_i - 1 <= a_i <= b_i for all i.
bool precedes(const Partition& a, const Partition& b);

/// Multiset union of parts, re-sorted decreasing.
Partition union_parts(const Partition& a, const Partition& b);

/// The staircase [d, d-1, ..., 1].
Partition staircase(int d);

/// The 2-core: the staircase left after removing all 2-hooks.
struct TwoCore {
    int d = 0;
    Partition core() const { return staircase(d); }
    int weight() const { return d * (d + 1) / 2; }
};

/// Computed from the parities of the associated beta-set entries, which is
/// O(length); the literal diagram-stripping algorithm lives in the tests as
/// an independent oracle.
TwoCore two_core(const Partition& p);

/// All partitions of n in descending lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

struct Bipartition {
    Partition top;
    Partition bottom;

    int weight() const { return top.weight() + bottom.weight(); }
    bool operator==(const Bipartition&) const = default;
    std::string to_string() const;  // "[3 ; 1]"
};

/// All bipartitions of n: top runs over P(k) and bottom over P(n-k) for
/// k = 0..n, each in descending lexicographic order.
std::vector<Bipartition> bipartitions_of(int n);

}  // namespace howe
