#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "howe/betaset.hpp"
#include "howe/partition.hpp"

namespace howe {

/// A two-row array of beta-sets with opposite, row-homogeneous parities.
/// The defect |top| - |bottom| is non-negative even or negative odd; a
/// non-negative defect puts the odd entries on top.  Every Symbol is the
/// canonical one attached to its underlying partition, so symbol equality
/// is equality of partitions.
class Symbol {
public:
    /// Validates shape and canonicity; throws MalformedSymbol.
    Symbol(BetaSet top, BetaSet bottom);

    const BetaSet& top() const { return top_; }
    const BetaSet& bottom() const { return bottom_; }
    int defect() const { return top_.size() - bottom_.size(); }

    /// Union of the two rows (they are disjoint by parity).
    BetaSet merged() const;
    long long rank() const { return merged().rank(); }

    static Symbol of_partition(const Partition& p);
    Partition to_partition() const;

    /// Halve each row and read off the encoded partitions; the pair is a
    /// bipartition of (rank - d(d+1)/2)/2 where d = |defect|.
    Bipartition bipartition() const;

    /// Inverse of bipartition() at a fixed defect; throws InvalidDefect.
    static Symbol from_bipartition(const Bipartition& bp, int defect);

    bool operator==(const Symbol&) const = default;
    auto operator<=>(const Symbol&) const = default;  // container order only

    std::string to_string() const;  // "(7 | 2)", empty row "-"
    static Symbol parse(std::string_view text);

private:
    BetaSet top_, bottom_;
};

long long dim_degree(const Symbol& s);

/// All symbols of rank n and defect delta, one per bipartition of
/// (n - d(d+1)/2)/2.
struct Sector {
    int n = 0;
    int defect = 0;

    int d() const { return defect >= 0 ? defect : -defect; }
    bool valid() const;
    /// (n - d(d+1)/2) / 2, the weight of the parametrizing bipartitions.
    int halved_weight() const;
    int size() const;  // number of symbols

    bool operator==(const Sector&) const = default;
    std::string to_string() const;  // "S(7,-1)"
};

Sector sector_of(const Symbol& s);

/// The sectors partitioning the symbols of rank n, in increasing |defect|.
std::vector<Sector> sectors_of(int n);

/// Strict total order used to process a sector.  With even_total the keys
/// are (|top of bipartition|, top lex, bottom lex); otherwise the row roles
/// swap.  Throws DifferentSectors when the symbols do not share a sector.
bool lt_symbol(const Symbol& a, const Symbol& b, bool even_total);

/// The sector's symbols in ascending lt_symbol order.
std::vector<Symbol> sector_symbols(const Sector& s, bool even_total);

}  // namespace howe
