#include "howe/symbol.hpp"

#include <algorithm>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

namespace {

bool all_parity(const BetaSet& row, int parity) {
    for (int x : row.entries())
        if (x % 2 != parity) return false;
    return true;
}

bool valid_defect(int defect) {
    return (defect >= 0 && defect % 2 == 0) || (defect < 0 && (-defect) % 2 == 1);
}

/// Beta-set of p with exactly `count` entries (parts zero-padded);
/// requires count >= length(p).
BetaSet beta_with_size(const Partition& p, int count) {
    std::vector<int> e;
    e.reserve(count);
    for (int i = 1; i <= count; ++i) e.push_back(p.part(i) + (count - i));
    return BetaSet(std::move(e));
}

}  // namespace

Symbol::Symbol(BetaSet top, BetaSet bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (!valid_defect(defect()))
        throw MalformedSymbol("defect " + std::to_string(defect()) +
                              " is not non-negative even or negative odd");
    const bool odd_row_on_top = defect() >= 0;
    if (!all_parity(top_, odd_row_on_top ? 1 : 0) ||
        !all_parity(bottom_, odd_row_on_top ? 0 : 1))
        throw MalformedSymbol("row parities do not match the defect sign in " +
                              to_string());
    const BetaSet x = merged();
    if (x != BetaSet::of_partition(x.to_partition()))
        throw MalformedSymbol("rows are not the canonical representative in " +
                              to_string());
}

BetaSet Symbol::merged() const {
    std::vector<int> e = top_.entries();
    e.insert(e.end(), bottom_.entries().begin(), bottom_.entries().end());
    return BetaSet(std::move(e));
}

Symbol Symbol::of_partition(const Partition& p) {
    const ParitySplit ps = parity_split(BetaSet::of_partition(p));
    if (two_core(p).d % 2 == 0) return Symbol(ps.odd, ps.even);
    return Symbol(ps.even, ps.odd);
}

Partition Symbol::to_partition() const { return merged().to_partition(); }

Bipartition Symbol::bipartition() const {
    auto halved = [](const BetaSet& row) {
        std::vector<int> h;
        h.reserve(row.size());
        for (int x : row.entries()) h.push_back(x / 2);  // (x-1)/2 for odd x
        return BetaSet(std::move(h)).to_partition();
    };
    return Bipartition{halved(top_), halved(bottom_)};
}

Symbol Symbol::from_bipartition(const Bipartition& bp, int defect) {
    if (!valid_defect(defect))
        throw InvalidDefect("defect " + std::to_string(defect) +
                            " is not non-negative even or negative odd");
    const int d = defect >= 0 ? defect : -defect;
    auto doubled = [](const BetaSet& b, int offset) {
        std::vector<int> e;
        e.reserve(b.size());
        for (int x : b.entries()) e.push_back(2 * x + offset);
        return BetaSet(std::move(e));
    };
    if (defect >= 0) {
        const int m = std::max({bp.top.length() - d, bp.bottom.length(), 0});
        return Symbol(doubled(beta_with_size(bp.top, m + d), 1),
                      doubled(beta_with_size(bp.bottom, m), 0));
    }
    const int m = std::max({bp.top.length(), bp.bottom.length() - d, 0});
    return Symbol(doubled(beta_with_size(bp.top, m), 0),
                  doubled(beta_with_size(bp.bottom, m + d), 1));
}

std::string Symbol::to_string() const {
    auto row = [](const BetaSet& b) {
        if (b.empty()) return std::string("-");
        std::ostringstream os;
        const auto& e = b.entries();
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        return os.str();
    };
    return "(" + row(top_) + " | " + row(bottom_) + ")";
}

Symbol Symbol::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("symbol text must be parenthesized: (a,... | b,...)");
    text = text.substr(1, text.size() - 2);
    const size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ParseError("symbol text needs a '|' row separator");
    auto parse_row = [&trim](std::string_view s) {
        s = trim(s);
        if (s.empty() || s == "-") return BetaSet{};
        return BetaSet::parse("{" + std::string(s) + "}");
    };
    return Symbol(parse_row(text.substr(0, bar)), parse_row(text.substr(bar + 1)));
}

long long dim_degree(const Symbol& s) { return dim_degree(s.merged()); }

bool Sector::valid() const {
    if (!((defect >= 0 && defect % 2 == 0) || (defect < 0 && (-defect) % 2 == 1)))
        return false;
    const int r = n - d() * (d() + 1) / 2;
    return r >= 0 && r % 2 == 0;
}

int Sector::halved_weight() const { return (n - d() * (d() + 1) / 2) / 2; }

namespace {
int partition_count(int n) {
    static std::vector<long long> cache{1};
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        long long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long long sign = (k % 2) ? 1 : -1;
            total += sign * cache[m - g1];
            if (g2 <= m) total += sign * cache[m - g2];
        }
        cache.push_back(total);
    }
    return static_cast<int>(cache[n]);
}
}  // namespace

int Sector::size() const {
    const int w = halved_weight();
    int total = 0;
    for (int k = 0; k <= w; ++k) total += partition_count(k) * partition_count(w - k);
    return total;
}

std::string Sector::to_string() const {
    return "S(" + std::to_string(n) + "," + std::to_string(defect) + ")";
}

Sector sector_of(const Symbol& s) {
    return Sector{static_cast<int>(s.rank()), s.defect()};
}

std::vector<Sector> sectors_of(int n) {
    std::vector<Sector> out;
    for (int d = 0; d * (d + 1) / 2 <= n; ++d) {
        const Sector s{n, d % 2 == 0 ? d : -d};
        if (s.valid()) out.push_back(s);
    }
    return out;
}

bool lt_symbol(const Symbol& a, const Symbol& b, bool even_total) {
    if (sector_of(a) != sector_of(b))
        throw DifferentSectors("lt_symbol across sectors: " + a.to_string() + " vs " +
                               b.to_string());
    const Bipartition pa = a.bipartition(), pb = b.bipartition();
    const Partition& a1 = even_total ? pa.top : pa.bottom;
    const Partition& a2 = even_total ? pa.bottom : pa.top;
    const Partition& b1 = even_total ? pb.top : pb.bottom;
    const Partition& b2 = even_total ? pb.bottom : pb.top;
    if (a1.weight() != b1.weight()) return a1.weight() < b1.weight();
    if (a1 != b1) return lex_less(a1, b1);
    return lex_less(a2, b2);
}

std::vector<Symbol> sector_symbols(const Sector& s, bool even_total) {
    std::vector<Symbol> out;
    for (const Bipartition& bp : bipartitions_of(s.halved_weight()))
        out.push_back(Symbol::from_bipartition(bp, s.defect));
    std::sort(out.begin(), out.end(), [even_total](const Symbol& a, const Symbol& b) {
        return lt_symbol(a, b, even_total);
    });
    return out;
}

}  // namespace howe
