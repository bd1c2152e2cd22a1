#include "howe/correspondence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "howe/errors.hpp"

namespace howe {

SectorMap sector_map(const Sector& source, int n_prime) {
    SectorMap m;
    m.source = source;
    m.even_total = (source.n + n_prime) % 2 == 0;
    int defect_prime;
    if (m.even_total)
        defect_prime = source.defect == 0 ? 0 : -source.defect + 1;
    else
        defect_prime = -source.defect - 1;
    const Sector target{n_prime, defect_prime};
    if (!target.valid()) return m;  // target_exists stays false
    m.target = target;
    m.target_exists = true;
    m.tau = target.halved_weight() - source.halved_weight();
    return m;
}

bool in_howe_relation(const Symbol& a, const Symbol& b) {
    const bool even_total = (a.rank() + b.rank()) % 2 == 0;
    const Bipartition pa = a.bipartition(), pb = b.bipartition();
    if (even_total) {
        const int want = a.defect() == 0 ? 0 : -a.defect() + 1;
        if (b.defect() != want) return false;
        return precedes(pa.bottom.transposed(), pb.top.transposed()) &&
               precedes(pb.bottom.transposed(), pa.top.transposed());
    }
    if (b.defect() != -a.defect() - 1) return false;
    return precedes(pa.top.transposed(), pb.bottom.transposed()) &&
           precedes(pb.top.transposed(), pa.bottom.transposed());
}

bool in_howe_relation(const Partition& a, const Partition& b) {
    return in_howe_relation(Symbol::of_partition(a), Symbol::of_partition(b));
}

std::vector<Symbol> correspondents(const Symbol& s, int n_prime) {
    const SectorMap m = sector_map(sector_of(s), n_prime);
    std::vector<Symbol> out;
    if (!m.target_exists) return out;
    for (const Symbol& t : sector_symbols(m.target, m.even_total))
        if (in_howe_relation(s, t)) out.push_back(t);
    return out;
}

int stratum_of(const Symbol& source, const Symbol& target) {
    const bool even_total = (source.rank() + target.rank()) % 2 == 0;
    const Bipartition ps = source.bipartition(), pt = target.bipartition();
    const int k = even_total ? ps.top.weight() - pt.bottom.weight()
                             : ps.bottom.weight() - pt.top.weight();
    if (k < 0)
        throw VerificationFailure("negative stratum for " + source.to_string() +
                                  " -> " + target.to_string());
    return k;
}

int theta_k_range(const Symbol& s, int n_prime) {
    const SectorMap m = sector_map(sector_of(s), n_prime);
    if (!m.target_exists)
        throw NoTargetSector("no paired sector for " + sector_of(s).to_string() +
                             " at rank " + std::to_string(n_prime));
    const Bipartition bp = s.bipartition();
    return m.even_total ? bp.top.part(1) : bp.bottom.part(1);
}

Symbol theta_k(const Symbol& s, int n_prime, int k) {
    const SectorMap m = sector_map(sector_of(s), n_prime);
    if (!m.target_exists)
        throw NoTargetSector("no paired sector for " + sector_of(s).to_string() +
                             " at rank " + std::to_string(n_prime));
    if (m.tau < 0)
        throw TauNegative("theta_k needs tau >= 0, got " + std::to_string(m.tau));
    const Bipartition bp = s.bipartition();
    auto drop_first = [](const Partition& p) {
        std::vector<int> rest(p.parts().begin() + (p.empty() ? 0 : 1), p.parts().end());
        return Partition(std::move(rest));
    };
    auto single = [](int v) { return v > 0 ? Partition({v}) : Partition{}; };
    Bipartition image;
    if (m.even_total) {
        const int mu1 = bp.top.part(1);
        if (k < 0 || k > mu1)
            throw KOutOfRange("k = " + std::to_string(k) + " outside 0.." +
                              std::to_string(mu1));
        image.top = union_parts(bp.bottom, single(m.tau + k));
        image.bottom = union_parts(drop_first(bp.top), single(mu1 - k));
    } else {
        const int nu1 = bp.bottom.part(1);
        if (k < 0 || k > nu1)
            throw KOutOfRange("k = " + std::to_string(k) + " outside 0.." +
                              std::to_string(nu1));
        image.top = union_parts(drop_first(bp.bottom), single(nu1 - k));
        image.bottom = union_parts(bp.top, single(m.tau + k));
    }
    return Symbol::from_bipartition(image, m.target.defect);
}

namespace {

struct PaddedRows {
    std::vector<int> top, bottom;
};

/// Rows padded to a common size by repeated double shifts, so consecutive
/// images of the stratum maps can be compared entry by entry.
PaddedRows padded_rows(const Symbol& s, size_t top_size) {
    PaddedRows r{s.top().entries(), s.bottom().entries()};
    const bool odd_on_top = s.defect() >= 0;
    while (r.top.size() < top_size) {
        for (int& x : r.top) x += 2;
        for (int& x : r.bottom) x += 2;
        r.top.push_back(odd_on_top ? 1 : 0);
        r.bottom.push_back(odd_on_top ? 0 : 1);
    }
    return r;
}

/// The single entry of `from` missing in `to`; the padded rows of
/// consecutive theta_k images differ in exactly one entry.
int moved_entry(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> diff;
    for (int x : from)
        if (std::find(to.begin(), to.end(), x) == to.end()) diff.push_back(x);
    if (diff.size() != 1)
        throw VerificationFailure("expected exactly one moved entry between rows");
    return diff[0];
}

}  // namespace

PeakAnalysis peak_analysis(const Symbol& s, int n_prime) {
    const int range = theta_k_range(s, n_prime);
    std::vector<Symbol> images;
    PeakAnalysis a;
    for (int k = 0; k <= range; ++k) {
        images.push_back(theta_k(s, n_prime, k));
        a.degrees.push_back(dim_degree(images.back()));
    }
    size_t top_size = 0;
    for (const Symbol& image : images)
        top_size = std::max(top_size, image.top().entries().size());
    for (int k = 0; k + 1 <= range; ++k) {
        const PaddedRows from = padded_rows(images[k], top_size);
        const PaddedRows to = padded_rows(images[k + 1], top_size);
        a.moving_top.push_back(moved_entry(from.top, to.top));
        a.moving_bottom.push_back(moved_entry(from.bottom, to.bottom));
    }
    if (range >= 1) {
        const bool even_total = (s.rank() + n_prime) % 2 == 0;
        a.moving_top.push_back(a.moving_top.back() + (even_total ? 2 : -2));
        a.moving_bottom.push_back(a.moving_bottom.back() + (even_total ? -2 : 2));
    }
    a.k0 = static_cast<int>(std::max_element(a.degrees.begin(), a.degrees.end()) -
                            a.degrees.begin());
    for (int k = 0; k < range; ++k) {
        const bool rising = a.degrees[k] < a.degrees[k + 1];
        if (rising != (k < a.k0) || a.degrees[k] == a.degrees[k + 1])
            throw VerificationFailure("degree profile of theta_k not strictly unimodal at " +
                                      s.to_string());
    }
    return a;
}

int peak_k_closed_form(const PeakAnalysis& a, bool even_total) {
    const int range = static_cast<int>(a.degrees.size()) - 1;
    if (range == 0) return 0;
    // Rising entry r_k and falling entry f_k at step k; the rising row gains
    // 2 per step and the falling row loses 2, so the peak sits where the
    // progressions cross.
    auto rise = [&](int k) { return even_total ? a.moving_top[k] : a.moving_bottom[k]; };
    auto fall = [&](int k) { return even_total ? a.moving_bottom[k] : a.moving_top[k]; };
    if (rise(0) > fall(0)) return 0;
    if (rise(range) < fall(range)) return range;
    for (int k1 = 1; k1 <= range; ++k1) {
        if (rise(k1 - 1) < fall(k1 - 1) && rise(k1) > fall(k1))
            return rise(k1 - 1) + 2 < fall(k1 - 1) ? k1 : k1 - 1;
    }
    throw VerificationFailure("no crossing found in peak_k_closed_form");
}

std::optional<Symbol> minimal_theta(const Symbol& s, int n_prime) {
    const SectorMap m = sector_map(sector_of(s), n_prime);
    if (!m.target_exists) return std::nullopt;
    if (m.tau >= 0) return theta_k(s, n_prime, 0);
    // Reversed direction: s participates exactly when it is the theta_0
    // image of some symbol of the paired sector.
    for (const Symbol& t : sector_symbols(m.target, m.even_total))
        if (theta_k(t, m.source.n, 0) == s) return t;
    return std::nullopt;
}

namespace {
SectorTable forward_sector_table(const SectorMap& m);
}

Symbol greedy_pick(const std::vector<Symbol>& candidates, bool even_total) {
    if (candidates.empty())
        throw VerificationFailure("greedy_pick needs at least one candidate");
    const Symbol* choice = &candidates.front();
    long long best = dim_degree(*choice);
    for (const Symbol& t : candidates) {
        const long long deg = dim_degree(t);
        if (deg > best || (deg == best && lt_symbol(t, *choice, even_total))) {
            best = deg;
            choice = &t;
        }
    }
    return *choice;
}

std::vector<std::pair<Symbol, Symbol>> greedy_theta_sector(const Sector& source,
                                                           int n_prime) {
    const SectorMap m = sector_map(source, n_prime);
    std::vector<std::pair<Symbol, Symbol>> out;
    if (!m.target_exists) return out;
    if (m.tau < 0) {
        // Invert the forward sweep of the reversed pair.
        for (auto& [a, b] : greedy_theta_sector(m.target, source.n))
            out.emplace_back(b, a);
        std::sort(out.begin(), out.end(),
                  [&](const auto& x, const auto& y) {
                      return lt_symbol(x.first, y.first, m.even_total);
                  });
        return out;
    }
    for (const ThetaRow& row : forward_sector_table(m).rows)
        for (const auto& [k, entries] : row.strata)
            for (const ThetaEntry& e : entries)
                if (e.overline) out.emplace_back(row.source, e.symbol);
    return out;
}

std::optional<Symbol> greedy_theta(const Symbol& s, int n_prime) {
    for (const auto& [a, b] : greedy_theta_sector(sector_of(s), n_prime))
        if (a == s) return b;
    return std::nullopt;
}

bool is_stable_range(int n, int n_prime) { return n <= n_prime / 2; }

int first_occurrence(const Partition& p, Tower tower, Variant variant) {
    const Symbol s = Symbol::of_partition(p);
    const int n = p.weight();
    const int d = two_core(p).d;
    const int limit = n + d + 3;  // the participation bounds guarantee a hit by n+d+1
    for (int n_prime = tower == Tower::even ? 0 : 1; n_prime <= limit; n_prime += 2) {
        if (variant == Variant::theta) {
            if (!correspondents(s, n_prime).empty()) return n_prime;
        } else {
            if (minimal_theta(s, n_prime)) return n_prime;
        }
    }
    throw VerificationFailure("no occurrence of " + p.to_string() + " up to rank " +
                              std::to_string(limit));
}

namespace {

/// Ascending (bottom row, top row) bipartition order; within a fixed
/// stratum this is how the non-leading correspondents are listed.
bool display_less(const Symbol& a, const Symbol& b) {
    const Bipartition pa = a.bipartition(), pb = b.bipartition();
    if (pa.bottom != pb.bottom) return lex_less(pa.bottom, pb.bottom);
    return lex_less(pa.top, pb.top);
}

SectorTable forward_sector_table(const SectorMap& m) {
    SectorTable table;
    table.map = m;
    std::set<Symbol> used;
    for (const Symbol& s : sector_symbols(m.source, m.even_total)) {
        ThetaRow row{s, {}};
        const std::vector<Symbol> targets = correspondents(s, m.target.n);
        if (!targets.empty()) {
            long long max_degree = dim_degree(targets.front());
            for (const Symbol& t : targets) max_degree = std::max(max_degree, dim_degree(t));

            std::vector<Symbol> avail;
            for (const Symbol& t : targets)
                if (!used.count(t)) avail.push_back(t);
            if (avail.empty())
                throw VerificationFailure("no unclaimed correspondent left for " +
                                          s.to_string());
            const Symbol choice = greedy_pick(avail, m.even_total);

            std::map<int, std::vector<Symbol>> strata;
            for (const Symbol& t : targets) strata[stratum_of(s, t)].push_back(t);
            for (auto& [k, members] : strata) {
                std::sort(members.begin(), members.end(), display_less);
                if (m.tau >= 0) {
                    const Symbol lead = theta_k(s, m.target.n, k);
                    auto it = std::find(members.begin(), members.end(), lead);
                    if (it == members.end())
                        throw VerificationFailure("theta_k image missing from stratum " +
                                                  std::to_string(k) + " of " + s.to_string());
                    std::rotate(members.begin(), it, it + 1);
                }
                std::vector<ThetaEntry> entries;
                for (const Symbol& t : members)
                    entries.push_back(ThetaEntry{t, dim_degree(t) == max_degree,
                                                 t == choice,
                                                 used.count(t) > 0});
                row.strata.emplace_back(k, std::move(entries));
            }
            used.insert(choice);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

SectorTable sector_table(const Sector& source, int n_prime) {
    const SectorMap m = sector_map(source, n_prime);
    if (!m.target_exists) {
        SectorTable table;
        table.map = m;
        for (const Symbol& s : sector_symbols(source, m.even_total))
            table.rows.push_back(ThetaRow{s, {}});
        return table;
    }
    if (m.tau < 0) {
        SectorTable table = forward_sector_table(sector_map(m.target, source.n));
        table.reversed = true;
        return table;
    }
    return forward_sector_table(m);
}

std::vector<SectorTable> theta_tables(int n, int n_prime) {
    std::vector<SectorTable> out;
    for (const Sector& s : sectors_of(n)) out.push_back(sector_table(s, n_prime));
    return out;
}

}  // namespace howe
