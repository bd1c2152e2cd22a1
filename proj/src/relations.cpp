#include "howe/relations.hpp"

#include <algorithm>
#include <json.hpp>

#include "howe/errors.hpp"

namespace howe {

std::optional<SeriesCharacter> extend_to_series(const SeriesCharacter& chi,
                                                int n_prime, OneToOneMap map) {
    if (chi.first_factor_size < 0 || chi.first_factor_size > chi.ambient_n ||
        chi.second_factor.rank() != chi.ambient_n - chi.first_factor_size)
        throw std::invalid_argument("series character ranks are inconsistent");
    if (chi.first_factor_size > n_prime)
        throw std::invalid_argument("first factor does not fit inside rank " +
                                    std::to_string(n_prime));
    const int unip_target = n_prime - chi.first_factor_size;
    const std::optional<Symbol> image =
        map == OneToOneMap::minimal ? minimal_theta(chi.second_factor, unip_target)
                                    : greedy_theta(chi.second_factor, unip_target);
    if (!image) return std::nullopt;
    return SeriesCharacter{chi.first_factor_label, chi.first_factor_size, *image,
                           n_prime};
}

bool RelationWindow::contains_key(int n, int n_prime) const {
    return n >= 0 && n <= max_n_ && n_prime >= 0 && n_prime <= max_n_prime_;
}

const RelationWindow::PairList& RelationWindow::pairs(int n, int n_prime) const {
    static const PairList empty;
    auto it = pairs_.find({n, n_prime});
    return it == pairs_.end() ? empty : it->second;
}

std::vector<RelationWindow::PairKey> RelationWindow::keys() const {
    std::vector<PairKey> out;
    for (int n = 0; n <= max_n_; ++n)
        for (int np = 0; np <= max_n_prime_; ++np) out.push_back({n, np});
    return out;
}

void RelationWindow::add(int n, int n_prime, Partition a, Partition b) {
    pairs_[{n, n_prime}].emplace_back(std::move(a), std::move(b));
}

bool RelationWindow::remove(int n, int n_prime, const Partition& a, const Partition& b) {
    auto it = pairs_.find({n, n_prime});
    if (it == pairs_.end()) return false;
    auto& list = it->second;
    auto pos = std::find(list.begin(), list.end(), std::make_pair(a, b));
    if (pos == list.end()) return false;
    list.erase(pos);
    return true;
}

RelationWindow RelationWindow::one_to_one_window(OneToOneMap map, int max_n,
                                                 int max_n_prime) {
    RelationWindow w(max_n, max_n_prime);
    for (int n = 0; n <= max_n; ++n) {
        for (int np = 0; np <= max_n_prime; ++np) {
            for (const Sector& sec : sectors_of(n)) {
                if (map == OneToOneMap::greedy) {
                    for (const auto& [s, t] : greedy_theta_sector(sec, np))
                        w.add(n, np, s.to_partition(), t.to_partition());
                } else {
                    const SectorMap sm = sector_map(sec, np);
                    if (!sm.target_exists) continue;
                    for (const Symbol& s : sector_symbols(sec, sm.even_total))
                        if (auto t = minimal_theta(s, np))
                            w.add(n, np, s.to_partition(), t->to_partition());
                }
            }
        }
    }
    return w;
}

RelationWindow RelationWindow::full_theta_window(int max_n, int max_n_prime) {
    RelationWindow w(max_n, max_n_prime);
    for (int n = 0; n <= max_n; ++n)
        for (int np = 0; np <= max_n_prime; ++np)
            for (const Sector& sec : sectors_of(n)) {
                const SectorMap sm = sector_map(sec, np);
                if (!sm.target_exists) continue;
                for (const Symbol& s : sector_symbols(sec, sm.even_total))
                    for (const Symbol& t : correspondents(s, np))
                        w.add(n, np, s.to_partition(), t.to_partition());
            }
    return w;
}

std::vector<Violation> check_symmetric(const RelationWindow& w) {
    std::vector<Violation> out;
    for (const auto& [n, np] : w.keys()) {
        if (!w.contains_key(np, n)) continue;
        const auto& mirror = w.pairs(np, n);
        for (const auto& [a, b] : w.pairs(n, np)) {
            if (std::find(mirror.begin(), mirror.end(), std::make_pair(b, a)) ==
                mirror.end())
                out.push_back(Violation{"missing-mirror", n, np,
                                        a.to_string() + " -> " + b.to_string()});
        }
    }
    return out;
}

std::vector<Violation> check_semi_persistent(const RelationWindow& w) {
    std::vector<Violation> out;
    for (const auto& [n, np] : w.keys()) {
        for (const Partition& p : partitions_of(n)) {
            const int d = two_core(p).d;
            const bool bound = (n + np + d) % 2 == 0 ? np >= n - d : np >= n + d + 1;
            if (!bound) continue;
            const auto& list = w.pairs(n, np);
            const bool occurs =
                std::any_of(list.begin(), list.end(),
                            [&](const auto& pr) { return pr.first == p; });
            if (!occurs)
                out.push_back(Violation{"missing-occurrence", n, np, p.to_string()});
        }
    }
    return out;
}

std::vector<Violation> check_one_to_one(const RelationWindow& w) {
    std::vector<Violation> out;
    for (const auto& [n, np] : w.keys()) {
        const auto& list = w.pairs(n, np);
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                if (list[i].first == list[j].first)
                    out.push_back(Violation{"duplicate-source", n, np,
                                            list[i].first.to_string()});
                if (list[i].second == list[j].second)
                    out.push_back(Violation{"duplicate-target", n, np,
                                            list[i].second.to_string()});
            }
    }
    return out;
}

MaximalityWitness maximality_witness(const RelationWindow& w, int n, int n_prime,
                                     const Partition& a, const Partition& b) {
    const auto& list = w.pairs(n, n_prime);
    if (std::find(list.begin(), list.end(), std::make_pair(a, b)) != list.end())
        throw CandidateNotInTheta("candidate pair already belongs to the window");
    for (const auto& [s, t] : list)
        if (s == a) return MaximalityWitness{MaximalityWitness::Kind::existing_image, s, t};
    for (const auto& [s, t] : list)
        if (t == b)
            return MaximalityWitness{MaximalityWitness::Kind::backward_image, s, t};
    // No obstruction: on a one-to-one sub-correspondence window this only
    // happens for pairs outside the correspondence.
    throw CandidateNotInTheta("no obstruction for " + a.to_string() + " -> " +
                              b.to_string() + " at (" + std::to_string(n) + "," +
                              std::to_string(n_prime) + ")");
}

std::string violations_to_json(const std::vector<Violation>& violations) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Violation& v : violations)
        out.push_back({{"kind", v.kind},
                       {"pair", {v.n, v.n_prime}},
                       {"detail", v.detail}});
    return out.dump(2) + "\n";
}

std::string witness_to_json(const MaximalityWitness& w, int n, int n_prime) {
    nlohmann::ordered_json out;
    out["kind"] = w.kind == MaximalityWitness::Kind::existing_image ? "existing-image"
                                                                    : "backward-image";
    out["pair"] = {n, n_prime};
    out["source"] = w.source.to_string();
    out["target"] = w.target.to_string();
    return out.dump(2) + "\n";
}

}  // namespace howe
