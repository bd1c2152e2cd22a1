#include "howe/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "howe/errors.hpp"
#include "howe/qpoly.hpp"
#include "howe/relations.hpp"
#include "howe/table_format.hpp"

namespace howe {

namespace {

/// Accumulates failures for one named check; collapses to one CheckResult.
class Check {
public:
    explicit Check(std::string name) : result_{std::move(name), true, ""} {}

    void fail(const std::string& detail) {
        result_.pass = false;
        if (!result_.detail.empty()) result_.detail += "; ";
        if (result_.detail.size() < 400) result_.detail += detail;
    }

    void require(bool condition, const std::string& detail) {
        if (!condition) fail(detail);
    }

    CheckResult done(const std::string& summary = "") {
        if (result_.pass) result_.detail = summary;
        return result_;
    }

private:
    CheckResult result_;
};

std::string pair_tag(int n, int np) {
    return "(" + std::to_string(n) + "," + std::to_string(np) + ")";
}

}  // namespace

std::vector<CheckResult> verify_dims(int max_n) {
    std::vector<CheckResult> out;
    long long count = 0;

    Check agree("hook and beta-set degree formulas agree (exact factored equality)");
    Check degree("polynomial degree matches the beta-set degree functional");
    Check positive("degrees are polynomials with positive integer values at q=2,3");
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& p : partitions_of(n)) {
            ++count;
            const FactoredQPoly via_hooks = dim_via_hooks(p);
            if (via_hooks != dim_via_betaset(p))
                agree.fail("mismatch at " + p.to_string());
            if (via_hooks.degree() != dim_degree(BetaSet::of_partition(p)))
                degree.fail("degree mismatch at " + p.to_string());
            if (!via_hooks.is_polynomial())
                positive.fail("not a polynomial at " + p.to_string());
            for (long long q0 : {2, 3}) {
                const BigRational v = via_hooks.evaluate_at(q0);
                if (denominator(v) != 1 || v <= 0)
                    positive.fail("bad value at " + p.to_string() + ", q=" +
                                  std::to_string(q0));
            }
        }
    }
    const std::string scanned = std::to_string(count) + " partitions, n <= " +
                                std::to_string(max_n);
    out.push_back(agree.done(scanned));
    out.push_back(degree.done(scanned));
    out.push_back(positive.done(scanned));

    Check pinned("pinned degrees: (7 | 2) -> 12 and the cuspidal (3,1 | -) -> 2");
    pinned.require(dim_degree(Symbol::parse("(7 | 2)")) == 12, "(7 | 2) degree");
    pinned.require(dim_degree(Symbol::parse("(3,1 | -)")) == 2, "(3,1 | -) degree");
    pinned.require(dim_via_hooks(Partition::parse("2,1")).to_string() == "q * Phi1",
                   "cuspidal rank-3 polynomial");
    out.push_back(pinned.done());

    Check cusp("cuspidal closed form for d <= 5");
    for (int d = 0; d <= 5; ++d) {
        const Partition sc = staircase(d);
        FactoredQPoly expected =
            FactoredQPoly::q_power(static_cast<long long>(d + 1) * d * (d - 1) / 6);
        expected *= unitary_group_order_prime_part(sc.weight());
        for (int i = 1; i <= d; ++i)
            expected /= FactoredQPoly::q_pow_plus_one(2 * i - 1).pow(d + 1 - i);
        cusp.require(dim_via_hooks(sc) == expected, "mismatch at d=" + std::to_string(d));
    }
    out.push_back(cusp.done());

    Check gsym("hook quotient is transpose-invariant");
    for (int n = 0; n <= std::min(max_n, 16); ++n)
        for (const Partition& p : partitions_of(n)) {
            const Partition t = p.transposed();
            const FactoredQPoly gp =
                dim_via_hooks(p) / FactoredQPoly::q_power(p.weighted_row_sum());
            const FactoredQPoly gt =
                dim_via_hooks(t) / FactoredQPoly::q_power(t.weighted_row_sum());
            gsym.require(gp == gt, "mismatch at " + p.to_string());
        }
    out.push_back(gsym.done("n <= " + std::to_string(std::min(max_n, 16))));
    return out;
}

std::vector<CheckResult> verify_counts(int max_n) {
    std::vector<CheckResult> out;
    Check total("sector sizes add up to the partition count");
    Check each("each sector is in bijection with its bipartitions");
    for (int n = 0; n <= max_n; ++n) {
        const size_t pn = partitions_of(n).size();
        size_t sum = 0;
        for (const Sector& s : sectors_of(n)) {
            const std::vector<Symbol> symbols = sector_symbols(s, true);
            sum += symbols.size();
            each.require(static_cast<int>(symbols.size()) == s.size(),
                         s.to_string() + " enumeration vs count");
            std::set<Partition> parts;
            for (const Symbol& sym : symbols) {
                parts.insert(sym.to_partition());
                each.require(sector_of(sym) == s,
                             "stray symbol in " + s.to_string());
            }
            each.require(parts.size() == symbols.size(),
                         "duplicate partitions in " + s.to_string());
        }
        total.require(sum == pn, "n=" + std::to_string(n));
    }
    out.push_back(total.done("n <= " + std::to_string(max_n)));
    out.push_back(each.done());

    Check pinnedc("pinned sector sizes 10, 5, 20, 2, 1");
    const std::pair<Sector, int> pinned[] = {{{7, -1}, 10}, {{7, 2}, 5},  {{8, 0}, 20},
                                             {{8, -3}, 2},  {{10, 4}, 1}};
    for (const auto& [sector, size] : pinned)
        pinnedc.require(sector.size() == size, sector.to_string());
    pinnedc.require(sector_symbols(Sector{10, 4}, true).at(0) ==
                        Symbol::parse("(7,5,3,1 | -)"),
                    "unique symbol of S(10,4)");
    out.push_back(pinnedc.done());
    return out;
}

std::vector<CheckResult> verify_lemmas(int max_n, int max_n_prime) {
    std::vector<CheckResult> out;
    Check stratum_max("theta_k is the strict degree maximum of its stratum");
    Check stratum_cover("theta_k images cover every non-empty stratum");
    Check unimodal("degree profile over k is strictly unimodal with matching closed form");
    Check tau0("tau = 0 sectors collapse: unclaimed sets are singletons and both maps agree");
    Check stable("stable range: theta_0 is the strict global degree maximum and both maps agree");
    Check spread("related symbols have 2-core lengths both zero or differing by one");
    Check injective("minimal and greedy maps are injective per sector");
    Check member("minimal map lands inside the correspondent set");

    for (int n = 0; n <= max_n; ++n) {
        for (int np = 0; np <= max_n_prime; ++np) {
            for (const Sector& sec : sectors_of(n)) {
                const SectorMap sm = sector_map(sec, np);
                if (!sm.target_exists) continue;
                const std::vector<Symbol> sources = sector_symbols(sec, sm.even_total);

                if (sm.tau >= 0) {
                    for (const Symbol& s : sources) {
                        const std::vector<Symbol> targets = correspondents(s, np);
                        std::map<int, std::vector<Symbol>> strata;
                        for (const Symbol& t : targets)
                            strata[stratum_of(s, t)].push_back(t);

                        const int range = theta_k_range(s, np);
                        for (int k = 0; k <= range; ++k) {
                            const Symbol image = theta_k(s, np, k);
                            auto it = strata.find(k);
                            if (it == strata.end()) {
                                stratum_cover.fail("empty stratum " + std::to_string(k) +
                                                   " for " + s.to_string() + " at " +
                                                   pair_tag(n, np));
                                continue;
                            }
                            const long long image_degree = dim_degree(image);
                            bool found = false;
                            for (const Symbol& t : it->second) {
                                if (t == image) {
                                    found = true;
                                    continue;
                                }
                                if (dim_degree(t) >= image_degree)
                                    stratum_max.fail(s.to_string() + " stratum " +
                                                     std::to_string(k) + " at " +
                                                     pair_tag(n, np));
                            }
                            if (!found)
                                stratum_cover.fail("theta_k not a correspondent: " +
                                                   s.to_string() + " k=" +
                                                   std::to_string(k));
                        }
                        if (static_cast<int>(strata.size()) != range + 1)
                            stratum_cover.fail("stray stratum for " + s.to_string() +
                                               " at " + pair_tag(n, np));

                        const PeakAnalysis pa = peak_analysis(s, np);  // asserts unimodal
                        if (peak_k_closed_form(pa, sm.even_total) != pa.k0)
                            unimodal.fail("closed form differs at " + s.to_string() +
                                          " " + pair_tag(n, np));
                    }
                }

                // Defect spread across the relation.
                for (const Symbol& s : sources)
                    for (const Symbol& t : correspondents(s, np)) {
                        const int da = sector_of(s).d(), db = sector_of(t).d();
                        spread.require(
                            (da == 0 && db == 0) || std::abs(da - db) == 1,
                            s.to_string() + " ~ " + t.to_string());
                    }

                // Injectivity and membership of the one-to-one maps.
                std::set<Symbol> minimal_images, greedy_images;
                for (const Symbol& s : sources) {
                    if (auto img = minimal_theta(s, np)) {
                        injective.require(minimal_images.insert(*img).second,
                                          "minimal collision at " + img->to_string() +
                                              " " + pair_tag(n, np));
                        const std::vector<Symbol> targets = correspondents(s, np);
                        member.require(std::find(targets.begin(), targets.end(), *img) !=
                                           targets.end(),
                                       s.to_string() + " at " + pair_tag(n, np));
                    }
                }
                for (const auto& [s, t] : greedy_theta_sector(sec, np))
                    injective.require(greedy_images.insert(t).second,
                                      "greedy collision at " + t.to_string() + " " +
                                          pair_tag(n, np));

                // tau = 0 collapse, checked through the sweep bookkeeping.
                if (sm.tau == 0) {
                    std::set<Symbol> used;
                    for (const Symbol& s : sources) {
                        std::vector<Symbol> avail;
                        for (const Symbol& t : correspondents(s, np))
                            if (!used.count(t)) avail.push_back(t);
                        tau0.require(avail.size() == 1 && avail[0] == theta_k(s, np, 0),
                                     s.to_string() + " at " + pair_tag(n, np));
                        if (!avail.empty()) used.insert(avail[0]);
                    }
                    for (const Symbol& s : sources)
                        tau0.require(minimal_theta(s, np) == greedy_theta(s, np),
                                     "map mismatch at " + s.to_string());
                }

                // Stable range collapse.
                if (is_stable_range(n, np) && sm.tau >= 0) {
                    const auto greedy = greedy_theta_sector(sec, np);
                    for (const Symbol& s : sources) {
                        const Symbol image = theta_k(s, np, 0);
                        const long long image_degree = dim_degree(image);
                        for (const Symbol& t : correspondents(s, np))
                            stable.require(t == image || dim_degree(t) < image_degree,
                                           s.to_string() + " at " + pair_tag(n, np));
                        auto it = std::find_if(greedy.begin(), greedy.end(),
                                               [&](const auto& pr) { return pr.first == s; });
                        stable.require(it != greedy.end() && it->second == image,
                                       "greedy differs at " + s.to_string());
                    }
                }
            }
        }
    }
    const std::string window = "window n <= " + std::to_string(max_n) + ", n' <= " +
                               std::to_string(max_n_prime);
    out.push_back(stratum_max.done(window));
    out.push_back(stratum_cover.done(window));
    out.push_back(unimodal.done(window));
    out.push_back(tau0.done(window));
    out.push_back(stable.done(window));
    out.push_back(spread.done(window));
    out.push_back(injective.done(window));
    out.push_back(member.done(window));
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string first_difference(const std::string& got, const std::string& want) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        if (i >= got.size() || i >= want.size() || got[i] != want[i])
            return "first difference at line " + std::to_string(line) + ", column " +
                   std::to_string(col);
        if (got[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "";
}

}  // namespace

std::vector<CheckResult> verify_tables(const std::string& golden_dir) {
    std::vector<CheckResult> out;

    if (!golden_dir.empty()) {
        const std::pair<std::pair<int, int>, std::string> cases[] = {
            {{7, 10}, "theta_table_7_10.txt"},
            {{8, 10}, "theta_table_8_10.txt"},
        };
        for (const auto& [pair, file] : cases) {
            Check c("table " + pair_tag(pair.first, pair.second) +
                    " matches the expected bytes");
            try {
                const std::string got =
                    render(make_table_document(pair.first, pair.second), TableFormat::text);
                const std::string want = read_file(golden_dir + "/" + file);
                if (got != want) c.fail(first_difference(got, want));
            } catch (const std::exception& e) {
                c.fail(e.what());
            }
            out.push_back(c.done());
        }
    }

    Check maps("minimal and greedy maps split at (- | 7) exactly as pinned");
    {
        const Symbol s = Symbol::parse("(- | 7)");
        const auto mini = minimal_theta(s, 10);
        const auto greedy = greedy_theta(s, 10);
        maps.require(mini && *mini == Symbol::parse("(7 | 4)"), "minimal image");
        maps.require(greedy && *greedy == Symbol::parse("(5 | 6)"), "greedy image");
        maps.require(mini != greedy, "maps must differ here");
    }
    out.push_back(maps.done());

    Check split("greedy map equals theta_1 exactly on (5 | 4), (7 | 2), (9 | 0) at (8,10)");
    {
        std::vector<std::string> hits;
        for (const auto& [s, t] : greedy_theta_sector(Sector{8, 0}, 10)) {
            const Symbol theta0 = theta_k(s, 10, 0);
            if (t != theta0 && theta_k_range(s, 10) >= 1 && t == theta_k(s, 10, 1))
                hits.push_back(s.to_string());
            else if (t != theta0)
                split.fail("greedy image is neither theta_0 nor theta_1 at " +
                           s.to_string());
        }
        const std::vector<std::string> expected = {"(5 | 4)", "(7 | 2)", "(9 | 0)"};
        if (hits != expected) {
            std::string got;
            for (const auto& h : hits) got += (got.empty() ? "" : ", ") + h;
            split.fail("computed set { " + got + " } differs from the pinned one");
        }
    }
    out.push_back(split.done());

    Check peak("degree peak of (7 | 2) at (8,10): k0 = 1 with the pinned progressions");
    {
        const PeakAnalysis pa = peak_analysis(Symbol::parse("(7 | 2)"), 10);
        peak.require(pa.k0 == 1, "k0");
        peak.require(pa.moving_top == std::vector<int>({5, 7, 9, 11}), "rising entries");
        peak.require(pa.moving_bottom == std::vector<int>({8, 6, 4, 2}), "falling entries");
    }
    out.push_back(peak.done());

    Check absent("(- | 7,3,1) is the unique rank-8 symbol with no correspondent at n'=10");
    {
        std::vector<std::string> missing;
        for (const Sector& sec : sectors_of(8))
            for (const Symbol& s : sector_symbols(sec, true))
                if (correspondents(s, 10).empty()) missing.push_back(s.to_string());
        absent.require(missing == std::vector<std::string>{"(- | 7,3,1)"},
                       "computed " + std::to_string(missing.size()) + " absentees");
    }
    out.push_back(absent.done());

    Check roundtrip("JSON rendering round-trips");
    Check determinism("rendering is deterministic");
    for (const auto& [n, np] : {std::pair<int, int>{7, 10}, {8, 10}, {0, 0}}) {
        const TableDocument doc = make_table_document(n, np);
        const std::string json = render(doc, TableFormat::json);
        const TableDocument parsed = table_document_from_json(json);
        roundtrip.require(render(parsed, TableFormat::json) == json, pair_tag(n, np));
        for (TableFormat f : {TableFormat::text, TableFormat::csv, TableFormat::json,
                              TableFormat::latex})
            determinism.require(render(make_table_document(n, np), f) == render(doc, f),
                                pair_tag(n, np));
    }
    out.push_back(roundtrip.done());
    out.push_back(determinism.done());
    return out;
}

std::vector<CheckResult> verify_occurrence(int max_weight) {
    std::vector<CheckResult> out;
    Check c("first occurrence agrees between the correspondence and the minimal map");
    for (int n = 0; n <= max_weight; ++n)
        for (const Partition& p : partitions_of(n))
            for (Tower tower : {Tower::even, Tower::odd}) {
                const int via_theta = first_occurrence(p, tower, Variant::theta);
                const int via_minimal = first_occurrence(p, tower, Variant::minimal);
                c.require(via_theta == via_minimal,
                          p.to_string() + (tower == Tower::even ? " even" : " odd") +
                              " tower: " + std::to_string(via_theta) + " vs " +
                              std::to_string(via_minimal));
            }
    out.push_back(c.done("weights <= " + std::to_string(max_weight) + ", both towers"));
    return out;
}

std::vector<CheckResult> verify_axioms(int max_n, int max_n_prime) {
    std::vector<CheckResult> out;
    const RelationWindow full = RelationWindow::full_theta_window(max_n, max_n_prime);
    for (OneToOneMap map : {OneToOneMap::minimal, OneToOneMap::greedy}) {
        const std::string label = map == OneToOneMap::minimal ? "minimal" : "greedy";
        const RelationWindow w =
            RelationWindow::one_to_one_window(map, max_n, max_n_prime);

        Check axioms(label + " window is symmetric, semi-persistent, one-to-one");
        for (const Violation& v : check_symmetric(w))
            axioms.fail(v.kind + " " + pair_tag(v.n, v.n_prime) + " " + v.detail);
        for (const Violation& v : check_semi_persistent(w))
            axioms.fail(v.kind + " " + pair_tag(v.n, v.n_prime) + " " + v.detail);
        for (const Violation& v : check_one_to_one(w))
            axioms.fail(v.kind + " " + pair_tag(v.n, v.n_prime) + " " + v.detail);
        out.push_back(axioms.done("window n <= " + std::to_string(max_n) + ", n' <= " +
                                  std::to_string(max_n_prime)));

        Check maximal(label + " window blocks every correspondence pair outside it");
        long long candidates = 0;
        for (const auto& [n, np] : full.keys()) {
            const auto& wpairs = w.pairs(n, np);
            for (const auto& [a, b] : full.pairs(n, np)) {
                if (std::find(wpairs.begin(), wpairs.end(), std::make_pair(a, b)) !=
                    wpairs.end())
                    continue;
                ++candidates;
                try {
                    const MaximalityWitness wit = maximality_witness(w, n, np, a, b);
                    const bool valid =
                        wit.kind == MaximalityWitness::Kind::existing_image
                            ? wit.source == a && !(wit.target == b)
                            : wit.target == b && !(wit.source == a);
                    maximal.require(
                        valid && std::find(wpairs.begin(), wpairs.end(),
                                           std::make_pair(wit.source, wit.target)) !=
                                     wpairs.end(),
                        "invalid witness for " + a.to_string() + " -> " + b.to_string() +
                            " at " + pair_tag(n, np));
                } catch (const CandidateNotInTheta& e) {
                    maximal.fail(std::string("no obstruction: ") + e.what());
                }
            }
        }
        out.push_back(maximal.done(std::to_string(candidates) + " candidates"));
    }
    return out;
}

}  // namespace howe
