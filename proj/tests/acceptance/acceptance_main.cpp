// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds.  The checks live in the library's verify module so the CLI `verify`
// command and this binary agree by construction.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "howe/verify.hpp"

namespace {

struct Criterion {
    std::string label;
    std::vector<howe::CheckResult> results;
};

bool report(const Criterion& c, int index) {
    bool pass = true;
    std::string detail;
    for (const howe::CheckResult& r : c.results) {
        pass = pass && r.pass;
        if (!r.pass) {
            if (!detail.empty()) detail += "; ";
            detail += r.name + ": " + r.detail;
        }
    }
    std::printf("[%2d] %-68s %s\n", index, c.label.c_str(), pass ? "PASS" : "FAIL");
    if (!pass) std::printf("     %s\n", detail.c_str());
    return pass;
}

std::vector<howe::CheckResult> pick(const std::vector<howe::CheckResult>& from,
                                    std::initializer_list<size_t> indices) {
    std::vector<howe::CheckResult> out;
    for (size_t i : indices) out.push_back(from.at(i));
    return out;
}

}  // namespace

int main() {
    using namespace howe;
    const auto start = std::chrono::steady_clock::now();

    // Shared scans, sliced into the numbered criteria below.
    const std::vector<CheckResult> dims = verify_dims(20);
    const std::vector<CheckResult> tables = verify_tables(HOWE_GOLDEN_DIR);
    const std::vector<CheckResult> lemmas = verify_lemmas(12, 14);

    std::vector<Criterion> criteria;
    // dims: 0 agree, 1 degree, 2 positivity, 3 pinned, 4 cuspidal, 5 transpose
    criteria.push_back({"degree-formula equivalence, all partitions of n <= 20",
                        pick(dims, {0, 2, 5})});
    criteria.push_back({"corrected degree functional and pinned degree values",
                        pick(dims, {1, 3, 4})});
    // tables: 0,1 golden; 2 maps; 3 split; 4 peak; 5 absent; 6 roundtrip; 7 determinism
    criteria.push_back({"table reproduction against golden bytes, (7,10) and (8,10)",
                        pick(tables, {0, 1, 6, 7})});
    criteria.push_back({"pinned correspondence values at (7,10) and (8,10)",
                        pick(tables, {2, 3, 4, 5})});
    // lemmas: 0 stratum max, 1 cover, 2 unimodal, 3 tau0, 4 stable, 5 spread,
    //         6 injective, 7 member
    criteria.push_back({"stratum maximality, unimodal peaks, window n <= 12, n' <= 14",
                        pick(lemmas, {0, 1, 2, 5, 6, 7})});
    criteria.push_back({"tau = 0 collapse of the greedy choice",
                        pick(lemmas, {3})});
    criteria.push_back({"stable-range collapse and global maximality",
                        pick(lemmas, {4})});
    criteria.push_back({"first-occurrence agreement on both towers, weights <= 8",
                        verify_occurrence(8)});
    criteria.push_back({"relation axioms and maximality obstructions, n <= 10, n' <= 12",
                        verify_axioms(10, 12)});
    criteria.push_back({"counting identities, n <= 30", verify_counts(30)});

    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i)
        all = report(criteria[i], static_cast<int>(i + 1)) && all;

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("%s in %lld ms\n", all ? "acceptance PASSED" : "acceptance FAILED",
                static_cast<long long>(elapsed));
    return all ? 0 : 1;
}
