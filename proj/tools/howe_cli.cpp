// Command-line front end: degree queries, symbol inspection, correspondence
// tables, the one-to-one maps, first occurrence, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "howe/errors.hpp"
#include "howe/qpoly.hpp"
#include "howe/relations.hpp"
#include "howe/table_format.hpp"
#include "howe/verify.hpp"

namespace {

using namespace howe;

int cmd_dim(const std::string& partition_text, std::optional<long long> eval_at) {
    const Partition p = Partition::parse(partition_text);
    const FactoredQPoly dim = dim_via_hooks(p);
    std::cout << "partition: " << p.to_string() << "\n";
    std::cout << "dim: " << dim.to_string() << "\n";
    std::cout << "degree: " << dim.degree() << "\n";
    std::cout << "coefficients (ascending): ";
    const auto coeffs = dim.expanded_coefficients();
    for (size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? "," : "") << coeffs[i];
    std::cout << "\n";
    if (eval_at) {
        std::cout << "value at q=" << *eval_at << ": " << dim.evaluate_at(*eval_at)
                  << "\n";
    }
    return 0;
}

int cmd_symbol(const std::string& text) {
    const Symbol s = text.find('(') != std::string::npos
                         ? Symbol::parse(text)
                         : Symbol::of_partition(Partition::parse(text));
    const Partition p = s.to_partition();
    std::cout << "partition: " << p.to_string() << "\n";
    std::cout << "beta-set: " << BetaSet::of_partition(p).to_string() << "\n";
    std::cout << "2-core length: " << two_core(p).d << "\n";
    std::cout << "symbol: " << s.to_string() << "\n";
    std::cout << "defect: " << s.defect() << "\n";
    std::cout << "sector: " << sector_of(s).to_string() << "\n";
    std::cout << "bipartition: " << s.bipartition().to_string() << "\n";
    std::cout << "dim: " << dim_via_hooks(p).to_string() << "\n";
    std::cout << "degree: " << dim_degree(s) << "\n";
    return 0;
}

int cmd_sectors(int n) {
    size_t total = 0;
    for (const Sector& s : sectors_of(n)) {
        std::cout << s.to_string() << ": " << s.size() << " symbols\n";
        total += s.size();
    }
    std::cout << "total: " << total << "\n";
    return 0;
}

int cmd_theta_table(int n, int n_prime, const std::string& format,
                    std::optional<int> sector_defect) {
    const TableDocument doc = sector_defect
                                  ? make_table_document(n, n_prime, *sector_defect)
                                  : make_table_document(n, n_prime);
    std::cout << render(doc, parse_table_format(format));
    return 0;
}

int cmd_theta_map(const std::string& variant, int n_prime, const std::string& symbol_text) {
    const Symbol s = symbol_text.find('(') != std::string::npos
                         ? Symbol::parse(symbol_text)
                         : Symbol::of_partition(Partition::parse(symbol_text));
    std::optional<Symbol> image;
    if (variant == "underline")
        image = minimal_theta(s, n_prime);
    else if (variant == "overline")
        image = greedy_theta(s, n_prime);
    else
        throw ParseError("variant must be underline or overline");
    if (image)
        std::cout << s.to_string() << " -> " << image->to_string() << "\n";
    else
        std::cout << s.to_string() << " -> undefined\n";
    return 0;
}

int cmd_first_occurrence(const std::string& partition_text, const std::string& tower,
                         const std::string& variant) {
    const Partition p = Partition::parse(partition_text);
    const Tower t = tower == "even" ? Tower::even : Tower::odd;
    if (tower != "even" && tower != "odd") throw ParseError("tower must be even or odd");
    const Variant v = variant == "theta" ? Variant::theta : Variant::minimal;
    if (variant != "theta" && variant != "underline")
        throw ParseError("variant must be theta or underline");
    const int rank = first_occurrence(p, t, v);
    std::cout << "first occurrence of " << p.to_string() << " in the " << tower
              << " tower (" << variant << "): n'=" << rank << " (U_" << rank << ")\n";
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& golden_dir) {
    std::vector<CheckResult> results;
    auto append = [&results](std::vector<CheckResult> more) {
        results.insert(results.end(), more.begin(), more.end());
    };
    const bool all = suite == "all";
    if (all || suite == "dims") append(verify_dims(std::min(max_n, 20)));
    if (all || suite == "counts") append(verify_counts(std::min(max_n, 30)));
    if (all || suite == "lemmas") {
        const int bound = std::min(max_n, 12);
        append(verify_lemmas(bound, bound + 2));
    }
    if (all || suite == "tables") append(verify_tables(golden_dir));
    if (all || suite == "occurrence") append(verify_occurrence(std::min(max_n, 8)));
    if (all || suite == "axioms") {
        const int bound = std::min(max_n, 10);
        append(verify_axioms(bound, bound + 2));
    }
    if (results.empty())
        throw ParseError("unknown suite '" + suite +
                         "' (dims|counts|lemmas|tables|occurrence|axioms|all)");
    bool ok = true;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of the theta correspondence on unipotent characters "
                 "of finite unitary groups"};
    app.require_subcommand(1);

    std::string partition_text, symbol_text, variant, tower = "even";
    std::string format = "text", suite = "all", golden_dir;
    int n = 0, n_prime = 0, max_n = 30;
    std::optional<long long> eval_at;
    std::optional<int> sector_defect;

    auto* dim = app.add_subcommand("dim", "character degree polynomial of a partition");
    dim->add_option("partition", partition_text, "for example 6,2")->required();
    dim->add_option("--eval", eval_at, "also evaluate at this prime power");

    auto* symbol = app.add_subcommand("symbol", "inspect a partition or symbol");
    symbol->add_option("value", symbol_text, "partition 6,2 or symbol (7 | 2)")->required();

    auto* sectors = app.add_subcommand("sectors", "sector decomposition of rank n");
    sectors->add_option("n", n, "group rank")->required();

    auto* table = app.add_subcommand("theta-table", "correspondence tables for (U_n, U_n')");
    table->add_option("n", n)->required();
    table->add_option("nprime", n_prime)->required();
    table->add_option("--format", format, "text|csv|json|latex");
    table->add_option("--sector", sector_defect, "restrict to one source defect");

    auto* map = app.add_subcommand("theta-map", "one-to-one correspondence image");
    map->add_option("variant", variant, "underline|overline")->required();
    map->add_option("nprime", n_prime)->required();
    map->add_option("symbol", symbol_text, "partition or symbol text")->required();

    auto* first = app.add_subcommand("first-occurrence", "smallest rank in a Witt tower");
    first->add_option("partition", partition_text)->required();
    first->add_option("--tower", tower, "even|odd")->required();
    std::string fo_variant = "theta";
    first->add_option("--variant", fo_variant, "theta|underline");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "dims|counts|lemmas|tables|occurrence|axioms|all");
    verify->add_option("--max-n", max_n, "size bound for the scans");
    verify->add_option("--golden-dir", golden_dir, "directory with expected table bytes");

    try {
        app.parse(argc, argv);
        if (dim->parsed()) return cmd_dim(partition_text, eval_at);
        if (symbol->parsed()) return cmd_symbol(symbol_text);
        if (sectors->parsed()) return cmd_sectors(n);
        if (table->parsed()) return cmd_theta_table(n, n_prime, format, sector_defect);
        if (map->parsed()) return cmd_theta_map(variant, n_prime, symbol_text);
        if (first->parsed()) return cmd_first_occurrence(partition_text, tower, fo_variant);
        if (verify->parsed()) return cmd_verify(suite, max_n, golden_dir);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const howe::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const howe::MalformedSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const howe::InvalidDefect& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
