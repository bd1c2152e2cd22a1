#include "howe/table_format.hpp"

#include <json.hpp>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

using ordered_json = nlohmann::ordered_json;

TableDocument make_table_document(int n, int n_prime) {
    return TableDocument{n, n_prime, theta_tables(n, n_prime)};
}

TableDocument make_table_document(int n, int n_prime, int defect) {
    const Sector s{n, defect};
    if (!s.valid())
        throw ParseError("no sector of rank " + std::to_string(n) + " with defect " +
                         std::to_string(defect));
    return TableDocument{n, n_prime, {sector_table(s, n_prime)}};
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "latex") return TableFormat::latex;
    throw ParseError("unknown format '" + name + "' (text|csv|json|latex)");
}

namespace {

std::string entry_text(const ThetaEntry& e) {
    std::string s;
    if (e.overline) s += '*';
    if (e.cancelled) s += '~';
    if (e.natural) s += '#';
    return s + e.symbol.to_string();
}

std::string block_header(const SectorTable& t) {
    std::ostringstream os;
    os << "[" << t.map.source.to_string() << " -> ";
    if (t.map.target_exists)
        os << t.map.target.to_string() << "] tau=" << t.map.tau;
    else
        os << "none]";
    if (t.reversed) os << " reversed";
    return os.str();
}

void render_text(const TableDocument& doc, std::ostream& os) {
    os << "theta-table n=" << doc.n << " n'=" << doc.n_prime << "\n";
    os << "markers: * = overline choice, ~ = cancelled, # = maximal order\n";
    for (const SectorTable& t : doc.sectors) {
        os << "\n" << block_header(t) << "\n";
        for (const ThetaRow& row : t.rows) {
            os << row.source.to_string() << " ::";
            for (const auto& [k, entries] : row.strata) {
                os << " k=" << k << " {";
                for (size_t i = 0; i < entries.size(); ++i)
                    os << (i ? ", " : " ") << entry_text(entries[i]);
                os << " }";
            }
            os << "\n";
        }
    }
}

void render_csv(const TableDocument& doc, std::ostream& os) {
    os << "n,source_defect,n_prime,target_defect,tau,reversed,source,k,pos,target,"
          "natural,overline,cancelled\n";
    auto quoted = [](const std::string& s) { return '"' + s + '"'; };
    for (const SectorTable& t : doc.sectors) {
        for (const ThetaRow& row : t.rows) {
            for (const auto& [k, entries] : row.strata) {
                for (size_t i = 0; i < entries.size(); ++i) {
                    const ThetaEntry& e = entries[i];
                    os << doc.n << ',' << t.map.source.defect << ',' << doc.n_prime
                       << ','
                       << (t.map.target_exists ? std::to_string(t.map.target.defect)
                                               : std::string())
                       << ',' << t.map.tau << ',' << (t.reversed ? 1 : 0) << ','
                       << quoted(row.source.to_string()) << ',' << k << ',' << i << ','
                       << quoted(e.symbol.to_string()) << ',' << e.natural << ','
                       << e.overline << ',' << e.cancelled << "\n";
                }
            }
        }
    }
}

std::pair<std::string, std::string> symbol_rows(const Symbol& s) {
    auto row = [](const BetaSet& b) {
        if (b.empty()) return std::string("-");
        std::string out;
        const auto& e = b.entries();
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e[i]);
        }
        return out;
    };
    return {row(s.top()), row(s.bottom())};
}

void render_json(const TableDocument& doc, std::ostream& os) {
    ordered_json root;
    root["n"] = doc.n;
    root["nprime"] = doc.n_prime;
    root["sectors"] = ordered_json::array();
    for (const SectorTable& t : doc.sectors) {
        ordered_json sec;
        sec["source"] = {{"n", t.map.source.n}, {"defect", t.map.source.defect}};
        if (t.map.target_exists)
            sec["target"] = {{"n", t.map.target.n}, {"defect", t.map.target.defect}};
        else
            sec["target"] = nullptr;
        sec["tau"] = t.map.tau;
        sec["reversed"] = t.reversed;
        sec["rows"] = ordered_json::array();
        for (const ThetaRow& row : t.rows) {
            ordered_json r;
            const auto [top, bottom] = symbol_rows(row.source);
            r["source"] = {{"top", top}, {"bottom", bottom}};
            r["strata"] = ordered_json::array();
            for (const auto& [k, entries] : row.strata) {
                ordered_json stratum;
                stratum["k"] = k;
                stratum["entries"] = ordered_json::array();
                for (const ThetaEntry& e : entries) {
                    const auto [etop, ebottom] = symbol_rows(e.symbol);
                    stratum["entries"].push_back({{"top", etop},
                                                  {"bottom", ebottom},
                                                  {"natural", e.natural},
                                                  {"overline", e.overline},
                                                  {"cancelled", e.cancelled}});
                }
                r["strata"].push_back(std::move(stratum));
            }
            sec["rows"].push_back(std::move(r));
        }
        root["sectors"].push_back(std::move(sec));
    }
    os << root.dump(2) << "\n";
}

std::string latex_binom(const Symbol& s) {
    const auto [top, bottom] = symbol_rows(s);
    return "\\binom{" + top + "}{" + bottom + "}";
}

void render_latex(const TableDocument& doc, std::ostream& os) {
    os << "% theta-table n=" << doc.n << " n'=" << doc.n_prime << "\n";
    for (const SectorTable& t : doc.sectors) {
        size_t max_strata = 1;
        for (const ThetaRow& row : t.rows)
            max_strata = std::max(max_strata, row.strata.size());
        os << "% " << block_header(t) << "\n";
        os << "\\begin{tabular}{c|" << std::string(max_strata, 'l') << "}\n\\toprule\n";
        os << "$" << t.map.source.to_string() << "$ & $"
           << (t.map.target_exists ? t.map.target.to_string() : std::string("-"))
           << "$ \\\\\n";
        os << "$\\Lambda$";
        for (size_t k = 0; k < max_strata; ++k)
            os << " & $\\Theta(\\Lambda)_" << k << "$";
        os << " \\\\\n";
        // Group rows the way the sweep order groups them: by the weight of
        // the leading bipartition row.
        int previous_group = -1;
        for (const ThetaRow& row : t.rows) {
            const Bipartition bp = row.source.bipartition();
            const int group = t.map.even_total ? bp.top.weight() : bp.bottom.weight();
            if (group != previous_group) os << "\\midrule\n";
            previous_group = group;
            os << "$" << latex_binom(row.source) << "$";
            for (const auto& [k, entries] : row.strata) {
                os << " & $";
                for (size_t i = 0; i < entries.size(); ++i) {
                    const ThetaEntry& e = entries[i];
                    if (i) os << ",";
                    std::string cell = latex_binom(e.symbol);
                    if (e.overline) cell = "\\overline{" + cell + "}";
                    if (e.cancelled) cell = "\\bcancel{" + cell + "}";
                    if (e.natural) cell += "^\\natural";
                    os << cell;
                }
                os << "$";
            }
            os << " \\\\\n";
        }
        os << "\\bottomrule\n\\end{tabular}\n";
    }
}

}  // namespace

std::string render(const TableDocument& doc, TableFormat format) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::text: render_text(doc, os); break;
        case TableFormat::csv: render_csv(doc, os); break;
        case TableFormat::json: render_json(doc, os); break;
        case TableFormat::latex: render_latex(doc, os); break;
    }
    return os.str();
}

namespace {

Symbol symbol_from_rows(const std::string& top, const std::string& bottom) {
    return Symbol::parse("(" + top + " | " + bottom + ")");
}

}  // namespace

TableDocument table_document_from_json(const std::string& json_text) {
    const ordered_json root = ordered_json::parse(json_text);
    TableDocument doc;
    doc.n = root.at("n").get<int>();
    doc.n_prime = root.at("nprime").get<int>();
    for (const auto& sec : root.at("sectors")) {
        SectorTable t;
        t.map.source = Sector{sec.at("source").at("n").get<int>(),
                              sec.at("source").at("defect").get<int>()};
        if (!sec.at("target").is_null()) {
            t.map.target = Sector{sec.at("target").at("n").get<int>(),
                                  sec.at("target").at("defect").get<int>()};
            t.map.target_exists = true;
        }
        t.map.tau = sec.at("tau").get<int>();
        t.reversed = sec.at("reversed").get<bool>();
        t.map.even_total = (doc.n + doc.n_prime) % 2 == 0;
        for (const auto& r : sec.at("rows")) {
            ThetaRow row{symbol_from_rows(r.at("source").at("top").get<std::string>(),
                                          r.at("source").at("bottom").get<std::string>()),
                         {}};
            for (const auto& stratum : r.at("strata")) {
                std::vector<ThetaEntry> entries;
                for (const auto& e : stratum.at("entries"))
                    entries.push_back(
                        ThetaEntry{symbol_from_rows(e.at("top").get<std::string>(),
                                                    e.at("bottom").get<std::string>()),
                                   e.at("natural").get<bool>(),
                                   e.at("overline").get<bool>(),
                                   e.at("cancelled").get<bool>()});
                row.strata.emplace_back(stratum.at("k").get<int>(), std::move(entries));
            }
            t.rows.push_back(std::move(row));
        }
        doc.sectors.push_back(std::move(t));
    }
    return doc;
}

}  // namespace howe
