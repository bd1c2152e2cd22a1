#include <doctest.h>

#include <fstream>
#include <sstream>

#include "howe/errors.hpp"
#include "howe/table_format.hpp"

using namespace howe;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("golden text tables") {
    CHECK(render(make_table_document(7, 10), TableFormat::text) ==
          read_file(std::string(HOWE_GOLDEN_DIR) + "/theta_table_7_10.txt"));
    CHECK(render(make_table_document(8, 10), TableFormat::text) ==
          read_file(std::string(HOWE_GOLDEN_DIR) + "/theta_table_8_10.txt"));
}

TEST_CASE("trivial pair renders a single row") {
    const std::string text = render(make_table_document(0, 0), TableFormat::text);
    CHECK(text == "theta-table n=0 n'=0\n"
                  "markers: * = overline choice, ~ = cancelled, # = maximal order\n"
                  "\n"
                  "[S(0,0) -> S(0,0)] tau=0\n"
                  "(- | -) :: k=0 { *#(- | -) }\n");
}

TEST_CASE("sector filter") {
    const TableDocument doc = make_table_document(7, 10, 2);
    REQUIRE(doc.sectors.size() == 1);
    CHECK(doc.sectors[0].map.source == Sector{7, 2});
    CHECK_THROWS_AS(make_table_document(7, 10, 0), ParseError);
}

TEST_CASE("rendering determinism across rebuilt documents") {
    for (TableFormat f : {TableFormat::text, TableFormat::csv, TableFormat::json,
                          TableFormat::latex})
        CHECK(render(make_table_document(7, 10), f) == render(make_table_document(7, 10), f));
}

TEST_CASE("json round trip") {
    for (const auto& [n, np] : {std::pair<int, int>{7, 10}, {8, 10}, {0, 0}, {1, 1}}) {
        const TableDocument doc = make_table_document(n, np);
        const std::string json = render(doc, TableFormat::json);
        const TableDocument parsed = table_document_from_json(json);
        CHECK(render(parsed, TableFormat::json) == json);
        CHECK(render(parsed, TableFormat::text) == render(doc, TableFormat::text));
    }
}

TEST_CASE("csv carries one line per entry") {
    const std::string csv = render(make_table_document(7, 10), TableFormat::csv);
    std::istringstream lines(csv);
    std::string line;
    size_t rows = 0, header = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("n,", 0) == 0)
            ++header;
        else
            ++rows;
    }
    CHECK(header == 1);
    size_t entries = 0;
    for (const SectorTable& t : make_table_document(7, 10).sectors)
        for (const ThetaRow& row : t.rows)
            for (const auto& [k, list] : row.strata) entries += list.size();
    CHECK(rows == entries);
}

TEST_CASE("latex format quotes the marks") {
    const std::string tex = render(make_table_document(7, 10), TableFormat::latex);
    CHECK(tex.find("\\binom{7,5,3,1}{10,6,4,2}") != std::string::npos);
    CHECK(tex.find("\\overline{\\binom{5}{6}}^\\natural") != std::string::npos);
    CHECK(tex.find("\\bcancel{\\binom{3,1}{8,4}}") != std::string::npos);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(parse_table_format("text") == TableFormat::text);
    CHECK(parse_table_format("latex") == TableFormat::latex);
    CHECK_THROWS_AS(parse_table_format("markdown"), ParseError);
}
