#pragma once

#include <string>
#include <vector>

#include "howe/correspondence.hpp"

namespace howe {

/// A rendered correspondence table for one dual pair.  Row order is the
/// ascending sector sweep order, so rendering is deterministic byte for
/// byte for a fixed input and format.
struct TableDocument {
    int n = 0;
    int n_prime = 0;
    std::vector<SectorTable> sectors;
};

TableDocument make_table_document(int n, int n_prime);

/// Restrict to the sector of rank n with the given defect.
TableDocument make_table_document(int n, int n_prime, int defect);

enum class TableFormat { text, csv, json, latex };
TableFormat parse_table_format(const std::string& name);  // throws ParseError

/// Text markers: '*' = greedy choice, '~' = cancelled, '#' = maximal degree.
std::string render(const TableDocument& doc, TableFormat format);

/// Inverse of the json rendering; consumes exactly the documented schema.
TableDocument table_document_from_json(const std::string& json_text);

}  // namespace howe
