// Bulk per-d rows with CSV (RFC 4180) and JSONL rendering. Output is
// deterministic given the inputs: byte-stable orderings, no timestamps.
#pragma once

#include "frobsharp/bounds.hpp"

#include <optional>
#include <string>

namespace frobsharp {

// One row per d. Non-admissible rows leave r/lambda/classification/
// witness_i/lemma_lb empty, never zero.
struct TableRow {
    Int d;
    bool admissible = false;
    std::optional<Int> r;
    std::int64_t tau = 0;
    std::optional<std::int64_t> lambda;
    std::optional<Sharpness> classification;
    std::optional<std::int64_t> witness_i;
    std::optional<std::int64_t> lemma_lb;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class TableFormat { Csv, Jsonl };

TableRow make_table_row(const Characteristic& p, const Int& d);

// CSV column header; JSONL has none (empty string).
std::string table_header(TableFormat format);

// One rendered line, without the trailing newline.
std::string render_row(const TableRow& row, TableFormat format);

// Full table for d in [d_min, d_max], ascending, newline-terminated lines.
// Row computation may fan out over up to `threads` workers; the merged
// output is identical for every thread count.
std::string render_table(const Characteristic& p, const Int& d_min, const Int& d_max,
                         TableFormat format, unsigned threads = 1);

// Inverse of render_row, for round-trip checks and downstream consumers.
TableRow parse_row(const std::string& line, TableFormat format);

} // namespace frobsharp
