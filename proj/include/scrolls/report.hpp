// Flat output records and their CSV / JSON-lines / table encodings.
//
// Integers are always written in full decimal. Values of t exceed 64 bits
// once n is in the low hundreds, so JSON numbers are emitted as bare digit
// strings rather than going through a double or int64.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scrolls/enumerate.hpp"

namespace scrolls {

inline constexpr int kRecordSchemaVersion = 1;

struct OutputRecord {
    int n = 0;
    Integer q, d, e2, t;
    Stage stage_reached = Stage::Raw;
    std::optional<Classification> classification;
    std::optional<Integer> a, b, k_sq, euler, chi, genus, cast_bound;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord to_output_record(const CandidateRecord& rec);
// Every raw candidate of the report, or only accepted ones.
std::vector<OutputRecord> output_records(const EnumReport& report, bool include_all);

// The OutputRecord field list, in order.
const std::vector<std::string>& record_fields();

std::string csv_header();
std::string to_csv_row(const OutputRecord& r);
// Self-contained JSON object on one line, starting with the schema version.
std::string to_json_line(const OutputRecord& r);

// Parses either encoding back into field name -> raw text ("" for null).
std::vector<std::pair<std::string, std::string>> parse_csv_row(const std::string& header,
                                                               const std::string& row);
std::vector<std::pair<std::string, std::string>> parse_json_line(const std::string& line);

void write_table(std::ostream& os, const std::vector<OutputRecord>& rows);
void write_diagnostics(std::ostream& os, const EnumReport& report);
std::string diagnostics_json(const EnumReport& report);

// The block of JSON lines written for one n in a sweep.
std::string serialize_block(const EnumReport& report);

// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex_digest(const std::string& bytes);

}  // namespace scrolls
