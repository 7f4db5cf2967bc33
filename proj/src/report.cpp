#include "scrolls/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace scrolls {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string opt_str(const std::optional<Integer>& v) { return v ? v->get_str() : std::string(); }

// Field values as text, "" meaning null; the second flag marks strings.
std::vector<std::pair<std::string, bool>> values(const OutputRecord& r) {
    return {
        {std::to_string(r.n), false},
        {r.q.get_str(), false},
        {r.d.get_str(), false},
        {r.e2.get_str(), false},
        {r.t.get_str(), false},
        {to_string(r.stage_reached), true},
        {r.classification ? to_string(*r.classification) : "", true},
        {opt_str(r.a), false},
        {opt_str(r.b), false},
        {opt_str(r.k_sq), false},
        {opt_str(r.euler), false},
        {opt_str(r.chi), false},
        {opt_str(r.genus), false},
        {opt_str(r.cast_bound), false},
    };
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Collects top-level scalars keeping the raw text of every number.
class RawSax : public nlohmann::json::json_sax_t {
public:
    Fields fields;

    bool null() override { return emit(""); }
    bool boolean(bool v) override { return emit(v ? "true" : "false"); }
    bool number_integer(number_integer_t v) override { return emit(std::to_string(v)); }
    bool number_unsigned(number_unsigned_t v) override { return emit(std::to_string(v)); }
    bool number_float(number_float_t, const string_t& s) override { return emit(s); }
    bool string(string_t& v) override { return emit(v); }
    bool binary(binary_t&) override { return false; }
    bool start_object(std::size_t) override { return ++depth_ == 1; }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override { return false; }
    bool end_array() override { return false; }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& e) override {
        throw std::runtime_error(std::string("malformed record: ") + e.what());
    }

private:
    bool emit(std::string v) {
        fields.emplace_back(key_, std::move(v));
        return true;
    }

    std::string key_;
    int depth_ = 0;
};

}  // namespace

OutputRecord to_output_record(const CandidateRecord& rec) {
    OutputRecord r;
    r.n = rec.pair.n;
    r.q = rec.pair.q;
    r.d = rec.pair.d;
    r.e2 = rec.pair.e2;
    r.t = rec.pair.t;
    r.stage_reached = rec.stage;
    r.classification = rec.classification;
    r.a = rec.inv.a;
    r.b = rec.inv.b;
    r.k_sq = rec.inv.k_sq;
    r.euler = rec.inv.euler;
    r.chi = rec.inv.chi;
    r.genus = rec.inv.genus;
    r.cast_bound = rec.inv.cast_bound;
    return r;
}

std::vector<OutputRecord> output_records(const EnumReport& report, bool include_all) {
    std::vector<OutputRecord> out;
    for (const auto& rec : report.records)
        if (include_all || rec.stage == Stage::Accepted)
            out.push_back(to_output_record(rec));
    return out;
}

const std::vector<std::string>& record_fields() {
    static const std::vector<std::string> fields = {
        "n", "q", "d", "e2", "t", "stage_reached", "classification",
        "a", "b", "K_sq", "euler", "chi", "genus", "cast_bound"};
    return fields;
}

std::string csv_header() {
    std::string out;
    for (const auto& f : record_fields()) {
        if (!out.empty())
            out += ',';
        out += f;
    }
    return out;
}

std::string to_csv_row(const OutputRecord& r) {
    std::string out;
    bool first = true;
    for (const auto& [v, is_string] : values(r)) {
        if (!first)
            out += ',';
        first = false;
        out += v;
    }
    return out;
}

std::string to_json_line(const OutputRecord& r) {
    std::string out = "{\"schema\":" + std::to_string(kRecordSchemaVersion);
    const auto& names = record_fields();
    const auto vals = values(r);
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += ",\"" + names[i] + "\":";
        const auto& [v, is_string] = vals[i];
        if (v.empty())
            out += "null";
        else if (is_string)
            out += '"' + v + '"';
        else
            out += v;
    }
    out += '}';
    return out;
}

Fields parse_csv_row(const std::string& header, const std::string& row) {
    const auto names = split(header, ',');
    const auto cells = split(row, ',');
    if (names.size() != cells.size())
        throw std::runtime_error("csv row has " + std::to_string(cells.size()) + " cells, header has " +
                                 std::to_string(names.size()));
    Fields out;
    for (std::size_t i = 0; i < names.size(); ++i)
        out.emplace_back(names[i], cells[i]);
    return out;
}

Fields parse_json_line(const std::string& line) {
    RawSax sax;
    nlohmann::json::sax_parse(line, &sax);
    return sax.fields;
}

void write_table(std::ostream& os, const std::vector<OutputRecord>& rows) {
    const auto& names = record_fields();
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (const auto& [v, is_string] : values(r))
            line.push_back(v.empty() ? "-" : v);
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        width[i] = names[i].size();
        for (const auto& line : cells)
            width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i)
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << line[i];
        os << '\n';
    };
    emit(names);
    for (const auto& line : cells)
        emit(line);
}

void write_diagnostics(std::ostream& os, const EnumReport& report) {
    const auto& c = report.diagnostics;
    os << "n=" << report.n << " raw=" << c.raw << " low_degree=" << c.low_degree << " known=" << c.known
       << " low_degree_unmatched=" << c.low_degree_unmatched << " general_type=" << c.general_type
       << " rejected_divisibility=" << c.rejected_divisibility << " rejected_gamma2=" << c.rejected_gamma2
       << " rejected_noether=" << c.rejected_noether << " rejected_genus=" << c.rejected_genus
       << " genus_nonintegral=" << c.genus_nonintegral
       << " castelnuovo_violations=" << c.castelnuovo_violations << " accepted=" << c.accepted << '\n';
}

std::string diagnostics_json(const EnumReport& report) {
    const auto& c = report.diagnostics;
    nlohmann::ordered_json j = {
        {"raw", c.raw},
        {"low_degree", c.low_degree},
        {"known", c.known},
        {"low_degree_unmatched", c.low_degree_unmatched},
        {"general_type", c.general_type},
        {"rejected_divisibility", c.rejected_divisibility},
        {"rejected_gamma2", c.rejected_gamma2},
        {"rejected_noether", c.rejected_noether},
        {"rejected_genus", c.rejected_genus},
        {"genus_nonintegral", c.genus_nonintegral},
        {"castelnuovo_violations", c.castelnuovo_violations},
        {"accepted", c.accepted},
    };
    return j.dump();
}

std::string serialize_block(const EnumReport& report) {
    std::string out;
    for (const auto& r : output_records(report, true)) {
        out += to_json_line(r);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex_digest(const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    return os.str();
}

}  // namespace scrolls
