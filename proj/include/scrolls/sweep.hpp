// Parallel sweeps of enumerate_n over a range of n.
//
// Workers pull n from a shared counter; a single writer consumes finished
// reports in ascending n, appends each block of JSON lines to the output file
// and then rewrites the checkpoint. Output bytes therefore do not depend on
// the number of workers or on interruptions followed by --resume.

#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scrolls/enumerate.hpp"
#include "scrolls/report.hpp"

namespace scrolls {

inline constexpr int kCheckpointSchemaVersion = 1;

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepCheckpoint {
    int schema_version = kCheckpointSchemaVersion;
    int from = 0;
    std::vector<int> completed;            // ascending
    std::map<int, std::string> digests;    // n -> hex_digest(block)

    std::string to_json() const;
    static SweepCheckpoint from_json(const std::string& text);
};

std::filesystem::path checkpoint_path(const std::filesystem::path& out);
SweepCheckpoint read_checkpoint(const std::filesystem::path& path);
void write_checkpoint(const std::filesystem::path& path, const SweepCheckpoint& ckpt);

struct SweepOptions {
    int from = 4;
    int to = 4;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> out;  // no file, no checkpoint when empty
    bool resume = false;
    std::optional<int> stop_after;  // stop once this many blocks were written
    EnumOptions enum_options;
    const std::atomic<bool>* cancel = nullptr;
};

struct SweepSummary {
    int from = 0;
    int to = 0;
    std::vector<int> completed;  // every n covered, including resumed ones
    int resumed = 0;             // blocks taken over from a previous run
    bool interrupted = false;
    std::size_t raw = 0;
    std::map<Stage, std::size_t> stages;
    std::map<Classification, std::size_t> classes;
    std::vector<OutputRecord> filtered;    // all accepted records, ascending n
    std::vector<OutputRecord> unexpected;  // UnexpectedGeneralType
    std::vector<OutputRecord> castelnuovo_violations;

    void absorb(const std::vector<OutputRecord>& records);
};

OutputRecord record_from_fields(const std::vector<std::pair<std::string, std::string>>& fields);

SweepSummary run_sweep(const SweepOptions& options);

}  // namespace scrolls
