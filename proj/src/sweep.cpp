#include "scrolls/sweep.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace scrolls {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::optional<Integer> opt_integer(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    return Integer(s);
}

// Splits the output file into per-n blocks, keeping line order.
std::map<int, std::string> blocks_by_n(const std::string& text) {
    std::map<int, std::string> blocks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        int n = -1;
        try {
            for (const auto& [k, v] : parse_json_line(line))
                if (k == "n")
                    n = std::stoi(v);
        } catch (const std::exception&) {
            continue;  // torn trailing line from an interrupted write
        }
        if (n >= 0)
            blocks[n] += line + '\n';
    }
    return blocks;
}

std::vector<OutputRecord> records_from_block(const std::string& block) {
    std::vector<OutputRecord> out;
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(record_from_fields(parse_json_line(line)));
    return out;
}

}  // namespace

std::string SweepCheckpoint::to_json() const {
    nlohmann::ordered_json digest_obj = nlohmann::ordered_json::object();
    for (int n : completed)
        digest_obj[std::to_string(n)] = digests.at(n);
    nlohmann::ordered_json j = {
        {"schema_version", schema_version},
        {"from", from},
        {"completed", completed},
        {"digests", digest_obj},
    };
    return j.dump(1) + '\n';
}

SweepCheckpoint SweepCheckpoint::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError(std::string("checkpoint is not valid JSON: ") + e.what());
    }
    SweepCheckpoint c;
    try {
        c.schema_version = j.at("schema_version").get<int>();
        if (c.schema_version != kCheckpointSchemaVersion)
            return c;
        c.from = j.at("from").get<int>();
        c.completed = j.at("completed").get<std::vector<int>>();
        for (int n : c.completed)
            c.digests[n] = j.at("digests").at(std::to_string(n)).get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError(std::string("checkpoint is missing fields: ") + e.what());
    }
    return c;
}

fs::path checkpoint_path(const fs::path& out) {
    fs::path p = out;
    p += ".ckpt";
    return p;
}

SweepCheckpoint read_checkpoint(const fs::path& path) { return SweepCheckpoint::from_json(read_file(path)); }

void write_checkpoint(const fs::path& path, const SweepCheckpoint& ckpt) { write_file_atomic(path, ckpt.to_json()); }

OutputRecord record_from_fields(const std::vector<std::pair<std::string, std::string>>& fields) {
    OutputRecord r;
    for (const auto& [k, v] : fields) {
        if (k == "schema") {
            if (v != std::to_string(kRecordSchemaVersion))
                throw CheckpointError("record schema " + v + " is not supported");
        } else if (k == "n") {
            r.n = std::stoi(v);
        } else if (k == "q") {
            r.q = Integer(v);
        } else if (k == "d") {
            r.d = Integer(v);
        } else if (k == "e2") {
            r.e2 = Integer(v);
        } else if (k == "t") {
            r.t = Integer(v);
        } else if (k == "stage_reached") {
            auto s = parse_stage(v);
            if (!s)
                throw std::runtime_error("unknown stage '" + v + "'");
            r.stage_reached = *s;
        } else if (k == "classification") {
            if (!v.empty()) {
                auto c = parse_classification(v);
                if (!c)
                    throw std::runtime_error("unknown classification '" + v + "'");
                r.classification = c;
            }
        } else if (k == "a") {
            r.a = opt_integer(v);
        } else if (k == "b") {
            r.b = opt_integer(v);
        } else if (k == "K_sq") {
            r.k_sq = opt_integer(v);
        } else if (k == "euler") {
            r.euler = opt_integer(v);
        } else if (k == "chi") {
            r.chi = opt_integer(v);
        } else if (k == "genus") {
            r.genus = opt_integer(v);
        } else if (k == "cast_bound") {
            r.cast_bound = opt_integer(v);
        }
    }
    return r;
}

void SweepSummary::absorb(const std::vector<OutputRecord>& records) {
    for (const auto& r : records) {
        ++raw;
        ++stages[r.stage_reached];
        if (r.classification)
            ++classes[*r.classification];
        if (r.stage_reached != Stage::Accepted)
            continue;
        filtered.push_back(r);
        if (r.classification == Classification::UnexpectedGeneralType)
            unexpected.push_back(r);
        if (r.genus && r.cast_bound && *r.genus > *r.cast_bound)
            castelnuovo_violations.push_back(r);
    }
}

SweepSummary run_sweep(const SweepOptions& options) {
    if (options.from < 3 || options.from > options.to)
        throw std::invalid_argument("sweep range must satisfy 3 <= from <= to");

    SweepSummary summary;
    summary.from = options.from;
    summary.to = options.to;

    SweepCheckpoint ckpt;
    ckpt.from = options.from;
    std::optional<std::ofstream> out;
    fs::path ckpt_file;
    int start = options.from;

    if (options.out) {
        ckpt_file = checkpoint_path(*options.out);
        std::string kept;
        if (options.resume && fs::exists(ckpt_file)) {
            SweepCheckpoint old = read_checkpoint(ckpt_file);
            if (old.schema_version != kCheckpointSchemaVersion)
                throw CheckpointError("checkpoint " + ckpt_file.string() + " has schema version " +
                                      std::to_string(old.schema_version) + ", expected " +
                                      std::to_string(kCheckpointSchemaVersion) +
                                      "; delete it and restart the sweep without --resume");
            if (old.from != options.from)
                throw CheckpointError("checkpoint starts at n=" + std::to_string(old.from) +
                                      " but --from is " + std::to_string(options.from) +
                                      "; restart the sweep without --resume");
            const auto blocks = fs::exists(*options.out) ? blocks_by_n(read_file(*options.out))
                                                         : std::map<int, std::string>{};
            int expect = options.from;
            for (int n : old.completed) {
                if (n != expect)
                    throw CheckpointError("checkpoint does not cover a contiguous range at n=" +
                                          std::to_string(n));
                ++expect;
                if (n > options.to)
                    break;
                auto it = blocks.find(n);
                const std::string block = it == blocks.end() ? std::string() : it->second;
                if (hex_digest(block) != old.digests.at(n))
                    throw CheckpointError("output block for n=" + std::to_string(n) +
                                          " does not match its checkpoint digest");
                kept += block;
                ckpt.completed.push_back(n);
                ckpt.digests[n] = old.digests.at(n);
                summary.completed.push_back(n);
                summary.absorb(records_from_block(block));
                ++summary.resumed;
            }
            start = expect;
        }
        // Rewrite the verified prefix, dropping anything from a torn block.
        write_file_atomic(*options.out, kept);
        write_checkpoint(ckpt_file, ckpt);
        out.emplace(*options.out, std::ios::binary | std::ios::app);
        if (!*out)
            throw std::runtime_error("cannot open " + options.out->string() + " for appending");
    }

    if (start > options.to)
        return summary;

    const unsigned jobs = std::max(1u, options.jobs);
    const int window = static_cast<int>(4 * jobs);
    std::mutex mu;
    std::condition_variable cv;
    std::map<int, EnumReport> ready;
    std::exception_ptr failure;
    int next = start;
    int written_upto = start - 1;
    bool stop = false;

    auto worker = [&] {
        for (;;) {
            int n;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return stop || next > options.to || next <= written_upto + window; });
                if (stop || next > options.to)
                    return;
                n = next++;
            }
            try {
                EnumReport report = enumerate_n(n, options.enum_options);
                std::lock_guard lock(mu);
                ready.emplace(n, std::move(report));
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                stop = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i)
        threads.emplace_back(worker);

    auto shutdown = [&] {
        {
            std::lock_guard lock(mu);
            stop = true;
        }
        cv.notify_all();
        for (auto& t : threads)
            t.join();
    };

    int blocks_written = 0;
    try {
        for (int n = start; n <= options.to; ++n) {
            if (options.cancel && options.cancel->load()) {
                summary.interrupted = true;
                break;
            }
            EnumReport report;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return failure || ready.count(n) > 0; });
                if (failure)
                    break;
                report = std::move(ready.at(n));
                ready.erase(n);
            }
            const std::string block = serialize_block(report);
            if (out) {
                *out << block;
                out->flush();
                if (!*out)
                    throw std::runtime_error("write failed: " + options.out->string());
                ckpt.completed.push_back(n);
                ckpt.digests[n] = hex_digest(block);
                write_checkpoint(ckpt_file, ckpt);
            }
            summary.completed.push_back(n);
            summary.absorb(output_records(report, true));
            {
                std::lock_guard lock(mu);
                written_upto = n;
            }
            cv.notify_all();
            if (options.stop_after && ++blocks_written >= *options.stop_after && n < options.to) {
                summary.interrupted = true;
                break;
            }
        }
    } catch (...) {
        shutdown();
        throw;
    }
    shutdown();
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

}  // namespace scrolls
