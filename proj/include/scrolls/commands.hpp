#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include "scrolls/relations.hpp"
#include "scrolls/sweep.hpp"

namespace scrolls {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,             // verification failure or runtime error
    kExitConjectureViolation = 2,
    kExitUsage = 64,
};

enum class OutputFormat { Table, Csv, Json };

int cmd_verify(int n_max, OutputFormat format, std::ostream& out, std::ostream& err,
               const ClosedFormProvider& closed_form = closed_form_relations);

int cmd_enumerate(int n, bool raw, bool diagnostics, const EnumOptions& options, OutputFormat format,
                  std::ostream& out, std::ostream& err);

int cmd_sweep(const SweepOptions& options, bool expect_conjecture, std::ostream& out, std::ostream& err);

// A sweep without file output; prints the accepted candidates and totals.
int cmd_classify(const SweepOptions& options, bool expect_conjecture, std::ostream& out, std::ostream& err);

// Full command line front end. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel = nullptr);

}  // namespace scrolls
