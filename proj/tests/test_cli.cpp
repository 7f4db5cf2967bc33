#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "scrolls/commands.hpp"

using namespace scrolls;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(line);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(SCROLLCHECK_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify") {
    auto r = cli({"verify", "--n-max", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("pass") != std::string::npos);

    r = cli({"verify", "--n-max", "8", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\"passed\":true") != std::string::npos);

    r = cli({"verify", "--n-max", "5", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out).size() == 4);
}

TEST_CASE("verify fails on a corrupted closed-form table") {
    auto corrupt = [](int n) {
        RelationSet r = closed_form_relations(n);
        r.rel_ii[Monomial::E1E1] += ScalarPoly(Rational(1, 2));
        return r;
    };
    std::ostringstream out, err;
    const int code = cmd_verify(6, OutputFormat::Table, out, err, corrupt);
    CHECK(code == kExitFailure);
    CHECK(err.str().find("relation ii") != std::string::npos);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("enumerate") {
    auto r = cli({"enumerate", "--n", "3", "--raw", "--format", "csv"});
    CHECK(r.code == kExitOk);
    const auto rows = lines(r.out);
    CHECK(rows.size() >= 5);  // header + at least four pairs
    for (const char* want : {"3,9,3,1,", "3,9,6,10,", "3,9,7,5,", "3,9,9,5,"}) {
        const bool found = std::any_of(rows.begin(), rows.end(),
                                       [&](const std::string& row) { return row.rfind(want, 0) == 0; });
        CHECK_MESSAGE(found, want);
    }

    r = cli({"enumerate", "--n", "11", "--format", "csv"});
    CHECK(r.code == kExitOk);
    REQUIRE(lines(r.out).size() == 2);
    CHECK(lines(r.out)[1].find(",accepted,Type3,") != std::string::npos);

    r = cli({"enumerate", "--n", "7", "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out).empty());

    r = cli({"enumerate", "--n", "10", "--diagnostics"});
    CHECK(r.err.find("accepted=1") != std::string::npos);

    r = cli({"enumerate", "--n", "10", "--diagnostics", "--format", "json"});
    CHECK(r.err.find("\"accepted\":1") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(cli({"enumerate", "--n", "2"}).code == kExitUsage);
    CHECK(cli({"enumerate"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"enumerate", "--n", "5", "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"classify", "--from", "9", "--to", "5"}).code == kExitUsage);
    CHECK(cli({"verify", "--n-max", "2"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("classify prints the accepted candidates") {
    auto r = cli({"classify", "--from", "4", "--to", "12", "--expect-conjecture"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Type2") != std::string::npos);
    CHECK(r.out.find("first accepted candidate: (n, d) = (6, 246)") != std::string::npos);
}

TEST_CASE("sweep through the binary: worker count and resume") {
    const fs::path dir = fs::temp_directory_path() / ("scrolls_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto a = dir / "a.jsonl", b = dir / "b.jsonl", c = dir / "c.jsonl";

    CHECK(run_binary("sweep --from 4 --to 100 --jobs 1 --out " + a.string()) == 0);
    CHECK(run_binary("sweep --from 4 --to 100 --jobs 8 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));

    CHECK(run_binary("sweep --from 4 --to 100 --jobs 3 --stop-after 20 --out " + c.string()) == 0);
    CHECK(slurp(c).size() < slurp(a).size());
    CHECK(run_binary("sweep --from 4 --to 100 --jobs 2 --resume --expect-conjecture --out " + c.string()) == 0);
    CHECK(slurp(c) == slurp(a));

    std::ofstream(fs::path(c.string() + ".ckpt"), std::ios::trunc) << "{\"schema_version\": 7}";
    CHECK(run_binary("sweep --from 4 --to 100 --resume --out " + c.string()) == kExitFailure);

    CHECK(run_binary("sweep --from 4 --to 5 --out " + (dir / "missing" / "x.jsonl").string()) == kExitFailure);
    CHECK(run_binary("sweep --from 4 --to 5") == kExitUsage);
    fs::remove_all(dir);
}
