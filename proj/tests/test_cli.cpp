#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "adsamp/bench.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "adsamp_cli_capture.txt";
    const std::string cmd =
        std::string(ADSAMP_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(raw), buf.str()};
}

std::string data_file(const char* name) {
    return (fs::path(ADSAMP_DATA_DIR) / name).string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("cli run") {
    SECTION("missing file exits 1 with a diagnostic") {
        auto r = run_cli("run --graph /nonexistent/file.edges");
        REQUIRE(r.exit_code == 1);
        REQUIRE(r.output.find("error:") != std::string::npos);
    }

    SECTION("estimates the toy path graph") {
        auto r = run_cli("run --graph " + data_file("toy_path.edges") +
                         " --variant sequential --epsilon 0.05 --seed 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.find("vertex_id,score") != std::string::npos);
        REQUIRE(r.output.find("tau:") != std::string::npos);
        REQUIRE(r.output.find("reason:") != std::string::npos);
    }

    SECTION("indexed runs with the same seed give byte-identical score files") {
        const fs::path a = fs::temp_directory_path() / "adsamp_scores_a.csv";
        const fs::path b = fs::temp_directory_path() / "adsamp_scores_b.csv";
        const std::string common = "run --graph " + data_file("grid16.edges") +
                                   " --variant indexed --threads 2 --epsilon 0.1 --seed 7 "
                                   "--samples-per-frame 200 --output ";
        REQUIRE(run_cli(common + a.string()).exit_code == 0);
        REQUIRE(run_cli(common + b.string()).exit_code == 0);
        const auto text_a = slurp(a);
        REQUIRE(!text_a.empty());
        REQUIRE(text_a == slurp(b));
        REQUIRE(text_a.rfind("vertex_id,score\n", 0) == 0);
    }

    SECTION("usage errors exit 1") {
        REQUIRE(run_cli("run").exit_code == 1);                  // missing --graph
        REQUIRE(run_cli("frobnicate --graph x").exit_code == 1); // unknown subcommand
        auto r = run_cli("run --graph " + data_file("toy_path.edges") + " --variant bogus");
        REQUIRE(r.exit_code == 1);
    }
}

TEST_CASE("cli bench") {
    const fs::path table = fs::temp_directory_path() / "adsamp_bench.csv";
    auto r = run_cli("bench --graph " + data_file("grid16.edges") +
                     " --variant barrier,local,shared --threads 2 --frames 1,2 "
                     "--epsilon 0.1 --reps 1 --seed 2 --output " +
                     table.string());
    REQUIRE(r.exit_code == 0);

    std::ifstream in(table);
    std::string header;
    REQUIRE(std::getline(in, header));
    REQUIRE(header == adsamp::kBenchHeader);

    std::string line;
    std::size_t rows = 0, shared_rows = 0;
    while (std::getline(in, line)) {
        auto row = adsamp::parse_bench_row(line); // parse round-trip
        REQUIRE(adsamp::format_bench_row(row) == line);
        if (rows == 0) {
            REQUIRE(row.variant == "sequential");
            REQUIRE(row.speedup_vs_sequential == 1.0);
        }
        if (row.variant == "shared") ++shared_rows;
        ++rows;
    }
    REQUIRE(rows == 1 + 1 + 1 + 2); // baseline, barrier, local, shared F in {1,2}
    REQUIRE(shared_rows == 2);
}

TEST_CASE("cli audit") {
    SECTION("consistency passes on the grid") {
        auto r = run_cli("audit --graph " + data_file("grid16.edges") +
                         " --variant local --threads 2 --check-interval 64 --delay-max 10 "
                         "--audit consistency");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.find("audit,consistency,local") != std::string::npos);
    }

    SECTION("determinism on indexed passes across 1,2,4 threads") {
        auto r = run_cli("audit --graph " + data_file("grid16.edges") +
                         " --variant indexed --samples-per-frame 100 --seed 5 "
                         "--audit determinism");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.find("identical") != std::string::npos);
    }

    SECTION("determinism on local warns but exits 0") {
        auto r = run_cli("audit --graph " + data_file("toy_path.edges") +
                         " --variant local --seed 5 --audit determinism");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.find("warning") != std::string::npos);
    }
}
