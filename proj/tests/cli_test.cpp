// End-to-end checks of the command-line tool: spawns the real binary.

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "dak/serialize.hpp"
#include "test_util.hpp"

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path log =
        fs::temp_directory_path() / ("dak_cli_test_" + std::to_string(counter++) + ".log");
    const std::string cmd =
        std::string(DAK_CLI_PATH) + " " + args + " >" + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.output = dak::read_file(log);
    fs::remove(log);
    return result;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const std::string& leaf) const { return path / leaf; }
};

} // namespace

TEST_CASE("build writes the sidecar with the collection shape") {
    TempDir dir("dak_cli_build");
    dak::write_file(dir / "in.txt", "ab\na");
    const CliResult r =
        run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                (dir / "idx").string());
    REQUIRE(r.exit_code == 0);

    const auto meta = nlohmann::json::parse(dak::read_file(dir / "idx" / "meta.json"));
    CHECK(meta["n"] == 6);
    CHECK(meta["d"] == 2);
    CHECK(meta["sigma"] == 4);
    CHECK(meta["sa_width"] == 4);
    CHECK(fs::exists(dir / "idx" / "text.cat"));
    CHECK(fs::exists(dir / "idx" / "sa.bin"));
}

TEST_CASE("build counts FASTA records as documents") {
    TempDir dir("dak_cli_fasta");
    dak::write_file(dir / "in.fa", ">a\nAC\n>b\nGT\nGT\n>c\nT\n");
    const CliResult r = run_cli("build --format fasta --in " + (dir / "in.fa").string() +
                                " --out " + (dir / "idx").string());
    REQUIRE(r.exit_code == 0);
    const auto meta = nlohmann::json::parse(dak::read_file(dir / "idx" / "meta.json"));
    CHECK(meta["d"] == 3);
}

TEST_CASE("build rejects reserved bytes and names the record") {
    TempDir dir("dak_cli_reserved");
    std::ofstream f(dir / "in.txt", std::ios::binary);
    f << "ok\nbad" << '\x01' << "byte\n";
    f.close();
    const CliResult r = run_cli("build --format lines --in " + (dir / "in.txt").string() +
                                " --out " + (dir / "idx").string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("ReservedByteInDocument") != std::string::npos);
    CHECK(r.output.find("document 2") != std::string::npos);
}

TEST_CASE("identical inputs produce byte-identical index and DA files") {
    TempDir dir("dak_cli_determinism");
    dak::write_file(dir / "in.txt", "delta\nalpha\nbeta\nalpha\n");
    REQUIRE(run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                    (dir / "idx1").string())
                .exit_code == 0);
    REQUIRE(run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                    (dir / "idx2").string())
                .exit_code == 0);
    CHECK(dak::read_file(dir / "idx1" / "sa.bin") == dak::read_file(dir / "idx2" / "sa.bin"));
    CHECK(dak::read_file(dir / "idx1" / "text.cat") == dak::read_file(dir / "idx2" / "text.cat"));

    REQUIRE(run_cli("compute --index " + (dir / "idx1").string() + " --method inplace --out " +
                    (dir / "a.da").string())
                .exit_code == 0);
    REQUIRE(run_cli("compute --index " + (dir / "idx2").string() + " --method isa --out " +
                    (dir / "b.da").string())
                .exit_code == 0);
    CHECK(dak::read_file(dir / "a.da") == dak::read_file(dir / "b.da"));
}

TEST_CASE("compute emits a JSON line and the restoration note") {
    TempDir dir("dak_cli_compute");
    dak::write_file(dir / "in.txt", "ab\na");
    REQUIRE(run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                    (dir / "idx").string())
                .exit_code == 0);
    const CliResult r = run_cli("compute --index " + (dir / "idx").string() +
                                " --method inplace --out " + (dir / "out.da").string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("restoration check") != std::string::npos);

    const auto json_start = r.output.find("{\"");
    REQUIRE(json_start != std::string::npos);
    const auto line_end = r.output.find('\n', json_start);
    const auto parsed = nlohmann::json::parse(r.output.substr(json_start, line_end - json_start));
    CHECK(parsed["method"] == "inplace");
    CHECK(parsed["verified"] == true);
    CHECK(parsed["workspace_bytes"] == 1024);
}

TEST_CASE("verify flags truncated files with the expected length") {
    TempDir dir("dak_cli_truncated");
    dak::write_file(dir / "in.txt", "ab\na");
    REQUIRE(run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                    (dir / "idx").string())
                .exit_code == 0);
    REQUIRE(run_cli("compute --index " + (dir / "idx").string() + " --method isa --out " +
                    (dir / "out.da").string())
                .exit_code == 0);

    const std::string whole = dak::read_file(dir / "out.da");
    dak::write_file(dir / "cut.da", std::string_view(whole).substr(0, whole.size() - 5));
    const CliResult r = run_cli("verify --index " + (dir / "idx").string() + " --da " +
                                (dir / "cut.da").string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("truncated") != std::string::npos);
    CHECK(r.output.find("24") != std::string::npos);  // expected payload bytes
}

TEST_CASE("bench renders the table and writes JSON lines") {
    TempDir dir("dak_cli_bench");
    dak::write_file(dir / "one.txt", "tictac\ntoe");
    dak::write_file(dir / "two.txt", "aaa\nbb\nc");
    REQUIRE(run_cli("build --format lines --in " + (dir / "one.txt").string() + " --out " +
                    (dir / "idx1").string())
                .exit_code == 0);
    REQUIRE(run_cli("build --format lines --in " + (dir / "two.txt").string() + " --out " +
                    (dir / "idx2").string())
                .exit_code == 0);

    const CliResult r = run_cli("bench --index " + (dir / "idx1").string() + " " +
                                (dir / "idx2").string() +
                                " --methods inplace,isa,rank-plain --reps 2 --json " +
                                (dir / "bench.json").string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("| Dataset | N | d |") != std::string::npos);
    CHECK(r.output.find("Time inplace") != std::string::npos);
    CHECK(r.output.find("Workspace rank-plain") != std::string::npos);

    std::ifstream json_lines(dir / "bench.json");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(json_lines, line)) {
        const auto parsed = nlohmann::json::parse(line);
        CHECK(parsed.contains("time_s"));
        CHECK(parsed["verified"] == true);
        ++rows;
    }
    CHECK(rows == 6);  // 2 datasets x 3 methods
}

TEST_CASE("corrupt index magic is reported") {
    TempDir dir("dak_cli_magic");
    dak::write_file(dir / "in.txt", "ab\na");
    REQUIRE(run_cli("build --format lines --in " + (dir / "in.txt").string() + " --out " +
                    (dir / "idx").string())
                .exit_code == 0);
    std::string sa_bytes = dak::read_file(dir / "idx" / "sa.bin");
    sa_bytes[0] = 'Z';
    dak::write_file(dir / "idx" / "sa.bin", sa_bytes);
    const CliResult r = run_cli("compute --index " + (dir / "idx").string() +
                                " --method inplace --out " + (dir / "out.da").string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("bad magic") != std::string::npos);
}
