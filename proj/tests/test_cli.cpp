#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// RATDIFF_CLI_PATH is injected by the build as the absolute path of the
// ratdiff_cli binary in the build tree.

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string temp_path(const std::string& stem) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + stem;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = temp_path("ratdiff_cli_stdout.txt");
    const std::string command = std::string(RATDIFF_CLI_PATH) + " " + args + " > " +
                                out_path + " 2> /dev/null";
    const int raw = std::system(command.c_str());
    REQUIRE(raw != -1);
    return RunResult{WEXITSTATUS(raw), read_file(out_path)};
}

}  // namespace

TEST_CASE("classify: periodic regime line") {
    const std::string cfg = temp_path("cli_classify.json");
    write_file(cfg, R"({"system": "sys2", "k": 4, "m": 2,
                        "init": {"random_positive": {"seed": 1}}})");
    const auto r = run_cli("--config " + cfg + " classify");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "verdict=Periodic stated=30 generic=30 rule=S2_iiia\n");
}

TEST_CASE("classify: unbounded regime line, seed via flag") {
    const std::string cfg = temp_path("cli_classify_unbounded.json");
    write_file(cfg, R"({"system": "sys2", "k": 3, "m": 2})");
    const auto r = run_cli("--config " + cfg + " --seed 5 classify");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "verdict=Unbounded rule=S2_iiib\n");
}

TEST_CASE("simulate: all-ones fixed point CSV") {
    const std::string cfg = temp_path("cli_simulate.json");
    write_file(cfg, R"({"system": "sys2", "k": 1, "m": 0, "iterations": 2,
                        "init": {"x": ["1", "1"], "y": ["1", "1"]}})");
    const auto r = run_cli("--config " + cfg + " simulate");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "n,x_exact,y_exact,x_float,y_float\n"
          "-1,1,1,1,1\n"
          "0,1,1,1,1\n"
          "1,1,1,1,1\n"
          "2,1,1,1,1\n");
}

TEST_CASE("simulate: --out writes the file, exact values survive the trip") {
    const std::string cfg = temp_path("cli_simulate_out.json");
    const std::string out = temp_path("cli_simulate_out.csv");
    std::remove(out.c_str());
    write_file(cfg, R"({"system": "sys2", "k": 1, "m": 0, "iterations": 3,
                        "init": {"x": ["1", "2"], "y": ["5", "3"]}})");
    const auto r = run_cli("--config " + cfg + " --out " + out + " simulate");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    const std::string csv = read_file(out);
    CHECK(csv.find("\n2,1/3,18,") != std::string::npos);
    CHECK(csv.find("\n3,6/5,5/36,") != std::string::npos);
}

TEST_CASE("simulate: exceeded bit budget exits 3 but still emits the prefix") {
    const std::string cfg = temp_path("cli_simulate_budget.json");
    write_file(cfg, R"({"system": "sys2", "k": 3, "m": 2, "iterations": 100000,
                        "bit_budget": 256,
                        "init": {"random_positive": {"seed": 7}}})");
    const auto r = run_cli("--config " + cfg + " simulate");
    CHECK(r.exit_code == 3);
    CHECK(r.stdout_text.rfind("n,x_exact,y_exact,x_float,y_float\n", 0) == 0);
    CHECK(r.stdout_text.size() > 100);
}

TEST_CASE("verify: matching closed form") {
    const std::string cfg = temp_path("cli_verify.json");
    write_file(cfg, R"({"system": "sys2", "k": 3, "m": 1, "form": "s4",
                        "iterations": 80,
                        "init": {"random_positive": {"seed": 3}}})");
    const auto r = run_cli("--config " + cfg + " verify");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "match=true n_checked=80\n");
}

TEST_CASE("verify: incompatible shape exits 2") {
    const std::string cfg = temp_path("cli_verify_shape.json");
    write_file(cfg, R"({"system": "sys2", "k": 5, "m": 1, "form": "s4",
                        "init": {"random_positive": {"seed": 3}}})");
    const auto r = run_cli("--config " + cfg + " verify");
    CHECK(r.exit_code == 2);
}

TEST_CASE("config errors exit 2") {
    const auto missing = run_cli("--config /nonexistent.json classify");
    CHECK(missing.exit_code == 2);

    const std::string cfg = temp_path("cli_bad_value.json");
    write_file(cfg, R"({"system": "sys2", "k": 1, "m": 0,
                        "init": {"x": ["1", "2"], "y": ["5", "3/0"]}})");
    const auto bad = run_cli("--config " + cfg + " classify");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("sweep: small grid, header plus all-agree rows") {
    const auto r = run_cli("sweep --k-max 2 --m-max 2 --seeds 2");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("k,m,seed,predicted,stated,generic,rule,detected_period,"
                              "detected_unbounded,agree\n", 0) == 0);
    // 2 values of k, 3 of m, 2 seeds = 12 data rows
    long rows = -1;  // discount the header
    for (char c : r.stdout_text)
        if (c == '\n') ++rows;
    CHECK(rows == 12);
    CHECK(r.stdout_text.find(",false\n") == std::string::npos);
}
