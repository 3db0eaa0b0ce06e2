#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ccodes/code.hpp"
#include "ccodes/verify.hpp"

using namespace ccodes;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CCODES_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

GfMatrix mat(const FieldSpec& F, int rows, int cols, const std::vector<Fel>& data) {
    GfMatrix m(F, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = data[static_cast<std::size_t>(i) * cols + j];
    return m;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

// Fixture files shared by the cases below, written once.
struct Fixtures {
    std::string mdp_parity = temp_path("cli_mdp_parity.json");
    std::string bad_parity = temp_path("cli_bad_parity.json");
    std::string uneven_parity = temp_path("cli_uneven_parity.json");
    std::string generator = temp_path("cli_generator.json");
    std::string malformed = temp_path("cli_malformed.json");

    Fixtures() {
        const FieldSpec f3 = FieldSpec::make_q(3), f5 = FieldSpec::make_q(5);
        save_code_file(mdp_parity,
                       to_json(ParityCheck(CodeParams(4, 2, 1),
                                           {mat(f3, 2, 4, {1, 0, 1, 2, 0, 1, 1, 1}),
                                            mat(f3, 2, 4, {1, 0, 0, 0, 0, 0, 0, 0})})));
        save_code_file(bad_parity, to_json(ParityCheck(CodeParams(2, 1, 1),
                                                       {mat(f3, 1, 2, {1, 0}),
                                                        mat(f3, 1, 2, {0, 1})})));
        save_code_file(uneven_parity,
                       to_json(ParityCheck(CodeParams(3, 1, 1),
                                           {mat(f5, 2, 3, {1, 0, 1, 0, 1, 1}),
                                            mat(f5, 2, 3, {1, 2, 3, 0, 0, 0})})));
        save_code_file(generator, to_json(Generator(CodeParams(2, 1, 1),
                                                    {mat(f3, 2, 1, {2, 2}),
                                                     mat(f3, 2, 1, {1, 2})})));
        std::ofstream(malformed) << "{\"p\": 3, \"kind\": \"parity_check\"";  // truncated
    }
};

const Fixtures& fixtures() {
    static Fixtures f;
    return f;
}

}  // namespace

TEST_CASE("check: verdicts, witnesses, and exit codes") {
    const RunResult good = run_cli("check --file " + fixtures().mdp_parity);
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("verdict:  true") != std::string::npos);

    const RunResult bad = run_cli("check --file " + fixtures().bad_parity);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("verdict:  false") != std::string::npos);
    CHECK(bad.output.find("witness columns: 1 2 3") != std::string::npos);

    const RunResult j = run_cli("--format json check --file " + fixtures().bad_parity);
    CHECK(j.exit_code == 1);
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["mode"] == "mdp");
    CHECK(parsed["verdict"] == false);
    CHECK(parsed["checked"] == "full_window");
    CHECK(parsed["witness"] == nlohmann::json::array({1, 2, 3}));

    const RunResult gen = run_cli("check --file " + fixtures().generator + " --mode reverse");
    CHECK(gen.exit_code == 0);
    CHECK(gen.output.find("reverse_window") == std::string::npos);  // generator route
    CHECK(gen.output.find("generator_window") != std::string::npos);
}

TEST_CASE("check: structural complete verdict and input errors") {
    const RunResult s =
        run_cli("--format json check --file " + fixtures().uneven_parity + " --mode complete");
    CHECK(s.exit_code == 1);
    const auto parsed = nlohmann::json::parse(s.output);
    CHECK(parsed["structural"] == true);
    CHECK(std::string(parsed["note"]).find("n-k must divide delta") != std::string::npos);

    // The complete verdict needs the parity-check form.
    const RunResult g = run_cli("check --file " + fixtures().generator + " --mode complete");
    CHECK(g.exit_code == 2);
    CHECK(g.output.find("error:") != std::string::npos);

    CHECK(run_cli("check --file " + fixtures().malformed).exit_code == 2);
    CHECK(run_cli("check --file " + temp_path("cli_no_such_file.json")).exit_code == 2);
    CHECK(run_cli("check --file " + fixtures().mdp_parity + " --mode bogus").exit_code == 2);
}

TEST_CASE("count: census headline and exit semantics") {
    const RunResult r = run_cli("count --n 2 --k 1 --delta 1 --q 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("total matrices:    72") != std::string::npos);
    CHECK(r.output.find("mdp codes: 4") != std::string::npos);

    const RunResult none = run_cli("count --n 2 --k 1 --delta 1 --q 2");
    CHECK(none.exit_code == 1);

    const RunResult j = run_cli("--format json count --n 3 --k 2 --delta 1 --q 4 --property complete");
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["mdp_matrices"] == 648);
    CHECK(parsed["complete_matrices"] == 162);

    // Unsupported family parameters are an input error.
    CHECK(run_cli("count --n 4 --k 2 --delta 1 --q 3").exit_code == 2);
}

TEST_CASE("search: greedy, random, and exhaustive strategies") {
    const std::string out = temp_path("cli_greedy_out.json");
    const RunResult g =
        run_cli("search --n 3 --k 2 --delta 1 --q 3 --strategy greedy --out " + out);
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("success:     true") != std::string::npos);
    CHECK(g.output.find("backtracks:  0") != std::string::npos);
    std::optional<ParityCheck> h;
    std::optional<Generator> gen;
    load_code_file(out, h, gen);
    REQUIRE(h.has_value());
    CHECK(is_mdp(*h).holds);
    std::remove(out.c_str());

    CHECK(run_cli("search --n 3 --k 2 --delta 1 --q 2 --strategy greedy").exit_code == 1);

    const std::string rout = temp_path("cli_random_out.json");
    const RunResult r = run_cli("--seed 7 search --n 2 --k 1 --delta 1 --q 3 --strategy random "
                                "--max-tries 500 --out " + rout);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("found:    true") != std::string::npos);
    std::optional<ParityCheck> rh;
    std::optional<Generator> rg;
    load_code_file(rout, rh, rg);
    REQUIRE(rh.has_value());
    CHECK(is_mdp(*rh).holds);
    std::remove(rout.c_str());

    const RunResult e =
        run_cli("search --n 3 --k 2 --delta 1 --q 4 --strategy exhaustive --property complete");
    CHECK(e.exit_code == 0);
    CHECK(e.output.find("complete matrices: 162") != std::string::npos);
    CHECK(run_cli("search --n 3 --k 2 --delta 1 --q 3 --strategy exhaustive --property complete")
              .exit_code == 1);
}

TEST_CASE("probability: exact family values and input validation") {
    const RunResult e = run_cli("probability --n 2 --k 1 --delta 1 --q 5 --samples 0");
    CHECK(e.exit_code == 0);
    CHECK(e.output.find("mode:           exhaustive") != std::string::npos);
    CHECK(e.output.find("8/25") != std::string::npos);

    const RunResult j =
        run_cli("--format json probability --n 2 --k 1 --delta 1 --q 5 --samples 0");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["exact_unconditional"]["num"] == "8");
    CHECK(parsed["exact_unconditional"]["den"] == "25");

    const RunResult mc =
        run_cli("--seed 5 probability --n 2 --k 1 --delta 1 --q 9 --samples 2000");
    CHECK(mc.exit_code == 0);
    CHECK(mc.output.find("monte carlo") != std::string::npos);

    // Exhaustive mode outside the closed-form families is an input error.
    CHECK(run_cli("probability --n 4 --k 2 --delta 1 --q 5 --samples 0").exit_code == 2);
}

TEST_CASE("superregular: searches and flag validation") {
    const RunResult m = run_cli("superregular --gamma 4 --min-field");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("field:  5 (minimal)") != std::string::npos);

    const RunResult fixed = run_cli("superregular --gamma 3 --q 2");
    CHECK(fixed.exit_code == 1);
    CHECK(fixed.output.find("found:  false") != std::string::npos);

    CHECK(run_cli("superregular --gamma 3").exit_code == 2);
    CHECK(run_cli("superregular --gamma 3 --q 3 --min-field").exit_code == 2);
}

TEST_CASE("bounds and compare render the report") {
    const RunResult b = run_cli("bounds --n 5 --k 3 --delta 2");
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("bound_S") != std::string::npos);
    CHECK(b.output.find("34") != std::string::npos);

    const RunResult c = run_cli("compare --n 5 --k 3 --delta 2");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("best sufficient bound: superregular_table") != std::string::npos);

    const RunResult j = run_cli("--format json bounds --n 3 --k 2 --delta 1");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["best_sufficient"] == "bound_S");

    // Degenerate parameters are an input error, not a crash.
    CHECK(run_cli("bounds --n 2 --k 2 --delta 1").exit_code == 2);
}

TEST_CASE("usage errors exit with the input code") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("count --n 2 --k 1 --delta 1").exit_code == 2);  // missing --q
}
