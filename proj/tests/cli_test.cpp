#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lexigrid");
    std::ostringstream out, err;
    const int code = lexigrid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LEXIGRID_FIXTURES) + "/" + name; }

} // namespace

TEST(Cli, AnalyzeGridWithinBudget) {
    const auto r = run_cli({"analyze-grid", fixture("grid13_budget_ok.txt"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const auto& res = j["results"];
    EXPECT_EQ(res["budget"]["budget"], 25);
    EXPECT_EQ(res["budget"]["exceeded"], false);
    EXPECT_EQ(res["prediction"]["matches_enumeration"], true);
    EXPECT_EQ(res["prediction"]["total"], res["enumeration"]["total"]);
}

TEST(Cli, AnalyzeGridOverBudget) {
    const auto r = run_cli({"analyze-grid", fixture("grid13_over_budget.txt")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("budget 25 exceeded"), std::string::npos) << r.err;
    EXPECT_EQ(run_cli({"analyze-grid", fixture("grid13_over_budget.txt"), "--max-black-percent", "20"}).code, 0);
}

TEST(Cli, AnalyzeGridAdjacentBlacksSkipsFormulas) {
    const auto r = run_cli({"analyze-grid", fixture("grid_adjacent.txt"), "--json"});
    EXPECT_NE(r.err.find("formulas skipped"), std::string::npos);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["results"].contains("prediction"));
    EXPECT_EQ(j["results"]["spacing_valid"], false);
}

TEST(Cli, TablesShowCsv) {
    const auto r = run_cli({"tables", "show", "RECORD_GRIDS", "--csv"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_EQ(lines.size(), 10u);
    EXPECT_EQ(lines[0], "side,min_black,percentage,count_known");
    EXPECT_EQ(lines[1], "8,0,0.000,24");
    EXPECT_EQ(lines[4], "11,4,3.305,1");
}

TEST(Cli, TablesListAndUnknown) {
    const auto list = run_cli({"tables", "list", "--json"});
    ASSERT_EQ(list.code, 0);
    EXPECT_GE(nlohmann::json::parse(list.out)["results"]["tables"].size(), 15u);
    EXPECT_EQ(run_cli({"tables", "show", "NOPE"}).code, 2);
}

TEST(Cli, TablesShowJsonRoundTrips) {
    const auto r = run_cli({"tables", "show", "POETRY_LETTER_FREQ", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto t = lexigrid::named_table_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(t.name, "POETRY_LETTER_FREQ");
}

TEST(Cli, EcartMissingFile) {
    const auto r = run_cli({"ecart", "missing.txt", "--reference", "ROMANIAN_RANKS_23"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("missing.txt"), std::string::npos);
}

TEST(Cli, EcartOnPoem) {
    const auto r = run_cli({"ecart", fixture("poem.txt"), "--reference", "ROMANIAN_RANKS_23", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out)["results"];
    EXPECT_EQ(j["n"], 23);
    EXPECT_LE(j["mean_abs"]["value"].get<double>(), j["upper_bound"]["value"].get<double>());
    const auto groups = run_cli({"ecart", fixture("poem.txt"), "--reference", fixture("juridical_groups.txt"),
                                 "--alphabet", "grid23", "--json"});
    EXPECT_EQ(groups.code, 0) << groups.err;
}

TEST(Cli, CorpusStats) {
    const auto r = run_cli({"corpus-stats", fixture("poem.txt"), "--alphabet", "poetry31", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out)["results"];
    EXPECT_GT(j["letters"]["total"].get<int>(), 0);
    EXPECT_GT(j["words"]["total"].get<int>(), 0);
    const auto ann = run_cli({"corpus-stats", fixture("poem_annotated.tsv"), "--alphabet", "poetry31", "--annotated",
                              "--syllable-lexicon", fixture("syllables.lex"), "--json"});
    EXPECT_EQ(ann.code, 0) << ann.err;
    const auto per = run_cli({"corpus-stats", fixture("poem.txt"), fixture("poem.txt"), "--per-file", "--json"});
    ASSERT_EQ(per.code, 0);
    EXPECT_EQ(nlohmann::json::parse(per.out)["results"]["files"].size(), 2u);
    EXPECT_EQ(run_cli({"corpus-stats", fixture("poem.txt"), "--alphabet", "latin"}).code, 2);
}

TEST(Cli, Infometrics) {
    const auto r = run_cli({"infometrics", "--table", "GRID_LETTER_FREQ", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out)["results"];
    EXPECT_NEAR(j["entropy_bits"].get<double>(), 3.865, 0.01);
    EXPECT_EQ(run_cli({"infometrics", fixture("poem.txt"), "--alphabet", "poetry31"}).code, 0);
}

TEST(Cli, Selfcheck) {
    const auto r = run_cli({"selfcheck"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all gated regressions passed"), std::string::npos);
}

TEST(Cli, ConfigFileAndEnvironment) {
    const auto dir = std::filesystem::temp_directory_path() / "lexigrid_cli_config";
    std::filesystem::create_directories(dir);
    const auto cfg = (dir / "lexigrid.conf").string();
    std::ofstream(cfg) << "# defaults\nmax_black_percent = 20\n";
    EXPECT_EQ(run_cli({"--config", cfg, "analyze-grid", fixture("grid13_over_budget.txt")}).code, 0);
    std::ofstream(cfg) << "colour = red\n";
    EXPECT_EQ(run_cli({"--config", cfg, "selfcheck"}).code, 2);

    ::setenv("LEXIGRID_TABLES", (dir / "absent").string().c_str(), 1);
    EXPECT_EQ(run_cli({"tables", "list"}).code, 2);
    ::unsetenv("LEXIGRID_TABLES");
    std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"analyze-grid"}).code, 2);
}

TEST(Cli, Deterministic) {
    const std::vector<std::vector<std::string>> cmds{
        {"analyze-grid", fixture("grid13_budget_ok.txt"), "--json"},
        {"corpus-stats", fixture("poem.txt"), "--json"},
        {"ecart", fixture("poem.txt"), "--reference", "ROMANIAN_RANKS_23"},
        {"tables", "show", "GRID_LETTER_FREQ", "--json"},
        {"selfcheck", "--json"},
    };
    for (const auto& c : cmds) {
        const auto a = run_cli(c);
        const auto b = run_cli(c);
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_EQ(a.code, b.code);
    }
}
