#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lexigrid/reference_data.hpp"

using namespace lexigrid;

TEST(Registry, BuiltinsValidate) {
    const auto& reg = builtin_registry();
    EXPECT_GE(reg.names().size(), 15u);
    for (const auto& name : reg.names()) EXPECT_NO_THROW(validate_table(reg.get(name))) << name;
}

TEST(Registry, UnknownTable) {
    try {
        get_table("NOPE");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unknown_table);
    }
}

TEST(Registry, RecordGridsFirstRow) {
    const auto& rows = payload_as<RecordGrids>(get_table("RECORD_GRIDS")).rows;
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0].side, 8);
    EXPECT_EQ(rows[0].min_black, 0);
    EXPECT_EQ(rows[0].percentage_milli, 0);
    EXPECT_EQ(rows[0].count_known, 24);
}

TEST(Registry, PoetryRatioLookup) {
    EXPECT_DOUBLE_EQ(ratio_value(get_table("POETRY_RATIOS"), "d"), 3.528);
    EXPECT_THROW(ratio_value(get_table("POETRY_RATIOS"), "zz"), Error);
    EXPECT_THROW(payload_as<RankList>(get_table("POETRY_RATIOS")), Error);
}

TEST(Registry, PercentageTablesTotalHundred) {
    const auto& reg = builtin_registry();
    for (const auto& name : reg.names()) {
        const auto& t = reg.get(name);
        const std::vector<WeightedEntry>* entries = nullptr;
        if (const auto* lf = std::get_if<LetterFreq>(&t.payload)) entries = &lf->entries;
        if (const auto* d = std::get_if<DistributionTable>(&t.payload)) entries = &d->entries;
        if (!entries) continue;
        std::uint64_t total = 0;
        for (const auto& e : *entries) total += e.milli;
        EXPECT_NEAR(static_cast<double>(total), 100000.0, 100.0) << name;
    }
}

TEST(Registry, StatedMeansMatchRecomputed) {
    for (const char* name : {"GRID_SYLLABLE_DIST", "POETRY_SYLLABLE_DIST", "POETRY_LETTERLEN_DIST"}) {
        const auto& t = get_table(name);
        const auto& d = payload_as<DistributionTable>(t);
        ASSERT_TRUE(d.stated_mean.has_value()) << name;
        EXPECT_NEAR(distribution_mean(numeric_distribution(t)), *d.stated_mean, 0.02) << name;
    }
}

TEST(Registry, ReferenceRankSources) {
    EXPECT_EQ(reference_ranks(get_table("ROMANIAN_RANKS_23")).size(), 23u);
    EXPECT_EQ(reference_ranks(get_table("ROMANIAN_RANKS_27")).size(), 27u);
    EXPECT_EQ(reference_ranks(get_table("GRID_LETTER_FREQ")).rank_of(U'A'), 1u);
    EXPECT_THROW(reference_ranks(get_table("RECORD_GRIDS")), Error);
}

TEST(Json, RoundTripEveryBuiltin) {
    const auto& reg = builtin_registry();
    for (const auto& name : reg.names()) {
        const auto& t = reg.get(name);
        const auto j = to_json(t);
        const NamedTable back = named_table_from_json(j);
        EXPECT_EQ(back.name, t.name);
        EXPECT_EQ(back.kind(), t.kind());
        EXPECT_EQ(to_json(back), j) << name;
    }
}

TEST(Json, RejectsMalformedTables) {
    EXPECT_THROW(named_table_from_json(nlohmann::json::parse(R"({"name":"X"})")), Error);
    auto j = to_json(get_table("GRID_LETTER_FREQ"));
    j["provenance"] = "";
    EXPECT_THROW(named_table_from_json(j), Error);
    j = to_json(get_table("GRID_LETTER_FREQ"));
    j["name"] = "BROKEN";
    j["payload"]["entries"][0]["percent"] = 90.0;
    EXPECT_THROW(named_table_from_json(j), Error);
}

TEST(Registry, OverrideDirectory) {
    const auto dir = std::filesystem::temp_directory_path() / "lexigrid_override_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto j = to_json(get_table("ROMANIAN_RANKS_23"));
    std::reverse(j["payload"]["symbols"].begin(), j["payload"]["symbols"].end());
    {
        std::ofstream(dir / "ranks.json") << j.dump();
        auto extra = j;
        extra["name"] = "MY_RANKS";
        std::ofstream(dir / "extra.json") << extra.dump();
        std::ofstream(dir / "ignored.txt") << "not json";
    }
    const auto reg = TableRegistry::with_overrides(dir);
    EXPECT_EQ(reference_ranks(reg.get("ROMANIAN_RANKS_23")).rank_of(U'K'), 1u);
    EXPECT_TRUE(reg.contains("MY_RANKS"));
    EXPECT_TRUE(reg.contains("GRID_LETTER_FREQ"));
    EXPECT_EQ(reference_ranks(get_table("ROMANIAN_RANKS_23")).rank_of(U'E'), 1u);

    std::ofstream(dir / "bad.json") << "{";
    EXPECT_THROW(TableRegistry::with_overrides(dir), Error);
    std::filesystem::remove_all(dir);
    EXPECT_THROW(TableRegistry::with_overrides(dir), Error);
}

TEST(RatioChecks, PoetryIdentities) {
    const auto checks = poetry_ratio_checks(get_table("POETRY_RATIOS"));
    ASSERT_EQ(checks.size(), 3u);
    for (const auto& c : checks) {
        EXPECT_GT(c.lhs, 0.0);
        EXPECT_EQ(c.consistent, std::fabs(c.lhs - c.rhs) <= 0.01) << c.relation;
    }
}

TEST(LetterTables, CountsAreThousandths) {
    const auto t = letter_table(get_table("POETRY_LETTER_FREQ"));
    EXPECT_EQ(t.alphabet().name, "poetry31");
    EXPECT_EQ(t.count(U'G'), 1418u);
    EXPECT_EQ(t.count(U'Q'), 0u);
    EXPECT_EQ(t.total(), 100000u);
}
