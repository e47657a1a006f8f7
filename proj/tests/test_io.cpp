/**
 * Tests for input parsing, report serialization and the command dispatcher.
 */
#include <sstream>
#include <gtest/gtest.h>
#include "cyclecx/cli.hpp"
#include "fixtures.hpp"

using namespace cyclecx;

namespace {

const std::string data = CYCLECX_TEST_DATA;

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome runCli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

cli::Json parsed(const Outcome& o)
{
    return cli::Json::parse(o.out);
}

}   // namespace

TEST(ParseSpec, EdgeCellRoundTrip)
{
    const auto spec = cli::parseSpec(cli::detail::readFile(data + "/edge.json"));
    ASSERT_TRUE(spec.type.has_value());
    EXPECT_EQ(*spec.type, fixtures::edgeCell());
    EXPECT_EQ(spec.presentation.curves, (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(spec.presentation.reference, (IntVector{1, 0, 0}));
    EXPECT_EQ(spec.presentation.relations, relationMatrix(fixtures::edgeCell()));
}

TEST(ParseSpec, PentagonPresentation)
{
    const auto spec = cli::parseSpec(cli::detail::readFile(data + "/pentagon.json"));
    EXPECT_FALSE(spec.type.has_value());
    EXPECT_EQ(spec.presentation.curves.size(), 6u);
    const auto expected = fixtures::pentagon();
    EXPECT_EQ(spec.presentation.relations, expected.relations);
    EXPECT_EQ(spec.presentation.reference, expected.reference);
}

TEST(ParseSpec, Diagnostics)
{
    try
    {
        cli::parseSpec(cli::detail::readFile(data + "/bad_euler.json"));
        FAIL() << "expected a validation error";
    }
    catch (const cli::SpecError& e)
    {
        ASSERT_EQ(e.diagnostics.size(), 1u);
        EXPECT_NE(e.diagnostics[0].find("line 2"), std::string::npos);
        EXPECT_NE(e.diagnostics[0].find("total_euler"), std::string::npos);
    }
    try
    {
        cli::parseSpec(cli::detail::readFile(data + "/malformed.json"));
        FAIL() << "expected a parse error";
    }
    catch (const cli::SpecError& e)
    {
        EXPECT_EQ(e.diagnostics.at(0).rfind("line 5:", 0), 0u);
    }
    EXPECT_THROW(cli::parseSpec(R"({"curves": ["a"], "relations": [[1, 2]], "x": [1]})"), cli::SpecError);
    EXPECT_THROW(cli::parseSpec(R"({"surface_genus": 2, "components": [], "curves": [], "x": {}})"), cli::SpecError);
    EXPECT_THROW(cli::parseSpec(R"({"curves": ["a"], "relations": [], "x": ["1/2"]})"), cli::SpecError);
}

TEST(ParseLengths, RationalStrings)
{
    const auto l = cli::parseLengths(R"({"lengths": {"a": "5/3", "b": 2}})");
    EXPECT_EQ(l.at("a"), Rational(5, 3));
    EXPECT_EQ(l.at("b"), 2);
    EXPECT_THROW(cli::parseLengths(R"({"lengths": {"a": "0"}})"), cli::SpecError);
    EXPECT_THROW(cli::parseLengths(R"({"lengths": {"a": 1.5}})"), cli::SpecError);
}

TEST(Run, CellReports)
{
    const auto pentagon = runCli({"cell", "--input", data + "/pentagon.json"});
    ASSERT_EQ(pentagon.code, 0) << pentagon.err;
    const auto j = parsed(pentagon);
    EXPECT_EQ(j["dimension"], 2);
    EXPECT_EQ(j["vertices"].size(), 5u);
    EXPECT_EQ(j["edges"].size(), 5u);

    const auto edge = runCli({"cell", "--input", data + "/edge.json"});
    ASSERT_EQ(edge.code, 0);
    const auto e = parsed(edge);
    EXPECT_EQ(e["labels"], (cli::Json{"a", "b+c"}));
    EXPECT_EQ(e["vertices"][1], (cli::Json{{"b", "1"}, {"c", "1"}}));
}

TEST(Run, MinimizeAndBorrow)
{
    const auto face = runCli({"minimize", "--input", data + "/pentagon.json", "--lengths", data + "/pentagon_lengths.json"});
    ASSERT_EQ(face.code, 0) << face.err;
    const auto f = parsed(face);
    EXPECT_EQ(f["value"], "4");
    EXPECT_EQ(f["dimension"], 1);
    EXPECT_EQ(f["labels"], (cli::Json{"c+e+2f", "d+2e+f"}));

    const auto borrow = runCli({"borrow", "--input", data + "/borrow.json", "--lengths", data + "/pentagon_lengths.json"});
    ASSERT_EQ(borrow.code, 0) << borrow.err;
    const auto b = parsed(borrow);
    EXPECT_EQ(b["start_length"], "7");
    EXPECT_FALSE(b["moves"].empty());
    EXPECT_LE(b["moves"].size(), 6u);
    for (const auto& m : b["moves"])
    {
        EXPECT_FALSE(m["zeroed"].empty());
        EXPECT_NE(m["change"], "strictly-longer");
    }
    EXPECT_EQ(b["result_length"], "4");
}

TEST(Run, ExitCodes)
{
    EXPECT_EQ(runCli({"cell", "--input", data + "/bad_euler.json"}).code, 1);
    EXPECT_EQ(runCli({"cell", "--input", data + "/malformed.json"}).code, 1);
    EXPECT_EQ(runCli({"cell", "--input", data + "/missing.json"}).code, 1);
    EXPECT_EQ(runCli({"cell", "--input", data + "/infeasible.json"}).code, 2);
    EXPECT_EQ(runCli({"cell", "--input", data + "/edge.json", "--format", "dot"}).code, 1);
    EXPECT_EQ(runCli({"bogus"}).code, 1);
    EXPECT_EQ(runCli({}).code, 1);
    EXPECT_EQ(runCli({"tree", "--W", "0"}).code, 1);
    const auto help = runCli({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("splittings"), std::string::npos);
}

TEST(Run, AuditCsv)
{
    const auto a = runCli({"audit", "--genus", "2", "--max-curves", "3"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out.rfind(auditCsvHeader(), 0), 0u);
    EXPECT_NE(a.out.find("2,3,2,2,0,2,3,0,1,0,0,true,true,true"), std::string::npos);
    const auto j = runCli({"audit", "--genus", "2", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(parsed(j)["violations"].size(), 0u);
}

TEST(Run, TreeAndSplittings)
{
    const auto t = runCli({"tree", "--W", "5", "--C", "3"});
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(t.out, toDot(planeQuotientTree({1, 0}, 5, 3)));
    const auto j = parsed(runCli({"tree", "--weight-bound", "4", "--coord-bound", "2", "--format", "json"}));
    EXPECT_EQ(j["nodes"].size(), planeQuotientTree({1, 0}, 4, 2).nodes.size());
    EXPECT_EQ(j["nodes"][0]["kind"], "distinguished");
    const auto glued = parsed(runCli({"tree", "--W", "3", "--C", "2", "--planes", "1", "--format", "json"}));
    EXPECT_EQ(glued["vertices"], assembleFullQuotient(1, 3, 2).vertexCount());
    EXPECT_NE(runCli({"tree", "--W", "3", "--C", "2", "--farey"}).out.find("dotted"), std::string::npos);
    const auto s = parsed(runCli({"splittings", "--K", "2", "--format", "json"}));
    EXPECT_EQ(s["splittings"].size(), 5u);
    EXPECT_EQ(s["edges"].size(), 4u);
    EXPECT_EQ(s["splittings"][3]["V1"][1], (cli::Json{"0", "1", "1", "0"}));
}

TEST(Run, DeterministicOutput)
{
    const std::vector<std::vector<std::string>> commands{
        {"cell", "--input", data + "/pentagon.json"},
        {"minimize", "--input", data + "/edge.json", "--lengths", data + "/edge_lengths.json"},
        {"audit", "--genus", "3", "--max-curves", "3"},
        {"tree", "--W", "6", "--C", "3", "--farey"}};
    for (const auto& c : commands)
        EXPECT_EQ(runCli(c).out, runCli(c).out);
}
