#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace knotpos;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "knotpos");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, InvariantsJson) {
    auto r = run({"invariants", "--json", "2: 1 1 1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    auto& res = j["results"][0]["result"];
    EXPECT_EQ(res["v2"], "1");
    EXPECT_EQ(res["v3"], "4");
    EXPECT_EQ(res["signature"], 2);
    EXPECT_EQ(res["seifert"]["canonical_genus"], 1);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"invariants", "--format", "dt", "4 6 7"}).code, 2);
    EXPECT_EQ(run({"invariants"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"invariants", "--format", "dt", "4 6 2"}).code, 0);
}

TEST(Cli, BatchIsolatesBadItems) {
    auto r = run({"invariants", "--json", "2: 1 1 1", "4 6 7"});
    EXPECT_EQ(r.code, 2);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["status"], "ok");
    EXPECT_EQ(j["results"][1]["status"], "input-error");
}

TEST(Cli, Positivity) {
    auto r = run({"positivity", "--format", "dt", "4 6 8 2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("overall=not-positive"), std::string::npos) << r.out;
    auto d = run({"positivity", "--decide", "--json", "2: 1 1 1"});
    auto j = nlohmann::json::parse(d.out);
    EXPECT_EQ(j["results"][0]["result"]["braid_positive"], "yes");
}

TEST(Cli, ConvertConwayToPd) {
    auto r = run({"convert", "--to", "pd", "--json", "C: 2 2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    auto pd = parse_planar(Format::PD, j["results"][0]["result"]["output"].get<std::string>());
    EXPECT_EQ(pd.crossing_count(), 4);
}

TEST(Cli, BraidMovesDouble) {
    EXPECT_EQ(run({"braid", "--format", "dt", "4 6 8 2"}).code, 0);
    auto m = run({"moves", "--loops", "--json", "2: 1 1 1 1 1"});
    ASSERT_EQ(m.code, 0) << m.err;
    auto j = nlohmann::json::parse(m.out);
    EXPECT_EQ(j["results"][0]["result"]["loops"]["total_switches"], 2);
    auto d = run({"double", "--sign", "-1", "2: 1 1 1"});
    EXPECT_EQ(d.code, 0) << d.out;
}

TEST(Cli, VerifyEmptyCorpusAndFault) {
    EXPECT_EQ(run({"verify", "--corpus", "0", "--braids", "0", "--vogel", "0"}).code, 0);
    auto f = run({"verify", "--corpus", "0", "--braids", "0", "--vogel", "0", "--inject-fault", "v3-sign"});
    EXPECT_EQ(f.code, 1);
    EXPECT_NE(f.out.find("FAIL"), std::string::npos);
}
