#include <gtest/gtest.h>

#include "cli.hpp"

using wreath::Json;
using wreath::cli::run;

TEST(Cli, BranchFirstJson) {
    const auto r = run({"branch-first", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--json"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output().find(R"({"nu":[[3],[2,1]],"mult":1})"), std::string::npos);
    EXPECT_EQ(r.payload["n"], 6);
}

TEST(Cli, BothMethodsAgree) {
    const auto r = run({"branch-first", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--method", "both"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.payload["agree"], true);
}

TEST(Cli, PartitionsOfZero) {
    const auto r = run({"partitions", "0"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output(), "[[]]\n");
    EXPECT_EQ(run({"partitions", "3"}).output(), "[[3],[2,1],[1,1,1]]\n");
}

TEST(Cli, RhoListsDoubleCosetRepresentatives) {
    const auto r = run({"rho", "--sizes", "(3,1,0,2,3)"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.human.find("representatives: (3,9,8,7,6,5,4),(4,9,8,7,6,5),(6,9,8,7),e"), std::string::npos);
    EXPECT_EQ(r.payload["representatives"].size(), 4u);
}

TEST(Cli, SmallCommands) {
    EXPECT_EQ(run({"dim", "--partition", "[3,2]"}).payload["dimension"], 5);
    EXPECT_EQ(run({"lr", "--lambda", "[3,2,1]", "--alpha", "[2,1]", "--beta", "[2,1]"}).payload["coefficient"], 2);
    EXPECT_EQ(run({"lr-multi", "--lambda", "[1,1]", "--parts", "[1];[1]"}).payload["coefficient"], 1);
    EXPECT_EQ(run({"young-layer", "3"}).payload["edges"].size(), 4u);
    EXPECT_EQ(run({"wreath-dim", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]"}).payload["dimension"], 360);
    EXPECT_EQ(run({"labellings", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--nu", "[[3],[2,1]]"})
                  .payload["labellings"]
                  .size(),
              4u);
    EXPECT_EQ(run({"cosets", "--gamma", "(1,1,1)", "--alpha", "(2,1)"}).payload["representatives"].size(), 3u);
    const auto second = run({"branch-second", "-m", "3", "--lambda", "[[1],[1],[]]", "--json"});
    EXPECT_EQ(second.payload["rule"], "second");
    EXPECT_EQ(second.payload["multiplicities"].dump(),
              R"([{"nu":[[1],[],[]],"mult":2},{"nu":[[],[1],[]],"mult":1}])");
}

TEST(Cli, VerifySuiteReportsCounts) {
    const auto r = run({"verify", "--suite", "dimensions-first", "--max-m", "3", "--max-n", "3"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_GT(r.payload["checked"].get<int>(), 0);
    EXPECT_EQ(r.payload["failures"], 0);
    EXPECT_NE(r.human.find("instances checked"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run({}).exit_code, 1);
    EXPECT_EQ(run({"nonsense"}).exit_code, 1);
    EXPECT_EQ(run({"dim"}).exit_code, 1);
    EXPECT_EQ(run({"verify", "--suite", "unknown"}).exit_code, 1);
    EXPECT_EQ(run({"branch-first", "-m", "3", "--lambda", "[[1],[],[]]", "--method", "fast"}).exit_code, 1);
}

TEST(Cli, ComputationErrorsExitTwoWithJson) {
    const auto r = run({"dim", "--partition", "[1,2]"});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(r.payload["status"], "error");
    EXPECT_EQ(r.payload["code"], "invalid_argument");
    EXPECT_EQ(run({"branch-first", "-m", "3", "--lambda", "[[1]]"}).payload["code"], "component_count_mismatch");
    EXPECT_EQ(run({"branch-second", "-m", "2", "--lambda", "[[],[]]"}).exit_code, 2);
    EXPECT_EQ(run({"lr", "--lambda", "[x]", "--alpha", "[]", "--beta", "[]"}).payload["code"], "parse_error");
    EXPECT_EQ(Json::parse(r.output())["status"], "error");
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"branch-first", "-m", "4", "--lambda", "[[1],[1],[],[1],[]]", "--json"};
    EXPECT_EQ(run(args).output(), run(args).output());
}
