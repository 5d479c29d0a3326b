#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

Run trslab(const std::string& args) {
    const std::string cmd = std::string(TRSLAB_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, FieldDescription) {
    const auto r = trslab("field 2^3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2^3/1101"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(trslab("").status, 2);
    EXPECT_EQ(trslab("verify --format xml").status, 2);
    EXPECT_EQ(trslab("verify --check nope --field 8").status, 2);
    EXPECT_EQ(trslab("field 6").status, 2);
    EXPECT_EQ(trslab("verify --k 3").status, 2);
}

TEST(Cli, CoveringRadius) {
    const auto r = trslab("code trs:q=8:k=5:theta=1:A=full radius");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find('3'), std::string::npos);
    EXPECT_EQ(trslab("code trs:q=64:k=40:theta=1:A=full radius --max-ops 1000").status, 3);
}

TEST(Cli, DeepHoleTest) {
    const auto deep = trslab("deepholes trs:q=8:k=5:theta=1:A=full test --syndrome 0,1,1");
    EXPECT_EQ(deep.status, 0);
    EXPECT_NE(deep.out.find("is a deep-hole syndrome"), std::string::npos);
    const auto listed = trslab("deepholes trs:q=16:k=12:theta=3:A=full enumerate");
    EXPECT_EQ(listed.status, 0);
    EXPECT_NE(listed.out.find("(0, 0, 0, 1)"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
    const auto pass = trslab("verify --check thm4 --field 8 --k 5 --theta 1 --format json");
    EXPECT_EQ(pass.status, 0);
    EXPECT_NE(pass.out.find("\"PASS\""), std::string::npos);
    EXPECT_EQ(trslab("verify --check lemA12 --field 16").status, 1);
    EXPECT_EQ(trslab("verify --check thm10 --field 7 --k 4").status, 0);
    EXPECT_EQ(trslab("verify --filter 'no-such*'").status, 0);
}

TEST(Cli, VerifyWritesOutputFile) {
    const std::string path = ::testing::TempDir() + "trslab_cli_report.csv";
    EXPECT_EQ(trslab("verify --filter 'charsum.lemA11' --format csv --output " + path).status, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("lemA11"), std::string::npos);
    std::remove(path.c_str());
}
