#include "bijenc_cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = bijenc::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(BIJENC_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, EncodeDecodeTerm) {
    EXPECT_EQ(run({"encode-term", "--sig", data("fg_a.sig"), "f(a, f(X, g(Y)))"}).out, "17439\n");
    EXPECT_EQ(run({"decode-term", "--sig", data("fg_ab.sig"), "2012"}).out, "f(f(Y,b),f(b,a))\n");
    EXPECT_EQ(run({"decode-term", "--sig", data("imp.sig"), "2012"}).out,
              "imp(imp(imp(B,A),imp(z,A)),imp(imp(z,A),B))\n");
}

TEST(Cli, SkeletonAndInjectiveCodes) {
    EXPECT_EQ(run({"skeleton-encode", "f(a,g(X,Y),g(Y,X))"}).out, "786632\nf,a,g,X,Y,g,Y,X\n");
    EXPECT_EQ(run({"skeleton-decode", "786632", "--atoms", "f,a,g,X,Y,g,Y,X"}).out, "f(a,g(X,Y),g(Y,X))\n");
    EXPECT_EQ(run({"inj-encode", "f(a,g(X,Y),g(Y,X))"}).out, "131364115\nf,a,g,X,Y,g,Y,X\n");
    EXPECT_EQ(run({"inj-decode", "131364115", "--atoms", "f,a,g,X,Y,g,Y,X"}).out, "f(a,g(X,Y),g(Y,X))\n");
}

TEST(Cli, NumericCodecs) {
    EXPECT_EQ(run({"pars", "2012"}).out, "((((())))(((())))(()()))\n");
    EXPECT_EQ(run({"unpars", "((((())))(((())))(()()))"}).out, "2012\n");
    EXPECT_EQ(run({"natlist", "2012"}).out, "7,7,2\n");
    EXPECT_EQ(run({"listnat", "7,7,2"}).out, "2012\n");
    EXPECT_EQ(run({"natlist", "0"}).out, "\n");
    EXPECT_EQ(run({"listnat", ""}).out, "0\n");
    EXPECT_EQ(run({"tuple", "-k", "3", "42"}).out, "2,1,2\n");
    EXPECT_EQ(run({"untuple", "2,1,2"}).out, "42\n");
    EXPECT_EQ(run({"bbase", "-b", "7", "2012"}).out, "2,6,4,4\n");
    EXPECT_EQ(run({"unbbase", "-b", "7", "2,6,4,4"}).out, "2012\n");
    EXPECT_EQ(run({"atom-encode", "hello"}).out, "7073802\n");
    EXPECT_EQ(run({"atom-decode", "2012"}).out, "jyb\n");
}

TEST(Cli, BigNumbersAreDecimal) {
    const std::string big = "1234567890123456789012345678901234567890";
    const auto t = run({"tuple", "-k", "5", big});
    ASSERT_EQ(t.status, 0);
    std::string tuple = t.out.substr(0, t.out.size() - 1);
    EXPECT_EQ(run({"untuple", tuple}).out, big + "\n");
}

TEST(Cli, RandomTermsAreReproducible) {
    const auto a = run({"random-term", "--sig", data("fg_ab.sig"), "--bits", "64", "--seed", "7", "--count", "5"});
    const auto b = run({"random-term", "--sig", data("fg_ab.sig"), "--bits", "64", "--seed", "7", "--count", "5"});
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
    const auto one = run({"random-term", "--sig", data("fg_ab.sig"), "--bits", "64", "--seed", "7"});
    EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 1);
}

TEST(Cli, Roundtrip) {
    EXPECT_EQ(run({"roundtrip", "--sig", data("fg_a.sig"), "--max", "0"}).out, "ok 1 checked\n");
    EXPECT_EQ(run({"roundtrip", "--sig", data("imp.sig"), "--max", "999"}).out, "ok 1000 checked\n");
}

TEST(Cli, Stats) {
    const auto r = run({"stats", "--sig", data("fg_ab.sig"), "--bits", "128", "--seed", "1", "--count", "3"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "code_bits\tterm_length\tskeleton_length\tratio");
    int rows = 0;
    while (std::getline(lines, line) && line.rfind("ratio", 0) != 0) ++rows;
    EXPECT_EQ(rows, 3);
    EXPECT_EQ(line.rfind("ratio min=", 0), 0u);
}

TEST(Cli, Errors) {
    auto r = run({"encode-term", "--sig", data("fg_a.sig"), "f(a,Z)"});
    EXPECT_NE(r.status, 0);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err.find("term2nat"), std::string::npos);

    r = run({"encode-term", "--sig", data("missing.sig"), "a"});
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("cannot read"), std::string::npos);

    EXPECT_NE(run({"decode-term", "--sig", data("fg_a.sig"), "-5"}).status, 0);
    EXPECT_NE(run({"unpars", "(()"}).status, 0);
    EXPECT_NE(run({"atom-encode", "Hello"}).status, 0);
    EXPECT_NE(run({"tuple", "-k", "0", "5"}).status, 0);
    EXPECT_NE(run({"skeleton-decode", "1", "--atoms", "a"}).status, 0);
    EXPECT_NE(run({"frobnicate"}).status, 0);
    EXPECT_NE(run({"pars", "--bogus", "1"}).status, 0);
    EXPECT_NE(run({}).status, 0);
}
