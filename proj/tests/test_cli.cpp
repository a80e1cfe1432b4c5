#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QTSETLIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("matrix for n = 3") {
    auto r = run("matrix --space perm --n 3 --q 2 --rates 1/2,1/3,1/6");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["states"][0] == "123");
    CHECK(j["entries"][0][0] == "3/8");
    CHECK(j["entries"].size() == 6);
}

TEST_CASE("stationary for n = 3") {
    auto r = run("stationary --space perm --n 3 --q 2 --rates 1/2,1/3,1/6");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["321"] == "1/15");
    auto all = run("stationary --space perm --n 3 --q 2 --rates 1/2,1/3,1/6 --method all");
    REQUIRE(all.status == 0);
    CHECK(nlohmann::json::parse(all.out)["agree"] == true);
}

TEST_CASE("flag stationary with every method") {
    auto r = run("stationary --space flag --n 3 --p 2 --rates 1/2,1/3,1/6 --method all");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["semigroup"].size() == 21);
    CHECK(j["formula"]["001|010|100"] == "1/15");
}

TEST_CASE("csv output has a header row") {
    auto r = run("stationary --space word --m 1,2 --q 2 --rates 2/5,3/5 --format csv");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("state,value\n122,2/5\n", 0) == 0);
    auto m = run("matrix --space word --m 1,2 --q 2 --rates 2/5,3/5 --format csv");
    CHECK(m.out.rfind("state,122,212,221\n", 0) == 0);
}

TEST_CASE("spectrum with verification") {
    auto r = run("spectrum --space word --m 3,3 --q 5/3 --verify");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["annihilates"] == true);
    CHECK(j["predicted_total"] == 20);
    auto c = run("spectrum --space word --m 3,3 --q 5/3");
    CHECK(nlohmann::json::parse(c.out).size() == 16);
}

TEST_CASE("lump-check and verify") {
    CHECK(run("lump-check --n 3 --p 2").status == 0);
    CHECK(run("lump-check --m 2,2 --q 5/2").status == 0);
    auto v = run("verify --suite hecke --n-max 3 --p 2,3");
    CHECK(v.status == 0);
    CHECK(nlohmann::json::parse(v.out)["pass"] == true);
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run("matrix --space perm --n 3").status == 2);
    CHECK(run("matrix --space perm --n 3 --q 2 --rates 1,2").status == 2);
    CHECK(run("matrix --space flag --n 3 --p 4").status == 2);
    CHECK(run("matrix --space flag --n 3 --p 2 --q 3").status == 2);
    CHECK(run("matrix --space word --q 2").status == 2);
    CHECK(run("matrix --space cube --n 3 --q 2").status == 2);
    CHECK(run("stationary --space perm --n 3 --q 2 --method semigroup").status == 2);
    CHECK(run("stationary --space perm --n 3 --q 1/2 --rates 1,1,2").status == 2);
    CHECK(run("lump-check").status == 2);
    CHECK(run("").status == 2);
}

}
