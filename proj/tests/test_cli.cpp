#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hanoi/cli.hpp"
#include "hanoi/move_json.hpp"

using namespace hanoi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hanoi");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "hanoi_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("count")
{
    auto r = run({"count", "--disks", "3", "--pegs", "4"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "5\n");
    CHECK(run({"count", "--disks", "3"}).out == "5\n");  // 4 pegs by default
    CHECK(run({"count", "--disks", "64", "--pegs", "3"}).out == "18446744073709551615\n");

    auto splits = run({"count", "--disks", "4", "--pegs", "4", "--splits"});
    CHECK(splits.out == "9\nsplit (1,2)\nsplit (2,1)\n");

    auto frame = run({"count", "--disks", "3", "--pegs", "4", "--method", "frame"});
    CHECK(frame.out == "5\n");
    CHECK(frame.err.find("2n-1") != std::string::npos);
    for (int n = 0; n <= 20; ++n)
        CHECK(run({"count", "-n", std::to_string(n), "-k", "5", "--method", "frame"}).out ==
              run({"count", "-n", std::to_string(n), "-k", "5"}).out);
}

TEST_CASE("invalid arguments exit 2")
{
    CHECK(run({"count", "--disks", "3", "--pegs", "2"}).code == cli::kInvalidArguments);
    CHECK(run({"count", "--disks", "-1"}).code == cli::kInvalidArguments);
    CHECK(run({"count"}).code == cli::kInvalidArguments);
    CHECK(run({}).code == cli::kInvalidArguments);
    CHECK(run({"frobnicate"}).code == cli::kInvalidArguments);
    CHECK(run({"solve", "--disks", "3", "--strategy", "s9"}).code == cli::kInvalidArguments);
    CHECK(run({"solve", "--disks", "3", "--pegs", "5", "--strategy", "s3"}).code == cli::kInvalidArguments);
    CHECK(run({"verify", "--disks", "3", "--moves", scratch("missing.json").string()}).code ==
          cli::kInvalidArguments);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("solve output format")
{
    auto r = run({"solve", "--disks", "2", "--pegs", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "[\n"
          "{\"disk\":1,\"from\":0,\"to\":1,\"step\":0},\n"
          "{\"disk\":2,\"from\":0,\"to\":2,\"step\":1},\n"
          "{\"disk\":1,\"from\":1,\"to\":2,\"step\":2}\n"
          "]\n");
    CHECK(run({"solve", "--disks", "0"}).out == "[\n]\n");

    auto text = run({"solve", "--disks", "1", "--pegs", "3", "--format", "text"});
    CHECK(text.out == "0: disk 1 0 -> 2\n");

    auto limited = run({"solve", "--disks", "64", "--pegs", "3", "--limit", "3"});
    CHECK(limited.code == 0);
    std::istringstream is(limited.out);
    CHECK(parse_moves_json(is).size() == 3);
    CHECK(limited.err.find("truncated") != std::string::npos);
}

TEST_CASE("solve | verify pipeline")
{
    for (const std::string strategy : {"optimal", "s1", "s2", "s3"}) {
        for (int n = 0; n <= 8; ++n) {
            const auto file = scratch("seq_" + strategy + std::to_string(n) + ".json");
            const auto ns = std::to_string(n);
            REQUIRE(run({"solve", "-n", ns, "-k", "4", "--strategy", strategy, "--out", file.string()}).code == 0);
            auto v = run({"verify", "-n", ns, "-k", "4", "--moves", file.string()});
            CHECK(v.code == cli::kOk);
            auto report = nlohmann::json::parse(v.out);
            CHECK(report["legal"] == true);
            CHECK(report["reached_goal"] == true);
        }
    }
}

TEST_CASE("verify failures")
{
    const auto bad = scratch("bad.json");
    write_file(bad, R"([{"disk":2,"from":0,"to":2}])");
    auto r = run({"verify", "--disks", "2", "--pegs", "3", "--moves", bad.string()});
    CHECK(r.code == cli::kVerificationFailed);
    auto report = nlohmann::json::parse(r.out);
    CHECK(report["legal"] == false);
    CHECK(report["first_failure"]["index"] == 0);
    CHECK(report["first_failure"]["reason"] == "disk 2 buried under disk 1");

    const auto partial = scratch("partial.json");
    write_file(partial, R"([{"disk":1,"from":0,"to":1}])");
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", partial.string()}).code == cli::kVerificationFailed);

    const auto good = scratch("good.json");
    write_file(good, R"([{"disk":1,"from":0,"to":2}])");
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", good.string()}).code == cli::kOk);
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", good.string(), "--length", "1"}).code == cli::kOk);
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", good.string(), "--length", "3"}).code ==
          cli::kVerificationFailed);

    const auto junk = scratch("junk.json");
    write_file(junk, R"({"disk":1})");
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", junk.string()}).code == cli::kInvalidArguments);
    write_file(junk, R"([{"disk":1,"from":0}])");
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", junk.string()}).code == cli::kInvalidArguments);
    write_file(junk, "[");
    CHECK(run({"verify", "-n", "1", "-k", "3", "--moves", junk.string()}).code == cli::kInvalidArguments);
}

TEST_CASE("oracle")
{
    auto r = run({"oracle", "--disks", "10", "--pegs", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "49\n");

    CHECK(run({"oracle", "-n", "2", "-k", "4", "--count-paths"}).out == "3\npaths 2\n");

    const auto witness = scratch("witness.json");
    const auto layers = scratch("layers.csv");
    CHECK(run({"oracle", "-n", "3", "-k", "4", "--witness", witness.string(), "--layers", layers.string()}).code ==
          0);
    CHECK(run({"verify", "-n", "3", "-k", "4", "--moves", witness.string(), "--length", "5"}).code == 0);
    std::ifstream csv(layers);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "layer,states,cumulative");

    auto limited = run({"oracle", "-n", "12", "-k", "4", "--memory-budget", "1000"});
    CHECK(limited.code == cli::kResourceLimit);
    CHECK(limited.err.find("1000") != std::string::npos);
}

TEST_CASE("table and compare")
{
    CHECK(run({"table", "--max-disks", "4", "--pegs", "4"}).out == "n,T\n0,0\n1,1\n2,3\n3,5\n4,9\n");
    CHECK(run({"table", "--max-disks", "1", "--pegs", "3", "--format", "md"}).out ==
          "| n | T |\n|---|---|\n| 0 | 0 |\n| 1 | 1 |\n");
    CHECK(run({"compare", "--disks", "5", "--format", "csv"}).out ==
          "n,S1,S2,S3,OPTIMAL,S1/OPT,S3/OPT\n"
          "0,0,0,0,0,-,-\n"
          "1,1,1,1,1,1.0000,1.0000\n"
          "2,3,3,3,3,1.0000,1.0000\n"
          "3,7,7,5,5,1.4000,1.0000\n"
          "4,15,15,9,9,1.6667,1.0000\n"
          "5,31,31,13,13,2.3846,1.0000\n");
    auto text = run({"compare", "--disks", "10"});
    CHECK(text.code == 0);
    CHECK(text.out == run({"compare", "--disks", "10"}).out);
}
