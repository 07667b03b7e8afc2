#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "smooth/cli.hpp"
#include "smooth/presets.hpp"

using namespace smooth;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string field(const std::string& text, const std::string& key) {
  for (const auto& l : lines(text)) {
    if (l.rfind(key + ": ", 0) == 0) return l.substr(key.size() + 2);
  }
  return {};
}

}  // namespace

TEST_CASE("exact subcommand") {
  CHECK(run({"exact", "--bases", "2,3", "--x", "1e6"}).out == "142\n");
  CHECK(run({"exact", "--bases", "2,3,5,7", "--x", "1e3"}).out == "141\n");
  CHECK(run({"exact", "--bases", "3,2", "--x", "1"}).out == "1\n");
  CHECK(run({"exact", "--bases", "2,3", "--x", "1e100", "--squares"}).out == "226\n");
  CHECK(run({"exact", "--bases", "2,3,4", "--x", "16"}).out == "14\n");
}

TEST_CASE("exit codes") {
  Run bad = run({"exact", "--bases", "2,4", "--x", "100"});
  CHECK(bad.code == kExitInvalidBasis);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("gcd") != std::string::npos);

  CHECK(run({"exact", "--bases", "2,3", "--x", "ten"}).code == kExitParseError);
  CHECK(run({"exact", "--bases", "2,x", "--x", "10"}).code == kExitParseError);
  CHECK(run({"formula", "--variant", "nope", "--bases", "2,3", "--x", "10"}).code ==
        kExitParseError);
  CHECK(run({"formula", "--variant", "triple", "--bases", "2,3", "--x", "10"}).code ==
        kExitInvalidBasis);
  CHECK(run({"formula", "--variant", "schumacher2", "--bases", "2,3", "--x", "1"}).code ==
        kExitParseError);
  CHECK(run({"formula", "--variant", "hl2", "--bases", "2,3", "--x", "10", "--digits", "10"})
            .code == kExitParseError);
  CHECK(run({"bogus"}).code == kExitParseError);
}

TEST_CASE("formula text report") {
  Run r = run({"formula", "--variant", "hl2", "--bases", "2,3", "--x", "10", "--R", "6",
               "--digits", "30"});
  REQUIRE(r.code == kExitOk);
  CHECK(field(r.out, "total").rfind("7.0103953679258065283387004462", 0) == 0);
  CHECK(field(r.out, "rounded_count") == "7");
  CHECK(field(r.out, "terms_used") == "4 6");
  CHECK(field(r.out, "R") == "6");
  CHECK(field(r.out, "resonance_warnings") == "0");

  Run sq = run({"formula", "--variant", "squares", "--bases", "2,3", "--x", "1e4", "--nm", "5",
                "--digits", "20"});
  REQUIRE(sq.code == kExitOk);
  CHECK(field(sq.out, "total").rfind("11.0386135898290", 0) == 0);
  CHECK(field(sq.out, "double_sum_caps") == "5,5");

  Run s2 = run({"formula", "--variant", "schumacher2", "--bases", "2,3", "--x", "10", "--nm",
                "22,22", "--digits", "20"});
  CHECK(field(s2.out, "total").rfind("7.00714973738392", 0) == 0);
}

TEST_CASE("formula json round-trips") {
  Run r = run({"formula", "--variant", "quad_cot", "--bases", "2,3,5,7", "--x", "1e2", "--R",
               "20", "--format", "json", "--digits", "25"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(j["rounded_count"].get<std::string>() == "46");
  CHECK(j["total"].get<std::string>().rfind("46.036685214917263751302", 0) == 0);
}

TEST_CASE("digits from the environment") {
  std::vector<std::string> args{"formula", "--variant", "hl2", "--bases", "2,3", "--x", "10",
                                "--R", "6"};
  setenv("SMOOTHCOUNT_DIGITS", "20", 1);
  std::string env_total = field(run(args).out, "total");
  auto flagged = args;
  flagged.insert(flagged.end(), {"--digits", "25"});
  std::string flag_total = field(run(flagged).out, "total");
  unsetenv("SMOOTHCOUNT_DIGITS");
  std::string default_total = field(run(args).out, "total");
  CHECK(env_total.size() == 21);
  CHECK(flag_total.size() == 26);
  CHECK(default_total.size() == 51);
}

TEST_CASE("table subcommand") {
  Run r = run({"table", "--preset", "table2", "--rows", "0..1"});
  REQUIRE(r.code == kExitOk);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "x,exact,formula,paper_formula,abs_diff,round_ok,status");
  CHECK(ls[1].rfind("1,1,1.004082812812447944223", 0) == 0);
  CHECK(ls[2].rfind("10,7,7.0103953679258065283", 0) == 0);
  CHECK(ls[2].substr(ls[2].size() - 3) == ",ok");

  Run skipped = run({"table", "--preset", "table2", "--rows", "14..14"});
  CHECK(skipped.code == kExitOk);
  CHECK(skipped.out.find("skipped: beyond-desk-scale") != std::string::npos);

  Run failing = run({"table", "--preset", "table3", "--rows", "1..1"});
  CHECK(failing.code == kExitVerificationFailed);
  CHECK(failing.out.find(",FAIL") != std::string::npos);
  CHECK(failing.err.find("table3") != std::string::npos);

  CHECK(run({"table", "--preset", "table9"}).code == kExitParseError);
  CHECK(run({"table", "--preset", "table2", "--rows", "3..1"}).code == kExitParseError);
}

TEST_CASE("sweep subcommand") {
  Run r = run({"sweep", "--variant", "hl2", "--bases", "2,3", "--x", "1e3", "--R", "26:28:2",
               "--digits", "20"});
  REQUIRE(r.code == kExitOk);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "R,total,error");
  CHECK(ls[1].rfind("26,40.0041673365886312", 0) == 0);
  double err26 = std::stod(ls[1].substr(ls[1].rfind(',') + 1));
  CHECK(std::fabs(err26) < 0.005);

  Run single = run({"sweep", "--variant", "hl2", "--bases", "2,3", "--x", "1e3", "--R", "8:8",
                    "--digits", "20"});
  CHECK(lines(single.out).size() == 2);
}

TEST_CASE("generate subcommand") {
  Run r = run({"generate", "--bases", "2,3", "--x", "27"});
  CHECK(r.out == "1\n2\n3\n4\n6\n8\n9\n12\n16\n18\n24\n27\n");
  CHECK(run({"generate", "--bases", "2,3", "--x", "1"}).out == "1\n");
}

TEST_CASE("presets match the transcribed tables") {
  std::ifstream in(FIXTURE_DIR "/paper_tables.tsv", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(presets_tsv() == buf.str());
  CHECK(fnv1a64(presets_tsv()) == fnv1a64(buf.str()));
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
