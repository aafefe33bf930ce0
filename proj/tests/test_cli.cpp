#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "goldbach/cache.hpp"
#include "goldbach/cli.hpp"
#include "json.hpp"

using namespace goldbach;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "goldbach-ap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("goldbach_ap_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exceptions") {
    const auto r = run({"exceptions", "--m", "4", "--a", "1", "--b", "1", "--limit", "1000000"});
    CHECK(r.code == exit_code::kSuccess);
    CHECK(r.out.find("\n2 6 14 38 62\n") != std::string::npos);
    CHECK(r.out.find("size: 5") != std::string::npos);
    CHECK(r.out.find("witness: ") != std::string::npos);

    const auto empty = run({"exceptions", "--m", "8", "--a", "3", "--b", "5", "--limit", "1000000"});
    CHECK(empty.code == exit_code::kSuccess);
    CHECK(empty.out.find("\n(empty)\n") != std::string::npos);

    // Swapped orientation reports the same set.
    const auto swapped = run({"exceptions", "--m", "10", "--a", "9", "--b", "3", "--limit", "100000"});
    CHECK(swapped.out.find("\n2 12\n") != std::string::npos);
  }

  TEST_CASE("exceptions JSON") {
    const auto r = run({"exceptions", "--m", "10", "--a", "9", "--b", "9", "--limit", "100000", "--format", "json"});
    REQUIRE(r.code == exit_code::kSuccess);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("elements") == nlohmann::json::array({8, 18, 28, 68}));
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"exceptions", "--m", "4", "--a", "2", "--b", "1"}).code == exit_code::kUsage);
    CHECK(run({"exceptions", "--m", "5", "--a", "1", "--b", "1", "--limit", "1000"}).code == exit_code::kUsage);
    CHECK(run({"exceptions", "--m", "4", "--a", "1"}).code == exit_code::kUsage);
    CHECK(run({"verify", "conj9", "--limit", "1000"}).code == exit_code::kUsage);
    CHECK(run({"frobnicate"}).code == exit_code::kUsage);
    CHECK(run({}).code == exit_code::kUsage);
    CHECK(run({"table1", "--m", "4", "--limit", "1000", "--stage1-bound", "5000"}).code == exit_code::kUsage);
    CHECK(run({"table1", "--m", "4", "--format", "xml"}).code == exit_code::kUsage);
    CHECK(run({"verify", "conj3", "--a", "11", "--limit", "1000"}).code == exit_code::kUsage);
    CHECK(run({"--help"}).code == exit_code::kSuccess);
  }

  TEST_CASE("table1 and table2") {
    const auto t1 = run({"table1", "--m", "2", "--limit", "100000"});
    CHECK(t1.code == exit_code::kSuccess);
    CHECK(t1.out ==
          "m,L0_min,L0_avg,L0_max,E0_max,e0_m,e0_tilde_m,L_min,L_avg,L_max,E_max,e_m,e_tilde_m\n"
          "2,2,2.0,2,4,2,2,2,2.0,2,4,2,2\n");
    const auto range = run({"table1", "--m-min", "2", "--m-max", "10", "--limit", "1000000"});
    CHECK(range.out.find("\n10,0,1.0,2,20,2,4,0,1.563,4,152,13,25\n") != std::string::npos);
    const auto none = run({"table1", "--m-min", "12", "--m-max", "10", "--limit", "1000"});
    CHECK(none.code == exit_code::kSuccess);
    CHECK(none.out == "m,L0_min,L0_avg,L0_max,E0_max,e0_m,e0_tilde_m,L_min,L_avg,L_max,E_max,e_m,e_tilde_m\n");

    const auto t2 = run({"table2", "--m-min", "22", "--m-max", "24", "--limit", "1000000"});
    CHECK(t2.out == "m,count,percent\n22,2,2.0\n24,20,31.3\n");
  }

  TEST_CASE("table JSON output parses and matches the CSV") {
    const auto j = run({"table2", "--m-max", "12", "--limit", "100000", "--format", "json"});
    REQUIRE(j.code == exit_code::kSuccess);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("rows").size() == 6);
    CHECK(doc.at("rows")[3].at("count") == 3);
  }

  TEST_CASE("figures") {
    const auto r = run({"figures", "--m-max", "26", "--limit", "100000"});
    CHECK(r.code == exit_code::kSuccess);
    CHECK(r.out.find("\n26,4688,12\n") != std::string::npos);
    CHECK(r.out.find("\n6,8,2\n") != std::string::npos);
    const auto dir = fresh_dir("fig");
    fs::create_directories(dir);
    const auto files = run({"figures", "--m-max", "8", "--limit", "10000", "--out-dir", dir.string()});
    CHECK(files.code == exit_code::kSuccess);
    CHECK(fs::exists(dir / "figure1.csv"));
    CHECK(fs::exists(dir / "figure2.csv"));
    fs::remove_all(dir);
  }

  TEST_CASE("verify") {
    const auto c2 = run({"verify", "conj2", "--limit", "1000000"});
    CHECK(c2.out.find("conj2 (i) N=1000000: violations {} stated {} PASS") != std::string::npos);
    CHECK(c2.out.find("conj2 (ii) N=1000000: violations {4} stated {4} PASS") != std::string::npos);
    CHECK(c2.out.find("conj2 (iii) N=1000000: violations {2} stated {2} PASS") != std::string::npos);
    CHECK(c2.out.find("conj2 (iv) N=1000000: violations {2 6 14 38 62} stated {2 6 14 18 62} FAIL") !=
          std::string::npos);
    CHECK(c2.code == exit_code::kVerificationFailed);

    const auto c3 = run({"verify", "conj3", "--limit", "1000000"});
    CHECK(c3.code == exit_code::kSuccess);
    CHECK(c3.out.find("FAIL") == std::string::npos);
    CHECK(c3.out.find("(vii)") != std::string::npos);

    const auto t = run({"verify", "ternary", "--limit", "100000"});
    CHECK(t.code == exit_code::kSuccess);
    CHECK(t.out.find("PASS") != std::string::npos);

    const auto asy = run({"verify", "asy", "--m-max", "20", "--limit", "100000"});
    CHECK(asy.code == exit_code::kSuccess);
    CHECK(asy.out.find("max E_max(m)/(m^2 (ln m)^2)") != std::string::npos);
  }

  TEST_CASE("heuristic") {
    const auto m10 = run({"heuristic", "--m", "10", "--limit", "100000"});
    CHECK(m10.code == exit_code::kSuccess);
    CHECK(m10.out.find("r: 3\n") != std::string::npos);
    CHECK(m10.out.find("E[W]: 5.5\n") != std::string::npos);
    const auto m4 = run({"heuristic", "--m", "4", "--limit", "100000"});
    CHECK(m4.out.find("r: 2\n") != std::string::npos);
    CHECK(m4.out.find("E[W]: 3\n") != std::string::npos);
    const auto m2 = run({"heuristic", "--m", "2", "--limit", "100000"});
    CHECK(m2.code == exit_code::kSuccess);
    CHECK(m2.out.find("r: 1\n") != std::string::npos);
    CHECK(m2.out.find("E[W]: 1\n") != std::string::npos);
    CHECK(run({"heuristic", "--m", "10", "--delta", "1.5"}).code == exit_code::kUsage);
    CHECK(run({"heuristic", "--m", "10", "--seed", "3", "--limit", "1000"}).out ==
          run({"heuristic", "--m", "10", "--seed", "3", "--limit", "1000"}).out);
  }

  TEST_CASE("survivors") {
    const auto r = run({"survivors", "--m", "50", "--limit", "1000000", "--stage1-bound", "10000"});
    CHECK(r.code == exit_code::kSuccess);
    CHECK(r.out.find("ordered pairs, with multiplicity: 81") != std::string::npos);
    CHECK(r.out.find("unordered pairs (a <= b), with multiplicity: 41") != std::string::npos);
  }

  TEST_CASE("cache transparency, corruption recovery and thread determinism") {
    const auto dir = fresh_dir("cache");
    const std::vector<std::string> base = {"table1", "--m-min", "20", "--m-max", "30", "--limit", "200000"};
    auto with = [&](std::vector<std::string> extra) {
      auto args = base;
      args.insert(args.end(), extra.begin(), extra.end());
      return run(args);
    };
    const auto reference = with({"--threads", "1"});
    REQUIRE(reference.code == exit_code::kSuccess);
    CHECK(with({"--threads", "3"}).out == reference.out);
    const auto cold = with({"--cache-dir", dir.string()});
    CHECK(cold.out == reference.out);
    CHECK(!fs::is_empty(dir));
    const auto warm = with({"--cache-dir", dir.string()});
    CHECK(warm.out == reference.out);
    CHECK(warm.err.empty());

    // Corrupt every entry; output is unchanged and a warning is printed.
    for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "garbage";
    const auto recovered = with({"--cache-dir", dir.string()});
    CHECK(recovered.code == exit_code::kSuccess);
    CHECK(recovered.out == reference.out);
    CHECK(recovered.err.find("warning") != std::string::npos);

    // Smaller N is served from the larger entries.
    const auto smaller = run({"table1", "--m-min", "20", "--m-max", "30", "--limit", "100000", "--stage1-bound",
                              "10000", "--cache-dir", dir.string()});
    const auto smaller_plain =
        run({"table1", "--m-min", "20", "--m-max", "30", "--limit", "100000", "--stage1-bound", "10000"});
    CHECK(smaller.out == smaller_plain.out);
    fs::remove_all(dir);
  }

  TEST_CASE("cache directory from the environment") {
    const auto dir = fresh_dir("env");
    ::setenv(kCacheDirEnv, dir.string().c_str(), 1);
    const auto r = run({"table2", "--m", "12", "--limit", "10000"});
    ::unsetenv(kCacheDirEnv);
    CHECK(r.code == exit_code::kSuccess);
    CHECK(fs::exists(dir));
    CHECK(!fs::is_empty(dir));
    fs::remove_all(dir);
  }

  TEST_CASE("unwritable cache directory exits with 3") {
    const auto dir = fresh_dir("io");
    std::ofstream(dir.string()) << "not a directory";
    CHECK(run({"table2", "--m", "12", "--limit", "10000", "--cache-dir", (dir / "x").string()}).code ==
          exit_code::kIo);
    fs::remove_all(dir);
  }
}
