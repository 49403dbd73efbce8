#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordspec/numtheory.hpp"

namespace {

using nlohmann::ordered_json;

struct CliResult {
  int code = -1;
  std::string out;
};

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    const auto d = std::filesystem::temp_directory_path() /
                   ("ordspec_cli_" + std::to_string(::getpid()));
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

// Run the tool with the given arguments; capture stdout bytes and exit code.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::filesystem::path out_path =
      scratch_dir() / ("out_" + std::to_string(counter++) + ".bin");
  const std::string cmd = env_prefix + ORDSPEC_CLI_PATH + " " + args + " > " +
                          out_path.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("spectrum: human-readable table") {
  const CliResult r = run_cli("spectrum L2 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("command: spectrum") != std::string::npos);
  CHECK(r.out.find("family: L2") != std::string::npos);
  CHECK(r.out.find("group: L2(7)") != std::string::npos);
  CHECK(r.out.find("order: 168") != std::string::npos);
  CHECK(r.out.find("mu: 3 4 7") != std::string::npos);
}

TEST_CASE("spectrum: JSON envelope") {
  const CliResult r = run_cli("--json spectrum L2 7");
  REQUIRE(r.code == 0);
  const ordered_json env = ordered_json::parse(r.out);
  CHECK(env["schema"] == 1);
  CHECK(env["command"] == "spectrum");
  CHECK(env["parameters"]["family"] == "L2");
  CHECK(env["parameters"]["q"] == 7);
  CHECK(env["parameters"]["squared"] == false);
  CHECK(env["result"]["group"] == "L2(7)");
  CHECK(env["result"]["order"] == 168);
  CHECK(env["result"]["pi"] == ordered_json::array({2, 3, 7}));
  CHECK(env["result"]["mu"] == ordered_json::array({3, 4, 7}));
  CHECK(env.contains("toolkit_version"));
  CHECK(env["deterministic_seed"].is_number());
}

TEST_CASE("spectrum: direct square with an order past 64 bits") {
  const CliResult r = run_cli("--json spectrum R 27 --squared");
  REQUIRE(r.code == 0);
  const ordered_json env = ordered_json::parse(r.out);
  CHECK(env["result"]["group"] == "R(27) x R(27)");
  const ordered_json expected_mu =
      ordered_json::array({114, 126, 171, 182, 222, 234, 266, 333, 494, 518, 703, 962});
  CHECK(env["result"]["mu"] == expected_mu);
  REQUIRE(env["result"]["order"].is_string());
  const unsigned __int128 sq =
      static_cast<unsigned __int128>(10073444472ull) * 10073444472ull;
  CHECK(env["result"]["order"].get<std::string>() == ordspec::to_decimal_string(sq));
}

TEST_CASE("graph: independence data and completeness flag") {
  const CliResult plain = run_cli("--json graph J1");
  REQUIRE(plain.code == 0);
  const ordered_json env = ordered_json::parse(plain.out);
  CHECK(env["result"]["vertices"] == ordered_json::array({2, 3, 5, 7, 11, 19}));
  CHECK(env["result"]["edges"] ==
        ordered_json::array({ordered_json::array({2, 3}), ordered_json::array({2, 5}),
                             ordered_json::array({3, 5})}));
  CHECK(env["result"]["complete"] == false);
  CHECK(env["result"]["t"] == 4);
  CHECK(env["result"]["witness"] == ordered_json::array({2, 7, 11, 19}));

  const CliResult squared = run_cli("--json graph J1 --squared");
  REQUIRE(squared.code == 0);
  const ordered_json env2 = ordered_json::parse(squared.out);
  CHECK(env2["result"]["complete"] == true);
  CHECK(env2["result"]["t"] == 1);
}

TEST_CASE("graph: DOT side file") {
  const std::filesystem::path dot = scratch_dir() / "l2_11.dot";
  const CliResult r = run_cli("graph L2 11 --dot " + dot.string());
  REQUIRE(r.code == 0);
  const std::string text = read_file(dot);
  CHECK(text.find("graph prime_graph {") == 0);
  CHECK(text.find("\"2\" -- \"3\";") != std::string::npos);
  CHECK(text.find("\"11\";") != std::string::npos);

  SECTION("a cache hit still writes the DOT file") {
    const std::filesystem::path cache = scratch_dir() / "dot_cache";
    const std::filesystem::path dot2 = scratch_dir() / "l2_11_cached.dot";
    REQUIRE(run_cli("graph L2 11 --cache-dir " + cache.string()).code == 0);  // warm
    REQUIRE(run_cli("graph L2 11 --cache-dir " + cache.string() + " --dot " + dot2.string())
                .code == 0);
    CHECK(read_file(dot2) == text);
  }
}

TEST_CASE("audit: witness found exits 0 with the full evidence trail") {
  const CliResult human = run_cli("audit J1");
  CHECK(human.code == 0);
  CHECK(human.out.find("quadruple") != std::string::npos);

  const CliResult r = run_cli("--json audit R 27");
  REQUIRE(r.code == 0);
  const ordered_json env = ordered_json::parse(r.out);
  CHECK(env["result"]["source"] == "mu(R(27) x R(27))");
  CHECK(env["result"]["search_space"] == 31);
  CHECK(env["result"]["witness"]["kind"] == "quadruple");
  CHECK(env["result"]["witness"]["primes"] == ordered_json::array({3, 7, 13, 19}));
  const ordered_json& products = env["result"]["witness"]["verified_products"];
  REQUIRE(products.size() == 10);
  for (std::size_t i = 0; i < 6; ++i) CHECK(products[i]["in_spectrum"] == true);
  for (std::size_t i = 6; i < 10; ++i) CHECK(products[i]["in_spectrum"] == false);
  CHECK(products[0]["primes"] == ordered_json::array({3, 7}));
  CHECK(products[0]["product"] == 21);
}

TEST_CASE("audit: no witness exits 1 and says so") {
  const CliResult human = run_cli("audit L2 11");
  CHECK(human.code == 1);
  CHECK(human.out.find("no witness found") != std::string::npos);

  const CliResult r = run_cli("--json audit L2 4");
  REQUIRE(r.code == 1);
  const ordered_json env = ordered_json::parse(r.out);
  CHECK(env["result"]["witness"].is_null());
  CHECK(env["result"]["search_space"] == 1);
  CHECK(env["result"]["note"] ==
        "no witness found; the criterion is sufficient, not necessary");
}

TEST_CASE("verify: enumeration cross-checks pass end to end") {
  CHECK(run_cli("verify psl2 13").code == 0);
  CHECK(run_cli("verify j1").code == 0);

  const CliResult r = run_cli("--json verify witness 8");
  REQUIRE(r.code == 0);
  const ordered_json env = ordered_json::parse(r.out);
  CHECK(env["result"]["all_pass"] == true);
  REQUIRE(env["result"]["checks"].size() == 3);
  for (const auto& check : env["result"]["checks"]) CHECK(check["pass"] == true);

  const CliResult all = run_cli("--json verify all");
  REQUIRE(all.code == 0);
  const ordered_json env_all = ordered_json::parse(all.out);
  CHECK(env_all["result"]["all_pass"] == true);
  CHECK(env_all["result"]["checks"].size() == 58);  // 16 psl2 * 2 + j1 * 2 + 8 witness * 3
}

TEST_CASE("invalid requests exit 2") {
  CHECK(run_cli("spectrum L2 6").code == 2);            // not a prime power
  CHECK(run_cli("spectrum L2").code == 2);              // missing q
  CHECK(run_cli("spectrum J1 5").code == 2);            // spurious q
  CHECK(run_cli("spectrum Q 5").code == 2);             // unknown family
  CHECK(run_cli("audit R 81").code == 2);               // even exponent
  CHECK(run_cli("verify bogus").code == 2);             // unknown target
  CHECK(run_cli("").code == 2);                         // missing subcommand
  CHECK(run_cli("--frobnicate spectrum L2 7").code == 2);
  CHECK(run_cli("spectrum R 10460353203 --squared").code == 2);  // lcms overflow 64 bits
}

TEST_CASE("missing or corrupt generator data exits 5") {
  CHECK(run_cli("--j1-data /nonexistent/j1.txt verify j1").code == 5);

  const std::filesystem::path bad = scratch_dir() / "j1_bad.txt";
  std::ofstream out(bad);
  out << "GF 7\nDIM 7\n";
  out.close();
  CHECK(run_cli("--j1-data " + bad.string() + " verify j1").code == 5);
}

TEST_CASE("I/O failures exit 3") {
  CHECK(run_cli("graph L2 7 --dot /nonexistent-dir/out.dot").code == 3);
  CHECK(run_cli("--cache-dir /proc/not/writable spectrum L2 7").code == 3);
}

TEST_CASE("JSON output is byte-identical across runs and cache states") {
  const CliResult a = run_cli("--json spectrum R 243");
  const CliResult b = run_cli("--json spectrum R 243");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  const std::filesystem::path cache = scratch_dir() / "spectrum_cache";
  const CliResult cold = run_cli("--json --cache-dir " + cache.string() + " spectrum R 243");
  const CliResult warm = run_cli("--json --cache-dir " + cache.string() + " spectrum R 243");
  CHECK(cold.code == 0);
  CHECK(warm.code == 0);
  CHECK(cold.out == a.out);
  CHECK(warm.out == a.out);

  std::size_t entries = 0;
  std::string entry_name;
  for (const auto& e : std::filesystem::directory_iterator(cache)) {
    ++entries;
    entry_name = e.path().filename().string();
  }
  CHECK(entries == 1);
  CHECK(entry_name.size() == 21);  // 16 hex digits + ".json"
  CHECK(entry_name.find(".json") == 16);

  SECTION("--no-cache bypasses both read and write") {
    const CliResult bypass =
        run_cli("--json --cache-dir " + cache.string() + " --no-cache spectrum R 243");
    CHECK(bypass.out == a.out);
  }
  SECTION("the environment variable selects the cache directory") {
    const std::filesystem::path env_cache = scratch_dir() / "env_cache";
    const CliResult via_env = run_cli("--json spectrum R 243",
                                      "ORDSPEC_CACHE_DIR=" + env_cache.string() + " ");
    CHECK(via_env.code == 0);
    CHECK(via_env.out == a.out);
    CHECK(std::filesystem::exists(env_cache));
  }
}

TEST_CASE("human output is derived from the same envelope a cache hit returns") {
  const std::filesystem::path cache = scratch_dir() / "human_cache";
  const CliResult cold = run_cli("--cache-dir " + cache.string() + " audit R 243");
  const CliResult warm = run_cli("--cache-dir " + cache.string() + " audit R 243");
  CHECK(cold.code == 0);
  CHECK(warm.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out.find("witness") != std::string::npos);
}

TEST_CASE("help requests succeed") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("spectrum --help").code == 0);
}
