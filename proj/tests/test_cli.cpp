#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "covtype/cli.hpp"

using covtype::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json payload(const Result& r) { return json::parse(r.out); }

// Runs a shell pipeline through the installed binary; returns exit status
// of the last command and its standard output.
std::pair<int, std::string> shell(const std::string& command) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

const std::string cli = COVTYPE_CLI_PATH;
const std::string hollow = R"({"vertices":[0,1,2],"maximal_simplices":[[0,1],[1,2],[0,2]]})";

}  // namespace

TEST_CASE("gallery output pipes into verify-cover", "[cli]") {
  const auto [code, out] = shell(cli + " gallery torus-k7 | " + cli + " verify-cover");
  CHECK(code == 0);
  const auto j = json::parse(out);
  CHECK(j["verdict"] == "Good");
  CHECK(j["schema"] == 1);
  CHECK(j["size"] == 7);
}

TEST_CASE("bounds subcommand", "[cli]") {
  auto r = call({"bounds", "--bouquet", "h=10"});
  REQUIRE(r.code == 0);
  CHECK(payload(r)["lower"] == 6);
  CHECK(payload(r)["upper"] == 6);
  r = call({"bounds", "--surface", "g=1"});
  CHECK(payload(r)["lower"] == 7);
  CHECK(payload(r)["upper"] == 7);
  CHECK(payload(r)["chromatic_number"] == 7);
  r = call({"bounds", "--surface", "q=2"});
  CHECK(payload(r)["lower"] == 7);
  CHECK(payload(r)["upper"] == 8);
  r = call({"bounds"}, hollow);
  CHECK(payload(r)["lower"] == 3);
  CHECK(call({"bounds", "--surface", "x=1"}).code == 64);
  CHECK(call({"bounds", "--surface", "q=0"}).code == 65);
  CHECK(call({"bounds", "--surface", "g=1", "--bouquet", "h=1"}).code == 64);
}

TEST_CASE("homology and cup subcommands", "[cli]") {
  const auto rp2 = call({"gallery", "rp2"});
  REQUIRE(rp2.code == 0);
  auto r = call({"homology", "--field", "Z2"}, rp2.out);
  REQUIRE(r.code == 0);
  CHECK(payload(r)["betti"] == json::array({1, 1, 1}));
  CHECK(payload(r)["cup_h1_nonzero"] == true);
  r = call({"homology"}, rp2.out);
  CHECK(payload(r)["betti"] == json::array({1, 0, 0}));
  CHECK(payload(r)["euler"] == 1);
  r = call({"cup", "--field", "Z2"}, rp2.out);
  CHECK(payload(r)["h1_rank"] == 1);
  CHECK(payload(r)["nonzero"] == true);
  CHECK(call({"homology", "--field", "Z4"}, hollow).code == 65);
}

TEST_CASE("round trips through nerve and search", "[cli]") {
  const auto sphere = call({"gallery", "sphere-2"});
  const auto n = call({"nerve"}, sphere.out);
  REQUIRE(n.code == 0);
  CHECK(payload(call({"homology"}, n.out))["betti"] == json::array({1, 0, 1}));

  const auto none = call({"search", "--max-size", "2", "--universe", "all"}, hollow);
  CHECK(none.code == 1);
  CHECK(payload(none)["verdict"] == "none");
  const auto found = call({"search", "--max-size", "3", "--universe", "all"}, hollow);
  REQUIRE(found.code == 0);
  CHECK(payload(found)["size"] == 3);
  CHECK(payload(found)["strict"] == true);
  CHECK(call({"verify-cover"}, payload(found)["cover"].dump()).code == 0);
  CHECK(call({"search", "--max-size", "2", "--universe", "induced"}, hollow).code == 2);
  CHECK(call({"search", "--universe", "everything"}, hollow).code == 64);
}

TEST_CASE("verify-cover exit codes", "[cli]") {
  const std::string not_good =
      R"({"ambient":)" + hollow +
      R"(,"elements":[{"name":"a","maximal_simplices":[[0,1],[1,2]]},{"name":"b","maximal_simplices":[[0,2]]}]})";
  const auto r = call({"verify-cover"}, not_good);
  CHECK(r.code == 1);
  CHECK(payload(r)["witness"] == json::array({0, 1}));
  CHECK(r.err.find("witness: 0 1") != std::string::npos);

  const std::string path = R"({"vertices":[0,1,2,3],"maximal_simplices":[[0,1],[1,2],[2,3]]})";
  const std::string single = R"({"ambient":)" + path + R"(,"elements":[{"name":"p","maximal_simplices":[[0,1],[1,2],[2,3]]}]})";
  CHECK(call({"verify-cover"}, single).code == 0);
  CHECK(call({"verify-cover", "--budget-ms", "0"}, single).code == 2);
  ::setenv("COVERTYPE_BUDGET_MS", "0", 1);
  CHECK(call({"verify-cover"}, single).code == 2);
  ::unsetenv("COVERTYPE_BUDGET_MS");
  CHECK(call({"verify-cover", "--jobs", "4"}, single).code == 0);
}

TEST_CASE("errors", "[cli]") {
  auto r = call({"homology"}, R"({"maximal_simplices": [[1,2],)");
  CHECK(r.code == 64);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"homology"}, R"({"maximal_simplices": [[1,1]]})").code == 65);
  CHECK(call({"homology"}, R"({"vertices":[1],"maximal_simplices": [[1,2]]})").code == 65);
  CHECK(call({"homology"}, R"({"maximal_simplices": [[1.5]]})").code == 65);
  CHECK(call({"verify-cover"}, hollow).code == 65);
  CHECK(call({"gallery", "moebius"}).code == 64);
  CHECK(call({"gallery"}).code == 64);
  CHECK(call({"homology", "/nonexistent/file.json"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is byte-deterministic", "[cli]") {
  CHECK(call({"gallery", "klein8"}).out == call({"gallery", "klein8"}).out);
  const auto g = call({"gallery", "bouquet-7"});
  CHECK(call({"verify-cover", "--jobs", "3"}, g.out).out == call({"verify-cover"}, g.out).out);
}
