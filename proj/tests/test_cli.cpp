#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

const char* cli_path() {
  const char* p = std::getenv("BSLAB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "BSLAB_CLI must point at the bslab binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string write_space(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("certify exit codes and output") {
  auto space = write_space("/tmp/bslab_cli_w3.json",
                           R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^3"]})");

  auto good = run("certify --space " + space + " --phi \"z^3\" --ideal \"z+w\" --l 1");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("verified certificate") != std::string::npos);
  CHECK(good.output.find("z^2 - z*w + w^2") != std::string::npos);

  auto bad = run("certify --space " + space + " --phi \"w*z\" --ideal \"z+w\" --l 1");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("HYPOTHESIS_FAILED") != std::string::npos);
  CHECK(bad.output.find("-1") != std::string::npos);
}

TEST_CASE("verify round-trips a stored certificate") {
  auto space = write_space("/tmp/bslab_cli_w3.json",
                           R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^3"]})");
  auto produce = run("certify --space " + space +
                     " --phi \"z^3\" --ideal \"z+w\" --l 1 --out /tmp/bslab_cert.json");
  REQUIRE(produce.exit_code == 0);
  auto ok = run("verify --space " + space +
                " --phi \"z^3\" --ideal \"z+w\" --l 1 --cert /tmp/bslab_cert.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verified") != std::string::npos);
  auto wrong = run("verify --space " + space +
                   " --phi \"z^3 + 1\" --ideal \"z+w\" --l 1 --cert /tmp/bslab_cert.json");
  CHECK(wrong.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("certify --phi \"z\"").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  auto missing = run("jet --space /tmp/definitely_missing.json --poly \"z\"");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("resource cap reports exit 2 through the environment override") {
  auto space = write_space("/tmp/bslab_cli_w4.json",
                           R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^4"]})");
  const std::string cmd = std::string("BSLAB_DEGREE_CAP=1 ") + cli_path() + " certify --space " +
                          space + " --phi \"z^4\" --ideal \"z+w\" --l 1 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  CHECK(WEXITSTATUS(pclose(pipe)) == 2);
  CHECK(out.find("resource") != std::string::npos);
}

TEST_CASE("paper demo runs the worked examples") {
  auto demo1 = run("paper-demo --k 1");
  CHECK(demo1.exit_code == 0);
  CHECK(demo1.output.find("expected N = r+k-1 = 1: reproduced") != std::string::npos);

  auto demo3 = run("paper-demo --k 3");
  CHECK(demo3.exit_code == 0);
  CHECK(demo3.output.find("minimal N = 3") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::string args[] = {
      "paper-demo --k 2",
      "noetherian --space /tmp/bslab_cli_w3.json --format json",
      "closure --vars z,w --ideal \"z^2,w^2\" --mon \"z*w\" --power 1 --format json",
  };
  write_space("/tmp/bslab_cli_w3.json", R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^3"]})");
  for (const auto& a : args) {
    auto first = run(a);
    auto second = run(a);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("closure membership exit codes") {
  auto member = run("closure --vars z,w --ideal \"z^2,w^2\" --mon \"z*w\" --power 1");
  CHECK(member.exit_code == 0);
  CHECK(member.output.find("member") != std::string::npos);
  auto non = run("closure --vars z,w --ideal \"z^2,w^2\" --mon \"z\" --power 1");
  CHECK(non.exit_code == 1);
  CHECK(non.output.find("non-member") != std::string::npos);
}

TEST_CASE("jet, size-check, witness and search-n subcommands") {
  auto space = write_space("/tmp/bslab_cli_w3.json",
                           R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^3"]})");
  auto jet = run("jet --space " + space + " --poly \"z + 3*z*w + w^5\"");
  CHECK(jet.exit_code == 0);
  CHECK(jet.output == "w^(0): z\nw^(1): 3*z\nw^(2): 0\n");

  auto size = run("size-check --space " + space + " --phi \"w*z\" --ideal \"z+w\" --l 1");
  CHECK(size.exit_code == 1);

  auto wit = run("witness --k 3 --p 1");
  CHECK(wit.exit_code == 0);
  CHECK(wit.output.find("z*w") != std::string::npos);
  CHECK(wit.output.find("contract: holds") != std::string::npos);

  auto sea = run("search-n --k 3");
  CHECK(sea.exit_code == 0);
  CHECK(sea.output.find("minimal N = 3") != std::string::npos);
}
