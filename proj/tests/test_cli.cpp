#include <doctest.h>

#include <array>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "cospec/graph6.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(COSPEC_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("pineapple command") {
  const Result g6 = run("pineapple 4 4");
  CHECK(g6.status == 0);
  CHECK(g6.out == "G~aCC?\n");
  CHECK(run("pineapple 4 4 --graph6").out == g6.out);
  const Result dot = run("pineapple 3 1 --dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.find("0 -- 3;") != std::string::npos);
  CHECK(run("pineapple 2 1").status == 2);
  CHECK(run("pineapple 4").status == 2);
  CHECK(run("pineapple 4 4 --dot --graph6").status == 2);
}

TEST_CASE("charpoly command") {
  CHECK(run("charpoly --pineapple 4 4").out == "x^8 - 10x^6 - 8x^5 + 9x^4 + 8x^3\n");
  CHECK(run("charpoly --graph6 'G~aCC?'").out == "x^8 - 10x^6 - 8x^5 + 9x^4 + 8x^3\n");
  CHECK(run("charpoly --pineapple 4 4 --factored").out == "x^3(x + 1)^2(x^3 - 2x^2 - 7x + 8)\n");
  CHECK(run("charpoly --graph6 A_ --factored").status == 2);
  CHECK(run("charpoly --graph6 'A`'").status == 2);
  CHECK(run("charpoly").status == 2);
  CHECK(run("charpoly --graph6 A_ --pineapple 3 1").status == 2);
}

TEST_CASE("mate commands") {
  const Result p2 = run("mate prop2 2");
  CHECK(p2.status == 0);
  CHECK(lines(p2.out) == 2);
  CHECK(p2.out.find("cospectral yes") != std::string::npos);
  const Result p3 = run("mate prop3 2 5");
  CHECK(p3.status == 0);
  CHECK(lines(p3.out) == 2);
  const Result cor = run("mate corollary 6");
  CHECK(cor.status == 0);
  CHECK(lines(cor.out) == 3);
  CHECK(run("mate prop3 3 8").status == 2);
  CHECK(run("mate corollary 5").status == 2);
  CHECK(run("mate").status == 2);
}

TEST_CASE("cospectral command") {
  const std::string mate = first_line(run("mate prop2 2").out);
  const Result yes = run("cospectral 'G~aCC?' '" + mate + "'");
  CHECK(yes.status == 0);
  CHECK(yes.out == "cospectral\n");
  const Result no = run("cospectral 'G~aCC?' 'G~a??_'");
  CHECK(no.status == 3);
  CHECK(no.out == "not cospectral\n");
  CHECK(run("cospectral A_").status == 2);
}

TEST_CASE("census command") {
  const Result r = run("census --n 7 --edges 17 --connected");
  CHECK(r.status == 0);
  CHECK(lines(r.out) == 10);
  CHECK(run("census --n 7 --edges 17 --connected --workers 1").out == r.out);
  CHECK(lines(run("census --n 5").out) == 34);
  CHECK(run("census --n 11").status == 4);
  CHECK(run("census").status == 2);

  std::size_t pos = 0;
  while (pos < r.out.size()) {
    const std::size_t end = r.out.find('\n', pos);
    const std::string code = r.out.substr(pos, end - pos);
    CHECK(cospec::encode_graph6(cospec::decode_graph6(code)) == code);
    pos = end + 1;
  }
}

TEST_CASE("verify-ds command") {
  const std::string path = "cli_test_cert.json";
  const Result ds = run("verify-ds --pineapple 4 3 --out " + path);
  CHECK(ds.status == 0);
  const auto j = nlohmann::json::parse(ds.out);
  CHECK(j.at("mates").empty());
  CHECK(j.at("exhaustive") == true);
  std::ifstream f(path);
  CHECK(nlohmann::json::parse(f) == j);
  CHECK(run("recheck " + path).status == 0);

  const Result mates = run("verify-ds --graph6 'G~aCC?' --workers 2");
  CHECK(mates.status == 3);
  CHECK(nlohmann::json::parse(mates.out).at("mates").size() == 2);
  CHECK(run("verify-ds --pineapple 4 3 --max-n 6").status == 4);
  CHECK(run("verify-ds --pineapple 8 3").status == 4);
  CHECK(run("recheck no_such_file.json").status == 2);
}

TEST_CASE("lemma4-audit command") {
  const Result r = run("lemma4-audit --max-n 6");
  CHECK(r.status == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  CHECK(run("lemma4-audit --max-n 9").status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}
