#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "primrt/cli.hpp"
#include "primrt/figures.hpp"
#include "primrt/matrix_io.hpp"

using namespace primrt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

}  // namespace

// ----------------------------------------------------------------- matrix I/O

TEST_CASE("serialize / parse round trip") {
  for (const auto& name : builtin_names()) {
    const auto set = *builtin_set(name);
    CHECK(parse_set_string(serialize(set)) == set);
  }
}

TEST_CASE("builtins match the printed matrices") {
  const auto ex = *builtin_set("example");
  CHECK(ex.size() == 2);
  CHECK(ex[0].to_string() == "010\n001\n100\n");
  CHECK(ex[1].to_string() == "010\n101\n001\n");
  const auto cpr = *builtin_set("cpr");
  CHECK(cpr[0].to_string() == "0010\n1100\n1000\n0001\n");
  CHECK(cpr[1].to_string() == "1000\n0010\n0001\n0100\n");
  const auto kari = *builtin_set("kari");
  CHECK(kari[0].to_string() == "100100\n010000\n001000\n000010\n000100\n000001\n");
  CHECK(kari[1].to_string() == "000010\n001000\n000100\n010000\n000001\n100000\n");
  CHECK_FALSE(builtin_set("nope").has_value());
}

TEST_CASE("parser: normalization, comments, CR, names") {
  const auto s = parse_set_string("# two matrices\r\n2 2\r\n# name: X\r\n20\r\n01\r\n\r\n11\r\n10\r\n");
  CHECK(s.n() == 2);
  CHECK(s[0] == BoolMatrix{{1, 0}, {0, 1}});
  CHECK(s[1] == BoolMatrix{{1, 1}, {1, 0}});
  CHECK(s.label(0) == "X");
  CHECK(s.label(1) == "M2");
}

TEST_CASE("parser errors carry the line number") {
  auto line_of = [](const std::string& text) {
    try {
      (void)parse_set_string(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(line_of("4 1\n1000\n010\n0010\n0001\n").find("line 3") != std::string::npos);
  CHECK(line_of("2 1\n1x\n01\n").find("line 2") != std::string::npos);
  CHECK(line_of("2 2\n10\n01\n").find("found 1") != std::string::npos);
  CHECK(line_of("2 1\n10\n\n01\n").find("line 3") != std::string::npos);
  CHECK(line_of("two one\n").find("line 1") != std::string::npos);
  CHECK(line_of("").find("missing header") != std::string::npos);
}

// ------------------------------------------------------------------------ CLI

TEST_CASE("exponent of the example") {
  const auto r = run({"exponent", "--builtin", "example"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("file input") {
  const auto p = temp_file("primrt_cli_example.txt", serialize(*builtin_set("example")));
  const auto r = run({"exponent", "--file", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
  const auto missing = run({"exponent", "--file", (p.string() + ".missing")});
  CHECK(missing.code == exit_code(ErrorKind::parse));
  CHECK(missing.err.rfind("error[parse]", 0) == 0);
  std::filesystem::remove(p);
}

TEST_CASE("check, krt, automata, heuristic, witness") {
  auto r = run({"check", "--builtin", "cpr"});
  CHECK(r.code == 0);
  CHECK(r.out.find("primitive: yes") != std::string::npos);

  r = run({"krt", "--builtin", "cpr"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4,5,") != std::string::npos);

  r = run({"automata", "--builtin", "example"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reset_threshold: 2\n") != std::string::npos);
  CHECK(r.out.find("reset_threshold_transposed: 3\n") != std::string::npos);
  CHECK(r.out.find("sandwich: 2 <= 7 <= 7") != std::string::npos);

  r = run({"heuristic", "--builtin", "kari", "--mode", "any"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("mode: any\n", 0) == 0);

  r = run({"witness", "--n", "10", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: yes") != std::string::npos);
}

TEST_CASE("bounds table: F <= B on every k") {
  const auto r = run({"bounds", "--n", "10", "--k-max", "10"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(rows.front() == std::vector<std::string>{"n", "k", "quantity", "value", "ceiling"});
  std::map<std::string, Rational> b, f;
  for (const auto& row : rows) {
    if (row[2] == "B") b.emplace(row[1], parse_rational(row[3]));
    if (row[2] == "F") f.emplace(row[1], parse_rational(row[3]));
  }
  CHECK(b.size() == 9);
  for (const auto& [k, v] : f) CHECK(v <= b.at(k));
  CHECK(r.out.find("10,4,B,193/3,65\n") != std::string::npos);
  CHECK(r.out.find("10,3,tilde_u_h2,20,20\n") != std::string::npos);
}

TEST_CASE("figures are deterministic CSV") {
  const auto a = run({"figure", "fig9", "--n-max", "300"});
  const auto b = run({"figure", "fig9", "--n-max", "300"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::set<std::string> quantities;
  for (const auto& row : csv(a.out)) quantities.insert(row[2]);
  CHECK(quantities == std::set<std::string>{"quantity", "F", "B", "szykula", "n3_over_3"});

  for (const char* name : {"fig2a", "fig2b", "fig7"}) {
    const auto r = run({"figure", name, "--n", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(CsvTable::header, 0) == 0);
  }
  auto r = run({"figure", "fig3", "--builtin", "kari"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eppstein_specific") != std::string::npos);
  r = run({"figure", "fig4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("21,4,B,") != std::string::npos);
  r = run({"figure", "fig5", "--builtin", "cpr"});
  CHECK(r.out.find("4,4,rt_exact,5,5") != std::string::npos);
  r = run({"figure", "fig6", "--k", "10", "--n-max", "40"});
  CHECK(r.code == 0);
  r = run({"figure", "fig8", "--k", "7", "--k-max", "8", "--n-max", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("200,7,threshold,54,54") != std::string::npos);
}

TEST_CASE("errors: categories and exit codes") {
  auto r = run({"frobnicate"});
  CHECK(r.code == exit_code(ErrorKind::usage));
  CHECK(r.err.rfind("error[usage]", 0) == 0);

  r = run({"exponent", "--builtin", "example", "--bogus"});
  CHECK(r.code == exit_code(ErrorKind::usage));

  r = run({"exponent"});
  CHECK(r.code == exit_code(ErrorKind::usage));

  r = run({"figure", "fig42"});
  CHECK(r.code == exit_code(ErrorKind::usage));

  r = run({"figure", "fig3"});
  CHECK(r.code == exit_code(ErrorKind::usage));

  r = run({"bounds", "--n", "5", "--k-max", "9"});
  CHECK(r.code == exit_code(ErrorKind::out_of_range));
  CHECK(r.err.rfind("error[out-of-range]", 0) == 0);

  r = run({"exponent", "--builtin", "example", "--max-depth", "3"});
  CHECK(r.code == exit_code(ErrorKind::limit_exhausted));

  r = run({"automata", "--builtin", "kari", "--letter-cap", "2"});
  CHECK(r.code == exit_code(ErrorKind::cap_exceeded));
  CHECK(r.err.rfind("error[cap-exceeded]", 0) == 0);

  const auto p = temp_file("primrt_cli_cycle.txt", "3 1\n010\n001\n100\n");
  r = run({"heuristic", "--file", p.string()});
  CHECK(r.code == exit_code(ErrorKind::not_primitive));
  r = run({"check", "--file", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("primitive: no") != std::string::npos);
  std::filesystem::remove(p);

  const auto z = temp_file("primrt_cli_zero.txt", "2 1\n11\n00\n");
  r = run({"exponent", "--file", z.string()});
  CHECK(r.code == exit_code(ErrorKind::not_nz));
  std::filesystem::remove(z);

  std::set<int> codes;
  for (auto k : {ErrorKind::dimension, ErrorKind::not_nz, ErrorKind::out_of_range, ErrorKind::parse,
                 ErrorKind::cap_exceeded, ErrorKind::limit_exhausted, ErrorKind::not_primitive,
                 ErrorKind::no_path, ErrorKind::usage})
    codes.insert(exit_code(k));
  CHECK(codes.size() == 9);
  CHECK(codes.count(0) == 0);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("figure") != std::string::npos);
}
