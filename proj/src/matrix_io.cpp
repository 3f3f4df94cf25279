#include "primrt/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "primrt/error.hpp"

namespace primrt {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

MatrixSet parse_set(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;

  std::vector<BoolMatrix> mats;
  std::vector<std::string> labels;
  std::string pending_label;
  BoolMatrix cur;
  std::size_t rows_read = 0;

  auto finish = [&] {
    mats.push_back(std::move(cur));
    labels.push_back(pending_label.empty() ? "M" + std::to_string(mats.size()) : pending_label);
    pending_label.clear();
    rows_read = 0;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (body.starts_with("name:")) pending_label = std::string(trim(body.substr(5)));
      continue;
    }
    if (!have_header) {
      if (line.empty()) continue;
      std::istringstream hs{std::string(line)};
      std::string extra;
      if (!(hs >> n >> m) || (hs >> extra)) fail(line_no, "expected header \"n m\"");
      if (n == 0 || m == 0) fail(line_no, "header needs n >= 1 and m >= 1");
      have_header = true;
      continue;
    }
    if (line.empty()) {
      if (rows_read != 0) {
        fail(line_no, "matrix " + std::to_string(mats.size() + 1) + " has " +
                          std::to_string(rows_read) + " rows, expected " + std::to_string(n));
      }
      continue;
    }
    if (mats.size() == m) fail(line_no, "more matrices than the header's m = " + std::to_string(m));
    if (line.size() != n) {
      fail(line_no, "row has " + std::to_string(line.size()) + " entries, expected " +
                        std::to_string(n));
    }
    if (rows_read == 0) cur = BoolMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
      const char c = line[j];
      if (c < '0' || c > '9') fail(line_no, std::string("invalid entry '") + c + "'");
      if (c != '0') cur.set(rows_read, j);
    }
    if (++rows_read == n) finish();
  }
  if (!have_header) fail(line_no, "missing header");
  if (rows_read != 0) fail(line_no, "truncated matrix at end of input");
  if (mats.size() != m) {
    fail(line_no, "header promises " + std::to_string(m) + " matrices, found " +
                      std::to_string(mats.size()));
  }
  return MatrixSet(std::move(mats), std::move(labels));
}

MatrixSet parse_set_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_set(in);
}

MatrixSet parse_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  try {
    return parse_set(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string serialize(const MatrixSet& set) {
  std::string out = std::to_string(set.n()) + " " + std::to_string(set.size()) + "\n";
  for (std::size_t g = 0; g < set.size(); ++g) {
    if (g != 0) out += "\n";
    out += "# name: " + set.label(g) + "\n";
    out += set[g].to_string();
  }
  return out;
}

std::vector<std::string> builtin_names() { return {"example", "cpr", "kari"}; }

std::optional<MatrixSet> builtin_set(std::string_view name) {
  if (name == "example") {
    return MatrixSet({BoolMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                      BoolMatrix{{0, 1, 0}, {1, 0, 1}, {0, 0, 1}}},
                     {"a", "b"});
  }
  if (name == "cpr") {
    return MatrixSet({BoolMatrix{{0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}},
                      BoolMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}},
                     {"a", "b"});
  }
  if (name == "kari") {
    return MatrixSet({BoolMatrix{{1, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1}},
                      BoolMatrix{{0, 0, 0, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1},
                                 {1, 0, 0, 0, 0, 0}}},
                     {"a", "b"});
  }
  return std::nullopt;
}

}  // namespace primrt
