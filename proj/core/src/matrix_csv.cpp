#include <fstream>
#include <sstream>

#include "cayley/chroma.hpp"
#include "cayley/error.hpp"

namespace cayley::chroma {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(const std::string& s, const std::string& where) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer at " + where + ": '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer at " + where + ": '" + s + "'");
  return v;
}

}  // namespace

TotalColorMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty matrix file");
  auto header = split_row(line);
  if (header.empty() || !trim(header[0]).empty()) {
    throw UsageError("matrix header must start with an empty cell");
  }
  const auto n = header.size() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (parse_int(trim(header[j + 1]), "header column " + std::to_string(j + 1)) !=
        static_cast<int>(j)) {
      throw UsageError("matrix header must list vertices 0..n-1 in order");
    }
  }

  TotalColorMatrix t(n);
  std::vector<std::vector<int>> raw(n, std::vector<int>(n, 0));
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (row >= n) throw UsageError("matrix has more than " + std::to_string(n) + " rows");
    auto cells = split_row(line);
    if (cells.size() != n + 1) {
      throw UsageError("ragged row " + std::to_string(row) + ": " + std::to_string(cells.size()) +
                       " cells, expected " + std::to_string(n + 1));
    }
    if (parse_int(trim(cells[0]), "row label " + std::to_string(row)) != static_cast<int>(row)) {
      throw UsageError("row labels must be 0..n-1 in order");
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto c = trim(cells[j + 1]);
      if (c.empty()) continue;
      const auto where = "cell (" + std::to_string(row) + "," + std::to_string(j) + ")";
      raw[row][j] = parse_int(c, where);
      if (raw[row][j] <= 0) throw UsageError("color must be positive at " + where);
    }
    ++row;
  }
  if (row != n) throw UsageError("matrix has " + std::to_string(row) + " rows, expected " +
                                 std::to_string(n));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int a = raw[i][j], b = raw[j][i];
      if (a != 0 && b != 0 && a != b) {
        throw UsageError("asymmetric entries at cell (" + std::to_string(i) + "," +
                         std::to_string(j) + "): " + std::to_string(a) + " vs " + std::to_string(b));
      }
      // A cell given on one side only is completed from the other.
      t.set(i, j, a != 0 ? a : b);
    }
  }
  return t;
}

void format_matrix(std::ostream& out, const TotalColorMatrix& t) {
  for (std::size_t j = 0; j < t.n(); ++j) out << ',' << j;
  out << '\n';
  for (std::size_t i = 0; i < t.n(); ++i) {
    out << i;
    for (std::size_t j = 0; j < t.n(); ++j) {
      out << ',';
      if (auto c = t.at(i, j)) out << *c;
    }
    out << '\n';
  }
}

std::string matrix_to_string(const TotalColorMatrix& t) {
  std::ostringstream out;
  format_matrix(out, t);
  return out.str();
}

TotalColorMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file " + path);
  return parse_matrix(in);
}

void write_matrix(const std::string& path, const TotalColorMatrix& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write matrix file " + path);
  format_matrix(out, t);
}

}  // namespace cayley::chroma
