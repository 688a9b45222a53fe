#include "seriate/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seriate {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

// Parses "int,int" rows after a mandatory header line.
std::vector<std::pair<int, long long>> read_two_column(std::istream& in,
                                                       const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(std::string(what) + ": empty input");
  std::vector<std::pair<int, long long>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long a, b;
    char comma;
    if (!(ss >> a >> comma >> b) || comma != ',')
      throw std::runtime_error(std::string(what) + ": bad row at line " +
                               std::to_string(lineno));
    rows.emplace_back(static_cast<int>(a), b);
  }
  if (rows.empty()) throw std::runtime_error(std::string(what) + ": no rows");
  return rows;
}

// Scatter (vertex, value) rows into a dense vector indexed by vertex.
std::vector<long long> by_vertex(const std::vector<std::pair<int, long long>>& rows,
                                 const char* what) {
  const int n = static_cast<int>(rows.size());
  std::vector<long long> vals(n);
  std::vector<char> seen(n, 0);
  for (const auto& [v, x] : rows) {
    if (v < 0 || v >= n || seen[v])
      throw std::runtime_error(std::string(what) +
                               ": vertex ids must be 0..n-1, each exactly once");
    seen[v] = 1;
    vals[v] = x;
  }
  return vals;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_partition_csv(std::ostream& out, const Partition& p) {
  out << "vertex,label\n";
  for (int v = 0; v < p.n(); ++v) out << v << ',' << p.label[v] << '\n';
}

void write_partition_csv_file(const std::string& path, const Partition& p) {
  auto out = open_out(path);
  write_partition_csv(out, p);
}

Partition read_partition_csv(std::istream& in) {
  auto vals = by_vertex(read_two_column(in, "partition csv"), "partition csv");
  std::vector<int> labels(vals.size());
  std::transform(vals.begin(), vals.end(), labels.begin(),
                 [](long long x) { return static_cast<int>(x); });
  return canonicalize_labels(labels);
}

Partition read_partition_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_partition_csv(in);
}

void write_ordering_csv(std::ostream& out, const Ordering& ord) {
  out << "vertex,position\n";
  for (int v = 0; v < ord.n(); ++v) out << v << ',' << ord.position[v] << '\n';
}

void write_ordering_csv_file(const std::string& path, const Ordering& ord) {
  auto out = open_out(path);
  write_ordering_csv(out, ord);
}

Ordering read_ordering_csv(std::istream& in) {
  auto vals = by_vertex(read_two_column(in, "ordering csv"), "ordering csv");
  Ordering ord;
  ord.position.resize(vals.size());
  std::transform(vals.begin(), vals.end(), ord.position.begin(),
                 [](long long x) { return static_cast<int>(x); });
  inverse(ord);  // validates that positions form a bijection
  return ord;
}

Ordering read_ordering_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_ordering_csv(in);
}

void write_reorder_csv(std::ostream& out, const Graph& g, const Ordering& ord,
                       const Partition& p) {
  if (ord.n() != g.n || p.n() != g.n)
    throw std::invalid_argument("reorder csv: size mismatch");
  std::vector<std::array<int, 3>> rows;
  rows.reserve(2 * g.edges.size());
  for (auto [u, v] : g.edges) {
    rows.push_back({ord.position[u], ord.position[v], p.label[u]});
    rows.push_back({ord.position[v], ord.position[u], p.label[v]});
  }
  std::sort(rows.begin(), rows.end());
  out << "row,col,group\n";
  for (const auto& r : rows) out << r[0] << ',' << r[1] << ',' << r[2] << '\n';
}

void write_reorder_csv_file(const std::string& path, const Graph& g,
                            const Ordering& ord, const Partition& p) {
  auto out = open_out(path);
  write_reorder_csv(out, g, ord, p);
}

}  // namespace seriate
