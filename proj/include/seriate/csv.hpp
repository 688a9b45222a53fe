#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seriate/clustering.hpp"
#include "seriate/graph.hpp"
#include "seriate/ordering.hpp"

namespace seriate {

// Shortest decimal form that round-trips the exact double value.
std::string format_double(double x);

// "vertex,label" rows, one per vertex.
void write_partition_csv(std::ostream& out, const Partition& p);
void write_partition_csv_file(const std::string& path, const Partition& p);

// Reads a vertex,label CSV (header required); labels are canonicalized by
// first appearance, so arbitrary integer labels are accepted.
Partition read_partition_csv(std::istream& in);
Partition read_partition_csv_file(const std::string& path);

// "vertex,position" rows, one per vertex.
void write_ordering_csv(std::ostream& out, const Ordering& ord);
void write_ordering_csv_file(const std::string& path, const Ordering& ord);

Ordering read_ordering_csv(std::istream& in);
Ordering read_ordering_csv_file(const std::string& path);

// Reordered adjacency for plotting: one "row,col,group" line per directed
// edge, where row/col are the endpoint positions under ord and group is the
// cluster label of the row vertex. Rows are sorted by (row, col).
void write_reorder_csv(std::ostream& out, const Graph& g, const Ordering& ord,
                       const Partition& p);
void write_reorder_csv_file(const std::string& path, const Graph& g,
                            const Ordering& ord, const Partition& p);

}  // namespace seriate
