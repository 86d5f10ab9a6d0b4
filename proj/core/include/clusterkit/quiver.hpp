#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace clusterkit {

struct QuiverReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/* Exchange matrix indexed by vertices x mutable vertices, wrapping the
   equivalent arrow picture (no loops, no 2-cycles, no arrows between two
   frozen vertices). Entries with a frozen column are not representable:
   passing one to the constructor throws. Instances are immutable. */
class ExchangeQuiver {
public:
    ExchangeQuiver(std::vector<int> vertices, std::vector<int> mutable_vertices,
                   const std::map<std::pair<int, int>, int>& entries);

    const std::vector<int>& vertices() const noexcept { return vertices_; }
    /* In vertex order. */
    const std::vector<int>& mutable_vertices() const noexcept { return mutable_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    bool has_vertex(int id) const noexcept;
    bool is_mutable(int id) const; // throws unknown_vertex_error on unknown id

    /* b(i, j); zero whenever j is frozen (no such column exists). */
    int b(int i, int j) const;

    bool operator==(const ExchangeQuiver& other) const noexcept;

    /* Arrow multiset derived from the matrix: (i -> j) -> multiplicity > 0.
       Assumes a valid quiver. */
    std::map<std::pair<int, int>, int> arrows() const;

private:
    int position(int id) const; // throws unknown_vertex_error

    std::vector<int> vertices_;
    std::vector<int> mutable_;
    std::vector<char> is_mutable_;
    std::vector<int> b_; // n*n row-major by position; frozen columns all zero
    std::map<int, int> pos_;
};

/* Skew-symmetry of the mutable principal part; frozen rows are
   unconstrained. Reports every failing pair. */
QuiverReport validate_quiver(const ExchangeQuiver& q);

/* Matrix mutation rule at mutable vertex k. */
ExchangeQuiver mutate_quiver_matrix_rule(const ExchangeQuiver& q, int k);

/* Three-step arrow rule at mutable vertex k: compose through k, reverse the
   arrows at k, cancel directed 2-cycles (and drop arrows between two frozen
   vertices). */
ExchangeQuiver mutate_quiver_graph_rule(const ExchangeQuiver& q, int k);

/* Runs both rules and cross-checks them; disagreement raises internal_error. */
ExchangeQuiver mutate_quiver(const ExchangeQuiver& q, int k);

/* Restriction to `keep` (vertex order inherited, frozen/mutable split
   inherited). */
ExchangeQuiver full_subquiver(const ExchangeQuiver& q, const std::vector<int>& keep);

/* Graphviz source: circles for mutable vertices, boxes for frozen ones, edge
   multiplicity as a label. Deterministic output. */
std::string to_dot(const ExchangeQuiver& q);

} // namespace clusterkit
