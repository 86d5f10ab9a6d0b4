#include "clusterkit/quiver.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace clusterkit {

ExchangeQuiver::ExchangeQuiver(std::vector<int> vertices, std::vector<int> mutable_vertices,
                               const std::map<std::pair<int, int>, int>& entries)
    : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        auto [it, inserted] = pos_.emplace(vertices_[i], static_cast<int>(i));
        (void)it;
        if (!inserted)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(vertices_[i]));
    }
    is_mutable_.assign(vertices_.size(), 0);
    for (int id : mutable_vertices) {
        auto it = pos_.find(id);
        if (it == pos_.end())
            throw unknown_vertex_error("mutable vertex " + std::to_string(id) + " is not a vertex");
        is_mutable_[static_cast<std::size_t>(it->second)] = 1;
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (is_mutable_[i])
            mutable_.push_back(vertices_[i]);

    b_.assign(vertices_.size() * vertices_.size(), 0);
    for (const auto& [key, value] : entries) {
        const auto& [row, col] = key;
        auto ri = pos_.find(row);
        auto ci = pos_.find(col);
        if (ri == pos_.end() || ci == pos_.end())
            throw unknown_vertex_error("matrix entry (" + std::to_string(row) + ", " +
                                       std::to_string(col) + ") references an unknown vertex");
        if (!is_mutable_[static_cast<std::size_t>(ci->second)] && value != 0)
            throw std::invalid_argument("matrix entry (" + std::to_string(row) + ", " +
                                        std::to_string(col) + ") has a frozen column");
        b_[static_cast<std::size_t>(ri->second) * vertices_.size() +
           static_cast<std::size_t>(ci->second)] = value;
    }
}

bool ExchangeQuiver::has_vertex(int id) const noexcept {
    return pos_.find(id) != pos_.end();
}

int ExchangeQuiver::position(int id) const {
    auto it = pos_.find(id);
    if (it == pos_.end())
        throw unknown_vertex_error("unknown vertex " + std::to_string(id));
    return it->second;
}

bool ExchangeQuiver::is_mutable(int id) const {
    return is_mutable_[static_cast<std::size_t>(position(id))] != 0;
}

int ExchangeQuiver::b(int i, int j) const {
    const auto pi = static_cast<std::size_t>(position(i));
    const auto pj = static_cast<std::size_t>(position(j));
    return b_[pi * vertices_.size() + pj];
}

bool ExchangeQuiver::operator==(const ExchangeQuiver& other) const noexcept {
    return vertices_ == other.vertices_ && is_mutable_ == other.is_mutable_ && b_ == other.b_;
}

std::map<std::pair<int, int>, int> ExchangeQuiver::arrows() const {
    std::map<std::pair<int, int>, int> out;
    const std::size_t n = vertices_.size();
    for (std::size_t pj = 0; pj < n; ++pj) {
        for (std::size_t pi = 0; pi < n; ++pi) {
            if (pi == pj)
                continue;
            const int i = vertices_[pi];
            const int j = vertices_[pj];
            if (is_mutable_[pj]) {
                const int e = b_[pi * n + pj];
                if (e > 0)
                    out[{i, j}] += e;
            } else if (is_mutable_[pi]) {
                // Arrows into a frozen vertex only show up in its row.
                const int e = b_[pj * n + pi];
                if (e < 0)
                    out[{i, j}] += -e;
            }
        }
    }
    return out;
}

QuiverReport validate_quiver(const ExchangeQuiver& q) {
    QuiverReport report;
    const auto& verts = q.vertices();
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a; b < verts.size(); ++b) {
            const int i = verts[a];
            const int j = verts[b];
            if (!q.is_mutable(i) || !q.is_mutable(j))
                continue;
            const int bij = q.b(i, j);
            const int bji = q.b(j, i);
            if (bij != -bji) {
                report.ok = false;
                report.violations.push_back("principal part not skew-symmetric at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + "): b(" +
                                            std::to_string(i) + "," + std::to_string(j) + ")=" +
                                            std::to_string(bij) + ", b(" + std::to_string(j) + "," +
                                            std::to_string(i) + ")=" + std::to_string(bji));
            }
        }
    }
    return report;
}

namespace {

void require_mutable(const ExchangeQuiver& q, int k) {
    if (!q.has_vertex(k))
        throw unknown_vertex_error("mutation vertex " + std::to_string(k) + " is not a vertex");
    if (!q.is_mutable(k))
        throw frozen_vertex_error("mutation at frozen vertex " + std::to_string(k));
}

int sgn(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

ExchangeQuiver mutate_quiver_matrix_rule(const ExchangeQuiver& q, int k) {
    require_mutable(q, k);
    std::map<std::pair<int, int>, int> entries;
    for (int i : q.vertices()) {
        for (int j : q.mutable_vertices()) {
            if (i == j)
                continue;
            int nb;
            if (i == k || j == k) {
                nb = -q.b(i, j);
            } else {
                nb = q.b(i, j) + sgn(q.b(i, k)) * std::max(0, q.b(i, k) * q.b(k, j));
            }
            if (nb != 0)
                entries[{i, j}] = nb;
        }
    }
    return ExchangeQuiver(q.vertices(), q.mutable_vertices(), entries);
}

ExchangeQuiver mutate_quiver_graph_rule(const ExchangeQuiver& q, int k) {
    require_mutable(q, k);
    std::map<std::pair<int, int>, int> arr = q.arrows();

    // Step 1: for each path i -> k -> j add a composite arrow i -> j.
    std::map<std::pair<int, int>, int> composites;
    for (const auto& [edge_in, p] : arr) {
        if (edge_in.second != k)
            continue;
        const int i = edge_in.first;
        for (const auto& [edge_out, m] : arr) {
            if (edge_out.first != k)
                continue;
            const int j = edge_out.second;
            if (i == j)
                continue;
            composites[{i, j}] += p * m;
        }
    }
    for (const auto& [edge, m] : composites)
        arr[edge] += m;

    // Step 2: reverse every arrow incident to k.
    std::map<std::pair<int, int>, int> reversed;
    for (const auto& [edge, m] : arr) {
        if (edge.first == k || edge.second == k)
            reversed[{edge.second, edge.first}] += m;
        else
            reversed[edge] += m;
    }

    // Step 3: cancel directed 2-cycles; drop frozen-frozen arrows.
    std::map<std::pair<int, int>, int> net;
    for (const auto& [edge, m] : reversed) {
        const auto& [i, j] = edge;
        if (!q.is_mutable(i) && !q.is_mutable(j))
            continue;
        auto rev = reversed.find({j, i});
        const int opposite = rev == reversed.end() ? 0 : rev->second;
        if (m > opposite)
            net[edge] = m - opposite;
    }

    std::map<std::pair<int, int>, int> entries;
    for (const auto& [edge, m] : net) {
        const auto& [i, j] = edge;
        if (q.is_mutable(j))
            entries[{i, j}] += m;
        if (q.is_mutable(i))
            entries[{j, i}] -= m;
    }
    return ExchangeQuiver(q.vertices(), q.mutable_vertices(), entries);
}

ExchangeQuiver mutate_quiver(const ExchangeQuiver& q, int k) {
    ExchangeQuiver by_matrix = mutate_quiver_matrix_rule(q, k);
    const ExchangeQuiver by_graph = mutate_quiver_graph_rule(q, k);
    if (!(by_matrix == by_graph))
        throw internal_error("mutation rules disagree at vertex " + std::to_string(k));
    return by_matrix;
}

ExchangeQuiver full_subquiver(const ExchangeQuiver& q, const std::vector<int>& keep) {
    std::set<int> keep_set;
    for (int id : keep) {
        if (!q.has_vertex(id))
            throw unknown_vertex_error("subquiver vertex " + std::to_string(id) + " is not a vertex");
        keep_set.insert(id);
    }
    std::vector<int> verts;
    std::vector<int> muts;
    for (int id : q.vertices()) {
        if (!keep_set.count(id))
            continue;
        verts.push_back(id);
        if (q.is_mutable(id))
            muts.push_back(id);
    }
    std::map<std::pair<int, int>, int> entries;
    for (int i : verts)
        for (int j : muts)
            if (int e = q.b(i, j); e != 0)
                entries[{i, j}] = e;
    return ExchangeQuiver(verts, muts, entries);
}

std::string to_dot(const ExchangeQuiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int id : q.vertices()) {
        out << "  \"" << id << "\" [shape=" << (q.is_mutable(id) ? "circle" : "box") << "];\n";
    }
    const auto arr = q.arrows();
    // Emit in vertex-list order for stable output.
    std::map<int, int> order;
    for (std::size_t i = 0; i < q.vertices().size(); ++i)
        order[q.vertices()[i]] = static_cast<int>(i);
    std::vector<std::pair<std::pair<int, int>, int>> sorted(arr.begin(), arr.end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        return std::pair(order[a.first.first], order[a.first.second]) <
               std::pair(order[b.first.first], order[b.first.second]);
    });
    for (const auto& [edge, m] : sorted) {
        out << "  \"" << edge.first << "\" -> \"" << edge.second << "\"";
        if (m > 1)
            out << " [label=\"" << m << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace clusterkit
