#include "clusterkit/seed.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace clusterkit {

std::map<int, std::string> Seed::default_generator_names(const std::vector<int>& vertices) {
    std::map<int, std::string> names;
    for (int v : vertices)
        names.emplace(v, "x" + std::to_string(v));
    return names;
}

namespace {

AmbientPtr ambient_from_names(const ExchangeQuiver& quiver,
                              const std::map<int, std::string>& generator_names) {
    std::vector<std::string> names;
    names.reserve(quiver.size());
    for (int v : quiver.vertices()) {
        auto it = generator_names.find(v);
        if (it == generator_names.end())
            throw unknown_vertex_error("no generator name for vertex " + std::to_string(v));
        names.push_back(it->second);
    }
    if (generator_names.size() != quiver.size())
        throw unknown_vertex_error("generator names reference vertices outside the quiver");
    return Ambient::make(std::move(names));
}

} // namespace

Seed::Seed(ExchangeQuiver quiver, std::map<int, std::string> generator_names,
           std::map<int, std::string> labels, bool frozen_invertible)
    : quiver_(std::move(quiver)),
      ambient_(ambient_from_names(quiver_, generator_names)),
      generator_names_(std::move(generator_names)),
      labels_(std::move(labels)),
      frozen_invertible_(frozen_invertible) {
    for (int v : quiver_.vertices())
        vars_.emplace(v, LaurentPolynomial::variable(ambient_, generator_names_.at(v)));
}

Seed::Seed(ExchangeQuiver quiver, AmbientPtr ambient, std::map<int, std::string> generator_names,
           std::map<int, LaurentPolynomial> vars, std::map<int, std::string> labels,
           bool frozen_invertible)
    : quiver_(std::move(quiver)),
      ambient_(std::move(ambient)),
      generator_names_(std::move(generator_names)),
      vars_(std::move(vars)),
      labels_(std::move(labels)),
      frozen_invertible_(frozen_invertible) {
    for (int v : quiver_.vertices()) {
        auto it = vars_.find(v);
        if (it == vars_.end())
            throw unknown_vertex_error("no variable for vertex " + std::to_string(v));
        if (!same_ambient(it->second.ambient(), ambient_))
            throw ambient_mismatch_error("variable at vertex " + std::to_string(v) +
                                         " lives over " + it->second.ambient()->to_string() +
                                         ", expected " + ambient_->to_string());
    }
    if (vars_.size() != quiver_.size())
        throw unknown_vertex_error("variables reference vertices outside the quiver");
}

const LaurentPolynomial& Seed::var(int vertex) const {
    auto it = vars_.find(vertex);
    if (it == vars_.end())
        throw unknown_vertex_error("unknown vertex " + std::to_string(vertex));
    return it->second;
}

const std::string& Seed::generator_name(int vertex) const {
    auto it = generator_names_.find(vertex);
    if (it == generator_names_.end())
        throw unknown_vertex_error("unknown vertex " + std::to_string(vertex));
    return it->second;
}

std::string Seed::label(int vertex) const {
    auto it = labels_.find(vertex);
    return it == labels_.end() ? std::string() : it->second;
}

bool Seed::operator==(const Seed& other) const noexcept {
    if (!(quiver_ == other.quiver_))
        return false;
    if (!same_ambient(ambient_, other.ambient_))
        return false;
    if (generator_names_ != other.generator_names_)
        return false;
    return vars_ == other.vars_;
}

LaurentPolynomial exchange_binomial(const Seed& s, int k) {
    if (!s.quiver().has_vertex(k))
        throw unknown_vertex_error("exchange at unknown vertex " + std::to_string(k));
    if (!s.quiver().is_mutable(k))
        throw frozen_vertex_error("exchange at frozen vertex " + std::to_string(k));
    LaurentPolynomial positive = LaurentPolynomial::constant(s.ambient(), Rational(1));
    LaurentPolynomial negative = LaurentPolynomial::constant(s.ambient(), Rational(1));
    for (int i : s.quiver().vertices()) {
        const int e = s.quiver().b(i, k);
        if (e > 0)
            positive *= s.var(i).power(e);
        else if (e < 0)
            negative *= s.var(i).power(-e);
    }
    return positive + negative;
}

Seed mutate_seed(const Seed& s, int k) {
    const LaurentPolynomial sum = exchange_binomial(s, k); // also checks k
    const LaurentPolynomial fresh = exact_divide(sum, s.var(k));
    std::map<int, LaurentPolynomial> vars = s.vars();
    vars.insert_or_assign(k, fresh);
    std::map<int, std::string> labels = s.labels();
    labels.erase(k);
    Seed out(mutate_quiver(s.quiver(), k), s.ambient(), s.generator_names(), std::move(vars),
             std::move(labels), s.frozen_invertible());
    out.cartan_name = s.cartan_name;
    out.word = s.word;
    return out;
}

Seed mutate_sequence(const Seed& s, const std::vector<int>& seq) {
    Seed current = s;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        try {
            current = mutate_seed(current, seq[t]);
        } catch (const not_divisible_error& e) {
            throw not_divisible_error("at position " + std::to_string(t + 1) + ": " + e.what());
        } catch (const frozen_vertex_error& e) {
            throw frozen_vertex_error("at position " + std::to_string(t + 1) + ": " + e.what());
        } catch (const unknown_vertex_error& e) {
            throw unknown_vertex_error("at position " + std::to_string(t + 1) + ": " + e.what());
        }
    }
    return current;
}

namespace {

/* Canonical fingerprint of a seed up to simultaneous relabeling: vertices
   are ordered by the rendering of their variable (ties by id) and the matrix
   is read in that order. */
std::string canonical_seed_key(const Seed& s) {
    struct Entry {
        std::string var;
        int id;
        bool mut;
    };
    std::vector<Entry> entries;
    for (int v : s.quiver().vertices())
        entries.push_back({s.var(v).to_string(), v, s.quiver().is_mutable(v)});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.var != b.var)
            return a.var < b.var;
        return a.id < b.id;
    });
    std::ostringstream key;
    for (const auto& e : entries)
        key << e.var << (e.mut ? "|m;" : "|f;");
    key << "#";
    for (const auto& row : entries)
        for (const auto& col : entries)
            if (col.mut)
                key << s.quiver().b(row.id, col.id) << ",";
    return key.str();
}

} // namespace

ClusterEnumeration enumerate_clusters(const Seed& s, std::size_t depth) {
    std::set<std::string> seen;
    std::map<std::string, LaurentPolynomial> variables;
    std::deque<std::pair<Seed, std::size_t>> queue;

    auto note_seed = [&](const Seed& seed) {
        for (int v : seed.quiver().vertices())
            variables.emplace(seed.var(v).to_string(), seed.var(v));
    };

    seen.insert(canonical_seed_key(s));
    note_seed(s);
    queue.emplace_back(s, 0);
    while (!queue.empty()) {
        auto [seed, dist] = std::move(queue.front());
        queue.pop_front();
        if (dist == depth)
            continue;
        for (int k : seed.quiver().mutable_vertices()) {
            Seed next = mutate_seed(seed, k);
            if (seen.insert(canonical_seed_key(next)).second) {
                note_seed(next);
                queue.emplace_back(std::move(next), dist + 1);
            }
        }
    }

    ClusterEnumeration out;
    out.seed_count = seen.size();
    out.variables.reserve(variables.size());
    for (auto& [key, poly] : variables) {
        (void)key;
        out.variables.push_back(std::move(poly));
    }
    return out;
}

} // namespace clusterkit
