#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/quiver.hpp"
#include "clusterkit/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterkit {

/* Labelled seed: an exchange quiver together with one cluster variable per
   vertex, all expressed as Laurent polynomials over the initial ambient.
   Labels are presentation metadata and do not take part in equality. Frozen
   variables are not invertible unless frozen_invertible is set (the flag is
   carried and serialized; membership-style queries would widen with it). */
class Seed {
public:
    /* Initial seed: the variable at each vertex is its own generator. */
    Seed(ExchangeQuiver quiver, std::map<int, std::string> generator_names,
         std::map<int, std::string> labels = {}, bool frozen_invertible = false);

    /* Fully explicit (deserialization, mutation results). */
    Seed(ExchangeQuiver quiver, AmbientPtr ambient, std::map<int, std::string> generator_names,
         std::map<int, LaurentPolynomial> vars, std::map<int, std::string> labels,
         bool frozen_invertible);

    static std::map<int, std::string> default_generator_names(const std::vector<int>& vertices);

    const ExchangeQuiver& quiver() const noexcept { return quiver_; }
    const AmbientPtr& ambient() const noexcept { return ambient_; }
    const LaurentPolynomial& var(int vertex) const;
    const std::map<int, LaurentPolynomial>& vars() const noexcept { return vars_; }
    const std::string& generator_name(int vertex) const;
    const std::map<int, std::string>& generator_names() const noexcept { return generator_names_; }
    const std::map<int, std::string>& labels() const noexcept { return labels_; }
    std::string label(int vertex) const;
    bool frozen_invertible() const noexcept { return frozen_invertible_; }

    /* Optional provenance carried through serialization. */
    std::optional<std::string> cartan_name;
    std::optional<Word> word;

    /* Quiver + ambient + variables; labels and provenance excluded. */
    bool operator==(const Seed& other) const noexcept;

private:
    ExchangeQuiver quiver_;
    AmbientPtr ambient_;
    std::map<int, std::string> generator_names_;
    std::map<int, LaurentPolynomial> vars_;
    std::map<int, std::string> labels_;
    bool frozen_invertible_ = false;
};

/* The two-term exchange sum at mutable vertex k, read off column k of the
   exchange matrix: product over positive entries plus product over negative
   entries, empty products equal to 1. */
LaurentPolynomial exchange_binomial(const Seed& s, int k);

/* Mutation at mutable vertex k: replaces the variable at k by the exact
   quotient of the exchange sum by the old variable and mutates the quiver.
   A not_divisible_error here means the Laurent property failed, which
   indicates a bug; it is never swallowed. The label at k is cleared. */
Seed mutate_seed(const Seed& s, int k);

/* Left fold of mutate_seed; errors are annotated with the failing position
   (1-based). */
Seed mutate_sequence(const Seed& s, const std::vector<int>& seq);

struct ClusterEnumeration {
    /* Distinct cluster variables, sorted by their canonical rendering. */
    std::vector<LaurentPolynomial> variables;
    /* Seeds reached within the depth bound, up to simultaneous relabeling. */
    std::size_t seed_count = 0;
};

/* Breadth-first exploration of the mutation graph to the given depth.
   Deterministic. */
ClusterEnumeration enumerate_clusters(const Seed& s, std::size_t depth);

} // namespace clusterkit
