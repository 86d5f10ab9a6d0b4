#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/quiver.hpp"
#include "clusterkit/seed.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace clusterkit {

/* A seed pattern's ambient data: quiver plus one generator name per vertex.
   This is what a morphism needs to know about each end; the actual cluster
   variables play no role. */
class SeedContext {
public:
    SeedContext(ExchangeQuiver quiver, std::map<int, std::string> generator_names);
    static SeedContext of(const Seed& seed);

    const ExchangeQuiver& quiver() const noexcept { return quiver_; }
    const std::map<int, std::string>& generator_names() const noexcept { return generator_names_; }
    const std::string& generator_name(int vertex) const;
    /* Vertex carrying the given generator, -1 when absent. */
    int vertex_of(const std::string& name) const noexcept;
    const AmbientPtr& ambient() const noexcept { return ambient_; }

    /* Seed whose variable at each vertex is its own generator. */
    Seed initial_seed() const;

    bool operator==(const SeedContext& other) const noexcept;

private:
    ExchangeQuiver quiver_;
    std::map<int, std::string> generator_names_;
    AmbientPtr ambient_;
};

/* Ring map between seed patterns determined by a partial vertex map: the
   generator at a killed vertex goes to 1, every other generator goes to the
   generator at its image vertex. */
class ClusterMorphism {
public:
    ClusterMorphism(SeedContext source, SeedContext target, std::map<int, int> vertex_map,
                    std::set<int> kill_set);

    const SeedContext& source() const noexcept { return source_; }
    const SeedContext& target() const noexcept { return target_; }
    const std::map<int, int>& vertex_map() const noexcept { return vertex_map_; }
    const std::set<int>& kill_set() const noexcept { return kill_set_; }

    bool kills(int vertex) const noexcept { return kill_set_.count(vertex) > 0; }
    bool maps(int vertex) const noexcept { return vertex_map_.count(vertex) > 0; }
    int image(int vertex) const; // throws on killed/unknown vertices

    /* Sorted image of the surviving vertices. */
    std::vector<int> image_vertices() const;

    bool operator==(const ClusterMorphism& other) const noexcept;

private:
    SeedContext source_;
    SeedContext target_;
    std::map<int, int> vertex_map_;
    std::set<int> kill_set_;
};

struct MorphismViolation {
    std::string condition;
    std::string detail;
};

struct MorphismReport {
    bool ok = true;
    std::vector<MorphismViolation> violations;
};

/* Static validity checks: surviving mutable vertices map to mutable
   vertices ("condition 2a"), exchange-matrix signs are compatible
   ("condition 3"), the vertex map is injective, matrix entries transport
   equally ("matrix transport"), and nothing couples the image to the rest of
   the target ("image coupling"). The dynamic mutation-commutation condition
   is checked separately on bounded sequences by commutes_with_mutation. */
MorphismReport validate_morphism(const ClusterMorphism& phi);

enum class ElementaryKind { freezing, similarity, deleting, embedding };

struct ElementaryData {
    std::set<int> subset;        // freezing / deleting / embedding
    std::map<int, int> relabel;  // similarity
};

/* Canonical constructors for the four elementary kinds. Each derives the
   dependent end of the map from the given one. */
ClusterMorphism make_freezing(const SeedContext& target, const std::set<int>& newly_mutable);
ClusterMorphism make_similarity(const SeedContext& source, const std::map<int, int>& relabel,
                                std::map<int, std::string> target_generator_names = {});
ClusterMorphism make_deleting(const SeedContext& source, const std::set<int>& killed);
/* Requires zero coupling between `outside` and the rest of the target. */
ClusterMorphism make_embedding(const SeedContext& target, const std::set<int>& outside);

/* Checked constructor taking both ends: derives the dependent end as the
   canonical constructors do and verifies the given context agrees
   (hypothesis_violated_error otherwise). */
ClusterMorphism make_elementary(ElementaryKind kind, const ElementaryData& data,
                                const SeedContext& source, const SeedContext& target);

/* outer after inner; inner's target must equal outer's source. The result is
   re-validated and invalid_morphism_error is raised if that fails. */
ClusterMorphism compose(const ClusterMorphism& outer, const ClusterMorphism& inner);

/* Induced ring map on Laurent polynomials over the source ambient. */
LaurentPolynomial apply(const ClusterMorphism& phi, const LaurentPolynomial& f);

/* Membership in the kernel ideal (generated by g - 1 over killed generators
   g). Computed both as apply(phi, f) = 0 and by specializing the killed
   generators to 1; the two must agree. */
bool kernel_contains(const ClusterMorphism& phi, const LaurentPolynomial& f);

struct Decomposition {
    std::set<int> kill;               // vertices whose generators die
    std::map<int, int> relabel;       // induced bijection on the survivors
    std::set<int> unfrozen;           // target-mutable vertices not hit by a mutable vertex
    std::set<int> complement;         // target vertices outside the image
    ClusterMorphism deleting;
    ClusterMorphism similarity;
    ClusterMorphism freezing;
    ClusterMorphism embedding;
};

/* Factors a validated morphism as embedding ∘ freezing ∘ similarity ∘
   deleting and checks the recomposition reproduces it on every generator. */
Decomposition decompose(const ClusterMorphism& phi);

/* Sorted image vertex set; verifies no matrix entry couples the image to its
   complement and that the image is a union of connected components of the
   target (not_a_component_error otherwise). */
std::vector<int> image_component(const ClusterMorphism& phi);

/* Dynamic check of mutation commutation: mutate `s` along `seq` in the
   source, mutate the target's initial seed along the mapped sequence, and
   compare through the morphism at every surviving vertex. Sequence entries
   must be mutable and not killed. */
bool commutes_with_mutation(const ClusterMorphism& phi, const std::vector<int>& seq,
                            const Seed& s);

} // namespace clusterkit
