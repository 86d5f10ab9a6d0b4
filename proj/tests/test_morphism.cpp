#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clusterkit/errors.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/richardson.hpp"

#include "support.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace clusterkit;
using testkit::cnst;
using testkit::var;

namespace {

const CartanDatum A2 = CartanDatum::preset("A2");
const CartanDatum A3 = CartanDatum::preset("A3");

SeedContext rank2_mutable() {
    return testkit::context_of(ExchangeQuiver({1, 2}, {1, 2}, {{{1, 2}, 1}, {{2, 1}, -1}}));
}

bool has_condition(const MorphismReport& report, const std::string& name) {
    for (const MorphismViolation& v : report.violations)
        if (v.condition == name)
            return true;
    return false;
}

} // namespace

TEST_CASE("seed context basics") {
    SeedContext c = rank2_mutable();
    CHECK(c.generator_name(1) == "x1");
    CHECK(c.vertex_of("x2") == 2);
    CHECK(c.vertex_of("zz") == -1);
    CHECK(c.ambient()->size() == 2);
    Seed s = c.initial_seed();
    CHECK(s.var(1) == var(c.ambient(), "x1"));
    CHECK(SeedContext::of(s) == c);
    CHECK_THROWS(SeedContext(c.quiver(), {{1, "x1"}}));
}

TEST_CASE("constructor enforces the kill/map partition") {
    SeedContext c = rank2_mutable();
    CHECK_THROWS_AS(ClusterMorphism(c, c, {{1, 1}}, {}), invalid_morphism_error);
    CHECK_THROWS_AS(ClusterMorphism(c, c, {{1, 1}, {2, 2}}, {2}), invalid_morphism_error);
    CHECK_THROWS_AS(ClusterMorphism(c, c, {{1, 1}, {2, 9}}, {}), invalid_morphism_error);
    CHECK_THROWS_AS(ClusterMorphism(c, c, {{1, 1}, {9, 2}}, {2}), invalid_morphism_error);

    ClusterMorphism ok(c, c, {{1, 1}, {2, 2}}, {});
    CHECK(ok.maps(1));
    CHECK_FALSE(ok.kills(1));
    CHECK(ok.image(2) == 2);
    CHECK(ok.image_vertices() == std::vector<int>{1, 2});

    ClusterMorphism killer = make_deleting(c, {1});
    CHECK_THROWS_AS(killer.image(1), killed_vertex_error);
}

TEST_CASE("freezing goes from the frozen context to the mutable one") {
    SeedContext target = rank2_mutable();
    ClusterMorphism frz = make_freezing(target, {1});
    CHECK(frz.source().quiver().mutable_vertices() == std::vector<int>{2});
    CHECK(frz.target().quiver().mutable_vertices() == std::vector<int>{1, 2});
    CHECK(frz.kill_set().empty());
    CHECK(validate_morphism(frz).ok);

    /* Identity on variables. */
    LaurentPolynomial x1 = var(frz.source().ambient(), "x1");
    CHECK(apply(frz, x1) == var(frz.target().ambient(), "x1"));

    /* The dropped column is invisible from the source. */
    CHECK(frz.source().quiver().b(2, 1) == 0);
    CHECK(frz.target().quiver().b(2, 1) == -1);
}

TEST_CASE("similarity relabels vertices") {
    SeedContext c = rank2_mutable();
    ClusterMorphism sim = make_similarity(c, {{1, 2}, {2, 1}});
    CHECK(validate_morphism(sim).ok);
    CHECK(sim.image(1) == 2);
    AmbientPtr src = sim.source().ambient();
    AmbientPtr tgt = sim.target().ambient();
    CHECK(apply(sim, var(src, "x1")) == var(tgt, "x2"));
    CHECK(apply(sim, var(src, "x1") + var(src, "x2")) == var(tgt, "x2") + var(tgt, "x1"));

    /* Mutability travels with the relabeling into the derived target. */
    SeedContext mixed = testkit::context_of(ExchangeQuiver({1, 2}, {1}, {{{2, 1}, 1}}));
    ClusterMorphism swapped = make_similarity(mixed, {{1, 2}, {2, 1}});
    CHECK(swapped.target().quiver().is_mutable(2));
    CHECK_FALSE(swapped.target().quiver().is_mutable(1));
    CHECK(swapped.target().quiver().b(1, 2) == 1);
    CHECK(validate_morphism(swapped).ok);

    /* The relabeling must be a bijection defined on every vertex. */
    CHECK_THROWS_AS(make_similarity(c, {{1, 2}}), hypothesis_violated_error);
    CHECK_THROWS_AS(make_similarity(c, {{1, 3}, {2, 3}}), hypothesis_violated_error);
}

TEST_CASE("deleting restricts to the survivors") {
    Seed cell = build_nw_seed(A2, {1, 2, 1});
    SeedContext c = SeedContext::of(cell);
    ClusterMorphism del = make_deleting(c, {1});
    CHECK(del.kill_set() == std::set<int>{1});
    CHECK(del.target().quiver().vertices() == std::vector<int>{2, 3});
    CHECK(validate_morphism(del).ok);
    CHECK(apply(del, var(c.ambient(), "x1")) ==
          cnst(del.target().ambient(), 1));
}

TEST_CASE("embedding requires a decoupled complement") {
    /* 1 -> 2 decoupled from 3. */
    ExchangeQuiver good({1, 2, 3}, {1, 2, 3},
                        {{{1, 2}, 1}, {{2, 1}, -1}});
    ClusterMorphism emb = make_embedding(testkit::context_of(good), {3});
    CHECK(emb.source().quiver().vertices() == std::vector<int>{1, 2});
    CHECK(validate_morphism(emb).ok);
    CHECK(image_component(emb) == std::vector<int>{1, 2});

    ExchangeQuiver coupled({1, 2, 3}, {1, 2, 3},
                           {{{1, 2}, 1}, {{2, 1}, -1}, {{2, 3}, 1}, {{3, 2}, -1}});
    try {
        make_embedding(testkit::context_of(coupled), {3});
        FAIL("expected hypothesis_violated_error");
    } catch (const hypothesis_violated_error& e) {
        const std::string what = e.what();
        CHECK(what.find("2") != std::string::npos);
        CHECK(what.find("3") != std::string::npos);
    }
}

TEST_CASE("make_elementary cross-checks both ends") {
    SeedContext target = rank2_mutable();
    ClusterMorphism canonical = make_freezing(target, {1});
    ElementaryData data;
    data.subset = {1};
    ClusterMorphism checked =
        make_elementary(ElementaryKind::freezing, data, canonical.source(), target);
    CHECK(checked == canonical);

    /* A source that disagrees with the derived one is rejected. */
    CHECK_THROWS_AS(make_elementary(ElementaryKind::freezing, data, target, target),
                    hypothesis_violated_error);
}

TEST_CASE("validate_morphism flags the definition conditions") {
    CHECK(validate_morphism(richardson_morphism(A2, {1, 2, 1}, 1)).ok);

    /* Mutable source vertex mapped to a frozen target vertex. */
    SeedContext all_mut = rank2_mutable();
    SeedContext half = testkit::context_of(ExchangeQuiver({1, 2}, {2}, {{{1, 2}, 1}}));
    ClusterMorphism to_frozen(all_mut, half, {{1, 1}, {2, 2}}, {});
    MorphismReport r1 = validate_morphism(to_frozen);
    CHECK_FALSE(r1.ok);
    CHECK(has_condition(r1, "condition 2a"));

    /* Opposite orientations: b(1,2) = 1 against b'(1,2) = -1. */
    SeedContext fwd = rank2_mutable();
    SeedContext bwd = testkit::context_of(ExchangeQuiver({1, 2}, {1, 2},
                                                         {{{1, 2}, -1}, {{2, 1}, 1}}));
    ClusterMorphism flip(fwd, bwd, {{1, 1}, {2, 2}}, {});
    MorphismReport r2 = validate_morphism(flip);
    CHECK_FALSE(r2.ok);
    CHECK(has_condition(r2, "condition 3"));

    /* Non-injective map. */
    SeedContext pair = testkit::context_of(ExchangeQuiver({1, 2}, {}, {}));
    SeedContext one = testkit::context_of(ExchangeQuiver({1}, {}, {}));
    ClusterMorphism squash(pair, one, {{1, 1}, {2, 1}}, {});
    MorphismReport r3 = validate_morphism(squash);
    CHECK_FALSE(r3.ok);
    CHECK(has_condition(r3, "injectivity"));

    /* Entry magnitude mismatch passes condition 3 but not transport. */
    SeedContext weak = rank2_mutable();
    SeedContext strong = testkit::context_of(ExchangeQuiver({1, 2}, {1, 2},
                                                            {{{1, 2}, 2}, {{2, 1}, -2}}));
    ClusterMorphism stretch(weak, strong, {{1, 1}, {2, 2}}, {});
    MorphismReport r4 = validate_morphism(stretch);
    CHECK_FALSE(r4.ok);
    CHECK(has_condition(r4, "matrix transport"));
    CHECK_FALSE(has_condition(r4, "condition 3"));

    /* Image coupled to its complement. */
    SeedContext small = testkit::context_of(ExchangeQuiver({1}, {1}, {}));
    SeedContext big = testkit::context_of(
        ExchangeQuiver({1, 2}, {1, 2}, {{{1, 2}, 1}, {{2, 1}, -1}}));
    ClusterMorphism part(small, big, {{1, 1}}, {});
    MorphismReport r5 = validate_morphism(part);
    CHECK_FALSE(r5.ok);
    CHECK(has_condition(r5, "image coupling"));
}

TEST_CASE("apply is the induced ring map") {
    ClusterMorphism phi = richardson_morphism(A2, {1, 2, 1}, 1);
    AmbientPtr src = phi.source().ambient();
    AmbientPtr tgt = phi.target().ambient();

    CHECK(apply(phi, var(src, "x1") * var(src, "x2")) == var(tgt, "x2"));
    CHECK(apply(phi, cnst(src, 1)) == cnst(tgt, 1));
    CHECK(apply(phi, var(src, "x1", -3) * var(src, "x3")) == var(tgt, "x3"));

    LaurentPolynomial f = var(src, "x2") + var(src, "x3");
    LaurentPolynomial g = var(src, "x1") + cnst(src, 1);
    CHECK(apply(phi, f * g) == apply(phi, f) * apply(phi, g));
}

TEST_CASE("kernel membership agrees with specialization") {
    ClusterMorphism phi = richardson_morphism(A2, {1, 2, 1}, 1);
    AmbientPtr src = phi.source().ambient();
    LaurentPolynomial x1 = var(src, "x1");
    LaurentPolynomial x2 = var(src, "x2");

    CHECK(kernel_contains(phi, x1 - cnst(src, 1)));
    CHECK_FALSE(kernel_contains(phi, x2));
    CHECK(kernel_contains(phi, (x1 - cnst(src, 1)) * var(src, "x2", -3)));
    CHECK(kernel_contains(phi, LaurentPolynomial::zero(src)));
    CHECK_FALSE(kernel_contains(phi, x1));
}

TEST_CASE("decompose on the standard cases") {
    ClusterMorphism phi = richardson_morphism(A2, {1, 2, 1}, 1);
    Decomposition d = decompose(phi);
    CHECK(d.kill == std::set<int>{1});
    CHECK(d.relabel == std::map<int, int>{{2, 2}, {3, 3}});
    CHECK(d.unfrozen.empty());
    CHECK(d.complement.empty());

    SeedContext c = rank2_mutable();
    std::map<int, int> id{{1, 1}, {2, 2}};
    Decomposition di = decompose(make_similarity(c, id));
    CHECK(di.kill.empty());
    CHECK(di.relabel == id);
    CHECK(di.unfrozen.empty());
    CHECK(di.complement.empty());
}

TEST_CASE("bijective morphisms decompose with a trivial deleting factor") {
    SeedContext target = rank2_mutable();
    ClusterMorphism frz = make_freezing(target, {1});
    ClusterMorphism sim = make_similarity(target, {{1, 2}, {2, 1}});
    ClusterMorphism phi = compose(sim, frz);

    Decomposition d = decompose(phi);
    CHECK(d.kill.empty());
    CHECK(d.deleting.kill_set().empty());
    for (int v : d.deleting.source().quiver().vertices())
        CHECK(d.deleting.image(v) == v);
    CHECK(d.unfrozen == std::set<int>{2});
    CHECK(d.complement.empty());
    CHECK(d.relabel == std::map<int, int>{{1, 2}, {2, 1}});
}

TEST_CASE("decompose rejects invalid input") {
    SeedContext fwd = rank2_mutable();
    SeedContext bwd = testkit::context_of(ExchangeQuiver({1, 2}, {1, 2},
                                                         {{{1, 2}, -1}, {{2, 1}, 1}}));
    ClusterMorphism flip(fwd, bwd, {{1, 1}, {2, 2}}, {});
    CHECK_THROWS_AS(decompose(flip), invalid_morphism_error);
}

TEST_CASE("image_component returns the image or refuses") {
    ClusterMorphism phi = richardson_morphism(A2, {1, 2, 1}, 1);
    CHECK(image_component(phi) == std::vector<int>{2, 3});

    SeedContext c = rank2_mutable();
    ClusterMorphism ident = make_similarity(c, {{1, 1}, {2, 2}});
    CHECK(image_component(ident) == std::vector<int>{1, 2});

    /* Structurally fine, but the image is coupled to the complement. */
    SeedContext frozen2 = testkit::context_of(ExchangeQuiver({1, 2}, {}, {}));
    SeedContext coupled = testkit::context_of(ExchangeQuiver({1, 2}, {2}, {{{1, 2}, 1}}));
    ClusterMorphism bad(frozen2, coupled, {{1, 1}}, {2});
    CHECK_THROWS_AS(image_component(bad), not_a_component_error);
}

TEST_CASE("compose validates the composite") {
    /* Freezing after embedding with a coupled unfrozen column: each factor
       is valid, the composite is not. */
    ExchangeQuiver both_frozen({1, 2}, {}, {});
    SeedContext mid = testkit::context_of(both_frozen);
    ClusterMorphism inner = make_embedding(mid, {2});
    CHECK(validate_morphism(inner).ok);

    ExchangeQuiver unfrozen({1, 2}, {1}, {{{2, 1}, 1}});
    SeedContext top = testkit::context_of(unfrozen);
    ClusterMorphism outer = make_freezing(top, {1});
    CHECK(validate_morphism(outer).ok);
    CHECK(outer.source() == mid);

    CHECK_THROWS_AS(compose(outer, inner), invalid_morphism_error);

    /* Context mismatch between the factors. */
    SeedContext c = rank2_mutable();
    ClusterMorphism ident = make_similarity(c, {{1, 1}, {2, 2}});
    CHECK_THROWS_AS(compose(ident, inner), invalid_morphism_error);

    /* A compatible chain composes and agrees with pointwise application. */
    ClusterMorphism del = make_deleting(c, {1});
    ClusterMorphism sim = make_similarity(del.target(), {{2, 2}});
    ClusterMorphism chain = compose(sim, del);
    CHECK(chain.kill_set() == std::set<int>{1});
    for (const std::string& name : c.ambient()->names())
        CHECK(apply(chain, var(c.ambient(), name)) ==
              apply(sim, apply(del, var(c.ambient(), name))));
}

TEST_CASE("commutes_with_mutation") {
    SeedContext c = rank2_mutable();
    ClusterMorphism swap = make_similarity(c, {{1, 2}, {2, 1}});
    Seed s = c.initial_seed();
    CHECK(commutes_with_mutation(swap, {1}, s));
    CHECK(commutes_with_mutation(swap, {1, 2, 1}, s));

    ClusterMorphism phi = richardson_morphism(A3, {1, 2, 1, 3, 2, 1}, 1);
    Seed cell = build_nw_seed(A3, {1, 2, 1, 3, 2, 1});
    CHECK(commutes_with_mutation(phi, {2}, cell));
    CHECK(commutes_with_mutation(phi, {2, 3}, cell));
    CHECK(commutes_with_mutation(phi, {3, 2, 3}, cell));
    CHECK_THROWS_AS(commutes_with_mutation(phi, {1}, cell), killed_vertex_error);
    CHECK_THROWS_AS(commutes_with_mutation(phi, {4}, cell), frozen_vertex_error);

    /* The seed must live over the morphism's source context. */
    CHECK_THROWS_AS(commutes_with_mutation(swap, {1}, cell), hypothesis_violated_error);
}

TEST_CASE("random elementary chains validate and decompose") {
    testkit::SplitMix64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        testkit::RandomChain chain = testkit::random_morphism_chain(rng);
        MorphismReport report = validate_morphism(chain.phi);
        if (!report.ok) {
            for (const MorphismViolation& v : report.violations)
                MESSAGE(v.condition << ": " << v.detail);
        }
        REQUIRE(report.ok);
        Decomposition d = decompose(chain.phi);
        REQUIRE(d.kill == chain.phi.kill_set());

        /* Recompose explicitly and compare on every generator. */
        ClusterMorphism recomposed =
            compose(d.embedding, compose(d.freezing, compose(d.similarity, d.deleting)));
        REQUIRE(recomposed == chain.phi);
        const AmbientPtr& src = chain.phi.source().ambient();
        for (const std::string& name : src->names())
            REQUIRE(apply(recomposed, var(src, name)) == apply(chain.phi, var(src, name)));
    }
}
