#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "clusterkit/errors.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/richardson.hpp"

#include "support.hpp"

#include <set>
#include <vector>

using namespace clusterkit;

namespace {

const CartanDatum A2 = CartanDatum::preset("A2");
const CartanDatum A3 = CartanDatum::preset("A3");
const Word W6{1, 2, 1, 3, 2, 1};

} // namespace

TEST_CASE("exchange_entry on the A2 word") {
    Word w{1, 2, 1};
    /* Column of the single mutable vertex. */
    CHECK(exchange_entry(A2, w, 1, 1) == 0);
    CHECK(exchange_entry(A2, w, 2, 1) == -1);
    CHECK(exchange_entry(A2, w, 3, 1) == 1);
    CHECK_THROWS_AS(exchange_entry(A2, w, 0, 1), index_out_of_range_error);
    CHECK_THROWS_AS(exchange_entry(A2, w, 1, 4), index_out_of_range_error);
    CHECK_THROWS_AS(exchange_entry(A2, {1, 3}, 1, 2), index_out_of_range_error);
}

TEST_CASE("cell seed for the A2 longest word") {
    Seed s = build_nw_seed(A2, {1, 2, 1});
    CHECK(s.quiver().vertices() == std::vector<int>{1, 2, 3});
    CHECK(s.quiver().mutable_vertices() == std::vector<int>{1});
    CHECK(s.quiver().b(1, 1) == 0);
    CHECK(s.quiver().b(2, 1) == -1);
    CHECK(s.quiver().b(3, 1) == 1);
    CHECK(s.label(1) == "D(1,0)");
    CHECK(s.label(3) == "D(3,0)");
    CHECK(s.frozen_invertible());
    CHECK(s.cartan_name == std::string("A2"));
    CHECK(s.word == Word{1, 2, 1});
    CHECK(validate_quiver(s.quiver()).ok);
}

TEST_CASE("cell seed for the A3 longest word") {
    Seed s = build_nw_seed(A3, W6);
    CHECK(s.quiver().vertices() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(s.quiver().mutable_vertices() == std::vector<int>{1, 2, 3});

    const int expected[6][3] = {
        {0, 1, -1},  // row 1
        {-1, 0, 1},  // row 2
        {1, -1, 0},  // row 3
        {0, -1, 0},  // row 4
        {0, 1, -1},  // row 5
        {0, 0, 1},   // row 6
    };
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(s.quiver().b(i, j) == expected[i - 1][j - 1]);
    CHECK(validate_quiver(s.quiver()).ok);
}

TEST_CASE("degenerate and invalid words") {
    Seed a1 = build_nw_seed(CartanDatum::preset("A1"), {1});
    CHECK(a1.quiver().vertices() == std::vector<int>{1});
    CHECK(a1.quiver().mutable_vertices().empty());

    CHECK_THROWS_AS(build_nw_seed(A2, {1, 1}), not_reduced_error);
    CHECK_THROWS_AS(build_richardson_seed(A2, {1, 1}, 0), not_reduced_error);
}

TEST_CASE("richardson seed restricts the cell seed") {
    Seed r = build_richardson_seed(A2, {1, 2, 1}, 1);
    CHECK(r.quiver().vertices() == std::vector<int>{2, 3});
    CHECK(r.quiver().mutable_vertices().empty());
    CHECK(r.label(2) == "D([1,2]w2, [1]w2)");
    CHECK(r.label(3) == "D([1,2,1]w1, [1]w1)");
    CHECK(r.generator_name(2) == "x2");

    /* p = 0 rebuilds the cell seed up to labels. */
    CHECK(build_richardson_seed(A2, {1, 2, 1}, 0) == build_nw_seed(A2, {1, 2, 1}));
    CHECK(build_richardson_seed(A2, {1, 2, 1}, 0).label(1) == "D([1]w1, []w1)");

    Seed empty = build_richardson_seed(A2, {1, 2, 1}, 3);
    CHECK(empty.quiver().vertices().empty());

    CHECK_THROWS_AS(build_richardson_seed(A2, {1, 2, 1}, 4), prefix_out_of_range_error);
    CHECK_THROWS_AS(build_richardson_seed(A2, {1, 2, 1}, -1), prefix_out_of_range_error);
}

TEST_CASE("richardson quiver equals the full subquiver on survivors") {
    for (int p = 0; p <= 6; ++p) {
        Seed cell = build_nw_seed(A3, W6);
        Seed r = build_richardson_seed(A3, W6, p);
        std::vector<int> keep;
        for (int l = p + 1; l <= 6; ++l)
            keep.push_back(l);
        CHECK(r.quiver() == full_subquiver(cell.quiver(), keep));
    }
}

TEST_CASE("richardson morphism kills the prefix") {
    ClusterMorphism phi = richardson_morphism(A2, {1, 2, 1}, 1);
    CHECK(phi.kill_set() == std::set<int>{1});
    CHECK(phi.image(2) == 2);
    CHECK(phi.image(3) == 3);
    CHECK(validate_morphism(phi).ok);

    Decomposition d = decompose(phi);
    CHECK(d.kill == std::set<int>{1});
    CHECK(d.relabel == std::map<int, int>{{2, 2}, {3, 3}});
    CHECK(d.unfrozen.empty());
    CHECK(d.complement.empty());

    ClusterMorphism ident = richardson_morphism(A2, {1, 2, 1}, 0);
    CHECK(ident.kill_set().empty());
    for (int v : ident.source().quiver().vertices())
        CHECK(ident.image(v) == v);
}

TEST_CASE("matrix transport holds for all A2 and A3 prefixes") {
    struct Case {
        const CartanDatum* cartan;
        Word word;
    };
    const Case cases[] = {{&A2, {1, 2, 1}}, {&A3, W6}};
    for (const Case& c : cases) {
        const int n = static_cast<int>(c.word.size());
        for (int p = 0; p <= n; ++p) {
            ClusterMorphism phi = richardson_morphism(*c.cartan, c.word, p);
            REQUIRE(validate_morphism(phi).ok);
            const ExchangeQuiver& b = phi.source().quiver();
            const ExchangeQuiver& bp = phi.target().quiver();
            for (int i = p + 1; i <= n; ++i)
                for (int j = p + 1; j <= n; ++j)
                    if (bp.is_mutable(j))
                        REQUIRE(b.b(i, j) == bp.b(i, j));
        }
    }
}

TEST_CASE("richardson morphism commutes with surviving mutations") {
    Seed cell = build_nw_seed(A3, W6);
    ClusterMorphism phi = richardson_morphism(A3, W6, 1);
    CHECK(commutes_with_mutation(phi, {2}, cell));
    CHECK(commutes_with_mutation(phi, {3, 2}, cell));
    CHECK_THROWS_AS(commutes_with_mutation(phi, {1}, cell), killed_vertex_error);
}

TEST_CASE("prefixes are length additive and shadow the beta roots") {
    const std::vector<RootVector> betas = beta_roots(A3, W6);
    for (int p = 0; p <= 6; ++p) {
        Word prefix(W6.begin(), W6.begin() + p);
        CHECK(length_additive(A3, W6, prefix));

        std::set<RootVector> prefix_betas;
        for (const RootVector& b : beta_roots(A3, prefix))
            prefix_betas.insert(b);
        for (int k = 1; k <= 6; ++k) {
            const bool killed = k <= p;
            CHECK(killed == (prefix_betas.count(betas[static_cast<std::size_t>(k) - 1]) > 0));
        }
    }
}
