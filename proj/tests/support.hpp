#pragma once

/* Deterministic generators shared by the test binaries. Everything is
   driven by an explicit SplitMix64 stream so failures reproduce from the
   printed seed. */

#include "clusterkit/laurent.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/quiver.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testkit {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /* Inclusive on both ends. */
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

private:
    std::uint64_t state_;
};

inline clusterkit::LaurentPolynomial var(const clusterkit::AmbientPtr& ambient,
                                         const std::string& name, int exp = 1) {
    return clusterkit::LaurentPolynomial::variable(ambient, name, exp);
}

inline clusterkit::LaurentPolynomial cnst(const clusterkit::AmbientPtr& ambient, long value) {
    return clusterkit::LaurentPolynomial::constant(ambient, clusterkit::Rational(value));
}

/* Vertices 1..n with at least one mutable vertex, skew-symmetric principal
   part, entries bounded by max_entry in absolute value. Frozen rows toward
   mutable columns are filled freely. */
inline clusterkit::ExchangeQuiver random_quiver(SplitMix64& rng, int max_vertices = 8,
                                                int max_entry = 3) {
    const int n = static_cast<int>(rng.range(2, max_vertices));
    std::vector<int> vertices;
    std::vector<int> mutables;
    std::vector<char> is_mut(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        vertices.push_back(v);
        if (rng.chance(70)) {
            mutables.push_back(v);
            is_mut[static_cast<std::size_t>(v)] = 1;
        }
    }
    if (mutables.empty()) {
        int v = static_cast<int>(rng.range(1, n));
        mutables.push_back(v);
        is_mut[static_cast<std::size_t>(v)] = 1;
    }
    std::map<std::pair<int, int>, int> entries;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int e = static_cast<int>(rng.range(-max_entry, max_entry));
            if (e == 0)
                continue;
            if (is_mut[static_cast<std::size_t>(i)] && is_mut[static_cast<std::size_t>(j)]) {
                entries[{i, j}] = e;
                entries[{j, i}] = -e;
            } else if (is_mut[static_cast<std::size_t>(j)]) {
                entries[{i, j}] = e; // frozen row i
            } else if (is_mut[static_cast<std::size_t>(i)]) {
                entries[{j, i}] = e; // frozen row j
            }
        }
    }
    return clusterkit::ExchangeQuiver(vertices, mutables, entries);
}

inline clusterkit::Rational random_rational(SplitMix64& rng, long max_num = 10,
                                            long max_den = 5) {
    const long den = rng.range(1, max_den);
    const long num = rng.range(-max_num, max_num);
    clusterkit::Rational value(num, den);
    value.canonicalize();
    return value;
}

inline clusterkit::LaurentPolynomial random_laurent(SplitMix64& rng,
                                                    const clusterkit::AmbientPtr& ambient,
                                                    int max_terms = 6, int max_exp = 3) {
    using clusterkit::LaurentPolynomial;
    using clusterkit::Monomial;
    LaurentPolynomial acc = LaurentPolynomial::zero(ambient);
    const long terms = rng.range(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        std::vector<std::pair<int, int>> exps;
        for (int v = 0; v < static_cast<int>(ambient->size()); ++v)
            if (rng.chance(50))
                if (int e = static_cast<int>(rng.range(-max_exp, max_exp)); e != 0)
                    exps.emplace_back(v, e);
        clusterkit::Rational coeff = random_rational(rng);
        if (coeff == 0)
            coeff = 1;
        acc += LaurentPolynomial::term(ambient, Monomial::from_pairs(std::move(exps)), coeff);
    }
    return acc;
}

/* Nonzero variant for divisor positions. */
inline clusterkit::LaurentPolynomial random_nonzero_laurent(SplitMix64& rng,
                                                            const clusterkit::AmbientPtr& ambient,
                                                            int max_terms = 6, int max_exp = 3) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        clusterkit::LaurentPolynomial f = random_laurent(rng, ambient, max_terms, max_exp);
        if (!f.is_zero())
            return f;
    }
    return var(ambient, ambient->name(0));
}

inline clusterkit::SeedContext context_of(const clusterkit::ExchangeQuiver& q) {
    return clusterkit::SeedContext(q, clusterkit::Seed::default_generator_names(q.vertices()));
}

/* Elementary steps used to grow random composable chains. Every context in
   a chain keeps the default generator names x{v}, so freshly added vertex
   ids never collide on names. */

inline std::optional<clusterkit::ClusterMorphism> random_freezing_step(
    SplitMix64& rng, const clusterkit::SeedContext& cur) {
    using namespace clusterkit;
    const ExchangeQuiver& q = cur.quiver();
    std::vector<int> frozen;
    for (int v : q.vertices())
        if (!q.is_mutable(v))
            frozen.push_back(v);
    if (frozen.empty())
        return std::nullopt;
    std::set<int> unfreeze;
    for (int v : frozen)
        if (rng.chance(50))
            unfreeze.insert(v);
    if (unfreeze.empty())
        unfreeze.insert(frozen[static_cast<std::size_t>(rng.below(frozen.size()))]);
    std::vector<int> new_mutable = q.mutable_vertices();
    for (int e : unfreeze)
        new_mutable.push_back(e);
    std::map<std::pair<int, int>, int> entries;
    for (int i : q.vertices())
        for (int j : q.mutable_vertices())
            if (int e = q.b(i, j); e != 0)
                entries[{i, j}] = e;
    /* New columns: skew against known rows, zero against everything the
       source cannot see (frozen rows and other new columns). Zero rows keep
       every previously decoupled cut decoupled, so chains stay composable. */
    for (int e : unfreeze)
        for (int a : q.mutable_vertices())
            if (int val = -q.b(e, a); val != 0)
                entries[{a, e}] = val;
    ExchangeQuiver target_q(q.vertices(), new_mutable, entries);
    SeedContext target(target_q, cur.generator_names());
    return make_freezing(target, unfreeze);
}

inline std::optional<clusterkit::ClusterMorphism> random_similarity_step(
    SplitMix64& rng, const clusterkit::SeedContext& cur) {
    using namespace clusterkit;
    const ExchangeQuiver& q = cur.quiver();
    std::vector<int> mut = q.mutable_vertices();
    std::vector<int> frz;
    for (int v : q.vertices())
        if (!q.is_mutable(v))
            frz.push_back(v);
    auto shuffle = [&rng](std::vector<int>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[rng.below(i)]);
    };
    std::vector<int> mut_to = mut;
    std::vector<int> frz_to = frz;
    shuffle(mut_to);
    shuffle(frz_to);
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < mut.size(); ++i)
        relabel[mut[i]] = mut_to[i];
    for (std::size_t i = 0; i < frz.size(); ++i)
        relabel[frz[i]] = frz_to[i];
    return make_similarity(cur, relabel);
}

inline std::optional<clusterkit::ClusterMorphism> random_deleting_step(
    SplitMix64& rng, const clusterkit::SeedContext& cur) {
    using namespace clusterkit;
    const std::vector<int>& vs = cur.quiver().vertices();
    if (vs.size() < 2)
        return std::nullopt;
    std::set<int> killed;
    for (int v : vs)
        if (rng.chance(30))
            killed.insert(v);
    if (killed.empty())
        killed.insert(vs[rng.below(vs.size())]);
    if (killed.size() == vs.size())
        killed.erase(vs[rng.below(vs.size())]);
    return make_deleting(cur, killed);
}

inline std::optional<clusterkit::ClusterMorphism> random_embedding_step(
    SplitMix64& rng, const clusterkit::SeedContext& cur, int vertex_cap) {
    using namespace clusterkit;
    const ExchangeQuiver& q = cur.quiver();
    const int n = static_cast<int>(q.size());
    if (n >= vertex_cap)
        return std::nullopt;
    const int extra = static_cast<int>(rng.range(1, std::min(2, vertex_cap - n)));
    int next_id = 0;
    for (int v : q.vertices())
        next_id = std::max(next_id, v);
    ++next_id;
    std::vector<int> vertices = q.vertices();
    std::vector<int> new_mutable = q.mutable_vertices();
    std::set<int> outside;
    std::vector<int> fresh;
    for (int t = 0; t < extra; ++t) {
        const int id = next_id + t;
        vertices.push_back(id);
        outside.insert(id);
        fresh.push_back(id);
        if (rng.chance(60))
            new_mutable.push_back(id);
    }
    std::map<std::pair<int, int>, int> entries;
    for (int i : q.vertices())
        for (int j : q.mutable_vertices())
            if (int e = q.b(i, j); e != 0)
                entries[{i, j}] = e;
    /* The added block couples only within itself. */
    std::set<int> fresh_mut;
    for (int id : fresh)
        for (int m : new_mutable)
            if (m == id)
                fresh_mut.insert(id);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        for (std::size_t b = a + 1; b < fresh.size(); ++b) {
            const int i = fresh[a];
            const int j = fresh[b];
            const int e = static_cast<int>(rng.range(-2, 2));
            if (e == 0)
                continue;
            const bool im = fresh_mut.count(i) > 0;
            const bool jm = fresh_mut.count(j) > 0;
            if (im && jm) {
                entries[{i, j}] = e;
                entries[{j, i}] = -e;
            } else if (jm) {
                entries[{i, j}] = e;
            } else if (im) {
                entries[{j, i}] = e;
            }
        }
    }
    ExchangeQuiver target_q(vertices, new_mutable, entries);
    std::map<int, std::string> names = cur.generator_names();
    for (int id : fresh)
        names[id] = "x" + std::to_string(id);
    SeedContext target(target_q, names);
    return make_embedding(target, outside);
}

struct RandomChain {
    clusterkit::ClusterMorphism phi;
    int steps = 0;
    bool has_deleting = false;
};

/* Composite of 1..max_steps random elementary morphisms starting from a
   random context. allow_deleting = false produces the kill-free batch. */
inline RandomChain random_morphism_chain(SplitMix64& rng, int max_steps = 3,
                                         bool allow_deleting = true, int vertex_cap = 8) {
    using namespace clusterkit;
    ExchangeQuiver q0 = random_quiver(rng, vertex_cap - 2, 3);
    SeedContext start = context_of(q0);
    SeedContext cur = start;
    std::optional<ClusterMorphism> acc;
    bool has_deleting = false;
    int steps = 0;
    const int want = static_cast<int>(rng.range(1, max_steps));
    for (int s = 0; s < want; ++s) {
        std::optional<ClusterMorphism> step;
        switch (rng.below(4)) {
        case 0: step = random_freezing_step(rng, cur); break;
        case 1: step = random_similarity_step(rng, cur); break;
        case 2:
            if (allow_deleting) {
                step = random_deleting_step(rng, cur);
                if (step)
                    has_deleting = true;
            }
            break;
        default: step = random_embedding_step(rng, cur, vertex_cap); break;
        }
        if (!step)
            continue;
        acc = acc ? compose(*step, *acc) : *step;
        cur = step->target();
        ++steps;
    }
    if (!acc) {
        std::map<int, int> id;
        for (int v : cur.quiver().vertices())
            id[v] = v;
        acc = make_similarity(cur, id);
    }
    return RandomChain{*acc, steps, has_deleting};
}

/* All elements of the type-A Weyl group S_{rank+1}, one reduced word each,
   found by peeling left descents off every permutation. */
inline std::vector<clusterkit::Word> all_type_a_elements(int rank) {
    using clusterkit::Word;
    const int n = rank + 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Word> out;
    do {
        std::vector<int> p = perm;
        Word letters;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 1; i < n; ++i) {
                std::size_t pos_i = 0, pos_i1 = 0;
                for (std::size_t t = 0; t < p.size(); ++t) {
                    if (p[t] == i)
                        pos_i = t;
                    if (p[t] == i + 1)
                        pos_i1 = t;
                }
                if (pos_i1 < pos_i) {
                    /* Value swap i <-> i+1 = left multiplication by s_i. */
                    std::swap(p[pos_i], p[pos_i1]);
                    letters.push_back(i);
                    progress = true;
                    break;
                }
            }
        }
        out.push_back(letters);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace testkit
