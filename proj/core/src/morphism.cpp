#include "clusterkit/morphism.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace clusterkit {

namespace {

std::string join_violations(const MorphismReport& report) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
        if (i)
            os << "; ";
        os << report.violations[i].condition << ": " << report.violations[i].detail;
    }
    return os.str();
}

std::map<int, std::string> restrict_names(const std::map<int, std::string>& names,
                                          const std::vector<int>& keep) {
    std::map<int, std::string> out;
    for (int v : keep)
        out[v] = names.at(v);
    return out;
}

} // namespace

SeedContext::SeedContext(ExchangeQuiver quiver, std::map<int, std::string> generator_names)
    : quiver_(std::move(quiver)), generator_names_(std::move(generator_names)) {
    if (generator_names_.size() != quiver_.vertices().size())
        throw invalid_morphism_error("generator name count does not match vertex count");
    std::vector<std::string> names;
    names.reserve(quiver_.vertices().size());
    for (int v : quiver_.vertices()) {
        auto it = generator_names_.find(v);
        if (it == generator_names_.end())
            throw invalid_morphism_error("vertex " + std::to_string(v) + " has no generator name");
        names.push_back(it->second);
    }
    ambient_ = Ambient::make(names);
}

SeedContext SeedContext::of(const Seed& seed) {
    return SeedContext(seed.quiver(), seed.generator_names());
}

const std::string& SeedContext::generator_name(int vertex) const {
    auto it = generator_names_.find(vertex);
    if (it == generator_names_.end())
        throw unknown_vertex_error("vertex " + std::to_string(vertex) + " is not a vertex");
    return it->second;
}

int SeedContext::vertex_of(const std::string& name) const noexcept {
    for (const auto& [v, n] : generator_names_)
        if (n == name)
            return v;
    return -1;
}

Seed SeedContext::initial_seed() const {
    return Seed(quiver_, generator_names_);
}

bool SeedContext::operator==(const SeedContext& other) const noexcept {
    return quiver_ == other.quiver_ && generator_names_ == other.generator_names_;
}

ClusterMorphism::ClusterMorphism(SeedContext source, SeedContext target,
                                 std::map<int, int> vertex_map, std::set<int> kill_set)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)),
      kill_set_(std::move(kill_set)) {
    for (int v : kill_set_) {
        if (!source_.quiver().has_vertex(v))
            throw invalid_morphism_error("killed vertex " + std::to_string(v) +
                                         " is not a source vertex");
        if (vertex_map_.count(v))
            throw invalid_morphism_error("vertex " + std::to_string(v) +
                                         " is both killed and mapped");
    }
    for (const auto& [v, w] : vertex_map_) {
        if (!source_.quiver().has_vertex(v))
            throw invalid_morphism_error("mapped vertex " + std::to_string(v) +
                                         " is not a source vertex");
        if (!target_.quiver().has_vertex(w))
            throw invalid_morphism_error("image vertex " + std::to_string(w) +
                                         " is not a target vertex");
    }
    for (int v : source_.quiver().vertices())
        if (!vertex_map_.count(v) && !kill_set_.count(v))
            throw invalid_morphism_error("vertex " + std::to_string(v) +
                                         " is neither killed nor mapped");
}

int ClusterMorphism::image(int vertex) const {
    auto it = vertex_map_.find(vertex);
    if (it != vertex_map_.end())
        return it->second;
    if (kill_set_.count(vertex))
        throw killed_vertex_error("vertex " + std::to_string(vertex) + " is killed");
    throw unknown_vertex_error("vertex " + std::to_string(vertex) + " is not a source vertex");
}

std::vector<int> ClusterMorphism::image_vertices() const {
    std::vector<int> out;
    out.reserve(vertex_map_.size());
    for (const auto& [v, w] : vertex_map_)
        out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

bool ClusterMorphism::operator==(const ClusterMorphism& other) const noexcept {
    return source_ == other.source_ && target_ == other.target_ &&
           vertex_map_ == other.vertex_map_ && kill_set_ == other.kill_set_;
}

MorphismReport validate_morphism(const ClusterMorphism& phi) {
    MorphismReport report;
    auto flag = [&](std::string condition, std::string detail) {
        report.ok = false;
        report.violations.push_back({std::move(condition), std::move(detail)});
    };

    const ExchangeQuiver& q = phi.source().quiver();
    const ExchangeQuiver& qt = phi.target().quiver();

    std::map<int, int> preimage;
    for (const auto& [v, w] : phi.vertex_map()) {
        auto [it, fresh] = preimage.emplace(w, v);
        if (!fresh)
            flag("injectivity", "vertices " + std::to_string(it->second) + " and " +
                                    std::to_string(v) + " both map to " + std::to_string(w));
    }

    std::vector<int> mutable_survivors;
    for (int v : q.mutable_vertices())
        if (!phi.kills(v))
            mutable_survivors.push_back(v);

    for (int v : mutable_survivors) {
        int w = phi.vertex_map().at(v);
        if (!qt.is_mutable(w))
            flag("condition 2a", "mutable vertex " + std::to_string(v) +
                                     " maps to frozen vertex " + std::to_string(w));
    }

    for (int i : mutable_survivors) {
        for (int j : mutable_survivors) {
            int wi = phi.vertex_map().at(i);
            int wj = phi.vertex_map().at(j);
            if (!qt.is_mutable(wj))
                continue; // already flagged under condition 2a
            long long prod = static_cast<long long>(q.b(i, j)) * qt.b(wi, wj);
            if (prod < 0)
                flag("condition 3", "b(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                        std::to_string(q.b(i, j)) + " but image entry b'(" +
                                        std::to_string(wi) + "," + std::to_string(wj) + ") = " +
                                        std::to_string(qt.b(wi, wj)));
        }
    }

    for (const auto& [i, wi] : phi.vertex_map()) {
        for (int j : mutable_survivors) {
            int wj = phi.vertex_map().at(j);
            if (!qt.is_mutable(wj))
                continue;
            if (q.b(i, j) != qt.b(wi, wj))
                flag("matrix transport", "b(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") = " + std::to_string(q.b(i, j)) + " but b'(" +
                                             std::to_string(wi) + "," + std::to_string(wj) +
                                             ") = " + std::to_string(qt.b(wi, wj)));
        }
    }

    /* Full decoupling of the image from the rest of the target, both row and
       column sides; the frozen-row direction is stronger than strictly
       required but is what makes every validated morphism decomposable. */
    const std::vector<int> image_list = phi.image_vertices();
    std::set<int> image(image_list.begin(), image_list.end());
    for (int a : qt.vertices()) {
        for (int c : qt.mutable_vertices()) {
            bool a_in = image.count(a) > 0;
            bool c_in = image.count(c) > 0;
            if (a_in == c_in)
                continue;
            if (int e = qt.b(a, c); e != 0)
                flag("image coupling", "target entry b'(" + std::to_string(a) + "," +
                                           std::to_string(c) + ") = " + std::to_string(e) +
                                           " couples the image to its complement");
        }
    }

    return report;
}

ClusterMorphism make_freezing(const SeedContext& target, const std::set<int>& newly_mutable) {
    const ExchangeQuiver& qt = target.quiver();
    for (int v : newly_mutable) {
        if (!qt.has_vertex(v))
            throw unknown_vertex_error("freezing vertex " + std::to_string(v) +
                                       " is not a vertex");
        if (!qt.is_mutable(v))
            throw hypothesis_violated_error("freezing vertex " + std::to_string(v) +
                                            " is not mutable in the target");
    }
    std::vector<int> muts;
    for (int v : qt.mutable_vertices())
        if (!newly_mutable.count(v))
            muts.push_back(v);
    std::map<std::pair<int, int>, int> entries;
    for (int i : qt.vertices())
        for (int j : muts)
            if (int e = qt.b(i, j); e != 0)
                entries[{i, j}] = e;
    ExchangeQuiver src_quiver(qt.vertices(), muts, entries);
    SeedContext source(std::move(src_quiver), target.generator_names());
    std::map<int, int> id_map;
    for (int v : qt.vertices())
        id_map[v] = v;
    return ClusterMorphism(std::move(source), target, std::move(id_map), {});
}

ClusterMorphism make_similarity(const SeedContext& source, const std::map<int, int>& relabel,
                                std::map<int, std::string> target_generator_names) {
    const ExchangeQuiver& q = source.quiver();
    std::set<int> seen;
    for (int v : q.vertices()) {
        auto it = relabel.find(v);
        if (it == relabel.end())
            throw hypothesis_violated_error("similarity map is undefined on vertex " +
                                            std::to_string(v));
        if (!seen.insert(it->second).second)
            throw hypothesis_violated_error("similarity map repeats label " +
                                            std::to_string(it->second));
    }
    std::vector<int> verts;
    std::vector<int> muts;
    for (int v : q.vertices())
        verts.push_back(relabel.at(v));
    for (int v : q.mutable_vertices())
        muts.push_back(relabel.at(v));
    std::map<std::pair<int, int>, int> entries;
    for (int i : q.vertices())
        for (int j : q.mutable_vertices())
            if (int e = q.b(i, j); e != 0)
                entries[{relabel.at(i), relabel.at(j)}] = e;
    if (target_generator_names.empty())
        target_generator_names = Seed::default_generator_names(verts);
    ExchangeQuiver tgt_quiver(std::move(verts), std::move(muts), std::move(entries));
    SeedContext target(std::move(tgt_quiver), std::move(target_generator_names));
    return ClusterMorphism(source, std::move(target), relabel, {});
}

ClusterMorphism make_deleting(const SeedContext& source, const std::set<int>& killed) {
    const ExchangeQuiver& q = source.quiver();
    std::vector<int> keep;
    for (int v : q.vertices()) {
        if (killed.count(v))
            continue;
        keep.push_back(v);
    }
    for (int v : killed)
        if (!q.has_vertex(v))
            throw unknown_vertex_error("deleted vertex " + std::to_string(v) + " is not a vertex");
    SeedContext target(full_subquiver(q, keep), restrict_names(source.generator_names(), keep));
    std::map<int, int> id_map;
    for (int v : keep)
        id_map[v] = v;
    return ClusterMorphism(source, std::move(target), std::move(id_map), killed);
}

ClusterMorphism make_embedding(const SeedContext& target, const std::set<int>& outside) {
    const ExchangeQuiver& qt = target.quiver();
    for (int v : outside)
        if (!qt.has_vertex(v))
            throw unknown_vertex_error("embedding complement vertex " + std::to_string(v) +
                                       " is not a vertex");
    for (int a : qt.vertices()) {
        for (int c : qt.mutable_vertices()) {
            bool a_out = outside.count(a) > 0;
            bool c_out = outside.count(c) > 0;
            if (a_out == c_out)
                continue;
            if (int e = qt.b(a, c); e != 0)
                throw hypothesis_violated_error(
                    "embedding requires zero coupling but b(" + std::to_string(a) + "," +
                    std::to_string(c) + ") = " + std::to_string(e));
        }
    }
    std::vector<int> keep;
    for (int v : qt.vertices())
        if (!outside.count(v))
            keep.push_back(v);
    SeedContext source(full_subquiver(qt, keep), restrict_names(target.generator_names(), keep));
    std::map<int, int> id_map;
    for (int v : keep)
        id_map[v] = v;
    return ClusterMorphism(std::move(source), target, std::move(id_map), {});
}

ClusterMorphism make_elementary(ElementaryKind kind, const ElementaryData& data,
                                const SeedContext& source, const SeedContext& target) {
    switch (kind) {
    case ElementaryKind::freezing: {
        ClusterMorphism built = make_freezing(target, data.subset);
        if (!(built.source() == source))
            throw hypothesis_violated_error(
                "freezing source does not match the target with the subset frozen");
        return built;
    }
    case ElementaryKind::similarity: {
        ClusterMorphism built = make_similarity(source, data.relabel, target.generator_names());
        if (!(built.target() == target))
            throw hypothesis_violated_error("similarity target does not match the relabeling");
        return built;
    }
    case ElementaryKind::deleting: {
        ClusterMorphism built = make_deleting(source, data.subset);
        if (!(built.target() == target))
            throw hypothesis_violated_error("deleting target is not the surviving full subquiver");
        return built;
    }
    case ElementaryKind::embedding: {
        ClusterMorphism built = make_embedding(target, data.subset);
        if (!(built.source() == source))
            throw hypothesis_violated_error(
                "embedding source is not the full subquiver on the complement");
        return built;
    }
    }
    throw internal_error("unhandled elementary kind");
}

ClusterMorphism compose(const ClusterMorphism& outer, const ClusterMorphism& inner) {
    if (!(inner.target() == outer.source()))
        throw invalid_morphism_error("inner target does not match outer source");
    std::set<int> kill = inner.kill_set();
    std::map<int, int> vmap;
    for (const auto& [v, w] : inner.vertex_map()) {
        if (outer.kills(w))
            kill.insert(v);
        else
            vmap[v] = outer.vertex_map().at(w);
    }
    ClusterMorphism composite(inner.source(), outer.target(), std::move(vmap), std::move(kill));
    MorphismReport report = validate_morphism(composite);
    if (!report.ok)
        throw invalid_morphism_error("composite is not a cluster morphism: " +
                                     join_violations(report));
    return composite;
}

LaurentPolynomial apply(const ClusterMorphism& phi, const LaurentPolynomial& f) {
    if (!same_ambient(f.ambient(), phi.source().ambient()))
        throw ambient_mismatch_error("polynomial is not over the morphism's source ambient");
    const AmbientPtr& tgt = phi.target().ambient();
    std::map<std::string, LaurentPolynomial> images;
    for (int v : phi.source().quiver().vertices()) {
        const std::string& name = phi.source().generator_name(v);
        if (phi.kills(v))
            images.emplace(name, LaurentPolynomial::constant(tgt, Rational(1)));
        else
            images.emplace(name, LaurentPolynomial::variable(
                                     tgt, phi.target().generator_name(phi.image(v))));
    }
    return map_variables(f, tgt, [&](const std::string& name) { return images.at(name); });
}

bool kernel_contains(const ClusterMorphism& phi, const LaurentPolynomial& f) {
    bool via_map = apply(phi, f).is_zero();
    std::map<std::string, Rational> ones;
    for (int v : phi.kill_set())
        ones[phi.source().generator_name(v)] = Rational(1);
    bool via_specialization = specialize(f, ones).is_zero();
    if (via_map != via_specialization)
        throw internal_error("kernel criteria disagree: image " +
                             std::string(via_map ? "vanishes" : "survives") +
                             " but specialization " +
                             std::string(via_specialization ? "vanishes" : "survives"));
    return via_map;
}

std::vector<int> image_component(const ClusterMorphism& phi) {
    const ExchangeQuiver& qt = phi.target().quiver();
    std::vector<int> image = phi.image_vertices();
    std::set<int> image_set(image.begin(), image.end());

    for (int a : qt.vertices()) {
        for (int c : qt.mutable_vertices()) {
            bool a_in = image_set.count(a) > 0;
            bool c_in = image_set.count(c) > 0;
            if (a_in == c_in)
                continue;
            if (int e = qt.b(a, c); e != 0)
                throw not_a_component_error("target entry b'(" + std::to_string(a) + "," +
                                            std::to_string(c) + ") = " + std::to_string(e) +
                                            " crosses the image boundary");
        }
    }

    /* Union-find over the underlying graph. */
    std::map<int, int> parent;
    for (int v : qt.vertices())
        parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (int a : qt.vertices())
        for (int c : qt.mutable_vertices())
            if (qt.b(a, c) != 0)
                parent[find(a)] = find(c);
    std::map<int, bool> component_in_image;
    for (int v : qt.vertices()) {
        int root = find(v);
        bool in = image_set.count(v) > 0;
        auto [it, fresh] = component_in_image.emplace(root, in);
        if (!fresh && it->second != in)
            throw not_a_component_error("image cuts through the connected component of vertex " +
                                        std::to_string(v));
    }
    return image;
}

Decomposition decompose(const ClusterMorphism& phi) {
    MorphismReport report = validate_morphism(phi);
    if (!report.ok)
        throw invalid_morphism_error("cannot decompose: " + join_violations(report));

    const ExchangeQuiver& qt = phi.target().quiver();
    const std::vector<int> image_list = phi.image_vertices();
    std::set<int> image_set(image_list.begin(), image_list.end());
    std::map<int, int> preimage;
    for (const auto& [v, w] : phi.vertex_map())
        preimage[w] = v;

    std::set<int> complement;
    for (int v : qt.vertices())
        if (!image_set.count(v))
            complement.insert(v);

    /* Target-mutable image vertices whose preimage is frozen. */
    std::set<int> unfrozen;
    for (int w : qt.mutable_vertices())
        if (image_set.count(w) && !phi.source().quiver().is_mutable(preimage.at(w)))
            unfrozen.insert(w);

    ClusterMorphism del = make_deleting(phi.source(), phi.kill_set());
    ClusterMorphism emb = make_embedding(phi.target(), complement);
    ClusterMorphism frz = make_freezing(emb.source(), unfrozen);
    ClusterMorphism sim(del.target(), frz.source(), phi.vertex_map(), {});

    for (const auto* factor : {&del, &sim, &frz, &emb}) {
        MorphismReport r = validate_morphism(*factor);
        if (!r.ok)
            throw internal_error("decomposition factor fails validation: " + join_violations(r));
    }

    ClusterMorphism composite = compose(emb, compose(frz, compose(sim, del)));
    if (!(composite == phi))
        throw internal_error("decomposition does not recompose to the original morphism");
    for (int v : phi.source().quiver().vertices()) {
        LaurentPolynomial gen =
            LaurentPolynomial::variable(phi.source().ambient(), phi.source().generator_name(v));
        if (!(apply(composite, gen) == apply(phi, gen)))
            throw internal_error("recomposition differs on generator " +
                                 phi.source().generator_name(v));
    }

    Decomposition out{phi.kill_set(), phi.vertex_map(),     unfrozen,       complement,
                      std::move(del), std::move(sim),       std::move(frz), std::move(emb)};
    return out;
}

bool commutes_with_mutation(const ClusterMorphism& phi, const std::vector<int>& seq,
                            const Seed& s) {
    if (!(SeedContext::of(s) == phi.source()))
        throw hypothesis_violated_error("seed does not match the morphism's source pattern");
    for (int k : seq) {
        if (phi.kills(k))
            throw killed_vertex_error("mutation sequence meets killed vertex " +
                                      std::to_string(k));
        if (!phi.source().quiver().has_vertex(k))
            throw unknown_vertex_error("sequence vertex " + std::to_string(k) +
                                       " is not a vertex");
        if (!phi.source().quiver().is_mutable(k))
            throw frozen_vertex_error("sequence vertex " + std::to_string(k) + " is frozen");
    }

    const SeedContext& tgt = phi.target();
    std::map<int, LaurentPolynomial> tvars;
    for (int v : tgt.quiver().vertices())
        tvars.emplace(v, LaurentPolynomial::variable(tgt.ambient(), tgt.generator_name(v)));
    for (const auto& [v, w] : phi.vertex_map())
        tvars.insert_or_assign(w, apply(phi, s.var(v)));
    Seed t(tgt.quiver(), tgt.ambient(), tgt.generator_names(), std::move(tvars), {},
           s.frozen_invertible());

    std::vector<int> tseq;
    tseq.reserve(seq.size());
    for (int k : seq)
        tseq.push_back(phi.image(k));

    Seed s2 = mutate_sequence(s, seq);
    Seed t2 = mutate_sequence(t, tseq);

    for (const auto& [v, w] : phi.vertex_map())
        if (!(apply(phi, s2.var(v)) == t2.var(w)))
            return false;
    return true;
}

} // namespace clusterkit
