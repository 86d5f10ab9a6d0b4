#include <clusterkit/errors.hpp>
#include <clusterkit/json_io.hpp>
#include <clusterkit/minors.hpp>
#include <clusterkit/morphism.hpp>
#include <clusterkit/quiver.hpp>
#include <clusterkit/richardson.hpp>
#include <clusterkit/seed.hpp>
#include <clusterkit/weyl.hpp>

#include <CLI11.hpp>
#include <fmt/core.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using namespace clusterkit;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        fmt::print("{}\n", text);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << '\n';
}

Word parse_word(const std::string& text) {
    Word out;
    if (text.empty() || text == "e")
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw CLI::ValidationError("word", "empty letter in '" + text + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

std::set<int> parse_set(const std::string& text) {
    std::set<int> out;
    for (int v : parse_word(text))
        out.insert(v);
    return out;
}

std::map<int, int> parse_vertex_map(const std::string& text) {
    std::map<int, int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("map", "expected i:j pairs, got '" + item + "'");
        out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return out;
}

CartanDatum resolve_cartan(const std::string& preset, const std::string& file) {
    if (!file.empty())
        return cartan_from_json(read_file(file));
    if (!preset.empty())
        return CartanDatum::preset(preset);
    throw CLI::ValidationError("cartan", "give --cartan or --cartan-file");
}

ClusterMorphism load_morphism(const std::string& path) {
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    return morphism_from_json(read_file(path), [&](const std::string& ref) {
        std::filesystem::path p(ref);
        if (p.is_relative())
            p = base / p;
        return seed_from_json(read_file(p.string()));
    });
}

std::string bool_json(const std::string& key, bool value) {
    return fmt::format("{{\n  \"{}\": {}\n}}", key, value ? "true" : "false");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for cluster seeds, morphisms, and minor oracles"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string cartan_name;
    std::string cartan_file;
    std::string word_text;
    std::string in_path;
    std::string out_path;
    std::string dot_path;
    std::string seq_text;
    std::string set_text;
    std::string map_text;
    std::string poly_path;
    std::string second_text;
    std::string kind_text;
    std::string seed_path;
    std::string derived_path;
    std::string mode_text = "exact";
    std::string out_source;
    std::string out_target;
    std::string u_text;
    std::string v_text;
    int vertex = 0;
    int fundamental = 0;
    int rank = 0;
    int prefix = 0;
    int trials = 20;
    std::size_t depth = 3;
    std::uint64_t prng_seed = 0;

    auto add_cartan = [&](CLI::App* cmd) {
        cmd->add_option("--cartan", cartan_name, "Cartan preset name (A1..A5, D4)");
        cmd->add_option("--cartan-file", cartan_file, "Cartan matrix JSON file");
    };

    CLI::App* seed = app.add_subcommand("seed", "build, mutate, and explore seeds");
    seed->require_subcommand(1);

    CLI::App* seed_build = seed->add_subcommand("build", "initial seed of a reduced word");
    add_cartan(seed_build);
    seed_build->add_option("--word", word_text, "reduced word, comma separated")->required();
    seed_build->add_option("--out", out_path, "output JSON path (default stdout)");
    seed_build->add_option("--dot", dot_path, "also write the quiver in DOT form");
    seed_build->callback([&] {
        Seed s = build_nw_seed(resolve_cartan(cartan_name, cartan_file), parse_word(word_text));
        write_output(out_path, seed_to_json(s));
        if (!dot_path.empty())
            write_output(dot_path, to_dot(s.quiver()));
    });

    CLI::App* seed_mutate = seed->add_subcommand("mutate", "mutate a seed along a sequence");
    seed_mutate->add_option("--in", in_path, "seed JSON path")->required();
    seed_mutate->add_option("--seq", seq_text, "mutation sequence, comma separated")->required();
    seed_mutate->add_option("--out", out_path, "output JSON path (default stdout)");
    seed_mutate->add_option("--dot", dot_path, "also write the mutated quiver in DOT form");
    seed_mutate->callback([&] {
        Seed s = mutate_sequence(seed_from_json(read_file(in_path)), parse_word(seq_text));
        write_output(out_path, seed_to_json(s));
        if (!dot_path.empty())
            write_output(dot_path, to_dot(s.quiver()));
    });

    CLI::App* seed_explore = seed->add_subcommand("explore", "enumerate seeds up to a depth");
    seed_explore->add_option("--in", in_path, "seed JSON path")->required();
    seed_explore->add_option("--depth", depth, "mutation depth")->required();
    seed_explore->add_option("--out", out_path, "output JSON path (default stdout)");
    seed_explore->callback([&] {
        ClusterEnumeration e = enumerate_clusters(seed_from_json(read_file(in_path)), depth);
        write_output(out_path, enumeration_to_json(e));
    });

    CLI::App* morphism = app.add_subcommand("morphism", "cluster morphism calculus");
    morphism->require_subcommand(1);

    CLI::App* mk = morphism->add_subcommand("make", "build an elementary morphism");
    mk->add_option("--kind", kind_text, "freezing | similarity | deleting | embedding")
        ->required();
    mk->add_option("--seed", seed_path, "seed JSON of the given end")->required();
    mk->add_option("--set", set_text, "vertex set (freezing, deleting, embedding)");
    mk->add_option("--map", map_text, "relabeling i:j,... (similarity)");
    mk->add_option("--derived", derived_path, "path for the derived end's seed JSON")->required();
    mk->add_option("--out", out_path, "morphism JSON path (default stdout)");
    mk->callback([&] {
        Seed given = seed_from_json(read_file(seed_path));
        SeedContext ctx = SeedContext::of(given);
        ClusterMorphism phi = [&] {
            if (kind_text == "freezing")
                return make_freezing(ctx, parse_set(set_text));
            if (kind_text == "similarity")
                return make_similarity(ctx, parse_vertex_map(map_text));
            if (kind_text == "deleting")
                return make_deleting(ctx, parse_set(set_text));
            if (kind_text == "embedding")
                return make_embedding(ctx, parse_set(set_text));
            throw CLI::ValidationError("kind", "unknown kind '" + kind_text + "'");
        }();
        bool given_is_target = kind_text == "freezing" || kind_text == "embedding";
        const SeedContext& derived = given_is_target ? phi.source() : phi.target();
        write_output(derived_path, seed_to_json(derived.initial_seed()));
        std::string source_ref = given_is_target ? derived_path : seed_path;
        std::string target_ref = given_is_target ? seed_path : derived_path;
        write_output(out_path, morphism_to_json(phi, source_ref, target_ref));
    });

    CLI::App* mv = morphism->add_subcommand("validate", "check the morphism conditions");
    mv->add_option("--in", in_path, "morphism JSON path")->required();
    mv->callback([&] {
        MorphismReport report = validate_morphism(load_morphism(in_path));
        write_output(out_path, morphism_report_to_json(report));
        if (!report.ok)
            exit_code = 1;
    });

    CLI::App* md = morphism->add_subcommand("decompose", "factor into elementary morphisms");
    md->add_option("--in", in_path, "morphism JSON path")->required();
    md->add_option("--out", out_path, "output JSON path (default stdout)");
    md->callback([&] {
        Decomposition d = decompose(load_morphism(in_path));
        write_output(out_path, decomposition_to_json(d));
    });

    CLI::App* mkn = morphism->add_subcommand("kernel", "test kernel-ideal membership");
    mkn->add_option("--in", in_path, "morphism JSON path")->required();
    mkn->add_option("--poly", poly_path, "Laurent polynomial JSON over the source")->required();
    mkn->callback([&] {
        ClusterMorphism phi = load_morphism(in_path);
        LaurentPolynomial f =
            laurent_from_json(phi.source().ambient(), read_file(poly_path));
        write_output(out_path, bool_json("in_kernel", kernel_contains(phi, f)));
    });

    CLI::App* ma = morphism->add_subcommand("apply", "apply the ring map to a polynomial");
    ma->add_option("--in", in_path, "morphism JSON path")->required();
    ma->add_option("--poly", poly_path, "Laurent polynomial JSON over the source")->required();
    ma->add_option("--out", out_path, "output JSON path (default stdout)");
    ma->callback([&] {
        ClusterMorphism phi = load_morphism(in_path);
        LaurentPolynomial f =
            laurent_from_json(phi.source().ambient(), read_file(poly_path));
        write_output(out_path, laurent_to_json(apply(phi, f)));
    });

    CLI::App* weyl = app.add_subcommand("weyl", "Weyl group word utilities");
    weyl->require_subcommand(1);

    CLI::App* wr = weyl->add_subcommand("reduced", "reduced test plus a reduced form");
    add_cartan(wr);
    wr->add_option("--word", word_text, "word, comma separated")->required();
    wr->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        Word w = parse_word(word_text);
        Word reduced = reduce_word(cartan, w);
        std::string reduced_text;
        for (std::size_t i = 0; i < reduced.size(); ++i)
            reduced_text += (i ? "," : "") + std::to_string(reduced[i]);
        write_output(out_path,
                     fmt::format("{{\n  \"reduced\": {},\n  \"reduced_word\": \"{}\",\n"
                                 "  \"length\": {}\n}}",
                                 is_reduced(cartan, w) ? "true" : "false", reduced_text,
                                 reduced.size()));
    });

    CLI::App* wb = weyl->add_subcommand("betas", "roots beta_k of a reduced word");
    add_cartan(wb);
    wb->add_option("--word", word_text, "reduced word")->required();
    wb->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        std::vector<RootVector> betas = beta_roots(cartan, parse_word(word_text));
        std::string body;
        for (std::size_t k = 0; k < betas.size(); ++k) {
            std::string coords;
            for (int i = 1; i <= betas[k].rank(); ++i)
                coords += (i > 1 ? ", " : "") + std::to_string(betas[k][i]);
            body += fmt::format("    {{\"coords\": [{}], \"text\": \"{}\"}}{}\n", coords,
                                betas[k].to_string(), k + 1 < betas.size() ? "," : "");
        }
        write_output(out_path, fmt::format("{{\n  \"betas\": [\n{}  ]\n}}", body));
    });

    CLI::App* wf = weyl->add_subcommand("frozen", "frozen positions of a reduced word");
    add_cartan(wf);
    wf->add_option("--word", word_text, "reduced word")->required();
    wf->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        std::set<int> frozen = frozen_set(cartan, parse_word(word_text));
        std::string body;
        for (int v : frozen)
            body += (body.empty() ? "" : ", ") + std::to_string(v);
        write_output(out_path, fmt::format("{{\n  \"frozen\": [{}]\n}}", body));
    });

    CLI::App* wa = weyl->add_subcommand("additive", "length additivity of a factorization");
    add_cartan(wa);
    wa->add_option("--word", word_text, "reduced word for the product")->required();
    wa->add_option("--second", second_text, "reduced word for the right factor")->required();
    wa->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        write_output(out_path,
                     bool_json("additive", length_additive(cartan, parse_word(word_text),
                                                           parse_word(second_text))));
    });

    CLI::App* wbr = weyl->add_subcommand("bruhat", "Bruhat comparison v <= w");
    add_cartan(wbr);
    wbr->add_option("--v", v_text, "reduced word for v")->required();
    wbr->add_option("--w", word_text, "reduced word for w")->required();
    wbr->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        write_output(out_path, bool_json("leq", bruhat_leq(cartan, parse_word(v_text),
                                                           parse_word(word_text))));
    });

    CLI::App* rich = app.add_subcommand("richardson", "seeds and morphisms of open cells");
    rich->require_subcommand(1);

    CLI::App* rs = rich->add_subcommand("seed", "subseed at a prefix length");
    add_cartan(rs);
    rs->add_option("--word", word_text, "reduced word")->required();
    rs->add_option("--p", prefix, "prefix length")->required();
    rs->add_option("--out", out_path, "output JSON path (default stdout)");
    rs->add_option("--dot", dot_path, "also write the quiver in DOT form");
    rs->callback([&] {
        Seed s = build_richardson_seed(resolve_cartan(cartan_name, cartan_file),
                                       parse_word(word_text), prefix);
        write_output(out_path, seed_to_json(s));
        if (!dot_path.empty())
            write_output(dot_path, to_dot(s.quiver()));
    });

    CLI::App* rm = rich->add_subcommand("morphism", "specialization morphism at a prefix");
    add_cartan(rm);
    rm->add_option("--word", word_text, "reduced word")->required();
    rm->add_option("--p", prefix, "prefix length")->required();
    rm->add_option("--out-source", out_source, "path for the cell seed JSON")->required();
    rm->add_option("--out-target", out_target, "path for the subseed JSON")->required();
    rm->add_option("--out", out_path, "morphism JSON path (default stdout)");
    rm->callback([&] {
        CartanDatum cartan = resolve_cartan(cartan_name, cartan_file);
        Word w = parse_word(word_text);
        write_output(out_source, seed_to_json(build_nw_seed(cartan, w)));
        write_output(out_target, seed_to_json(build_richardson_seed(cartan, w, prefix)));
        ClusterMorphism phi = richardson_morphism(cartan, w, prefix);
        write_output(out_path, morphism_to_json(phi, out_source, out_target));
    });

    CLI::App* oracle = app.add_subcommand("oracle", "type-A generalized-minor checks");
    oracle->require_subcommand(1);

    CLI::App* om = oracle->add_subcommand("minor", "generalized minor of a word pair");
    om->add_option("--rank", rank, "type-A rank")->required();
    om->add_option("--u", u_text, "left word (e for identity)")->required();
    om->add_option("--v", v_text, "right word (e for identity)")->required();
    om->add_option("--i", fundamental, "fundamental index")->required();
    om->add_option("--out", out_path, "output JSON path (default stdout)");
    om->callback([&] {
        MinorExpression m =
            generalized_minor(rank, parse_word(u_text), parse_word(v_text), fundamental);
        write_output(out_path, minor_to_json(m));
    });

    CLI::App* oe = oracle->add_subcommand("exchange", "verify an exchange relation");
    oe->add_option("--word", word_text, "reduced word")->required();
    oe->add_option("--vertex", vertex, "mutable vertex")->required();
    oe->add_option("--mode", mode_text, "exact | pit");
    oe->add_option("--trials", trials, "points for pit mode");
    oe->add_option("--prng-seed", prng_seed, "seed for pit mode");
    oe->callback([&] {
        VerifyMode mode;
        if (mode_text == "exact")
            mode = VerifyMode::exact;
        else if (mode_text == "pit") {
            if (oe->count("--prng-seed") == 0)
                throw CLI::ValidationError("prng-seed", "pit mode requires --prng-seed");
            mode = VerifyMode::pit;
        } else
            throw CLI::ValidationError("mode", "unknown mode '" + mode_text + "'");
        ExchangeReport report =
            verify_exchange(parse_word(word_text), vertex, mode, trials, prng_seed);
        write_output(out_path, exchange_report_to_json(report));
        if (!report.passed)
            exit_code = 1;
    });

    CLI::App* on = oracle->add_subcommand("nonvanishing", "vanishing test of a minor");
    on->add_option("--rank", rank, "type-A rank")->required();
    on->add_option("--u", u_text, "left word (e for identity)")->required();
    on->add_option("--v", v_text, "right word (e for identity)")->required();
    on->add_option("--i", fundamental, "fundamental index")->required();
    on->callback([&] {
        write_output(out_path, bool_json("nonvanishing",
                                         nonvanishing(rank, parse_word(u_text),
                                                      parse_word(v_text), fundamental)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const internal_error& e) {
        fmt::print(stderr, "internal error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return exit_code;
}
