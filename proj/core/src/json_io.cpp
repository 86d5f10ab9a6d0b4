#include "clusterkit/json_io.hpp"

#include "clusterkit/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace clusterkit {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_field(const json& j) {
    if (j.is_string())
        return rational_from_string(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw std::invalid_argument("coefficient must be a decimal string or an integer");
}

ordered laurent_value(const LaurentPolynomial& f) {
    ordered terms = ordered::array();
    const auto& map = f.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it) {
        ordered exps = ordered::object();
        for (const auto& [var, exp] : it->first.entries())
            exps[f.ambient()->name(static_cast<std::size_t>(var))] = exp;
        ordered record = ordered::object();
        record["coeff_num"] = numerator_string(it->second);
        record["coeff_den"] = denominator_string(it->second);
        record["exponents"] = std::move(exps);
        terms.push_back(std::move(record));
    }
    return terms;
}

LaurentPolynomial laurent_value_in(const AmbientPtr& ambient, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("a Laurent polynomial must be a list of term records");
    LaurentPolynomial out = LaurentPolynomial::zero(ambient);
    for (const json& record : j) {
        Rational num = rational_field(record.at("coeff_num"));
        Rational den = record.contains("coeff_den") ? rational_field(record.at("coeff_den"))
                                                    : Rational(1);
        if (den == 0)
            throw divide_by_zero_error("coefficient denominator is zero");
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [name, exp] : record.at("exponents").items()) {
            int var = ambient->index_of(name);
            if (var < 0)
                throw unknown_variable_error("variable " + name + " is not in the ambient " +
                                             ambient->to_string());
            if (!exp.is_number_integer())
                throw std::invalid_argument("exponent of " + name + " must be an integer");
            if (int e = exp.get<int>(); e != 0)
                pairs.emplace_back(var, e);
        }
        std::sort(pairs.begin(), pairs.end());
        out += LaurentPolynomial::term(ambient, Monomial::from_pairs(std::move(pairs)), num / den);
    }
    return out;
}

ordered word_value(const Word& w) {
    ordered out = ordered::array();
    for (int letter : w)
        out.push_back(letter);
    return out;
}

Word word_from(const json& j) {
    Word out;
    for (const json& letter : j)
        out.push_back(letter.get<int>());
    return out;
}

ordered seed_value(const Seed& seed) {
    ordered out = ordered::object();
    if (seed.cartan_name)
        out["cartan"] = *seed.cartan_name;
    if (seed.word)
        out["word"] = word_value(*seed.word);
    const ExchangeQuiver& q = seed.quiver();
    out["vertices"] = q.vertices();
    out["mutable"] = q.mutable_vertices();
    ordered rows = ordered::array();
    for (int i : q.vertices()) {
        ordered row = ordered::array();
        for (int j : q.mutable_vertices())
            row.push_back(q.b(i, j));
        rows.push_back(std::move(row));
    }
    out["b"] = std::move(rows);
    out["ambient"] = seed.ambient()->names();
    ordered generators = ordered::object();
    for (const auto& [v, name] : seed.generator_names())
        generators[std::to_string(v)] = name;
    out["generators"] = std::move(generators);
    ordered vars = ordered::object();
    for (int v : q.vertices())
        vars[std::to_string(v)] = laurent_value(seed.var(v));
    out["vars"] = std::move(vars);
    ordered labels = ordered::object();
    for (const auto& [v, text] : seed.labels())
        labels[std::to_string(v)] = text;
    out["labels"] = std::move(labels);
    out["frozen_invertible"] = seed.frozen_invertible();
    return out;
}

Seed seed_from(const json& j) {
    std::vector<int> vertices;
    for (const json& v : j.at("vertices"))
        vertices.push_back(v.get<int>());
    std::vector<int> mutables;
    for (const json& v : j.at("mutable"))
        mutables.push_back(v.get<int>());

    const json& rows = j.at("b");
    if (rows.size() != vertices.size())
        throw std::invalid_argument("b must have one row per vertex");
    std::map<std::pair<int, int>, int> entries;
    for (std::size_t r = 0; r < vertices.size(); ++r) {
        const json& row = rows[r];
        if (row.size() != mutables.size())
            throw std::invalid_argument("b rows must have one column per mutable vertex");
        for (std::size_t c = 0; c < mutables.size(); ++c)
            if (int e = row[c].get<int>(); e != 0)
                entries[{vertices[r], mutables[c]}] = e;
    }
    ExchangeQuiver quiver(vertices, mutables, entries);

    std::vector<std::string> names;
    for (const json& n : j.at("ambient"))
        names.push_back(n.get<std::string>());
    AmbientPtr ambient = Ambient::make(names);

    std::map<int, std::string> generator_names;
    if (j.contains("generators")) {
        for (const auto& [key, value] : j.at("generators").items())
            generator_names[std::stoi(key)] = value.get<std::string>();
    } else {
        if (names.size() != vertices.size())
            throw std::invalid_argument("ambient size must match the vertex count");
        for (std::size_t idx = 0; idx < vertices.size(); ++idx)
            generator_names[vertices[idx]] = names[idx];
    }

    std::map<int, LaurentPolynomial> vars;
    for (const auto& [key, value] : j.at("vars").items())
        vars.emplace(std::stoi(key), laurent_value_in(ambient, value));

    std::map<int, std::string> labels;
    if (j.contains("labels"))
        for (const auto& [key, value] : j.at("labels").items())
            labels[std::stoi(key)] = value.get<std::string>();

    bool frozen_invertible = j.value("frozen_invertible", false);
    Seed seed(std::move(quiver), std::move(ambient), std::move(generator_names), std::move(vars),
              std::move(labels), frozen_invertible);
    if (j.contains("cartan"))
        seed.cartan_name = j.at("cartan").get<std::string>();
    if (j.contains("word"))
        seed.word = word_from(j.at("word"));
    return seed;
}

} // namespace

std::string laurent_to_json(const LaurentPolynomial& f) {
    return laurent_value(f).dump(2);
}

LaurentPolynomial laurent_from_json(const AmbientPtr& ambient, const std::string& text) {
    return laurent_value_in(ambient, parse(text));
}

std::string seed_to_json(const Seed& seed) {
    return seed_value(seed).dump(2);
}

Seed seed_from_json(const std::string& text) {
    return seed_from(parse(text));
}

std::string morphism_to_json(const ClusterMorphism& phi, const std::string& source_ref,
                             const std::string& target_ref) {
    ordered out = ordered::object();
    out["source_ref"] = source_ref;
    out["target_ref"] = target_ref;
    ordered map = ordered::object();
    for (int v : phi.source().quiver().vertices()) {
        if (phi.kills(v))
            map[std::to_string(v)] = nullptr;
        else
            map[std::to_string(v)] = phi.vertex_map().at(v);
    }
    out["map"] = std::move(map);
    return out.dump(2);
}

ClusterMorphism morphism_from_json(const std::string& text,
                                   const std::function<Seed(const std::string&)>& load_seed) {
    json j = parse(text);
    Seed source = load_seed(j.at("source_ref").get<std::string>());
    Seed target = load_seed(j.at("target_ref").get<std::string>());
    std::map<int, int> vmap;
    std::set<int> kill;
    for (const auto& [key, value] : j.at("map").items()) {
        int v = std::stoi(key);
        if (value.is_null())
            kill.insert(v);
        else
            vmap[v] = value.get<int>();
    }
    return ClusterMorphism(SeedContext::of(source), SeedContext::of(target), std::move(vmap),
                           std::move(kill));
}

std::string morphism_report_to_json(const MorphismReport& report) {
    ordered out = ordered::object();
    out["ok"] = report.ok;
    ordered violations = ordered::array();
    for (const MorphismViolation& v : report.violations) {
        ordered item = ordered::object();
        item["condition"] = v.condition;
        item["detail"] = v.detail;
        violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
    return out.dump(2);
}

std::string decomposition_to_json(const Decomposition& d) {
    ordered out = ordered::object();
    out["F"] = d.kill;
    ordered sigma = ordered::object();
    for (const auto& [v, w] : d.relabel)
        sigma[std::to_string(v)] = w;
    out["sigma"] = std::move(sigma);
    out["E"] = d.unfrozen;
    out["H"] = d.complement;
    return out.dump(2);
}

std::string exchange_report_to_json(const ExchangeReport& report) {
    ordered out = ordered::object();
    out["word"] = word_value(report.word);
    out["vertex"] = report.vertex;
    out["mode"] = report.mode;
    out["result"] = report.passed;
    out["detail"] = report.detail;
    if (!report.counterexample.empty()) {
        ordered point = ordered::object();
        for (const auto& [key, value] : report.counterexample)
            point[key] = value;
        out["counterexample"] = std::move(point);
    }
    return out.dump(2);
}

std::string enumeration_to_json(const ClusterEnumeration& e) {
    ordered out = ordered::object();
    out["seed_count"] = e.seed_count;
    ordered variables = ordered::array();
    for (const LaurentPolynomial& v : e.variables) {
        ordered item = ordered::object();
        item["text"] = v.to_string();
        item["terms"] = laurent_value(v);
        variables.push_back(std::move(item));
    }
    out["variables"] = std::move(variables);
    return out.dump(2);
}

std::string minor_to_json(const MinorExpression& m) {
    ordered out = ordered::object();
    out["rows"] = m.rows;
    out["cols"] = m.cols;
    out["value"] = laurent_value(m.value);
    out["text"] = m.value.to_string();
    return out.dump(2);
}

CartanDatum cartan_from_json(const std::string& text) {
    json j = parse(text);
    std::vector<std::vector<int>> matrix;
    for (const json& row : j.at("matrix")) {
        std::vector<int> entries;
        for (const json& e : row)
            entries.push_back(e.get<int>());
        matrix.push_back(std::move(entries));
    }
    return CartanDatum::from_matrix(std::move(matrix), j.value("name", std::string("custom")));
}

} // namespace clusterkit
