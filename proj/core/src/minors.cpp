#include "clusterkit/minors.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>

namespace clusterkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/* Denominator in [1,10], value in [-10,10]. */
Rational draw_rational(std::uint64_t& state) {
    const long den = 1 + static_cast<long>(splitmix64(state) % 10);
    const long span = 20 * den + 1;
    const long num = static_cast<long>(splitmix64(state) % static_cast<std::uint64_t>(span)) -
                     10 * den;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

int word_max_letter(const Word& word) {
    int r = 0;
    for (int letter : word)
        r = std::max(r, letter);
    return r;
}

LaurentPolynomial cofactor_det(const AmbientPtr& ambient,
                               const std::vector<std::vector<LaurentPolynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return LaurentPolynomial::constant(ambient, Rational(1));
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

UnitriangularGeneric::UnitriangularGeneric(int rank) : rank_(rank) {
    if (rank < 1 || rank > 8)
        throw index_out_of_range_error("rank " + std::to_string(rank) + " outside [1,8]");
    std::vector<std::string> names;
    for (int a = 1; a <= rank; ++a)
        for (int b = a + 1; b <= rank + 1; ++b)
            names.push_back(entry_name(a, b));
    ambient_ = Ambient::make(std::move(names));
}

std::string UnitriangularGeneric::entry_name(int a, int b) {
    return "x" + std::to_string(a) + std::to_string(b);
}

LaurentPolynomial UnitriangularGeneric::entry(int a, int b) const {
    if (a < 1 || a > size() || b < 1 || b > size())
        throw index_out_of_range_error("matrix index outside [1," + std::to_string(size()) + "]");
    if (a == b)
        return LaurentPolynomial::constant(ambient_, Rational(1));
    if (a > b)
        return LaurentPolynomial::zero(ambient_);
    return LaurentPolynomial::variable(ambient_, entry_name(a, b));
}

LaurentPolynomial determinant(const AmbientPtr& ambient,
                              const std::vector<std::vector<LaurentPolynomial>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw index_out_of_range_error("determinant needs a square matrix");
    if (n <= 3)
        return cofactor_det(ambient, m);

    std::vector<std::vector<LaurentPolynomial>> work = m;
    bool negate = false;
    LaurentPolynomial prev = LaurentPolynomial::constant(ambient, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work[k][k].is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!work[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == k)
                return LaurentPolynomial::zero(ambient);
            std::swap(work[k], work[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPolynomial num = work[k][k] * work[i][j] - work[i][k] * work[k][j];
                work[i][j] = k == 0 ? std::move(num) : exact_divide(num, prev);
            }
            work[i][k] = LaurentPolynomial::zero(ambient);
        }
        prev = work[k][k];
    }
    LaurentPolynomial det = work[n - 1][n - 1];
    return negate ? -det : det;
}

int apply_word_to_index(int rank, const Word& w, int j) {
    if (j < 1 || j > rank + 1)
        throw index_out_of_range_error("index " + std::to_string(j) + " outside [1," +
                                       std::to_string(rank + 1) + "]");
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int letter = *it;
        if (letter < 1 || letter > rank)
            throw index_out_of_range_error("letter " + std::to_string(letter) +
                                           " outside [1," + std::to_string(rank) + "]");
        if (j == letter)
            j = letter + 1;
        else if (j == letter + 1)
            j = letter;
    }
    return j;
}

MinorExpression generalized_minor(int rank, const Word& u, const Word& v, int i) {
    const CartanDatum cartan = CartanDatum::type_a(rank);
    if (!is_reduced(cartan, u))
        throw not_reduced_error("left word is not reduced");
    if (!is_reduced(cartan, v))
        throw not_reduced_error("right word is not reduced");
    if (i < 1 || i > rank)
        throw index_out_of_range_error("fundamental index " + std::to_string(i) + " outside [1," +
                                       std::to_string(rank) + "]");
    std::vector<int> rows;
    std::vector<int> cols;
    for (int j = 1; j <= i; ++j) {
        rows.push_back(apply_word_to_index(rank, v, j));
        cols.push_back(apply_word_to_index(rank, u, j));
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());

    UnitriangularGeneric generic(rank);
    std::vector<std::vector<LaurentPolynomial>> sub;
    sub.reserve(rows.size());
    for (int a : rows) {
        std::vector<LaurentPolynomial> row;
        row.reserve(cols.size());
        for (int b : cols)
            row.push_back(generic.entry(a, b));
        sub.push_back(std::move(row));
    }
    return MinorExpression{std::move(rows), std::move(cols),
                           determinant(generic.ambient(), sub)};
}

std::map<int, MinorExpression> realize_seed(const Word& word, int p) {
    const int n = static_cast<int>(word.size());
    if (p < 0 || p > n)
        throw prefix_out_of_range_error("prefix length " + std::to_string(p) + " outside [0," +
                                        std::to_string(n) + "]");
    std::map<int, MinorExpression> out;
    if (word.empty())
        return out;
    const int rank = word_max_letter(word);
    const CartanDatum cartan = CartanDatum::type_a(rank);
    if (!is_reduced(cartan, word))
        throw not_reduced_error("word is not reduced");
    const Word v(word.begin(), word.begin() + p);
    for (int l = p + 1; l <= n; ++l) {
        const Word u(word.begin(), word.begin() + l);
        out.emplace(l, generalized_minor(rank, u, v, word[static_cast<std::size_t>(l) - 1]));
    }
    return out;
}

bool nonvanishing(int rank, const Word& u, const Word& v, int i) {
    return !generalized_minor(rank, u, v, i).value.is_zero();
}

RootVector entry_degree(int rank, int a, int b) {
    if (a < 1 || b > rank + 1 || a >= b)
        throw index_out_of_range_error("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                       ") is not above the diagonal");
    std::vector<long long> coords(static_cast<std::size_t>(rank), 0);
    for (int t = a; t < b; ++t)
        coords[static_cast<std::size_t>(t) - 1] = 1;
    return RootVector(std::move(coords));
}

std::optional<RootVector> homogeneous_degree(int rank, const LaurentPolynomial& value) {
    if (value.is_zero())
        return std::nullopt;
    std::optional<RootVector> common;
    for (const auto& [mono, coeff] : value.terms()) {
        RootVector degree = RootVector::zero(rank);
        for (const auto& [var, exp] : mono.entries()) {
            const std::string& name = value.ambient()->name(static_cast<std::size_t>(var));
            if (name.size() != 3 || name[0] != 'x')
                throw internal_error("unexpected variable name " + name);
            const int a = name[1] - '0';
            const int b = name[2] - '0';
            RootVector d = entry_degree(rank, a, b);
            for (int e = 0; e < exp; ++e)
                degree = degree + d;
            for (int e = 0; e > exp; --e)
                degree = degree - d;
        }
        if (!common)
            common = degree;
        else if (!(*common == degree))
            return std::nullopt;
    }
    return common;
}

LaurentPolynomial substitute_minors(const Seed& seed, const LaurentPolynomial& f,
                                    const std::map<int, MinorExpression>& images) {
    if (!same_ambient(f.ambient(), seed.ambient()))
        throw ambient_mismatch_error("polynomial is not over the seed's ambient");
    if (images.empty())
        throw invalid_morphism_error("no minor images to substitute");
    const AmbientPtr& target = images.begin()->second.value.ambient();

    std::map<std::string, const LaurentPolynomial*> image_of_name;
    for (const auto& [vertex, name] : seed.generator_names()) {
        auto it = images.find(vertex);
        if (it == images.end())
            throw unknown_vertex_error("vertex " + std::to_string(vertex) +
                                       " has no minor image");
        image_of_name.emplace(name, &it->second.value);
    }

    /* Clear denominators: f = g / prod x_v^{d_v} with g a true polynomial. */
    std::map<int, int> clearing;
    for (const auto& [mono, coeff] : f.terms())
        for (const auto& [var, exp] : mono.entries())
            if (exp < 0) {
                int& d = clearing[var];
                d = std::max(d, -exp);
            }
    std::vector<std::pair<int, int>> clear_pairs(clearing.begin(), clearing.end());
    LaurentPolynomial g =
        f * LaurentPolynomial::term(f.ambient(), Monomial::from_pairs(clear_pairs), Rational(1));

    LaurentPolynomial mapped = map_variables(g, target, [&](const std::string& name) {
        return *image_of_name.at(name);
    });
    if (clearing.empty())
        return mapped;

    LaurentPolynomial divisor = LaurentPolynomial::constant(target, Rational(1));
    for (const auto& [var, d] : clearing) {
        const std::string& name = f.ambient()->name(static_cast<std::size_t>(var));
        for (int e = 0; e < d; ++e)
            divisor *= *image_of_name.at(name);
    }
    return exact_divide(mapped, divisor);
}

ExchangeReport verify_exchange(const Word& word, int k, VerifyMode mode, int trials,
                               std::uint64_t prng_seed) {
    ExchangeReport report;
    report.word = word;
    report.vertex = k;
    report.mode = mode == VerifyMode::exact ? "exact" : "pit";

    const int rank = word_max_letter(word);
    const CartanDatum cartan = CartanDatum::type_a(rank);
    Seed s = build_nw_seed(cartan, word);
    if (!s.quiver().is_mutable(k))
        throw frozen_vertex_error("vertex " + std::to_string(k) + " is frozen");
    std::map<int, MinorExpression> images = realize_seed(word, 0);
    Seed s2 = mutate_seed(s, k);

    if (mode == VerifyMode::exact) {
        LaurentPolynomial binom = exchange_binomial(s, k);
        LaurentPolynomial sub_binom = substitute_minors(s, binom, images);
        LaurentPolynomial quotient = LaurentPolynomial::zero(sub_binom.ambient());
        try {
            quotient = exact_divide(sub_binom, images.at(k).value);
        } catch (const not_divisible_error& e) {
            report.passed = false;
            report.detail = "exchange binomial is not divisible by the minor at the vertex";
            report.counterexample["binomial"] = sub_binom.to_string();
            report.counterexample["divisor"] = images.at(k).value.to_string();
            report.counterexample["error"] = e.what();
            return report;
        }
        LaurentPolynomial expected = substitute_minors(s, s2.var(k), images);
        if (!(quotient == expected)) {
            report.passed = false;
            report.detail = "quotient differs from the substituted mutated variable";
            report.counterexample["quotient"] = quotient.to_string();
            report.counterexample["expected"] = expected.to_string();
            return report;
        }
        Seed s3 = mutate_seed(s2, k);
        if (!(s3 == s)) {
            report.passed = false;
            report.detail = "mutating twice does not return the original seed";
            return report;
        }
        report.passed = true;
        report.detail = "exchange identity holds under the minor realization";
        return report;
    }

    if (trials < 1)
        throw index_out_of_range_error("pit mode needs at least one trial");
    const std::vector<std::string>& names = images.begin()->second.value.ambient()->names();
    std::uint64_t state = prng_seed;
    for (int trial = 0; trial < trials; ++trial) {
        std::map<std::string, Rational> point;
        std::map<int, Rational> minor_value;
        bool good = false;
        for (int attempt = 0; attempt < 1000 && !good; ++attempt) {
            point.clear();
            minor_value.clear();
            for (const std::string& name : names)
                point[name] = draw_rational(state);
            good = true;
            for (const auto& [vertex, expr] : images) {
                Rational val = evaluate(expr.value, point);
                if (val == 0) {
                    good = false;
                    break;
                }
                minor_value[vertex] = val;
            }
        }
        if (!good) {
            report.passed = false;
            report.detail = "could not sample a point with all minors nonzero";
            return report;
        }

        std::map<std::string, Rational> assignment;
        for (const auto& [vertex, name] : s.generator_names())
            assignment[name] = minor_value.at(vertex);
        Rational lhs = evaluate(s2.var(k), assignment) * minor_value.at(k);

        Rational pos(1);
        Rational neg(1);
        for (int i : s.quiver().vertices()) {
            const int e = s.quiver().b(i, k);
            if (e > 0)
                pos *= rational_pow(minor_value.at(i), e);
            else if (e < 0)
                neg *= rational_pow(minor_value.at(i), -e);
        }
        Rational rhs = pos + neg;
        if (!(lhs == rhs)) {
            report.passed = false;
            report.detail = "numeric exchange relation fails: lhs " + rational_to_string(lhs) +
                            ", rhs " + rational_to_string(rhs);
            for (const auto& [name, val] : point)
                report.counterexample[name] = rational_to_string(val);
            return report;
        }
    }
    report.passed = true;
    report.detail = std::to_string(trials) + " random points agree";
    return report;
}

} // namespace clusterkit
