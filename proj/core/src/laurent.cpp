#include "clusterkit/laurent.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace clusterkit {

/* ---------------------------------------------------------------- Ambient */

Ambient::Ambient(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("ambient variable names must be nonempty");
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!inserted)
            throw std::invalid_argument("duplicate ambient variable name '" + names_[i] + "'");
    }
}

AmbientPtr Ambient::make(std::vector<std::string> names) {
    return std::make_shared<const Ambient>(std::move(names));
}

const std::string& Ambient::name(std::size_t index) const {
    if (index >= names_.size())
        throw index_out_of_range_error("ambient index " + std::to_string(index) + " out of range");
    return names_[index];
}

int Ambient::index_of(std::string_view name) const noexcept {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

std::string Ambient::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i)
            out += ", ";
        out += names_[i];
    }
    out += "}";
    return out;
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) noexcept {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

namespace {

void require_same_ambient(const LaurentPolynomial& a, const LaurentPolynomial& b,
                          const char* operation) {
    if (!same_ambient(a.ambient(), b.ambient()))
        throw ambient_mismatch_error(std::string(operation) + ": ambient mismatch between " +
                                     a.ambient()->to_string() + " and " + b.ambient()->to_string());
}

} // namespace

/* --------------------------------------------------------------- Monomial */

Monomial Monomial::single(int var, int exp) {
    Monomial m;
    if (exp != 0)
        m.exps_.emplace_back(var, exp);
    return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [var, exp] : pairs) {
        if (!m.exps_.empty() && m.exps_.back().first == var)
            m.exps_.back().second += exp;
        else
            m.exps_.emplace_back(var, exp);
    }
    std::erase_if(m.exps_, [](const auto& e) { return e.second == 0; });
    return m;
}

int Monomial::exponent(int var) const noexcept {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), std::pair<int, int>{var, std::numeric_limits<int>::min()});
    if (it != exps_.end() && it->first == var)
        return it->second;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + other.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        if (j == other.exps_.size() || (i < exps_.size() && exps_[i].first < other.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() || other.exps_[j].first < exps_[i].first) {
            out.exps_.push_back(other.exps_[j++]);
        } else {
            const int sum = exps_[i].second + other.exps_[j].second;
            if (sum != 0)
                out.exps_.emplace_back(exps_[i].first, sum);
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    return times(other.power(-1));
}

Monomial Monomial::power(int e) const {
    Monomial out;
    if (e == 0)
        return out;
    out.exps_.reserve(exps_.size());
    for (const auto& [var, exp] : exps_)
        out.exps_.emplace_back(var, exp * e);
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    // Every exponent of `this` must be <= the matching exponent of `other`,
    // and variables absent from `other` count as 0.
    std::size_t i = 0, j = 0;
    while (i < exps_.size()) {
        while (j < other.exps_.size() && other.exps_[j].first < exps_[i].first)
            ++j;
        const int theirs = (j < other.exps_.size() && other.exps_[j].first == exps_[i].first)
                               ? other.exps_[j].second
                               : 0;
        if (exps_[i].second > theirs)
            return false;
        ++i;
    }
    return true;
}

int Monomial::compare(const Monomial& other) const noexcept {
    std::size_t i = 0, j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        const int vi = i < exps_.size() ? exps_[i].first : std::numeric_limits<int>::max();
        const int vj = j < other.exps_.size() ? other.exps_[j].first : std::numeric_limits<int>::max();
        int ei = 0, ej = 0;
        if (vi <= vj)
            ei = exps_[i].second;
        if (vj <= vi)
            ej = other.exps_[j].second;
        if (ei != ej)
            return ei < ej ? -1 : 1;
        if (vi <= vj)
            ++i;
        if (vj <= vi)
            ++j;
    }
    return 0;
}

/* ------------------------------------------------------ LaurentPolynomial */

LaurentPolynomial LaurentPolynomial::zero(AmbientPtr ambient) {
    return LaurentPolynomial(std::move(ambient));
}

LaurentPolynomial LaurentPolynomial::constant(AmbientPtr ambient, Rational value) {
    LaurentPolynomial p(std::move(ambient));
    if (value != 0)
        p.terms_.emplace(Monomial{}, std::move(value));
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(AmbientPtr ambient, std::string_view name, int exp) {
    const int idx = ambient->index_of(name);
    if (idx < 0)
        throw unknown_variable_error("variable '" + std::string(name) + "' not in ambient " +
                                     ambient->to_string());
    LaurentPolynomial p(std::move(ambient));
    p.terms_.emplace(Monomial::single(idx, exp), Rational(1));
    return p;
}

LaurentPolynomial LaurentPolynomial::term(AmbientPtr ambient, Monomial monomial, Rational coeff) {
    LaurentPolynomial p(std::move(ambient));
    if (coeff != 0)
        p.terms_.emplace(std::move(monomial), std::move(coeff));
    return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(AmbientPtr ambient, TermMap terms) {
    LaurentPolynomial p(std::move(ambient));
    p.terms_ = std::move(terms);
    std::erase_if(p.terms_, [](const auto& t) { return t.second == 0; });
    return p;
}

bool LaurentPolynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool LaurentPolynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

Rational LaurentPolynomial::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw error("constant_value on non-constant polynomial " + to_string());
    return terms_.begin()->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out(ambient_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    require_same_ambient(*this, other, "add");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    require_same_ambient(*this, other, "subtract");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_ambient(a, b, "multiply");
    LaurentPolynomial out = LaurentPolynomial::zero(a.ambient());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial LaurentPolynomial::power(int e) const {
    if (e == 0)
        return constant(ambient_, Rational(1));
    if (e < 0) {
        if (terms_.size() != 1)
            throw not_divisible_error("negative power of non-monomial " + to_string());
        const auto& [m, c] = *terms_.begin();
        return term(ambient_, m.power(e), rational_pow(c, e));
    }
    LaurentPolynomial acc = constant(ambient_, Rational(1));
    LaurentPolynomial base = *this;
    int n = e;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return acc;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const noexcept {
    if (!same_ambient(ambient_, other.ambient_))
        return false;
    return terms_ == other.terms_;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit_mono = m.is_unit();
        if (abs != 1 || unit_mono) {
            out << rational_to_string(abs);
            if (!unit_mono)
                out << "*";
        }
        bool first_var = true;
        for (const auto& [var, exp] : m.entries()) {
            if (!first_var)
                out << "*";
            first_var = false;
            out << ambient_->name(static_cast<std::size_t>(var));
            if (exp != 1)
                out << "^" << exp;
        }
    }
    return out.str();
}

LaurentPolynomial combine(const LaurentPolynomial& a, const LaurentPolynomial& b, RingOp op) {
    switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
    }
    throw internal_error("combine: unknown ring operation");
}

/* ---------------------------------------------------------- exact_divide */

namespace {

/* Splits f = x^shift * F with F a true polynomial whose per-variable minimum
   exponent is exactly zero. Returns {F-terms, shift}. */
std::pair<LaurentPolynomial::TermMap, Monomial> polynomial_part(const LaurentPolynomial& f) {
    std::map<int, int> min_exp; // variable -> minimal exponent over all terms
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        for (const auto& [var, exp] : m.entries()) {
            auto [it, inserted] = min_exp.emplace(var, exp);
            if (!inserted)
                it->second = std::min(it->second, exp);
        }
    }
    // A variable missing from some term has exponent 0 there.
    for (auto& [var, mn] : min_exp) {
        for (const auto& [m, c] : f.terms()) {
            (void)c;
            if (m.exponent(var) == 0) {
                mn = std::min(mn, 0);
                break;
            }
        }
    }
    std::vector<std::pair<int, int>> shift_pairs;
    for (const auto& [var, mn] : min_exp)
        if (mn != 0)
            shift_pairs.emplace_back(var, mn);
    const Monomial shift = Monomial::from_pairs(std::move(shift_pairs));
    const Monomial unshift = shift.power(-1);
    LaurentPolynomial::TermMap out;
    for (const auto& [m, c] : f.terms())
        out.emplace(m.times(unshift), c);
    return {std::move(out), shift};
}

} // namespace

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_ambient(a, b, "exact_divide");
    if (b.is_zero())
        throw divide_by_zero_error("exact_divide by zero polynomial");
    if (a.is_zero())
        return LaurentPolynomial::zero(a.ambient());

    auto [rem, shift_a] = polynomial_part(a);
    auto [den, shift_b] = polynomial_part(b);

    const auto& lead_b = *den.rbegin();
    LaurentPolynomial::TermMap quot;
    while (!rem.empty()) {
        const auto& lead_r = *rem.rbegin();
        if (!lead_b.first.divides(lead_r.first))
            throw not_divisible_error("exact_divide: " + b.to_string() + " does not divide " +
                                      a.to_string());
        const Monomial t = lead_r.first.divided_by(lead_b.first);
        const Rational c = lead_r.second / lead_b.second;
        quot.emplace(t, c);
        // rem -= (c, t) * den; the leading term cancels by construction.
        for (const auto& [m, cb] : den) {
            const Monomial prod = m.times(t);
            const Rational delta = cb * c;
            auto [it, inserted] = rem.emplace(prod, -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0)
                    rem.erase(it);
            }
        }
    }
    const Monomial fix = shift_a.divided_by(shift_b);
    LaurentPolynomial::TermMap out;
    for (auto& [m, c] : quot)
        out.emplace(m.times(fix), std::move(c));
    return LaurentPolynomial::from_terms(a.ambient(), std::move(out));
}

/* ------------------------------------------------------------ specialize */

LaurentPolynomial specialize(const LaurentPolynomial& f,
                             const std::map<std::string, Rational>& assignment) {
    const AmbientPtr& ambient = f.ambient();
    std::map<int, Rational> by_index;
    for (const auto& [name, value] : assignment) {
        const int idx = ambient->index_of(name);
        if (idx < 0)
            throw unknown_variable_error("specialize: variable '" + name + "' not in ambient " +
                                         ambient->to_string());
        by_index.emplace(idx, value);
    }
    LaurentPolynomial::TermMap out;
    for (const auto& [m, c] : f.terms()) {
        Rational coeff = c;
        std::vector<std::pair<int, int>> rest;
        bool vanished = false;
        for (const auto& [var, exp] : m.entries()) {
            auto it = by_index.find(var);
            if (it == by_index.end()) {
                rest.emplace_back(var, exp);
                continue;
            }
            if (it->second == 0) {
                if (exp < 0)
                    throw zero_to_negative_power_error(
                        "specialize: variable '" + ambient->name(static_cast<std::size_t>(var)) +
                        "' set to 0 appears with exponent " + std::to_string(exp));
                vanished = true;
                break;
            }
            coeff *= rational_pow(it->second, exp);
        }
        if (vanished)
            continue;
        const Monomial mono = Monomial::from_pairs(std::move(rest));
        auto [it, inserted] = out.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                out.erase(it);
        }
    }
    return LaurentPolynomial::from_terms(ambient, std::move(out));
}

Rational evaluate(const LaurentPolynomial& f, const std::map<std::string, Rational>& point) {
    const LaurentPolynomial value = specialize(f, point);
    if (!value.is_constant()) {
        throw error("evaluate: point leaves variables unassigned in " + value.to_string());
    }
    return value.constant_value();
}

/* --------------------------------------------------------- map_variables */

LaurentPolynomial map_variables(const LaurentPolynomial& f, const AmbientPtr& target,
                                const std::function<LaurentPolynomial(const std::string&)>& image) {
    const AmbientPtr& src = f.ambient();
    // Cache per-variable images; every image must live over `target`.
    std::map<int, LaurentPolynomial> images;
    auto image_of = [&](int var) -> const LaurentPolynomial& {
        auto it = images.find(var);
        if (it == images.end()) {
            LaurentPolynomial img = image(src->name(static_cast<std::size_t>(var)));
            if (!same_ambient(img.ambient(), target))
                throw ambient_mismatch_error("map_variables: image of '" +
                                             src->name(static_cast<std::size_t>(var)) +
                                             "' lives over " + img.ambient()->to_string() +
                                             ", expected " + target->to_string());
            it = images.emplace(var, std::move(img)).first;
        }
        return it->second;
    };
    LaurentPolynomial out = LaurentPolynomial::zero(target);
    for (const auto& [m, c] : f.terms()) {
        LaurentPolynomial prod = LaurentPolynomial::constant(target, c);
        for (const auto& [var, exp] : m.entries())
            prod = prod * image_of(var).power(exp);
        out += prod;
    }
    return out;
}

} // namespace clusterkit
