#pragma once

#include "clusterkit/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clusterkit {

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

/* Ordered list of distinct variable names. Polynomials over different
   ambients never mix implicitly; every binary operation checks that both
   operands share one. The declaration order fixes the canonical term order
   (lexicographic, earlier variables weigh more). */
class Ambient {
public:
    static AmbientPtr make(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t index) const;

    /* -1 when the name is not declared. */
    int index_of(std::string_view name) const noexcept;

    bool operator==(const Ambient& other) const noexcept { return names_ == other.names_; }

    std::string to_string() const; // "{x1, x2, x3}"

    explicit Ambient(std::vector<std::string> names);

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) noexcept;

/* Exponent vector with entries of either sign, sparse over ambient variable
   indices. The empty monomial is the ring unit. */
class Monomial {
public:
    Monomial() = default;
    static Monomial single(int var, int exp);
    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& entries() const noexcept { return exps_; }
    int exponent(int var) const noexcept;
    bool is_unit() const noexcept { return exps_.empty(); }

    Monomial times(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;
    Monomial power(int e) const;

    /* True when other/this has only nonnegative exponents. */
    bool divides(const Monomial& other) const noexcept;

    /* Lexicographic order in ambient variable order: at the first variable
       index whose exponents differ, the larger exponent wins. */
    int compare(const Monomial& other) const noexcept;

    bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

private:
    std::vector<std::pair<int, int>> exps_; // sorted by variable index, exponents nonzero
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a.compare(b) < 0; }
};

enum class RingOp { add, sub, mul };

/* Sparse multivariate Laurent polynomial with exact rational coefficients.
   Terms are kept in canonical order with no zero coefficients. */
class LaurentPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    static LaurentPolynomial zero(AmbientPtr ambient);
    static LaurentPolynomial constant(AmbientPtr ambient, Rational value);
    static LaurentPolynomial variable(AmbientPtr ambient, std::string_view name, int exp = 1);
    static LaurentPolynomial term(AmbientPtr ambient, Monomial monomial, Rational coeff);
    static LaurentPolynomial from_terms(AmbientPtr ambient, TermMap terms);

    const AmbientPtr& ambient() const noexcept { return ambient_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /* Value of a constant polynomial (zero -> 0); throws otherwise. */
    Rational constant_value() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /* e >= 0 always works; e < 0 requires a single-term polynomial. */
    LaurentPolynomial power(int e) const;

    bool operator==(const LaurentPolynomial& other) const noexcept;

    /* Deterministic human-readable form, leading term first. */
    std::string to_string() const;

private:
    explicit LaurentPolynomial(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

    void add_term(const Monomial& m, const Rational& c);

    AmbientPtr ambient_;
    TermMap terms_;
};

/* Spec-facing entry point; delegates to the operators. */
LaurentPolynomial combine(const LaurentPolynomial& a, const LaurentPolynomial& b, RingOp op);

/* Exact quotient a/b in the Laurent ring. Raises not_divisible_error when b
   does not divide a and divide_by_zero_error when b = 0. Implemented by
   clearing both operands to true polynomials (splitting off the per-variable
   minimal exponents) and eliminating leading terms under the canonical
   order, which strictly decreases and therefore terminates. */
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

/* Substitutes rational values for a subset of the variables; the result
   stays over the same ambient. A variable assigned 0 must not appear with a
   negative exponent. */
LaurentPolynomial specialize(const LaurentPolynomial& f,
                             const std::map<std::string, Rational>& assignment);

/* Full evaluation; every variable occurring in f must be assigned. */
Rational evaluate(const LaurentPolynomial& f, const std::map<std::string, Rational>& point);

/* Ring homomorphism determined by per-variable images. Images raised to
   negative exponents must be single-term polynomials. */
LaurentPolynomial map_variables(const LaurentPolynomial& f, const AmbientPtr& target,
                                const std::function<LaurentPolynomial(const std::string&)>& image);

} // namespace clusterkit
