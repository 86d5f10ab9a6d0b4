#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/richardson.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterkit {

/* Generic unitriangular matrix of size rank+1: ones on the diagonal, zeros
   below, an independent variable x{a}{b} at each entry above. */
class UnitriangularGeneric {
public:
    explicit UnitriangularGeneric(int rank); // supports rank 1..8

    int rank() const noexcept { return rank_; }
    int size() const noexcept { return rank_ + 1; }
    const AmbientPtr& ambient() const noexcept { return ambient_; }

    static std::string entry_name(int a, int b);
    LaurentPolynomial entry(int a, int b) const;

private:
    int rank_;
    AmbientPtr ambient_;
};

struct MinorExpression {
    std::vector<int> rows;
    std::vector<int> cols;
    LaurentPolynomial value;
};

/* Exact determinant: cofactor expansion up to 3x3, fraction-free Gaussian
   elimination above. */
LaurentPolynomial determinant(const AmbientPtr& ambient,
                              const std::vector<std::vector<LaurentPolynomial>>& m);

/* Image of index j in [1, rank+1] under the permutation realization of the
   word (letter i swaps i and i+1; the last letter applies first). */
int apply_word_to_index(int rank, const Word& w, int j);

/* Minor with rows v{1..i} and columns u{1..i}, both sorted. */
MinorExpression generalized_minor(int rank, const Word& u, const Word& v, int i);

/* Minor realization of each surviving label of the seed on positions > p;
   the rank is the largest letter of the word. */
std::map<int, MinorExpression> realize_seed(const Word& word, int p = 0);

/* True iff the minor is not the zero polynomial. */
bool nonvanishing(int rank, const Word& u, const Word& v, int i);

/* Root-lattice degree of x{a}{b}: the sum of the simple roots a..b-1. */
RootVector entry_degree(int rank, int a, int b);

/* Common root-lattice degree of all monomials, or nullopt when the
   polynomial is zero or inhomogeneous. */
std::optional<RootVector> homogeneous_degree(int rank, const LaurentPolynomial& value);

/* Replaces each seed variable in f by its minor realization; denominators
   are cleared first and divided out exactly afterwards. */
LaurentPolynomial substitute_minors(const Seed& seed, const LaurentPolynomial& f,
                                    const std::map<int, MinorExpression>& images);

enum class VerifyMode { exact, pit };

struct ExchangeReport {
    Word word;
    int vertex = 0;
    std::string mode;
    bool passed = false;
    std::string detail;
    std::map<std::string, std::string> counterexample;
};

/* Checks the exchange relation at a mutable vertex of the cell seed under
   the minor realization. Exact mode substitutes minors into the exchange
   binomial, divides by the minor at the vertex, compares the quotient with
   the substituted mutated variable, and checks mutation is an involution.
   Pit mode evaluates the mutated variable and the binomial at `trials`
   random rational points (minor values bounded away from zero by rejection)
   and compares products numerically. */
ExchangeReport verify_exchange(const Word& word, int k, VerifyMode mode, int trials = 20,
                               std::uint64_t prng_seed = 1);

} // namespace clusterkit
