#pragma once

#include <set>
#include <string>
#include <vector>

namespace clusterkit {

/* Word in the simple reflections, letters 1-based. Acting on a vector, the
   word acts as the product of its letters: the last letter applies first. */
using Word = std::vector<int>;

/* Symmetric generalized Cartan matrix over 1-based letters. */
class CartanDatum {
public:
    /* "A1".."A5" (path) or "D4" (letter 2 is the branch point). */
    static CartanDatum preset(const std::string& name);
    static CartanDatum from_matrix(std::vector<std::vector<int>> matrix, std::string name = "custom");
    /* Path diagram of any rank (helper for simply laced type A of any size). */
    static CartanDatum type_a(int rank);

    int rank() const noexcept { return static_cast<int>(matrix_.size()); }
    int c(int i, int j) const; // 1-based, throws index_out_of_range_error
    const std::string& name() const noexcept { return name_; }
    bool operator==(const CartanDatum& other) const noexcept { return matrix_ == other.matrix_; }

private:
    CartanDatum(std::vector<std::vector<int>> matrix, std::string name);

    std::vector<std::vector<int>> matrix_;
    std::string name_;
};

/* Integer vector in fundamental-weight coordinates. */
class Weight {
public:
    explicit Weight(std::vector<long long> coords) : coords_(std::move(coords)) {}
    static Weight zero(int rank);
    static Weight fundamental(int rank, int i);

    int rank() const noexcept { return static_cast<int>(coords_.size()); }
    long long operator[](int i) const; // 1-based
    const std::vector<long long>& coords() const noexcept { return coords_; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const noexcept { return coords_ == o.coords_; }

    std::string to_string() const;

private:
    std::vector<long long> coords_;
};

/* Integer vector in simple-root coordinates. */
class RootVector {
public:
    explicit RootVector(std::vector<long long> coords) : coords_(std::move(coords)) {}
    static RootVector zero(int rank);
    static RootVector simple(int rank, int i);

    int rank() const noexcept { return static_cast<int>(coords_.size()); }
    long long operator[](int i) const; // 1-based
    const std::vector<long long>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    /* All coordinates >= 0 and not all zero. In a crystallographic root
       system every real root is positive or negative, so this decides sign. */
    bool is_positive() const noexcept;
    bool is_negative() const noexcept;

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;
    bool operator==(const RootVector& o) const noexcept { return coords_ == o.coords_; }
    bool operator<(const RootVector& o) const noexcept { return coords_ < o.coords_; }

    std::string to_string() const;

private:
    std::vector<long long> coords_;
};

/* Simple reflection on weight coordinates: lambda - <h_i, lambda> alpha_i. */
Weight reflect(const CartanDatum& cartan, int i, const Weight& lambda);

/* The same reflection on root coordinates. */
RootVector reflect(const CartanDatum& cartan, int i, const RootVector& beta);

/* Word action, last letter first. */
Weight act(const CartanDatum& cartan, const Word& w, const Weight& lambda);
RootVector act(const CartanDatum& cartan, const Word& w, const RootVector& beta);

/* Pairing <h_i, beta> of a coroot with a root-coordinate vector. */
long long pairing(const CartanDatum& cartan, int i, const RootVector& beta);

bool is_reduced(const CartanDatum& cartan, const Word& w);

/* Roots attached to the positions of a reduced word: entry k is the image of
   the k-th letter's simple root under the length-(k-1) prefix. Requires w
   reduced; for reduced words all entries are positive and distinct. */
std::vector<RootVector> beta_roots(const CartanDatum& cartan, const Word& w);

/* Reduced word for the same group element (greedy descent insertion). */
Word reduce_word(const CartanDatum& cartan, const Word& w);

std::size_t weyl_length(const CartanDatum& cartan, const Word& w);

bool weyl_equal(const CartanDatum& cartan, const Word& a, const Word& b);

/* Whether the lengths add in w = v * (v^{-1} w); both words must be reduced. */
bool length_additive(const CartanDatum& cartan, const Word& w, const Word& v);

/* Bruhat order v <= w via the subword criterion (greedy right-to-left scan);
   both words must be reduced. */
bool bruhat_leq(const CartanDatum& cartan, const Word& v, const Word& w);

/* Positions whose letter never occurs again later; w must be reduced. */
std::set<int> frozen_set(const CartanDatum& cartan, const Word& w);

/* Minimal-length representative of the coset w * <s_j : j in parabolic>,
   obtained by stripping parabolic right descents; w must be reduced. */
Word min_parabolic_representative(const CartanDatum& cartan, const Word& w,
                                  const std::set<int>& parabolic);

} // namespace clusterkit
