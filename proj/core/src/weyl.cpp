#include "clusterkit/weyl.hpp"

#include "clusterkit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace clusterkit {

/* ------------------------------------------------------------ CartanDatum */

CartanDatum::CartanDatum(std::vector<std::vector<int>> matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)) {
    const std::size_t n = matrix_.size();
    if (n == 0)
        throw std::invalid_argument("Cartan matrix must be nonempty");
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix_[i].size() != n)
            throw std::invalid_argument("Cartan matrix must be square");
        if (matrix_[i][i] != 2)
            throw std::invalid_argument("Cartan matrix diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && matrix_[i][j] > 0)
                throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
            if (matrix_[i][j] != matrix_[j][i])
                throw std::invalid_argument("Cartan matrix must be symmetric");
        }
    }
}

CartanDatum CartanDatum::type_a(int rank) {
    if (rank < 1)
        throw std::invalid_argument("type A rank must be >= 1");
    std::vector<std::vector<int>> m(static_cast<std::size_t>(rank),
                                    std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        if (i + 1 < rank) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
            m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
        }
    }
    return CartanDatum(std::move(m), "A" + std::to_string(rank));
}

CartanDatum CartanDatum::preset(const std::string& name) {
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '5')
        return type_a(name[1] - '0');
    if (name == "D4") {
        std::vector<std::vector<int>> m = {
            {2, -1, 0, 0},
            {-1, 2, -1, -1},
            {0, -1, 2, 0},
            {0, -1, 0, 2},
        };
        return CartanDatum(std::move(m), "D4");
    }
    throw std::invalid_argument("unknown Cartan preset '" + name + "' (expected A1..A5 or D4)");
}

CartanDatum CartanDatum::from_matrix(std::vector<std::vector<int>> matrix, std::string name) {
    return CartanDatum(std::move(matrix), std::move(name));
}

int CartanDatum::c(int i, int j) const {
    if (i < 1 || i > rank() || j < 1 || j > rank())
        throw index_out_of_range_error("Cartan index (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") out of range for rank " +
                                       std::to_string(rank()));
    return matrix_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

/* ---------------------------------------------------------------- vectors */

namespace {

void check_letter(const CartanDatum& cartan, int i) {
    if (i < 1 || i > cartan.rank())
        throw index_out_of_range_error("letter " + std::to_string(i) + " out of range for rank " +
                                       std::to_string(cartan.rank()));
}

void check_rank(int have, int want, const char* what) {
    if (have != want)
        throw index_out_of_range_error(std::string(what) + ": rank " + std::to_string(have) +
                                       " does not match Cartan rank " + std::to_string(want));
}

std::string coeff_string(const std::vector<long long>& coords, const char* symbol) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const long long c = coords[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const long long mag = c < 0 ? -c : c;
        if (mag != 1)
            out << mag << "*";
        out << symbol << (i + 1);
    }
    if (first)
        out << "0";
    return out.str();
}

} // namespace

Weight Weight::zero(int rank) { return Weight(std::vector<long long>(static_cast<std::size_t>(rank), 0)); }

Weight Weight::fundamental(int rank, int i) {
    if (i < 1 || i > rank)
        throw index_out_of_range_error("fundamental weight index " + std::to_string(i) +
                                       " out of range for rank " + std::to_string(rank));
    Weight w = zero(rank);
    w.coords_[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

long long Weight::operator[](int i) const {
    if (i < 1 || i > rank())
        throw index_out_of_range_error("weight coordinate " + std::to_string(i) + " out of range");
    return coords_[static_cast<std::size_t>(i - 1)];
}

Weight Weight::operator+(const Weight& o) const {
    check_rank(o.rank(), rank(), "weight add");
    std::vector<long long> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += o.coords_[i];
    return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& o) const {
    check_rank(o.rank(), rank(), "weight subtract");
    std::vector<long long> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= o.coords_[i];
    return Weight(std::move(out));
}

std::string Weight::to_string() const { return coeff_string(coords_, "w"); }

RootVector RootVector::zero(int rank) {
    return RootVector(std::vector<long long>(static_cast<std::size_t>(rank), 0));
}

RootVector RootVector::simple(int rank, int i) {
    if (i < 1 || i > rank)
        throw index_out_of_range_error("simple root index " + std::to_string(i) +
                                       " out of range for rank " + std::to_string(rank));
    RootVector r = zero(rank);
    r.coords_[static_cast<std::size_t>(i - 1)] = 1;
    return r;
}

long long RootVector::operator[](int i) const {
    if (i < 1 || i > rank())
        throw index_out_of_range_error("root coordinate " + std::to_string(i) + " out of range");
    return coords_[static_cast<std::size_t>(i - 1)];
}

bool RootVector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c == 0; });
}

bool RootVector::is_positive() const noexcept {
    return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c >= 0; });
}

bool RootVector::is_negative() const noexcept {
    return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c <= 0; });
}

RootVector RootVector::operator+(const RootVector& o) const {
    check_rank(o.rank(), rank(), "root add");
    std::vector<long long> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += o.coords_[i];
    return RootVector(std::move(out));
}

RootVector RootVector::operator-(const RootVector& o) const {
    check_rank(o.rank(), rank(), "root subtract");
    std::vector<long long> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= o.coords_[i];
    return RootVector(std::move(out));
}

std::string RootVector::to_string() const { return coeff_string(coords_, "a"); }

/* ---------------------------------------------------------------- actions */

Weight reflect(const CartanDatum& cartan, int i, const Weight& lambda) {
    check_letter(cartan, i);
    check_rank(lambda.rank(), cartan.rank(), "reflect");
    // alpha_i has weight coordinates given by column i of the Cartan matrix.
    const long long pair = lambda[i];
    std::vector<long long> out = lambda.coords();
    for (int m = 1; m <= cartan.rank(); ++m)
        out[static_cast<std::size_t>(m - 1)] -= pair * cartan.c(m, i);
    return Weight(std::move(out));
}

RootVector reflect(const CartanDatum& cartan, int i, const RootVector& beta) {
    check_letter(cartan, i);
    check_rank(beta.rank(), cartan.rank(), "reflect");
    const long long pair = pairing(cartan, i, beta);
    std::vector<long long> out = beta.coords();
    out[static_cast<std::size_t>(i - 1)] -= pair;
    return RootVector(std::move(out));
}

long long pairing(const CartanDatum& cartan, int i, const RootVector& beta) {
    check_letter(cartan, i);
    check_rank(beta.rank(), cartan.rank(), "pairing");
    long long sum = 0;
    for (int j = 1; j <= cartan.rank(); ++j)
        sum += static_cast<long long>(cartan.c(i, j)) * beta[j];
    return sum;
}

Weight act(const CartanDatum& cartan, const Word& w, const Weight& lambda) {
    Weight out = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = reflect(cartan, *it, out);
    return out;
}

RootVector act(const CartanDatum& cartan, const Word& w, const RootVector& beta) {
    RootVector out = beta;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = reflect(cartan, *it, out);
    return out;
}

/* ------------------------------------------------------------- reduction */

namespace {

/* w reduced, w(alpha_c) < 0: removes the unique position whose deletion
   realizes w*s_c as a reduced subword (exchange property). */
Word descend_right(const CartanDatum& cartan, const Word& w, int c) {
    RootVector gamma = RootVector::simple(cartan.rank(), c);
    for (std::size_t j = w.size(); j-- > 0;) {
        const RootVector next = reflect(cartan, w[j], gamma);
        if (next.is_negative()) {
            Word out = w;
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
            return out;
        }
        gamma = next;
    }
    throw internal_error("descend_right called without a descent");
}

} // namespace

Word reduce_word(const CartanDatum& cartan, const Word& w) {
    Word reduced;
    for (int c : w) {
        check_letter(cartan, c);
        const RootVector image = act(cartan, reduced, RootVector::simple(cartan.rank(), c));
        if (image.is_positive())
            reduced.push_back(c);
        else
            reduced = descend_right(cartan, reduced, c);
    }
    return reduced;
}

bool is_reduced(const CartanDatum& cartan, const Word& w) {
    // Reduced iff every prefix sends the next letter's simple root positive.
    Word prefix;
    for (int c : w) {
        check_letter(cartan, c);
        if (!act(cartan, prefix, RootVector::simple(cartan.rank(), c)).is_positive())
            return false;
        prefix.push_back(c);
    }
    return true;
}

std::vector<RootVector> beta_roots(const CartanDatum& cartan, const Word& w) {
    if (!is_reduced(cartan, w))
        throw not_reduced_error("beta_roots requires a reduced word");
    std::vector<RootVector> out;
    out.reserve(w.size());
    Word prefix;
    for (int c : w) {
        out.push_back(act(cartan, prefix, RootVector::simple(cartan.rank(), c)));
        prefix.push_back(c);
    }
    return out;
}

std::size_t weyl_length(const CartanDatum& cartan, const Word& w) {
    return reduce_word(cartan, w).size();
}

bool weyl_equal(const CartanDatum& cartan, const Word& a, const Word& b) {
    Word combined;
    combined.reserve(a.size() + b.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        combined.push_back(*it);
    combined.insert(combined.end(), b.begin(), b.end());
    return reduce_word(cartan, combined).empty();
}

bool length_additive(const CartanDatum& cartan, const Word& w, const Word& v) {
    if (!is_reduced(cartan, w))
        throw not_reduced_error("length_additive: first word is not reduced");
    if (!is_reduced(cartan, v))
        throw not_reduced_error("length_additive: second word is not reduced");
    Word combined;
    combined.reserve(v.size() + w.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        combined.push_back(*it);
    combined.insert(combined.end(), w.begin(), w.end());
    return reduce_word(cartan, combined).size() + v.size() == w.size();
}

bool bruhat_leq(const CartanDatum& cartan, const Word& v, const Word& w) {
    if (!is_reduced(cartan, v) || !is_reduced(cartan, w))
        throw not_reduced_error("bruhat_leq requires reduced words");
    // Right-to-left greedy: consume a letter whenever it is a right descent
    // of the remainder; v <= w iff the remainder empties.
    Word u = v;
    for (std::size_t k = w.size(); k-- > 0;) {
        const int c = w[k];
        if (u.empty())
            return true;
        const RootVector image = act(cartan, u, RootVector::simple(cartan.rank(), c));
        if (image.is_negative())
            u = descend_right(cartan, u, c);
    }
    return u.empty();
}

std::set<int> frozen_set(const CartanDatum& cartan, const Word& w) {
    if (!is_reduced(cartan, w))
        throw not_reduced_error("frozen_set requires a reduced word");
    std::set<int> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        bool reappears = false;
        for (std::size_t l = k + 1; l < w.size(); ++l)
            if (w[l] == w[k]) {
                reappears = true;
                break;
            }
        if (!reappears)
            out.insert(static_cast<int>(k) + 1);
    }
    return out;
}

Word min_parabolic_representative(const CartanDatum& cartan, const Word& w,
                                  const std::set<int>& parabolic) {
    if (!is_reduced(cartan, w))
        throw not_reduced_error("min_parabolic_representative requires a reduced word");
    for (int j : parabolic)
        check_letter(cartan, j);
    Word u = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j : parabolic) {
            const RootVector image = act(cartan, u, RootVector::simple(cartan.rank(), j));
            if (image.is_negative()) {
                u = descend_right(cartan, u, j);
                changed = true;
                break;
            }
        }
    }
    return u;
}

} // namespace clusterkit
