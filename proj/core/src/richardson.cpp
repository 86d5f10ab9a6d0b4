#include "clusterkit/richardson.hpp"

#include "clusterkit/errors.hpp"

#include <sstream>

namespace clusterkit {

namespace {

std::string word_text(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            os << ',';
        os << w[i];
    }
    os << ']';
    return os.str();
}

std::string pair_label(const Word& word, int l, int p) {
    Word upper(word.begin(), word.begin() + l);
    Word lower(word.begin(), word.begin() + p);
    int letter = word[static_cast<std::size_t>(l) - 1];
    std::ostringstream os;
    os << "D(" << word_text(upper) << "w" << letter << ", " << word_text(lower) << "w" << letter
       << ")";
    return os.str();
}

/* One past the last position, standing in for "no next repetition". */
int next_repetition(const Word& word, int k) {
    const int n = static_cast<int>(word.size());
    for (int m = k + 1; m <= n; ++m)
        if (word[static_cast<std::size_t>(m) - 1] == word[static_cast<std::size_t>(k) - 1])
            return m;
    return n + 1;
}

} // namespace

int exchange_entry(const CartanDatum& cartan, const Word& word, int k, int l) {
    const int n = static_cast<int>(word.size());
    if (k < 1 || k > n || l < 1 || l > n)
        throw index_out_of_range_error("positions must lie in [1," + std::to_string(n) + "]");
    const int ik = word[static_cast<std::size_t>(k) - 1];
    const int il = word[static_cast<std::size_t>(l) - 1];
    if (ik < 1 || ik > cartan.rank() || il < 1 || il > cartan.rank())
        throw index_out_of_range_error("word letter outside the Cartan rank");
    const int kp = next_repetition(word, k);
    const int lp = next_repetition(word, l);
    if (k == lp)
        return 1;
    if (l == kp)
        return -1;
    if (l < k && k < lp && lp < kp)
        return cartan.c(ik, il);
    if (k < l && l < kp && kp < lp)
        return -cartan.c(ik, il);
    return 0;
}

Seed build_nw_seed(const CartanDatum& cartan, const Word& word) {
    if (!is_reduced(cartan, word))
        throw not_reduced_error("word is not reduced");
    const int n = static_cast<int>(word.size());
    std::set<int> frozen = frozen_set(cartan, word);
    std::vector<int> vertices;
    std::vector<int> mutables;
    for (int k = 1; k <= n; ++k) {
        vertices.push_back(k);
        if (!frozen.count(k))
            mutables.push_back(k);
    }
    std::map<std::pair<int, int>, int> entries;
    for (int k = 1; k <= n; ++k)
        for (int l : mutables)
            if (int e = exchange_entry(cartan, word, k, l); e != 0)
                entries[{k, l}] = e;
    ExchangeQuiver quiver(std::move(vertices), std::move(mutables), std::move(entries));
    std::map<int, std::string> generator_names = Seed::default_generator_names(quiver.vertices());
    std::map<int, std::string> labels;
    for (int k = 1; k <= n; ++k)
        labels[k] = "D(" + std::to_string(k) + ",0)";
    Seed seed(std::move(quiver), std::move(generator_names), std::move(labels), true);
    seed.cartan_name = cartan.name();
    seed.word = word;
    return seed;
}

Seed build_richardson_seed(const CartanDatum& cartan, const Word& word, int p) {
    if (!is_reduced(cartan, word))
        throw not_reduced_error("word is not reduced");
    const int n = static_cast<int>(word.size());
    if (p < 0 || p > n)
        throw prefix_out_of_range_error("prefix length " + std::to_string(p) +
                                        " outside [0," + std::to_string(n) + "]");
    Seed base = build_nw_seed(cartan, word);
    std::vector<int> keep;
    for (int l = p + 1; l <= n; ++l)
        keep.push_back(l);
    ExchangeQuiver quiver = full_subquiver(base.quiver(), keep);
    std::map<int, std::string> names;
    std::map<int, std::string> labels;
    for (int l : keep) {
        names[l] = base.generator_names().at(l);
        labels[l] = pair_label(word, l, p);
    }
    Seed seed(std::move(quiver), std::move(names), std::move(labels), true);
    seed.cartan_name = cartan.name();
    seed.word = word;
    return seed;
}

ClusterMorphism richardson_morphism(const CartanDatum& cartan, const Word& word, int p) {
    Seed source = build_nw_seed(cartan, word);
    Seed target = build_richardson_seed(cartan, word, p);
    std::set<int> kill;
    std::map<int, int> vmap;
    for (int k = 1; k <= static_cast<int>(word.size()); ++k) {
        if (k <= p)
            kill.insert(k);
        else
            vmap[k] = k;
    }
    return ClusterMorphism(SeedContext::of(source), SeedContext::of(target), std::move(vmap),
                           std::move(kill));
}

} // namespace clusterkit
