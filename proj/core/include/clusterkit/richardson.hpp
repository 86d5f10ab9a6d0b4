#pragma once

#include "clusterkit/morphism.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/weyl.hpp"

namespace clusterkit {

/* Exchange-matrix entry attached to positions k, l of a reduced word: with
   k+ the next repetition of the letter at k (one past the end if none),
   b_{kl} is +1 if k = l+, -1 if l = k+, c_{i_k i_l} if l < k < l+ < k+,
   -c_{i_k i_l} if k < l < k+ < l+, and 0 otherwise. */
int exchange_entry(const CartanDatum& cartan, const Word& word, int k, int l);

/* Initial seed of the unipotent cell attached to a reduced word: one vertex
   per position, last occurrence of each letter frozen, exchange matrix from
   exchange_entry, labels D(k,0). */
Seed build_nw_seed(const CartanDatum& cartan, const Word& word);

/* Full subseed on positions p+1..n, fresh generators, labels re-pointed to
   the pair (w^{<=l} w_{i_l}, w^{<=p} w_{i_l}). */
Seed build_richardson_seed(const CartanDatum& cartan, const Word& word, int p);

/* Specialization morphism from the cell seed onto the subseed: kills the
   positions up to p and maps the rest identically. */
ClusterMorphism richardson_morphism(const CartanDatum& cartan, const Word& word, int p);

} // namespace clusterkit
