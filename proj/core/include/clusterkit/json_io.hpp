#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/minors.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/weyl.hpp"

#include <functional>
#include <string>

namespace clusterkit {

/* All functions work on JSON text; malformed input raises
   std::invalid_argument with the parser's message. Rational coefficients are
   serialized as decimal strings and accepted back as strings or numbers. */

std::string laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const AmbientPtr& ambient, const std::string& text);

std::string seed_to_json(const Seed& seed);
Seed seed_from_json(const std::string& text);

/* The refs are opaque strings naming where each end's seed lives; reading
   passes them to the loader. */
std::string morphism_to_json(const ClusterMorphism& phi, const std::string& source_ref,
                             const std::string& target_ref);
ClusterMorphism morphism_from_json(const std::string& text,
                                   const std::function<Seed(const std::string&)>& load_seed);

std::string morphism_report_to_json(const MorphismReport& report);
std::string decomposition_to_json(const Decomposition& d);
std::string exchange_report_to_json(const ExchangeReport& report);
std::string enumeration_to_json(const ClusterEnumeration& e);
std::string minor_to_json(const MinorExpression& m);

/* {"name": ..., "matrix": [[2,-1],[-1,2]]}; name defaults to "custom". */
CartanDatum cartan_from_json(const std::string& text);

} // namespace clusterkit
