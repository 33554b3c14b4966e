#ifndef COXART_JSONIO_HPP
#define COXART_JSONIO_HPP

#include "coxart/arrangement.hpp"
#include "coxart/coxeter.hpp"
#include "coxart/fibration.hpp"
#include "coxart/finite_group.hpp"
#include "coxart/garside.hpp"
#include "coxart/label.hpp"
#include "coxart/lgroups.hpp"
#include "coxart/orbifold.hpp"
#include "coxart/polynomial.hpp"
#include "coxart/presentation.hpp"
#include "coxart/word.hpp"

#include <json.hpp>

namespace coxart {

// Structured-document forms of the public types. Words serialize as arrays
// of signed 1-based generator indices; rationals as exact strings.
nlohmann::json json_of(const GroupLabel& label);
nlohmann::json json_of(const CoxeterMatrix& m);
nlohmann::json json_of(const Presentation& p);
nlohmann::json json_of(const Word& w);
nlohmann::json json_of(const Hyperplane& h);
nlohmann::json json_of(const Arrangement& a);
nlohmann::json json_of(const IntPolynomial& p);
nlohmann::json json_of(const IntersectionLattice& l);
nlohmann::json json_of(const SuspensionReport& r);
nlohmann::json json_of(const FibrationReport& r);
nlohmann::json json_of(const GarsideNF& nf);
nlohmann::json json_of(const OrbifoldPresentation& p);
nlohmann::json json_of(const RelatorCertificate& c);
nlohmann::json json_of(const EmbeddingReport& r);
nlohmann::json json_of(const FadellNeuwirthLevel& level);
nlohmann::json json_of(const AbelianGroup& g);
nlohmann::json json_of(const LTable& t);
nlohmann::json json_of(const KVanishingReport& r);
nlohmann::json json_of(const EnumeratedGroup& g);
nlohmann::json json_of(const ReflectionSet& r);

} // namespace coxart

#endif
