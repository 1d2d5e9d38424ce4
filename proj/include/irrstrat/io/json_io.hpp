#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "irrstrat/connection.hpp"
#include "irrstrat/strata.hpp"
#include "irrstrat/symmetry.hpp"

namespace irrstrat::io {

using Json = nlohmann::json;

/// Version of the JSON document formats below.
inline constexpr const char* kSchemaVersion = "1";

/// Field access for a JSON object that rejects unknown keys. Every error is
/// reported as MalformedInput.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string context);

  const Json& required(const std::string& key);
  const Json* optional(const std::string& key);
  /// Throws MalformedInput if a key was never read.
  void finish() const;

 private:
  const Json& j_;
  std::string context_;
  std::vector<std::string> seen_;
};

[[noreturn]] void malformed(const std::string& message);

int read_int(const Json& j, const std::string& what);
std::vector<int> read_int_list(const Json& j, const std::string& what);

/// "a/b" or "a"; JSON integers are also accepted.
Rational read_rational(const Json& j);
Json write_rational(const Rational& q);

/// {"re": rational, "im": rational}; a bare rational is read as real.
GaussianRational read_gaussian(const Json& j);
Json write_gaussian(const GaussianRational& z);

GaussianVector read_gaussian_vector(const Json& j);
Json write_gaussian_vector(const GaussianVector& v);
RationalVector read_rational_vector(const Json& j);
Json write_rational_vector(const RationalVector& v);

/// {"rank", "roots", "family"}, or just {"family": "B3"} for a standard realization.
RootSystem read_root_system(const Json& j);
Json write_root_system(const RootSystem& phi);

Json write_root_set(const RootSet& s);
Json write_filtration(const LeviFiltration& f);
RootOrderVector read_root_order_vector(const RootSystem& phi, const Json& j);

/// {"rootsystem", "p", "coefficients": [A_1, ..., A_p]}.
template <PoleAt Where>
BasicIrregularType<Where> read_irregular_type(const Json& j);
template <PoleAt Where>
Json write_irregular_type(const BasicIrregularType<Where>& q);

/// {"terms": [{"exponents": [...], "coefficient": gaussian}]}; a bare scalar is a constant.
MultiPoly read_polynomial(const Json& j, const std::vector<std::string>& variables);
Json write_polynomial(const MultiPoly& f);

/// {"rootsystem", "p", "variables", "coefficients": [[polynomial]]}.
FamilyIrregularType read_family(const Json& j);

/// {"r", "pole_bound", "precision", "entries": [[{"tail": [c_{-(k+1)}..c_{-1}], "regular": [c_0..c_{N-1}]}]]}.
ConnectionGerm read_connection(const Json& j);
Json write_connection(const ConnectionGerm& m);

/// {"r", "precision", "entries": [[[c_0..c_{N-1}]]]}.
GaugeElement read_gauge(const Json& j);
Json write_gauge(const GaugeElement& g);

/// {"at0": irregular type, "atinf": irregular type}.
IrregularPair read_pair(const Json& j);
Json write_pair(const IrregularPair& pair);

AffineG1 read_g1(const Json& j);
TorusG2 read_g2(const Json& j);
SL2ZElement read_sl2z(const Json& j);

Json write_stratum(const StratumDescriptor& s);

/// Canonical form: sorted keys, no whitespace. Pretty form: two-space indent.
std::string dump(const Json& j, bool pretty);

}  // namespace irrstrat::io
