#include "irrstrat/io/json_io.hpp"

#include <algorithm>
#include <limits>

namespace irrstrat::io {

void malformed(const std::string& message) { throw Error(ErrorCode::MalformedInput, message); }

ObjectReader::ObjectReader(const Json& j, std::string context) : j_(j), context_(std::move(context)) {
  if (!j_.is_object()) malformed(context_ + ": expected an object");
}

const Json& ObjectReader::required(const std::string& key) {
  const Json* v = optional(key);
  if (v == nullptr) malformed(context_ + ": missing field \"" + key + "\"");
  return *v;
}

const Json* ObjectReader::optional(const std::string& key) {
  seen_.push_back(key);
  auto it = j_.find(key);
  if (it == j_.end() || it->is_null()) return nullptr;
  return &*it;
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
      malformed(context_ + ": unknown field \"" + it.key() + "\"");
}

int read_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) malformed(what + ": integer out of range");
  return static_cast<int>(v);
}

std::vector<int> read_int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + ": expected a list of integers");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(read_int(e, what));
  return out;
}

Rational read_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational::parse(std::to_string(j.get<std::uint64_t>()))
                                  : Rational::parse(std::to_string(j.get<std::int64_t>()));
  }
  malformed("expected a rational string such as \"-3/4\"");
}

Json write_rational(const Rational& q) { return q.to_string(); }

GaussianRational read_gaussian(const Json& j) {
  if (!j.is_object()) return GaussianRational(read_rational(j));
  ObjectReader o(j, "gaussian rational");
  const Json* re = o.optional("re");
  const Json* im = o.optional("im");
  o.finish();
  return GaussianRational(re ? read_rational(*re) : Rational(0), im ? read_rational(*im) : Rational(0));
}

Json write_gaussian(const GaussianRational& z) {
  return Json{{"re", write_rational(z.re())}, {"im", write_rational(z.im())}};
}

GaussianVector read_gaussian_vector(const Json& j) {
  if (!j.is_array()) malformed("expected a list of gaussian rationals");
  GaussianVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_gaussian(j[i]);
  return v;
}

Json write_gaussian_vector(const GaussianVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(write_gaussian(v(i)));
  return out;
}

RationalVector read_rational_vector(const Json& j) {
  if (!j.is_array()) malformed("expected a list of rationals");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_rational(j[i]);
  return v;
}

Json write_rational_vector(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(write_rational(v(i)));
  return out;
}

RootSystem read_root_system(const Json& j) {
  ObjectReader o(j, "rootsystem");
  const Json* rank = o.optional("rank");
  const Json* roots = o.optional("roots");
  const Json* family = o.optional("family");
  o.finish();
  std::optional<std::string> label;
  if (family) {
    if (!family->is_string()) malformed("rootsystem: family must be a string or null");
    label = family->get<std::string>();
  }
  if (!rank && !roots) {
    if (!label) malformed("rootsystem: need rank and roots, or a family label");
    return build_root_system(*label);
  }
  if (!rank || !roots) malformed("rootsystem: rank and roots must be given together");
  if (!roots->is_array()) malformed("rootsystem: roots must be a list");
  std::vector<RationalVector> rs;
  for (const auto& r : *roots) rs.push_back(read_rational_vector(r));
  return RootSystem(read_int(*rank, "rootsystem rank"), std::move(rs), label);
}

Json write_root_system(const RootSystem& phi) {
  Json roots = Json::array();
  for (const auto& r : phi.roots()) roots.push_back(write_rational_vector(r));
  return Json{{"rank", phi.rank()}, {"roots", roots}, {"family", phi.family() ? Json(*phi.family()) : Json(nullptr)}};
}

Json write_root_set(const RootSet& s) {
  Json out = Json::array();
  for (RootIndex i : s) out.push_back(i);
  return out;
}

Json write_filtration(const LeviFiltration& f) {
  Json out = Json::array();
  for (const auto& level : f.levels()) out.push_back(write_root_set(level.members()));
  return out;
}

RootOrderVector read_root_order_vector(const RootSystem& phi, const Json& j) {
  std::vector<int> d = read_int_list(j, "root order vector");
  if (d.size() != phi.size()) malformed("root order vector must have one entry per root");
  return RootOrderVector(phi, std::move(d));
}

template <PoleAt Where>
BasicIrregularType<Where> read_irregular_type(const Json& j) {
  ObjectReader o(j, "irregular type");
  RootSystem phi = read_root_system(o.required("rootsystem"));
  const int p = read_int(o.required("p"), "p");
  const Json& coeffs = o.required("coefficients");
  o.finish();
  if (!coeffs.is_array()) malformed("irregular type: coefficients must be a list");
  std::vector<GaussianVector> a;
  for (const auto& c : coeffs) a.push_back(read_gaussian_vector(c));
  return BasicIrregularType<Where>(std::move(phi), p, std::move(a));
}

template <PoleAt Where>
Json write_irregular_type(const BasicIrregularType<Where>& q) {
  Json coeffs = Json::array();
  for (const auto& a : q.coefficients()) coeffs.push_back(write_gaussian_vector(a));
  return Json{{"rootsystem", write_root_system(q.rootsystem())}, {"p", q.p()}, {"coefficients", coeffs}};
}

template IrregularType read_irregular_type<PoleAt::Zero>(const Json&);
template IrregularTypeAtInfinity read_irregular_type<PoleAt::Infinity>(const Json&);
template Json write_irregular_type<PoleAt::Zero>(const IrregularType&);
template Json write_irregular_type<PoleAt::Infinity>(const IrregularTypeAtInfinity&);

MultiPoly read_polynomial(const Json& j, const std::vector<std::string>& variables) {
  if (!j.is_object() || !j.contains("terms")) return MultiPoly::constant(variables, read_gaussian(j));
  ObjectReader o(j, "polynomial");
  const Json& terms = o.required("terms");
  o.finish();
  if (!terms.is_array()) malformed("polynomial: terms must be a list");
  MultiPoly f(variables);
  for (const auto& t : terms) {
    ObjectReader term(t, "polynomial term");
    std::vector<int> e = read_int_list(term.required("exponents"), "exponents");
    const GaussianRational c = read_gaussian(term.required("coefficient"));
    term.finish();
    if (e.size() != variables.size()) malformed("polynomial term: one exponent per variable is required");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) malformed("polynomial term: negative exponent");
    f.add_term(e, c);
  }
  return f;
}

Json write_polynomial(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", write_gaussian(c)}});
  return Json{{"terms", terms}};
}

FamilyIrregularType read_family(const Json& j) {
  ObjectReader o(j, "family");
  RootSystem phi = read_root_system(o.required("rootsystem"));
  const int p = read_int(o.required("p"), "p");
  const Json* vars = o.optional("variables");
  const Json& coeffs = o.required("coefficients");
  o.finish();
  std::vector<std::string> variables;
  if (vars) {
    if (!vars->is_array()) malformed("family: variables must be a list of names");
    for (const auto& v : *vars) {
      if (!v.is_string()) malformed("family: variable names must be strings");
      variables.push_back(v.get<std::string>());
    }
    auto sorted = variables;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) malformed("family: repeated variable name");
  }
  if (!coeffs.is_array()) malformed("family: coefficients must be a list");
  std::vector<std::vector<MultiPoly>> a;
  for (const auto& row : coeffs) {
    if (!row.is_array()) malformed("family: each coefficient must be a list of polynomials");
    std::vector<MultiPoly> entries;
    for (const auto& e : row) entries.push_back(read_polynomial(e, variables));
    a.push_back(std::move(entries));
  }
  return FamilyIrregularType(std::move(phi), p, std::move(variables), std::move(a));
}

namespace {

std::vector<GaussianRational> read_scalar_list(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + ": expected a list");
  std::vector<GaussianRational> out;
  for (const auto& e : j) out.push_back(read_gaussian(e));
  return out;
}

Json write_scalar_list(const std::vector<GaussianRational>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(write_gaussian(c));
  return out;
}

}  // namespace

ConnectionGerm read_connection(const Json& j) {
  ObjectReader o(j, "connection");
  const int r = read_int(o.required("r"), "r");
  const int k = read_int(o.required("pole_bound"), "pole_bound");
  const int n = read_int(o.required("precision"), "precision");
  const Json& entries = o.required("entries");
  o.finish();
  if (k < 0 || n < 1 || r < 1) malformed("connection: need r >= 1, pole_bound >= 0, precision >= 1");
  if (!entries.is_array() || static_cast<int>(entries.size()) != r) malformed("connection: entries must have r rows");
  std::vector<std::vector<ConnectionEntry>> grid;
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != r) malformed("connection: entries must have r columns");
    std::vector<ConnectionEntry> out;
    for (const auto& e : row) {
      ObjectReader eo(e, "connection entry");
      const Json* tail = eo.optional("tail");
      const Json* regular = eo.optional("regular");
      eo.finish();
      std::vector<GaussianRational> t = tail ? read_scalar_list(*tail, "tail") : std::vector<GaussianRational>{};
      std::vector<GaussianRational> g = regular ? read_scalar_list(*regular, "regular") : std::vector<GaussianRational>{};
      if (tail && static_cast<int>(t.size()) != k + 1) malformed("connection entry: tail needs pole_bound + 1 coefficients");
      if (regular && static_cast<int>(g.size()) != n) malformed("connection entry: regular needs precision coefficients");
      t.resize(static_cast<std::size_t>(k + 1), GaussianRational(0));
      std::reverse(t.begin(), t.end());  // stored by increasing pole order
      out.push_back({GaussianTail(k + 1, std::move(t)), GaussianSeries(n, std::move(g))});
    }
    grid.push_back(std::move(out));
  }
  return ConnectionGerm(r, k, n, grid);
}

Json write_connection(const ConnectionGerm& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.r(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.r(); ++j) {
      const ConnectionEntry e = m.entry(i, j);
      std::vector<GaussianRational> tail = e.tail.by_order();
      std::reverse(tail.begin(), tail.end());
      row.push_back(Json{{"tail", write_scalar_list(tail)}, {"regular", write_scalar_list(e.regular.coefficients())}});
    }
    entries.push_back(row);
  }
  return Json{{"r", m.r()}, {"pole_bound", m.pole_bound()}, {"precision", m.precision()}, {"entries", entries}};
}

GaugeElement read_gauge(const Json& j) {
  ObjectReader o(j, "gauge");
  const int r = read_int(o.required("r"), "r");
  const int n = read_int(o.required("precision"), "precision");
  const Json& entries = o.required("entries");
  o.finish();
  if (n < 1 || r < 1) malformed("gauge: need r >= 1 and precision >= 1");
  if (!entries.is_array() || static_cast<int>(entries.size()) != r) malformed("gauge: entries must have r rows");
  std::vector<std::vector<GaussianSeries>> grid;
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != r) malformed("gauge: entries must have r columns");
    std::vector<GaussianSeries> out;
    for (const auto& e : row) {
      auto c = read_scalar_list(e, "gauge entry");
      if (static_cast<int>(c.size()) > n) malformed("gauge entry: more coefficients than the precision");
      out.emplace_back(n, std::move(c));
    }
    grid.push_back(std::move(out));
  }
  return GaugeElement(r, n, grid);
}

Json write_gauge(const GaugeElement& g) {
  Json entries = Json::array();
  for (int i = 0; i < g.r(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.r(); ++j) row.push_back(write_scalar_list(g.entry(i, j).coefficients()));
    entries.push_back(row);
  }
  return Json{{"r", g.r()}, {"precision", g.precision()}, {"entries", entries}};
}

IrregularPair read_pair(const Json& j) {
  ObjectReader o(j, "pair");
  IrregularType at0 = read_irregular_type<PoleAt::Zero>(o.required("at0"));
  IrregularTypeAtInfinity atinf = read_irregular_type<PoleAt::Infinity>(o.required("atinf"));
  o.finish();
  if (!(at0.rootsystem() == atinf.rootsystem())) throw Error(ErrorCode::ShapeMismatch, "pair uses two root systems");
  return {std::move(at0), std::move(atinf)};
}

Json write_pair(const IrregularPair& pair) {
  return Json{{"at0", write_irregular_type(pair.at0)}, {"atinf", write_irregular_type(pair.atinf)}};
}

AffineG1 read_g1(const Json& j) {
  ObjectReader o(j, "g1");
  const GaussianRational s = read_gaussian(o.required("s"));
  const GaussianRational r = read_gaussian(o.required("r"));
  o.finish();
  return AffineG1(s, r);
}

TorusG2 read_g2(const Json& j) {
  ObjectReader o(j, "g2");
  const GaussianRational r = read_gaussian(o.required("r"));
  o.finish();
  return TorusG2(r);
}

SL2ZElement read_sl2z(const Json& j) {
  if (!j.is_array() || j.size() != 4) malformed("sl2z: expected [a, b, c, d]");
  std::int64_t e[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer()) malformed("sl2z: entries must be integers");
    if (j[i].is_number_unsigned() && j[i].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      malformed("sl2z: entry out of range");
    e[i] = j[i].get<std::int64_t>();
  }
  return SL2ZElement(e[0], e[1], e[2], e[3]);
}

Json write_stratum(const StratumDescriptor& s) {
  return Json{{"d", s.d().orders()},
              {"filtration", write_filtration(s.filtration())},
              {"dimension", s.dimension()}};
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace irrstrat::io
