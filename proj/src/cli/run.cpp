#include "irrstrat/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "irrstrat/io/json_io.hpp"
#include "irrstrat/version.hpp"

namespace irrstrat::cli {

namespace {

using io::Json;
using io::ObjectReader;

struct Context {
  std::string input_path = "-";
  std::istream* in = nullptr;

  Json document() const {
    std::string text;
    if (input_path == "-") {
      text.assign(std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(input_path);
      if (!file) throw Error(ErrorCode::MalformedInput, "cannot open input file " + input_path);
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
  }
};

RootIndex read_root_index(const Json& j, const RootSystem& phi) {
  const int i = io::read_int(j, "root index");
  if (i < 0 || static_cast<std::size_t>(i) >= phi.size()) throw Error(ErrorCode::IndexOutOfRange, "root index out of range");
  return static_cast<RootIndex>(i);
}

struct StratumQuery {
  RootSystem phi;
  int p;
  RootOrderVector d;
};

StratumQuery read_stratum_query(const Json& j) {
  ObjectReader o(j, "stratum");
  RootSystem phi = io::read_root_system(o.required("rootsystem"));
  const int p = io::read_int(o.required("p"), "p");
  RootOrderVector d = io::read_root_order_vector(phi, o.required("d"));
  o.finish();
  return {phi, p, std::move(d)};
}

Json stratum_payload(const IrregularType& q) {
  const RootOrderVector d = root_order_vector(q);
  const StratumDescriptor s(q.p(), d);
  Json out = io::write_stratum(s);
  out["relevant"] = true;
  out["depth"] = s.filtration().depth();
  return out;
}

Json stabilizer_json(const StabilizerOrder& s) { return s.infinite ? Json("infinite") : Json(s.order); }

WeightedPoint read_weighted(const Json& j, const std::vector<int>& weights) {
  if (!j.is_array()) io::malformed("orbit-equal: coefficients must be a list of vectors");
  WeightedPoint w{weights, {}};
  for (const auto& v : j) w.coefficients.push_back(io::read_gaussian_vector(v));
  return w;
}

SL2ZPoint read_sl2z_point(ObjectReader& o) {
  const UpperHalfPoint tau(io::read_gaussian(o.required("tau")));
  const Json& coeffs = o.required("coefficients");
  if (!coeffs.is_array()) io::malformed("sl2z point: coefficients must be a list");
  std::vector<GaussianVector> a;
  for (const auto& c : coeffs) a.push_back(io::read_gaussian_vector(c));
  return {tau, std::move(a)};
}

Json write_sl2z_point(const SL2ZPoint& x) {
  Json coeffs = Json::array();
  for (const auto& a : x.coefficients) coeffs.push_back(io::write_gaussian_vector(a));
  return Json{{"tau", io::write_gaussian(x.tau.tau)}, {"coefficients", coeffs}};
}

ExchangePoint read_exchange(const Json& j, const char* first, const char* second) {
  ObjectReader o(j, "exchange point");
  GaussianVector a = io::read_gaussian_vector(o.required(first));
  GaussianVector b = io::read_gaussian_vector(o.required(second));
  o.finish();
  return {std::move(a), std::move(b)};
}

int exit_code_for(ErrorCode code) {
  switch (error_category(code)) {
    case ErrorCategory::Malformed:
      return kMalformed;
    case ErrorCategory::ResourceGuard:
      return kResourceGuard;
    default:
      return kPrecondition;
  }
}

void emit_error(std::ostream& out, std::ostream& err, std::string_view name, const std::string& message, bool pretty) {
  out << io::dump(Json{{"error", {{"name", std::string(name)}, {"message", message}}}}, pretty) << '\n';
  err << "irrstrat: " << name << ": " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with untwisted irregular types", "irrstrat"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.in = &in;
  std::string output = "canonical";
  app.add_option("-i,--input", ctx.input_path, "JSON input file, '-' for standard input");
  app.add_option("--output", output, "Output style")->check(CLI::IsMember({"pretty", "canonical"}));

  std::function<Json()> action;
  auto bind = [&](CLI::App* cmd, std::function<Json()> f) { cmd->callback([&action, f] { action = f; }); };

  // levi
  auto* levi = app.add_subcommand("levi", "Levi subsystems")->require_subcommand(1);
  std::string levi_family;
  int levi_rank = 0;
  auto* levi_list = levi->add_subcommand("list", "All Levi subsystems of a root system");
  levi_list->add_option("--family", levi_family, "Family letter A, B, C, D or G");
  levi_list->add_option("--rank", levi_rank, "Rank");

  // strata
  auto* strata = app.add_subcommand("strata", "Root strata")->require_subcommand(1);
  std::string strata_family;
  int strata_rank = 0, strata_p = -1;
  auto* strata_enum = strata->add_subcommand("enumerate", "All strata of pole order <= p");
  strata_enum->add_option("--family", strata_family, "Family letter A, B, C, D or G");
  strata_enum->add_option("--rank", strata_rank, "Rank");
  strata_enum->add_option("-p", strata_p, "Pole order");
  auto* strata_dim = strata->add_subcommand("dimension", "Dimension of a stratum");
  auto* strata_wit = strata->add_subcommand("witness", "Irregular type in a stratum");

  auto* classify = app.add_subcommand("classify", "Stratum of an irregular type");
  auto* admissible = app.add_subcommand("admissible", "Admissibility of a polynomial family");

  auto* connection = app.add_subcommand("connection", "Formal connections for gl_r")->require_subcommand(1);
  auto* conn_extract = connection->add_subcommand("extract", "Irregular type of a connection");
  auto* conn_diag = connection->add_subcommand("diagonalize", "Leading-regular formal diagonalization");
  auto* conn_gauge = connection->add_subcommand("gauge", "Gauge transformation");

  std::string group;
  auto* stabilizer = app.add_subcommand("stabilizer", "Stabilizer order");
  stabilizer->add_option("--group", group, "g1 or g2")->required()->check(CLI::IsMember({"g1", "g2"}));
  std::string orbit_group = "raw";
  auto* orbit = app.add_subcommand("orbit-equal", "Weighted C^x orbit equivalence");
  orbit->add_option("--group", orbit_group, "raw, g1 or g2")->check(CLI::IsMember({"raw", "g1", "g2"}));

  int dm_g = 0, dm_m = 0;
  auto* dm = app.add_subcommand("dm-check", "Deligne-Mumford criterion");
  dm->add_option("--g", dm_g, "Genus")->required();
  dm->add_option("--m", dm_m, "Number of marked points")->required();

  bool exchange_inverse = false;
  auto* exchange = app.add_subcommand("exchange", "Exchange isomorphism (phi_n, phi_m^-1)");
  exchange->add_flag("--inverse", exchange_inverse, "Apply the inverse map");

  auto* sl2z = app.add_subcommand("sl2z-act", "SL2(Z) action on (tau, A_1..A_p)");
  auto* act = app.add_subcommand("act", "Apply a group element");
  auto* version = app.add_subcommand("version", "Print version information");

  bind(levi_list, [&] {
    const RootSystem phi = levi_family.empty() ? io::read_root_system(ctx.document())
                                               : build_root_system(levi_family + std::to_string(levi_rank));
    Json list = Json::array();
    const auto all = enumerate_levi(phi);
    for (const auto& l : all) list.push_back(io::write_root_set(l.members()));
    return Json{{"rootsystem", io::write_root_system(phi)}, {"count", all.size()}, {"levi", list}};
  });

  bind(strata_enum, [&] {
    std::optional<RootSystem> phi;
    int p = strata_p;
    if (!strata_family.empty()) {
      if (p < 0) io::malformed("strata enumerate: -p is required with --family");
      phi = build_root_system(strata_family + std::to_string(strata_rank));
    } else {
      const Json doc = ctx.document();
      ObjectReader o(doc, "strata request");
      phi = io::read_root_system(o.required("rootsystem"));
      p = io::read_int(o.required("p"), "p");
      o.finish();
    }
    Json list = Json::array();
    const auto all = enumerate_strata(*phi, p);
    for (const auto& s : all) list.push_back(io::write_stratum(s));
    return Json{{"rootsystem", io::write_root_system(*phi)}, {"p", p}, {"count", all.size()}, {"strata", list}};
  });

  bind(strata_dim, [&] {
    const StratumQuery q = read_stratum_query(ctx.document());
    return Json{{"dimension", stratum_dimension(q.p, q.d)}};
  });

  bind(strata_wit, [&] {
    const StratumQuery q = read_stratum_query(ctx.document());
    return Json{{"irregular_type", io::write_irregular_type(stratum_witness(q.p, q.d))}};
  });

  bind(classify, [&] { return stratum_payload(io::read_irregular_type<PoleAt::Zero>(ctx.document())); });

  bind(admissible, [&] {
    const FamilyIrregularType f = io::read_family(ctx.document());
    const AdmissibilityReport report = is_admissible(f);
    Json failures = Json::array();
    for (const auto& fail : report.failures)
      failures.push_back(Json{{"root", fail.root}, {"witness", io::write_polynomial(fail.witness)}});
    return Json{{"admissible", report.admissible}, {"orders", report.orders}, {"failures", failures}};
  });

  bind(conn_extract, [&] {
    return Json{{"irregular_type", io::write_irregular_type(extract_irregular_type(io::read_connection(ctx.document())))}};
  });

  bind(conn_diag, [&] {
    const Diagonalization d = leading_regular_diagonalize(io::read_connection(ctx.document()));
    return Json{{"gauge", io::write_gauge(d.gauge)},
                {"connection", io::write_connection(d.result)},
                {"irregular_type", io::write_irregular_type(extract_irregular_type(d.result))}};
  });

  bind(conn_gauge, [&] {
    const Json doc = ctx.document();
    ObjectReader o(doc, "gauge request");
    const ConnectionGerm m = io::read_connection(o.required("connection"));
    const GaugeElement g = io::read_gauge(o.required("gauge"));
    o.finish();
    return Json{{"connection", io::write_connection(gauge_transform(m, g))}};
  });

  bind(stabilizer, [&] {
    const Json doc = ctx.document();
    if (group == "g1") return Json{{"order", stabilizer_json(g1_stabilizer_order(io::read_irregular_type<PoleAt::Infinity>(doc)))}};
    return Json{{"order", g2_stabilizer_order(io::read_pair(doc))}};
  });

  bind(orbit, [&] {
    const Json doc = ctx.document();
    ObjectReader o(doc, "orbit request");
    bool equivalent = false;
    if (orbit_group == "raw") {
      const std::vector<int> weights = io::read_int_list(o.required("weights"), "weights");
      const WeightedPoint a = read_weighted(o.required("a"), weights);
      const WeightedPoint b = read_weighted(o.required("b"), weights);
      o.finish();
      equivalent = weighted_orbit_equivalent(a, b);
    } else if (orbit_group == "g1") {
      const auto a = io::read_irregular_type<PoleAt::Infinity>(o.required("a"));
      const auto b = io::read_irregular_type<PoleAt::Infinity>(o.required("b"));
      const RootIndex alpha = read_root_index(o.required("root"), a.rootsystem());
      o.finish();
      if (!(a.rootsystem() == b.rootsystem()) || a.p() != b.p())
        throw Error(ErrorCode::ShapeMismatch, "irregular types of different shapes");
      equivalent = root_order(a, alpha) == root_order(b, alpha) &&
                   weighted_orbit_equivalent(weighted_point(g1_slice(a, alpha).sliced),
                                             weighted_point(g1_slice(b, alpha).sliced));
    } else {
      const IrregularPair a = io::read_pair(o.required("a"));
      const IrregularPair b = io::read_pair(o.required("b"));
      o.finish();
      if (!(a.at0.rootsystem() == b.at0.rootsystem()) || a.at0.p() != b.at0.p() || a.atinf.p() != b.atinf.p())
        throw Error(ErrorCode::ShapeMismatch, "pairs of different shapes");
      equivalent = weighted_orbit_equivalent(weighted_point(a), weighted_point(b));
    }
    return Json{{"equivalent", equivalent}};
  });

  bind(dm, [&] {
    const Json doc = ctx.document();
    ObjectReader o(doc, "dm-check request");
    const RootSystem phi = io::read_root_system(o.required("rootsystem"));
    const Json& ds = o.required("ds");
    o.finish();
    if (!ds.is_array()) io::malformed("dm-check: ds must be a list of root order vectors");
    std::vector<RootOrderVector> vectors;
    for (const auto& d : ds) vectors.push_back(io::read_root_order_vector(phi, d));
    const DmVerdict v = dm_check(dm_g, dm_m, vectors);
    return Json{{"relevant", v.relevant}, {"deligne_mumford", v.deligne_mumford}};
  });

  bind(exchange, [&] {
    const Json doc = ctx.document();
    if (exchange_inverse) {
      const ExchangePoint r = exchange_map_inverse(read_exchange(doc, "x", "b"));
      return Json{{"b", io::write_gaussian_vector(r.first)}, {"x", io::write_gaussian_vector(r.second)}};
    }
    const ExchangePoint r = exchange_map(read_exchange(doc, "b", "x"));
    return Json{{"x", io::write_gaussian_vector(r.first)}, {"b", io::write_gaussian_vector(r.second)}};
  });

  bind(sl2z, [&] {
    const Json doc = ctx.document();
    ObjectReader o(doc, "sl2z-act request");
    const SL2ZElement gamma = io::read_sl2z(o.required("sl2z"));
    const SL2ZPoint x = read_sl2z_point(o);
    o.finish();
    return write_sl2z_point(sl2z_act(gamma, x));
  });

  bind(act, [&] {
    const Json doc = ctx.document();
    ObjectReader o(doc, "act request");
    const Json& element = o.required("element");
    const Json& point = o.required("point");
    o.finish();
    ObjectReader e(element, "group element");
    const Json* g1 = e.optional("g1");
    const Json* g2 = e.optional("g2");
    const Json* sl = e.optional("sl2z");
    e.finish();
    if ((g1 != nullptr) + (g2 != nullptr) + (sl != nullptr) != 1)
      io::malformed("group element: give exactly one of g1, g2, sl2z");
    if (g1) return Json{{"point", io::write_irregular_type(g1_act(io::read_g1(*g1), io::read_irregular_type<PoleAt::Infinity>(point)))}};
    if (g2) return Json{{"point", io::write_pair(g2_act(io::read_g2(*g2), io::read_pair(point)))}};
    ObjectReader po(point, "sl2z point");
    const SL2ZPoint x = read_sl2z_point(po);
    po.finish();
    return Json{{"point", write_sl2z_point(sl2z_act(io::read_sl2z(*sl), x))}};
  });

  bind(version, [&] { return Json{{"version", kVersion}, {"schema_version", io::kSchemaVersion}}; });

  bool pretty = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, error_name(ErrorCode::MalformedInput), e.what(), false);
    return kMalformed;
  }
  pretty = output == "pretty";

  try {
    const Json result = action();
    out << io::dump(result, pretty) << '\n';
    return kOk;
  } catch (const Error& e) {
    emit_error(out, err, e.name(), e.what(), pretty);
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    emit_error(out, err, error_name(ErrorCode::MalformedInput), e.what(), pretty);
    return kMalformed;
  } catch (const std::exception& e) {
    emit_error(out, err, "InternalError", e.what(), pretty);
    return kPrecondition;
  }
}

}  // namespace irrstrat::cli
