#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qm/errors.hpp"
#include "qm/harmonic.hpp"
#include "qm/maxwell.hpp"
#include "qm/moduli.hpp"
#include "qm/parcelling.hpp"
#include "qm/poly.hpp"
#include "qm/quadform.hpp"
#include "qm/quadrature.hpp"
#include "qm/sylvester.hpp"

namespace qm::cli {
namespace {

using Json = nlohmann::ordered_json;

// Display-only: coefficients this far below the largest are dropped from printed polynomials.
constexpr double kDisplayChop = 1e-14;
constexpr std::uint64_t kEnumerateCap = 10395;
constexpr int kDefaultCsvOrder = 8;
constexpr double kNodeMatchTol = 1e-9;

/// Bad flag values or malformed JSON arguments; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string quadform = "x^2+y^2+z^2";
  std::string quadform_matrix;
  double cluster_tol = 1e-7;
  double div_tol = 1e-9;
  double rank_tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";
  bool json = false;

  SylvesterOptions sylvester() const {
    SylvesterOptions o;
    o.cluster_tol = cluster_tol;
    o.div_tol = div_tol;
    o.seed = seed;
    return o;
  }
};

// ---- JSON encoding ----

// Adding 0.0 turns -0.0 into 0.0 so printed output does not flicker in sign.
Json encode(cplx c) { return Json::array({c.real() + 0.0, c.imag() + 0.0}); }

Json encode(const Vec3& v) { return Json::array({encode(v[0]), encode(v[1]), encode(v[2])}); }

Json encode(const std::vector<Vec3>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(encode(v));
  return out;
}

Json encode(const DivisorPoint& p) {
  return Json{{"point", Json::array({encode(p.point.u0), encode(p.point.u1)})}, {"multiplicity", p.multiplicity}};
}

Json encode(const ConicDivisor& d) {
  Json out = Json::array();
  for (const auto& p : d.points) out.push_back(encode(p));
  return out;
}

Json encode(const Multipole& m) {
  return Json{{"degree", m.degree}, {"lambda", encode(m.lambda)}, {"vectors", encode(m.vectors)}};
}

const char* name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::NotReal: return "not-real";
  }
  return "unknown";
}

Json encode(const QuadForm& q) {
  const Mat3& b = q.matrix();
  Json upper = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) upper.push_back(encode(b(i, j)));
  return Json{{"upper", upper},
              {"field", q.is_real() ? "real" : "complex"},
              {"definiteness", name(q.definiteness())}};
}

HPoly chopped(HPoly p) {
  double top = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) top = std::max(top, std::abs(p[i]));
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(p[i]) <= kDisplayChop * top) p[i] = 0.0;
  return p;
}

std::string show(const HPoly& p) { return format_poly(chopped(p)); }

std::string show(const Poly& p) {
  Poly out;
  for (const auto& part : p.parts()) out.add(chopped(part));
  return format_poly(out);
}

// ---- argument decoding ----

cplx decode_complex(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError("expected a number or a [re, im] pair, got " + j.dump());
}

Vec3 decode_vec3(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw UsageError("expected a 3-vector, got " + j.dump());
  return Vec3(decode_complex(j[0]), decode_complex(j[1]), decode_complex(j[2]));
}

Json parse_json(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Vec3> decode_vectors(const std::string& text, const std::string& flag) {
  const Json j = parse_json(text, flag);
  if (!j.is_array()) throw UsageError(flag + ": expected an array of 3-vectors");
  std::vector<Vec3> out;
  for (const auto& v : j) out.push_back(decode_vec3(v));
  return out;
}

std::vector<int> decode_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const char* first = item.data();
    const char* last = first + item.size();
    const auto res = std::from_chars(first, last, v);
    if (item.empty() || res.ec != std::errc() || res.ptr != last)
      throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

HPoly homogeneous(const Poly& p, const char* what) {
  if (!p.is_homogeneous()) throw InvalidArgument(std::string(what) + " needs a homogeneous polynomial");
  return p.part(p.degree());
}

QuadForm resolve_quadform(const RunConfig& cfg) {
  if (!cfg.quadform_matrix.empty()) {
    const Json j = parse_json(cfg.quadform_matrix, "--quadform-matrix");
    Mat3 b;
    if (j.is_array() && j.size() == 6) {
      int k = 0;
      for (int r = 0; r < 3; ++r)
        for (int c = r; c < 3; ++c) b(r, c) = b(c, r) = decode_complex(j[k++]);
    } else if (j.is_array() && j.size() == 3) {
      for (int r = 0; r < 3; ++r) {
        const Vec3 row = decode_vec3(j[r]);
        for (int c = 0; c < 3; ++c) b(r, c) = row[c];
      }
      if ((b - b.transpose()).norm() > 1e-12 * b.norm())
        throw UsageError("--quadform-matrix: matrix is not symmetric");
    } else {
      throw UsageError("--quadform-matrix: expected 6 upper-triangle entries or a 3x3 array");
    }
    return QuadForm(b);
  }
  return QuadForm::from_poly(homogeneous(parse_poly(cfg.quadform), "--quadform"));
}

// ---- subcommands ----

struct DecomposeArgs {
  std::string poly;
  std::string policy = "real";
  bool enumerate = false;
  std::uint64_t cap = kEnumerateCap;
};

Json cmd_decompose(const RunConfig& cfg, const DecomposeArgs& a) {
  const QuadForm q = resolve_quadform(cfg);
  const Poly p = parse_poly(a.poly);
  Json out{{"surface", encode(q)}};
  if (a.enumerate) {
    const auto all = enumerate_decompositions(homogeneous(p, "decompose --enumerate"), q, a.cap, cfg.sylvester());
    Json list = Json::array();
    for (const auto& m : all) list.push_back(encode(m));
    out["count"] = all.size();
    out["leading"] = list;
    return out;
  }
  const Policy policy = a.policy == "complex" ? Policy::CanonicalComplex : Policy::CanonicalReal;
  const Decomposition dec = decompose(p, q, policy, cfg.sylvester());
  Json list = Json::array();
  for (const auto& m : dec.multipoles) list.push_back(encode(m));
  out["policy"] = a.policy;
  out["unique"] = dec.unique;
  out["multipoles"] = list;
  out["residual"] = dec.residual;
  return out;
}

Json cmd_harmonics(const RunConfig& cfg, const std::string& poly) {
  const QuadForm q = resolve_quadform(cfg);
  const HPoly p = homogeneous(parse_poly(poly), "harmonics");
  const HarmonicDecomposition dec = harmonic_decompose(p, q);
  Json comps = Json::array();
  for (std::size_t j = 0; j < dec.components.size(); ++j) {
    const HPoly& f = dec.components[j];
    const double n = f.norm();
    comps.push_back(Json{{"degree", f.degree()},
                         {"power", j},
                         {"poly", show(f)},
                         {"laplacian_residual", n > 0.0 ? laplacian_q(q, f).norm() / n : 0.0}});
  }
  const double pn = p.norm();
  return Json{{"surface", encode(q)},
              {"degree", p.degree()},
              {"components", comps},
              {"resum_residual", pn > 0.0 ? (dec.resum(q) - p).norm() / pn : 0.0}};
}

struct DirichletArgs {
  std::string laplacian = "0";
  std::string boundary;
  std::string order = "top-down";
};

Json cmd_dirichlet(const RunConfig& cfg, const DirichletArgs& a) {
  const QuadForm q = resolve_quadform(cfg);
  const DirichletOrder order = a.order == "bottom-up" ? DirichletOrder::BottomUp : DirichletOrder::TopDown;
  const DirichletSolution s = dirichlet_solve(parse_poly(a.laplacian), parse_poly(a.boundary), q, order, cfg.seed);
  return Json{{"surface", encode(q)},
              {"order", a.order},
              {"solution", show(s.solution)},
              {"laplacian_residual", s.laplacian_residual},
              {"surface_residual", s.surface_residual}};
}

struct MaxwellArgs {
  bool apply = false;
  bool represent = false;
  std::string dirs;
  std::string poly;
};

Json cmd_maxwell(const RunConfig& cfg, const MaxwellArgs& a) {
  if (a.apply == a.represent) throw UsageError("maxwell: give exactly one of --apply or --represent");
  const QuadForm q = resolve_quadform(cfg);
  if (a.apply) {
    if (a.dirs.empty()) throw UsageError("maxwell --apply needs --dirs");
    const HPoly n = maxwell_apply(q, decode_vectors(a.dirs, "--dirs"));
    const double nn = n.norm();
    return Json{{"surface", encode(q)},
                {"degree", n.degree()},
                {"polynomial", show(n)},
                {"laplacian_residual", nn > 0.0 ? laplacian_q(q, n).norm() / nn : 0.0}};
  }
  if (a.poly.empty()) throw UsageError("maxwell --represent needs --poly");
  const HPoly p = homogeneous(parse_poly(a.poly), "maxwell --represent");
  const MaxwellSum sum = maxwell_sum(p, q, cfg.sylvester());
  Json terms = Json::array();
  for (const auto& t : sum.terms)
    terms.push_back(Json{{"power", t.power},
                         {"degree", t.degree},
                         {"lambda", encode(t.rep.lambda)},
                         {"dirs", encode(t.rep.dirs)},
                         {"distance", t.rep.distance},
                         {"parcelling", t.rep.parcelling},
                         {"attempts", t.rep.attempts}});
  return Json{{"surface", encode(q)}, {"terms", terms}, {"residual", sum.residual}};
}

struct ParcellingArgs {
  std::string mults;
  bool count_only = false;
  bool enumerate = false;
  std::size_t limit = 2'000'000;
};

Json cmd_parcellings(const ParcellingArgs& a) {
  const std::vector<int> mu = decode_int_list(a.mults, "--mults");
  const std::uint64_t count = count_parcellings(mu);
  if (a.count_only) return Json{{"count", count}};
  int total = 0;
  for (int m : mu) total += m;
  Json out{{"multiplicities", mu}, {"degree", total / 2}, {"count", count}, {"generic_count", kappa(total / 2)}};
  if (a.enumerate) {
    Json list = Json::array();
    for (const auto& g : enumerate_parcellings(mu, a.limit)) {
      Json parcels = Json::array();
      for (const auto& pc : g.parcels) parcels.push_back(Json::array({pc.a, pc.b}));
      list.push_back(parcels);
    }
    out["parcellings"] = list;
  }
  return out;
}

Json cmd_ramified(const RunConfig& cfg, const std::string& forms) {
  const QuadForm q = resolve_quadform(cfg);
  const RamificationResult r = is_ramified(decode_vectors(forms, "--forms"), q, cfg.cluster_tol);
  return Json{{"surface", encode(q)},
              {"ramified", r.ramified},
              {"witness", r.witness ? encode(*r.witness) : Json(nullptr)},
              {"divisor", encode(r.divisor)}};
}

Json cmd_nullity(const RunConfig& cfg, const std::string& forms) {
  const QuadForm q = resolve_quadform(cfg);
  const std::vector<Vec3> ls = decode_vectors(forms, "--forms");
  NullityOptions opt;
  opt.rank_tol = cfg.rank_tol;
  opt.seed = cfg.seed;
  const int nullity = tangent_nullity(ls, q, opt);
  const RamificationResult r = is_ramified(ls, q, cfg.cluster_tol);
  return Json{{"surface", encode(q)},
              {"degree", ls.size()},
              {"nullity", nullity},
              {"ramified", r.ramified},
              {"witness", r.witness ? encode(*r.witness) : Json(nullptr)}};
}

struct GammaArgs {
  std::string center;
  std::string forms;
};

Json cmd_gamma(const RunConfig& cfg, const GammaArgs& a) {
  const QuadForm q = resolve_quadform(cfg);
  const PencilCenter center = PencilCenter::make(decode_vec3(parse_json(a.center, "--center")), q);
  const ConicDivisor source = is_ramified(decode_vectors(a.forms, "--forms"), q, cfg.cluster_tol).divisor;
  const PencilDivisor target = gamma_project(source, center, q, cfg.cluster_tol);
  const auto fiber = gamma_fiber(target, center, q, cfg.cluster_tol);
  Json lines = Json::array();
  for (const auto& l : target.lines)
    lines.push_back(Json{{"line", encode(center.line(l.point))}, {"multiplicity", l.multiplicity}});
  Json divisors = Json::array();
  for (const auto& d : fiber) divisors.push_back(encode(d));
  return Json{{"surface", encode(q)},
              {"center", encode(center.p)},
              {"degree", target.degree()},
              {"source", encode(source)},
              {"target", lines},
              {"fiber_size", fiber.size()},
              {"generic_size", std::uint64_t{1} << target.degree()},
              {"fiber", divisors}};
}

struct DimsArgs {
  std::optional<int> degree;
  std::optional<int> quadform_degree;
  std::string partition;
};

Json cmd_dims(const RunConfig& cfg, const DimsArgs& a) {
  if (!a.degree && !a.quadform_degree) throw UsageError("dims: give --degree and/or --quadform-degree with --partition");
  Json out = Json::object();
  if (a.degree) {
    const int d = *a.degree;
    if (d < 0) throw UsageError("dims: --degree must be non-negative");
    const QuadForm q = resolve_quadform(cfg);
    std::uint64_t cumulative = 0;
    for (int k = 0; k <= d; ++k) cumulative += dim_homogeneous(k);
    out["degree"] = d;
    out["homogeneous_dim"] = dim_homogeneous(d);
    out["cumulative_dim"] = cumulative;
    out["harmonic_dim"] = 2 * d + 1;
    out["corank_mul_q"] = corank_mul_q(q, d, cfg.rank_tol);
  }
  if (a.quadform_degree) {
    if (a.partition.empty()) throw UsageError("dims: --quadform-degree needs --partition");
    const std::vector<int> parts = decode_int_list(a.partition, "--partition");
    out["quadform_degree"] = *a.quadform_degree;
    out["partition"] = parts;
    out["defect"] = dim_defect(*a.quadform_degree, parts);
  }
  return out;
}

struct FourierArgs {
  std::string poly;
  std::string csv;
  std::optional<int> kmax;
  std::optional<int> order;
  bool print_nodes = false;
};

Json encode(const FourierResult& r, const QuadForm& q, int order) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const HPoly& f = r.components[k];
    comps.push_back(Json{{"degree", k}, {"poly", show(f)}, {"norm_sq", inner_product(f, f, q, order).real()}});
  }
  return Json{{"order", order},
              {"components", comps},
              {"norm_sq", r.norm_sq},
              {"parseval_residual", r.parseval_residual},
              {"relative_residual", r.norm_sq > 0.0 ? r.parseval_residual / r.norm_sq : 0.0}};
}

// Rows "theta,phi,re[,im]"; a non-numeric first row is a header.
Eigen::VectorXcd read_csv(std::istream& in, const SphereQuadrature& rule) {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(rule.size()));
  std::vector<bool> seen(rule.size(), false);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cell = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        numeric = false;
        break;
      }
      cells.push_back(v);
    }
    if (!numeric && row == 1) continue;
    if (!numeric || cells.size() < 3 || cells.size() > 4)
      throw InvalidArgument("csv row " + std::to_string(row) + ": expected theta,phi,re[,im]");
    std::size_t hit = rule.size();
    for (std::size_t i = 0; i < rule.size(); ++i)
      if (std::abs(rule.theta[i] - cells[0]) <= kNodeMatchTol && std::abs(rule.phi[i] - cells[1]) <= kNodeMatchTol) {
        hit = i;
        break;
      }
    if (hit == rule.size())
      throw InvalidArgument("csv row " + std::to_string(row) + " is not a quadrature node of order " +
                            std::to_string(rule.order));
    values[static_cast<Eigen::Index>(hit)] = cplx(cells[2], cells.size() == 4 ? cells[3] : 0.0);
    seen[hit] = true;
  }
  const auto missing = std::count(seen.begin(), seen.end(), false);
  if (missing > 0)
    throw InvalidArgument("csv misses " + std::to_string(missing) + " quadrature nodes", static_cast<double>(missing));
  return values;
}

Json cmd_fourier(const RunConfig& cfg, const FourierArgs& a, std::istream& in) {
  const QuadForm q = resolve_quadform(cfg);
  if (a.print_nodes) {
    const SphereQuadrature rule = SphereQuadrature::make(a.order.value_or(kDefaultCsvOrder));
    const std::vector<Vec3> pts = surface_nodes(q, rule);
    Json nodes = Json::array();
    for (std::size_t i = 0; i < rule.size(); ++i)
      nodes.push_back(Json{{"theta", rule.theta[i]}, {"phi", rule.phi[i]}, {"weight", rule.weight[i]},
                           {"point", encode(pts[i])}});
    return Json{{"surface", encode(q)}, {"order", rule.order}, {"nodes", nodes}};
  }
  if (a.poly.empty() == a.csv.empty()) throw UsageError("fourier: give exactly one of --poly or --csv");
  if (!a.poly.empty()) {
    const Poly f = parse_poly(a.poly);
    const int order = a.order.value_or(default_order(f.degree(), f.degree()));
    const FourierResult r = fourier_components(f, q, a.kmax.value_or(f.degree()), order);
    Json out{{"surface", encode(q)}};
    out.update(encode(r, q, order));
    return out;
  }
  const SphereQuadrature rule = SphereQuadrature::make(a.order.value_or(kDefaultCsvOrder));
  Eigen::VectorXcd values;
  if (a.csv == "-") {
    values = read_csv(in, rule);
  } else {
    std::ifstream file(a.csv);
    if (!file) throw UsageError("--csv: cannot open " + a.csv);
    values = read_csv(file, rule);
  }
  const FourierResult r = fourier_components(values, rule, q, a.kmax.value_or(std::max(0, rule.order - 2)));
  Json out{{"surface", encode(q)}};
  out.update(encode(r, q, rule.order));
  return out;
}

Json show_config(const RunConfig& cfg) {
  const SylvesterOptions so;
  return Json{{"quadform", cfg.quadform_matrix.empty() ? cfg.quadform : cfg.quadform_matrix},
              {"cluster_tol", cfg.cluster_tol},
              {"div_tol", cfg.div_tol},
              {"rank_tol", cfg.rank_tol},
              {"zero_tol", so.zero_tol},
              {"probe_retries", so.probe_retries},
              {"enumerate_cap", kEnumerateCap},
              {"parcelling_limit", 2'000'000},
              {"csv_fourier_order", kDefaultCsvOrder},
              {"display_chop", kDisplayChop},
              {"seed", cfg.seed},
              {"seed_source", cfg.seed_source},
              {"output", cfg.json ? "json" : "human"}};
}

// ---- human rendering ----

void render_human(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (key == "schema" || key == "command") continue;
    if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -\n";
        render_human(item, out, indent + "    ");
      }
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  int base = 10;
  std::string_view s(text);
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  }
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError(std::string(origin) + ": expected a 64-bit unsigned integer, got '" + text + "'");
  return v;
}

void emit_error(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::string& code,
                const std::string& message, const Json& witness) {
  if (cfg.json) {
    Json e{{"code", code}, {"message", message}};
    if (!witness.is_null()) e["witness"] = witness;
    out << Json{{"schema", 1}, {"error", e}}.dump(2) << '\n';
  } else {
    err << "error [" << code << "]: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
  RunConfig cfg;
  std::optional<std::string> seed_flag;
  bool show = false;

  CLI::App app{"Multipole decompositions of polynomials on quadratic surfaces", "qm"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--quadform", cfg.quadform, "Quadratic form as a polynomial");
  app.add_option("--quadform-matrix", cfg.quadform_matrix,
                 "Quadratic form as JSON: 6 upper-triangle entries or a 3x3 array; entries are numbers or [re,im]");
  app.add_option("--cluster-tol", cfg.cluster_tol, "Chordal distance under which roots merge")->check(CLI::PositiveNumber);
  app.add_option("--div-tol", cfg.div_tol, "Relative remainder tolerance for exact division")->check(CLI::PositiveNumber);
  app.add_option("--rank-tol", cfg.rank_tol, "Relative singular value threshold")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed_flag, "Random seed (decimal or 0x hex); overrides QM_SEED");
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--show-config", show, "Print the resolved configuration and exit");

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "Multipole decomposition on {Q = 1}");
  c_dec->add_option("--poly", dec.poly, "Polynomial")->required();
  c_dec->add_option("--policy", dec.policy, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  c_dec->add_flag("--enumerate", dec.enumerate, "List every leading multipole of a homogeneous input");
  c_dec->add_option("--cap", dec.cap, "Enumeration guard");

  std::string harm_poly;
  auto* c_harm = app.add_subcommand("harmonics", "Q-harmonic components of a homogeneous polynomial");
  c_harm->add_option("--poly", harm_poly, "Homogeneous polynomial")->required();

  DirichletArgs dir;
  auto* c_dir = app.add_subcommand("dirichlet", "Polynomial P with Laplacian_Q P = M and P = N on {Q = 1}");
  c_dir->add_option("--laplacian", dir.laplacian, "M");
  c_dir->add_option("--boundary", dir.boundary, "N")->required();
  c_dir->add_option("--order", dir.order, "top-down or bottom-up")->check(CLI::IsMember({"top-down", "bottom-up"}));

  MaxwellArgs mx;
  auto* c_mx = app.add_subcommand("maxwell", "Maxwell directions and polynomials");
  c_mx->add_flag("--apply", mx.apply, "Directions to polynomial");
  c_mx->add_flag("--represent", mx.represent, "Polynomial to directions");
  c_mx->add_option("--dirs", mx.dirs, "JSON array of 3-vectors");
  c_mx->add_option("--poly", mx.poly, "Homogeneous polynomial");

  ParcellingArgs pc;
  auto* c_pc = app.add_subcommand("parcellings", "Generalized parcellings of a multiplicity function");
  c_pc->add_option("--mults", pc.mults, "Comma-separated multiplicities")->required();
  c_pc->add_flag("--count-only", pc.count_only, "Print only the count");
  c_pc->add_flag("--enumerate", pc.enumerate, "List the parcellings");
  c_pc->add_option("--limit", pc.limit, "Enumeration guard");

  std::string ram_forms;
  auto* c_ram = app.add_subcommand("ramified", "Does the product of linear forms meet the conic with multiplicity");
  c_ram->add_option("--forms", ram_forms, "JSON array of 3-vectors")->required();

  std::string nul_forms;
  auto* c_nul = app.add_subcommand("nullity", "Tangent-cone nullity of a product of linear forms");
  c_nul->add_option("--forms", nul_forms, "JSON array of 3-vectors")->required();

  GammaArgs gm;
  auto* c_gm = app.add_subcommand("gamma-fibers", "Pencil projection of a divisor and its fiber");
  c_gm->add_option("--center", gm.center, "Pencil center as a JSON 3-vector")->required();
  c_gm->add_option("--forms", gm.forms, "JSON array of 3-vectors whose product gives the divisor")->required();

  DimsArgs dm;
  auto* c_dm = app.add_subcommand("dims", "Dimension counts and defects");
  c_dm->add_option("--degree", dm.degree, "Degree d");
  c_dm->add_option("--quadform-degree", dm.quadform_degree, "Degree l of the surface equation")->check(CLI::PositiveNumber);
  c_dm->add_option("--partition", dm.partition, "Comma-separated degrees");

  FourierArgs fr;
  auto* c_fr = app.add_subcommand("fourier", "Harmonic components of a function on the ellipsoid");
  c_fr->add_option("--poly", fr.poly, "Polynomial");
  c_fr->add_option("--csv", fr.csv, "CSV file (or -) of theta,phi,re[,im] at quadrature nodes");
  c_fr->add_option("--kmax", fr.kmax, "Highest component degree")->check(CLI::NonNegativeNumber);
  c_fr->add_option("--order", fr.order, "Quadrature order")->check(CLI::PositiveNumber);
  c_fr->add_flag("--print-nodes", fr.print_nodes, "Print the quadrature nodes for --order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seed_flag) {
      cfg.seed = parse_seed(*seed_flag, "--seed");
      cfg.seed_source = "flag";
    } else if (env.seed) {
      cfg.seed = parse_seed(*env.seed, "QM_SEED");
      cfg.seed_source = "env";
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Json result;
  try {
    if (show) {
      result = Json{{"config", show_config(cfg)}};
    } else if (app.got_subcommand(c_dec)) {
      cfg.subcommand = "decompose";
      result = cmd_decompose(cfg, dec);
    } else if (app.got_subcommand(c_harm)) {
      cfg.subcommand = "harmonics";
      result = cmd_harmonics(cfg, harm_poly);
    } else if (app.got_subcommand(c_dir)) {
      cfg.subcommand = "dirichlet";
      result = cmd_dirichlet(cfg, dir);
    } else if (app.got_subcommand(c_mx)) {
      cfg.subcommand = "maxwell";
      result = cmd_maxwell(cfg, mx);
    } else if (app.got_subcommand(c_pc)) {
      cfg.subcommand = "parcellings";
      result = cmd_parcellings(pc);
    } else if (app.got_subcommand(c_ram)) {
      cfg.subcommand = "ramified";
      result = cmd_ramified(cfg, ram_forms);
    } else if (app.got_subcommand(c_nul)) {
      cfg.subcommand = "nullity";
      result = cmd_nullity(cfg, nul_forms);
    } else if (app.got_subcommand(c_gm)) {
      cfg.subcommand = "gamma-fibers";
      result = cmd_gamma(cfg, gm);
    } else if (app.got_subcommand(c_dm)) {
      cfg.subcommand = "dims";
      result = cmd_dims(cfg, dm);
    } else if (app.got_subcommand(c_fr)) {
      cfg.subcommand = "fourier";
      result = cmd_fourier(cfg, fr, in);
    } else {
      err << app.help();
      return kExitUsage;
    }
  } catch (const UsageError& e) {
    emit_error(cfg, out, err, "Usage", e.what(), nullptr);
    return kExitUsage;
  } catch (const SyntaxError& e) {
    emit_error(cfg, out, err, to_string(e.code()), e.what(), Json{{"offset", e.offset()}});
    return kExitDomain;
  } catch (const Error& e) {
    emit_error(cfg, out, err, to_string(e.code()), e.what(), e.value() != 0.0 ? Json{{"value", e.value()}} : Json());
    return kExitDomain;
  }

  if (cfg.json) {
    Json doc{{"schema", 1}};
    if (!cfg.subcommand.empty()) doc["command"] = cfg.subcommand;
    doc.update(result);
    out << doc.dump(2) << '\n';
  } else if (cfg.subcommand == "parcellings" && pc.count_only) {
    out << result["count"].get<std::uint64_t>() << '\n';
  } else if (cfg.subcommand == "fourier" && fr.print_nodes) {
    out << "theta,phi,weight\n";
    for (const auto& n : result["nodes"])
      out << n["theta"].dump() << ',' << n["phi"].dump() << ',' << n["weight"].dump() << '\n';
  } else {
    render_human(result, out);
  }
  return kExitOk;
}

}  // namespace qm::cli
