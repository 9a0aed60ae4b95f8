#include "cli.hpp"

#include "omegalab/derivative_space.hpp"
#include "omegalab/json_io.hpp"
#include "omegalab/polymatroid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

namespace omegalab::cli {

using nlohmann::json;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::SmoothToric: return kExitSmooth;
    case Verdict::CriterionFails: return kExitCriterionFails;
    case Verdict::NotApplicable: return kExitNotApplicable;
    case Verdict::Undecided: return kExitUndecided;
  }
  return kExitUsage;
}

namespace {

struct NaturalLess {
  bool operator()(const std::string& a, const std::string& b) const {
    auto split = [](const std::string& s) {
      std::size_t i = s.size();
      while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
      return std::pair{s.substr(0, i), s.substr(i)};
    };
    const auto [pa, na] = split(a);
    const auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.size() != nb.size()) return na.size() < nb.size();
    return na < nb;
  }
};

}  // namespace

std::vector<std::string> infer_variables(const std::string& text) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string, NaturalLess> names;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it)
    names.insert(it->str());
  return {names.begin(), names.end()};
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string vars;
  std::string file;
  std::string inline_text;
  std::string format = "text";
  std::uint64_t seed = kDefaultProbeSeed;
  std::size_t trials = 5;
  std::size_t max_pairs = kDefaultMaxPairs;
  std::size_t max_lattice_scan = kDefaultMaxLatticeScan;
  std::size_t jobs = 1;
  bool oracle = false;
  // set-function input
  std::string matroid;
  std::string table;
  std::size_t n = 0;
  std::string function = "base";
  long truncation = -1;
  // rank command
  std::string e;
  std::string v;
};

struct Input {
  SparsePolynomial poly{1};
  std::vector<std::string> names;
  std::string text;
};

std::string read_text(const RunConfig& cfg) {
  const bool has_file = !cfg.file.empty(), has_inline = !cfg.inline_text.empty();
  if (has_file == has_inline) throw UsageError("give exactly one input: a polynomial or --file");
  if (has_inline) return cfg.inline_text;
  std::ifstream in(cfg.file);
  if (!in) throw UsageError("cannot read " + cfg.file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input read_polynomial(const RunConfig& cfg) {
  Input in;
  in.text = read_text(cfg);
  in.names = cfg.vars.empty() ? infer_variables(in.text) : parse_variable_list(cfg.vars);
  if (in.names.empty()) throw UsageError("no variables; pass --vars");
  in.poly = parse_polynomial(in.text, in.names);
  return in;
}

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.feasibility.groebner.max_pairs = cfg.max_pairs;
  o.max_lattice_scan = cfg.max_lattice_scan;
  o.jobs = std::max<std::size_t>(1, cfg.jobs);
  return o;
}

std::string point_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string points_string(const std::vector<LatticePoint>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + point_string(p);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_polytope_text(std::ostream& out, const LatticePolytope& p) {
  out << "dim: " << p.dim() << "\n";
  out << "vertices (" << p.vertices().size() << "): " << points_string(p.vertices()) << "\n";
  for (const auto& f : p.inequalities()) out << "  " << point_string(f.a) << " . x <= " << f.b << "\n";
  for (const auto& e : p.equations()) out << "  " << point_string(e.a) << " . x == " << e.b << "\n";
}

std::string mconvex_witness(const MConvexReport& r) {
  return "x=" + r.x->to_string() + " y=" + r.y->to_string() + " i=" + std::to_string(*r.index + 1);
}

void print_lorentzian_text(std::ostream& out, const LorentzianReport& r) {
  out << "Lorentzian: " << yes_no(r.is_lorentzian) << " (nonnegative coefficients: " << yes_no(r.nonneg_coeffs)
      << ", M-convex support: " << yes_no(r.mconvex) << ", Hessian failures: " << r.hessian_failures.size() << ")\n";
  for (const auto& ms : r.hessian_failures) {
    out << "  more than one positive eigenvalue after differentiating by";
    for (std::size_t i : ms) out << " " << i + 1;
    out << "\n";
  }
}

std::map<std::size_t, Disjointness> oracle_verdicts(const SparsePolynomial& h, const SmoothnessCertificate& cert,
                                                    const RunConfig& cfg) {
  std::map<std::size_t, Disjointness> res;
  GroebnerOptions g;
  g.max_pairs = cfg.max_pairs;
  for (const auto& kr : cert.k_reports)
    if (kr.b_k_size <= kMaxToricOraclePoints) res[kr.k] = oracle_centre_disjoint(h, kr.k, g);
  return res;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  const auto cert = certify_smooth(in.poly, certify_options(cfg), in.names);
  const auto oracle = cfg.oracle ? oracle_verdicts(in.poly, cert, cfg) : std::map<std::size_t, Disjointness>{};

  if (cfg.format == "json") {
    json j = to_json(cert);
    j["variables"] = in.names;
    for (auto& kr : j["per_k"]) {
      const auto it = oracle.find(kr["k"].get<std::size_t>());
      if (it != oracle.end()) kr["oracle_disjoint"] = to_string(it->second);
    }
    out << j.dump(2) << "\n";
    return exit_code(cert.verdict);
  }

  out << "polynomial: " << cert.polynomial << "\n";
  out << "variables: ";
  for (std::size_t i = 0; i < in.names.size(); ++i) out << (i ? "," : "") << in.names[i];
  out << "\nn = " << cert.n << ", d = " << cert.d << "\n";
  out << "M-convex support: " << yes_no(cert.mconvex);
  if (!cert.mconvex) out << " (" << mconvex_witness(*cert.mconvex_report) << ")";
  out << "\n";
  if (cert.lorentzian) print_lorentzian_text(out, *cert.lorentzian);
  for (const auto& kr : cert.k_reports) {
    out << "k=" << kr.k << ": m_k=" << kr.m_k << " |B_k|=" << kr.b_k_size << " centre_dim=" << kr.centre_dim
        << " disjoint=" << to_string(kr.disjoint);
    const auto it = oracle.find(kr.k);
    if (it != oracle.end()) out << " oracle=" << to_string(it->second);
    out << "\n";
    if (kr.witness)
      out << "  witness face (dim " << kr.witness->face.dim << "): " << points_string(kr.witness->vertices) << "\n"
          << "  " << to_string(kr.witness->verdict.method) << ": " << kr.witness->verdict.certificate << "\n";
  }
  out << "verdict: " << to_string(cert.verdict) << "\n";
  if (cert.polytope) {
    out << "smooth toric polytope B(r-bar_1):\n";
    print_polytope_text(out, *cert.polytope);
  }
  return exit_code(cert.verdict);
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  const SparsePolynomial& h = in.poly;
  if (h.is_zero() || h.degree() < 1) throw UsageError("analyze needs a polynomial of degree at least 1");
  if (!h.is_homogeneous()) throw UsageError("analyze needs a homogeneous polynomial");

  const ExponentSet supp = support(h);
  const MConvexReport mc = is_mconvex(supp);
  const SetFunction rho = rho_from_support(supp);
  std::optional<LorentzianReport> lor;
  if (h.degree() >= 2) lor = is_lorentzian(h);

  json j;
  j["schema"] = kSchema;
  j["polynomial"] = h.to_string(in.names);
  j["variables"] = in.names;
  j["n"] = h.nvars();
  j["d"] = h.degree();
  json sj = json::array();
  for (const auto& e : supp) sj.push_back(e.entries());
  j["support"] = sj;
  j["mconvex"] = mc.holds;
  j["rho"] = to_json(rho);
  j["lorentzian"] = lor ? to_json(*lor) : json(nullptr);
  json ks = json::array();
  for (std::size_t k = 1; static_cast<int>(k) < h.degree(); ++k) {
    const DerivativeSpace ds = derivative_space(h, k);
    json basis = json::array();
    for (const auto& b : ds.basis) basis.push_back(b.to_string(in.names));
    json kj = to_json(ds);
    kj["basis"] = basis;
    kj["centre_dim"] = ds.support_union.size() - ds.m();
    ks.push_back(kj);
  }
  j["derivatives"] = ks;
  if (mc.holds) {
    json failing = verify_monomial_proposition(h);
    j["B_k_matches_base_polytope"] = failing.empty();
  }

  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
  out << "n = " << h.nvars() << ", d = " << h.degree() << "\n";
  out << "support (" << supp.size() << "):";
  for (const auto& e : supp) out << " " << e.to_string();
  out << "\nM-convex support: " << yes_no(mc.holds);
  if (!mc.holds) out << " (" << mconvex_witness(mc) << ")";
  out << "\nrho:\n";
  for (Subset s = 1; s <= rho.full(); ++s) out << "  " << subset_to_string(s) << " -> " << rho(s) << "\n";
  if (lor) print_lorentzian_text(out, *lor);
  for (const auto& kr : j["derivatives"]) {
    out << "k=" << kr["k"].get<std::size_t>() << ": m_k=" << kr["m_k"].get<std::size_t>()
        << " |B_k|=" << kr["B_k"].size() << " centre_dim=" << kr["centre_dim"].get<std::size_t>() << "\n";
    for (const auto& b : kr["basis"]) out << "  " << b.get<std::string>() << "\n";
  }
  if (j.contains("B_k_matches_base_polytope"))
    out << "B_k equals the lattice points of B((rho_h)_k) for every k: "
        << yes_no(j["B_k_matches_base_polytope"].get<bool>()) << "\n";
  return 0;
}

int cmd_mconvex(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  if (in.poly.is_zero()) throw UsageError("the zero polynomial has empty support");
  const MConvexReport r = is_mconvex(support(in.poly));
  if (cfg.format == "json") {
    json j = {{"schema", kSchema}, {"mconvex", r.holds}};
    if (!r.holds) j["witness"] = {{"x", r.x->entries()}, {"y", r.y->entries()}, {"i", *r.index + 1}};
    out << j.dump(2) << "\n";
  } else {
    out << "M-convex: " << yes_no(r.holds);
    if (!r.holds) out << " (" << mconvex_witness(r) << ")";
    out << "\n";
  }
  return r.holds ? 0 : 1;
}

int cmd_lorentzian(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  const LorentzianReport r = is_lorentzian(in.poly);
  if (cfg.format == "json") {
    json j = to_json(r);
    j["schema"] = kSchema;
    out << j.dump(2) << "\n";
  } else {
    print_lorentzian_text(out, r);
  }
  return r.is_lorentzian ? 0 : 1;
}

RationalVector parse_vector(const std::string& text, std::size_t n, const char* what) {
  RationalVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " entries");
  return v;
}

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  if (cfg.e.empty()) throw UsageError("rank needs --e");
  const RationalVector e = parse_vector(cfg.e, in.poly.nvars(), "--e");
  if (!cfg.v.empty()) {
    const long r = hyperbolic_rank(in.poly, e, parse_vector(cfg.v, in.poly.nvars(), "--v"));
    if (cfg.format == "json")
      out << json{{"schema", kSchema}, {"rank", r}}.dump(2) << "\n";
    else
      out << "rank: " << r << "\n";
    return 0;
  }
  const SetFunction f = polymatroid_from_hyperbolic(in.poly, e);
  if (cfg.format == "json") {
    out << to_json(f).dump(2) << "\n";
  } else {
    for (Subset s = 1; s <= f.full(); ++s) out << subset_to_string(s) << " -> " << f(s) << "\n";
  }
  return 0;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  const Input in = read_polynomial(cfg);
  if (in.poly.is_zero()) throw UsageError("the zero polynomial has empty support");
  const ExponentSet s = support(in.poly);
  if (!is_mconvex(s).holds) {
    out << "support is not M-convex\n";
    return kExitNotApplicable;
  }
  const ProbeReport r = torically_smoothable_probe(s, cfg.trials, cfg.seed, certify_options(cfg));
  if (cfg.format == "json") {
    json verdicts = json::array();
    for (Verdict v : r.verdicts) verdicts.push_back(to_string(v));
    out << json{{"schema", kSchema},       {"seed", cfg.seed},      {"trials", r.trials},
                {"smooth_toric", r.smooth}, {"criterion_fails", r.fails}, {"undecided", r.undecided},
                {"verdicts", verdicts}}
               .dump(2)
        << "\n";
  } else {
    out << "trials: " << r.trials << " (seed " << cfg.seed << ")\n"
        << "smooth-toric: " << r.smooth << "\ncriterion-fails: " << r.fails << "\nundecided: " << r.undecided << "\n";
  }
  return 0;
}

std::vector<Subset> parse_bases(const std::string& text, std::size_t& n) {
  std::vector<Subset> bases;
  std::stringstream ss(text);
  std::string item;
  std::size_t max_elem = 0;
  while (std::getline(ss, item, ',')) {
    Subset b = 0;
    for (char c : item) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '1' || c > '9') throw UsageError("matroid bases are digit strings such as 12,13,23");
      const std::size_t i = static_cast<std::size_t>(c - '1');
      max_elem = std::max(max_elem, i + 1);
      b |= Subset{1} << i;
    }
    bases.push_back(b);
  }
  if (bases.empty()) throw UsageError("empty basis list");
  if (n == 0) n = max_elem;
  if (n < max_elem) throw UsageError("--n is smaller than the largest element");
  return bases;
}

SetFunction read_set_function(const RunConfig& cfg, std::vector<std::string>* names) {
  const int sources = !cfg.matroid.empty() + !cfg.table.empty() + (!cfg.inline_text.empty() || !cfg.file.empty());
  if (sources != 1) throw UsageError("give exactly one of --matroid, --table or a polynomial");
  if (!cfg.matroid.empty()) {
    std::size_t n = cfg.n;
    const auto bases = parse_bases(cfg.matroid, n);
    return matroid_from_bases(n, bases);
  }
  if (!cfg.table.empty()) {
    std::vector<long> values;
    std::stringstream ss(cfg.table);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stol(item));
    std::size_t n = 0;
    while ((std::size_t{1} << n) < values.size()) ++n;
    return SetFunction(n, values);
  }
  const Input in = read_polynomial(cfg);
  if (in.poly.is_zero()) throw UsageError("the zero polynomial has empty support");
  if (names) *names = in.names;
  return rho_from_support(support(in.poly));
}

int cmd_polytope(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SetFunction r = read_set_function(cfg, nullptr);
  const auto check = is_polymatroid(r);
  if (!check.ok()) {
    err << "not a polymatroid: " << check.describe() << "\n";
    return kExitNotPolymatroid;
  }
  if (cfg.truncation >= 0) r = truncate(r, cfg.truncation);
  LatticePolytope p = cfg.function == "bar"            ? base_polytope(bar(r))
                      : cfg.function == "independence" ? independence_polytope(r)
                                                       : base_polytope(r);
  const auto simple = is_simple(p);
  const auto smooth = is_smooth(p);
  if (cfg.format == "json") {
    json j = to_json(p);
    j["function"] = cfg.function;
    j["simple"] = simple.holds;
    j["smooth"] = smooth.holds;
    out << j.dump(2) << "\n";
  } else {
    print_polytope_text(out, p);
    out << "simple: " << yes_no(simple.holds) << "\nsmooth: " << yes_no(smooth.holds) << "\n";
  }
  return 0;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("polynomial", cfg.inline_text, "Polynomial, e.g. \"x1*x2 + 3*x3^2\"");
  sub->add_option("--file", cfg.file, "Read the polynomial from a .poly file");
  sub->add_option("--vars", cfg.vars, "Comma separated variable order (default: sorted identifiers)");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_guard_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--max-pairs", cfg.max_pairs, "Groebner pair cap per system")->capture_default_str();
  sub->add_option("--max-lattice-scan", cfg.max_lattice_scan, "Lattice point scan cap")->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "Worker threads for face checks")->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"omegalab: smoothness certificates for Omega_h via polymatroid base polytopes"};
  app.name("omegalab");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* certify = app.add_subcommand("certify", "Run the smoothness criterion");
  add_input_options(certify, cfg);
  add_guard_options(certify, cfg);
  certify->add_flag("--oracle", cfg.oracle, "Cross-check each k with the toric ideal oracle");

  auto* analyze = app.add_subcommand("analyze", "Support, rho_h, Lorentzian test and derivative spaces");
  add_input_options(analyze, cfg);

  auto* mconvex = app.add_subcommand("mconvex", "Exchange axiom check on the support");
  add_input_options(mconvex, cfg);

  auto* lorentzian = app.add_subcommand("lorentzian", "Lorentzian test");
  add_input_options(lorentzian, cfg);

  auto* rank = app.add_subcommand("rank", "Hyperbolic rank at e (and v)");
  add_input_options(rank, cfg);
  rank->add_option("--e", cfg.e, "Direction e, comma separated rationals");
  rank->add_option("--v", cfg.v, "Vector v; omit to print the whole polymatroid");

  auto* probe = app.add_subcommand("probe-smoothable", "Certify random polynomials on the same support");
  add_input_options(probe, cfg);
  add_guard_options(probe, cfg);
  probe->add_option("--trials", cfg.trials, "Number of samples")->capture_default_str();
  probe->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

  auto* polytope = app.add_subcommand("polytope", "Base, independence or bar polytope of a polymatroid");
  add_input_options(polytope, cfg);
  polytope->add_option("--matroid", cfg.matroid, "Bases as digit strings, e.g. 12,13,14,23,24,34");
  polytope->add_option("--n", cfg.n, "Ground set size for --matroid");
  polytope->add_option("--table", cfg.table, "All 2^n values in bitmask order");
  polytope->add_option("--function", cfg.function, "Which polytope")
      ->check(CLI::IsMember({"base", "independence", "bar"}))
      ->capture_default_str();
  polytope->add_option("--truncate", cfg.truncation, "Replace r by its kth truncation first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (certify->parsed()) return cmd_certify(cfg, out);
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (mconvex->parsed()) return cmd_mconvex(cfg, out);
    if (lorentzian->parsed()) return cmd_lorentzian(cfg, out);
    if (rank->parsed()) return cmd_rank(cfg, out);
    if (probe->parsed()) return cmd_probe(cfg, out);
    if (polytope->parsed()) return cmd_polytope(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "resource guard: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"omegalab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace omegalab::cli
