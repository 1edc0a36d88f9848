// lovasz: certified brackets for the Lovasz number and friends.
//
//   lovasz theta    [GRAPH] [--gen FAM:P] [--weights FILE] [--eps E] [--json] [--out FILE]
//   lovasz sandwich [GRAPH] [--gen FAM:P] [--exact-limit N] [--json]
//   lovasz certify  BUNDLE
//   lovasz perfect  [GRAPH] [--gen FAM:P] [--perfection-limit N] [--json]
//   lovasz report   --family odd-cycles|gnp|kneser [--from A] [--to B] [--n N] [--p P] [--seeds K] [--json]
//   lovasz generate --gen FAM:P [--out FILE]
//
// Exit codes: 0 success, 1 usage or input error, 2 tolerance not met,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lovasz/lovasz.hpp"

namespace {

using namespace lovasz;
using nlohmann::json;

enum Exit { kOk = 0, kInput = 1, kTolerance = 2, kVerify = 3 };

struct RunConfig {
  double eps = 1e-5;
  std::uint64_t seed = 0;
  std::size_t exact_limit = exact::kDefaultExactLimit;
  std::size_t perfection_limit = exact::kDefaultPerfectionLimit;
  bool json = false;
  std::string out;
};

struct Input {
  std::string graph_file, gen, weights_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + cfg.out + "'");
  f << text;
}

Graph load_graph(const Input& in, const RunConfig& cfg) {
  if (!in.gen.empty() && !in.graph_file.empty()) throw InvalidArgument("give either a graph file or --gen, not both");
  if (!in.gen.empty()) return generate(in.gen, cfg.seed);
  if (in.graph_file.empty()) throw InvalidArgument("no graph: give a graph file or --gen");
  return parse_graph(read_file(in.graph_file));
}

WeightVector load_weights(const Input& in, const Graph& g) {
  if (in.weights_file.empty()) return WeightVector::ones(g.order());
  return parse_weights(read_file(in.weights_file), g.order());
}

std::string fixed6(double x, bool up) {
  const double scaled = x * 1e6;
  const double r = up ? std::ceil(scaled - 1e-9) : std::floor(scaled + 1e-9);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r / 1e6);
  return buf;
}

std::string num(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string set_string(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

// ---------------------------------------------------------------------------

int cmd_theta(const Input& in, const RunConfig& cfg) {
  const Graph g = load_graph(in, cfg);
  const WeightVector w = load_weights(in, g);
  const ThetaBracket br = theta(g, w, cfg.eps);
  const CertificateBundle bundle = make_bundle(g, w, br);
  if (cfg.json) {
    write_output(cfg, to_json(bundle).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "theta in [" << fixed6(br.lo, false) << ", " << fixed6(br.hi, true) << "]\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "gap %.3e (eps %.1e), %zu iterations\n", br.gap(), cfg.eps, br.iterations);
    os << buf;
    os << "certificates " << (bundle.report.pass() ? "verified" : "FAILED") << "\n";
    for (const auto& c : bundle.report.checks)
      if (!c.pass) os << "  FAIL " << c.check << " residual " << c.residual << "\n";
    write_output(cfg, os.str());
  }
  if (!bundle.report.pass()) return kVerify;
  return br.tolerance_met ? kOk : kTolerance;
}

int cmd_sandwich(const Input& in, const RunConfig& cfg) {
  const Graph g = load_graph(in, cfg);
  const std::size_t n = g.order();
  const auto a = exact::alpha(g, cfg.exact_limit);
  const ThetaBracket br = theta(g, cfg.eps);
  const auto k = exact::kappa(g, cfg.exact_limit);
  const auto cover = exact::clique_cover_number(g, cfg.exact_limit);
  const Graph gbar = complement(g);
  const auto om = exact::omega(gbar, cfg.exact_limit);
  const auto chi = exact::chromatic_number(gbar, cfg.exact_limit);
  const double slack = cfg.eps + 1e-9;
  std::vector<std::string> defects;
  if (a.value > br.hi + slack) defects.push_back("alpha > theta");
  if (br.lo > k.value + slack) defects.push_back("theta > kappa");
  if (k.value > static_cast<double>(cover.value) + 1e-9) defects.push_back("kappa > clique cover number");
  if (std::abs(om.value - a.value) > 1e-9 || chi.value != cover.value) defects.push_back("complement mismatch");

  if (cfg.json) {
    json j;
    j["n"] = n;
    j["alpha"] = {{"value", a.value}, {"witness", a.witness}};
    j["theta"] = {{"lo", br.lo}, {"hi", br.hi}, {"eps", cfg.eps}};
    j["kappa"] = {{"value", k.value}, {"x", k.x}};
    std::vector<std::vector<Vertex>> cl = cover.cliques;
    j["clique_cover"] = {{"value", cover.value}, {"cliques", cl}};
    j["omega_complement"] = om.value;
    j["chi_complement"] = chi.value;
    j["defects"] = defects;
    write_output(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "alpha            " << num(a.value) << "   stable set " << set_string(a.witness) << "\n";
    os << "theta            [" << fixed6(br.lo, false) << ", " << fixed6(br.hi, true) << "]\n";
    os << "kappa            " << num(k.value) << "\n";
    os << "clique cover     " << cover.value << "   cliques";
    for (const auto& c : cover.cliques) os << " " << set_string(c);
    os << "\n";
    os << "omega(compl)     " << num(om.value) << "\n";
    os << "chi(compl)       " << chi.value << "\n";
    if (defects.empty()) {
      os << "chain alpha <= theta <= kappa <= cover holds\n";
    } else {
      for (const auto& d : defects) os << "DEFECT " << d << "\n";
    }
    write_output(cfg, os.str());
  }
  return defects.empty() ? kOk : kVerify;
}

int cmd_certify(const std::string& path, const RunConfig& cfg) {
  const CertificateBundle b = bundle_from_json(read_file(path));
  const Report r = certify(b, default_tolerance(b.eps));
  if (cfg.json) {
    json rep = json::array();
    for (const auto& c : r.checks) rep.push_back({{"check", c.check}, {"residual", c.residual}, {"pass", c.pass}});
    write_output(cfg, json{{"pass", r.pass()}, {"report", rep}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    char buf[256];
    for (const auto& c : r.checks) {
      std::snprintf(buf, sizeof buf, "%s  %-50s residual %.3e\n", c.pass ? "PASS" : "FAIL", c.check.c_str(), c.residual);
      os << buf;
    }
    os << (r.pass() ? "certificate verified\n" : "certificate REJECTED\n");
    write_output(cfg, os.str());
  }
  return r.pass() ? kOk : kVerify;
}

int cmd_perfect(const Input& in, const RunConfig& cfg) {
  const Graph g = load_graph(in, cfg);
  const auto p = exact::is_perfect(g, cfg.perfection_limit);
  const auto a = exact::alpha(g, cfg.exact_limit);
  const ThetaBracket br = theta(g, cfg.eps);
  const double gap = br.mid() - a.value;
  if (cfg.json) {
    json j{{"perfect", p.perfect}, {"witness", p.witness}, {"alpha", a.value},
           {"theta", {{"lo", br.lo}, {"hi", br.hi}}}, {"theta_minus_alpha", gap}};
    write_output(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << (p.perfect ? "perfect" : "not perfect");
    if (!p.perfect) os << "   induced subgraph with chi != omega: " << set_string(p.witness);
    os << "\n";
    os << "alpha " << num(a.value) << "   theta in [" << fixed6(br.lo, false) << ", " << fixed6(br.hi, true)
       << "]   theta - alpha " << num(gap) << "\n";
    write_output(cfg, os.str());
  }
  return kOk;
}

struct ReportOptions {
  std::string family;
  long from = 3, to = 11;
  std::size_t n = 50;
  double p = 0.5;
  std::size_t seeds = 20;
};

int cmd_report(const ReportOptions& ro, const RunConfig& cfg) {
  if (ro.from > ro.to) throw InvalidArgument("report: --from must not exceed --to");
  json rows = json::array();
  std::ostringstream os;
  char buf[256];
  if (ro.family == "odd-cycles") {
    if (ro.from < 3) throw InvalidArgument("report: odd cycles start at 3");
    os << "   n   theta(C_n)      closed form     diff       theta(compl)    closed form     product\n";
    for (long n = ro.from; n <= ro.to; ++n) {
      if (n % 2 == 0) continue;
      const auto nn = static_cast<std::size_t>(n);
      const auto s = vertex_symmetric_product_check(cycle_graph(nn), cfg.eps);
      const double cf = theta_odd_cycle(nn), cfc = theta_odd_cycle_complement(nn);
      rows.push_back({{"n", n}, {"theta", s.g.mid()}, {"closed_form", cf}, {"diff", s.g.mid() - cf},
                      {"theta_complement", s.gbar.mid()}, {"closed_form_complement", cfc},
                      {"diff_complement", s.gbar.mid() - cfc}, {"product", s.product}});
      std::snprintf(buf, sizeof buf, "%4ld   %.10f  %.10f  %+.2e  %.10f  %.10f  %.8f\n", n, s.g.mid(), cf,
                    s.g.mid() - cf, s.gbar.mid(), cfc, s.product);
      os << buf;
    }
  } else if (ro.family == "gnp") {
    if (ro.n == 0 || !(ro.p >= 0 && ro.p <= 1) || ro.seeds == 0) throw InvalidArgument("report: bad gnp range");
    const double scale = std::sqrt((1.0 - ro.p) * static_cast<double>(ro.n) / ro.p);
    os << "seed   theta            theta / sqrt((1-p)n/p)\n";
    std::size_t inside = 0;
    for (std::size_t k = 0; k < ro.seeds; ++k) {
      const std::uint64_t seed = cfg.seed + k;
      const auto br = theta(random_gnp(ro.n, ro.p, seed), cfg.eps);
      const double ratio = br.mid() / scale;
      inside += ratio >= 0.5 && ratio <= 2.0;
      rows.push_back({{"seed", seed}, {"theta", br.mid()}, {"ratio", ratio}});
      std::snprintf(buf, sizeof buf, "%4llu   %.10f  %.6f\n", static_cast<unsigned long long>(seed), br.mid(), ratio);
      os << buf;
    }
    os << inside << "/" << ro.seeds << " ratios in [0.5, 2]\n";
  } else if (ro.family == "kneser") {
    if (ro.from < 4) throw InvalidArgument("report: kneser sweep needs m >= 4");
    os << "   m   n     theta           closed form   diff       kappa    2*ceil(m/2)-1   hoffman\n";
    for (long m = ro.from; m <= ro.to; ++m) {
      const Graph g = kneser_type(static_cast<int>(m), 2, 0);
      const auto br = theta(g, cfg.eps);
      const double cf = *closed_form(g, WeightVector::ones(g.order()));
      const double kap = exact::kappa(g, cfg.exact_limit).value;
      const auto hb = hoffman_bound_exact(kneser_pair_spectrum(m));
      const long expect = 2 * ((m + 1) / 2) - 1;
      rows.push_back({{"m", m}, {"n", g.order()}, {"theta", br.mid()}, {"closed_form", cf}, {"diff", br.mid() - cf},
                      {"kappa", kap}, {"kappa_formula", expect},
                      {"hoffman", static_cast<double>(hb.first) / static_cast<double>(hb.second)}});
      std::snprintf(buf, sizeof buf, "%4ld  %3zu   %.10f  %.4f        %+.2e  %.6f  %ld               %ld/%ld\n", m,
                    g.order(), br.mid(), cf, br.mid() - cf, kap, expect, hb.first, hb.second);
      os << buf;
    }
  } else {
    throw InvalidArgument("report: unknown family '" + ro.family + "' (odd-cycles, gnp, kneser)");
  }
  write_output(cfg, cfg.json ? rows.dump(2) + "\n" : os.str());
  return kOk;
}

int cmd_generate(const Input& in, const RunConfig& cfg) {
  if (in.gen.empty()) throw InvalidArgument("generate needs --gen");
  write_output(cfg, serialize_graph(generate(in.gen, cfg.seed)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified brackets for the weighted Lovasz number"};
  app.require_subcommand(1);
  RunConfig cfg;
  Input in;
  ReportOptions ro;
  std::string bundle_path;
  std::optional<std::uint64_t> seed;

  auto common = [&](CLI::App* sub, bool graph) {
    if (graph) {
      sub->add_option("graph", in.graph_file, "graph file (p edge / e lines)");
      sub->add_option("--gen", in.gen, "inline generator, e.g. cycle:5, kneser:5,2,0, gnp:50,0.5");
    }
    sub->add_option("--eps", cfg.eps, "bracket tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "random seed (default: THETA_SEED or 0)");
    sub->add_option("--exact-limit", cfg.exact_limit, "vertex limit for exact routines")->check(CLI::PositiveNumber);
    sub->add_option("--perfection-limit", cfg.perfection_limit, "vertex limit for the perfection test")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "machine-readable output");
    sub->add_option("--out", cfg.out, "write output to a file");
  };

  auto* th = app.add_subcommand("theta", "bracket theta(G, w) and emit certificates");
  common(th, true);
  th->add_option("--weights", in.weights_file, "weight file (one real per line)");
  auto* sw = app.add_subcommand("sandwich", "alpha, theta, kappa and clique cover number");
  common(sw, true);
  auto* ce = app.add_subcommand("certify", "re-verify a certificate bundle");
  ce->add_option("bundle", bundle_path, "bundle JSON file")->required();
  common(ce, false);
  auto* pe = app.add_subcommand("perfect", "perfection test with witness");
  common(pe, true);
  auto* re = app.add_subcommand("report", "family sweeps against closed forms");
  common(re, false);
  re->add_option("--family", ro.family, "odd-cycles, gnp or kneser")->required();
  re->add_option("--from", ro.from, "first n (odd-cycles) or m (kneser)");
  re->add_option("--to", ro.to, "last n or m");
  re->add_option("--n", ro.n, "vertices (gnp)");
  re->add_option("--p", ro.p, "edge probability (gnp)");
  re->add_option("--seeds", ro.seeds, "number of seeds (gnp)");
  auto* ge = app.add_subcommand("generate", "print a generated graph in file format");
  common(ge, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (seed) {
    cfg.seed = *seed;
  } else if (const char* env = std::getenv("THETA_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: THETA_SEED is not an unsigned integer\n";
      return kInput;
    }
  }

  try {
    if (*th) return cmd_theta(in, cfg);
    if (*sw) return cmd_sandwich(in, cfg);
    if (*ce) return cmd_certify(bundle_path, cfg);
    if (*pe) return cmd_perfect(in, cfg);
    if (*re) return cmd_report(ro, cfg);
    if (*ge) return cmd_generate(in, cfg);
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kTolerance;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
