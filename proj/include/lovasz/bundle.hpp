#pragma once

// Certificate bundles: a theta bracket together with its compatible-matrix
// pair, the labelings derived from it and the verification report, with a
// JSON form that can be re-verified without the solver.
//
// Schema (matrices row-major, labelings as one array per vertex):
//   { "version": 1,
//     "graph": { "n": 5, "edges": [[0,1], ...], "hash": "fnv1a64:..." },
//     "weights": [...],
//     "theta": { "lo": ..., "hi": ..., "eps": ... },
//     "certificates": { "A": [[...]], "B": [[...]], "a": [[...]], "b": [[...]] },
//     "report": [ { "check": "...", "residual": ..., "pass": true }, ... ] }
// A is lambda-compatible with G and w (lambda = A[0][0]); B is 1-compatible
// with the complement and its border is x. "a" and "b" may be omitted.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lovasz/certificates.hpp"
#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/labelings.hpp"
#include "lovasz/theta.hpp"

namespace lovasz {

inline constexpr int kBundleVersion = 1;

struct CertificateBundle {
  Graph graph;
  WeightVector w;
  double lo = 0, hi = 0, eps = 0;
  std::optional<OptimalPair> pair;
  std::optional<OrthogonalLabeling> a, b;
  Report report;
};

/// FNV-1a over n and the sorted edge list, printed as hex.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.order());
  for (auto [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Re-runs every verifier that the bundle carries data for.
inline Report certify(const CertificateBundle& bundle, double tol) {
  Report r;
  const Graph& g = bundle.graph;
  r.add("lo <= hi", std::max(0.0, bundle.lo - bundle.hi), tol * (1.0 + std::abs(bundle.hi)));
  if (!bundle.pair) {
    r.add("certificates present", std::numeric_limits<double>::infinity(), 0);
    return r;
  }
  const OptimalPair& p = *bundle.pair;
  r.append(verify_optimal_pair(p, g, tol));
  r.append(check_29_5(p, tol));
  double wx = 0;
  for (std::size_t v = 0; v < bundle.w.size() && v < p.b.w.size(); ++v) wx += bundle.w[v] * p.b.w[v];
  const double slack = tol * (1.0 + std::abs(bundle.hi));
  r.add("lambda within [lo, hi]", std::max({0.0, bundle.lo - p.a.lambda, p.a.lambda - bundle.hi}), slack);
  r.add("w.x within [lo, hi]", std::max({0.0, bundle.lo - wx, wx - bundle.hi}), slack);
  if (bundle.a && bundle.b) r.append(verify_theorem13(*bundle.a, *bundle.b, g, bundle.w, p.a.lambda, tol), "labelings: ");
  return r;
}

inline double default_tolerance(double eps) { return std::max(10.0 * eps, 1e-9); }

/// Bundle for a solver bracket: compatible pair, labelings and report.
inline CertificateBundle make_bundle(const Graph& g, const WeightVector& w, const ThetaBracket& br) {
  CertificateBundle out{g, w, br.lo, br.hi, br.eps_requested, {}, {}, {}, {}};
  if (br.hi > 0) {
    out.pair = optimal_pair(g, w, br);
    out.a = labeling_from_compatible(out.pair->a, g, 1e-6);
    out.b = labeling_from_compatible(out.pair->b, complement(g), 1e-6);
    out.b->target = Target::Complement;
  }
  out.report = certify(out, default_tolerance(out.eps));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix json_matrix(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(0, std::string(what) + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError(0, std::string(what) + ": ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) throw ParseError(0, std::string(what) + ": non-numeric entry");
      m(i, k) = x.get<double>();
    }
  }
  return m;
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("bundle: missing field \"") + key + "\"");
  return j.at(key);
}

inline double number(const nlohmann::json& j, const char* key) {
  const auto& x = field(j, key);
  if (!x.is_number()) throw ParseError(0, std::string("bundle: field \"") + key + "\" must be a number");
  return x.get<double>();
}

}  // namespace detail

inline nlohmann::json to_json(const CertificateBundle& b) {
  nlohmann::json j;
  j["version"] = kBundleVersion;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : b.graph.edges()) edges.push_back({u, v});
  j["graph"] = {{"n", b.graph.order()}, {"edges", edges}, {"hash", graph_hash(b.graph)}};
  j["weights"] = b.w.values();
  j["theta"] = {{"lo", b.lo}, {"hi", b.hi}, {"eps", b.eps}};
  nlohmann::json cert = nlohmann::json::object();
  if (b.pair) {
    cert["A"] = detail::matrix_json(b.pair->a.matrix.dense());
    cert["B"] = detail::matrix_json(b.pair->b.matrix.dense());
  }
  if (b.a) cert["a"] = detail::matrix_json(b.a->vectors.transpose());
  if (b.b) cert["b"] = detail::matrix_json(b.b->vectors.transpose());
  j["certificates"] = cert;
  nlohmann::json rep = nlohmann::json::array();
  for (const auto& c : b.report.checks) rep.push_back({{"check", c.check}, {"residual", c.residual}, {"pass", c.pass}});
  j["report"] = rep;
  return j;
}

/// Parses a bundle; the stored report is kept as written (call certify to recompute).
inline CertificateBundle bundle_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError(0, "bundle: top level must be an object");
  const auto& ver = detail::field(j, "version");
  if (!ver.is_number_integer() || ver.get<int>() != kBundleVersion)
    throw ParseError(0, "bundle: unsupported version");
  const auto& gj = detail::field(j, "graph");
  const auto& nj = detail::field(gj, "n");
  if (!nj.is_number_unsigned()) throw ParseError(0, "bundle: graph.n must be a nonnegative integer");
  const std::size_t n = nj.get<std::size_t>();
  GraphBuilder gb(n);
  const auto& ej = detail::field(gj, "edges");
  if (!ej.is_array()) throw ParseError(0, "bundle: graph.edges must be an array");
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError(0, "bundle: each edge must be a pair of vertex indices");
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= n || v >= n || u == v) throw ParseError(0, "bundle: bad edge");
    gb.add_edge(u, v);
  }
  CertificateBundle b;
  b.graph = gb.build();
  if (gj.contains("hash") && gj.at("hash") != graph_hash(b.graph))
    throw ParseError(0, "bundle: graph hash does not match the edge list");
  const auto& wj = detail::field(j, "weights");
  if (!wj.is_array() || wj.size() != n) throw ParseError(0, "bundle: weights must have one entry per vertex");
  std::vector<double> w;
  for (const auto& x : wj) {
    if (!x.is_number()) throw ParseError(0, "bundle: non-numeric weight");
    w.push_back(x.get<double>());
  }
  b.w = WeightVector(w);
  const auto& tj = detail::field(j, "theta");
  b.lo = detail::number(tj, "lo");
  b.hi = detail::number(tj, "hi");
  b.eps = detail::number(tj, "eps");
  const auto& cj = detail::field(j, "certificates");
  if (cj.contains("A") || cj.contains("B")) {
    const Matrix a = detail::json_matrix(detail::field(cj, "A"), "certificates.A");
    const Matrix bm = detail::json_matrix(detail::field(cj, "B"), "certificates.B");
    const auto N = static_cast<Eigen::Index>(n + 1);
    if (a.rows() != N || a.cols() != N || bm.rows() != N || bm.cols() != N)
      throw ParseError(0, "bundle: certificate matrices must be (n+1) x (n+1)");
    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = bm(0, static_cast<Eigen::Index>(v + 1));
    try {
      b.pair = OptimalPair{{SymMatrix::from_dense(a, 1e-9 * (1.0 + a.cwiseAbs().maxCoeff())), a(0, 0), b.w},
                           {SymMatrix::from_dense(bm, 1e-9 * (1.0 + bm.cwiseAbs().maxCoeff())), bm(0, 0),
                            WeightVector(x)}};
    } catch (const PatternError& e) {
      throw ParseError(0, std::string("bundle: ") + e.what());
    } catch (const InvalidArgument& e) {
      throw ParseError(0, std::string("bundle: ") + e.what());
    }
  }
  auto labeling = [&](const char* key, Target t) -> std::optional<OrthogonalLabeling> {
    if (!cj.contains(key)) return std::nullopt;
    const Matrix m = detail::json_matrix(cj.at(key), key);
    if (static_cast<std::size_t>(m.rows()) != n) throw ParseError(0, std::string("bundle: ") + key + " needs one vector per vertex");
    return OrthogonalLabeling{m.transpose(), t};
  };
  b.a = labeling("a", Target::Graph);
  b.b = labeling("b", Target::Complement);
  if (j.contains("report") && j.at("report").is_array())
    for (const auto& c : j.at("report"))
      if (c.is_object() && c.contains("check") && c.contains("residual") && c.contains("pass"))
        b.report.checks.push_back({c.at("check").get<std::string>(),
                                   c.at("residual").is_number() ? c.at("residual").get<double>()
                                                                : std::numeric_limits<double>::infinity(),
                                   c.at("pass").get<bool>()});
  return b;
}

inline CertificateBundle bundle_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("bundle: ") + e.what());
  }
  return bundle_from_json(j);
}

}  // namespace lovasz
