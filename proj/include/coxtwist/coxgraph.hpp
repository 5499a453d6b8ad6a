#pragma once

// Coxeter graphs: parsing, validation, the real bilinear form and
// finite-type recognition.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace coxtwist {

/// Edge label used for m = infinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoxeterEdge {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  int m = 3;

  bool infinite() const { return m == kInfinity; }
  friend bool operator==(const CoxeterEdge&, const CoxeterEdge&) = default;
};

/// A simple graph whose edges carry labels m >= 3 or infinity.  An absent
/// edge means m = 2.  Vertex order is fixed at construction and determines
/// every downstream basis order.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  CoxeterGraph(std::vector<std::string> vertices, std::vector<CoxeterEdge> edges)
      : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(vertices_[i], i).second)
        throw GraphError("duplicate vertex '" + vertices_[i] + "'");
    }
    labels_.assign(n * n, 2);
    for (auto e : edges) {
      if (e.a >= n || e.b >= n) throw GraphError("edge references unknown vertex");
      if (e.a == e.b) throw GraphError("self-edge at '" + vertices_[e.a] + "'");
      if (e.m < 3) throw GraphError("edge label must be >= 3 or inf");
      if (e.a > e.b) std::swap(e.a, e.b);
      if (labels_[e.a * n + e.b] != 2)
        throw GraphError("duplicate edge " + vertices_[e.a] + "-" + vertices_[e.b]);
      labels_[e.a * n + e.b] = labels_[e.b * n + e.a] = e.m;
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const CoxeterEdge& x, const CoxeterEdge& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& name(std::size_t i) const { return vertices_.at(i); }
  const std::vector<CoxeterEdge>& edges() const { return edges_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw GraphError("unknown vertex '" + std::string(name) + "'");
    return *i;
  }

  /// m_{s,t}; 2 when s and t are distinct and not joined, 1 on the diagonal.
  int label(std::size_t s, std::size_t t) const {
    if (s == t) return 1;
    return labels_[s * size() + t];
  }

  bool adjacent(std::size_t s, std::size_t t) const { return s != t && label(s, t) != 2; }

  std::optional<CoxeterEdge> edge(std::size_t s, std::size_t t) const {
    if (!adjacent(s, t)) return std::nullopt;
    return CoxeterEdge{std::min(s, t), std::max(s, t), label(s, t)};
  }

  std::vector<std::size_t> neighbours(std::size_t s) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < size(); ++t)
      if (adjacent(s, t)) out.push_back(t);
    return out;
  }

  friend bool operator==(const CoxeterGraph& x, const CoxeterGraph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<CoxeterEdge> edges_;
  std::vector<int> labels_;
  std::map<std::string, std::size_t> index_;
};

/// Parses the graph JSON format:
/// {"vertices":[...], "edges":[{"ends":[v,w], "m": <int >= 3> | "inf"}]}
inline CoxeterGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw GraphError("graph document needs a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphError("vertex identifiers must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], i).second)
      throw GraphError("duplicate vertex '" + vertices[i] + "'");

  std::vector<CoxeterEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("ends") || !e["ends"].is_array() ||
          e["ends"].size() != 2 || !e.contains("m"))
        throw GraphError("edge entries need \"ends\":[v,w] and \"m\"");
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        const auto& end = e["ends"][k];
        if (!end.is_string()) throw GraphError("edge ends must be vertex strings");
        auto it = index.find(end.get<std::string>());
        if (it == index.end())
          throw GraphError("edge references unknown vertex '" + end.get<std::string>() + "'");
        ends[k] = it->second;
      }
      const auto& m = e["m"];
      int label = 0;
      if (m.is_string()) {
        if (m.get<std::string>() != "inf") throw GraphError("edge label string must be \"inf\"");
        label = kInfinity;
      } else if (m.is_number_integer()) {
        auto value = m.get<long long>();
        if (value < 3 || value >= kInfinity) throw GraphError("edge label must be >= 3 or \"inf\"");
        label = static_cast<int>(value);
      } else {
        throw GraphError("edge label must be an integer or \"inf\"");
      }
      edges.push_back({ends[0], ends[1], label});
    }
  }
  return CoxeterGraph(std::move(vertices), std::move(edges));
}

inline nlohmann::ordered_json to_json(const CoxeterGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json entry;
    entry["ends"] = {g.name(e.a), g.name(e.b)};
    if (e.infinite())
      entry["m"] = "inf";
    else
      entry["m"] = e.m;
    edges.push_back(std::move(entry));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

/// -2 cos(pi/m), with the convention -2cos(pi/inf) = -2.
inline double edge_weight(int m) {
  if (m == 2) return 0.0;
  if (m == kInfinity) return -2.0;
  return -2.0 * std::cos(std::numbers::pi / m);
}

inline Eigen::MatrixXd gram_matrix(const CoxeterGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) b(i, i) = 2.0;
  for (const auto& e : g.edges()) {
    const auto a = static_cast<Eigen::Index>(e.a), c = static_cast<Eigen::Index>(e.b);
    b(a, c) = b(c, a) = edge_weight(e.m);
  }
  return b;
}

/// Connected components, each listed in vertex order; components ordered by
/// their first vertex.
inline std::vector<std::vector<std::size_t>> components(const CoxeterGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto w : g.neighbours(v))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// The full subgraph on `subset` (kept in the given order).
inline CoxeterGraph full_subgraph(const CoxeterGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<std::string> names;
  for (auto v : subset) names.push_back(g.name(v));
  std::vector<CoxeterEdge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (g.adjacent(subset[i], subset[j])) edges.push_back({i, j, g.label(subset[i], subset[j])});
  return CoxeterGraph(std::move(names), std::move(edges));
}

inline double smallest_eigenvalue(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace detail {

// Classification of a connected Coxeter graph against the finite list
// A_n, B_n, D_n, E_6-8, F_4, H_3, H_4, I_2(m).
inline bool connected_is_finite(const CoxeterGraph& g, const std::vector<std::size_t>& comp) {
  const std::size_t n = comp.size();
  if (n == 1) return true;
  std::vector<CoxeterEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(comp[i], comp[j])) edges.push_back({i, j, g.label(comp[i], comp[j])});
  for (const auto& e : edges)
    if (e.infinite()) return false;
  if (n == 2) return true;
  if (edges.size() != n - 1) return false;  // contains a cycle

  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::size_t branch_count = 0, branch = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return false;
    if (adj[v].size() == 3) {
      ++branch_count;
      branch = v;
    }
  }
  if (branch_count > 1) return false;
  if (branch_count == 1) {
    for (const auto& e : edges)
      if (e.m != 3) return false;
    std::vector<std::size_t> arms;
    for (auto first : adj[branch]) {
      std::size_t len = 1, prev = branch, cur = first;
      while (adj[cur].size() == 2) {
        auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return true;                  // D_n
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return true;  // E_6, E_7, E_8
    return false;
  }

  // A path: walk it from one end and record the labels in order.
  std::size_t end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<int> path_labels;
  std::size_t prev = n, cur = end;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    path_labels.push_back(g.label(comp[cur], comp[next]));
    prev = cur;
    cur = next;
  }
  std::vector<std::size_t> heavy;
  for (std::size_t i = 0; i < path_labels.size(); ++i)
    if (path_labels[i] > 3) heavy.push_back(i);
  if (heavy.empty()) return true;  // A_n
  if (heavy.size() > 1) return false;
  const int m = path_labels[heavy[0]];
  const bool at_end = heavy[0] == 0 || heavy[0] + 1 == path_labels.size();
  if (m == 4) return at_end || (n == 4 && heavy[0] == 1);  // B_n, F_4
  if (m == 5) return at_end && n <= 4;                     // H_3, H_4
  return false;
}

}  // namespace detail

/// True iff every component is in the finite classification.  The
/// classification is exact; positive definiteness of the Gram matrix is
/// checked as a consistency assertion.
inline bool is_finite_type(const CoxeterGraph& g) {
  bool finite = true;
  for (const auto& comp : components(g)) {
    const bool by_table = detail::connected_is_finite(g, comp);
    const double lambda = smallest_eigenvalue(gram_matrix(full_subgraph(g, comp)));
    constexpr double tol = 1e-9;
    if ((by_table && lambda <= -tol) || (!by_table && lambda >= tol))
      throw std::logic_error("finite-type classification disagrees with the Gram spectrum");
    finite = finite && by_table;
  }
  return finite;
}

/// Label-preserving graph isomorphism (vertex names ignored).  Backtracking
/// over candidates with equal degree/label signatures; meant for graphs of a
/// few dozen vertices.
inline bool are_isomorphic(const CoxeterGraph& x, const CoxeterGraph& y) {
  const std::size_t n = x.size();
  if (n != y.size() || x.edges().size() != y.edges().size()) return false;
  auto signature = [](const CoxeterGraph& g, std::size_t v) {
    std::vector<int> labels;
    for (auto w : g.neighbours(v)) labels.push_back(g.label(v, w));
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  std::vector<std::vector<int>> sx(n), sy(n);
  for (std::size_t v = 0; v < n; ++v) {
    sx[v] = signature(x, v);
    sy[v] = signature(y, v);
  }
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sx[v] != sy[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = x.label(u, v) == y.label(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace coxtwist
