#include "hosoya/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace hosoya {

namespace {

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be nonnegative");
  }
}

void Multigraph::add_bond(int u, int v, Int order) {
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("bond endpoint out of range");
  }
  if (order < 1) {
    throw std::invalid_argument("bond order must be at least 1");
  }
  auto [a, b] = ordered(u, v);
  Bond bond{a, b, std::move(order)};
  auto it = std::lower_bound(bonds_.begin(), bonds_.end(), bond,
                             [](const Bond& lhs, const Bond& rhs) {
                               return std::pair{lhs.u, lhs.v} <
                                      std::pair{rhs.u, rhs.v};
                             });
  if (it != bonds_.end() && it->u == a && it->v == b) {
    throw std::invalid_argument("duplicate bond for vertex pair");
  }
  bonds_.insert(it, std::move(bond));
}

Int Multigraph::bond_order(int u, int v) const {
  auto [a, b] = ordered(u, v);
  for (const Bond& bond : bonds_) {
    if (bond.u == a && bond.v == b) return bond.order;
  }
  return 0;
}

bool Multigraph::has_bond(int u, int v) const { return bond_order(u, v) != 0; }

std::vector<std::vector<std::pair<int, Int>>> Multigraph::adjacency() const {
  std::vector<std::vector<std::pair<int, Int>>> adj(vertex_count_);
  for (const Bond& bond : bonds_) {
    adj[bond.u].emplace_back(bond.v, bond.order);
    adj[bond.v].emplace_back(bond.u, bond.order);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end(),
              [](const auto& lhs, const auto& rhs) {
                return lhs.first < rhs.first;
              });
  }
  return adj;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const Bond& bond : bonds_) {
    adj[bond.u].push_back(bond.v);
    adj[bond.v].push_back(bond.u);
  }
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == vertex_count_;
}

bool Multigraph::is_multitree() const {
  return is_connected() &&
         bonds_.size() == static_cast<std::size_t>(vertex_count_) - 1;
}

std::vector<Multigraph> Multigraph::components() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const Bond& bond : bonds_) {
    adj[bond.u].push_back(bond.v);
    adj[bond.v].push_back(bond.u);
  }
  std::vector<int> label(vertex_count_, -1);
  int n_components = 0;
  for (int root = 0; root < vertex_count_; ++root) {
    if (label[root] != -1) continue;
    int id = n_components++;
    std::vector<int> stack{root};
    label[root] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (label[w] == -1) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<int> local(vertex_count_, 0);
  std::vector<int> sizes(n_components, 0);
  for (int v = 0; v < vertex_count_; ++v) {
    local[v] = sizes[label[v]]++;
  }
  std::vector<Multigraph> out;
  out.reserve(n_components);
  for (int id = 0; id < n_components; ++id) {
    out.emplace_back(sizes[id]);
  }
  for (const Bond& bond : bonds_) {
    out[label[bond.u]].add_bond(local[bond.u], local[bond.v], bond.order);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching enumeration (the brute-force oracle).

std::vector<Int> matching_counts(const Multigraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw SizeLimitError("matching enumeration capped at " +
                         std::to_string(vertex_cap) + " vertices, got " +
                         std::to_string(g.vertex_count()));
  }
  std::vector<Int> counts{1};
  const auto& bonds = g.bonds();
  std::vector<char> used(g.vertex_count(), 0);

  auto extend = [&](auto&& self, std::size_t start, std::size_t k,
                    const Int& ways) -> void {
    for (std::size_t i = start; i < bonds.size(); ++i) {
      const Bond& bond = bonds[i];
      if (used[bond.u] || used[bond.v]) continue;
      Int next_ways = ways * bond.order;
      if (counts.size() <= k + 1) counts.emplace_back(0);
      counts[k + 1] += next_ways;
      used[bond.u] = used[bond.v] = 1;
      self(self, i + 1, k + 1, next_ways);
      used[bond.u] = used[bond.v] = 0;
    }
  };
  extend(extend, 0, 0, Int(1));
  return counts;
}

// ---------------------------------------------------------------------------
// Reduction engine.

namespace {

// Signature fallback for components that are not multitrees: exact labeled
// edge list after compaction. Less sharing than a canonical code but still
// a sound memo key.
std::string edge_signature(const Multigraph& g) {
  std::ostringstream out;
  out << "G" << g.vertex_count();
  for (const Bond& bond : g.bonds()) {
    out << '|' << bond.u << ',' << bond.v << ':' << bond.order;
  }
  return out.str();
}

std::string component_key(const Multigraph& g) {
  if (g.is_multitree()) return "T" + canonical_tree_code(g);
  return edge_signature(g);
}

struct Memo {
  std::mutex mu;
  std::unordered_map<std::string, Int> table;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

Int component_index(const Multigraph& g);

Int graph_index(const Multigraph& g) {
  Int product = 1;
  for (const Multigraph& comp : g.components()) {
    product *= component_index(comp);
  }
  return product;
}

Int component_index(const Multigraph& g) {
  if (g.bonds().empty()) return 1;
  const std::string key = component_key(g);
  {
    std::lock_guard lock(memo().mu);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  // Peel a highest-order bundle: Z(G) = Z(G-e) + m * Z(G-{u,v}).
  const Bond* pick = &g.bonds().front();
  for (const Bond& bond : g.bonds()) {
    if (bond.order > pick->order) pick = &bond;
  }
  Int value = graph_index(remove_bond(g, pick->u, pick->v)) +
              pick->order * graph_index(remove_vertices(g, {pick->u, pick->v}));
  {
    std::lock_guard lock(memo().mu);
    memo().table.emplace(key, value);
  }
  return value;
}

}  // namespace

Int hosoya_index(const Multigraph& g) { return graph_index(g); }

Multigraph remove_bond(const Multigraph& g, int u, int v) {
  if (!g.has_bond(u, v)) {
    throw std::invalid_argument("no bond between the given vertices");
  }
  auto [a, b] = ordered(u, v);
  Multigraph out(g.vertex_count());
  for (const Bond& bond : g.bonds()) {
    if (bond.u == a && bond.v == b) continue;
    out.add_bond(bond.u, bond.v, bond.order);
  }
  return out;
}

Multigraph remove_vertices(const Multigraph& g, const std::vector<int>& vs) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("vertex id out of range");
    }
    drop[v] = 1;
  }
  std::vector<int> remap(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) remap[v] = next++;
  }
  Multigraph out(next);
  for (const Bond& bond : g.bonds()) {
    if (drop[bond.u] || drop[bond.v]) continue;
    out.add_bond(remap[bond.u], remap[bond.v], bond.order);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical codes and isomorphism.

namespace {

std::vector<int> tree_centers(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {0};
  std::vector<std::vector<int>> adj(n);
  for (const Bond& bond : g.bonds()) {
    adj[bond.u].push_back(bond.v);
    adj[bond.v].push_back(bond.u);
  }
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<int> next_layer;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v]) {
        if (!removed[w] && --degree[w] == 1) next_layer.push_back(w);
      }
    }
    layer = std::move(next_layer);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) centers.push_back(v);
  }
  return centers;
}

std::string rooted_code(const std::vector<std::vector<std::pair<int, Int>>>& adj,
                        int v, int parent) {
  std::vector<std::string> tokens;
  tokens.reserve(adj[v].size());
  for (const auto& [w, order] : adj[v]) {
    if (w == parent) continue;
    tokens.push_back(order.str() + ":" + rooted_code(adj, w, v));
  }
  std::sort(tokens.begin(), tokens.end());
  std::string out = "(";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += tokens[i];
  }
  out += ')';
  return out;
}

}  // namespace

std::string canonical_tree_code(const Multigraph& g) {
  if (!g.is_multitree()) {
    throw std::invalid_argument(
        "canonical tree codes require a connected acyclic multigraph");
  }
  const auto adj = g.adjacency();
  const auto centers = tree_centers(g);
  if (centers.size() == 1) {
    return "C" + rooted_code(adj, centers[0], -1);
  }
  const int u = centers[0];
  const int v = centers[1];
  std::string cu = rooted_code(adj, u, v);
  std::string cv = rooted_code(adj, v, u);
  if (cv < cu) std::swap(cu, cv);
  return "B" + g.bond_order(u, v).str() + ":" + cu + cv;
}

namespace {

// Per-vertex invariant used to prune the permutation search.
std::string vertex_signature(const Multigraph& g, int v,
                             const std::vector<std::vector<std::pair<int, Int>>>& adj) {
  std::vector<std::string> orders;
  orders.reserve(adj[v].size());
  for (const auto& [w, order] : adj[v]) orders.push_back(order.str());
  std::sort(orders.begin(), orders.end());
  std::string sig = std::to_string(adj[v].size());
  for (const auto& s : orders) sig += "," + s;
  return sig;
}

}  // namespace

bool isomorphic_by_permutation(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.bonds().size() != b.bonds().size()) return false;

  std::vector<Int> orders_a, orders_b;
  for (const Bond& bond : a.bonds()) orders_a.push_back(bond.order);
  for (const Bond& bond : b.bonds()) orders_b.push_back(bond.order);
  std::sort(orders_a.begin(), orders_a.end());
  std::sort(orders_b.begin(), orders_b.end());
  if (orders_a != orders_b) return false;

  const int n = a.vertex_count();
  const auto adj_a = a.adjacency();
  const auto adj_b = b.adjacency();
  std::vector<std::string> sig_a(n), sig_b(n);
  for (int v = 0; v < n; ++v) {
    sig_a[v] = vertex_signature(a, v, adj_a);
    sig_b[v] = vertex_signature(b, v, adj_b);
  }
  {
    auto sorted_a = sig_a;
    auto sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
  }
  if (n > kGeneralIsomorphismCap) {
    throw SizeLimitError("permutation isomorphism capped at " +
                         std::to_string(kGeneralIsomorphismCap) +
                         " vertices, got " + std::to_string(n));
  }

  // Map high-degree vertices first.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return adj_a[lhs].size() > adj_a[rhs].size();
  });

  std::vector<int> map_ab(n, -1);
  std::vector<int> map_ba(n, -1);
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int va = order[depth];
    for (int vb = 0; vb < n; ++vb) {
      if (map_ba[vb] != -1 || sig_a[va] != sig_b[vb]) continue;
      bool consistent = true;
      for (const auto& [wa, order_aw] : adj_a[va]) {
        const int wb = map_ab[wa];
        if (wb != -1 && b.bond_order(vb, wb) != order_aw) {
          consistent = false;
          break;
        }
      }
      if (consistent) {
        // Mapped neighbors of vb must map back to neighbors of va.
        for (const auto& [wb, order_bw] : adj_b[vb]) {
          const int wa = map_ba[wb];
          if (wa != -1 && a.bond_order(va, wa) != order_bw) {
            consistent = false;
            break;
          }
        }
      }
      if (!consistent) continue;
      map_ab[va] = vb;
      map_ba[vb] = va;
      if (self(self, depth + 1)) return true;
      map_ab[va] = -1;
      map_ba[vb] = -1;
    }
    return false;
  };
  return search(search, 0);
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.bonds().size() != b.bonds().size()) return false;
  const bool tree_a = a.is_multitree();
  const bool tree_b = b.is_multitree();
  if (tree_a != tree_b) return false;
  if (tree_a && tree_b) {
    return canonical_tree_code(a) == canonical_tree_code(b);
  }
  return isomorphic_by_permutation(a, b);
}

// ---------------------------------------------------------------------------
// Text formats.

namespace {

bool parse_int_token(const std::string& token, Int& out) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  out = Int(token);
  return true;
}

bool parse_small_int(const std::string& token, int& out) {
  Int big;
  if (!parse_int_token(token, big)) return false;
  if (big > std::numeric_limits<int>::max()) return false;
  out = static_cast<int>(big);
  return true;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Multigraph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive)) continue;
    if (directive == "v") {
      if (have_header) {
        throw ParseError("duplicate vertex-count line", line_no);
      }
      std::string count_token, extra;
      int count = 0;
      if (!(fields >> count_token) || !parse_small_int(count_token, count)) {
        throw ParseError("expected `v <count>`", line_no);
      }
      if (fields >> extra) {
        throw ParseError("trailing tokens after vertex count", line_no);
      }
      g = Multigraph(count);
      have_header = true;
    } else if (directive == "e") {
      if (!have_header) {
        throw ParseError("edge before the `v <count>` header", line_no);
      }
      std::string u_token, v_token, m_token, extra;
      if (!(fields >> u_token >> v_token)) {
        throw ParseError("expected `e <u> <v> [m]`", line_no);
      }
      int u = 0, v = 0;
      Int order = 1;
      if (!parse_small_int(u_token, u) || !parse_small_int(v_token, v)) {
        throw ParseError("vertex ids must be nonnegative integers", line_no);
      }
      if (fields >> m_token) {
        if (!parse_int_token(m_token, order)) {
          throw ParseError("bond order must be a nonnegative integer",
                           line_no);
        }
        if (fields >> extra) {
          throw ParseError("trailing tokens after bond", line_no);
        }
      }
      try {
        g.add_bond(u, v, order);
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), line_no);
      }
    } else {
      throw ParseError("unknown directive `" + directive + "`", line_no);
    }
  }
  if (!have_header) {
    throw ParseError("missing `v <count>` header", line_no);
  }
  return g;
}

std::string format_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const Bond& bond : g.bonds()) {
    out << "e " << bond.u << ' ' << bond.v << ' ' << bond.order << '\n';
  }
  return out.str();
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, label=\"\"];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (const Bond& bond : g.bonds()) {
    for (Int i = 0; i < bond.order; ++i) {
      out << "  " << bond.u << " -- " << bond.v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hosoya
