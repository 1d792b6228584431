#include <algorithm>
#include <map>

#include "tordeg/polytopes/polytope.hpp"

namespace tordeg {

namespace {

// Bipartite vertex-facet graph: nodes [0, nv) are vertices, [nv, nv + nf) facets.
struct IncidenceGraph {
  size_t nv = 0;
  std::vector<std::vector<uint32_t>> adj;
  std::vector<Bits> matrix;  // per node, adjacency as bits over all nodes
};

IncidenceGraph incidence_graph(const Polytope& p) {
  IncidenceGraph g;
  g.nv = p.vertices().size();
  const auto& fv = p.facet_vertices();
  const size_t n = g.nv + fv.size();
  g.adj.assign(n, {});
  g.matrix.assign(n, Bits(n));
  for (size_t f = 0; f < fv.size(); ++f)
    for (size_t v = 0; v < g.nv; ++v)
      if (fv[f].test(v)) {
        g.adj[v].push_back(static_cast<uint32_t>(g.nv + f));
        g.adj[g.nv + f].push_back(static_cast<uint32_t>(v));
        g.matrix[v].set(g.nv + f);
        g.matrix[g.nv + f].set(v);
      }
  return g;
}

using Coloring = std::vector<size_t>;

// Joint colour refinement of both graphs so that colour ids are comparable across them.
void refine(const IncidenceGraph& A, const IncidenceGraph& B, Coloring& ca, Coloring& cb) {
  auto count = [](const Coloring& a, const Coloring& b) {
    std::vector<size_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<size_t>(std::unique(all.begin(), all.end()) - all.begin());
  };
  size_t classes = count(ca, cb);
  while (true) {
    using Sig = std::pair<size_t, std::vector<size_t>>;
    auto signature = [](const IncidenceGraph& g, const Coloring& c, size_t v) {
      std::vector<size_t> nb;
      for (uint32_t u : g.adj[v]) nb.push_back(c[u]);
      std::sort(nb.begin(), nb.end());
      return Sig{c[v], nb};
    };
    std::map<Sig, size_t> ids;
    std::vector<Sig> sa, sb;
    for (size_t v = 0; v < ca.size(); ++v) sa.push_back(signature(A, ca, v));
    for (size_t v = 0; v < cb.size(); ++v) sb.push_back(signature(B, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (size_t v = 0; v < ca.size(); ++v) ca[v] = ids[sa[v]];
    for (size_t v = 0; v < cb.size(); ++v) cb[v] = ids[sb[v]];
    if (next == classes) return;
    classes = next;
  }
}

bool same_histogram(const Coloring& a, const Coloring& b) {
  std::vector<size_t> x(a), y(b);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool search(const IncidenceGraph& A, const IncidenceGraph& B, Coloring ca, Coloring cb) {
  refine(A, B, ca, cb);
  if (!same_histogram(ca, cb)) return false;
  std::map<size_t, std::vector<size_t>> cells_a, cells_b;
  for (size_t v = 0; v < ca.size(); ++v) cells_a[ca[v]].push_back(v);
  for (size_t v = 0; v < cb.size(); ++v) cells_b[cb[v]].push_back(v);
  size_t target = SIZE_MAX, best = SIZE_MAX;
  for (const auto& [c, members] : cells_a)
    if (members.size() > 1 && members.size() < best) {
      best = members.size();
      target = c;
    }
  if (target == SIZE_MAX) {
    // Discrete: the colouring is a bijection; check it preserves incidences.
    std::vector<size_t> map(ca.size());
    for (const auto& [c, members] : cells_a) map[members[0]] = cells_b[c][0];
    for (size_t v = 0; v < A.adj.size(); ++v)
      for (uint32_t u : A.adj[v])
        if (!B.matrix[map[v]].test(map[u])) return false;
    return true;
  }
  const size_t fresh = ca.size() + cb.size() + 1 + *std::max_element(ca.begin(), ca.end());
  const size_t a = cells_a[target][0];
  for (size_t b : cells_b[target]) {
    Coloring na = ca, nb = cb;
    na[a] = fresh;
    nb[b] = fresh;
    if (search(A, B, na, nb)) return true;
  }
  return false;
}

}  // namespace

bool combinatorially_equivalent(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) return false;
  if (a.vertices().size() != b.vertices().size() || a.facets().size() != b.facets().size()) return false;
  if (f_vector(a) != f_vector(b)) return false;
  IncidenceGraph A = incidence_graph(a), B = incidence_graph(b);
  Coloring ca(A.adj.size()), cb(B.adj.size());
  for (size_t v = 0; v < ca.size(); ++v) ca[v] = v < A.nv ? 0 : 1;
  for (size_t v = 0; v < cb.size(); ++v) cb[v] = v < B.nv ? 0 : 1;
  return search(A, B, ca, cb);
}

}  // namespace tordeg
