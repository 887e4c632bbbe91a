#include "poslam/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>

#include "poslam/syntax.hpp"
#include "poslam/text.hpp"

namespace poslam {

std::vector<std::size_t> ReductionGraph::successors(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t e : nodes[n].out) out.push_back(edges[e].to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReductionGraph reduction_graph(const Term& t, const Relation& rel, std::size_t node_cap,
                               std::size_t fuel) {
  ReductionGraph g;
  g.relation = rel;
  std::unordered_map<std::string, std::size_t> index;
  g.nodes.push_back({t, alpha_key(t), 0, false, false, {}});
  index.emplace(g.nodes[0].key, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t n = queue.front();
    queue.pop_front();
    if (g.nodes[n].depth >= fuel) {
      // Normal nodes at the boundary are still recognised.
      if (enumerate(rel, g.nodes[n].term).empty()) {
        g.nodes[n].normal = g.nodes[n].expanded = true;
      } else {
        g.truncated = true;
      }
      continue;
    }
    std::vector<Reduct> rs = reducts(rel, g.nodes[n].term);
    std::vector<std::string> keys;
    std::size_t fresh = 0;
    for (auto& r : rs) {
      keys.push_back(alpha_key(r.term));
      if (!index.count(keys.back())) ++fresh;
    }
    if (g.nodes.size() + fresh > node_cap) {
      g.truncated = true;
      break;
    }
    for (std::size_t i = 0; i < rs.size(); ++i) {
      auto [it, added] = index.emplace(keys[i], g.nodes.size());
      if (added) {
        g.nodes.push_back({rs[i].term, keys[i], g.nodes[n].depth + 1, false, false, {}});
        queue.push_back(it->second);
      }
      g.nodes[n].out.push_back(g.edges.size());
      g.edges.push_back({n, it->second, std::move(rs[i].redex)});
    }
    g.nodes[n].normal = rs.empty();
    g.nodes[n].expanded = true;
  }
  return g;
}

namespace {

// Tarjan's strongly connected components; returns, per node, whether it lies
// on a cycle (a component with more than one node or a self-loop).
std::vector<bool> on_cycle(const ReductionGraph& g) {
  const std::size_t n = g.nodes.size();
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> idx(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> stacked(n, false), cyc(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, comps = 0;
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t v = 0; v < n; ++v) succ[v] = g.successors(v);

  // Iterative DFS to avoid deep recursion on long chains.
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (idx[root] != unset) continue;
    std::vector<Frame> dfs{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    stacked[root] = true;
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      if (f.next < succ[f.v].size()) {
        std::size_t w = succ[f.v][f.next++];
        if (idx[w] == unset) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          stacked[w] = true;
          dfs.push_back({w, 0});
        } else if (stacked[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      dfs.pop_back();
      if (!dfs.empty()) low[dfs.back().v] = std::min(low[dfs.back().v], low[v]);
      if (low[v] == idx[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          stacked[w] = false;
          comp[w] = comps;
          members.push_back(w);
        } while (w != v);
        ++comps;
        bool cyclic = members.size() > 1;
        if (!cyclic)
          for (std::size_t s : succ[v]) cyclic = cyclic || s == v;
        if (cyclic)
          for (std::size_t m : members) cyc[m] = true;
      }
    }
  }
  return cyc;
}

// Per node: reachable-set facts, computed by a fixpoint over reverse edges.
struct Reach {
  std::vector<bool> normal, cycle, open;  // reaches a normal node / a cycle / an unexpanded node
};

Reach reachability(const ReductionGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<bool> cyc = on_cycle(g);
  std::vector<std::vector<std::size_t>> pred(n);
  for (const auto& e : g.edges) pred[e.to].push_back(e.from);
  auto spread = [&](std::vector<bool> seed) {
    std::deque<std::size_t> q;
    for (std::size_t v = 0; v < n; ++v)
      if (seed[v]) q.push_back(v);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t p : pred[v])
        if (!seed[p]) {
          seed[p] = true;
          q.push_back(p);
        }
    }
    return seed;
  };
  std::vector<bool> normal(n), open(n);
  for (std::size_t v = 0; v < n; ++v) {
    normal[v] = g.nodes[v].normal;
    open[v] = !g.nodes[v].expanded;
  }
  return {spread(normal), spread(cyc), spread(open)};
}

std::string show(const Term& t) { return print_term(t); }

}  // namespace

Termination analyze_termination(const ReductionGraph& g) {
  Reach r = reachability(g);
  Termination out;
  out.normalizing = r.normal[0];
  out.diverging = r.cycle[0];
  // Open nodes could hide a normal form (when none is known) or an infinite
  // path (when no cycle is known).
  out.decided = !r.open[0] || (out.normalizing && out.diverging);
  return out;
}

namespace {

void check_peaks(const Relation& rel, const Term& t, const std::vector<Reduct>& rs,
                 DiamondReport& report) {
  std::vector<std::pair<std::string, const Term*>> distinct;
  {
    std::set<std::string> seen;
    for (const auto& r : rs) {
      std::string k = alpha_key(r.term);
      if (seen.insert(k).second) distinct.push_back({k, &r.term});
    }
  }
  if (distinct.size() < 2) return;
  std::vector<std::set<std::string>> next(distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (const auto& r : reducts(rel, *distinct[i].second)) next[i].insert(alpha_key(r.term));
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      ++report.peaks;
      bool joined = std::any_of(next[i].begin(), next[i].end(),
                                [&](const std::string& k) { return next[j].count(k) > 0; });
      if (!joined) {
        ++report.peak_violations;
        if (report.witnesses.size() < 5)
          report.witnesses.push_back("peak " + show(*distinct[i].second) + " <- " + show(t) +
                                     " -> " + show(*distinct[j].second));
      }
    }
}

}  // namespace

DiamondReport check_local_diamond(const Relation& rel, const Term& t) {
  DiamondReport report;
  check_peaks(rel, t, reducts(rel, t), report);
  return report;
}

DiamondReport check_diamond(const ReductionGraph& g) {
  DiamondReport report;
  for (const auto& node : g.nodes) {
    if (!node.expanded) continue;
    std::vector<Reduct> rs;
    for (std::size_t e : node.out) rs.push_back({g.edges[e].redex, g.nodes[g.edges[e].to].term});
    check_peaks(g.relation, node.term, rs, report);
  }
  if (!report.diamond()) return report;

  Reach r = reachability(g);
  const std::size_t n = g.nodes.size();
  const std::size_t unknown = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> lo(n, unknown), hi(n, unknown);
  // Longest and shortest distances to normal on the acyclic, fully explored part.
  std::function<void(std::size_t)> measure = [&](std::size_t v) {
    if (lo[v] != unknown) return;
    if (g.nodes[v].normal) {
      lo[v] = hi[v] = 0;
      return;
    }
    std::size_t mn = unknown, mx = 0;
    for (std::size_t s : g.successors(v)) {
      measure(s);
      mn = std::min(mn, lo[s] + 1);
      mx = std::max(mx, hi[s] + 1);
    }
    lo[v] = mn;
    hi[v] = mx;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (r.open[v] || !r.normal[v]) continue;
    if (r.cycle[v]) {
      ++report.uniformity_violations;
      if (report.witnesses.size() < 5)
        report.witnesses.push_back("normalizes and diverges: " + show(g.nodes[v].term));
      continue;
    }
    measure(v);
    ++report.length_checks;
    if (lo[v] != hi[v]) {
      ++report.length_violations;
      if (report.witnesses.size() < 5)
        report.witnesses.push_back("paths to normal form of lengths " + std::to_string(lo[v]) +
                                   " and " + std::to_string(hi[v]) + ": " +
                                   show(g.nodes[v].term));
    }
  }
  return report;
}

}  // namespace poslam
