#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "poslam/engine.hpp"
#include "poslam/term.hpp"

namespace poslam {

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Redex redex;
};

struct GraphNode {
  Term term;
  std::string key;         // alpha_key of term
  std::size_t depth = 0;   // BFS distance from the root
  bool normal = false;
  bool expanded = false;   // all outgoing edges are present
  std::vector<std::size_t> out;  // indices into edges
};

// Reducts of a root term, quotiented by alpha. Node 0 is the root. When the
// node cap or the depth bound stops exploration, `truncated` is set and the
// unexplored nodes keep expanded == false.
struct ReductionGraph {
  Relation relation;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  bool truncated = false;

  std::vector<std::size_t> successors(std::size_t n) const;
};

ReductionGraph reduction_graph(const Term& t, const Relation& rel, std::size_t node_cap,
                               std::size_t fuel);

// Weak normalization and divergence of the root. Only meaningful when
// `decided`; a truncated graph may hide both normal forms and cycles, except
// that a reachable normal form or a reachable cycle is conclusive.
struct Termination {
  bool normalizing = false;  // some normal node is reachable
  bool diverging = false;    // some cycle is reachable
  bool decided = false;
};
Termination analyze_termination(const ReductionGraph& g);

struct DiamondReport {
  std::size_t peaks = 0;               // pairs of alpha-distinct one-step reducts
  std::size_t peak_violations = 0;
  std::size_t length_checks = 0;       // nodes whose distances to normal were compared
  std::size_t length_violations = 0;   // min != max steps to normal
  std::size_t uniformity_violations = 0;  // reaches both a normal form and a cycle
  std::vector<std::string> witnesses;

  bool diamond() const { return peak_violations == 0; }
  bool ok() const { return peak_violations + length_violations + uniformity_violations == 0; }
};

// Checks one-step joinability of every peak at an expanded node. When no peak
// fails, also checks that all maximal paths to normal form have one length
// and that no node reaches both a normal form and a cycle.
DiamondReport check_diamond(const ReductionGraph& g);

// Peak check at a single term, without building a graph.
DiamondReport check_local_diamond(const Relation& rel, const Term& t);

}  // namespace poslam
