#pragma once

#include <string>
#include <vector>

#include "poslam/checks.hpp"
#include "poslam/graph.hpp"
#include "poslam/harness.hpp"

namespace poslam {

// One JSON object per line: a start record (index 0), one record per step
// {index, label, anchor, verdict, term}, then a trailer with the counters.
std::string trace_json(const Trace& d);

// The start term, then one "-label-> term" line per step, then a summary.
std::string trace_text(const Trace& d);

std::string graph_dot(const ReductionGraph& g);
std::string graph_summary_json(const ReductionGraph& g);

// {index, label, anchor, occurrence, verdict, reduct} per redex of t.
std::string redexes_json(const Relation& rel, const Term& t);

std::string report_json(const CheckReport& r);

}  // namespace poslam
