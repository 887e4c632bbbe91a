#include "poslam/render.hpp"

#include <sstream>

#include "json.hpp"

#include "poslam/engine.hpp"
#include "poslam/text.hpp"

namespace poslam {

using nlohmann::json;

namespace {

json verdict_field(const Relation& rel, const Term& source, const Redex& r) {
  Verdict v = verdict(rel, source, r);
  if (v == Verdict::Unclassified) return nullptr;
  return std::string(verdict_name(v));
}

json counters_json(const Counters& c) {
  json out = json::object();
  for (const auto& [label, n] : c) out[std::string(label_name(label))] = n;
  return out;
}

}  // namespace

std::string trace_json(const Trace& d) {
  std::string out;
  out += json{{"index", 0}, {"term", print_term(d.start)}}.dump() + "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& s = d.steps[i];
    json rec{{"index", i + 1},
             {"label", std::string(label_name(s.redex.label))},
             {"anchor", path_to_string(s.redex.anchor)},
             {"verdict", verdict_field(d.relation, d.before(i), s.redex)},
             {"term", print_term(s.term)}};
    out += rec.dump() + "\n";
  }
  json trailer{{"steps", d.size()},
               {"counters", counters_json(d.counters)},
               {"normal", d.normal},
               {"fuel_exhausted", d.fuel_exhausted}};
  out += trailer.dump() + "\n";
  return out;
}

std::string trace_text(const Trace& d) {
  std::ostringstream out;
  out << print_term(d.start) << "\n";
  for (const auto& s : d.steps) out << "  -" << label_name(s.redex.label) << "-> " << print_term(s.term) << "\n";
  out << (d.normal ? "normal" : d.fuel_exhausted ? "fuel exhausted" : "stopped") << " after "
      << d.size() << " steps";
  for (const auto& [label, n] : d.counters) out << ", " << label_name(label) << " " << n;
  out << "\n";
  return out.str();
}

std::string graph_dot(const ReductionGraph& g) {
  std::ostringstream out;
  out << "digraph reducts {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    out << "  n" << i << " [label=" << json(print_term(n.term)).dump();
    if (n.normal) out << ", shape=box";
    if (!n.expanded) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& e : g.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << label_name(e.redex.label)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string graph_summary_json(const ReductionGraph& g) {
  Termination t = analyze_termination(g);
  DiamondReport d = check_diamond(g);
  std::size_t normal = 0;
  for (const auto& n : g.nodes) normal += n.normal;
  json out{{"nodes", g.nodes.size()},
           {"edges", g.edges.size()},
           {"normal_nodes", normal},
           {"truncated", g.truncated},
           {"normalizing", t.normalizing},
           {"diverging", t.diverging},
           {"decided", t.decided},
           {"diamond", d.diamond()},
           {"peaks", d.peaks},
           {"witnesses", d.witnesses}};
  return out.dump() + "\n";
}

std::string redexes_json(const Relation& rel, const Term& t) {
  std::string out;
  std::size_t i = 0;
  for (const auto& r : enumerate(rel, t)) {
    json rec{{"index", ++i},
             {"label", std::string(label_name(r.label))},
             {"anchor", path_to_string(r.anchor)},
             {"occurrence", r.occurrence ? json(path_to_string(*r.occurrence)) : json(nullptr)},
             {"verdict", std::string(verdict_name(verdict(rel, t, r)))},
             {"reduct", print_term(apply(rel, t, r))}};
    out += rec.dump() + "\n";
  }
  return out;
}

std::string report_json(const CheckReport& r) {
  json out{{"property", r.property},   {"corpus", r.corpus},
           {"instances", r.instances}, {"violations", r.violations},
           {"excluded", r.excluded},   {"passed", r.passed()},
           {"witnesses", r.witnesses}, {"notes", r.notes}};
  return out.dump() + "\n";
}

}  // namespace poslam
