#include <algorithm>
#include <sstream>

#include "uga/baer/baer.hpp"
#include "uga/baer/wedderburn.hpp"
#include "uga/cli/cli.hpp"
#include "uga/errors.hpp"
#include "uga/groups/conjugacy.hpp"
#include "uga/scalars/numeric.hpp"

namespace uga::cli {

namespace {

json verdict(const std::string& name, json value, const std::string& label, std::optional<std::uint64_t> budget = {}) {
  json v{{"name", name}, {"value", std::move(value)}, {"label", label}};
  if (budget) v["budget"] = *budget;
  return v;
}

json envelope(const std::string& command, json input) {
  return json{{"command", command},
              {"status", "ok"},
              {"input", std::move(input)},
              {"verdicts", json::array()},
              {"certificates", json::object()},
              {"budget", json{{"notes", json::array()}}},
              {"result", json::object()}};
}

json vector_json(const StructureAlgebra& a, const AlgebraVector& v) {
  json out = json::array();
  for (auto c : v) out.push_back(a.field().element(c).to_string());
  return out;
}

json subspace_json(const StructureAlgebra& a, const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_json(a, v));
  return json{{"dim", s.dim()}, {"basis", basis}};
}

json labels_json(const FiniteGroup& g, const std::vector<FiniteGroup::element_type>& ids) {
  json out = json::array();
  for (auto x : ids) out.push_back(g.label(x));
  return out;
}

json basis_labels(const FiniteGroup& g) {
  json out = json::array();
  for (FiniteGroup::element_type x = 0; x < g.order(); ++x) out.push_back(g.label(x));
  return out;
}

std::string shape_string(const WedderburnReport& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(w.components[i].matrix_size) + "," + std::to_string(w.components[i].degree) + ")";
  }
  return s + "]";
}

json wedderburn_json(const StructureAlgebra& a, const WedderburnReport& w) {
  json comps = json::array();
  std::string sum;
  for (const auto& c : w.components) {
    comps.push_back(json{{"n", c.matrix_size}, {"d", c.degree}, {"idempotent", vector_json(a, c.idempotent)}});
    if (!sum.empty()) sum += " + ";
    sum += std::to_string(c.matrix_size * c.matrix_size * c.degree);
  }
  return json{{"components", comps}, {"shape", shape_string(w)}, {"dimension_sum", sum + " = " + std::to_string(w.dimension)}};
}

json baer_json(const StructureAlgebra& a, const BaerVerdict& v) {
  json out{{"is_baer", v.is_baer}, {"exhaustive", v.exhaustive}, {"lattice_size", v.lattice_size}};
  out["witness"] = v.witness ? subspace_json(a, *v.witness) : json(nullptr);
  return out;
}

json kaplansky_json(const StructureAlgebra& a, const BaerReport& r) {
  return json{{"type", to_string(r.type)},
              {"finite", r.finite},
              {"idempotent_count", r.idempotent_count},
              {"certificate", r.certificate ? vector_json(a, *r.certificate) : json(nullptr)}};
}

std::string kaplansky_string(const BaerReport& r) {
  return std::string(to_string(r.type)) + (r.finite ? " finite" : " infinite");
}

json budget_block(const StructureAlgebra& a, const BaerVerdict& baer, std::uint64_t limit,
                  const std::optional<std::size_t>& samples) {
  const auto count = a.element_count();
  json b{{"limit", limit},
         {"required", count ? json(*count) : json(nullptr)},
         {"exhaustive", count && *count <= limit},
         {"notes", json::array()}};
  if (!b["exhaustive"].get<bool>())
    b["notes"].push_back("q^dim exceeds the budget: exhaustive scans skipped");
  if (!baer.exhaustive)
    b["notes"].push_back("annihilator lattice sampled from " + std::to_string(samples.value_or(0)) +
                         " elements; Baer verdict is evidence only");
  return b;
}

struct AlgebraSource {
  StructureAlgebra algebra;
  FiniteGroupPtr group;
  json input;
};

AlgebraSource algebra_source(const std::optional<json>& group, const std::optional<json>& algebra, std::uint32_t p,
                             unsigned k) {
  if (group.has_value() == algebra.has_value())
    fail(ErrorKind::InvalidArgument, "give exactly one of --group and --algebra");
  if (algebra) return {parse_algebra_spec(*algebra), nullptr, json{{"algebra", *algebra}}};
  if (p == 0) fail(ErrorKind::InvalidArgument, "--p is required with --group");
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "--p must be prime");
  auto g = parse_group_spec(*group);
  auto a = algebra_from_group(*g, FqField::extension(p, k));
  return {std::move(a), std::move(g), json{{"group", *group}, {"p", p}, {"k", k}}};
}

}  // namespace

json cmd_analyze_group(const json& group_spec, std::uint32_t p, unsigned k, const BudgetOptions& options) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "--p must be prime");
  const auto g = parse_group_spec(group_spec);
  json input{{"group", group_spec}, {"p", p}, {"k", k}, {"budget", options.budget}};
  if (options.samples) input["samples"] = *options.samples;
  json report = envelope("analyze", input);

  const LatticeOptions lattice{options.budget, options.samples};
  const auto r = group_baer_pipeline(g, p, k, lattice);
  const auto a = algebra_from_group(*g, FqField::extension(p, k));
  const auto exact_budget = options.budget;

  json classes = json::array();
  for (const auto& c : groups::conjugacy_classes(*g)) classes.push_back(labels_json(*g, c));
  auto& res = report["result"];
  res["group"] = json{{"name", g->name()},
                      {"order", g->order()},
                      {"abelian", g->is_abelian()},
                      {"class_count", r.class_count},
                      {"classes", classes},
                      {"center", labels_json(*g, groups::center(*g))}};
  res["algebra"] = r.algebra;
  res["basis_labels"] = basis_labels(*g);
  res["center_dimension"] = r.center_dimension;
  res["maschke_semisimple"] = r.maschke_semisimple;
  res["radical"] = r.radical ? json{{"ideal", subspace_json(a, r.radical->ideal)}, {"nilpotency_index", r.radical->index}}
                             : json(nullptr);
  res["wedderburn"] = r.wedderburn ? wedderburn_json(a, *r.wedderburn) : json(nullptr);
  res["baer"] = baer_json(a, r.baer);
  res["kaplansky"] = r.kaplansky ? kaplansky_json(a, *r.kaplansky) : json(nullptr);
  res["summary"] = r.verdict;

  const bool radical_searched = a.element_count() && *a.element_count() <= options.budget;
  auto& v = report["verdicts"];
  v.push_back(verdict("maschke_prediction", r.maschke_semisimple, "exact"));
  if (radical_searched)
    v.push_back(verdict("semisimple", r.semisimple, "exact", exact_budget));
  else
    v.push_back(verdict("semisimple", r.semisimple, "exact"));
  v.push_back(verdict("center_dimension_equals_class_count", r.center_dimension == r.class_count, "exact"));
  if (r.wedderburn) v.push_back(verdict("wedderburn", shape_string(*r.wedderburn), "exact"));
  if (r.baer.exhaustive)
    v.push_back(verdict("baer", r.baer.is_baer, "exact", exact_budget));
  else
    v.push_back(verdict("baer", r.baer.is_baer, "sampled evidence"));
  if (r.kaplansky) v.push_back(verdict("kaplansky_type", kaplansky_string(*r.kaplansky), "exact", exact_budget));

  auto& cert = report["certificates"];
  if (r.baer.witness) cert["baer_witness"] = subspace_json(a, *r.baer.witness);
  if (r.kaplansky && r.kaplansky->certificate) cert["faithful_abelian_idempotent"] = vector_json(a, *r.kaplansky->certificate);
  if (r.radical) cert["radical"] = subspace_json(a, r.radical->ideal);
  report["budget"] = budget_block(a, r.baer, options.budget, options.samples);
  if (!radical_searched)
    report["budget"]["notes"].push_back("radical search skipped; semisimplicity taken from Maschke's criterion");
  return report;
}

json cmd_factor_check(const json& family_spec, const std::vector<std::string>& probe_texts, std::size_t cap,
                      std::size_t length_cap) {
  const auto family = parse_family_spec(family_spec);
  json input{{"family", family_spec}, {"probes", probe_texts}, {"cap", cap}, {"length_cap", length_cap}};
  json report = envelope("factor-check", input);

  std::vector<FamilyElement> probes;
  for (const auto& t : probe_texts) probes.push_back(family.parse(t));
  if (probes.empty()) {
    const auto gens = family.generators();
    for (std::size_t i = 0; i < gens.size() && i < 2; ++i) probes.push_back(gens[i]);
  }
  const auto verdicts = icc_check(family, probes, cap, length_cap);

  json probe_reports = json::array();
  std::optional<std::size_t> finite_witness;
  auto& v = report["verdicts"];
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& iv = verdicts[i];
    json p{{"probe", family.format(iv.probe)},
           {"finite", iv.orbit.finite},
           {"visited", iv.orbit.visited},
           {"length_capped", iv.orbit.length_capped}};
    const auto name = "class_of_" + family.format(iv.probe);
    if (iv.orbit.finite) {
      json cls = json::array();
      for (const auto& x : iv.orbit.elements) cls.push_back(family.format(x));
      p["class_size"] = iv.class_size;
      p["class"] = cls;
      v.push_back(verdict(name, "finite, size " + std::to_string(iv.class_size), "exact"));
      if (!finite_witness) finite_witness = i;
    } else {
      p["at_least"] = iv.bound;
      v.push_back(verdict(name, "at least " + std::to_string(iv.bound), "exact"));
    }
    probe_reports.push_back(std::move(p));
  }

  std::string overall, label;
  if (finite_witness) {
    overall = "not a factor";
    label = "exact";
    report["certificates"]["finite_class"] = probe_reports[*finite_witness];
  } else if (family.has_icc_proof()) {
    overall = "factor";
    label = "family-certified";
  } else {
    overall = "factor";
    label = "sampled evidence";
  }
  v.push_back(verdict("factor", overall, label));
  report["result"] = json{{"family", family.name()},
                          {"icc_proof", family.has_icc_proof()},
                          {"probes", probe_reports},
                          {"summary", overall + " (" + label + ")"}};
  report["budget"] = json{{"cap", cap}, {"length_cap", length_cap}, {"notes", json::array()}};
  return report;
}

json cmd_convergence(const std::optional<std::string>& scenario, const std::optional<json>& stages) {
  if (scenario.has_value() == stages.has_value())
    fail(ErrorKind::InvalidArgument, "give exactly one of --scenario and --stages");
  const auto input = scenario ? convergence_scenario(*scenario) : parse_stages(*stages);
  json echo = scenario ? json{{"scenario", *scenario}} : json{{"stages", *stages}};
  json report = envelope("convergence", echo);
  const auto r = strong_convergence_check(input);

  auto pairs = [](const std::vector<std::pair<std::uint64_t, Rational>>& xs) {
    json out = json::array();
    for (const auto& [l, n] : xs) out.push_back(json{{"stage", l}, {"norm", to_string(n)}});
    return out;
  };
  json columns = json::array();
  for (const auto& c : r.columns)
    columns.push_back(json{{"column", c.column}, {"tail_sup", to_string(c.tail_sup)}, {"decays", c.decays}});
  json probes = json::array();
  for (const auto& p : r.probes)
    probes.push_back(json{{"name", p.name}, {"within_threshold", p.within_threshold}, {"norms", pairs(p.norms)}});

  report["result"] = json{{"p", input.field.p},
                          {"stage_count", input.stages.size()},
                          {"tail_index", input.tail_index},
                          {"threshold", to_string(input.threshold)},
                          {"uniform_bound", to_string(r.uniform_bound)},
                          {"stage_norms", pairs(r.stage_norms)},
                          {"condition_1_bound", r.bound_holds},
                          {"bound_violations", r.bound_violations},
                          {"condition_2_column_decay", r.column_decay_holds},
                          {"columns", columns},
                          {"probes", probes},
                          {"probes_converge", r.probes_converge},
                          {"probes_agree", r.probes_agree},
                          {"verdict", to_string(r.verdict)}};
  auto& v = report["verdicts"];
  v.push_back(verdict("condition_1_bound", r.bound_holds, "exact"));
  v.push_back(verdict("condition_2_column_decay", r.column_decay_holds, "exact"));
  v.push_back(verdict("strong_convergence", to_string(r.verdict),
                      r.verdict == ConvergenceVerdict::ConvergesEvidence ? "evidence" : "exact"));
  v.push_back(verdict("probe_agreement", r.probes_agree, "exact"));
  if (!r.bound_holds) {
    const auto& decay = r.probes.back();
    report["certificates"]["diverging_probe"] = json{{"name", decay.name}, {"norms", pairs(decay.norms)}};
  }
  report["budget"]["notes"].push_back("finitely many stages inspected; convergence is evidence, failures are exact");
  return report;
}

json cmd_wedderburn(const std::optional<json>& group, const std::optional<json>& algebra, std::uint32_t p, unsigned k,
                    bool require_split) {
  const auto src = algebra_source(group, algebra, p, k);
  json input = src.input;
  input["split"] = require_split;
  json report = envelope("wedderburn", input);
  const auto& a = src.algebra;
  const auto w = wedderburn_components(a, require_split);
  report["result"] = wedderburn_json(a, w);
  report["result"]["algebra"] = a.name();
  if (src.group) report["result"]["basis_labels"] = basis_labels(*src.group);
  report["verdicts"].push_back(verdict("wedderburn", shape_string(w), "exact"));
  json ids = json::array();
  for (const auto& c : w.components) ids.push_back(vector_json(a, c.idempotent));
  report["certificates"]["primitive_central_idempotents"] = ids;
  return report;
}

json cmd_baer(const std::optional<json>& group, const std::optional<json>& algebra, std::uint32_t p, unsigned k,
              const BudgetOptions& options) {
  const auto src = algebra_source(group, algebra, p, k);
  json input = src.input;
  input["budget"] = options.budget;
  if (options.samples) input["samples"] = *options.samples;
  json report = envelope("baer", input);
  const auto& a = src.algebra;
  const LatticeOptions lattice{options.budget, options.samples};
  const auto v = is_baer(a, lattice);
  report["result"] = json{{"algebra", a.name()}, {"baer", baer_json(a, v)}};
  if (src.group) report["result"]["basis_labels"] = basis_labels(*src.group);
  report["verdicts"].push_back(v.exhaustive ? verdict("baer", v.is_baer, "exact", options.budget)
                                            : verdict("baer", v.is_baer, "sampled evidence"));
  if (v.witness) report["certificates"]["baer_witness"] = subspace_json(a, *v.witness);
  const auto count = a.element_count();
  if (v.is_baer && count && *count <= options.budget) {
    const auto kap = kaplansky_type(a, v, options.budget);
    report["result"]["kaplansky"] = kaplansky_json(a, kap);
    report["verdicts"].push_back(verdict("kaplansky_type", kaplansky_string(kap), "exact", options.budget));
    if (kap.certificate) report["certificates"]["kaplansky_certificate"] = vector_json(a, *kap.certificate);
  } else {
    report["result"]["kaplansky"] = nullptr;
  }
  report["budget"] = budget_block(a, v, options.budget, options.samples);
  return report;
}

}  // namespace uga::cli
