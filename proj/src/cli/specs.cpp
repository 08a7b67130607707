#include <string>

#include "uga/cli/cli.hpp"
#include "uga/errors.hpp"
#include "uga/scalars/numeric.hpp"

namespace uga::cli {

namespace {

[[noreturn]] void bad_spec(const std::string& what) { fail(ErrorKind::InvalidArgument, what); }

const json& field_of(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key)) bad_spec(std::string("missing field '") + key + "'");
  return spec.at(key);
}

std::uint64_t unsigned_of(const json& spec, const char* key) {
  const auto& v = field_of(spec, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad_spec(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string type_of(const json& spec) {
  const auto& t = field_of(spec, "type");
  if (!t.is_string()) bad_spec("'type' must be a string");
  return t.get<std::string>();
}

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad_spec("scalars must be integers or rational strings like \"1/25\"");
}

}  // namespace

FiniteGroupPtr parse_group_spec(const json& spec) {
  const auto type = type_of(spec);
  if (type == "trivial") return groups::trivial();
  if (type == "quaternion") return groups::quaternion();
  if (type == "cyclic") return groups::cyclic(unsigned_of(spec, "n"));
  if (type == "dihedral") return groups::dihedral(unsigned_of(spec, "n"));
  if (type == "symmetric") return groups::symmetric(unsigned_of(spec, "n"));
  if (type == "product") {
    const auto& factors = field_of(spec, "factors");
    if (!factors.is_array() || factors.empty()) bad_spec("'factors' must be a non-empty array");
    auto g = parse_group_spec(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) g = groups::direct_product(*g, *parse_group_spec(factors[i]));
    return g;
  }
  if (type == "permutations") {
    const auto degree = unsigned_of(spec, "degree");
    std::vector<Permutation> gens;
    for (const auto& g : field_of(spec, "generators")) {
      if (!g.is_string()) bad_spec("generators must be cycle strings");
      gens.push_back(parse_cycles(g.get<std::string>(), degree));
    }
    return groups::from_permutations(degree, gens);
  }
  if (type == "table") {
    const auto& rows = field_of(spec, "table");
    if (!rows.is_array()) bad_spec("'table' must be an array of rows");
    std::vector<FiniteGroup::element_type> table;
    for (const auto& row : rows)
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) bad_spec("table entries must be element ids");
        table.push_back(x.get<FiniteGroup::element_type>());
      }
    std::vector<std::string> labels;
    if (spec.contains("labels"))
      for (const auto& l : spec.at("labels")) labels.push_back(l.get<std::string>());
    const std::string name = spec.contains("name") ? spec.at("name").get<std::string>() : "G";
    return std::make_shared<const FiniteGroup>(name, std::move(table), std::move(labels));
  }
  bad_spec("unknown group type '" + type + "'");
}

GroupFamily parse_family_spec(const json& spec) {
  const auto type = type_of(spec);
  if (type == "free") return GroupFamily::free(static_cast<unsigned>(unsigned_of(spec, "rank")));
  if (type == "free_abelian") return GroupFamily::free_abelian(static_cast<unsigned>(unsigned_of(spec, "rank")));
  if (type == "infinite_dihedral") return GroupFamily::infinite_dihedral();
  if (type == "finsupp") return GroupFamily::finsupp_permutations();
  fail(ErrorKind::UnsupportedFamily, "unsupported family '" + type + "'");
}

StructureAlgebra parse_algebra_spec(const json& spec) {
  const auto& f = field_of(spec, "field");
  const auto p = unsigned_of(f, "p");
  const auto k = f.contains("k") ? unsigned_of(f, "k") : 1;
  if (!is_prime(p)) bad_spec("field characteristic must be prime");
  const auto field = FqField::extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  const auto n = unsigned_of(spec, "dim");
  std::vector<std::vector<StructureAlgebra::Term>> products(n * n);
  for (const auto& entry : field_of(spec, "table")) {
    if (!entry.is_array() || entry.size() != 4) bad_spec("table entries are [i, j, k, c]");
    std::vector<std::uint64_t> v;
    for (const auto& x : entry) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) bad_spec("table entries must be non-negative integers");
      v.push_back(x.get<std::uint64_t>());
    }
    if (v[0] >= n || v[1] >= n || v[2] >= n) bad_spec("table index out of range");
    products[v[0] * n + v[1]].emplace_back(static_cast<std::uint32_t>(v[2]), static_cast<FqField::code_type>(v[3]));
  }
  AlgebraVector unit;
  for (const auto& x : field_of(spec, "unit")) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) bad_spec("unit coordinates must be field codes");
    unit.push_back(x.get<FqField::code_type>());
  }
  const std::string name = spec.contains("name") ? spec.at("name").get<std::string>() : "A";
  return StructureAlgebra(field, n, std::move(products), std::move(unit), name);
}

ConvergenceInput parse_stages(const json& spec) {
  ConvergenceInput input;
  const auto p = unsigned_of(spec, "p");
  if (!is_prime(p)) bad_spec("p must be prime");
  input.field = PadicField{static_cast<std::uint32_t>(p), PadicScalar::kDefaultPrecision};
  for (const auto& j : field_of(spec, "column_set")) input.column_set.push_back(j.get<std::uint64_t>());
  input.tail_index = unsigned_of(spec, "tail_index");
  input.threshold = rational_of(field_of(spec, "threshold"));
  for (const auto& s : field_of(spec, "stages")) {
    ConvergenceStage stage;
    stage.index = unsigned_of(s, "index");
    stage.bound = rational_of(field_of(s, "bound"));
    for (const auto& e : field_of(s, "entries")) {
      if (!e.is_array() || e.size() != 3) bad_spec("stage entries are [row, column, scalar]");
      const auto value = input.field.from_rational(rational_of(e[2]));
      if (value.is_zero()) continue;
      stage.entries.insert_or_assign(std::pair{e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()}, value);
    }
    input.stages.push_back(std::move(stage));
  }
  return input;
}

}  // namespace uga::cli
