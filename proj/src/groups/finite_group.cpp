#include "uga/groups/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "uga/errors.hpp"

namespace uga {

FiniteGroup::FiniteGroup(std::string name, std::vector<element_type> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  order_ = labels_.size();
  if (order_ == 0 || order_ > kMaxOrder)
    fail(ErrorKind::InvalidArgument, "group order must be in [1, 5040]");
  if (table_.size() != order_ * order_)
    fail(ErrorKind::InvalidArgument, "Cayley table has the wrong size");
  const auto n = order_;
  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = table_[a * n + b];
      if (c >= n || seen[c]) fail(ErrorKind::InvalidArgument, "Cayley table row is not a permutation");
      seen[c] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      const auto c = table_[a * n + b];
      if (seen[c]) fail(ErrorKind::InvalidArgument, "Cayley table column is not a permutation");
      seen[c] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[a] != a || table_[a * n] != a)
      fail(ErrorKind::InvalidArgument, "element 0 is not the identity");
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) inverse_[a] = static_cast<element_type>(b);
  for (std::size_t a = 0; a < n; ++a)
    if (multiply(inverse_[a], static_cast<element_type>(a)) != 0)
      fail(ErrorKind::InvalidArgument, "left and right inverses differ");
  const auto assoc = [&](element_type a, element_type b, element_type c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
      fail(ErrorKind::InvalidArgument, "Cayley table is not associative");
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (element_type a = 0; a < n; ++a)
      for (element_type b = 0; b < n; ++b)
        for (element_type c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(n);
    for (int i = 0; i < 200'000; ++i)
      assoc(static_cast<element_type>(rng() % n), static_cast<element_type>(rng() % n),
            static_cast<element_type>(rng() % n));
  }
}

std::optional<FiniteGroup::element_type> FiniteGroup::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<element_type>(it - labels_.begin());
}

FiniteGroup::element_type FiniteGroup::parse(const std::string& label) const {
  if (auto a = find(label)) return *a;
  fail(ErrorKind::InvalidArgument, "'" + label + "' is not an element of " + name_);
}

bool FiniteGroup::is_abelian() const {
  for (element_type a = 0; a < order_; ++a)
    for (element_type b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(element_type a) const {
  std::size_t k = 1;
  for (element_type x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (element_type a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

Permutation parse_cycles(const std::string& text, std::size_t degree, unsigned first_point) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0U);
  std::size_t i = 0;
  const auto bad = [&](const std::string& why) {
    fail(ErrorKind::InvalidArgument, "bad cycle notation '" + text + "': " + why);
  };
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  if (i == text.size()) return perm;
  std::vector<char> used(degree, 0);
  while (i < text.size()) {
    if (text[i] != '(') bad("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t used_chars = 0;
      long long point = 0;
      try {
        point = std::stoll(text.substr(i), &used_chars);
      } catch (const std::exception&) {
        bad("expected a point");
      }
      i += used_chars;
      if (point < first_point || point >= static_cast<long long>(degree + first_point))
        bad("point out of range");
      const auto x = static_cast<std::uint32_t>(point - first_point);
      if (used[x]) bad("point repeated");
      used[x] = 1;
      cycle.push_back(x);
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) perm[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

std::string format_cycles(const Permutation& perm, unsigned first_point) {
  std::string out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += " ";
      first = false;
      out += std::to_string(x + first_point);
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace groups {
namespace {

using Id = FiniteGroup::element_type;

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = h[g[x]];
  return out;
}

FiniteGroupPtr from_sorted_permutations(std::string name, const std::vector<Permutation>& elements) {
  std::map<Permutation, Id> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Id>(i));
  const auto n = elements.size();
  std::vector<Id> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(format_cycles(p));
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(table), std::move(labels));
}

}  // namespace

FiniteGroupPtr trivial() { return cyclic(1); }

FiniteGroupPtr cyclic(std::size_t n) {
  if (n == 0 || n > FiniteGroup::kMaxOrder) fail(ErrorKind::InvalidArgument, "cyclic order out of range");
  std::vector<Id> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Id>((a + b) % n);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
  return std::make_shared<const FiniteGroup>("C" + std::to_string(n), std::move(table), std::move(labels));
}

FiniteGroupPtr dihedral(std::size_t n) {
  if (n == 0 || 2 * n > FiniteGroup::kMaxOrder) fail(ErrorKind::InvalidArgument, "dihedral size out of range");
  // r^i s^f has id i + f n; r^i s^f r^j s^g = r^{i + (-1)^f j} s^{f + g}.
  const std::size_t order = 2 * n;
  std::vector<Id> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t i = a % n, f = a / n;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t j = b % n, g = b / n;
      const std::size_t rot = f == 0 ? (i + j) % n : (i + n - j) % n;
      table[a * order + b] = static_cast<Id>(rot + ((f + g) % 2) * n);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < n; ++i) {
      std::string s = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      if (f == 1) s += "s";
      labels.push_back(s.empty() ? "e" : s);
    }
  return std::make_shared<const FiniteGroup>("D" + std::to_string(n), std::move(table), std::move(labels));
}

FiniteGroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 7) fail(ErrorKind::InvalidArgument, "symmetric degree must be in [1, 7]");
  std::vector<Permutation> elements;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_sorted_permutations("S" + std::to_string(n), elements);
}

FiniteGroupPtr quaternion() {
  // id = 2 u + s for ±{1, i, j, k}; unit_table gives u v = sign * w.
  static const int unit_product[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<Id> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& [w, sign] = unit_product[a / 2][b / 2];
      table[a * 8 + b] = static_cast<Id>(2 * w + ((a % 2 + b % 2 + sign) % 2));
    }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<const FiniteGroup>("Q8", std::move(table), std::move(labels));
}

FiniteGroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  if (n > FiniteGroup::kMaxOrder) fail(ErrorKind::InvalidArgument, "direct product exceeds the size budget");
  std::vector<Id> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = g.multiply(static_cast<Id>(a / k), static_cast<Id>(b / k));
      const auto y = h.multiply(static_cast<Id>(a % k), static_cast<Id>(b % k));
      table[a * n + b] = static_cast<Id>(x * k + y);
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    labels.push_back("(" + g.label(static_cast<Id>(a / k)) + "," + h.label(static_cast<Id>(a % k)) + ")");
  return std::make_shared<const FiniteGroup>(g.name() + "x" + h.name(), std::move(table), std::move(labels));
}

FiniteGroupPtr from_permutations(std::size_t degree, const std::vector<Permutation>& generators) {
  if (degree == 0) fail(ErrorKind::InvalidArgument, "permutation degree must be positive");
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  for (const auto& g : generators) {
    if (g.size() != degree) fail(ErrorKind::InvalidArgument, "generator has the wrong degree");
    Permutation sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) fail(ErrorKind::InvalidArgument, "generator is not a permutation");
  }
  std::map<Permutation, bool> seen{{id, true}};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = compose(x, g);
        if (seen.emplace(y, true).second) {
          if (seen.size() > FiniteGroup::kMaxOrder)
            fail(ErrorKind::InvalidArgument, "generators do not close within 5040 elements");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Permutation> elements;
  for (const auto& [p, _] : seen) elements.push_back(p);
  return from_sorted_permutations("Perm" + std::to_string(degree) + "[" + std::to_string(elements.size()) + "]",
                                  elements);
}

std::vector<std::vector<Id>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = g.order();
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<Id>> classes;
  for (Id a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<Id> cls;
    for (Id c = 0; c < n; ++c) {
      const Id b = g.conjugate(a, c);
      if (!assigned[b]) {
        assigned[b] = 1;
        cls.push_back(b);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Id> center(const FiniteGroup& g) {
  std::vector<Id> z;
  for (Id a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Id b = 0; b < g.order() && central; ++b) central = g.multiply(a, b) == g.multiply(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

}  // namespace groups
}  // namespace uga
