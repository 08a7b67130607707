#include "uga/groups/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "uga/errors.hpp"

namespace uga {

ConjugacyOrbit conjugacy_orbit(const GroupFamily& family, const FamilyElement& a, std::size_t cap,
                               std::size_t length_cap) {
  if (cap == 0) fail(ErrorKind::InvalidArgument, "orbit cap must be positive");
  family.validate(a);
  std::vector<FamilyElement> gens = family.generators();
  std::vector<FamilyElement> gen_inverses;
  for (const auto& g : gens) gen_inverses.push_back(family.inverse(g));

  // An element longer than the cap still gets its own class explored.
  length_cap = std::max(length_cap, family.size(a));
  ConjugacyOrbit orbit;
  orbit.base = a;
  std::set<FamilyElement> seen{a};
  std::deque<FamilyElement> queue{a};
  bool overflow = false;
  while (!queue.empty() && !overflow) {
    const FamilyElement x = std::move(queue.front());
    queue.pop_front();
    ++orbit.visited;
    for (std::size_t i = 0; i < gens.size() && !overflow; ++i) {
      for (const auto& y : {family.multiply(family.multiply(gen_inverses[i], x), gens[i]),
                            family.multiply(family.multiply(gens[i], x), gen_inverses[i])}) {
        if (family.size(y) > length_cap) {
          orbit.length_capped = true;
          continue;
        }
        if (!seen.insert(y).second) continue;
        if (seen.size() > cap) {
          overflow = true;
          break;
        }
        queue.push_back(y);
      }
    }
  }
  orbit.elements.assign(seen.begin(), seen.end());
  if (overflow) {
    orbit.at_least = cap;
  } else if (orbit.length_capped) {
    orbit.at_least = seen.size();
  } else {
    orbit.finite = true;
    orbit.at_least = seen.size();
  }
  return orbit;
}

std::vector<IccVerdict> icc_check(const GroupFamily& family, const std::vector<FamilyElement>& probes,
                                  std::size_t cap, std::size_t length_cap) {
  for (const auto& probe : probes)
    if (family.is_identity(probe))
      fail(ErrorKind::IdentityProbe, "the identity cannot be an ICC probe");
  std::vector<IccVerdict> out;
  for (const auto& probe : probes) {
    IccVerdict v;
    v.probe = probe;
    v.orbit = conjugacy_orbit(family, probe, cap, length_cap);
    v.certified_at_least = !v.orbit.finite;
    v.bound = v.orbit.at_least;
    v.class_size = v.orbit.finite ? v.orbit.elements.size() : 0;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace uga
