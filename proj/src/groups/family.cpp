#include "uga/groups/family.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "uga/errors.hpp"
#include "uga/groups/finite_group.hpp"

namespace uga {
namespace {

using Code = std::vector<std::int64_t>;

void bad(const std::string& text, const std::string& why) {
  fail(ErrorKind::InvalidArgument, "cannot parse group element '" + text + "': " + why);
}

Code reduce_word(const Code& w) {
  Code out;
  for (auto letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Code trim_permutation(Code images) {
  while (!images.empty() && images.back() == static_cast<std::int64_t>(images.size()) - 1) images.pop_back();
  return images;
}

std::int64_t image(const Code& perm, std::int64_t x) {
  return x < static_cast<std::int64_t>(perm.size()) ? perm[static_cast<std::size_t>(x)] : x;
}

}  // namespace

GroupFamily GroupFamily::free(unsigned rank) {
  if (rank < 1 || rank > 26) fail(ErrorKind::InvalidArgument, "free group rank must be in [1, 26]");
  return {FamilyKind::Free, rank};
}

GroupFamily GroupFamily::free_abelian(unsigned rank) {
  if (rank < 1) fail(ErrorKind::InvalidArgument, "free abelian rank must be positive");
  return {FamilyKind::FreeAbelian, rank};
}

GroupFamily GroupFamily::infinite_dihedral() { return {FamilyKind::InfiniteDihedral, 2}; }
GroupFamily GroupFamily::finsupp_permutations() { return {FamilyKind::FinSuppPermutations, 0}; }

std::string GroupFamily::name() const {
  switch (kind_) {
    case FamilyKind::Free: return "F" + std::to_string(rank_);
    case FamilyKind::FreeAbelian: return "Z^" + std::to_string(rank_);
    case FamilyKind::InfiniteDihedral: return "D_inf";
    case FamilyKind::FinSuppPermutations: return "FSym(N)";
  }
  return "?";
}

bool GroupFamily::has_icc_proof() const noexcept {
  return (kind_ == FamilyKind::Free && rank_ >= 2) || kind_ == FamilyKind::FinSuppPermutations;
}

FamilyElement GroupFamily::identity() const {
  switch (kind_) {
    case FamilyKind::FreeAbelian: return {Code(rank_, 0)};
    case FamilyKind::InfiniteDihedral: return {Code{0, 0}};
    default: return {};
  }
}

FamilyElement GroupFamily::multiply(const FamilyElement& a, const FamilyElement& b) const {
  switch (kind_) {
    case FamilyKind::Free: {
      Code w = a.code;
      w.insert(w.end(), b.code.begin(), b.code.end());
      return {reduce_word(w)};
    }
    case FamilyKind::FreeAbelian: {
      Code v(rank_);
      for (unsigned i = 0; i < rank_; ++i) v[i] = a.code[i] + b.code[i];
      return {v};
    }
    case FamilyKind::InfiniteDihedral: {
      const auto k = a.code[1] == 0 ? a.code[0] + b.code[0] : a.code[0] - b.code[0];
      return {Code{k, (a.code[1] + b.code[1]) % 2}};
    }
    case FamilyKind::FinSuppPermutations: {
      const auto m = std::max(a.code.size(), b.code.size());
      Code out(m);
      for (std::size_t x = 0; x < m; ++x) out[x] = image(b.code, image(a.code, static_cast<std::int64_t>(x)));
      return {trim_permutation(std::move(out))};
    }
  }
  return {};
}

FamilyElement GroupFamily::inverse(const FamilyElement& a) const {
  switch (kind_) {
    case FamilyKind::Free: {
      Code w(a.code.rbegin(), a.code.rend());
      for (auto& l : w) l = -l;
      return {w};
    }
    case FamilyKind::FreeAbelian: {
      Code v = a.code;
      for (auto& x : v) x = -x;
      return {v};
    }
    case FamilyKind::InfiniteDihedral:
      return a.code[1] == 0 ? FamilyElement{Code{-a.code[0], 0}} : a;
    case FamilyKind::FinSuppPermutations: {
      Code inv(a.code.size());
      for (std::size_t x = 0; x < a.code.size(); ++x) inv[static_cast<std::size_t>(a.code[x])] = static_cast<std::int64_t>(x);
      return {inv};
    }
  }
  return {};
}

std::vector<FamilyElement> GroupFamily::generators() const {
  std::vector<FamilyElement> gens;
  switch (kind_) {
    case FamilyKind::Free:
      for (unsigned i = 1; i <= rank_; ++i) gens.push_back({Code{static_cast<std::int64_t>(i)}});
      break;
    case FamilyKind::FreeAbelian:
      for (unsigned i = 0; i < rank_; ++i) {
        Code v(rank_, 0);
        v[i] = 1;
        gens.push_back({v});
      }
      break;
    case FamilyKind::InfiniteDihedral:
      gens.push_back({Code{1, 0}});
      gens.push_back({Code{0, 1}});
      break;
    case FamilyKind::FinSuppPermutations:
      for (std::int64_t i = 0; i + 1 < kSupportBound; ++i) {
        Code t(static_cast<std::size_t>(i + 2));
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
        gens.push_back({t});
      }
      break;
  }
  return gens;
}

std::size_t GroupFamily::size(const FamilyElement& a) const {
  switch (kind_) {
    case FamilyKind::FreeAbelian: {
      std::size_t s = 0;
      for (auto x : a.code) s += static_cast<std::size_t>(std::llabs(x));
      return s;
    }
    case FamilyKind::InfiniteDihedral:
      return static_cast<std::size_t>(std::llabs(a.code[0]) + a.code[1]);
    default:
      return a.code.size();
  }
}

void GroupFamily::validate(const FamilyElement& a) const {
  const auto invalid = [&](const std::string& why) {
    fail(ErrorKind::InvalidArgument, "not a normal form in " + name() + ": " + why);
  };
  switch (kind_) {
    case FamilyKind::Free:
      for (std::size_t i = 0; i < a.code.size(); ++i) {
        const auto l = a.code[i];
        if (l == 0 || std::llabs(l) > rank_) invalid("letter out of range");
        if (i > 0 && a.code[i - 1] == -l) invalid("word is not reduced");
      }
      break;
    case FamilyKind::FreeAbelian:
      if (a.code.size() != rank_) invalid("wrong vector length");
      break;
    case FamilyKind::InfiniteDihedral:
      if (a.code.size() != 2 || (a.code[1] != 0 && a.code[1] != 1)) invalid("expected (k, e)");
      break;
    case FamilyKind::FinSuppPermutations: {
      if (static_cast<std::int64_t>(a.code.size()) > kSupportBound) invalid("support exceeds the bound");
      Code sorted = a.code;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<std::int64_t>(i)) invalid("not a permutation");
      if (trim_permutation(a.code) != a.code) invalid("trailing fixed points");
      break;
    }
  }
}

FamilyElement GroupFamily::parse(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (kind_ != FamilyKind::FreeAbelian && (text.empty() || text == "1")) return identity();
  switch (kind_) {
    case FamilyKind::Free: {
      Code w;
      for (char c : text) {
        if (c >= 'a' && c < static_cast<char>('a' + rank_))
          w.push_back(c - 'a' + 1);
        else if (c >= 'A' && c < static_cast<char>('A' + rank_))
          w.push_back(-(c - 'A' + 1));
        else
          bad(raw, "unknown letter");
      }
      return {reduce_word(w)};
    }
    case FamilyKind::FreeAbelian: {
      std::string body = text;
      if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
        if (body.size() < 2 || (body.back() != ')' && body.back() != ']')) bad(raw, "unbalanced brackets");
        body = body.substr(1, body.size() - 2);
      }
      Code v;
      std::size_t pos = 0;
      while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        const long long x = std::strtoll(part.c_str(), &end, 10);
        if (part.empty() || *end != '\0') bad(raw, "expected integers");
        v.push_back(x);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (v.size() != rank_) bad(raw, "expected " + std::to_string(rank_) + " coordinates");
      return {v};
    }
    case FamilyKind::InfiniteDihedral: {
      FamilyElement acc = identity();
      std::size_t i = 0;
      while (i < text.size()) {
        const char c = text[i++];
        FamilyElement letter;
        if (c == 'r')
          letter = {Code{1, 0}};
        else if (c == 'R')
          letter = {Code{-1, 0}};
        else if (c == 's')
          letter = {Code{0, 1}};
        else
          bad(raw, "letters are r, R, s");
        std::int64_t exponent = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t used = 0;
          try {
            exponent = std::stoll(text.substr(i), &used);
          } catch (const std::exception&) {
            bad(raw, "bad exponent");
          }
          i += used;
        }
        const FamilyElement base = exponent < 0 ? inverse(letter) : letter;
        for (std::int64_t e = 0; e < std::llabs(exponent); ++e) acc = multiply(acc, base);
      }
      return acc;
    }
    case FamilyKind::FinSuppPermutations: {
      const Permutation p = parse_cycles(raw, static_cast<std::size_t>(kSupportBound), 0);
      return {trim_permutation(Code(p.begin(), p.end()))};
    }
  }
  return {};
}

std::string GroupFamily::format(const FamilyElement& a) const {
  switch (kind_) {
    case FamilyKind::Free: {
      if (a.code.empty()) return "1";
      std::string s;
      for (auto l : a.code) s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
      return s;
    }
    case FamilyKind::FreeAbelian: {
      if (rank_ == 1) return std::to_string(a.code[0]);
      std::string s = "(";
      for (std::size_t i = 0; i < a.code.size(); ++i) s += (i ? "," : "") + std::to_string(a.code[i]);
      return s + ")";
    }
    case FamilyKind::InfiniteDihedral: {
      const auto k = a.code[0];
      std::string s = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      if (a.code[1] == 1) s += "s";
      return s.empty() ? "1" : s;
    }
    case FamilyKind::FinSuppPermutations: {
      if (a.code.empty()) return "()";
      return format_cycles(Permutation(a.code.begin(), a.code.end()), 0);
    }
  }
  return "?";
}

}  // namespace uga
