#include "bslab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bslab/errors.hpp"

namespace bslab {

std::uint64_t total_degree(const Exponent& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

int compare_exponents(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (a.size() != b.size())
    throw DomainError("exponent vectors of different lengths");
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case MonomialOrder::Grevlex: {
      std::uint64_t da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      // Equal degree: larger is the one with the SMALLER last nonzero
      // entry of a - b.
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

bool exponent_divides(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw DomainError("exponent vectors of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw DomainError("exponent subtraction underflow");
    r[i] = a[i] - b[i];
  }
  return r;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingPtr AmbientRing::make(std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw DomainError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  return RingPtr(new AmbientRing(std::move(variables), order));
}

std::optional<std::size_t> AmbientRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace bslab
