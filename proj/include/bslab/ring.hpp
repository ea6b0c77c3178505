#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bslab {

// Multi-index of a monomial: one nonnegative entry per ring variable.
using Exponent = std::vector<std::uint32_t>;

enum class MonomialOrder { Grevlex, Lex };

std::uint64_t total_degree(const Exponent& e);

// Three-way comparison under a total well-order refining divisibility.
// Returns <0, 0, >0 when a < b, a == b, a > b. Lengths must agree.
int compare_exponents(const Exponent& a, const Exponent& b, MonomialOrder order);

bool exponent_divides(const Exponent& a, const Exponent& b);  // a | b componentwise
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);  // requires b | a

class AmbientRing;
using RingPtr = std::shared_ptr<const AmbientRing>;

// Polynomial ring over Q with named variables and a fixed monomial order;
// models the local ring by its polynomial subring.
class AmbientRing {
public:
  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::Grevlex);

  std::size_t var_count() const { return names_.size(); }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<std::size_t> var_index(std::string_view name) const;
  MonomialOrder order() const { return order_; }

  int compare(const Exponent& a, const Exponent& b) const {
    return compare_exponents(a, b, order_);
  }

  bool operator==(const AmbientRing& other) const {
    return order_ == other.order_ && names_ == other.names_;
  }

private:
  AmbientRing(std::vector<std::string> names, MonomialOrder order)
      : names_(std::move(names)), order_(order) {}

  std::vector<std::string> names_;
  MonomialOrder order_;
};

// Rings are interchangeable when they agree on variables and order.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace bslab
