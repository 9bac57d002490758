#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgr {

inline constexpr std::size_t kMaxVariables = 16;

/// Raised when operands live in different rings, or a variable is unknown.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector. Entries past the ambient variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::initializer_list<unsigned> exponents);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor.divides(*this).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { grevlex, lex, block };

/// grevlex and lex compare all variables in ring order. A block order
/// compares first the grevlex restriction to the eliminated variables, then
/// the grevlex restriction to the rest, so it eliminates exactly that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<bool> eliminate;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, {}}; }
  static MonomialOrder block(std::vector<bool> eliminated) {
    return {OrderKind::block, std::move(eliminated)};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

enum class Field { rational, cyclotomic };

/// Named variables, a monomial order, a coefficient field and a grading.
/// Cheap to copy; rings compare equal when all four parts agree.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
       Field field = Field::rational, std::vector<unsigned> weights = {});

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const MonomialOrder& order() const { return data_->order; }
  Field field() const { return data_->field; }
  const std::vector<unsigned>& weights() const { return data_->weights; }

  /// Throws RingMismatch for an unknown name.
  std::size_t index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  /// -1, 0, 1 comparing a and b under the ring order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  unsigned weighted_degree(const Monomial& m) const;

  Ring with_order(MonomialOrder order) const;
  Ring with_field(Field field) const;
  Ring with_weights(std::vector<unsigned> weights) const;
  /// Appends fresh variables; the order is reset to grevlex.
  Ring extended(const std::vector<std::string>& extra) const;

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> names;
    MonomialOrder order;
    Field field;
    std::vector<unsigned> weights;
  };
  std::shared_ptr<const Data> data_;
};

/// All monomials of total degree d in n variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

namespace rings {
/// Q[X, Y, Z], grevlex.
const Ring& plane();
/// Q[Z0, ..., Z5], grevlex.
const Ring& plucker_space();
/// Q[x, y, x1, y1], grevlex.
const Ring& doubling();
/// Q[x, y], grevlex.
const Ring& chart();
}  // namespace rings

}  // namespace tgr
