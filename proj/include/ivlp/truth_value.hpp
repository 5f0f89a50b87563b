#ifndef IVLP_TRUTH_VALUE_HPP
#define IVLP_TRUTH_VALUE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ivlp {

/// Three-valued codomain obtained by collapsing the infinite-valued domain.
/// Ordered False < Undefined < True.
enum class ThreeValued : std::uint8_t { False = 0, Undefined = 1, True = 2 };

inline std::string to_string(ThreeValued v) {
  switch (v) {
    case ThreeValued::False: return "false";
    case ThreeValued::Undefined: return "undefined";
    default: return "true";
  }
}

/** One element of the truth domain

      F_0 < F_1 < ... < 0 < ... < T_1 < T_0

    False-side values rise with their order, true-side values fall with it,
    and Zero sits strictly between the two sides. Orders are plain naturals:
    a finite ground program never needs a value of order above |B_P|, so the
    transfinite part of the domain is deliberately unrepresentable.

    TruthValue is an immutable value type; every operation here is pure. */
class TruthValue {
public:
  enum class Polarity : std::uint8_t { False = 0, Zero = 1, True = 2 };

  /// order(0); compares strictly greater than every natural order.
  static constexpr std::uint64_t kInfiniteOrder =
      std::numeric_limits<std::uint64_t>::max();

  constexpr TruthValue() : pol_(Polarity::False), ord_(0) {}  // F_0

  static constexpr TruthValue f(std::uint32_t k) { return TruthValue(Polarity::False, k); }
  static constexpr TruthValue t(std::uint32_t k) { return TruthValue(Polarity::True, k); }
  static constexpr TruthValue zero() { return TruthValue(Polarity::Zero, 0); }

  constexpr Polarity polarity() const { return pol_; }
  constexpr bool is_zero() const { return pol_ == Polarity::Zero; }

  /// order(T_k) = order(F_k) = k, order(0) = kInfiniteOrder.
  constexpr std::uint64_t order() const {
    return pol_ == Polarity::Zero ? kInfiniteOrder : ord_;
  }

  /// Negation-as-failure: reflection about Zero plus one step toward it.
  constexpr TruthValue negate() const {
    switch (pol_) {
      case Polarity::False: return t(ord_ + 1);
      case Polarity::True: return f(ord_ + 1);
      default: return zero();
    }
  }

  constexpr ThreeValued collapse() const {
    switch (pol_) {
      case Polarity::False: return ThreeValued::False;
      case Polarity::True: return ThreeValued::True;
      default: return ThreeValued::Undefined;
    }
  }

  friend constexpr std::strong_ordering operator<=>(TruthValue a, TruthValue b) {
    if (a.pol_ != b.pol_)
      return static_cast<int>(a.pol_) <=> static_cast<int>(b.pol_);
    switch (a.pol_) {
      case Polarity::False: return a.ord_ <=> b.ord_;
      case Polarity::True: return b.ord_ <=> a.ord_;  // T side is reversed
      default: return std::strong_ordering::equal;
    }
  }
  friend constexpr bool operator==(TruthValue a, TruthValue b) = default;

  /// Canonical rendering: "T0", "F3", "0".
  std::string to_string() const {
    switch (pol_) {
      case Polarity::False: return "F" + std::to_string(ord_);
      case Polarity::True: return "T" + std::to_string(ord_);
      default: return "0";
    }
  }

  /// Inverse of to_string. Returns nullopt on malformed input.
  static std::optional<TruthValue> parse(std::string_view s) {
    if (s == "0") return zero();
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'F')) return std::nullopt;
    std::uint64_t k = 0;
    for (char c : s.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<std::uint64_t>(c - '0');
      if (k > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
    }
    if (s.size() > 2 && s[1] == '0') return std::nullopt;  // no leading zeros
    auto ord = static_cast<std::uint32_t>(k);
    return s[0] == 'T' ? t(ord) : f(ord);
  }

private:
  constexpr TruthValue(Polarity p, std::uint32_t k) : pol_(p), ord_(k) {}

  Polarity pol_;
  std::uint32_t ord_;
};

/// Least upper bound of a finite set; lub of the empty set is F_0, the bottom
/// of the domain (matching the A <- false convention for ruleless atoms).
inline TruthValue lub(std::span<const TruthValue> s) {
  TruthValue m = TruthValue::f(0);
  for (TruthValue v : s)
    if (v > m) m = v;
  return m;
}

/// Greatest lower bound of a nonempty set. Bodies are nonempty after
/// grounding, so an empty argument is a caller bug.
inline TruthValue glb(std::span<const TruthValue> s) {
  if (s.empty()) throw std::invalid_argument("glb of empty set");
  TruthValue m = s.front();
  for (TruthValue v : s.subspan(1))
    if (v < m) m = v;
  return m;
}

}  // namespace ivlp

#endif  // IVLP_TRUTH_VALUE_HPP
