//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_CHECKED_INT_H_
#define ROLEKIT_CHECKED_INT_H_

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <type_traits>

#include <Eigen/Core>

#include "rolekit/error.h"

namespace rolekit {

/**
 * @brief Fixed-width integer whose arithmetic throws OverflowError instead of
 *        wrapping.
 *
 * Used as an Eigen scalar for exact walk counting. Any builtin signed integer
 * (including __int128) works as the storage type.
 */
template <class T>
class Checked {
public:
  using value_type = T;

  constexpr Checked() = default;

  template <std::integral U>
  constexpr Checked(U v): value_(static_cast<T>(v)) {  // NOLINT
    if (static_cast<U>(value_) != v || ((value_ < 0) != (v < 0)))
      throw OverflowError("integer literal does not fit checked type");
  }

  constexpr T value() const { return value_; }

  Checked &operator+=(Checked rhs) {
    if (__builtin_add_overflow(value_, rhs.value_, &value_))
      throw OverflowError("walk count overflow in addition");
    return *this;
  }

  Checked &operator-=(Checked rhs) {
    if (__builtin_sub_overflow(value_, rhs.value_, &value_))
      throw OverflowError("walk count overflow in subtraction");
    return *this;
  }

  Checked &operator*=(Checked rhs) {
    if (__builtin_mul_overflow(value_, rhs.value_, &value_))
      throw OverflowError("walk count overflow in multiplication");
    return *this;
  }

  friend Checked operator+(Checked a, Checked b) { return a += b; }
  friend Checked operator-(Checked a, Checked b) { return a -= b; }
  friend Checked operator*(Checked a, Checked b) { return a *= b; }
  friend Checked operator-(Checked a) { return Checked() - a; }

  friend constexpr bool operator==(Checked, Checked) = default;
  friend constexpr auto operator<=>(Checked a, Checked b) {
    return a.value_ <=> b.value_;
  }

private:
  T value_ = 0;
};

__extension__ using Int128 = __int128;
using WalkCount = Checked<Int128>;

// Decimal rendering; works for __int128, which the standard library lacks.
template <class T>
std::string to_string(Checked<T> x) {
  T v = x.value();
  if (v == 0)
    return "0";

  bool neg = v < 0;
  std::string out;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    out.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    v /= 10;
  }
  if (neg)
    out.push_back('-');
  return { out.rbegin(), out.rend() };
}

template <class T>
std::ostream &operator<<(std::ostream &os, Checked<T> x) {
  return os << to_string(x);
}

}  // namespace rolekit

namespace Eigen {
template <class T>
struct NumTraits<rolekit::Checked<T>>: GenericNumTraits<rolekit::Checked<T>> {
  using Real = rolekit::Checked<T>;
  using NonInteger = double;
  using Literal = rolekit::Checked<T>;
  using Nested = rolekit::Checked<T>;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3,
  };

  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // ROLEKIT_CHECKED_INT_H_
