#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "covtype/error.hpp"

namespace covtype {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Coefficient field selector: the rationals or a prime field Z/p.
class FieldTag {
 public:
  static FieldTag rationals() { return FieldTag(0); }

  static FieldTag prime(std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError("Z/" + std::to_string(p) + " is not a field");
    return FieldTag(p);
  }

  /// Accepts "Q", "Z2", "Z/2", "Zp" forms.
  static FieldTag parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    std::string digits = text;
    if (!digits.empty() && (digits[0] == 'Z' || digits[0] == 'z')) digits.erase(0, 1);
    if (!digits.empty() && digits[0] == '/') digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9) {
      throw FormatError("unknown field '" + text + "' (expected Q or Zp)");
    }
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return is_rational() ? "Q" : "Z" + std::to_string(p_); }

  friend bool operator==(const FieldTag&, const FieldTag&) = default;

 private:
  explicit FieldTag(std::uint32_t p) : p_(p) {}

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  std::uint32_t p_;
};

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  Rational to_rational(const value_type& a) const { return a; }
  FieldTag tag() const { return FieldTag::rationals(); }
};

struct PrimeField {
  using value_type = std::uint32_t;

  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    const long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + b) % p);
  }
  value_type sub(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + p - b) % p);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<value_type>(result);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(value_type a) const { return a == 0; }
  Rational to_rational(value_type a) const { return Rational(a); }
  FieldTag tag() const { return FieldTag::prime(p); }
};

/// Calls f with the arithmetic policy selected by tag.
template <class F>
decltype(auto) visit_field(const FieldTag& tag, F&& f) {
  if (tag.is_rational()) return std::forward<F>(f)(RationalField{});
  return std::forward<F>(f)(PrimeField{tag.characteristic()});
}

}  // namespace covtype
