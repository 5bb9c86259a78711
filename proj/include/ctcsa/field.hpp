#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctcsa/error.hpp"

namespace ctcsa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { finite, rational, gaussian_rational };

namespace detail {
struct FiniteFieldData;
}

/// A field descriptor: GF(p^f) with a fixed modulus, the rationals, or Q(i).
///
/// Finite-field elements are handled internally as codes: the coefficient
/// vector (c_0, ..., c_{f-1}) of c_0 + c_1 w + ... packed base p, so code 1 is
/// the unit and, for f > 1, code p is the generator w.  The raw code
/// operations below are what the matrix-group closures use on hot paths.
class FieldSpec {
 public:
  static FieldSpec finite(std::uint32_t p, std::uint32_t f = 1);
  static FieldSpec rational();
  static FieldSpec gaussian_rational();

  FieldKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == FieldKind::finite; }
  /// 0 for the characteristic-zero kinds.
  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  /// Number of elements; nullopt for infinite fields.
  std::optional<std::uint32_t> size() const noexcept;
  /// Monic modulus coefficients, lowest degree first (length f + 1).
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_code(std::uint32_t a) const;
  std::vector<std::uint32_t> coefficients(std::uint32_t code) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& coefficients) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;
  friend FieldSpec make_field(FieldKind kind, std::uint32_t p, std::uint32_t f);
  friend class FieldScalar;

 private:
  FieldSpec(FieldKind kind, std::shared_ptr<const detail::FiniteFieldData> data)
      : kind_(kind), data_(std::move(data)) {}
  const detail::FiniteFieldData& finite_data() const;

  FieldKind kind_;
  std::shared_ptr<const detail::FiniteFieldData> data_;
};

/// Validating constructor.  Throws NonPrime, FieldTooLarge or
/// NoModulusAvailable for finite fields; p and f are ignored otherwise.
FieldSpec make_field(FieldKind kind, std::uint32_t p = 0, std::uint32_t f = 1);

/// Splits q into (p, f) with q = p^f; throws NonPrime when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);
bool is_prime(std::uint64_t n);

/// True iff the monic polynomial (coefficients lowest first) has no factor of
/// degree between 1 and deg/2 over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

struct GaussianValue {
  Rational re;
  Rational im;
  bool operator==(const GaussianValue&) const = default;
};

/// An exact field element.  Immutable value type.
class FieldScalar {
 public:
  static FieldScalar zero(const FieldSpec& spec);
  static FieldScalar one(const FieldSpec& spec);
  static FieldScalar from_int(const FieldSpec& spec, long long value);
  static FieldScalar from_code(const FieldSpec& spec, std::uint32_t code);
  static FieldScalar from_coefficients(const FieldSpec& spec, const std::vector<std::int64_t>& coefficients);
  static FieldScalar from_rational(const FieldSpec& spec, const Rational& value);
  static FieldScalar from_gaussian(const Rational& re, const Rational& im);
  /// The generator w of GF(p^f) (w = 0 + 1*w), or i in Q(i).
  static FieldScalar generator(const FieldSpec& spec);
  /// A generator of the multiplicative group of a finite field.
  static FieldScalar primitive(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t code() const;                        // finite only
  std::vector<std::uint32_t> coefficients() const;   // finite only
  const Rational& rational_value() const;            // rational only
  const GaussianValue& gaussian_value() const;       // gaussian only

  FieldScalar inv() const;

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);
  FieldScalar operator-() const;

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);
  /// Deterministic total order.  Finite: by code, i.e. lexicographic on
  /// (c_{f-1}, ..., c_0).  Rational: numeric.  Gaussian: (re, im) lexicographic.
  friend std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b);

  /// Literal syntax: "3" (prime field), "[0,1]" (extension), "3/5", "3/5+4/5*i".
  std::string to_string() const;

 private:
  using Value = std::variant<std::uint32_t, Rational, GaussianValue>;
  FieldScalar(FieldSpec spec, Value value) : spec_(std::move(spec)), value_(std::move(value)) {}

  FieldSpec spec_;
  Value value_;
};

FieldScalar add(const FieldScalar& a, const FieldScalar& b);
FieldScalar mul(const FieldScalar& a, const FieldScalar& b);
FieldScalar neg(const FieldScalar& a);
FieldScalar inv(const FieldScalar& a);

/// Parses a scalar literal for the given field; throws ParseError.
FieldScalar parse_scalar(const FieldSpec& spec, std::string_view text);

/// x -> x^2 on a finite field of characteristic 2.  Throws NotCharTwoFinite.
FieldScalar frobenius(const FieldScalar& a);

/// Exhaustive pair scan for x^2 + y^2 = a over a finite field.  Returns the
/// first (x, y) in code order, or nullopt.  Throws InfiniteFieldUnsupported.
std::optional<std::pair<FieldScalar, FieldScalar>> sum_of_two_squares(const FieldScalar& a);
bool is_sum_of_two_squares(const FieldScalar& a);

/// Every element of a finite field, in code order.
std::vector<FieldScalar> elements(const FieldSpec& spec);

}  // namespace ctcsa
