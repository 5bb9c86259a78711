#include "ctcsa/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <mutex>
#include <sstream>

namespace ctcsa {

namespace detail {

struct FiniteFieldData {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, lowest degree first
  std::vector<std::uint32_t> powers;   // powers[i] = p^i, i < f
  std::vector<std::uint32_t> exp;      // exp[k] = g^k for a primitive g, k < q - 1
  std::vector<std::uint32_t> log;      // log[exp[k]] = k; log[0] unused
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxFieldSize = 65536;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return r;
}

Poly digits_of(std::uint32_t code, std::uint32_t p, std::uint32_t f) {
  Poly d(f, 0);
  for (std::uint32_t i = 0; i < f; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const Poly& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

Poly default_modulus(std::uint32_t p, std::uint32_t f) {
  if (f == 1) return {0, 1};
  if (p == 2) {
    switch (f) {
      case 2: return {1, 1, 1};        // x^2 + x + 1
      case 3: return {1, 1, 0, 1};     // x^3 + x + 1
      case 4: return {1, 1, 0, 0, 1};  // x^4 + x + 1
      default: break;
    }
  }
  // Lexicographically first irreducible monic polynomial, ordered by
  // (c_{f-1}, ..., c_0).
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < f; ++i) count *= p;
  for (std::uint64_t k = 0; k < count; ++k) {
    Poly m = digits_of(static_cast<std::uint32_t>(k), p, f);
    m.push_back(1);
    if (is_irreducible(m, p)) return m;
  }
  throw Error(ErrorCode::NoModulusAvailable,
              "no irreducible polynomial of degree " + std::to_string(f) + " over GF(" + std::to_string(p) + ")");
}

std::shared_ptr<const detail::FiniteFieldData> build_finite(std::uint32_t p, std::uint32_t f) {
  auto d = std::make_shared<detail::FiniteFieldData>();
  d->p = p;
  d->f = f;
  d->q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    d->powers.push_back(d->q);
    d->q *= p;
  }
  d->modulus = default_modulus(p, f);
  if (!is_irreducible(d->modulus, p)) {
    throw Error(ErrorCode::NoModulusAvailable, "built-in modulus is reducible");
  }

  const std::uint32_t q = d->q;
  d->log.assign(q, 0);
  if (q == 2) {
    d->exp = {1};
    d->log[1] = 0;
    return d;
  }
  for (std::uint32_t g = 2; g < q; ++g) {
    const Poly gp = digits_of(g, p, f);
    std::vector<std::uint32_t> exp;
    exp.reserve(q - 1);
    Poly cur{1};
    bool primitive = true;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      Poly padded = cur;
      padded.resize(f, 0);
      const std::uint32_t c = code_of(padded, p);
      if (k > 0 && c == 1) {
        primitive = false;
        break;
      }
      exp.push_back(c);
      cur = poly_mod(poly_mul(cur, gp, p), d->modulus, p);
    }
    if (!primitive) continue;
    d->exp = std::move(exp);
    for (std::uint32_t k = 0; k < q - 1; ++k) d->log[d->exp[k]] = k;
    return d;
  }
  throw Error(ErrorCode::NoModulusAvailable, "no primitive element found");
}

std::strong_ordering compare_rational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer in '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
      }
    }
    Integer v(std::string(s.substr(i)));
    return s[0] == '-' ? Integer(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t f = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return {p, f};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly m = poly;
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly factor = digits_of(static_cast<std::uint32_t>(k), p, static_cast<std::uint32_t>(d));
      factor.push_back(1);
      if (poly_mod(m, factor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::finite(std::uint32_t p, std::uint32_t f) { return make_field(FieldKind::finite, p, f); }
FieldSpec FieldSpec::rational() { return FieldSpec(FieldKind::rational, nullptr); }
FieldSpec FieldSpec::gaussian_rational() { return FieldSpec(FieldKind::gaussian_rational, nullptr); }

FieldSpec make_field(FieldKind kind, std::uint32_t p, std::uint32_t f) {
  if (kind == FieldKind::rational) return FieldSpec::rational();
  if (kind == FieldKind::gaussian_rational) return FieldSpec::gaussian_rational();
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(f) + " exceeds " + std::to_string(kMaxFieldSize));
    }
  }
  // Finite fields are cached so that equal specs share one set of tables.
  static std::vector<std::shared_ptr<const detail::FiniteFieldData>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  for (const auto& d : cache) {
    if (d->p == p && d->f == f) return FieldSpec(FieldKind::finite, d);
  }
  auto d = build_finite(p, f);
  cache.push_back(d);
  return FieldSpec(FieldKind::finite, d);
}

const detail::FiniteFieldData& FieldSpec::finite_data() const {
  if (!data_) throw Error(ErrorCode::InfiniteFieldUnsupported, name() + " is not a finite field");
  return *data_;
}

std::uint32_t FieldSpec::characteristic() const noexcept { return data_ ? data_->p : 0; }
std::uint32_t FieldSpec::degree() const noexcept { return data_ ? data_->f : 1; }

std::optional<std::uint32_t> FieldSpec::size() const noexcept {
  if (!data_) return std::nullopt;
  return data_->q;
}

const std::vector<std::uint32_t>& FieldSpec::modulus() const { return finite_data().modulus; }

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::rational: return "Q";
    case FieldKind::gaussian_rational: return "Q(i)";
    case FieldKind::finite: return "GF(" + std::to_string(data_->q) + ")";
  }
  return "?";
}

std::uint32_t FieldSpec::add_code(std::uint32_t a, std::uint32_t b) const {
  const auto& d = *data_;
  if (d.p == 2) return a ^ b;
  if (d.f == 1) return (a + b) % d.p;
  std::uint32_t out = 0;
  for (std::uint32_t i = d.f; i-- > 0;) {
    const std::uint32_t da = (a / d.powers[i]) % d.p;
    const std::uint32_t db = (b / d.powers[i]) % d.p;
    out = out * d.p + (da + db) % d.p;
  }
  return out;
}

std::uint32_t FieldSpec::neg_code(std::uint32_t a) const {
  const auto& d = *data_;
  if (d.p == 2) return a;
  if (d.f == 1) return a == 0 ? 0 : d.p - a;
  std::uint32_t out = 0;
  for (std::uint32_t i = d.f; i-- > 0;) {
    const std::uint32_t da = (a / d.powers[i]) % d.p;
    out = out * d.p + (d.p - da) % d.p;
  }
  return out;
}

std::uint32_t FieldSpec::sub_code(std::uint32_t a, std::uint32_t b) const { return add_code(a, neg_code(b)); }

std::uint32_t FieldSpec::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& d = *data_;
  const std::uint32_t order = d.q - 1;
  return d.exp[(d.log[a] + d.log[b]) % order];
}

std::uint32_t FieldSpec::inv_code(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const auto& d = *data_;
  const std::uint32_t order = d.q - 1;
  return d.exp[(order - d.log[a]) % order];
}

std::vector<std::uint32_t> FieldSpec::coefficients(std::uint32_t code) const {
  const auto& d = finite_data();
  return digits_of(code, d.p, d.f);
}

std::uint32_t FieldSpec::encode(const std::vector<std::uint32_t>& coefficients) const {
  const auto& d = finite_data();
  if (coefficients.size() > d.f) throw Error(ErrorCode::ParseError, "too many coefficients for " + name());
  Poly c(coefficients.begin(), coefficients.end());
  for (auto& x : c) x %= d.p;
  return code_of(c, d.p);
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != FieldKind::finite) return true;
  return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->f == b.data_->f);
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const FieldScalar& a, const FieldScalar& b) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::SpecMismatch, a.spec().name() + " vs " + b.spec().name());
  }
}

}  // namespace

FieldScalar FieldScalar::zero(const FieldSpec& spec) { return from_int(spec, 0); }
FieldScalar FieldScalar::one(const FieldSpec& spec) { return from_int(spec, 1); }

FieldScalar FieldScalar::from_int(const FieldSpec& spec, long long value) {
  switch (spec.kind()) {
    case FieldKind::finite: {
      const long long p = spec.characteristic();
      return FieldScalar(spec, static_cast<std::uint32_t>(((value % p) + p) % p));
    }
    case FieldKind::rational: return FieldScalar(spec, Rational(value));
    case FieldKind::gaussian_rational: return FieldScalar(spec, GaussianValue{Rational(value), Rational(0)});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar FieldScalar::from_code(const FieldSpec& spec, std::uint32_t code) {
  if (!spec.is_finite()) throw Error(ErrorCode::InfiniteFieldUnsupported, "codes exist only for finite fields");
  if (code >= *spec.size()) throw Error(ErrorCode::InvalidArgument, "code out of range for " + spec.name());
  return FieldScalar(spec, code);
}

FieldScalar FieldScalar::from_coefficients(const FieldSpec& spec, const std::vector<std::int64_t>& coefficients) {
  if (!spec.is_finite()) throw Error(ErrorCode::InfiniteFieldUnsupported, "coefficient vectors need a finite field");
  const std::int64_t p = spec.characteristic();
  std::vector<std::uint32_t> c;
  c.reserve(coefficients.size());
  for (auto x : coefficients) c.push_back(static_cast<std::uint32_t>(((x % p) + p) % p));
  return FieldScalar(spec, spec.encode(c));
}

FieldScalar FieldScalar::from_rational(const FieldSpec& spec, const Rational& value) {
  switch (spec.kind()) {
    case FieldKind::rational: return FieldScalar(spec, value);
    case FieldKind::gaussian_rational: return FieldScalar(spec, GaussianValue{value, Rational(0)});
    case FieldKind::finite: {
      const Integer p = spec.characteristic();
      auto reduce = [&](const Integer& v) {
        Integer r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
      };
      const std::uint32_t den = reduce(boost::multiprecision::denominator(value));
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
      const std::uint32_t num = reduce(boost::multiprecision::numerator(value));
      return FieldScalar(spec, spec.mul_code(num, spec.inv_code(den)));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar FieldScalar::from_gaussian(const Rational& re, const Rational& im) {
  return FieldScalar(FieldSpec::gaussian_rational(), GaussianValue{re, im});
}

FieldScalar FieldScalar::generator(const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldKind::finite: return spec.degree() == 1 ? one(spec) : FieldScalar(spec, spec.characteristic());
    case FieldKind::gaussian_rational: return from_gaussian(0, 1);
    case FieldKind::rational: return one(spec);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar FieldScalar::primitive(const FieldSpec& spec) {
  if (!spec.is_finite()) throw Error(ErrorCode::InfiniteFieldUnsupported, spec.name() + " has no primitive element");
  const auto& d = spec.finite_data();
  return FieldScalar(spec, d.exp.size() > 1 ? d.exp[1] : 1u);
}

bool FieldScalar::is_zero() const { return *this == zero(spec_); }
bool FieldScalar::is_one() const { return *this == one(spec_); }

std::uint32_t FieldScalar::code() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c;
  throw Error(ErrorCode::InfiniteFieldUnsupported, "code() on " + spec_.name());
}

std::vector<std::uint32_t> FieldScalar::coefficients() const { return spec_.coefficients(code()); }

const Rational& FieldScalar::rational_value() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::SpecMismatch, "rational_value() on " + spec_.name());
}

const GaussianValue& FieldScalar::gaussian_value() const {
  if (const auto* g = std::get_if<GaussianValue>(&value_)) return *g;
  throw Error(ErrorCode::SpecMismatch, "gaussian_value() on " + spec_.name());
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  require_same(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::finite: return FieldScalar(a.spec_, a.spec_.add_code(a.code(), b.code()));
    case FieldKind::rational: return FieldScalar(a.spec_, Rational(a.rational_value() + b.rational_value()));
    case FieldKind::gaussian_rational: {
      const auto& x = a.gaussian_value();
      const auto& y = b.gaussian_value();
      return FieldScalar(a.spec_, GaussianValue{x.re + y.re, x.im + y.im});
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar FieldScalar::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::finite: return FieldScalar(spec_, spec_.neg_code(code()));
    case FieldKind::rational: return FieldScalar(spec_, Rational(-rational_value()));
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian_value();
      return FieldScalar(spec_, GaussianValue{-x.re, -x.im});
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  require_same(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::finite: return FieldScalar(a.spec_, a.spec_.mul_code(a.code(), b.code()));
    case FieldKind::rational: return FieldScalar(a.spec_, Rational(a.rational_value() * b.rational_value()));
    case FieldKind::gaussian_rational: {
      const auto& x = a.gaussian_value();
      const auto& y = b.gaussian_value();
      return FieldScalar(a.spec_, GaussianValue{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar FieldScalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + spec_.name());
  switch (spec_.kind()) {
    case FieldKind::finite: return FieldScalar(spec_, spec_.inv_code(code()));
    case FieldKind::rational: return FieldScalar(spec_, Rational(1 / rational_value()));
    case FieldKind::gaussian_rational: {
      const auto& x = gaussian_value();
      const Rational norm = x.re * x.re + x.im * x.im;
      return FieldScalar(spec_, GaussianValue{x.re / norm, -x.im / norm});
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field kind");
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * b.inv(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b) {
  require_same(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::finite: return a.code() <=> b.code();
    case FieldKind::rational: return compare_rational(a.rational_value(), b.rational_value());
    case FieldKind::gaussian_rational: {
      const auto& x = a.gaussian_value();
      const auto& y = b.gaussian_value();
      if (auto c = compare_rational(x.re, y.re); c != 0) return c;
      return compare_rational(x.im, y.im);
    }
  }
  return std::strong_ordering::equal;
}

std::string FieldScalar::to_string() const {
  switch (spec_.kind()) {
    case FieldKind::finite: {
      if (spec_.degree() == 1) return std::to_string(code());
      std::string s = "[";
      const auto c = coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
    case FieldKind::rational: return rational_string(rational_value());
    case FieldKind::gaussian_rational: {
      const auto& g = gaussian_value();
      if (g.im == 0) return rational_string(g.re);
      std::string imag;
      if (g.im == 1) imag = "i";
      else if (g.im == -1) imag = "-i";
      else imag = rational_string(g.im) + "*i";
      if (g.re == 0) return imag;
      if (imag[0] == '-') return rational_string(g.re) + imag;
      return rational_string(g.re) + "+" + imag;
    }
  }
  return "?";
}

FieldScalar add(const FieldScalar& a, const FieldScalar& b) { return a + b; }
FieldScalar mul(const FieldScalar& a, const FieldScalar& b) { return a * b; }
FieldScalar neg(const FieldScalar& a) { return -a; }
FieldScalar inv(const FieldScalar& a) { return a.inv(); }

FieldScalar parse_scalar(const FieldSpec& spec, std::string_view raw) {
  const std::string text = strip_spaces(raw);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty scalar literal");
  switch (spec.kind()) {
    case FieldKind::finite: {
      if (text.front() == '[') {
        if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coefficient vector '" + text + "'");
        std::vector<std::int64_t> coeffs;
        std::stringstream ss(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
          const Rational r = parse_rational(item);
          if (boost::multiprecision::denominator(r) != 1) {
            throw Error(ErrorCode::ParseError, "coefficients must be integers: '" + text + "'");
          }
          coeffs.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(r) % spec.characteristic()));
        }
        if (coeffs.empty() || coeffs.size() > spec.degree()) {
          throw Error(ErrorCode::ParseError, "expected up to " + std::to_string(spec.degree()) + " coefficients");
        }
        return FieldScalar::from_coefficients(spec, coeffs);
      }
      return FieldScalar::from_rational(spec, parse_rational(text));
    }
    case FieldKind::rational: return FieldScalar::from_rational(spec, parse_rational(text));
    case FieldKind::gaussian_rational: {
      // Split into signed terms at '+'/'-' that follow a digit or 'i'.
      std::vector<std::string> terms;
      std::size_t start = 0;
      for (std::size_t i = 1; i < text.size(); ++i) {
        const char prev = text[i - 1];
        if ((text[i] == '+' || text[i] == '-') && (std::isdigit(static_cast<unsigned char>(prev)) || prev == 'i')) {
          terms.push_back(text.substr(start, i - start));
          start = i;
        }
      }
      terms.push_back(text.substr(start));
      Rational re = 0;
      Rational im = 0;
      for (std::string term : terms) {
        if (!term.empty() && term.front() == '+') term.erase(0, 1);
        if (!term.empty() && term.back() == 'i') {
          term.pop_back();
          if (!term.empty() && term.back() == '*') term.pop_back();
          if (term.empty() || term == "+") im += 1;
          else if (term == "-") im -= 1;
          else im += parse_rational(term);
        } else {
          re += parse_rational(term);
        }
      }
      return FieldScalar::from_gaussian(re, im);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown field kind");
}

FieldScalar frobenius(const FieldScalar& a) {
  if (!a.spec().is_finite() || a.spec().characteristic() != 2) {
    throw Error(ErrorCode::NotCharTwoFinite, "frobenius needs GF(2^f), got " + a.spec().name());
  }
  return a * a;
}

std::vector<FieldScalar> elements(const FieldSpec& spec) {
  if (!spec.is_finite()) throw Error(ErrorCode::InfiniteFieldUnsupported, spec.name() + " is infinite");
  std::vector<FieldScalar> out;
  out.reserve(*spec.size());
  for (std::uint32_t c = 0; c < *spec.size(); ++c) out.push_back(FieldScalar::from_code(spec, c));
  return out;
}

std::optional<std::pair<FieldScalar, FieldScalar>> sum_of_two_squares(const FieldScalar& a) {
  const FieldSpec& spec = a.spec();
  if (!spec.is_finite()) {
    throw Error(ErrorCode::InfiniteFieldUnsupported, "sum-of-two-squares scan needs a finite field");
  }
  const std::uint32_t q = *spec.size();
  // smallest square root of each square, by code
  std::vector<std::int64_t> root(q, -1);
  for (std::uint32_t y = 0; y < q; ++y) {
    const std::uint32_t s = spec.mul_code(y, y);
    if (root[s] < 0) root[s] = y;
  }
  const std::uint32_t target = a.code();
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint32_t rest = spec.sub_code(target, spec.mul_code(x, x));
    if (root[rest] >= 0) {
      return std::pair{FieldScalar::from_code(spec, x), FieldScalar::from_code(spec, static_cast<std::uint32_t>(root[rest]))};
    }
  }
  return std::nullopt;
}

bool is_sum_of_two_squares(const FieldScalar& a) { return sum_of_two_squares(a).has_value(); }

}  // namespace ctcsa
