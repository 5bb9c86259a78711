#include "ctcsa/psl2.hpp"

#include <cctype>
#include <numeric>
#include <random>
#include <unordered_map>

#include "ctcsa/subgroups.hpp"

namespace ctcsa {

Mat2::Mat2(FieldScalar a, FieldScalar b, FieldScalar c, FieldScalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& x : e_) {
    if (!(x.spec() == e_[0].spec())) throw Error(ErrorCode::SpecMismatch, "matrix entries over different fields");
  }
}

Mat2 Mat2::identity(const FieldSpec& spec) { return from_ints(spec, 1, 0, 0, 1); }

Mat2 Mat2::from_ints(const FieldSpec& spec, long long a, long long b, long long c, long long d) {
  return Mat2(FieldScalar::from_int(spec, a), FieldScalar::from_int(spec, b), FieldScalar::from_int(spec, c),
              FieldScalar::from_int(spec, d));
}

FieldScalar Mat2::det() const { return a() * d() - b() * c(); }

bool Mat2::is_scalar() const { return b().is_zero() && c().is_zero() && a() == d(); }

Mat2 Mat2::inverse() const {
  const FieldScalar k = det().inv();
  return Mat2(d() * k, -b() * k, -c() * k, a() * k);
}

Mat2 Mat2::operator-() const { return Mat2(-a(), -b(), -c(), -d()); }

Mat2 Mat2::scaled(const FieldScalar& s) const { return Mat2(a() * s, b() * s, c() * s, d() * s); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(), x.c() * y.a() + x.d() * y.c(),
              x.c() * y.b() + x.d() * y.d());
}

std::string Mat2::to_string() const {
  return "[[" + a().to_string() + "," + b().to_string() + "],[" + c().to_string() + "," + d().to_string() + "]]";
}

Mat2 parse_mat2(const FieldSpec& spec, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
    throw Error(ErrorCode::ParseError, "matrix literal must look like [[a,b],[c,d]]: '" + std::string(text) + "'");
  }
  // Cells are separated by commas at row depth; scalar literals may contain
  // bracketed coefficient vectors.
  std::vector<std::string> cells;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '[') {
      if (++depth == 1) continue;
    } else if (ch == ']') {
      if (--depth == 0) {
        cells.push_back(cur);
        cur.clear();
        continue;
      }
    } else if (ch == ',' && depth <= 1) {
      if (depth == 1) {
        cells.push_back(cur);
        cur.clear();
      }
      continue;
    }
    cur.push_back(ch);
  }
  if (cells.size() != 4) throw Error(ErrorCode::ParseError, "matrix literal needs four entries: '" + std::string(text) + "'");
  return Mat2(parse_scalar(spec, cells[0]), parse_scalar(spec, cells[1]), parse_scalar(spec, cells[2]),
              parse_scalar(spec, cells[3]));
}

Mat2 canonical_sign(const Mat2& m) {
  const Mat2 n = -m;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto c = m.entries()[i] <=> n.entries()[i];
    if (c < 0) return m;
    if (c > 0) return n;
  }
  return m;
}

ProjMat2::ProjMat2(const Mat2& m) : rep_(canonical_sign(m)) {
  if (!m.det().is_one()) throw Error(ErrorCode::PreconditionFailed, "determinant of " + m.to_string() + " is not 1");
}

bool ProjMat2::is_identity() const { return rep_ == canonical_sign(Mat2::identity(spec())); }

bool commutes(const ProjMat2& x, const ProjMat2& y) {
  if (!(x.spec() == y.spec())) throw Error(ErrorCode::SpecMismatch, x.spec().name() + " vs " + y.spec().name());
  return x * y == y * x;
}

// ---------------------------------------------------------------------------

namespace {

using Codes = std::array<std::uint32_t, 4>;

std::uint64_t pack(const Codes& m) {
  return (static_cast<std::uint64_t>(m[0]) << 48) | (static_cast<std::uint64_t>(m[1]) << 32) |
         (static_cast<std::uint64_t>(m[2]) << 16) | m[3];
}

Codes codes_mul(const FieldSpec& k, const Codes& x, const Codes& y) {
  return {k.add_code(k.mul_code(x[0], y[0]), k.mul_code(x[1], y[2])),
          k.add_code(k.mul_code(x[0], y[1]), k.mul_code(x[1], y[3])),
          k.add_code(k.mul_code(x[2], y[0]), k.mul_code(x[3], y[2])),
          k.add_code(k.mul_code(x[2], y[1]), k.mul_code(x[3], y[3]))};
}

// Inverse of a determinant-one matrix.
Codes codes_inv(const FieldSpec& k, const Codes& x) { return {x[3], k.neg_code(x[1]), k.neg_code(x[2]), x[0]}; }

Codes codes_canonical(const FieldSpec& k, const Codes& x) {
  const Codes n{k.neg_code(x[0]), k.neg_code(x[1]), k.neg_code(x[2]), k.neg_code(x[3])};
  return n < x ? n : x;
}

Mat2 codes_to_mat(const FieldSpec& k, const Codes& x) {
  return Mat2(FieldScalar::from_code(k, x[0]), FieldScalar::from_code(k, x[1]), FieldScalar::from_code(k, x[2]),
              FieldScalar::from_code(k, x[3]));
}

FiniteGroup matrix_group(std::uint32_t q, bool projective, const Caps& caps) {
  const auto [p, f] = prime_power(q);
  const FieldSpec k = make_field(FieldKind::finite, p, f);
  const bool reduce = projective && p != 2;
  auto canon = [&](const Codes& m) { return reduce ? codes_canonical(k, m) : m; };
  auto mul = [&](const Codes& x, const Codes& y) { return canon(codes_mul(k, x, y)); };
  auto inv = [&](const Codes& x) { return canon(codes_inv(k, x)); };
  auto label = [&](const Codes& x) { return codes_to_mat(k, x).to_string(); };
  std::vector<Codes> gens{canon({1, 1, 0, 1}), canon({1, 0, 1, 1})};
  if (f > 1) {
    // The unitriangular pair only reaches SL(2, p); a primitive diagonal
    // element supplies the rest of the field.
    const FieldScalar w = FieldScalar::primitive(k);
    gens.push_back(canon({w.code(), 0, 0, w.inv().code()}));
  }
  const std::string name = (projective ? "psl2:" : "sl2:") + std::to_string(q);
  auto result = close_generators_with_elements<Codes>(std::span<const Codes>(gens), mul, inv, pack, label, name,
                                                      caps.order_cap);
  const std::uint64_t expected = projective ? psl2_order(q) : psl2_order(q) * (p == 2 ? 1 : 2);
  if (result.parts.order != expected) {
    throw Error(ErrorCode::NonClosedArithmetic, name + " closed at order " + std::to_string(result.parts.order) +
                                                    ", expected " + std::to_string(expected));
  }
  MatrixRealization real{k, projective, std::move(result.elements)};
  result.parts.matrices = std::move(real);
  return FiniteGroup(std::move(result.parts));
}

}  // namespace

FiniteGroup sl2_group(std::uint32_t q, const Caps& caps) { return matrix_group(q, false, caps); }
FiniteGroup psl2_group(std::uint32_t q, const Caps& caps) { return matrix_group(q, true, caps); }

std::uint64_t psl2_order(std::uint32_t q) {
  const std::uint64_t qq = q;
  return qq * (qq * qq - 1) / std::gcd<std::uint64_t>(2, qq - 1);
}

std::optional<Elem> find_matrix(const FiniteGroup& g, const std::array<std::uint32_t, 4>& entries) {
  const MatrixRealization* m = g.matrices();
  if (!m) throw Error(ErrorCode::NoMatrixLabels, g.provenance() + " carries no matrices");
  const Codes key = (m->projective && m->field.characteristic() != 2) ? codes_canonical(m->field, entries) : entries;
  for (Elem i = 0; i < g.order(); ++i) {
    if (m->entries[i] == key) return i;
  }
  return std::nullopt;
}

Mat2 element_matrix(const FiniteGroup& g, Elem x) {
  const MatrixRealization* m = g.matrices();
  if (!m) throw Error(ErrorCode::NoMatrixLabels, g.provenance() + " carries no matrices");
  return codes_to_mat(m->field, m->entries.at(x));
}

// ---------------------------------------------------------------------------

ProjTriple char0_ct_counterexample(const FieldScalar& x, const FieldScalar& y) {
  const FieldSpec& k = x.spec();
  if (!(k == y.spec())) throw Error(ErrorCode::SpecMismatch, "x and y live in different fields");
  if (k.is_finite()) throw Error(ErrorCode::PreconditionFailed, "needs a characteristic-zero field, got " + k.name());
  const FieldScalar minus_one = FieldScalar::from_int(k, -1);
  if (!(x * x + y * y == minus_one)) {
    throw Error(ErrorCode::PreconditionFailed,
                "x^2 + y^2 = " + (x * x + y * y).to_string() + " in " + k.name() + ", not -1");
  }
  const FieldScalar three_fifths = FieldScalar::from_rational(k, Rational(3, 5));
  const FieldScalar four_fifths = FieldScalar::from_rational(k, Rational(4, 5));
  ProjTriple t{ProjMat2(Mat2(-x, y, y, x)), ProjMat2(Mat2::from_ints(k, 0, 1, -1, 0)),
               ProjMat2(Mat2(three_fifths, four_fifths, -four_fifths, three_fifths))};
  if (!commutes(t.a, t.b) || !commutes(t.b, t.c) || commutes(t.a, t.c)) {
    throw Error(ErrorCode::PreconditionFailed, "constructed triple does not witness non-transitivity");
  }
  return t;
}

ProjTriple gaussian_tuv_example() {
  const FieldSpec k = FieldSpec::gaussian_rational();
  const FieldScalar i = FieldScalar::from_gaussian(0, 1);
  const FieldScalar zero = FieldScalar::zero(k);
  const FieldScalar alpha = FieldScalar::from_int(k, 2);
  ProjTriple t{ProjMat2(Mat2::from_ints(k, 0, 1, -1, 0)), ProjMat2(Mat2(i, zero, zero, -i)),
               ProjMat2(Mat2(alpha, zero, zero, alpha.inv()))};
  if (!commutes(t.b, t.a) || !commutes(t.b, t.c) || commutes(t.a, t.c)) {
    throw Error(ErrorCode::PreconditionFailed, "T, U, V commutation facts do not hold");
  }
  return t;
}

// ---------------------------------------------------------------------------

GroupAutomorphism::GroupAutomorphism(FiniteGroup parent, std::vector<Elem> image, std::string provenance)
    : parent_(std::move(parent)), image_(std::move(image)), provenance_(std::move(provenance)) {
  const std::uint32_t n = parent_.order();
  if (image_.size() != n || image_[0] != 0) {
    throw Error(ErrorCode::ActionNotAutomorphism, provenance_ + ": image must fix the identity");
  }
  std::vector<bool> hit(n, false);
  for (Elem x : image_) {
    if (x >= n || hit[x]) throw Error(ErrorCode::ActionNotAutomorphism, provenance_ + ": not a bijection");
    hit[x] = true;
  }
  auto respects = [&](Elem x, Elem y) { return image_[parent_.mul(x, y)] == parent_.mul(image_[x], image_[y]); };
  if (n <= 600) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!respects(x, y)) throw Error(ErrorCode::ActionNotAutomorphism, provenance_ + ": not a homomorphism");
  } else {
    std::mt19937_64 rng(0xa07);
    for (int t = 0; t < 100000; ++t) {
      if (!respects(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n))) {
        throw Error(ErrorCode::ActionNotAutomorphism, provenance_ + ": not a homomorphism");
      }
    }
  }
}

bool GroupAutomorphism::is_identity() const {
  for (Elem x = 0; x < image_.size(); ++x) {
    if (image_[x] != x) return false;
  }
  return true;
}

GroupAutomorphism inner_automorphism(const FiniteGroup& g, Elem by) {
  if (by >= g.order()) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  std::vector<Elem> image(g.order());
  for (Elem x = 0; x < g.order(); ++x) image[x] = g.conj(by, x);
  return GroupAutomorphism(g, std::move(image), "inner(" + g.label(by) + ")");
}

GroupAutomorphism frobenius_automorphism(const FiniteGroup& g) {
  const MatrixRealization* m = g.matrices();
  if (!m) throw Error(ErrorCode::NoMatrixLabels, g.provenance() + " carries no matrices");
  const FieldSpec& k = m->field;
  if (k.characteristic() != 2) throw Error(ErrorCode::NotCharTwo, "frobenius needs GF(2^f), got " + k.name());
  std::unordered_map<std::uint64_t, Elem> index;
  for (Elem i = 0; i < g.order(); ++i) index.emplace(pack(m->entries[i]), i);
  std::vector<Elem> image(g.order());
  for (Elem i = 0; i < g.order(); ++i) {
    const Codes& x = m->entries[i];
    const Codes sq{k.mul_code(x[0], x[0]), k.mul_code(x[1], x[1]), k.mul_code(x[2], x[2]), k.mul_code(x[3], x[3])};
    auto it = index.find(pack(sq));
    if (it == index.end()) throw Error(ErrorCode::NonClosedArithmetic, "frobenius image left the group");
    image[i] = it->second;
  }
  return GroupAutomorphism(g, std::move(image), "frobenius");
}

GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner) {
  if (!outer.parent().same_group(inner.parent())) {
    throw Error(ErrorCode::InvalidArgument, "automorphisms of different groups");
  }
  std::vector<Elem> image(inner.image().size());
  for (Elem x = 0; x < image.size(); ++x) image[x] = outer(inner(x));
  return GroupAutomorphism(outer.parent(), std::move(image), outer.provenance() + " o " + inner.provenance());
}

bool equal_automorphisms(const GroupAutomorphism& x, const GroupAutomorphism& y) {
  return x.parent().same_group(y.parent()) && x == y;
}

GroupAutomorphism power(const GroupAutomorphism& a, std::uint32_t k) {
  std::vector<Elem> image(a.image().size());
  std::iota(image.begin(), image.end(), 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (auto& x : image) x = a(x);
  }
  return GroupAutomorphism(a.parent(), std::move(image), a.provenance() + "^" + std::to_string(k));
}

std::uint32_t automorphism_order(const GroupAutomorphism& a) {
  std::vector<Elem> cur = a.image();
  std::uint32_t k = 1;
  auto is_id = [](const std::vector<Elem>& v) {
    for (Elem x = 0; x < v.size(); ++x) {
      if (v[x] != x) return false;
    }
    return true;
  };
  while (!is_id(cur)) {
    for (auto& x : cur) x = a(x);
    ++k;
  }
  return k;
}

SubgroupSet conjugation_kernel(const FiniteGroup& g, const SubgroupSet& m) {
  if (!m.parent().same_group(g)) throw Error(ErrorCode::InvalidArgument, "subgroup of a different group");
  if (!is_normal(m)) throw Error(ErrorCode::NotNormal, m.describe() + " is not normal in " + g.provenance());
  return centralizer_of_subgroup(m);
}

bool scalar_centralizer_check(std::uint32_t q) {
  if (q > 16) throw Error(ErrorCode::OrderCapExceeded, "scalar centralizer scan is limited to q <= 16");
  const auto [p, f] = prime_power(q);
  const FieldSpec k = make_field(FieldKind::finite, p, f);
  const Codes x{1, 1, 0, 1};
  const Codes y{0, 1, 1, 0};
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if (k.sub_code(k.mul_code(a, d), k.mul_code(b, c)) == 0) continue;
          const Codes m{a, b, c, d};
          if (codes_mul(k, m, x) != codes_mul(k, x, m) || codes_mul(k, m, y) != codes_mul(k, y, m)) continue;
          if (!(b == 0 && c == 0 && a == d)) return false;
        }
  return true;
}

}  // namespace ctcsa
