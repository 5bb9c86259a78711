#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/field.hpp"
#include "ctcsa/group.hpp"

namespace ctcsa {

/// A 2x2 matrix [[a, b], [c, d]] over one exact field.
class Mat2 {
 public:
  Mat2(FieldScalar a, FieldScalar b, FieldScalar c, FieldScalar d);
  static Mat2 identity(const FieldSpec& spec);
  static Mat2 from_ints(const FieldSpec& spec, long long a, long long b, long long c, long long d);

  const FieldSpec& spec() const noexcept { return e_[0].spec(); }
  const FieldScalar& a() const noexcept { return e_[0]; }
  const FieldScalar& b() const noexcept { return e_[1]; }
  const FieldScalar& c() const noexcept { return e_[2]; }
  const FieldScalar& d() const noexcept { return e_[3]; }
  const std::array<FieldScalar, 4>& entries() const noexcept { return e_; }

  FieldScalar det() const;
  bool is_scalar() const;
  Mat2 inverse() const;
  Mat2 operator-() const;
  Mat2 scaled(const FieldScalar& s) const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) = default;

  /// "[[a,b],[c,d]]" with the scalar literal syntax of the field.
  std::string to_string() const;

 private:
  std::array<FieldScalar, 4> e_;
};

Mat2 parse_mat2(const FieldSpec& spec, std::string_view text);

/// An element of PSL(2, K): a determinant-one matrix up to sign, stored as
/// the lexicographically smaller of M and -M under the field's total order.
class ProjMat2 {
 public:
  /// Throws PreconditionFailed unless det(m) = 1.
  explicit ProjMat2(const Mat2& m);

  const Mat2& rep() const noexcept { return rep_; }
  const FieldSpec& spec() const noexcept { return rep_.spec(); }
  bool is_identity() const;

  friend ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) { return ProjMat2(x.rep_ * y.rep_); }
  friend bool operator==(const ProjMat2& x, const ProjMat2& y) = default;

  std::string to_string() const { return "±" + rep_.to_string(); }

 private:
  Mat2 rep_;
};

/// Sign-canonical representative of {m, -m}.
Mat2 canonical_sign(const Mat2& m);

/// AB = BA in PSL, i.e. AB = ±BA as matrices.  Throws SpecMismatch.
bool commutes(const ProjMat2& x, const ProjMat2& y);

/// SL(2, q) by closure of [[1,1],[0,1]] and [[1,0],[1,1]].
FiniteGroup sl2_group(std::uint32_t q, const Caps& caps = default_caps());
/// PSL(2, q); equal to SL(2, q) when q is even.
FiniteGroup psl2_group(std::uint32_t q, const Caps& caps = default_caps());
/// q(q^2 - 1) / gcd(2, q - 1).
std::uint64_t psl2_order(std::uint32_t q);

/// Looks up the element carrying the given matrix entries (codes).
std::optional<Elem> find_matrix(const FiniteGroup& g, const std::array<std::uint32_t, 4>& entries);
/// The matrix carried by an element.  Throws NoMatrixLabels.
Mat2 element_matrix(const FiniteGroup& g, Elem x);

struct ProjTriple {
  ProjMat2 a;
  ProjMat2 b;
  ProjMat2 c;
};

/// A = ±[[-x, y], [y, x]], B = ±[[0, 1], [-1, 0]], C = ±[[3/5, 4/5], [-4/5, 3/5]]
/// for x^2 + y^2 = -1 in a characteristic-zero field.  AB = BA and BC = CB
/// but AC != CA.  Throws PreconditionFailed.
ProjTriple char0_ct_counterexample(const FieldScalar& x, const FieldScalar& y);

/// T = ±[[0,1],[-1,0]], U = ±[[i,0],[0,-i]], V = ±[[2,0],[0,1/2]] over Q(i):
/// U commutes with T and with V, T and V do not commute.
ProjTriple gaussian_tuv_example();

/// An automorphism of a finite group as a permutation of element indices.
class GroupAutomorphism {
 public:
  /// Validates bijectivity, image[0] = 0 and the homomorphism property
  /// (exhaustive up to 600 elements, sampled above).  Throws
  /// ActionNotAutomorphism.
  GroupAutomorphism(FiniteGroup parent, std::vector<Elem> image, std::string provenance);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem x) const { return image_[x]; }
  const std::string& provenance() const noexcept { return provenance_; }
  bool is_identity() const;

  friend bool operator==(const GroupAutomorphism& x, const GroupAutomorphism& y) { return x.image_ == y.image_; }

 private:
  FiniteGroup parent_;
  std::vector<Elem> image_;
  std::string provenance_;
};

/// x -> g x g^-1
GroupAutomorphism inner_automorphism(const FiniteGroup& g, Elem by);
/// Entrywise squaring on a matrix group over GF(2^f).  Throws NoMatrixLabels
/// or NotCharTwo.
GroupAutomorphism frobenius_automorphism(const FiniteGroup& g);
/// (outer o inner)(x) = outer(inner(x)).
GroupAutomorphism compose(const GroupAutomorphism& outer, const GroupAutomorphism& inner);
bool equal_automorphisms(const GroupAutomorphism& x, const GroupAutomorphism& y);
GroupAutomorphism power(const GroupAutomorphism& a, std::uint32_t k);
std::uint32_t automorphism_order(const GroupAutomorphism& a);

/// C_G(M) for a normal subgroup M: the kernel of G -> Aut(M).  Throws NotNormal.
SubgroupSet conjugation_kernel(const FiniteGroup& g, const SubgroupSet& m);

/// Every invertible 2x2 matrix over GF(q) commuting with [[1,1],[0,1]] and
/// [[0,1],[1,0]] is scalar (exhaustive over GL(2, q), q <= 16).
bool scalar_centralizer_check(std::uint32_t q);

}  // namespace ctcsa
