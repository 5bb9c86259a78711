#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/group.hpp"
#include "ctcsa/isomorphism.hpp"

namespace ctcsa {

enum class PaperClaim { confirms, refutes, unaddressed };
std::string to_string(PaperClaim c);

struct Witness {
  std::vector<Elem> elements;
  std::vector<std::string> labels;
  std::optional<std::vector<Elem>> subgroup;  // members of a witnessing subgroup
  std::string note;
};

Witness make_witness(const FiniteGroup& g, std::vector<Elem> elements, std::string note = {});

struct PropertyReport {
  std::string subject;
  std::string property;  // CT, CSA, MAL, simple, solvable, abelian, monolithic, ...
  std::string method;
  bool verdict = false;
  std::optional<Witness> witness;
  std::optional<PaperClaim> paper_claim;
  double elapsed_seconds = 0.0;
};

enum class CtMethod { centralizer, triple_scan, maximal_abelian };
enum class CsaMethod { sentence, malnormal };

std::string to_string(CtMethod m);
std::string to_string(CsaMethod m);

/// CT by one of three equivalent characterizations.  A false verdict carries
/// a triple (x, y, z) with y != 1, [x,y] = [y,z] = 1 and [x,z] != 1.
/// triple-scan throws OrderCapExceeded above caps.triple_scan_cap.
PropertyReport is_ct(const FiniteGroup& g, CtMethod method = CtMethod::centralizer, const Caps& caps = default_caps());

/// CSA via CT and MAL over all triples (sentence, capped like triple-scan) or
/// via malnormality of every maximal abelian subgroup.  A false verdict
/// carries a violating triple or a subgroup together with g and h, where
/// g h g^-1 lands back in the subgroup.
PropertyReport is_csa(const FiniteGroup& g, CsaMethod method = CsaMethod::malnormal,
                      const Caps& caps = default_caps());

/// First (x, y, z) in index order with x, y != 1, [x,y] = 1, [x, z^-1 y z] = 1
/// and [y,z] != 1.  Throws OrderCapExceeded above caps.triple_scan_cap.
std::optional<std::array<Elem, 3>> notmal_witness(const FiniteGroup& g, const Caps& caps = default_caps());

struct Theorem41Result {
  std::array<Elem, 3> witness;  // (g, h, k)
  SubgroupSet g0;               // <g, h, k>
  SubgroupSet a;                // normal closure of <h> in g0
};

/// For a CT group that is not CSA: G0 = <g,h,k> from the NOTMAL witness and
/// the normal closure A of h inside G0.  Asserts G0 nonabelian and A
/// nontrivial, abelian and normal in G0.  Throws NotCT, IsCSA, or
/// PreconditionFailed if an assertion fails.
Theorem41Result theorem41_extract(const FiniteGroup& g, const Caps& caps = default_caps());

struct WuClass {
  enum class Kind { not_ct, solvable_ct, simple_ct, contradiction };
  Kind kind = Kind::not_ct;
  std::uint32_t f = 0;  // simple_ct: G is PSL(2, 2^f)
  IsomorphismResult iso;
  std::string detail;
};
std::string to_string(WuClass::Kind k);

/// Classifies a finite group against the dichotomy for CT groups: solvable,
/// or isomorphic to PSL(2, 2^f) with f >= 2.  The isomorphism step is capped
/// at 600 elements.
WuClass wu_classify(const FiniteGroup& g, const Caps& caps = default_caps());

/// For a solvable CT group: the Fitting subgroup F is abelian and no g outside
/// F centralizes a nontrivial element of F.  Throws NotSolvableCT.
PropertyReport verify_wu_solvable_structure(const FiniteGroup& g, const Caps& caps = default_caps());

/// One report per group: verdict false iff the group is CSA but nonabelian.
std::vector<PropertyReport> csa_implies_abelian_scan(const std::vector<FiniteGroup>& corpus,
                                                     const Caps& caps = default_caps());

}  // namespace ctcsa
