#include <algorithm>
#include <functional>
#include <memory>
#include <map>
#include <random>

#include "ctcsa/harness.hpp"
#include "ctcsa/isomorphism.hpp"
#include "ctcsa/logic.hpp"
#include "ctcsa/psl2.hpp"
#include "ctcsa/recipe.hpp"
#include "ctcsa/subgroups.hpp"

namespace ctcsa {

bool SuiteRow::passed() const {
  if (!error.empty()) return false;
  return computed == expected || (known_refutation && paper_claim == PaperClaim::refutes);
}

bool all_passed(const std::vector<SuiteRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma22-equivalence", "wu",       "csa-abelian", "pq-example",
                                              "psl2-csa",            "psl2-ct",  "thm41",       "monolith",
                                              "aut-sl2",             "char0-witness", "axiomatic"};
  return names;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const Config& config) : suite_(std::move(suite)), config_(config) {}

  const Caps& caps() const { return config_.caps; }

  const FiniteGroup& group(const std::string& recipe) {
    auto it = cache_.find(recipe);
    if (it == cache_.end()) it = cache_.emplace(recipe, build_group(recipe, config_.caps)).first;
    return it->second;
  }

  /// Runs `fn` to fill the computed value (and optionally a witness); any
  /// exception becomes the row's error.
  void check(const std::string& subject, const std::string& check, bool expected, PaperClaim claim,
             const std::string& anchor, const std::function<bool(SuiteRow&)>& fn) {
    SuiteRow row;
    row.suite = suite_;
    row.subject = subject;
    row.check = check;
    row.expected = expected;
    row.paper_claim = claim;
    row.anchor = anchor;
    try {
      row.computed = fn(row);
    } catch (const std::exception& e) {
      row.error = e.what();
      row.computed = false;
    }
    for (const auto& k : config_.known_refutations) {
      if (k.suite == row.suite && k.subject == row.subject && k.check == row.check) row.known_refutation = true;
    }
    rows_.push_back(std::move(row));
  }

  /// Corpus entries in config order, as canonical recipe strings, with their
  /// groups.  Entries that fail to build produce one error row.
  void for_corpus(const std::function<void(const std::string&, const FiniteGroup&)>& fn) {
    for (const auto& e : config_.corpus) {
      const std::string recipe = parse_recipe(e.recipe).to_string();
      const FiniteGroup* g = nullptr;
      try {
        g = &group(recipe);
      } catch (const std::exception& ex) {
        SuiteRow row;
        row.suite = suite_;
        row.subject = recipe;
        row.check = "build";
        row.error = ex.what();
        rows_.push_back(std::move(row));
        continue;
      }
      fn(recipe, *g);
    }
  }

  bool small(const FiniteGroup& g) const { return g.order() <= config_.caps.triple_scan_cap; }

  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  std::string suite_;
  const Config& config_;
  std::map<std::string, FiniteGroup> cache_;
  std::vector<SuiteRow> rows_;
};

constexpr auto kConfirms = PaperClaim::confirms;
constexpr auto kDerived = PaperClaim::unaddressed;

std::string verdict_note(const char* what, bool v) { return std::string(what) + "=" + (v ? "true" : "false"); }

// Deterministic pseudo-random 2-generated subgroups.
std::vector<SubgroupSet> sampled_subgroups(const FiniteGroup& g, std::size_t count) {
  std::mt19937_64 rng(fnv1a(g.provenance()));
  std::vector<SubgroupSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Elem pair[] = {static_cast<Elem>(rng() % g.order()), static_cast<Elem>(rng() % g.order())};
    out.push_back(subgroup_generated(g, pair));
  }
  return out;
}

// ---------------------------------------------------------------------------

void suite_lemma22(SuiteRunner& s) {
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    if (!s.small(g)) return;
    s.check(r, "ct-methods-agree", true, kConfirms, "ct-three-characterizations", [&](SuiteRow& row) {
      const auto a = is_ct(g, CtMethod::centralizer, s.caps());
      const auto b = is_ct(g, CtMethod::triple_scan, s.caps());
      const auto c = is_ct(g, CtMethod::maximal_abelian, s.caps());
      row.witness = a.witness ? a.witness : Witness{};
      row.witness->note = verdict_note("CT", a.verdict) + (a.witness ? "; " + a.witness->note : "");
      return a.verdict == b.verdict && b.verdict == c.verdict;
    });
    if (!g.is_abelian() && !center(g).is_trivial()) {
      s.check(r, "ct-with-center", false, kConfirms, "ct-center-obstruction", [&](SuiteRow& row) {
        const auto a = is_ct(g, CtMethod::centralizer, s.caps());
        row.witness = a.witness;
        return a.verdict;
      });
    }
    if (is_ct(g, CtMethod::centralizer, s.caps()).verdict) {
      s.check(r, "subgroup-heredity", true, kConfirms, "ct-subgroup-closure", [&](SuiteRow& row) {
        for (const auto& h : sampled_subgroups(g, 50)) {
          const auto [sub, embed] = subgroup_as_group(h);
          if (!is_ct(sub, CtMethod::centralizer, s.caps()).verdict) {
            row.witness = make_witness(g, h.generators(), "non-CT subgroup");
            return false;
          }
        }
        return true;
      });
    }
  });
}

void suite_wu(SuiteRunner& s) {
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    if (!s.small(g)) return;
    WuClass wu;
    s.check(r, "wu-classified", true, kConfirms, "wu-dichotomy", [&](SuiteRow& row) {
      wu = wu_classify(g, s.caps());
      Witness w;
      w.note = to_string(wu.kind) + (wu.kind == WuClass::Kind::simple_ct ? " f=" + std::to_string(wu.f) : "") +
               (wu.detail.empty() ? "" : "; " + wu.detail);
      row.witness = w;
      return wu.kind != WuClass::Kind::contradiction;
    });
    if (wu.kind == WuClass::Kind::solvable_ct) {
      s.check(r, "fitting-structure", true, kConfirms, "wu-solvable-structure", [&](SuiteRow& row) {
        const auto rep = verify_wu_solvable_structure(g, s.caps());
        row.witness = rep.witness;
        return rep.verdict;
      });
    }
  });
  s.check("alternating:5", "simple-ct-f2", true, kDerived, "wu-dichotomy", [&](SuiteRow& row) {
    const FiniteGroup& a5 = s.group("alternating:5");
    const WuClass wu = wu_classify(a5, s.caps());
    if (wu.kind != WuClass::Kind::simple_ct) return false;
    const FiniteGroup& target = s.group("psl2:4");
    Witness w = make_witness(a5, wu.iso.generators, "images in psl2:4:");
    for (Elem y : wu.iso.images) w.note += " " + target.label(y);
    row.witness = w;
    return wu.f == 2 && !extend_homomorphism(a5, wu.iso.generators, target, wu.iso.images).empty();
  });
}

void suite_csa_abelian(SuiteRunner& s) {
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    const bool csa = is_csa(g, CsaMethod::malnormal, s.caps()).verdict;
    s.check(r, "csa-implies-abelian", true, kConfirms, "finite-csa-abelian", [&](SuiteRow& row) {
      row.witness = Witness{{}, {}, std::nullopt, verdict_note("CSA", csa)};
      return !csa || g.is_abelian();
    });
    s.check(r, "csa-implies-ct", true, kConfirms, "csa-implies-ct",
            [&](SuiteRow&) { return !csa || is_ct(g, CtMethod::centralizer, s.caps()).verdict; });
    if (s.small(g)) {
      s.check(r, "csa-methods-agree", true, kConfirms, "csa-two-characterizations",
              [&](SuiteRow&) { return is_csa(g, CsaMethod::sentence, s.caps()).verdict == csa; });
    }
  });
}

void suite_pq(SuiteRunner& s) {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 7}, {5, 11}, {2, 7}}) {
    const std::string r = "frobenius:" + std::to_string(p) + "," + std::to_string(q);
    s.check(r, "order-pq-nonabelian", true, kConfirms, "pq-group", [&](SuiteRow&) {
      const FiniteGroup& g = s.group(r);
      return g.order() == static_cast<std::uint32_t>(p * q) && !g.is_abelian();
    });
    s.check(r, "ct", true, kConfirms, "pq-ct-not-csa", [&](SuiteRow& row) {
      const auto rep = is_ct(s.group(r), CtMethod::centralizer, s.caps());
      row.witness = rep.witness;
      return rep.verdict;
    });
    s.check(r, "csa", false, kConfirms, "pq-ct-not-csa", [&](SuiteRow& row) {
      const auto rep = is_csa(s.group(r), CsaMethod::malnormal, s.caps());
      row.witness = rep.witness;
      return rep.verdict;
    });
    s.check(r, "order-p-subgroup-malnormal", true, kDerived, "pq-complement-malnormal", [&](SuiteRow& row) {
      const FiniteGroup& g = s.group(r);
      for (Elem x = 1; x < g.order(); ++x) {
        if (g.element_order(x) != static_cast<std::uint32_t>(p)) continue;
        const Elem seed[] = {x};
        const SubgroupSet h = subgroup_generated(g, seed);
        Witness w = make_witness(g, {x});
        w.subgroup = h.elements();
        row.witness = w;
        return is_malnormal(h).malnormal;
      }
      return false;
    });
  }
  s.check("frobenius:3,7", "g0-extraction", true, kConfirms, "ct-not-csa-characterization", [&](SuiteRow& row) {
    const FiniteGroup& g = s.group("frobenius:3,7");
    const auto t = theorem41_extract(g, s.caps());
    Witness w = make_witness(g, {t.witness[0], t.witness[1], t.witness[2]},
                             "G0 order " + std::to_string(t.g0.size()) + ", A order " + std::to_string(t.a.size()));
    w.subgroup = t.a.elements();
    row.witness = w;
    bool cyclic7 = false;
    for (Elem x : t.a.elements()) cyclic7 = cyclic7 || g.element_order(x) == 7;
    return t.g0.size() == 21 && t.a.size() == 7 && cyclic7 && t.a.is_abelian() && is_normal_in(t.a, t.g0);
  });
  s.check("frobenius:2,3", "isomorphic-to-symmetric:3", true, kDerived, "pq-group", [&](SuiteRow&) {
    return is_isomorphic(s.group("frobenius:2,3"), s.group("symmetric:3")).isomorphic;
  });
  s.check("semidirect(cyclic:7,cyclic:3,power:2)", "isomorphic-to-frobenius:3,7", true, kDerived, "pq-group",
          [&](SuiteRow&) {
            return is_isomorphic(s.group("semidirect(cyclic:7,cyclic:3,power:2)"), s.group("frobenius:3,7")).isomorphic;
          });
}

void suite_psl2_csa(SuiteRunner& s) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const std::string r = "psl2:" + std::to_string(q);
    s.check(r, "csa", false, kConfirms, "psl2-not-csa", [&](SuiteRow& row) {
      const auto rep = is_csa(s.group(r), CsaMethod::malnormal, s.caps());
      row.witness = rep.witness;
      return rep.verdict;
    });
  }
  s.check("psl2:2", "normal-c3-witness", true, kConfirms, "psl2-2-normal-c3", [&](SuiteRow& row) {
    const FiniteGroup& g = s.group("psl2:2");
    for (const auto& n : normal_subgroups(g, s.caps())) {
      if (n.size() != 3) continue;
      const MalnormalResult m = is_malnormal(n);
      Witness w = make_witness(g, m.malnormal ? std::vector<Elem>{} : std::vector<Elem>{*m.violator, *m.witness},
                               "normal subgroup of order 3");
      w.subgroup = n.elements();
      row.witness = w;
      return n.is_abelian() && !m.malnormal;
    }
    return false;
  });
  s.check("psl2:2", "isomorphic-to-symmetric:3", true, kConfirms, "psl2-2-order-6",
          [&](SuiteRow&) { return is_isomorphic(s.group("psl2:2"), s.group("symmetric:3")).isomorphic; });
}

void suite_psl2_ct(SuiteRunner& s) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const std::string r = "psl2:" + std::to_string(q);
    s.check(r, "order-formula", true, kDerived, "psl2-order", [&](SuiteRow& row) {
      const FiniteGroup& g = s.group(r);
      row.witness = Witness{{}, {}, std::nullopt, "order " + std::to_string(g.order())};
      return g.order() == psl2_order(q);
    });
    // Expected: CT exactly in characteristic 2.
    const bool predicted = q % 2 == 0;
    s.check(r, "ct", predicted, kConfirms, predicted ? "psl2-char2-ct" : "psl2-odd-char-not-ct", [&](SuiteRow& row) {
      const auto rep = is_ct(s.group(r), CtMethod::centralizer, s.caps());
      row.witness = rep.witness;
      if (rep.verdict != predicted) row.paper_claim = PaperClaim::refutes;
      return rep.verdict;
    });
  }
}

void suite_thm41(SuiteRunner& s) {
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    if (!s.small(g) || !is_ct(g, CtMethod::centralizer, s.caps()).verdict) return;
    const bool csa = is_csa(g, CsaMethod::malnormal, s.caps()).verdict;
    if (!csa) {
      s.check(r, "extraction", true, kConfirms, "ct-not-csa-characterization", [&](SuiteRow& row) {
        const auto t = theorem41_extract(g, s.caps());
        Witness w = make_witness(g, {t.witness[0], t.witness[1], t.witness[2]},
                                 "G0 order " + std::to_string(t.g0.size()) + ", A order " + std::to_string(t.a.size()));
        w.subgroup = t.a.elements();
        row.witness = w;
        return true;
      });
    }
    s.check(r, "converse", true, kConfirms, "ct-not-csa-characterization", [&](SuiteRow& row) {
      std::vector<SubgroupSet> candidates{SubgroupSet::whole(g)};
      for (auto& h : sampled_subgroups(g, 50)) candidates.push_back(std::move(h));
      for (const auto& g0 : candidates) {
        if (g0.is_abelian()) continue;
        if (auto a = abelian_normal_subgroup(g0)) {
          Witness w = make_witness(g, g0.generators(), "nonabelian G0 with abelian normal " + a->describe());
          w.subgroup = a->elements();
          row.witness = w;
          return !csa;
        }
      }
      row.witness = Witness{{}, {}, std::nullopt, "no sampled G0 found"};
      return true;
    });
  });
}

void suite_monolith(SuiteRunner& s) {
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    const Recipe rec = parse_recipe(r);
    if (rec.family == "direct") {
      const bool both_abelian = s.group(rec.children[0].to_string()).is_abelian() &&
                                s.group(rec.children[1].to_string()).is_abelian();
      const bool both_nonabelian = !s.group(rec.children[0].to_string()).is_abelian() &&
                                   !s.group(rec.children[1].to_string()).is_abelian();
      s.check(r, "direct-product-ct", both_abelian, both_nonabelian ? kConfirms : kDerived, "direct-product-not-ct",
              [&](SuiteRow& row) {
                const auto rep = is_ct(g, CtMethod::centralizer, s.caps());
                row.witness = rep.witness;
                return rep.verdict;
              });
    }
    if (g.order() == 1 || g.order() > s.caps().normal_enum_cap) return;
    if (!is_ct(g, CtMethod::centralizer, s.caps()).verdict) return;
    if (abelian_normal_subgroup(SubgroupSet::whole(g))) return;
    std::optional<SubgroupSet> mono;
    s.check(r, "monolith-simple-nonabelian-ct", true, kConfirms, "monolith-simple-nonabelian", [&](SuiteRow& row) {
      mono = monolith(g, s.caps());
      if (!mono) return false;
      Witness w;
      w.subgroup = mono->elements();
      w.note = "monolith of order " + std::to_string(mono->size());
      row.witness = w;
      const auto [m, embed] = subgroup_as_group(*mono);
      return is_simple(m, s.caps()) && !m.is_abelian() && is_ct(m, CtMethod::centralizer, s.caps()).verdict;
    });
    if (mono) {
      s.check(r, "aut-embedding-kernel-trivial", true, kConfirms, "aut-embedding",
              [&](SuiteRow&) { return conjugation_kernel(g, *mono).is_trivial(); });
      s.check(r, "group-equals-monolith", true, kDerived, "monolith-simple-nonabelian",
              [&](SuiteRow&) { return mono->is_whole(); });
    }
  });
}

void suite_aut_sl2(SuiteRunner& s) {
  for (std::uint32_t f : {2u, 3u}) {
    const std::uint32_t q = 1u << f;
    const std::string r = "sl2:" + std::to_string(q);
    struct Auts {
      std::optional<GroupAutomorphism> alpha, beta, tau;
    };
    auto auts = std::make_shared<Auts>();
    auto get = [&, auts, r]() -> Auts& {
      if (!auts->tau) {
        const FiniteGroup& g = s.group(r);
        auts->alpha = inner_automorphism(g, *find_matrix(g, {1, 1, 0, 1}));
        auts->beta = inner_automorphism(g, *find_matrix(g, {1, 0, 1, 1}));
        auts->tau = frobenius_automorphism(g);
      }
      return *auts;
    };
    s.check(r, "alpha-tau-commute", true, kConfirms, "sl2-automorphisms", [&](SuiteRow&) {
      auto& a = get();
      return equal_automorphisms(compose(*a.alpha, *a.tau), compose(*a.tau, *a.alpha));
    });
    s.check(r, "beta-tau-commute", true, kConfirms, "sl2-automorphisms", [&](SuiteRow&) {
      auto& a = get();
      return equal_automorphisms(compose(*a.beta, *a.tau), compose(*a.tau, *a.beta));
    });
    s.check(r, "alpha-beta-commute", false, kConfirms, "sl2-automorphisms", [&](SuiteRow&) {
      auto& a = get();
      return equal_automorphisms(compose(*a.alpha, *a.beta), compose(*a.beta, *a.alpha));
    });
    s.check(r, "tau-order-" + std::to_string(f), true, kDerived, "frobenius-nonrigid", [&](SuiteRow& row) {
      const std::uint32_t k = automorphism_order(*get().tau);
      row.witness = Witness{{}, {}, std::nullopt, "order " + std::to_string(k)};
      return k == f;
    });
  }
  s.check("psl2:4", "conjugation-kernel-trivial", true, kDerived, "aut-embedding", [&](SuiteRow&) {
    const FiniteGroup& g = s.group("psl2:4");
    return conjugation_kernel(g, SubgroupSet::whole(g)).is_trivial();
  });
  for (std::uint32_t f = 1; f <= 4; ++f) {
    const std::string subject = "GF(" + std::to_string(1u << f) + ")";
    s.check(subject, "frobenius-is-identity", f == 1, kConfirms, "frobenius-nonrigid", [&](SuiteRow&) {
      const FieldSpec k = make_field(FieldKind::finite, 2, f);
      bool identity = true;
      for (const auto& a : elements(k)) {
        const FieldScalar fa = frobenius(a);
        for (const auto& b : elements(k)) {
          if (frobenius(a + b) != fa + frobenius(b) || frobenius(a * b) != fa * frobenius(b)) {
            throw Error(ErrorCode::PreconditionFailed, "squaring is not a field homomorphism on " + k.name());
          }
        }
        identity = identity && fa == a;
      }
      return identity;
    });
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    s.check("GL(2," + std::to_string(q) + ")", "scalar-centralizer", true, kConfirms, "scalar-centralizer",
            [&](SuiteRow&) { return scalar_centralizer_check(q); });
  }
}

void suite_char0(SuiteRunner& s) {
  const FieldSpec qq = FieldSpec::rational();
  const FieldSpec qi = FieldSpec::gaussian_rational();
  s.check("Q", "b-c-commute", true, kConfirms, "char0-triple", [&](SuiteRow&) {
    const ProjMat2 b(Mat2::from_ints(qq, 0, 1, -1, 0));
    const ProjMat2 c(Mat2(FieldScalar::from_rational(qq, Rational(3, 5)), FieldScalar::from_rational(qq, Rational(4, 5)),
                          FieldScalar::from_rational(qq, Rational(-4, 5)), FieldScalar::from_rational(qq, Rational(3, 5))));
    return commutes(b, c);
  });
  s.check("Q", "no-x-y-with-square-sum-minus-one", true, kDerived, "char0-triple", [&](SuiteRow&) {
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int d = 1; d <= 4; ++d) {
          try {
            char0_ct_counterexample(FieldScalar::from_rational(qq, Rational(a, d)),
                                    FieldScalar::from_rational(qq, Rational(b, d)));
            return false;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::PreconditionFailed) throw;
          }
        }
    return true;
  });
  const FieldScalar i = FieldScalar::from_gaussian(0, 1);
  const FieldScalar zero = FieldScalar::zero(qi);
  for (const auto& [x, y, name] : std::vector<std::tuple<FieldScalar, FieldScalar, std::string>>{
           {i, zero, "Q(i) x=i,y=0"}, {zero, i, "Q(i) x=0,y=i"}}) {
    std::optional<ProjTriple> t;
    s.check(name, "construct", true, kConfirms, "char0-triple", [&](SuiteRow& row) {
      t = char0_ct_counterexample(x, y);
      row.witness = Witness{{}, {t->a.to_string(), t->b.to_string(), t->c.to_string()}, std::nullopt, "A, B, C"};
      return true;
    });
    if (!t) continue;
    s.check(name, "a-b-commute", true, kConfirms, "char0-triple", [&](SuiteRow&) { return commutes(t->a, t->b); });
    s.check(name, "b-c-commute", true, kConfirms, "char0-triple", [&](SuiteRow&) { return commutes(t->b, t->c); });
    s.check(name, "a-c-commute", false, kConfirms, "char0-triple", [&](SuiteRow&) { return commutes(t->a, t->c); });
  }
  const ProjTriple tuv = gaussian_tuv_example();
  const std::string g = "Q(i) T,U,V";
  s.check(g, "u-t-commute", true, kConfirms, "gaussian-tuv", [&](SuiteRow&) { return commutes(tuv.b, tuv.a); });
  s.check(g, "u-v-commute", true, kConfirms, "gaussian-tuv", [&](SuiteRow&) { return commutes(tuv.b, tuv.c); });
  s.check(g, "t-v-commute", false, kConfirms, "gaussian-tuv", [&](SuiteRow&) { return commutes(tuv.a, tuv.c); });
  s.check(g, "u-squared-identity", true, kDerived, "gaussian-tuv",
          [&](SuiteRow&) { return (tuv.b * tuv.b).is_identity(); });
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    s.check("GF(" + std::to_string(q) + ")", "minus-one-sum-of-two-squares", true, kDerived, "sum-of-two-squares",
            [&](SuiteRow& row) {
              const FieldSpec k = make_field(FieldKind::finite, q, 1);
              const auto w = sum_of_two_squares(FieldScalar::from_int(k, -1));
              if (w) row.witness = Witness{{}, {w->first.to_string(), w->second.to_string()}, std::nullopt, "x, y"};
              return w.has_value();
            });
  }
}

void suite_axiomatic(SuiteRunner& s) {
  const auto ct = builtin("CT");
  const auto csa = builtin("CSA");
  const Sentence mal = builtin("MAL")[0];
  const Sentence notmal = builtin("NOTMAL")[0];
  for (const char* name : {"CT", "MAL", "NOTMAL"}) {
    s.check(std::string("builtin:") + name, "round-trip", true, kDerived, "axiomatic-classes", [&](SuiteRow&) {
      const Sentence b = builtin(name)[0];
      return parse_sentence(to_string(b)) == b;
    });
  }
  s.check("builtin:MAL", "negation-is-notmal", true, kConfirms, "axiomatic-classes",
          [&](SuiteRow&) { return negate(mal) == notmal; });
  s.for_corpus([&](const std::string& r, const FiniteGroup& g) {
    if (!s.small(g)) return;
    s.check(r, "ct-sentence-agrees", true, kConfirms, "axiomatic-classes", [&](SuiteRow& row) {
      const EvalResult e = evaluate_all(ct, g);
      if (e.assignment) {
        std::vector<Elem> xs;
        for (const auto& [v, x] : *e.assignment) xs.push_back(x);
        row.witness = make_witness(g, xs, "counterexample");
        if (evaluate_matrix(ct[0], g, *e.assignment)) return false;
      }
      return e.verdict == is_ct(g, CtMethod::centralizer, s.caps()).verdict;
    });
    s.check(r, "csa-sentences-agree", true, kConfirms, "axiomatic-classes", [&](SuiteRow&) {
      const EvalResult e = evaluate_all(csa, g);
      if (e.assignment && evaluate_matrix(csa[e.sentence_index], g, *e.assignment)) return false;
      return e.verdict == is_csa(g, CsaMethod::malnormal, s.caps()).verdict;
    });
    s.check(r, "notmal-dual", true, kConfirms, "axiomatic-classes", [&](SuiteRow& row) {
      const EvalResult m = evaluate(mal, g);
      const EvalResult n = evaluate(notmal, g);
      if (n.assignment) {
        std::vector<Elem> xs;
        for (const auto& [v, x] : *n.assignment) xs.push_back(x);
        row.witness = make_witness(g, xs, "NOTMAL witness");
        if (!evaluate_matrix(notmal, g, *n.assignment)) return false;
      }
      if (m.assignment && evaluate_matrix(mal, g, *m.assignment)) return false;
      return n.verdict == !m.verdict;
    });
  });
}

}  // namespace

std::vector<SuiteRow> run_suite(std::string_view name, const Config& config) {
  static const std::map<std::string, std::function<void(SuiteRunner&)>, std::less<>> suites{
      {"lemma22-equivalence", suite_lemma22}, {"wu", suite_wu},
      {"csa-abelian", suite_csa_abelian},     {"pq-example", suite_pq},
      {"psl2-csa", suite_psl2_csa},           {"psl2-ct", suite_psl2_ct},
      {"thm41", suite_thm41},                 {"monolith", suite_monolith},
      {"aut-sl2", suite_aut_sl2},             {"char0-witness", suite_char0},
      {"axiomatic", suite_axiomatic}};
  auto it = suites.find(name);
  if (it == suites.end()) throw Error(ErrorCode::ConfigError, "unknown suite '" + std::string(name) + "'");
  SuiteRunner runner(std::string(name), config);
  it->second(runner);
  return runner.take();
}

std::vector<SuiteRow> run_all(const Config& config) {
  std::vector<SuiteRow> rows;
  for (const auto& name : suite_names()) {
    auto part = run_suite(name, config);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

GroupInfo group_info(std::string_view recipe, const Caps& caps) {
  const Recipe r = parse_recipe(recipe);
  const FiniteGroup g = build_group(r, caps);
  GroupInfo info;
  info.recipe = r.to_string();
  info.order = g.order();
  info.abelian = g.is_abelian();
  info.center_size = center(g).size();
  info.solvable = is_solvable(g);
  info.simple = is_simple(g, caps);
  if (g.order() <= caps.normal_enum_cap) {
    if (auto m = monolith(g, caps)) info.monolith_size = m->size();
  }
  info.ct = is_ct(g, CtMethod::centralizer, caps).verdict;
  info.csa = is_csa(g, CsaMethod::malnormal, caps).verdict;
  info.maximal_abelian_count = maximal_abelian_subgroups(g).size();
  return info;
}

}  // namespace ctcsa
