#include "ctcsa/properties.hpp"

#include <chrono>

#include "ctcsa/psl2.hpp"
#include "ctcsa/subgroups.hpp"

namespace ctcsa {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_triple_cap(const FiniteGroup& g, const Caps& caps, const char* what) {
  if (g.order() > caps.triple_scan_cap) {
    detail::throw_order_cap(caps.triple_scan_cap, std::string(what) + " of " + g.provenance());
  }
}

Elem conj_by_inverse(const FiniteGroup& g, Elem z, Elem y) { return g.mul(g.mul(g.inv(z), y), z); }

std::optional<std::array<Elem, 3>> ct_triple_scan(const FiniteGroup& g) {
  const Elem n = g.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      if (!g.commute(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (g.commute(y, z) && !g.commute(x, z)) return std::array<Elem, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<std::array<Elem, 3>> mal_triple_scan(const FiniteGroup& g) {
  const Elem n = g.order();
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      if (!g.commute(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (g.commute(x, conj_by_inverse(g, z, y)) && !g.commute(y, z)) return std::array<Elem, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

PropertyReport base_report(const FiniteGroup& g, std::string property, std::string method) {
  PropertyReport r;
  r.subject = g.provenance();
  r.property = std::move(property);
  r.method = std::move(method);
  return r;
}

}  // namespace

std::string to_string(PaperClaim c) {
  switch (c) {
    case PaperClaim::confirms: return "confirms";
    case PaperClaim::refutes: return "refutes";
    case PaperClaim::unaddressed: return "unaddressed";
  }
  return "unaddressed";
}

std::string to_string(CtMethod m) {
  switch (m) {
    case CtMethod::centralizer: return "centralizer";
    case CtMethod::triple_scan: return "triple-scan";
    case CtMethod::maximal_abelian: return "maximal-abelian";
  }
  return "?";
}

std::string to_string(CsaMethod m) { return m == CsaMethod::sentence ? "sentence" : "malnormal"; }

std::string to_string(WuClass::Kind k) {
  switch (k) {
    case WuClass::Kind::not_ct: return "NotCT";
    case WuClass::Kind::solvable_ct: return "SolvableCT";
    case WuClass::Kind::simple_ct: return "SimpleCT";
    case WuClass::Kind::contradiction: return "Contradiction";
  }
  return "?";
}

Witness make_witness(const FiniteGroup& g, std::vector<Elem> elements, std::string note) {
  Witness w;
  for (Elem x : elements) w.labels.push_back(g.label(x));
  w.elements = std::move(elements);
  w.note = std::move(note);
  return w;
}

PropertyReport is_ct(const FiniteGroup& g, CtMethod method, const Caps& caps) {
  Stopwatch clock;
  PropertyReport r = base_report(g, "CT", to_string(method));
  r.verdict = true;
  const Elem n = g.order();
  switch (method) {
    case CtMethod::centralizer: {
      std::vector<Elem> cx;
      for (Elem x = 1; x < n && r.verdict; ++x) {
        cx.clear();
        for (Elem y = 0; y < n; ++y) {
          if (g.commute(x, y)) cx.push_back(y);
        }
        for (std::size_t i = 0; i < cx.size() && r.verdict; ++i)
          for (std::size_t j = i + 1; j < cx.size(); ++j) {
            if (!g.commute(cx[i], cx[j])) {
              r.verdict = false;
              r.witness = make_witness(g, {cx[i], x, cx[j]}, "nonabelian centralizer of " + g.label(x));
              break;
            }
          }
      }
      break;
    }
    case CtMethod::triple_scan: {
      require_triple_cap(g, caps, "CT triple scan");
      if (auto t = ct_triple_scan(g)) {
        r.verdict = false;
        r.witness = make_witness(g, {(*t)[0], (*t)[1], (*t)[2]}, "first violating triple");
      }
      break;
    }
    case CtMethod::maximal_abelian: {
      const auto mas = maximal_abelian_subgroups(g);
      for (std::size_t i = 0; i < mas.size() && r.verdict; ++i)
        for (std::size_t j = i + 1; j < mas.size() && r.verdict; ++j) {
          const Bitset meet = mas[i].members() & mas[j].members();
          const auto y = meet.find_next(0);
          if (y == Bitset::npos) continue;
          for (Elem x : mas[i].elements()) {
            for (Elem z : mas[j].elements()) {
              if (!g.commute(x, z)) {
                r.verdict = false;
                r.witness = make_witness(g, {x, static_cast<Elem>(y), z},
                                         "two maximal abelian subgroups share " + g.label(static_cast<Elem>(y)));
                break;
              }
            }
            if (!r.verdict) break;
          }
          if (r.verdict) {
            throw Error(ErrorCode::PreconditionFailed, "distinct maximal abelian subgroups generate an abelian group");
          }
        }
      break;
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

PropertyReport is_csa(const FiniteGroup& g, CsaMethod method, const Caps& caps) {
  Stopwatch clock;
  PropertyReport r = base_report(g, "CSA", to_string(method));
  r.verdict = true;
  if (method == CsaMethod::sentence) {
    require_triple_cap(g, caps, "CSA sentence scan");
    if (auto t = ct_triple_scan(g)) {
      r.verdict = false;
      r.witness = make_witness(g, {(*t)[0], (*t)[1], (*t)[2]}, "CT fails");
    } else if (auto m = mal_triple_scan(g)) {
      r.verdict = false;
      r.witness = make_witness(g, {(*m)[0], (*m)[1], (*m)[2]}, "MAL fails");
    }
  } else {
    for (const auto& a : maximal_abelian_subgroups(g)) {
      const MalnormalResult m = is_malnormal(a);
      if (m.malnormal) continue;
      r.verdict = false;
      const Elem gg = *m.violator;
      const Elem h = *m.witness;
      Witness w = make_witness(g, {gg, h, g.conj(gg, h)},
                               "maximal abelian subgroup " + a.describe() + " is not malnormal");
      w.subgroup = a.elements();
      r.witness = std::move(w);
      break;
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

std::optional<std::array<Elem, 3>> notmal_witness(const FiniteGroup& g, const Caps& caps) {
  require_triple_cap(g, caps, "NOTMAL scan");
  return mal_triple_scan(g);
}

Theorem41Result theorem41_extract(const FiniteGroup& g, const Caps& caps) {
  const PropertyReport ct = is_ct(g, CtMethod::centralizer, caps);
  if (!ct.verdict) throw Error(ErrorCode::NotCT, g.provenance() + " is not CT");
  const auto w = notmal_witness(g, caps);
  if (!w) throw Error(ErrorCode::IsCSA, g.provenance() + " satisfies MAL, so it is CSA");
  const Elem h = (*w)[1];
  SubgroupSet g0 = subgroup_generated(g, *w);
  const Elem seed[] = {h};
  SubgroupSet a = normal_closure_in(g0, seed);
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::PreconditionFailed, "extraction on " + g.provenance() + ": " + what);
  };
  if (g0.is_abelian()) fail("G0 is abelian");
  if (a.is_trivial()) fail("A is trivial");
  if (!a.is_abelian()) fail("A is not abelian");
  if (!is_normal_in(a, g0)) fail("A is not normal in G0");
  return Theorem41Result{*w, std::move(g0), std::move(a)};
}

WuClass wu_classify(const FiniteGroup& g, const Caps& caps) {
  WuClass out;
  if (!is_ct(g, CtMethod::centralizer, caps).verdict) {
    out.kind = WuClass::Kind::not_ct;
    return out;
  }
  if (is_solvable(g)) {
    out.kind = WuClass::Kind::solvable_ct;
    return out;
  }
  out.kind = WuClass::Kind::contradiction;
  if (!is_simple(g, caps)) {
    out.detail = "insoluble CT group that is not simple";
    return out;
  }
  std::uint32_t f = 0;
  for (std::uint32_t k = 2; k <= 8; ++k) {
    if (psl2_order(1u << k) == g.order()) f = k;
  }
  if (f == 0) {
    out.detail = "order " + std::to_string(g.order()) + " is not |PSL(2, 2^f)|";
    return out;
  }
  const FiniteGroup target = psl2_group(1u << f, caps);
  out.iso = is_isomorphic(g, target);
  if (!out.iso.isomorphic) {
    out.detail = "not isomorphic to psl2:" + std::to_string(1u << f);
    return out;
  }
  out.kind = WuClass::Kind::simple_ct;
  out.f = f;
  return out;
}

PropertyReport verify_wu_solvable_structure(const FiniteGroup& g, const Caps& caps) {
  Stopwatch clock;
  if (!is_solvable(g) || !is_ct(g, CtMethod::centralizer, caps).verdict) {
    throw Error(ErrorCode::NotSolvableCT, g.provenance() + " is not a solvable CT group");
  }
  PropertyReport r = base_report(g, "wu-structure", "fitting");
  const SubgroupSet fit = fitting_subgroup(g, caps);
  r.verdict = true;
  if (!fit.is_abelian()) {
    r.verdict = false;
    Witness w = make_witness(g, {}, "Fitting subgroup is nonabelian");
    w.subgroup = fit.elements();
    r.witness = std::move(w);
  }
  for (Elem x = 0; x < g.order() && r.verdict; ++x) {
    if (fit.contains(x)) continue;
    for (Elem y : fit.elements()) {
      if (y != 0 && g.commute(x, y)) {
        r.verdict = false;
        Witness w = make_witness(g, {x, y}, "element outside F fixes a nontrivial element of F");
        w.subgroup = fit.elements();
        r.witness = std::move(w);
        break;
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

std::vector<PropertyReport> csa_implies_abelian_scan(const std::vector<FiniteGroup>& corpus, const Caps& caps) {
  std::vector<PropertyReport> out;
  for (const auto& g : corpus) {
    Stopwatch clock;
    PropertyReport r = base_report(g, "CSA=>abelian", "malnormal");
    const PropertyReport csa = is_csa(g, CsaMethod::malnormal, caps);
    r.verdict = !csa.verdict || g.is_abelian();
    if (!r.verdict) r.witness = make_witness(g, {}, "CSA but nonabelian");
    r.elapsed_seconds = clock.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ctcsa
