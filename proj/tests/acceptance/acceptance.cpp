// Acceptance run: one [PASS]/[FAIL] line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "ctcsa/harness.hpp"
#include "ctcsa/psl2.hpp"

using namespace ctcsa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<const SuiteRow*> select(const std::vector<SuiteRow>& rows, const std::string& suite,
                                    const std::string& check, const std::string& subject = {}) {
  std::vector<const SuiteRow*> out;
  for (const auto& r : rows) {
    if (r.suite == suite && r.check == check && (subject.empty() || r.subject == subject)) out.push_back(&r);
  }
  return out;
}

bool all_pass(const std::vector<const SuiteRow*>& rows) {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const SuiteRow* r) { return r->passed(); });
}

bool suite_passes(const std::vector<SuiteRow>& rows, const std::string& suite) {
  bool any = false;
  for (const auto& r : rows) {
    if (r.suite != suite) continue;
    any = true;
    if (!r.passed()) return false;
  }
  return any;
}

struct Outcome {
  bool pass;
  std::string detail;
};

}  // namespace

int main() {
  const Config config = default_config();
  const auto t_full = Clock::now();
  const std::vector<SuiteRow> rows = run_all(config);
  const double full_seconds = seconds_since(t_full);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("AC1 PSL(2,q) order formula, q in {2..16}", [&] {
    const auto t0 = Clock::now();
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      const std::uint64_t want = q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
      if (psl2_group(static_cast<std::uint32_t>(q)).order() != want) return Outcome{false, "q=" + std::to_string(q)};
    }
    const double dt = seconds_since(t0);
    return Outcome{dt < 120.0, std::to_string(dt) + " s"};
  });

  criteria.emplace_back("AC2 three CT characterizations agree on corpus groups of order <= 600", [&] {
    const auto r = select(rows, "lemma22-equivalence", "ct-methods-agree");
    return Outcome{all_pass(r), std::to_string(r.size()) + " groups"};
  });

  criteria.emplace_back("AC3 CSA methods agree and CSA implies CT on the corpus", [&] {
    const auto a = select(rows, "csa-abelian", "csa-methods-agree");
    const auto b = select(rows, "csa-abelian", "csa-implies-ct");
    return Outcome{all_pass(a) && all_pass(b) && b.size() == config.corpus.size(),
                   std::to_string(a.size()) + " agreement rows, " + std::to_string(b.size()) + " implication rows"};
  });

  criteria.emplace_back("AC4 dichotomy: no contradiction; A5 is SimpleCT f=2 via explicit isomorphism", [&] {
    const auto a = select(rows, "wu", "wu-classified");
    const auto b = select(rows, "wu", "simple-ct-f2", "alternating:5");
    return Outcome{all_pass(a) && all_pass(b) && suite_passes(rows, "wu"), std::to_string(a.size()) + " groups"};
  });

  criteria.emplace_back("AC5 every CSA corpus group is abelian", [&] {
    const auto r = select(rows, "csa-abelian", "csa-implies-abelian");
    return Outcome{all_pass(r) && r.size() == config.corpus.size(), std::to_string(r.size()) + " groups"};
  });

  criteria.emplace_back("AC6 PSL(2,q) not CSA for q in {2,3,4,5,7,8}; S3 normal C3 witness", [&] {
    bool ok = true;
    for (const char* q : {"2", "3", "4", "5", "7", "8"}) {
      const auto r = select(rows, "psl2-csa", "csa", std::string("psl2:") + q);
      ok = ok && r.size() == 1 && r[0]->passed() && !r[0]->computed;
    }
    const auto w = select(rows, "psl2-csa", "normal-c3-witness", "psl2:2");
    ok = ok && all_pass(w) && w[0]->witness && w[0]->witness->subgroup && w[0]->witness->subgroup->size() == 3;
    const auto iso = select(rows, "psl2-csa", "isomorphic-to-symmetric:3", "psl2:2");
    return Outcome{ok && all_pass(iso), ""};
  });

  criteria.emplace_back("AC7 CT of PSL(2,q): true for even q, false with witness for 7,9,11,13, 3 and 5 refute", [&] {
    bool ok = true;
    std::string detail;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
      const auto r = select(rows, "psl2-ct", "ct", "psl2:" + std::to_string(q));
      if (r.size() != 1 || !r[0]->passed()) {
        ok = false;
        detail += " q=" + std::to_string(q);
        continue;
      }
      const bool want = q % 2 == 0 || q == 3 || q == 5;
      ok = ok && r[0]->computed == want;
      if (!want) ok = ok && r[0]->witness.has_value() && r[0]->witness->elements.size() == 3;
      if (q == 3 || q == 5) ok = ok && r[0]->paper_claim == PaperClaim::refutes && r[0]->known_refutation;
    }
    const auto t0 = Clock::now();
    const bool ct16 = is_ct(psl2_group(16), CtMethod::centralizer, config.caps).verdict;
    const double dt = seconds_since(t0);
    return Outcome{ok && ct16 && dt < 60.0, "PSL(2,16) " + std::to_string(dt) + " s" + detail};
  });

  criteria.emplace_back("AC8 frobenius(3,7) CT, not CSA; G0 order 21 with A = C7 abelian normal", [&] {
    const auto ct = select(rows, "pq-example", "ct", "frobenius:3,7");
    const auto csa = select(rows, "pq-example", "csa", "frobenius:3,7");
    const auto ext = select(rows, "pq-example", "g0-extraction", "frobenius:3,7");
    return Outcome{all_pass(ct) && ct[0]->computed && all_pass(csa) && !csa[0]->computed && all_pass(ext), ""};
  });

  criteria.emplace_back("AC9 CT and not CSA iff a nonabelian subgroup has a nontrivial abelian normal subgroup", [&] {
    const auto conv = select(rows, "thm41", "converse");
    const auto ext = select(rows, "thm41", "extraction");
    return Outcome{suite_passes(rows, "thm41") && !conv.empty() && !ext.empty(),
                   std::to_string(ext.size()) + " extractions, " + std::to_string(conv.size()) + " converse rows"};
  });

  criteria.emplace_back("AC10 SL(2,4) automorphisms: alpha,beta commute with tau; alpha,beta differ; tau^2 = 1", [&] {
    bool ok = true;
    for (const char* check : {"alpha-tau-commute", "beta-tau-commute", "alpha-beta-commute", "tau-order-2"}) {
      ok = ok && all_pass(select(rows, "aut-sl2", check, "sl2:4"));
    }
    ok = ok && !select(rows, "aut-sl2", "alpha-beta-commute", "sl2:4")[0]->computed;
    ok = ok && all_pass(select(rows, "aut-sl2", "conjugation-kernel-trivial", "psl2:4"));
    return Outcome{ok, ""};
  });

  criteria.emplace_back("AC11 characteristic-zero witnesses (3/5, 4/5 triple; T, U, V over Q(i))", [&] {
    bool ok = all_pass(select(rows, "char0-witness", "b-c-commute", "Q"));
    for (const char* check : {"a-b-commute", "b-c-commute", "a-c-commute"}) {
      ok = ok && all_pass(select(rows, "char0-witness", check, "Q(i) x=i,y=0"));
    }
    for (const char* check : {"u-t-commute", "u-v-commute", "t-v-commute"}) {
      ok = ok && all_pass(select(rows, "char0-witness", check, "Q(i) T,U,V"));
    }
    return Outcome{ok && suite_passes(rows, "char0-witness"), ""};
  });

  criteria.emplace_back("AC12 sentences agree with deciders; NOTMAL = not MAL on corpus groups of order <= 600", [&] {
    const auto ct = select(rows, "axiomatic", "ct-sentence-agrees");
    const auto csa = select(rows, "axiomatic", "csa-sentences-agree");
    const auto dual = select(rows, "axiomatic", "notmal-dual");
    // lemma22 writes one ct-methods-agree row per corpus group of order <= 600.
    const std::size_t small = select(rows, "lemma22-equivalence", "ct-methods-agree").size();
    return Outcome{suite_passes(rows, "axiomatic") && ct.size() == small && csa.size() == small && dual.size() == small,
                   std::to_string(small) + " groups"};
  });

  criteria.emplace_back("AC13 direct products of nonabelian groups are not CT", [&] {
    const auto a = select(rows, "monolith", "direct-product-ct", "direct(symmetric:3,symmetric:3)");
    const auto b = select(rows, "monolith", "direct-product-ct", "direct(alternating:4,cyclic:2)");
    return Outcome{all_pass(a) && !a[0]->computed && all_pass(b) && !b[0]->computed, ""};
  });

  criteria.emplace_back("AC14 two full runs give byte-identical JSON; full run under 5 minutes", [&] {
    const std::string first = emit_json(rows, config, false);
    const std::string second = emit_json(run_all(config), config, false);
    return Outcome{first == second && full_seconds < 300.0 && all_passed(rows),
                   std::to_string(rows.size()) + " rows, " + std::to_string(full_seconds) + " s"};
  });

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
