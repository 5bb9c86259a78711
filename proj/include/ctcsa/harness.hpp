#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctcsa/caps.hpp"
#include "ctcsa/properties.hpp"

namespace ctcsa {

struct CorpusEntry {
  std::string recipe;
  std::string nickname;
};

struct KnownRefutation {
  std::string suite;
  std::string subject;
  std::string check;
};

struct Config {
  std::vector<CorpusEntry> corpus;
  Caps caps;
  std::vector<KnownRefutation> known_refutations;
};

/// The built-in corpus, caps and known refutations (config/default.json holds
/// the same data).
Config default_config();
/// Parses and validates a JSON config.  Missing keys fall back to the
/// defaults; CTCSA_ORDER_CAP overrides caps.order_cap.  Throws ConfigError.
Config parse_config(std::string_view json_text);
/// Throws IoError or ConfigError.
Config load_config(const std::string& path);
/// Canonical JSON form (sorted keys, two-space indent).
std::string config_to_json(const Config& config);
/// 64-bit FNV-1a of config_to_json, as 16 hex digits.
std::string config_hash(const Config& config);

struct SuiteRow {
  std::string suite;
  std::string subject;
  std::string check;
  bool expected = true;
  bool computed = false;
  PaperClaim paper_claim = PaperClaim::unaddressed;
  std::optional<Witness> witness;
  std::string anchor;  // slug naming the claim the row checks
  std::string error;   // non-empty if the check threw
  bool known_refutation = false;

  /// No error, and either computed == expected or the row is a listed
  /// refutation.
  bool passed() const;
};

/// lemma22-equivalence, wu, csa-abelian, pq-example, psl2-csa, psl2-ct,
/// thm41, monolith, aut-sl2, char0-witness, axiomatic.
const std::vector<std::string>& suite_names();

/// Deterministic rows for one suite.  Throws ConfigError for an unknown name.
std::vector<SuiteRow> run_suite(std::string_view name, const Config& config);
/// Every suite in suite_names() order.
std::vector<SuiteRow> run_all(const Config& config);
bool all_passed(const std::vector<SuiteRow>& rows);

struct GroupInfo {
  std::string recipe;
  std::uint32_t order = 0;
  bool abelian = false;
  std::size_t center_size = 0;
  bool solvable = false;
  bool simple = false;
  std::optional<std::size_t> monolith_size;  // none if not monolithic or above the enumeration cap
  bool ct = false;
  bool csa = false;
  std::size_t maximal_abelian_count = 0;
};

/// Throws RecipeError or OrderCapExceeded.
GroupInfo group_info(std::string_view recipe, const Caps& caps = default_caps());
std::string to_json(const GroupInfo& info);

/// {version, config_hash, header: {timestamp}, suites: [rows], summary}.  With
/// timestamp = false the header carries an empty timestamp.
std::string emit_json(const std::vector<SuiteRow>& rows, const Config& config, bool timestamp = true);
/// One table per suite.
std::string emit_markdown(const std::vector<SuiteRow>& rows);
/// Writes text to a file.  Throws IoError.
void write_file(const std::string& path, const std::string& text);

}  // namespace ctcsa
