// ctcsa: run theorem suites, summarize groups, evaluate sentences.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ctcsa/harness.hpp"
#include "ctcsa/logic.hpp"
#include "ctcsa/recipe.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool is_usage_error(ctcsa::ErrorCode c) {
  using ctcsa::ErrorCode;
  switch (c) {
    case ErrorCode::ConfigError:
    case ErrorCode::RecipeError:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnboundVariable:
    case ErrorCode::DuplicateBinding:
    case ErrorCode::UnknownBuiltin:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

struct ReportOptions {
  std::string config_path;
  std::string format = "json";
  std::string out;
  bool no_timestamp = false;
};

void add_report_options(CLI::App* cmd, ReportOptions& o) {
  cmd->add_option("--config", o.config_path, "JSON config file (corpus, caps, known_refutations)");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_option("--out", o.out, "Write the report here instead of stdout");
  cmd->add_flag("--no-timestamp", o.no_timestamp, "Leave the header timestamp empty");
}

int emit(const std::vector<ctcsa::SuiteRow>& rows, const ctcsa::Config& config, const ReportOptions& o) {
  const std::string text = o.format == "markdown" ? ctcsa::emit_markdown(rows)
                                                  : ctcsa::emit_json(rows, config, !o.no_timestamp);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    ctcsa::write_file(o.out, text);
  }
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (r.passed()) continue;
    ++failed;
    std::cerr << "FAIL " << r.suite << " " << r.subject << " " << r.check;
    if (!r.error.empty()) std::cerr << ": " << r.error;
    std::cerr << "\n";
  }
  if (!o.out.empty()) std::cerr << rows.size() - failed << "/" << rows.size() << " rows passed\n";
  return failed == 0 ? kPass : kFail;
}

ctcsa::Config config_from(const ReportOptions& o) {
  return o.config_path.empty() ? ctcsa::default_config() : ctcsa::load_config(o.config_path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ctcsa::Error(ctcsa::ErrorCode::IoError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative-transitive and CSA property checks on finite groups"};
  app.require_subcommand(1);

  ReportOptions suite_opts;
  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run one theorem suite, or all");
  suite->add_option("name", suite_name, "Suite name or 'all'")->required();
  add_report_options(suite, suite_opts);

  ReportOptions corpus_opts;
  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  auto* corpus_run = corpus->add_subcommand("run", "Run every suite over the corpus");
  corpus->require_subcommand(1);
  add_report_options(corpus_run, corpus_opts);

  std::string info_recipe;
  auto* info = app.add_subcommand("info", "Structural summary of a group");
  info->add_option("recipe", info_recipe, "Group recipe, e.g. psl2:4")->required();

  std::string sentence_text, sentence_file, builtin_name, group_recipe;
  auto* eval = app.add_subcommand("eval", "Evaluate first-order sentences in a finite group");
  auto* src_sentence = eval->add_option("--sentence", sentence_text, "Sentence text");
  auto* src_file = eval->add_option("--sentence-file", sentence_file, "One sentence per line, '#' comments");
  auto* src_builtin = eval->add_option("--builtin", builtin_name, "CT, MAL, NOTMAL or CSA");
  src_sentence->excludes(src_file)->excludes(src_builtin);
  src_file->excludes(src_builtin);
  eval->add_option("--group", group_recipe, "Group recipe")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (suite->parsed()) {
      const ctcsa::Config config = config_from(suite_opts);
      std::vector<ctcsa::SuiteRow> rows =
          suite_name == "all" ? ctcsa::run_all(config) : ctcsa::run_suite(suite_name, config);
      return emit(rows, config, suite_opts);
    }
    if (corpus_run->parsed()) {
      const ctcsa::Config config = config_from(corpus_opts);
      return emit(ctcsa::run_all(config), config, corpus_opts);
    }
    if (info->parsed()) {
      std::cout << ctcsa::to_json(ctcsa::group_info(info_recipe));
      return kPass;
    }
    if (eval->parsed()) {
      std::vector<ctcsa::Sentence> sentences;
      if (!sentence_text.empty()) {
        sentences.push_back(ctcsa::parse_sentence(sentence_text));
      } else if (!sentence_file.empty()) {
        sentences = ctcsa::parse_sentence_lines(read_text(sentence_file));
      } else if (!builtin_name.empty()) {
        sentences = ctcsa::builtin(builtin_name);
      } else {
        std::cerr << "eval: one of --sentence, --sentence-file or --builtin is required\n";
        return kUsage;
      }
      const ctcsa::FiniteGroup g = ctcsa::build_group(group_recipe);
      bool all_true = true;
      for (const auto& s : sentences) {
        const ctcsa::EvalResult r = ctcsa::evaluate(s, g);
        std::cout << (r.verdict ? "true " : "false") << "  " << ctcsa::to_string(s);
        if (r.assignment) {
          std::cout << "  [";
          const char* sep = "";
          for (const auto& [var, x] : *r.assignment) {
            std::cout << sep << var << "=" << g.label(x);
            sep = ", ";
          }
          std::cout << "]";
        }
        std::cout << "\n";
        all_true = all_true && r.verdict;
      }
      return all_true ? kPass : kFail;
    }
  } catch (const ctcsa::Error& e) {
    std::cerr << "ctcsa: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "ctcsa: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
