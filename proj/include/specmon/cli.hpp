// specmon - analysis of finitely presented special monoids
//
// The `specmon` command line. Kept in a header so the test suite can drive
// it in-process.
//
// Exit codes: 0 success, 1 negative verdict requested by a flag
// (--require-overlap-free), 2 input error, 3 budget exhausted.

#ifndef SPECMON_CLI_HPP_
#define SPECMON_CLI_HPP_

#include <algorithm>  // for reverse
#include <cstdint>    // for uint64_t
#include <cstdlib>    // for getenv, strtoull
#include <fstream>    // for ifstream
#include <iomanip>    // for setprecision
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "analysis.hpp"
#include "diophantine.hpp"
#include "generators.hpp"
#include "monoid.hpp"
#include "units.hpp"
#include "wp-language.hpp"

namespace specmon::cli {

  enum ExitCode : int {
    ok              = 0,
    negative        = 1,
    input_error     = 2,
    budget_exceeded = 3,
  };

  struct Flags {
    bool                  json          = false;
    bool                  deterministic = false;
    std::optional<size_t> budget;
    std::uint64_t         seed                 = 0;
    bool                  require_overlap_free = false;
    size_t                max_len              = 4;
    bool                  cnf                  = false;
    std::string           closure              = "none";
    std::optional<size_t> rules;
    size_t                max_interior = 6;
  };

  namespace detail {
    // An Error decorated with the name of the input it came from.
    struct SourcedError {
      std::string source;
      Error       error;
    };

    inline Limits limits_from(Flags const& f) {
      if (f.budget) {
        return Limits::uniform(*f.budget);
      }
      if (char const* env = std::getenv("SPECMON_BUDGET")) {
        char*              end = nullptr;
        unsigned long long n   = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
          return Limits::uniform(static_cast<size_t>(n));
        }
      }
      return Limits{};
    }

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw SourcedError{path, Error(ErrorKind::syntax_error,
                                       "cannot open file")};
      }
      return std::string(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
    }

    template <typename Func>
    auto sourced(std::string const& source, Func&& f) {
      try {
        return f();
      } catch (Error const& e) {
        if (!e.is_input_error()) {
          throw;
        }
        throw SourcedError{source, e};
      }
    }

    inline SpecialSystem load_system(std::string const& path) {
      auto text = read_file(path);
      return sourced(path, [&] { return parse_presentation(text); });
    }

    inline Word load_word(Alphabet const& A, std::string const& text) {
      return sourced("<word>", [&] { return parse_word(A, text); });
    }

    inline std::string words_text(Alphabet const&          A,
                                  std::vector<Word> const& ws) {
      std::string result;
      for (auto const& w : ws) {
        if (!result.empty()) {
          result += ", ";
        }
        result += render_word(A, w);
      }
      return result.empty() ? "(none)" : result;
    }

    inline void print_units(std::ostream&      out,
                            Alphabet const&    A,
                            UnitsReport const& u) {
      out << "units: " << to_string(u.verdict) << " (certificate "
          << to_string(u.certificate) << ")\n";
      if (u.witness) {
        out << "witness: " << render_word(A, *u.witness) << '\n';
      }
      if (u.verdict != UnitsVerdict::unknown) {
        out << "lambda: " << words_text(A, u.lambda) << '\n';
      }
      if (u.delta) {
        out << "delta: " << words_text(A, *u.delta) << '\n';
      } else {
        out << "delta: " << u.delta_note << '\n';
      }
      if (!u.factorizations.empty()) {
        out << "factorizations:\n";
      }
      for (auto const& f : u.factorizations) {
        Word whole;
        for (auto const& x : f) {
          whole.insert(whole.end(), x.begin(), x.end());
        }
        out << "  " << render_word(A, whole) << " =";
        for (auto const& x : f) {
          out << " (" << render_word(A, x) << ")";
        }
        out << '\n';
      }
    }

    inline void print_pairs(std::ostream&                    out,
                            Alphabet const&                  A,
                            std::vector<CriticalPair> const& pairs) {
      for (auto const& cp : pairs) {
        out << to_string(cp.source.kind) << " rules " << cp.source.left_rule
            << "," << cp.source.right_rule << " offset " << cp.source.offset
            << ": " << render_word(A, cp.source.word) << " -> ("
            << render_word(A, cp.left_reduct) << ", "
            << render_word(A, cp.right_reduct) << ")\n";
      }
    }

    inline int cmd_analyze(Flags const& f, std::string const& path,
                           std::ostream& out) {
      AnalyzeOptions opts;
      opts.limits = limits_from(f);
      auto report = analyze(load_system(path), opts);
      if (f.json) {
        out << to_json(report, !f.deterministic).dump(2) << '\n';
      } else {
        auto const& A = report.system.alphabet();
        out << "alphabet_size: " << report.alphabet_size << '\n'
            << "rule_count: " << report.rule_count << '\n'
            << "max_relator_length: " << report.max_relator_length << '\n'
            << "overlap_count: " << report.overlap_count << '\n';
        print_pairs(out, A, report.critical_pairs);
        out << "overlap_free: " << std::boolalpha << report.overlap_free
            << '\n'
            << "confluent: " << report.confluent << '\n';
        print_units(out, A, report.units);
        out << "grammar: " << report.grammar_productions
            << " productions; CNF " << report.cnf_productions
            << " productions over " << report.cnf_nonterminals
            << " nonterminals\n";
        if (!f.deterministic) {
          out << "timings_ms:";
          for (auto const& [name, ms] : report.timings_ms) {
            out << ' ' << name << '=' << std::fixed << std::setprecision(3)
                << ms;
          }
          out << '\n';
        }
      }
      return f.require_overlap_free && !report.overlap_free ? negative : ok;
    }

    inline int cmd_nf(Flags const& f, std::string const& path,
                      std::string const& word, std::ostream& out) {
      RewritingSystem rws(load_system(path));
      Word            w  = load_word(rws.alphabet(), word);
      Word            nf = normal_form(rws, w);
      if (f.json) {
        nlohmann::ordered_json j;
        j["word"]        = word_json(w);
        j["normal_form"] = word_json(nf);
        out << j.dump(2) << '\n';
      } else {
        out << render_word(rws.alphabet(), nf) << '\n';
      }
      return ok;
    }

    inline int cmd_pairs(Flags const& f, std::string const& path,
                         std::ostream& out) {
      auto sys   = load_system(path);
      auto pairs = critical_pairs(sys);
      if (f.json) {
        auto j = nlohmann::ordered_json::array();
        for (auto const& cp : pairs) {
          j.push_back(to_json(cp));
        }
        out << j.dump(2) << '\n';
      } else {
        print_pairs(out, sys.alphabet(), pairs);
        out << "overlap_free: " << std::boolalpha << pairs.empty() << '\n';
      }
      return f.require_overlap_free && !pairs.empty() ? negative : ok;
    }

    inline int cmd_units(Flags const& f, std::string const& path,
                         std::ostream& out) {
      SpecialMonoid m(load_system(path), limits_from(f));
      auto          report = units_trivial(m);
      if (f.json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        print_units(out, m.alphabet(), report);
      }
      return f.require_overlap_free && !m.is_overlap_free() ? negative : ok;
    }

    inline Grammar const& pick_grammar(WordProblemLanguage const& wp,
                                       Flags const&               f,
                                       Grammar&                   storage) {
      if (f.closure == "prefix") {
        return wp.prefix_cnf();
      }
      if (f.closure == "suffix") {
        return wp.suffix_cnf();
      }
      if (f.cnf) {
        return wp.cnf();
      }
      storage = wp.grammar();
      return storage;
    }

    inline int cmd_grammar(Flags const& f, std::string const& path,
                           std::ostream& out, std::ostream& err) {
      SpecialMonoid  m(load_system(path), limits_from(f));
      Grammar        storage;
      Grammar const& g = pick_grammar(m.language(), f, storage);
      if (!m.is_confluent()) {
        err << "warning: the system is not confluent; the grammar generates "
               "the words that rewrite to 1, which may be a proper subset of "
               "the word problem\n";
      }
      if (f.json) {
        auto j     = to_json(g);
        j["exact"] = m.is_confluent();
        out << j.dump(2) << '\n';
      } else {
        out << render(g);
      }
      return ok;
    }

    inline int cmd_member(Flags const& f, std::string const& path,
                          std::string const& word, std::ostream& out,
                          std::ostream& err) {
      SpecialMonoid m(load_system(path), limits_from(f));
      Word          w        = load_word(m.alphabet(), word);
      auto const&   wp       = m.language();
      bool          result   = f.closure == "prefix"   ? wp.is_prefix(w)
                               : f.closure == "suffix" ? wp.is_suffix(w)
                                                       : wp.contains(w);
      if (!m.is_confluent()) {
        err << "warning: the system is not confluent; membership is in the "
               "set of words that rewrite to 1\n";
      }
      if (f.json) {
        nlohmann::ordered_json j;
        j["word"]     = word_json(w);
        j["language"] = f.closure == "none" ? "word_problem" : f.closure;
        j["member"]   = result;
        j["exact"]    = m.is_confluent();
        out << j.dump(2) << '\n';
      } else {
        out << std::boolalpha << result << '\n';
      }
      return ok;
    }

    inline int cmd_solve(Flags const& f, std::string const& path,
                         std::string const& eqs_path, std::ostream& out) {
      SpecialMonoid m(load_system(path), limits_from(f));
      auto          text = read_file(eqs_path);
      auto          eqs  = sourced(
          eqs_path, [&] { return parse_equations(m.alphabet(), text); });
      auto result = sourced(path, [&] {
        return solve_bounded(m, eqs, f.max_len);
      });
      if (f.json) {
        out << to_json(result).dump(2) << '\n';
        return ok;
      }
      switch (result.status) {
        case SolveStatus::solution:
          out << "solution:";
          // declaration order
          for (auto const& v : eqs.variables) {
            out << ' ' << v << '='
                << render_word(m.alphabet(), result.assignment->at(v));
          }
          out << '\n';
          break;
        case SolveStatus::unsatisfiable:
          out << "unsatisfiable: " << result.certificate << '\n';
          break;
        case SolveStatus::no_solution_within_bound:
          out << "no solution with components of length <= " << f.max_len
              << '\n';
          break;
      }
      out << "checked: " << result.checked << '\n';
      return ok;
    }

    inline int cmd_sample(Flags const& f, std::string const& name,
                          std::ostream& out) {
      std::optional<SpecialSystem> sys;
      if (name.empty()) {
        out << "bicyclic\nz2\nintegers\nrandom\n";
        return ok;
      } else if (name == "bicyclic") {
        sys = samples::bicyclic();
      } else if (name == "z2") {
        sys = samples::z2();
      } else if (name == "integers") {
        sys = samples::integers();
      } else if (name == "random") {
        OverlapFreeParams p;
        if (f.rules) {
          p.min_rules = p.max_rules = *f.rules;
        }
        p.max_interior = f.max_interior;
        try {
          sys = random_overlap_free_system(f.seed, p);
        } catch (std::invalid_argument const& e) {
          throw SourcedError{"sample",
                             Error(ErrorKind::syntax_error, e.what())};
        }
      } else {
        throw SourcedError{
            "sample", Error(ErrorKind::syntax_error,
                            "unknown sample '" + name
                                + "' (try bicyclic, z2, integers, random)")};
      }
      if (f.json) {
        out << to_json(*sys).dump(2) << '\n';
      } else {
        out << render_presentation(*sys);
      }
      return ok;
    }

    inline void report(std::ostream& err, SourcedError const& e) {
      err << e.source;
      if (e.error.line() != 0) {
        err << ':' << e.error.line() << ':' << e.error.column();
      }
      err << ": error: " << to_string(e.error.kind()) << ": "
          << e.error.what() << '\n';
    }
  }  // namespace detail

  // args excludes the program name.
  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"Analysis of finitely presented special monoids", "specmon"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags       f;
    std::string file, word, eqs_file, sample_name;

    app.add_flag("--json", f.json, "JSON output");
    app.add_flag("--deterministic", f.deterministic,
                 "Omit timings so that output is byte-reproducible");
    app.add_option("--budget", f.budget,
                   "Cap for every exhaustive search (default 10^6 words, "
                   "10^7 assignments; env SPECMON_BUDGET)");
    app.add_option("--seed", f.seed, "Seed for random samples");
    app.add_flag("--require-overlap-free", f.require_overlap_free,
                 "Exit with status 1 unless the system is overlap-free");

    auto* analyze = app.add_subcommand("analyze", "Full report on a system");
    analyze->add_option("file", file, "Presentation file")->required();

    auto* nf = app.add_subcommand("nf", "Normal form of a word");
    nf->add_option("file", file)->required();
    nf->add_option("word", word)->required();

    auto* pairs = app.add_subcommand("pairs", "Overlaps and critical pairs");
    pairs->add_option("file", file)->required();

    auto* units = app.add_subcommand("units", "Group of units report");
    units->add_option("file", file)->required();

    auto* grammar
        = app.add_subcommand("grammar", "Grammar of the word problem");
    grammar->add_option("file", file)->required();
    grammar->add_flag("--cnf", f.cnf, "Chomsky normal form");
    grammar->add_option("--closure", f.closure, "prefix or suffix closure")
        ->check(CLI::IsMember({"none", "prefix", "suffix"}));

    auto* member = app.add_subcommand("member", "Word problem membership");
    member->add_option("file", file)->required();
    member->add_option("word", word)->required();
    member->add_option("--closure", f.closure, "prefix or suffix closure")
        ->check(CLI::IsMember({"none", "prefix", "suffix"}));

    auto* solve
        = app.add_subcommand("solve", "Bounded search for equation solutions");
    solve->add_option("file", file)->required();
    solve->add_option("equations", eqs_file)->required();
    solve->add_option("--max-len", f.max_len,
                      "Maximum length of each assigned word");

    auto* sample = app.add_subcommand("sample", "Print a built-in system");
    sample->add_option("name", sample_name,
                       "bicyclic, z2, integers or random");
    sample->add_option("--rules", f.rules, "Number of relators (random)");
    sample->add_option("--max-interior", f.max_interior,
                       "Maximum interior length (random)");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "specmon: " << e.what() << '\n';
      return input_error;
    }

    try {
      if (*analyze) {
        return detail::cmd_analyze(f, file, out);
      } else if (*nf) {
        return detail::cmd_nf(f, file, word, out);
      } else if (*pairs) {
        return detail::cmd_pairs(f, file, out);
      } else if (*units) {
        return detail::cmd_units(f, file, out);
      } else if (*grammar) {
        return detail::cmd_grammar(f, file, out, err);
      } else if (*member) {
        return detail::cmd_member(f, file, word, out, err);
      } else if (*solve) {
        return detail::cmd_solve(f, file, eqs_file, out);
      } else if (*sample) {
        return detail::cmd_sample(f, sample_name, out);
      }
    } catch (detail::SourcedError const& e) {
      detail::report(err, e);
      return e.error.is_input_error() ? input_error : budget_exceeded;
    } catch (Error const& e) {
      err << "specmon: error: " << to_string(e.kind()) << ": " << e.what()
          << '\n';
      return e.is_input_error() ? input_error : budget_exceeded;
    }
    return input_error;
  }

}  // namespace specmon::cli

#endif  // SPECMON_CLI_HPP_
