#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bklrot/automaton.hpp"
#include "bklrot/oracle.hpp"
#include "bklrot/reversing.hpp"
#include "bklrot/rotating_automata.hpp"
#include "bklrot/sigma.hpp"
#include "bklrot/splitting.hpp"
#include "bklrot/witness.hpp"

namespace {

struct Config {
  int strand_count = 0;
  std::size_t oracle_budget = bkl::kDefaultOracleBudget;
  std::size_t reversing_budget = bkl::kDefaultReversingBudget;
  std::string format = "text";
};

std::string entry_or_e(const bkl::Word& w) {
  return w.empty() ? "e" : bkl::format_word(w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotating normal form on dual braid (Birman-Ko-Lee) monoids"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--oracle-budget", cfg.oracle_budget,
                 "word-count budget for brute-force enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--step-budget", cfg.reversing_budget,
                 "step budget for one reversing call")
      ->check(CLI::PositiveNumber);

  std::string word_text;
  int len = 0;
  long k = 1;
  bool raw = false, star = false, minimized = false;

  auto add_n = [&cfg](CLI::App* cmd) {
    cmd->add_option("--n", cfg.strand_count, "strand count")
        ->required()
        ->check(CLI::Range(2, 16));
  };

  CLI::App* normalize = app.add_subcommand("normalize", "rotating normal form");
  add_n(normalize);
  normalize->add_option("word", word_text, "positive word")->required();

  CLI::App* split = app.add_subcommand("split", "phi_n-splitting");
  add_n(split);
  split->add_option("word", word_text, "positive word")->required();

  CLI::App* reverse = app.add_subcommand("reverse", "left-reverse to D^-1 N");
  add_n(reverse);
  reverse->add_option("word", word_text, "signed word")->required();

  CLI::App* accept = app.add_subcommand("accept", "run the rotating-word machine");
  add_n(accept);
  accept->add_option("word", word_text, "positive word")->required();
  accept->add_flag("--raw", raw, "feed the machine directly, without mirroring");

  CLI::App* build = app.add_subcommand("build", "construct the machine");
  add_n(build);
  build->add_flag("--star", star, "closure of P*_n instead of A_n");
  build->add_flag("--minimize", minimized, "minimize before export");
  build->add_option("--format", cfg.format, "dot|text")
      ->check(CLI::IsMember({"dot", "text"}));

  CLI::App* count = app.add_subcommand("count", "accepted words vs. classes");
  add_n(count);
  count->add_option("--len", len, "word length")->required()->check(CLI::NonNegativeNumber);

  CLI::App* sigma = app.add_subcommand("sigma", "sigma-definite representative");
  add_n(sigma);
  sigma->add_option("word", word_text, "signed word")->required();

  CLI::App* witness = app.add_subcommand("witness", "non-automaticity witness pair");
  witness->add_option("--k", k, "witness size")->required()->check(CLI::PositiveNumber);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force oracle queries");
  oracle->require_subcommand(1);
  CLI::App* oracle_count = oracle->add_subcommand("count", "number of classes");
  add_n(oracle_count);
  oracle_count->add_option("--len", len, "word length")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const int n = cfg.strand_count;
    if (*normalize) {
      std::cout << bkl::format_word(bkl::rotating_normal_form(
                       n, bkl::parse_word(word_text, n)))
                << "\n";
    } else if (*split) {
      bkl::Splitting s = bkl::phi_splitting(n, bkl::parse_word(word_text, n));
      for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) std::cout << " | ";
        std::cout << entry_or_e(s.entries[i]);
      }
      std::cout << "\n";
    } else if (*reverse) {
      bkl::Fraction f =
          bkl::left_reverse(n, bkl::parse_word(word_text, n),
                            bkl::ReverseStrategy::kLeftmost, cfg.reversing_budget);
      std::cout << "D: " << bkl::format_word(f.denominator) << "\n";
      std::cout << "N: " << bkl::format_word(f.numerator) << "\n";
    } else if (*accept) {
      bkl::Word w = bkl::parse_word(word_text, n);
      bkl::Dfa a = bkl::build_A(n);
      bool ok = bkl::accepts(a, raw ? w : bkl::mirror(w));
      std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
    } else if (*build) {
      bkl::Dfa m = star ? bkl::close(bkl::build_P_star(n)) : bkl::build_A(n);
      if (minimized) m = bkl::minimize(m);
      std::cout << (cfg.format == "dot" ? bkl::export_dot(m)
                                        : bkl::export_text(m));
    } else if (*count) {
      bkl::Dfa a = bkl::build_A(n);
      std::cout << "automaton=" << bkl::count_accepted(a, len)
                << " oracle=" << bkl::count_classes(n, len, cfg.oracle_budget)
                << "\n";
    } else if (*sigma) {
      bkl::Word rep =
          bkl::sigma_definite_rep(n, bkl::parse_word(word_text, n));
      bkl::SigmaWord artin = bkl::to_artin(n, rep);
      auto [index, verdict] = bkl::sigma_scan(artin);
      (void)index;
      std::cout << bkl::format_word(rep) << "\n";
      std::cout << "artin: " << artin.to_string() << "\n";
      std::cout << "verdict: " << bkl::to_string(verdict) << "\n";
    } else if (*witness) {
      auto [w, wp] = bkl::witness_pair(k);
      bkl::WitnessReport rep = bkl::verify_witness_report(k);
      auto line = [](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
      };
      std::cout << "w:  " << bkl::format_word(w) << "\n";
      std::cout << "w': " << bkl::format_word(wp) << "\n";
      line("w' equals w*1.4", rep.equal_after_a14);
      line("w rotating", rep.w_rotating);
      line("w' rotating", rep.w_prime_rotating);
      line("trailing blocks diverge", rep.tails_diverge);
      if (k == 1) line("delta_3^3 identity", rep.delta_cube);
      std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
      if (!rep.ok()) return 1;
    } else if (*oracle) {
      std::cout << bkl::count_classes(n, len, cfg.oracle_budget) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
