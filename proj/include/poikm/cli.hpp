#ifndef POIKM_CLI_HPP_
#define POIKM_CLI_HPP_

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "block_monoid.hpp"
#include "congruence.hpp"
#include "enumeration.hpp"
#include "green.hpp"
#include "presentations.hpp"
#include "rank.hpp"
#include "selftest.hpp"
#include "verify.hpp"

namespace poikm::cli {

//! Exit statuses: 0 pass, 1 verification failure, 2 usage or parameter
//! error, 3 overflow or budget refusal.
enum ExitStatus : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_overflow = 3,
};

namespace detail {

inline std::vector<PartialPerm> generators_for(BlockSpec const& spec,
                                               std::string const& choice) {
  if (choice == "abx") {
    return selftest_detail::abx_generators(spec);
  }
  if (choice == "bcx") {
    return selftest_detail::bcx_generators(spec);
  }
  if (choice == "dx") {
    return selftest_detail::dx_generators(spec);
  }
  throw parameter_error("unknown generator choice '" + choice
                        + "' (expected abx, bcx or dx)");
}

//! Default congruence bound: ten times the monoid order, refusing when
//! the order itself is out of desk scale.
inline std::size_t default_bound(BlockSpec const& spec) {
  auto target = size_formula(spec.num_blocks, spec.block_size);
  if (target > 1'000'000) {
    throw budget_error("monoid order " + target.str()
                       + " exceeds 10^6; pass an explicit --bound");
  }
  return static_cast<std::size_t>(10 * target);
}

inline void print_family(std::ostream& os, GeneratorFamily const& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    os << fam.name(i) << " " << fam.members[i] << "\n";
  }
}

}  // namespace detail

//! Runs one subcommand. Arguments exclude the program name. All output
//! is deterministic: identical argv gives byte-identical output.
inline int run(std::vector<std::string> const& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"block-stable order-preserving partial permutation monoids"};
  app.require_subcommand(1);

  std::string spec_text, gens_choice = "dx", preset_text = "dx";
  std::string out_path, map_text;
  std::size_t bound = 0;
  unsigned size_k = 0, size_m = 0;
  bool exhaustive = false;

  auto* size_cmd =
      app.add_subcommand("size", "print the monoid order for k and m");
  size_cmd->add_option("k", size_k, "number of blocks")->required();
  size_cmd->add_option("m", size_m, "block size")->required();

  auto* enum_cmd = app.add_subcommand(
      "enumerate", "enumerate the monoid and export its table");
  enum_cmd->add_option("spec", spec_text, "block spec, e.g. 2x2")->required();
  enum_cmd->add_option("--gens", gens_choice, "abx, bcx or dx");
  enum_cmd->add_option("--out", out_path, "write the table to a file");

  auto* gens_cmd =
      app.add_subcommand("gens", "print every generator family");
  gens_cmd->add_option("spec", spec_text, "block spec")->required();

  auto* green_cmd =
      app.add_subcommand("green", "Green's relation statistics");
  green_cmd->add_option("spec", spec_text, "block spec")->required();

  auto* rank_cmd = app.add_subcommand(
      "rank", "certify the 2k-element generating set is smallest");
  rank_cmd->add_option("spec", spec_text, "block spec")->required();
  rank_cmd->add_flag("--exhaustive", exhaustive,
                     "also run the exhaustive subset search");

  auto* check_cmd = app.add_subcommand(
      "check-relations", "evaluate every relation of a preset");
  check_cmd->add_option("spec", spec_text, "block spec")->required();
  check_cmd->add_option("--preset", preset_text, "abx, bcx or dx");

  auto* verify_cmd = app.add_subcommand(
      "verify-presentation",
      "check a preset presentation defines the monoid");
  verify_cmd->add_option("spec", spec_text, "block spec")->required();
  verify_cmd->add_option("--preset", preset_text, "abx, bcx or dx");
  verify_cmd->add_option("--bound", bound, "congruence class bound");

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "split a member into block map and unit");
  decompose_cmd->add_option("spec", spec_text, "block spec")->required();
  decompose_cmd->add_option("--map", map_text, "member in text form")
      ->required();

  app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    auto reversed = args;
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (size_cmd->parsed()) {
      out << size_formula(size_k, size_m) << "\n";
      return exit_ok;
    }

    if (enum_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      auto table =
          enumerate(spec.degree(), detail::generators_for(spec, gens_choice));
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
          throw parameter_error("cannot open '" + out_path + "'");
        }
        write_table(file, table);
        out << "size=" << table.size() << " written=" << out_path << "\n";
      } else {
        write_table(out, table);
      }
      return exit_ok;
    }

    if (gens_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      detail::print_family(out, x_generators(spec));
      auto abc = abc_generators(spec);
      detail::print_family(out, abc.a);
      detail::print_family(out, abc.b);
      detail::print_family(out, abc.c);
      detail::print_family(out, d_generators(spec));
      return exit_ok;
    }

    if (green_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      auto table = enumerate(spec.degree(),
                             detail::generators_for(spec, "dx"));
      bool orbits = table.size() <= 500;
      auto summary = green_summary(spec, table, orbits);
      for (auto const& cls : summary.classes) {
        out << "J t=" << cls.t << " size=" << cls.actual_size
            << " expected=" << cls.expected_size
            << " r_classes=" << cls.r_classes
            << " l_classes=" << cls.l_classes << " "
            << (cls.size_ok && cls.class_counts_ok ? "ok" : "MISMATCH")
            << "\n";
      }
      out << "chain=" << (summary.chain_ok ? "ok" : "FAIL")
          << " units=" << summary.unit_h_class_size
          << (summary.units_ok ? " ok" : " FAIL") << "\n";
      if (summary.orbit_checked) {
        out << "orbit r=" << (summary.r_matches_domain ? "domain" : "FAIL")
            << " l=" << (summary.l_matches_image ? "image" : "FAIL")
            << " j=" << (summary.j_matches_image_size ? "rank" : "FAIL")
            << " order=" << (summary.j_order_ok ? "chain" : "FAIL") << "\n";
      }
      out << (summary.pass() ? "PASS" : "FAIL") << " green spec="
          << spec.to_string() << "\n";
      return summary.pass() ? exit_ok : exit_verification_failed;
    }

    if (rank_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      auto gens = detail::generators_for(spec, "dx");
      auto table = enumerate(spec.degree(), gens);
      std::vector<std::uint32_t> candidate;
      for (auto const& g : gens) {
        candidate.push_back(*table.index_of(g));
      }
      auto report = rank_lower_bound_check(spec, table, candidate);
      out << "condition_i="
          << (report.image_deficient_ok ? "pass" : "fail")
          << " condition_ii=" << (report.units_generate_ok ? "pass" : "fail")
          << " candidate=" << report.candidate_size
          << " units=" << report.units_generated << "/" << report.units_total
          << "\n";
      bool certified = report.pass()
                       && report.candidate_size == 2 * spec.num_blocks;
      if (exhaustive) {
        auto result = minimal_generating_size(
            table, 2 * spec.num_blocks, 20'000'000,
            image_deficient_requirement(spec, table));
        out << "exhaustive_minimum="
            << (result.found ? std::to_string(result.size) : "exceeds cap")
            << "\n";
        certified = certified && result.found
                    && result.size == 2 * spec.num_blocks;
      }
      out << (certified ? "PASS" : "FAIL") << " rank=" << 2 * spec.num_blocks
          << " spec=" << spec.to_string() << "\n";
      return certified ? exit_ok : exit_verification_failed;
    }

    if (check_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      auto bundle = build_preset(spec.num_blocks, spec.block_size,
                                 parse_preset(preset_text));
      auto report = check_relations(bundle.presentation,
                                    bundle.interpretation);
      for (auto const& f : report.failures) {
        out << "fail " << f.tag << ": " << word_to_string(f.lhs) << " = "
            << word_to_string(f.rhs) << " (" << f.lhs_value << " vs "
            << f.rhs_value << ")\n";
      }
      out << (report.pass() ? "PASS" : "FAIL") << " preset=" << preset_text
          << " relations=" << report.checked
          << " failures=" << report.failures.size() << "\n";
      return report.pass() ? exit_ok : exit_verification_failed;
    }

    if (verify_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      if (bound == 0) {
        bound = detail::default_bound(spec);
      }
      auto verdict =
          verify_presentation(spec, parse_preset(preset_text), bound);
      for (auto const& f : verdict.failures) {
        out << "fail " << f.tag << ": " << word_to_string(f.lhs) << " = "
            << word_to_string(f.rhs) << "\n";
      }
      out << verdict.summary_line() << "\n";
      return verdict.pass() ? exit_ok : exit_verification_failed;
    }

    if (decompose_cmd->parsed()) {
      auto spec = BlockSpec::parse(spec_text);
      auto alpha = PartialPerm::parse(map_text);
      auto const [theta, gamma] = decompose(spec, alpha);
      out << "theta=" << theta << "\n";
      out << "gamma=" << gamma << "\n";
      return exit_ok;
    }

    // selftest
    return run_acceptance(out) ? exit_ok : exit_verification_failed;
  } catch (overflow_error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_overflow;
  } catch (budget_error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_overflow;
  } catch (error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace poikm::cli

#endif  // POIKM_CLI_HPP_
