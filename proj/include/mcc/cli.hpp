#ifndef MCC_CLI_HPP
#define MCC_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcc/compare.hpp"
#include "mcc/construct.hpp"
#include "mcc/json.hpp"
#include "mcc/sim.hpp"
#include "mcc/validate.hpp"

namespace mcc::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      // not a PDA, or some user failed to decode
  kBadParams = 2,   // parameter or usage error
  kIoError = 3,     // unreadable / unwritable file, malformed PDA text
};

inline std::vector<std::size_t> parse_csv_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("demand list entry '" + item + "' is not a non-negative integer");
    out.push_back(std::stoull(item));
  }
  return out;
}

namespace detail {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw IoError("failed writing '" + path + "'");
}

inline Pda read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  return read_pda(f);
}

}  // namespace detail

/// Runs one subcommand. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic placement delivery arrays for multi-access coded caching", "mcc"};
  app.require_subcommand(1);

  std::size_t K = 0, k = 0, L = 0, N = 0, subfile_size = 64;
  std::uint64_t seed = 0;
  std::string out_path, in_path, demands_csv;
  bool as_json = false;

  auto* construct_cmd = app.add_subcommand("construct", "Build the K x K cyclic PDA and print it as text");
  construct_cmd->add_option("--K", K, "number of users and caches")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--k", k, "sub-files per cache (gamma = k/K)")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--L", L, "caches per user")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--out", out_path, "write the PDA here and print the JSON descriptor");
  construct_cmd->add_flag("--json", as_json, "print the JSON descriptor instead of the PDA");

  auto* validate_cmd = app.add_subcommand("validate", "Check a PDA text file and print the report as JSON");
  validate_cmd->add_option("in", in_path, "PDA text file")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Run placement, delivery and decoding end to end");
  simulate_cmd->add_option("--K", K)->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--L", L)->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--N", N)->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--subfile-size", subfile_size, "bytes per sub-file")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "seed for library contents and demands");
  simulate_cmd->add_option("--demands", demands_csv, "comma-separated file index per user");

  auto* compare_cmd = app.add_subcommand("compare", "Rate, coding gain and sub-packetization per scheme");
  compare_cmd->add_option("--K", K)->required()->check(CLI::PositiveNumber);
  compare_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  compare_cmd->add_option("--L", L)->required()->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Comparison table over every admissible (k, L) as CSV");
  sweep_cmd->add_option("--K", K)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_path, "CSV destination (default stdout)");
  sweep_cmd->add_flag("--json", as_json, "emit JSON instead of CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  }

  try {
    if (*construct_cmd) {
      const SchemeParams params = check_params(K, k, L, K);
      const Pda pda = construct(params);
      const json descriptor = descriptor_json(params, validate(pda));
      if (!out_path.empty()) {
        detail::write_file(out_path, to_text(pda));
        out << descriptor.dump() << '\n';
      } else if (as_json) {
        out << descriptor.dump() << '\n';
      } else {
        write_pda(out, pda);
      }
      return kOk;
    }
    if (*validate_cmd) {
      const ValidationReport report = validate(detail::read_file(in_path));
      out << to_json(report).dump() << '\n';
      return report.is_pda ? kOk : kFailed;
    }
    if (*simulate_cmd) {
      std::optional<std::vector<std::size_t>> demands;
      if (!demands_csv.empty()) {
        try {
          demands = parse_csv_list(demands_csv);
          DemandVector check(*demands, N);
          if (demands->size() != K)
            throw std::invalid_argument("--demands needs exactly K = " + std::to_string(K) + " entries");
        } catch (const std::invalid_argument& e) {
          err << "error: " << e.what() << '\n';
          return kBadParams;
        }
      }
      const SimReport report = simulate(K, k, L, N, subfile_size, seed, demands);
      out << to_json(report).dump() << '\n';
      return report.all_decoded() ? kOk : kFailed;
    }
    if (*compare_cmd) {
      out << to_json(compare(K, k, L)).dump() << '\n';
      return kOk;
    }
    if (*sweep_cmd) {
      const SweepTable table = sweep(K);
      std::ostringstream os;
      if (as_json)
        os << to_json(table).dump() << '\n';
      else
        write_csv(os, table);
      if (out_path.empty())
        out << os.str();
      else
        detail::write_file(out_path, os.str());
      return kOk;
    }
  } catch (const ParamError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const detail::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kBadParams;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace mcc::cli

#endif  // MCC_CLI_HPP
