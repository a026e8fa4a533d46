#pragma once

// Command implementations behind the permatch executable. Each returns the
// JSON report, a short human-readable summary and the process exit code, so
// the acceptance suite can drive them without spawning processes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permatch/colour.hpp"
#include "permatch/report.hpp"
#include "permatch/transformation.hpp"

namespace permatch::cli {

  inline constexpr int kExitOk     = 0;
  inline constexpr int kExitPrecondition = 4;
  inline constexpr int kExitBudget       = 5;

  struct Options {
    std::uint64_t seed   = 0;
    std::uint64_t budget = kDefaultSolveBudget;
    bool          oracle = false;  // cross-check against the exhaustive oracles
    bool          timing = false;  // adds wall-clock time; breaks byte-identical reruns
  };

  struct Outcome {
    report::json report;
    std::string  text;
    int          exit_code = kExitOk;
  };

  //! Largest order on which --oracle runs the backtracking searches.
  inline constexpr std::size_t kOracleMaxOrder = 16;

  // Inputs are file contents; Cayley tables and band patterns are told apart
  // by the first line.
  Outcome analyze(std::string const& input, Options const& opts);
  Outcome match(std::string const& input, Options const& opts);
  Outcome involution(std::string const& input, Options const& opts);
  Outcome factors(std::string const& input, Options const& opts);

  Outcome band_check(std::string const& band_text, Options const& opts);
  Outcome band_harem(std::string const& band_text, Options const& opts);
  Outcome band_involution(std::string const& band_text, Options const& opts);

  Outcome colour_solve(std::string const& instance_text, Options const& opts);
  //! Derives the instance from a band and a matching of it (found with
  //! Hopcroft-Karp when matching_text is empty), solves it and, on success,
  //! builds the involution of the band.
  Outcome colour_reduce(std::string const&                band_text,
                        std::optional<std::string> const& matching_text,
                        Options const&                    opts);

  struct Generated {
    std::string table;       // Cayley table format with labels
    std::string dictionary;  // "index image-sequence" lines
  };
  Generated gen(Family family, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

  struct SeparatorSearch {
    std::size_t         m_min = 1, m_max = 3;
    std::size_t         n_min = 1, n_max = 4;
    //! shapes with m * n at most this are enumerated, larger ones sampled
    std::size_t         exhaustive_cells = 12;
    std::vector<double> densities        = {0.3, 0.5, 0.7};
    std::size_t         samples          = 20;  // per shape and density
  };
  //! Throws ParameterOutOfRange.
  Outcome search_separators(SeparatorSearch const& params, Options const& opts);

  struct FamilySearch {
    Family      family = Family::On;
    std::size_t n_min = 1, n_max = 8;
    std::size_t oracle_max_n    = 3;
    std::size_t involution_max_n = 5;
  };
  //! Throws ParameterOutOfRange.
  Outcome search_family(FamilySearch const& params, Options const& opts);

  //! Re-verifies a saved report against the input it was produced from.
  Outcome verify(std::string const& report_text, std::string const& input);

}  // namespace permatch::cli
