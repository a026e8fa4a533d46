#pragma once

// Plain-text interchange formats.
//
//   Cayley table:  "n", then n lines of n space-separated 0-based indices,
//                  optionally followed by "# labels: l0 l1 ...".
//   Band:          "m n", then m lines of n characters '0'/'1' (E).
//   Colour instance: "m n", then m*n lines "girl colour".
//   Exchange plan: one "i j" line per non-vacuous exchange.
//   Matching:      one line of n space-separated images.

#include <istream>
#include <ostream>
#include <string>
#include <variant>

#include "permatch/band.hpp"
#include "permatch/colour.hpp"
#include "permatch/permutation.hpp"
#include "permatch/semigroup.hpp"

namespace permatch::io {

  //! Parses without validating associativity. Throws ParseError.
  FiniteSemigroup read_cayley(std::istream& in);
  void            write_cayley(std::ostream& out, FiniteSemigroup const& S);

  ZeroRectBand read_band(std::istream& in);
  void         write_band(std::ostream& out, ZeroRectBand const& B);

  ColourInstance read_instance(std::istream& in);
  void           write_instance(std::ostream& out, ColourInstance const& inst);

  //! balls is the instance size; unmentioned balls are vacuous.
  ExchangePlan read_plan(std::istream& in, std::size_t balls);
  void         write_plan(std::ostream& out, ExchangePlan const& plan);

  std::vector<Element> read_matching(std::istream& in);
  void                 write_matching(std::ostream& out, std::vector<Element> const& p);

  using SemigroupInput = std::variant<FiniteSemigroup, ZeroRectBand>;

  //! A Cayley table or a band, told apart by the first line.
  SemigroupInput read_semigroup_input(std::string const& text);

  //! Whole file ("-" for standard input). Throws ParseError if unreadable.
  std::string slurp(std::string const& path);

  //! FNV-1a 64-bit digest, as 16 hex digits.
  std::string digest(std::string const& bytes);

}  // namespace permatch::io
