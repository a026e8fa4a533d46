#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permatch/band.hpp"
#include "permatch/permutation.hpp"

namespace permatch {

  struct Ball {
    std::size_t girl   = 0;
    std::size_t colour = 0;

    bool operator==(Ball const&) const = default;
  };

  //! m girls holding n balls each, m balls of each of n colours.
  struct ColourInstance {
    std::size_t       girls   = 0;
    std::size_t       colours = 0;
    std::vector<Ball> balls;
    //! ball -> (row a, column alpha) of the band element it came from
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> provenance;

    //! Each girl holds n balls and each colour has m balls.
    bool well_formed() const;

    //! counts[g * colours + c]
    std::vector<std::size_t> colour_counts() const;
  };

  //! An involution on ball indices; partner[x] == x is a vacuous exchange.
  struct ExchangePlan {
    std::vector<std::size_t> partner;

    //! Non-vacuous exchanges (i, j) with i < j, increasing.
    std::vector<std::pair<std::size_t, std::size_t>> exchanges() const;

    static ExchangePlan vacuous(std::size_t balls);
  };

  enum class SolveStatus { solved, unsolvable, budget_exhausted };

  struct SolveResult {
    SolveStatus                 status = SolveStatus::unsolvable;
    std::optional<ExchangePlan> plan;
    std::uint64_t               nodes = 0;
  };

  inline constexpr std::uint64_t kDefaultSolveBudget = 2'000'000;

  //! Exact search for a plan after which every girl holds one ball of every
  //! colour. Branches on a (girl, missing colour) pair with the fewest
  //! options, over every exchange that can bring that colour to her; balls
  //! of equal girl and colour are interchangeable, so only the least
  //! unassigned one is tried. Throws MalformedInstance.
  SolveResult solve(ColourInstance const& instance,
                    std::uint64_t         node_budget = kDefaultSolveBudget);

  //! Applies the exchanges and checks the final holdings. Returns false if
  //! plan is not an involution. Throws IndexOutOfRange.
  bool verify_plan(ColourInstance const& instance, ExchangePlan const& plan);

  //! Girl a receives one ball of colour phi(a, alpha)_2 for each column
  //! alpha. Throws NotAMatching unless phi is a matching of to_semigroup(B)
  //! fixing 0.
  ColourInstance instance_from_matching(ZeroRectBand const&        B,
                                        PermutationMatching const& phi);

  //! The involution Phi(a, phi(b,beta)_2) = (b, phi(a,alpha)_2) for each
  //! exchanged pair of balls with origins (a, alpha) and (b, beta), and
  //! Phi(0) = 0. Throws PlanInstanceMismatch, WellDefinednessViolation.
  InvolutionMatching involution_from_plan(ZeroRectBand const&        B,
                                          PermutationMatching const& phi,
                                          ColourInstance const&      instance,
                                          ExchangePlan const&        plan);

}  // namespace permatch
