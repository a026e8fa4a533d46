#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "permatch/band.hpp"
#include "permatch/colour.hpp"
#include "permatch/io.hpp"
#include "permatch/matching.hpp"

namespace permatch::report {

  using nlohmann::json;

  inline constexpr char const* kSchema = "permatch.report/1";

  //! Skeleton with schema, command, input digest, seed and empty verdict and
  //! witness objects.
  json make(std::string const& command, std::string const& input_digest, std::uint64_t seed);

  json elements(FiniteSemigroup const& S, std::vector<Element> const& xs);
  json matching(FiniteSemigroup const& S, std::vector<Element> const& image);
  json violator(FiniteSemigroup const& S, HallViolator const& v);
  json band(ZeroRectBand const& B);
  json harem(HaremFamily const& H);
  json instance(ColourInstance const& inst);
  json plan(ExchangePlan const& plan);

  ZeroRectBand         band_from(json const& j);
  std::vector<Element> image_from(json const& j);
  ColourInstance       instance_from(json const& j);
  ExchangePlan         plan_from(json const& j, std::size_t balls);

  struct VerifyOutcome {
    std::size_t              checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  //! Re-checks every witness embedded in a report. Witnesses about the
  //! command input are checked against `input`, whose digest must match the
  //! recorded one; search reports carry their own bands.
  VerifyOutcome verify(json const& report, std::string const& input_text);

}  // namespace permatch::report
