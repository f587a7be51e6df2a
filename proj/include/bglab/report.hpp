#pragma once

// Structured reports for the command-line tool. Field names are stable; see
// README.md for the schema.

#include "json.hpp"
#include <string>

#include "bglab/certify.hpp"
#include "bglab/congruence.hpp"
#include "bglab/representation.hpp"
#include "bglab/semigroup.hpp"

namespace bglab {

  using json = nlohmann::json;

  struct ReportOptions {
    std::size_t max_order = default_congruence_order_cap;
  };

  json semigroup_json(FiniteSemigroup const& s);
  json green_json(FiniteSemigroup const& s);
  json block_group_json(FiniteSemigroup const& s);
  json representation_json(FiniteSemigroup const& s, Representation const& rep);
  json congruences_json(FiniteSemigroup const& s, ReportOptions const& options);
  json varieties_json(FiniteSemigroup const& s);
  json fibers_json(FiniteSemigroup const& s);
  json certification_json(CertificationReport const& r);

  // The full analysis: every section above that applies to s.
  json analysis_report(FiniteSemigroup const& s, ReportOptions const& options = {});

  json partition_json(Congruence const& c);

  // Human-readable rendering of a report produced by one of the functions above.
  std::string render_text(json const& report, FiniteSemigroup const* s = nullptr);

}  // namespace bglab
