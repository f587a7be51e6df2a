#include "bglab/report.hpp"

#include <sstream>

#include "bglab/error.hpp"
#include "bglab/variety.hpp"

namespace bglab {

  namespace {
    json optional_json(std::optional<element_type> x) {
      return x ? json(*x) : json(nullptr);
    }

    json blocks_from_ids(std::vector<std::size_t> const& ids) {
      return partition_json(Congruence::from_class_ids(ids));
    }

    json oracle_json(OracleResult const& r) {
      if (auto const* c = std::get_if<Congruence>(&r)) {
        return {{"unique", true}, {"congruence", partition_json(*c)}, {"maximal", json::array({partition_json(*c)})}};
      }
      json maximal = json::array();
      for (auto const& c : std::get<AmbiguityReport>(r).maximal) {
        maximal.push_back(partition_json(c));
      }
      return {{"unique", false}, {"congruence", nullptr}, {"maximal", maximal}};
    }

    std::string list_text(json const& values, FiniteSemigroup const* s) {
      std::string out = "{";
      bool        first = true;
      for (auto const& v : values) {
        out += (first ? "" : ", ");
        first = false;
        out += s ? s->label(v.get<element_type>()) : v.dump();
      }
      return out + "}";
    }

    std::string partition_text(json const& blocks, FiniteSemigroup const* s) {
      std::string out = "{";
      bool        first = true;
      for (auto const& b : blocks) {
        out += (first ? "" : ", ") + list_text(b, s);
        first = false;
      }
      return out + "}";
    }

    std::string yes(bool b) {
      return b ? "yes" : "no";
    }
  }  // namespace

  json partition_json(Congruence const& c) {
    return c.blocks();
  }

  json semigroup_json(FiniteSemigroup const& s) {
    auto const& reg = s.regularity();
    json        regular = json::array();
    for (element_type x = 0; x < s.order(); ++x) {
      if (reg.is_regular[x]) {
        regular.push_back(x);
      }
    }
    return {{"order", s.order()},
            {"labels", s.labels()},
            {"has_adjoined_identity", s.has_adjoined_identity()},
            {"identity", optional_json(s.identity())},
            {"zero", optional_json(s.zero())},
            {"idempotents", reg.idempotents},
            {"regular", regular},
            {"inverses", reg.inverses}};
  }

  json green_json(FiniteSemigroup const& s) {
    auto const& g = s.green();
    return {{"r_classes", blocks_from_ids(g.r_class_id)},
            {"l_classes", blocks_from_ids(g.l_class_id)},
            {"h_classes", blocks_from_ids(g.h_class_id)},
            {"d_classes", blocks_from_ids(g.d_class_id)}};
  }

  json block_group_json(FiniteSemigroup const& s) {
    auto const v = is_block_group(s);
    auto const c = block_group_criteria(s);
    json       witness = nullptr;
    if (v.witness) {
      witness = {{"e", v.witness->e},
                 {"f", v.witness->f},
                 {"class", v.witness->kind == GreenKind::R ? "R" : "L"}};
    }
    return {{"is_block_group", v.is_block_group},
            {"witness", witness},
            {"identity_holds", c.identity},
            {"two_sided_identity_holds", c.two_sided_identity},
            {"inverse_semigroup", is_inverse_semigroup(s)}};
  }

  json representation_json(FiniteSemigroup const& s, Representation const& rep) {
    json maps = json::array();
    for (auto const& r : rep.elements) {
      maps.push_back({{"element", r.source},
                      {"domain_kind", r.domain_kind == DomainKind::d_to_i ? "D->I" : "R->L"},
                      {"domain", r.map.domain()},
                      {"image", r.map.image()},
                      {"pairs", r.map.pairs()},
                      {"text", to_string(r.map, s)}});
    }
    return {{"kind", rep.kind == RepresentationKind::munn ? "munn" : "vagner-preston"},
            {"maps", maps},
            {"kernel", partition_json(rep.kernel)},
            {"injective", rep.kernel.class_count() == s.order()}};
  }

  json congruences_json(FiniteSemigroup const& s, ReportOptions const& options) {
    if (s.order() > options.max_order) {
      return {{"skipped",
               "order " + std::to_string(s.order()) + " exceeds --max-order "
                   + std::to_string(options.max_order)}};
    }
    json lattice = json::array();
    for (auto const& c : all_congruences(s, options.max_order)) {
      lattice.push_back(partition_json(c));
    }
    auto const regular    = largest_separating_oracle(s, options.max_order);
    auto const idempotent = largest_idempotent_separating_oracle(s, options.max_order);
    json       out{{"count", lattice.size()},
                   {"lattice", lattice},
                   {"largest_regular_separating", oracle_json(regular)},
                   {"largest_idempotent_separating", oracle_json(idempotent)}};
    if (is_block_group(s)) {
      auto const* r = std::get_if<Congruence>(&regular);
      auto const* i = std::get_if<Congruence>(&idempotent);
      out["vp_kernel_matches"]   = r && *r == vp_representation(s).kernel;
      out["munn_kernel_matches"] = i && *i == munn_representation(s).kernel;
    }
    return out;
  }

  json varieties_json(FiniteSemigroup const& s) {
    return {{"BG", is_block_group(s).is_block_group},
            {"Ecom", is_ecom(s)},
            {"EI", is_ei(s)},
            {"N", is_nilpotent(s)},
            {"inverse", is_inverse_semigroup(s)}};
  }

  json fibers_json(FiniteSemigroup const& s) {
    auto const r      = malcev_fiber_check(s);
    json       fibers = json::array();
    for (auto const& f : r.fibers) {
      fibers.push_back({{"idempotent", to_string(f.idempotent, s)},
                        {"members", f.members},
                        {"subsemigroup", f.is_subsemigroup},
                        {"nilpotent", f.is_nilpotent}});
    }
    return {{"image_size", r.image_size}, {"image_ecom", r.image_ecom}, {"fibers", fibers}, {"ok", r.ok()}};
  }

  json certification_json(CertificationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"target", r.target},
            {"order", r.order},
            {"block_group", r.block_group},
            {"passed", r.passed()},
            {"checks", checks}};
  }

  json analysis_report(FiniteSemigroup const& s, ReportOptions const& options) {
    json report{{"semigroup", semigroup_json(s)},
                {"green", green_json(s)},
                {"block_group", block_group_json(s)},
                {"varieties", varieties_json(s)},
                {"congruences", congruences_json(s, options)}};
    if (is_block_group(s)) {
      report["vagner_preston"] = representation_json(s, vp_representation(s));
      report["munn"]           = representation_json(s, munn_representation(s));
      report["fibers"]         = fibers_json(s);
    }
    return report;
  }

  std::string render_text(json const& report, FiniteSemigroup const* s) {
    std::ostringstream out;
    if (report.contains("semigroup")) {
      auto const& g = report["semigroup"];
      out << "order: " << g["order"] << '\n';
      if (s) {
        out << "elements:";
        for (element_type x = 0; x < s->order(); ++x) {
          out << ' ' << x << '=' << s->label(x);
        }
        out << '\n';
      }
      out << "idempotents: " << list_text(g["idempotents"], s) << '\n';
      out << "regular: " << list_text(g["regular"], s) << '\n';
    }
    if (report.contains("green")) {
      auto const& g = report["green"];
      for (char const* k : {"r_classes", "l_classes", "h_classes", "d_classes"}) {
        out << std::string(1, char(std::toupper(k[0]))) << "-classes: " << partition_text(g[k], s) << '\n';
      }
    }
    if (report.contains("block_group") && report["block_group"].is_object()) {
      auto const& b = report["block_group"];
      out << "block-group: " << yes(b["is_block_group"]) << '\n';
      if (!b["witness"].is_null()) {
        auto const& w = b["witness"];
        auto        e = w["e"].get<element_type>(), f = w["f"].get<element_type>();
        out << "  witness: idempotents " << (s ? s->label(e) : std::to_string(e)) << " and "
            << (s ? s->label(f) : std::to_string(f)) << " share an " << w["class"].get<std::string>()
            << "-class\n";
      }
      out << "  (x^w y^w)^w = (y^w x^w)^w: " << yes(b["identity_holds"]) << '\n';
      out << "  two-sided identity: " << yes(b["two_sided_identity_holds"]) << '\n';
      out << "  inverse semigroup: " << yes(b["inverse_semigroup"]) << '\n';
    }
    if (report.contains("varieties")) {
      auto const& v = report["varieties"];
      out << "varieties:";
      for (auto const& [k, val] : v.items()) {
        out << ' ' << k << '=' << (val.get<bool>() ? "1" : "0");
      }
      out << '\n';
    }
    for (char const* key : {"vagner_preston", "munn"}) {
      if (!report.contains(key)) {
        continue;
      }
      auto const& r = report[key];
      out << (std::string(key) == "munn" ? "Munn representation" : "Vagner-Preston representation")
          << ":\n";
      for (auto const& m : r["maps"]) {
        auto const x = m["element"].get<element_type>();
        out << "  " << (s ? s->label(x) : std::to_string(x)) << " [" << m["domain_kind"].get<std::string>()
            << "]: " << m["text"].get<std::string>() << '\n';
      }
      out << "  kernel: " << partition_text(r["kernel"], s) << '\n';
      out << "  injective: " << yes(r["injective"]) << '\n';
    }
    if (report.contains("congruences")) {
      auto const& c = report["congruences"];
      if (c.contains("skipped")) {
        out << "congruences: skipped (" << c["skipped"].get<std::string>() << ")\n";
      } else {
        out << "congruences: " << c["count"] << '\n';
        for (auto const& p : c["lattice"]) {
          out << "  " << partition_text(p, s) << '\n';
        }
        for (char const* k : {"largest_regular_separating", "largest_idempotent_separating"}) {
          auto const& o = c[k];
          out << k << ": ";
          if (o["unique"].get<bool>()) {
            out << partition_text(o["congruence"], s) << '\n';
          } else {
            out << "no unique maximum; maximal:";
            for (auto const& p : o["maximal"]) {
              out << ' ' << partition_text(p, s);
            }
            out << '\n';
          }
        }
        if (c.contains("vp_kernel_matches")) {
          out << "ker(phi) equals the largest regular-separating congruence: "
              << yes(c["vp_kernel_matches"]) << '\n';
          out << "ker(delta) equals the largest idempotent-separating congruence: "
              << yes(c["munn_kernel_matches"]) << '\n';
        }
      }
    }
    if (report.contains("fibers")) {
      auto const& f = report["fibers"];
      out << "fibres over idempotents of Im(phi) (image size " << f["image_size"] << ", idempotents commute: "
          << yes(f["image_ecom"]) << "):\n";
      for (auto const& fib : f["fibers"]) {
        out << "  " << fib["idempotent"].get<std::string>() << " <- " << list_text(fib["members"], s)
            << " nilpotent: " << yes(fib["nilpotent"]) << '\n';
      }
    }
    if (report.contains("checks")) {
      out << "certify " << report["target"].get<std::string>() << " (order " << report["order"]
          << ", block-group " << yes(report["block_group"]) << ")\n";
      for (auto const& c : report["checks"]) {
        out << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>()
            << ": " << c["detail"].get<std::string>() << '\n';
      }
    }
    return out.str();
  }

}  // namespace bglab
