#include "bglab/certify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bglab/error.hpp"
#include "bglab/representation.hpp"
#include "bglab/variety.hpp"

namespace bglab {

  bool CertificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }

  CheckResult const* CertificationReport::find(std::string_view name) const noexcept {
    auto it = std::find_if(checks.begin(), checks.end(), [&](auto const& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }

  bool witness_is_valid(FiniteSemigroup const& s, BlockGroupWitness const& w) {
    if (w.e == w.f || w.e >= s.order() || w.f >= s.order() || !s.is_idempotent(w.e)
        || !s.is_idempotent(w.f)) {
      return false;
    }
    auto ideal = [&](element_type x) {
      std::set<element_type> out{x};
      for (element_type y = 0; y < s.order(); ++y) {
        out.insert(w.kind == GreenKind::R ? s.product(x, y) : s.product(y, x));
      }
      return out;
    };
    return ideal(w.e) == ideal(w.f);
  }

  namespace {
    std::string describe(PropertyReport const& r) {
      if (r.ok()) {
        return std::to_string(r.checks) + " checks";
      }
      auto const& v   = r.violations.front();
      std::string out = std::to_string(r.violations.size()) + " violations, first: " + v.property + " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v.witness[i]);
      }
      return out + ")";
    }

    std::string describe(OracleResult const& r) {
      if (auto const* c = std::get_if<Congruence>(&r)) {
        return to_string(*c);
      }
      std::string out = "ambiguous:";
      for (auto const& c : std::get<AmbiguityReport>(r).maximal) {
        out += " " + to_string(c);
      }
      return out;
    }
  }  // namespace

  CertificationReport certify(FiniteSemigroup const& s, std::string target, CertifyOptions const& options) {
    CertificationReport report;
    report.target = std::move(target);
    report.order  = s.order();

    auto run = [&report](std::string name, std::function<CheckResult()> const& check) {
      try {
        CheckResult r = check();
        r.name        = std::move(name);
        report.checks.push_back(std::move(r));
      } catch (std::exception const& e) {
        report.checks.push_back({std::move(name), false, e.what()});
      }
    };
    auto from = [](PropertyReport const& r) { return CheckResult{{}, r.ok(), describe(r)}; };

    BlockGroupVerdict verdict{false, std::nullopt};
    run("block-group-criteria", [&] {
      verdict     = is_block_group(s);
      auto const c = block_group_criteria(s);
      return CheckResult{{},
                         c.agree(),
                         std::string("green=") + (c.green_classes ? "1" : "0") + " identity="
                             + (c.identity ? "1" : "0") + " two-sided="
                             + (c.two_sided_identity ? "1" : "0")};
    });
    report.block_group = verdict.is_block_group;

    run("green-compatibility", [&] { return from(verify_green(s)); });

    run("variety-inclusions", [&] {
      bool const inverse = is_inverse_semigroup(s);
      bool const ecom    = is_ecom(s);
      bool const ei      = is_ei(s);
      bool const nil     = is_nilpotent(s);
      bool const bg      = verdict.is_block_group;
      bool const ok      = (!inverse || ecom) && (!ecom || bg) && (!nil || ei) && (!ei || bg);
      return CheckResult{{},
                         ok,
                         std::string("inverse=") + (inverse ? "1" : "0") + " Ecom=" + (ecom ? "1" : "0")
                             + " EI=" + (ei ? "1" : "0") + " N=" + (nil ? "1" : "0")};
    });

    bool const oracles = s.order() <= options.max_order;

    if (!verdict.is_block_group) {
      run("block-group-witness", [&] {
        bool const ok = verdict.witness && witness_is_valid(s, *verdict.witness);
        return CheckResult{{},
                           ok,
                           verdict.witness ? std::string(verdict.witness->kind == GreenKind::R ? "R" : "L")
                                                 + "-class holds " + s.label(verdict.witness->e) + ", "
                                                 + s.label(verdict.witness->f)
                                           : "no witness"};
      });
      if (oracles) {
        run("oracles", [&] {
          return CheckResult{{},
                             true,
                             "regular-separating " + describe(largest_separating_oracle(s, options.max_order))
                                 + "; idempotent-separating "
                                 + describe(largest_idempotent_separating_oracle(s, options.max_order))};
        });
      }
      return report;
    }

    Representation phi, delta;
    run("vagner-preston", [&] {
      phi = vp_representation(s);
      return CheckResult{{}, true, "kernel " + to_string(phi.kernel)};
    });
    run("munn", [&] {
      delta = munn_representation(s);
      return CheckResult{{}, true, "kernel " + to_string(delta.kernel)};
    });
    run("lemmas", [&] { return from(verify_lemmas(s)); });
    run("idempotent-semilattice", [&] { return from(verify_idempotent_semilattice(s)); });
    run("fibers", [&] {
      auto const r = malcev_fiber_check(s);
      return CheckResult{{},
                         r.ok(),
                         std::to_string(r.fibers.size()) + " idempotent fibres, image of size "
                             + std::to_string(r.image_size)};
    });

    if (is_inverse_semigroup(s)) {
      run("inverse-specialization", [&] {
        bool ok = phi.kernel == Congruence::identity(s.order());
        for (element_type x = 0; x < s.order() && ok; ++x) {
          ok = phi[x] == classical_vp_map(s, x) && delta[x] == classical_munn_map(s, x);
        }
        return CheckResult{{}, ok, ok ? "phi and delta match the classical maps" : "mismatch"};
      });
    }

    if (oracles) {
      run("vp-kernel-oracle", [&] {
        auto const r  = largest_separating_oracle(s, options.max_order);
        auto const* c = std::get_if<Congruence>(&r);
        return CheckResult{{}, c && *c == phi.kernel, "oracle " + describe(r) + ", kernel " + to_string(phi.kernel)};
      });
      run("munn-kernel-oracle", [&] {
        auto const r  = largest_idempotent_separating_oracle(s, options.max_order);
        auto const* c = std::get_if<Congruence>(&r);
        return CheckResult{{}, c && *c == delta.kernel, "oracle " + describe(r) + ", kernel " + to_string(delta.kernel)};
      });
      run("kernels-in-lattice", [&] {
        auto const lattice = all_congruences(s, options.max_order);
        bool const ok = std::binary_search(lattice.begin(), lattice.end(), phi.kernel)
                        && std::binary_search(lattice.begin(), lattice.end(), delta.kernel);
        return CheckResult{{}, ok, std::to_string(lattice.size()) + " congruences"};
      });
    } else {
      report.checks.push_back({"oracles",
                               true,
                               "skipped: order " + std::to_string(s.order()) + " exceeds the cap of "
                                   + std::to_string(options.max_order)});
    }
    return report;
  }

}  // namespace bglab
