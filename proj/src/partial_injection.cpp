#include "bglab/partial_injection.hpp"

#include <algorithm>
#include <set>

#include "bglab/error.hpp"

namespace bglab {

  PartialInjection PartialInjection::from_pairs(std::size_t universe_size, std::vector<pair_type> pairs) {
    for (auto [x, y] : pairs) {
      if (x >= universe_size || y >= universe_size) {
        throw Error(ErrorCode::index_out_of_range,
                    "pair (" + std::to_string(x) + ", " + std::to_string(y)
                        + ") outside a universe of size " + std::to_string(universe_size),
                    {x, y});
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i].first == pairs[i - 1].first) {
        throw Error(ErrorCode::malformed_input,
                    "point " + std::to_string(pairs[i].first) + " is mapped twice",
                    {pairs[i].first});
      }
    }
    std::vector<element_type> images;
    images.reserve(pairs.size());
    for (auto const& p : pairs) {
      images.push_back(p.second);
    }
    std::sort(images.begin(), images.end());
    auto dup = std::adjacent_find(images.begin(), images.end());
    if (dup != images.end()) {
      throw Error(ErrorCode::not_injective,
                  "two points are mapped to " + std::to_string(*dup),
                  {*dup});
    }
    PartialInjection f(universe_size);
    f._pairs = std::move(pairs);
    return f;
  }

  PartialInjection PartialInjection::identity_on(std::size_t                   universe_size,
                                                 std::span<element_type const> points) {
    std::vector<pair_type> pairs;
    for (element_type x : points) {
      pairs.emplace_back(x, x);
    }
    return from_pairs(universe_size, std::move(pairs));
  }

  std::optional<element_type> PartialInjection::operator()(element_type x) const {
    auto it = std::lower_bound(
        _pairs.begin(), _pairs.end(), x, [](pair_type const& p, element_type v) {
          return p.first < v;
        });
    if (it != _pairs.end() && it->first == x) {
      return it->second;
    }
    return std::nullopt;
  }

  std::vector<element_type> PartialInjection::domain() const {
    std::vector<element_type> result;
    result.reserve(_pairs.size());
    for (auto const& p : _pairs) {
      result.push_back(p.first);
    }
    return result;
  }

  std::vector<element_type> PartialInjection::image() const {
    std::vector<element_type> result;
    result.reserve(_pairs.size());
    for (auto const& p : _pairs) {
      result.push_back(p.second);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  bool PartialInjection::is_idempotent() const {
    return std::all_of(
        _pairs.begin(), _pairs.end(), [](pair_type const& p) { return p.first == p.second; });
  }

  PartialInjection compose(PartialInjection const& f, PartialInjection const& g) {
    if (f.universe_size() != g.universe_size()) {
      throw Error(ErrorCode::universe_mismatch,
                  "cannot compose maps on universes of size " + std::to_string(f.universe_size())
                      + " and " + std::to_string(g.universe_size()),
                  {f.universe_size(), g.universe_size()});
    }
    std::vector<PartialInjection::pair_type> pairs;
    for (auto [x, y] : f.pairs()) {
      if (auto z = g(y)) {
        pairs.emplace_back(x, *z);
      }
    }
    // Already sorted by x, and injective as a composite of injections.
    return PartialInjection::from_pairs(f.universe_size(), std::move(pairs));
  }

  PartialInjection invert(PartialInjection const& f) {
    std::vector<PartialInjection::pair_type> pairs;
    pairs.reserve(f.size());
    for (auto [x, y] : f.pairs()) {
      pairs.emplace_back(y, x);
    }
    return PartialInjection::from_pairs(f.universe_size(), std::move(pairs));
  }

  bool idempotents_commute_in_image(std::span<PartialInjection const> maps) {
    std::set<PartialInjection> members(maps.begin(), maps.end());
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (std::size_t j = 0; j < maps.size(); ++j) {
        if (!members.contains(compose(maps[i], maps[j]))) {
          throw Error(ErrorCode::not_closed,
                      "the product of members " + std::to_string(i) + " and "
                          + std::to_string(j) + " is not in the set",
                      {i, j});
        }
      }
    }
    std::vector<PartialInjection const*> idempotents;
    for (auto const& f : members) {
      if (compose(f, f) == f) {
        idempotents.push_back(&f);
      }
    }
    for (auto const* e : idempotents) {
      for (auto const* f : idempotents) {
        if (compose(*e, *f) != compose(*f, *e)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    template <typename Label>
    std::string render(PartialInjection const& f, Label&& label) {
      std::string out = "{";
      bool        first = true;
      for (auto [x, y] : f.pairs()) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += label(x) + "↦" + label(y);
      }
      return out + "}";
    }
  }  // namespace

  std::string to_string(PartialInjection const& f) {
    return render(f, [](element_type x) { return std::to_string(x); });
  }

  std::string to_string(PartialInjection const& f, FiniteSemigroup const& s) {
    return render(f, [&s](element_type x) { return s.label(x); });
  }

}  // namespace bglab
