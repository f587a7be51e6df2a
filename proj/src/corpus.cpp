#include "bglab/corpus.hpp"

#include <map>

#include "bglab/error.hpp"
#include "bglab/partial_injection.hpp"

namespace bglab {

  namespace {
    template <typename Product>
    FiniteSemigroup tabulate(std::size_t n, Product&& product, std::vector<std::string> labels = {}) {
      std::vector<std::vector<element_type>> entries(n, std::vector<element_type>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          entries[i][j] = element_type(product(i, j));
        }
      }
      return load_table(n, entries, std::move(labels));
    }

    Dfa make_dfa(std::size_t                           states,
                 std::vector<std::string>              alphabet,
                 std::vector<std::vector<std::size_t>> transition,
                 std::vector<bool>                     accepting) {
      Dfa dfa{states, std::move(alphabet), std::move(transition), 0, std::move(accepting)};
      validate(dfa);
      return dfa;
    }
  }  // namespace

  FiniteSemigroup cyclic_group(std::size_t n) {
    return tabulate(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; });
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    return tabulate(n, [](std::size_t i, std::size_t j) { return std::min(i, j); });
  }

  FiniteSemigroup left_zero_semigroup(std::size_t n) {
    return tabulate(n, [](std::size_t i, std::size_t) { return i; });
  }

  FiniteSemigroup right_zero_semigroup(std::size_t n) {
    return tabulate(n, [](std::size_t, std::size_t j) { return j; });
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      labels.push_back(std::string(1, char('a' + i)));
    }
    labels.emplace_back("0");
    return tabulate(n, [n](std::size_t, std::size_t) { return n - 1; }, std::move(labels));
  }

  FiniteSemigroup monogenic_semigroup(std::size_t index, std::size_t period) {
    std::size_t const n = index + period - 1;
    // Element i stands for a^(i + 1).
    auto reduce = [index, period](std::size_t exponent) {
      while (exponent >= index + period) {
        exponent -= period;
      }
      return exponent;
    };
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return tabulate(
        n, [&](std::size_t i, std::size_t j) { return reduce(i + j + 2) - 1; }, std::move(labels));
  }

  FiniteSemigroup brandt_semigroup(std::size_t n) {
    std::size_t const        zero = n * n;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
    labels.emplace_back("0");
    return tabulate(
        zero + 1,
        [n, zero](std::size_t a, std::size_t b) {
          if (a == zero || b == zero || a % n != b / n) {
            return zero;
          }
          return (a / n) * n + b % n;
        },
        std::move(labels));
  }

  FiniteSemigroup full_transformation_monoid(std::size_t n) {
    std::vector<Transformation> all;
    Transformation              t(n, 0);
    while (true) {
      all.push_back(t);
      std::size_t i = 0;
      while (i < n && ++t[i] == n) {
        t[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return generate_from_transformations(n, all);
  }

  FiniteSemigroup symmetric_inverse_monoid(std::size_t n) {
    // Each point maps to a target in [0, n) or to n ("undefined").
    std::vector<PartialInjection> all;
    std::vector<element_type>     image(n, 0);
    while (true) {
      std::vector<PartialInjection::pair_type> pairs;
      std::vector<bool>                        used(n, false);
      bool                                     injective = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (image[x] < n) {
          injective = injective && !used[image[x]];
          used[image[x]] = true;
          pairs.emplace_back(element_type(x), image[x]);
        }
      }
      if (injective) {
        all.push_back(PartialInjection::from_pairs(n, std::move(pairs)));
      }
      std::size_t i = 0;
      while (i < n && ++image[i] == n + 1) {
        image[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    std::map<PartialInjection, std::size_t> index;
    std::vector<std::string>                labels;
    for (std::size_t i = 0; i < all.size(); ++i) {
      index.emplace(all[i], i);
      std::string label = to_string(all[i]);
      std::erase(label, ' ');
      labels.push_back(std::move(label));
    }
    return tabulate(
        all.size(),
        [&](std::size_t i, std::size_t j) { return index.at(compose(all[i], all[j])); },
        std::move(labels));
  }

  Dfa dfa_all_words() {
    return make_dfa(1, {"a"}, {{0}}, {true});
  }

  Dfa dfa_even_length() {
    return make_dfa(2, {"a"}, {{1}, {0}}, {true, false});
  }

  Dfa dfa_ends_in_b() {
    return make_dfa(2, {"a", "b"}, {{0, 1}, {0, 1}}, {false, true});
  }

  std::vector<NamedSemigroup> const& corpus() {
    static std::vector<NamedSemigroup> const members = [] {
      // A block-group whose idempotents e, f do not commute: ef = 0, fe = x.
      FiniteSemigroup noncommuting = load_table(
          4, {{0, 3, 3, 3}, {2, 1, 2, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}}, {"e", "f", "x", "0"});
      return std::vector<NamedSemigroup>{
          {"trivial", cyclic_group(1)},
          {"Z2", cyclic_group(2)},
          {"Z3", cyclic_group(3)},
          {"chain2", chain_semilattice(2)},
          {"chain3", chain_semilattice(3)},
          {"left-zero2", left_zero_semigroup(2)},
          {"right-zero2", right_zero_semigroup(2)},
          {"null2", null_semigroup(2)},
          {"null3", null_semigroup(3)},
          {"monogenic-a3=a2", monogenic_semigroup(2, 1)},
          {"monogenic-a5=a3", monogenic_semigroup(3, 2)},
          {"B2", brandt_semigroup(2)},
          {"B3", brandt_semigroup(3)},
          {"T2", full_transformation_monoid(2)},
          {"I2", symmetric_inverse_monoid(2)},
          {"null2-with-identity", adjoin_identity(null_semigroup(2))},
          {"bg-noncommuting", noncommuting},
          {"syn-a-star", syntactic_monoid(dfa_all_words())},
          {"syn-even-length", syntactic_monoid(dfa_even_length())},
          {"syn-ends-in-b", syntactic_monoid(dfa_ends_in_b())},
      };
    }();
    return members;
  }

  std::optional<FiniteSemigroup> find_in_corpus(std::string_view name) {
    for (auto const& m : corpus()) {
      if (m.name == name) {
        return m.semigroup;
      }
    }
    return std::nullopt;
  }

  std::vector<FiniteSemigroup> all_associative_tables(std::size_t n) {
    std::vector<FiniteSemigroup> result;
    if (n == 0) {
      return result;
    }
    // Cells are filled in row-major order, smallest value first, so tables
    // come out in lexicographic order. After each assignment every triple
    // whose four products are already defined must associate.
    constexpr element_type    unset = element_type(-1);
    std::vector<element_type> table(n * n, unset);
    auto at = [&](element_type a, element_type b) {
      return table[a * n + b];
    };
    auto consistent = [&] {
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          element_type const ab = at(a, b);
          if (ab == unset) {
            continue;
          }
          for (element_type c = 0; c < n; ++c) {
            element_type const bc = at(b, c);
            if (bc == unset) {
              continue;
            }
            element_type const left  = at(ab, c);
            element_type const right = at(a, bc);
            if (left != unset && right != unset && left != right) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto fill = [&](auto&& self, std::size_t cell) -> void {
      if (cell == n * n) {
        std::vector<std::vector<element_type>> entries(n);
        for (std::size_t i = 0; i < n; ++i) {
          entries[i].assign(table.begin() + i * n, table.begin() + (i + 1) * n);
        }
        result.push_back(load_table(n, entries));
        return;
      }
      for (element_type v = 0; v < n; ++v) {
        table[cell] = v;
        if (consistent()) {
          self(self, cell + 1);
        }
      }
      table[cell] = unset;
    };
    fill(fill, 0);
    return result;
  }

}  // namespace bglab
