#include "bglab/automata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>

#include "bglab/error.hpp"

namespace bglab {

  namespace {
    Transformation then(Transformation const& f, Transformation const& g) {
      Transformation h(f.size());
      for (std::size_t q = 0; q < f.size(); ++q) {
        h[q] = g[f[q]];
      }
      return h;
    }

    struct Closure {
      std::vector<Transformation> elements;
      // Index of the element it was reached from and the generator used;
      // seeds have parent == npos.
      std::vector<std::size_t> parent;
      std::vector<std::size_t> via;
    };

    constexpr std::size_t npos = std::size_t(-1);

    // Breadth-first closure of `seeds` under right multiplication by the
    // generators.
    Closure right_closure(std::vector<Transformation> const& seeds,
                          std::vector<Transformation> const& generators,
                          std::size_t                        cap) {
      Closure                               c;
      std::map<Transformation, std::size_t> index;
      auto add = [&](Transformation t, std::size_t parent, std::size_t via) {
        if (index.contains(t)) {
          return;
        }
        if (c.elements.size() == cap) {
          throw Error(ErrorCode::closure_too_large,
                      "the closure exceeds " + std::to_string(cap) + " elements",
                      {cap});
        }
        index.emplace(t, c.elements.size());
        c.elements.push_back(std::move(t));
        c.parent.push_back(parent);
        c.via.push_back(via);
      };
      for (auto const& s : seeds) {
        add(s, npos, npos);
      }
      for (std::size_t i = 0; i < c.elements.size(); ++i) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
          add(then(c.elements[i], generators[g]), i, g);
        }
      }
      return c;
    }

    FiniteSemigroup cayley_table(std::vector<Transformation> const& elements,
                                 std::vector<std::string>           labels) {
      std::map<Transformation, element_type> index;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], element_type(i));
      }
      std::vector<std::vector<element_type>> entries(elements.size());
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
          auto it = index.find(then(elements[i], elements[j]));
          if (it == index.end()) {
            throw Error(ErrorCode::internal_inconsistency, "transformation closure is not closed");
          }
          entries[i].push_back(it->second);
        }
      }
      return load_table(elements.size(), entries, std::move(labels));
    }

    std::string bracketed(Transformation const& t) {
      std::string out = "[";
      for (std::size_t q = 0; q < t.size(); ++q) {
        out += (q ? "," : "") + std::to_string(t[q]);
      }
      return out + "]";
    }

    struct Line {
      std::size_t                   number;
      std::vector<std::string_view> words;
    };

    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        std::size_t const eol  = text.find('\n');
        std::string_view  line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        Line        current{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
          while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
          }
          std::size_t const start = pos;
          while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
          }
          if (pos > start) {
            current.words.push_back(line.substr(start, pos - start));
          }
        }
        if (!current.words.empty()) {
          lines.push_back(std::move(current));
        }
      }
      return lines;
    }

    std::size_t number_at(Line const& line, std::size_t i) {
      if (i >= line.words.size()) {
        throw ParseError(line.number, 1, "missing argument to '" + std::string(line.words[0]) + "'");
      }
      std::string_view w     = line.words[i];
      std::size_t      value = 0;
      auto [ptr, ec]         = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ParseError(line.number, 1, "expected a non-negative integer, found '" + std::string(w) + "'");
      }
      return value;
    }
  }  // namespace

  FiniteSemigroup generate_from_transformations(std::size_t                        n_points,
                                                std::vector<Transformation> const& generators,
                                                std::size_t                        cap) {
    if (n_points == 0 || generators.empty()) {
      throw Error(ErrorCode::malformed_input, "need at least one point and one generator");
    }
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].size() != n_points
          || std::any_of(generators[g].begin(), generators[g].end(), [&](element_type v) {
               return v >= n_points;
             })) {
        throw Error(ErrorCode::malformed_input,
                    "generator " + std::to_string(g) + " is not a total map on "
                        + std::to_string(n_points) + " points",
                    {g});
      }
    }
    Closure const            c = right_closure(generators, generators, cap);
    std::vector<std::string> labels;
    for (auto const& t : c.elements) {
      labels.push_back(bracketed(t));
    }
    return cayley_table(c.elements, std::move(labels));
  }

  TransformationSpec parse_maps_file(std::string_view text) {
    TransformationSpec spec{0, {}};
    bool               have_points = false;
    for (auto const& line : split_lines(text)) {
      if (line.words[0] == "points") {
        if (have_points) {
          throw ParseError(line.number, 1, "'points' given twice");
        }
        spec.points = number_at(line, 1);
        have_points = true;
      } else if (line.words[0] == "map") {
        if (!have_points) {
          throw ParseError(line.number, 1, "'points' must come before any 'map'");
        }
        if (line.words.size() != spec.points + 1) {
          throw ParseError(line.number,
                           1,
                           "a map needs " + std::to_string(spec.points) + " images");
        }
        Transformation t;
        for (std::size_t i = 1; i < line.words.size(); ++i) {
          t.push_back(element_type(number_at(line, i)));
        }
        spec.generators.push_back(std::move(t));
      } else {
        throw ParseError(line.number, 1, "unknown directive '" + std::string(line.words[0]) + "'");
      }
    }
    if (!have_points) {
      throw ParseError(1, 1, "missing 'points'");
    }
    return spec;
  }

  void validate(Dfa const& dfa) {
    if (dfa.state_count == 0) {
      throw Error(ErrorCode::malformed_input, "a DFA needs at least one state");
    }
    if (dfa.initial >= dfa.state_count) {
      throw Error(ErrorCode::malformed_input, "initial state out of range", {dfa.initial});
    }
    if (dfa.accepting.size() != dfa.state_count || dfa.transition.size() != dfa.state_count) {
      throw Error(ErrorCode::malformed_input, "state tables do not match the state count");
    }
    for (std::size_t q = 0; q < dfa.state_count; ++q) {
      if (dfa.transition[q].size() != dfa.alphabet.size()) {
        throw Error(ErrorCode::malformed_input,
                    "state " + std::to_string(q) + " lacks transitions",
                    {q});
      }
      for (std::size_t target : dfa.transition[q]) {
        if (target >= dfa.state_count) {
          throw Error(ErrorCode::malformed_input, "transition target out of range", {q, target});
        }
      }
    }
  }

  Dfa parse_dfa_file(std::string_view text) {
    Dfa                                    dfa;
    bool                                   have_states = false, have_alphabet = false,
                                           have_initial = false;
    std::vector<std::vector<std::size_t>>  trans;
    std::vector<std::vector<bool>>         seen;
    std::vector<std::size_t>               accepting;
    std::vector<Line>                      pending;
    for (auto const& line : split_lines(text)) {
      auto const& key = line.words[0];
      if (key == "states") {
        dfa.state_count = number_at(line, 1);
        have_states     = true;
      } else if (key == "alphabet") {
        for (std::size_t i = 1; i < line.words.size(); ++i) {
          std::string symbol(line.words[i]);
          if (std::find(dfa.alphabet.begin(), dfa.alphabet.end(), symbol) != dfa.alphabet.end()) {
            throw ParseError(line.number, 1, "symbol '" + symbol + "' listed twice");
          }
          dfa.alphabet.push_back(std::move(symbol));
        }
        have_alphabet = true;
      } else if (key == "initial") {
        dfa.initial  = number_at(line, 1);
        have_initial = true;
      } else if (key == "accepting") {
        for (std::size_t i = 1; i < line.words.size(); ++i) {
          accepting.push_back(number_at(line, i));
        }
      } else if (key == "trans") {
        if (line.words.size() != 4) {
          throw ParseError(line.number, 1, "expected 'trans <state> <symbol> <state>'");
        }
        pending.push_back(line);
      } else {
        throw ParseError(line.number, 1, "unknown directive '" + std::string(key) + "'");
      }
    }
    if (!have_states || !have_alphabet || !have_initial) {
      throw ParseError(1, 1, "a DFA file needs 'states', 'alphabet' and 'initial'");
    }
    std::size_t const n = dfa.state_count;
    std::size_t const k = dfa.alphabet.size();
    dfa.transition.assign(n, std::vector<std::size_t>(k, npos));
    dfa.accepting.assign(n, false);
    for (std::size_t q : accepting) {
      if (q >= n) {
        throw Error(ErrorCode::malformed_input, "accepting state out of range", {q});
      }
      dfa.accepting[q] = true;
    }
    for (auto const& line : pending) {
      std::size_t const from   = number_at(line, 1);
      std::size_t const to     = number_at(line, 3);
      auto const        symbol = std::find(dfa.alphabet.begin(), dfa.alphabet.end(), line.words[2]);
      if (symbol == dfa.alphabet.end()) {
        throw ParseError(line.number, 1, "unknown symbol '" + std::string(line.words[2]) + "'");
      }
      if (from >= n || to >= n) {
        throw ParseError(line.number, 1, "state out of range");
      }
      auto& slot = dfa.transition[from][std::size_t(symbol - dfa.alphabet.begin())];
      if (slot != npos) {
        throw ParseError(line.number, 1, "duplicate transition");
      }
      slot = to;
    }
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < k; ++a) {
        if (dfa.transition[q][a] == npos) {
          throw Error(ErrorCode::malformed_input,
                      "no transition from state " + std::to_string(q) + " on '" + dfa.alphabet[a]
                          + "'",
                      {q, a});
        }
      }
    }
    validate(dfa);
    return dfa;
  }

  bool accepts(Dfa const& dfa, std::vector<std::string> const& word) {
    std::size_t q = dfa.initial;
    for (auto const& symbol : word) {
      auto it = std::find(dfa.alphabet.begin(), dfa.alphabet.end(), symbol);
      if (it == dfa.alphabet.end()) {
        return false;
      }
      q = dfa.transition[q][std::size_t(it - dfa.alphabet.begin())];
    }
    return dfa.accepting[q];
  }

  Dfa minimize(Dfa const& dfa) {
    validate(dfa);
    std::size_t const k = dfa.alphabet.size();

    // Reachable states, in breadth-first order.
    std::vector<std::size_t> order{dfa.initial};
    std::vector<std::size_t> position(dfa.state_count, npos);
    position[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t const t = dfa.transition[order[i]][a];
        if (position[t] == npos) {
          position[t] = order.size();
          order.push_back(t);
        }
      }
    }
    std::size_t const m = order.size();

    // Moore refinement over reachable states (indexed by BFS position).
    std::vector<std::size_t> block(m);
    for (std::size_t i = 0; i < m; ++i) {
      block[i] = dfa.accepting[order[i]] ? 1 : 0;
    }
    std::size_t block_count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> signatures;
      std::vector<std::size_t>                        next(m);
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> sig{block[i]};
        for (std::size_t a = 0; a < k; ++a) {
          sig.push_back(block[position[dfa.transition[order[i]][a]]]);
        }
        next[i] = signatures.emplace(std::move(sig), signatures.size()).first->second;
      }
      bool const stable = signatures.size() == block_count;
      block_count       = signatures.size();
      block             = std::move(next);
      if (stable) {
        break;
      }
    }

    // Renumber blocks breadth-first from the initial block.
    std::vector<std::size_t> representative(block_count, npos);
    for (std::size_t i = 0; i < m; ++i) {
      if (representative[block[i]] == npos) {
        representative[block[i]] = i;
      }
    }
    std::vector<std::size_t> number(block_count, npos);
    std::vector<std::size_t> queue{block[0]};
    number[block[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t const rep = representative[queue[i]];
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t const b = block[position[dfa.transition[order[rep]][a]]];
        if (number[b] == npos) {
          number[b] = queue.size();
          queue.push_back(b);
        }
      }
    }

    Dfa result;
    result.state_count = block_count;
    result.alphabet    = dfa.alphabet;
    result.initial     = 0;
    result.transition.assign(block_count, std::vector<std::size_t>(k));
    result.accepting.assign(block_count, false);
    for (std::size_t b = 0; b < block_count; ++b) {
      std::size_t const rep   = representative[b];
      result.accepting[number[b]] = dfa.accepting[order[rep]];
      for (std::size_t a = 0; a < k; ++a) {
        result.transition[number[b]][a] = number[block[position[dfa.transition[order[rep]][a]]]];
      }
    }
    return result;
  }

  FiniteSemigroup transition_monoid(Dfa const& dfa) {
    validate(dfa);
    if (dfa.alphabet.empty()) {
      throw Error(ErrorCode::empty_alphabet, "the DFA has no input symbols");
    }
    std::vector<Transformation> letters;
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      Transformation t;
      for (std::size_t q = 0; q < dfa.state_count; ++q) {
        t.push_back(element_type(dfa.transition[q][a]));
      }
      letters.push_back(std::move(t));
    }
    Transformation identity(dfa.state_count);
    for (std::size_t q = 0; q < dfa.state_count; ++q) {
      identity[q] = element_type(q);
    }
    Closure const c = right_closure({identity}, letters, default_closure_cap);

    bool const single_chars = std::all_of(dfa.alphabet.begin(), dfa.alphabet.end(), [](auto const& a) {
      return a.size() == 1;
    });
    std::vector<std::string> labels(c.elements.size());
    labels[0] = "1";
    for (std::size_t i = 1; i < c.elements.size(); ++i) {
      std::string const& prefix = c.parent[i] == 0 ? std::string() : labels[c.parent[i]];
      labels[i] = prefix + (prefix.empty() || single_chars ? "" : ".") + dfa.alphabet[c.via[i]];
    }
    return cayley_table(c.elements, std::move(labels));
  }

  FiniteSemigroup syntactic_monoid(Dfa const& dfa) {
    if (dfa.alphabet.empty()) {
      throw Error(ErrorCode::empty_alphabet, "the DFA has no input symbols");
    }
    return transition_monoid(minimize(dfa));
  }

}  // namespace bglab
