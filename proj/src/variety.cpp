#include "bglab/variety.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <variant>

#include "bglab/error.hpp"
#include "bglab/representation.hpp"

namespace bglab {

  struct PseudoTerm::Node {
    Kind                        kind;
    std::string                 name;
    std::shared_ptr<Node const> left;
    std::shared_ptr<Node const> right;
  };

  PseudoTerm PseudoTerm::variable(std::string name) {
    return PseudoTerm(std::make_shared<Node const>(Node{Kind::variable, std::move(name), {}, {}}));
  }

  PseudoTerm PseudoTerm::product(PseudoTerm left, PseudoTerm right) {
    return PseudoTerm(
        std::make_shared<Node const>(Node{Kind::product, {}, left._node, right._node}));
  }

  PseudoTerm PseudoTerm::omega_power(PseudoTerm child) {
    return PseudoTerm(std::make_shared<Node const>(Node{Kind::omega_power, {}, child._node, {}}));
  }

  PseudoTerm::Kind PseudoTerm::kind() const noexcept {
    return _node->kind;
  }

  std::string const& PseudoTerm::name() const {
    return _node->name;
  }

  PseudoTerm PseudoTerm::left() const {
    return PseudoTerm(_node->left);
  }

  PseudoTerm PseudoTerm::right() const {
    return PseudoTerm(_node->right);
  }

  PseudoTerm PseudoTerm::child() const {
    return PseudoTerm(_node->left);
  }

  std::vector<std::string> PseudoTerm::variables() const {
    std::vector<std::string> out;
    auto                     walk = [&out](auto&& self, PseudoTerm const& t) -> void {
      switch (t.kind()) {
        case Kind::variable:
          if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
            out.push_back(t.name());
          }
          break;
        case Kind::product:
          self(self, t.left());
          self(self, t.right());
          break;
        case Kind::omega_power: self(self, t.child()); break;
      }
    };
    walk(walk, *this);
    return out;
  }

  std::string to_string(PseudoTerm const& t) {
    switch (t.kind()) {
      case PseudoTerm::Kind::variable: return t.name();
      case PseudoTerm::Kind::product: {
        // Products are left-associated by the parser; parenthesise a product
        // on the right so that re-parsing gives the same tree.
        std::string right = to_string(t.right());
        if (t.right().kind() == PseudoTerm::Kind::product) {
          right = "(" + right + ")";
        }
        return to_string(t.left()) + " " + right;
      }
      case PseudoTerm::Kind::omega_power: {
        auto const& c = t.child();
        if (c.kind() == PseudoTerm::Kind::product) {
          return "(" + to_string(c) + ")^w";
        }
        return to_string(c) + "^w";
      }
    }
    return {};
  }

  namespace {
    // Recursive descent over
    //   term   := factor factor*
    //   factor := atom ("^w")*
    //   atom   := VAR | "(" term ")"
    class TermParser {
     public:
      explicit TermParser(std::string_view text) : _text(text) {}

      PseudoTerm parse_whole() {
        PseudoTerm t = parse_term();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return t;
      }

     private:
      PseudoTerm parse_term() {
        PseudoTerm t = parse_factor();
        while (true) {
          skip_space();
          if (_pos >= _text.size() || !(std::isalpha(uchar()) || _text[_pos] == '(')) {
            return t;
          }
          t = PseudoTerm::product(t, parse_factor());
        }
      }

      PseudoTerm parse_factor() {
        PseudoTerm t = parse_atom();
        while (true) {
          skip_space();
          if (_pos < _text.size() && _text[_pos] == '^') {
            ++_pos;
            skip_space();
            if (_pos >= _text.size() || _text[_pos] != 'w') {
              fail("expected 'w' after '^'");
            }
            ++_pos;
            t = PseudoTerm::omega_power(t);
          } else {
            return t;
          }
        }
      }

      PseudoTerm parse_atom() {
        skip_space();
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        if (_text[_pos] == '(') {
          ++_pos;
          PseudoTerm t = parse_term();
          skip_space();
          if (_pos >= _text.size() || _text[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return t;
        }
        if (!std::isalpha(uchar())) {
          fail("expected a variable or '('");
        }
        std::size_t start = _pos++;
        while (_pos < _text.size() && std::isdigit(uchar())) {
          ++_pos;
        }
        return PseudoTerm::variable(std::string(_text.substr(start, _pos - start)));
      }

      unsigned char uchar() const {
        return static_cast<unsigned char>(_text[_pos]);
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(uchar())) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(1, _pos + 1, what);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  PseudoTerm parse_term(std::string_view text) {
    return TermParser(text).parse_whole();
  }

  Pseudoidentity make_pseudoidentity(PseudoTerm lhs, PseudoTerm rhs) {
    auto vars = lhs.variables();
    for (auto& v : rhs.variables()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        vars.push_back(std::move(v));
      }
    }
    return {std::move(lhs), std::move(rhs), std::move(vars)};
  }

  std::vector<Pseudoidentity> parse_pseudoidentities(std::string_view text) {
    std::vector<PseudoTerm> sides;
    std::size_t             start = 0;
    while (true) {
      std::size_t const eq  = text.find('=', start);
      std::size_t const end = eq == std::string_view::npos ? text.size() : eq;
      try {
        sides.push_back(parse_term(text.substr(start, end - start)));
      } catch (ParseError const& e) {
        throw ParseError(1, start + e.column(), e.message());
      }
      if (eq == std::string_view::npos) {
        break;
      }
      start = eq + 1;
    }
    if (sides.size() < 2) {
      throw ParseError(1, text.size() + 1, "an identity needs at least one '='");
    }
    std::vector<Pseudoidentity> ids;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
      ids.push_back(make_pseudoidentity(sides[i], sides[i + 1]));
    }
    return ids;
  }

  std::string to_string(Pseudoidentity const& id) {
    return to_string(id.lhs) + " = " + to_string(id.rhs);
  }

  element_type eval_term(FiniteSemigroup const& s, PseudoTerm const& t, Assignment const& assignment) {
    switch (t.kind()) {
      case PseudoTerm::Kind::variable: {
        auto it = assignment.find(t.name());
        if (it == assignment.end()) {
          throw Error(ErrorCode::unbound_variable, "no value for '" + t.name() + "'");
        }
        if (it->second >= s.order()) {
          throw Error(ErrorCode::index_out_of_range,
                      "'" + t.name() + "' is bound to " + std::to_string(it->second),
                      {it->second});
        }
        return it->second;
      }
      case PseudoTerm::Kind::product:
        return s.product(eval_term(s, t.left(), assignment), eval_term(s, t.right(), assignment));
      case PseudoTerm::Kind::omega_power: return omega(s, eval_term(s, t.child(), assignment));
    }
    return 0;
  }

  Satisfaction satisfies(FiniteSemigroup const&           s,
                         std::span<Pseudoidentity const> ids,
                         std::size_t                      max_variables) {
    for (auto const& id : ids) {
      if (id.variables.size() > max_variables) {
        throw Error(ErrorCode::too_many_variables,
                    to_string(id) + " has " + std::to_string(id.variables.size())
                        + " variables; the cap is " + std::to_string(max_variables),
                    {id.variables.size(), max_variables});
      }
      std::vector<element_type> values(id.variables.size(), 0);
      Assignment                assignment;
      while (true) {
        for (std::size_t i = 0; i < values.size(); ++i) {
          assignment[id.variables[i]] = values[i];
        }
        if (eval_term(s, id.lhs, assignment) != eval_term(s, id.rhs, assignment)) {
          return {false, assignment};
        }
        // Odometer over S^k.
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == s.order()) {
          values[i++] = 0;
        }
        if (i == values.size()) {
          break;
        }
      }
    }
    return {true, std::nullopt};
  }

  Satisfaction satisfies(FiniteSemigroup const& s, Pseudoidentity const& id, std::size_t max_variables) {
    return satisfies(s, std::span<Pseudoidentity const>(&id, 1), max_variables);
  }

  namespace {
    bool holds(FiniteSemigroup const& s, std::string_view identity) {
      return satisfies(s, parse_pseudoidentities(identity)).holds;
    }

    void cross_check(bool a, bool b, std::string const& what) {
      if (a != b) {
        throw Error(ErrorCode::internal_inconsistency, what);
      }
    }
  }  // namespace

  BlockGroupCriteria block_group_criteria(FiniteSemigroup const& s) {
    return {is_block_group(s).is_block_group,
            holds(s, bg_identity),
            holds(s, bg_two_sided_identity)};
  }

  bool is_ecom(FiniteSemigroup const& s) {
    auto const& idempotents = s.regularity().idempotents;
    bool        commute     = true;
    for (element_type e : idempotents) {
      for (element_type f : idempotents) {
        commute = commute && s.product(e, f) == s.product(f, e);
      }
    }
    cross_check(commute, holds(s, ecom_identity), "Ecom criteria disagree");
    return commute;
  }

  bool is_ei(FiniteSemigroup const& s) {
    bool const one = s.regularity().idempotents.size() == 1;
    cross_check(one, holds(s, ei_identity), "EI criteria disagree");
    return one;
  }

  bool is_nilpotent(FiniteSemigroup const& s) {
    std::size_t const n = s.order();
    // S^(k+1) = S^k S, a decreasing chain that stabilises within n steps.
    std::set<element_type> power;
    for (element_type x = 0; x < n; ++x) {
      power.insert(x);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<element_type> next;
      for (element_type a : power) {
        for (element_type b = 0; b < n; ++b) {
          next.insert(s.product(a, b));
        }
      }
      if (next == power) {
        break;
      }
      power = std::move(next);
    }
    auto const zero      = s.zero();
    bool const nilpotent = power.size() == 1 && zero && *power.begin() == *zero;

    auto const& reg = s.regularity();
    bool const  one_regular
        = std::count(reg.is_regular.begin(), reg.is_regular.end(), true) == 1;
    cross_check(nilpotent, one_regular, "nilpotency and unique-regular-element criteria disagree");

    bool omega_is_zero = true;
    for (element_type x = 0; x < n && omega_is_zero; ++x) {
      element_type const xw = omega(s, x);
      for (element_type y = 0; y < n && omega_is_zero; ++y) {
        omega_is_zero = s.product(xw, y) == xw && s.product(y, xw) == xw;
      }
    }
    cross_check(nilpotent, omega_is_zero, "nilpotency and x^w = 0 criteria disagree");
    return nilpotent;
  }

  bool FiberReport::ok() const noexcept {
    return image_ecom && std::all_of(fibers.begin(), fibers.end(), [](Fiber const& f) {
             return f.is_subsemigroup && f.is_nilpotent;
           });
  }

  FiberReport malcev_fiber_check(FiniteSemigroup const& s) {
    Representation const rep = vp_representation(s);

    std::map<PartialInjection, std::vector<element_type>> fibres;
    for (auto const& r : rep.elements) {
      fibres[r.map].push_back(r.source);
    }
    std::vector<PartialInjection> image;
    for (auto const& [map, members] : fibres) {
      image.push_back(map);
    }

    FiberReport report;
    report.image_size = image.size();
    report.image_ecom = idempotents_commute_in_image(image);
    for (auto const& [map, members] : fibres) {
      if (compose(map, map) != map) {
        continue;
      }
      Fiber fibre{map, members, false, false};
      try {
        FiniteSemigroup const sub = subsemigroup(s, members);
        fibre.is_subsemigroup     = true;
        fibre.is_nilpotent        = is_nilpotent(sub);
      } catch (Error const& e) {
        if (e.code() != ErrorCode::not_closed) {
          throw;
        }
      }
      if (!fibre.is_subsemigroup || !fibre.is_nilpotent) {
        throw Error(ErrorCode::fiber_not_nilpotent,
                    "the preimage of " + to_string(map, s)
                        + (fibre.is_subsemigroup ? " is not nilpotent"
                                                 : " is not a subsemigroup"),
                    std::vector<std::size_t>(members.begin(), members.end()));
      }
      report.fibers.push_back(std::move(fibre));
    }
    return report;
  }

}  // namespace bglab
