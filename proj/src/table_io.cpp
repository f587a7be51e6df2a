#include "bglab/table_io.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bglab/error.hpp"

namespace bglab {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    // Non-empty lines with comments stripped, split on whitespace.
    std::vector<Line> tokenize(std::string_view text) {
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
            current.tokens.push_back({line.substr(start, pos - start), start + 1});
          }
        }
        if (!current.tokens.empty()) {
          lines.push_back(std::move(current));
        }
      }
      return lines;
    }

    std::size_t to_index(Line const& line, Token const& token) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
      if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
        throw ParseError(line.number,
                         token.column,
                         "expected a non-negative integer, found '" + std::string(token.text) + "'");
      }
      return value;
    }
  }  // namespace

  FiniteSemigroup parse_table_file(std::string_view text) {
    auto const lines = tokenize(text);
    if (lines.empty()) {
      throw ParseError(1, 1, "empty table file");
    }
    Line const& header = lines.front();
    if (header.tokens.size() != 1) {
      throw ParseError(header.number, header.tokens[1].column, "the first line must hold only the order");
    }
    std::size_t const n = to_index(header, header.tokens[0]);
    if (n == 0) {
      throw ParseError(header.number, header.tokens[0].column, "the order must be positive");
    }
    if (lines.size() < n + 1) {
      std::size_t const last = lines.back().number;
      throw ParseError(last + 1, 1, "expected " + std::to_string(n) + " table rows");
    }
    std::vector<std::vector<element_type>> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
      Line const& line = lines[i + 1];
      if (line.tokens.size() != n) {
        auto const column = line.tokens.size() > n ? line.tokens[n].column : line.tokens.back().column;
        throw ParseError(line.number,
                         column,
                         "row " + std::to_string(i) + " needs " + std::to_string(n) + " entries, found "
                             + std::to_string(line.tokens.size()));
      }
      for (auto const& token : line.tokens) {
        // Range is checked by load_table.
        entries[i].push_back(element_type(std::min<std::size_t>(to_index(line, token), element_type(-1))));
      }
    }
    std::vector<std::string> labels;
    if (lines.size() > n + 1) {
      Line const& line = lines[n + 1];
      if (line.tokens.front().text != "labels:") {
        throw ParseError(line.number, line.tokens.front().column, "expected 'labels:' or end of file");
      }
      if (line.tokens.size() != n + 1) {
        throw ParseError(line.number,
                         line.tokens.front().column,
                         "expected " + std::to_string(n) + " labels, found "
                             + std::to_string(line.tokens.size() - 1));
      }
      for (std::size_t i = 1; i <= n; ++i) {
        labels.emplace_back(line.tokens[i].text);
      }
      if (lines.size() > n + 2) {
        throw ParseError(lines[n + 2].number, 1, "unexpected content after the labels");
      }
    }
    return load_table(n, entries, std::move(labels));
  }

  std::string render_table_file(FiniteSemigroup const& s) {
    std::ostringstream out;
    out << s.order() << '\n';
    for (element_type i = 0; i < s.order(); ++i) {
      auto row = s.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? " " : "") << row[j];
      }
      out << '\n';
    }
    if (!s.labels().empty()) {
      out << "labels:";
      for (auto const& l : s.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::malformed_input, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace bglab
