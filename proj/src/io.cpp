#include "hyperq/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace hyperq {

namespace {

struct Token {
  std::string text;
  int line;    // 1-based
  int column;  // 1-based
};

// Lines of whitespace-separated tokens, comments and blank lines dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    ++line_no;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == '#') break;
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r' && line[i] != '#')
        ++i;
      toks.push_back({std::string(line.substr(start, i - start)), line_no,
                      static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

int parse_index(const Token &t, int bound, const char *what) {
  int value = 0;
  const auto *first = t.text.data();
  const auto *last = first + t.text.size();
  auto [p, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || p != last || value < 0)
    throw ParseError(t.line, t.column,
                     std::string("expected ") + what + ", got \"" + t.text +
                         "\"");
  if (bound > 0 && value >= bound)
    throw ParseError(t.line, t.column,
                     std::string(what) + " " + t.text + " out of range [0," +
                         std::to_string(bound - 1) + "]");
  return value;
}

Grade parse_grade_token(const Token &t) {
  try {
    return Grade::parse(t.text);
  } catch (const Error &e) {
    throw ParseError(t.line, t.column,
                     "bad grade \"" + t.text + "\": " + e.what());
  }
}

void expect_header(const std::vector<std::vector<Token>> &lines,
                   const char *keyword) {
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const auto &hdr = lines[0];
  if (hdr[0].text != keyword)
    throw ParseError(hdr[0].line, hdr[0].column,
                     std::string("expected header \"") + keyword + " <n>\"");
  if (hdr.size() != 2)
    throw ParseError(hdr[0].line, hdr[0].column,
                     std::string("header must be \"") + keyword + " <n>\"");
}

}  // namespace

Hypergroupoid parse_hqg(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "hqg");
  const int n = parse_index(lines[0][1], 0, "order");
  if (n < 1 || n > 31)
    throw ParseError(lines[0][1].line, lines[0][1].column,
                     "order must be in [1,31]");
  std::vector<CarrierSubset> table(static_cast<std::size_t>(n) * n);
  std::vector<bool> filled(table.size(), false);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto &toks = lines[li];
    if (toks.size() < 4 || toks[2].text != ":")
      throw ParseError(toks[0].line, toks[0].column,
                       "expected cell line \"i j : k1 k2 ...\"");
    const int i = parse_index(toks[0], n, "row index");
    const int j = parse_index(toks[1], n, "column index");
    if (filled[i * n + j])
      throw ParseError(toks[0].line, toks[0].column,
                       "duplicate cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    CarrierSubset cell;
    for (std::size_t k = 3; k < toks.size(); ++k)
      cell.add(parse_index(toks[k], n, "cell element"));
    if (cell.empty())
      throw ParseError(toks[0].line, toks[0].column, "empty cell");
    table[i * n + j] = cell;
    filled[i * n + j] = true;
  }
  for (std::size_t c = 0; c < filled.size(); ++c)
    if (!filled[c]) {
      const auto &last = lines.back().back();
      throw ParseError(last.line, last.column,
                       "missing cell (" + std::to_string(c / n) + "," +
                           std::to_string(c % n) + ")");
    }
  return Hypergroupoid(n, std::move(table));
}

std::string serialize_hqg(const Hypergroupoid &h) {
  std::ostringstream out;
  out << "hqg " << h.order() << "\n";
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j) {
      out << i << " " << j << " :";
      for (int k : h.cell(i, j).elements()) out << " " << k;
      out << "\n";
    }
  return out.str();
}

std::pair<FuzzySet, FuzzySet> parse_ifs(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "ifs");
  const int n = parse_index(lines[0][1], 0, "order");
  if (n < 1)
    throw ParseError(lines[0][1].line, lines[0][1].column,
                     "order must be positive");
  FuzzySet mu(n), lambda(n);
  std::vector<bool> filled(n, false);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto &toks = lines[li];
    if (toks.size() != 4 || toks[1].text != ":")
      throw ParseError(toks[0].line, toks[0].column,
                       "expected grade line \"i : <mu> <lambda>\"");
    const int i = parse_index(toks[0], n, "element index");
    if (filled[i])
      throw ParseError(toks[0].line, toks[0].column,
                       "duplicate element " + std::to_string(i));
    mu[i] = parse_grade_token(toks[2]);
    lambda[i] = parse_grade_token(toks[3]);
    filled[i] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!filled[i]) {
      const auto &last = lines.back().back();
      throw ParseError(last.line, last.column,
                       "missing element " + std::to_string(i));
    }
  return {std::move(mu), std::move(lambda)};
}

std::string serialize_ifs(const IntuitionisticFuzzySet &a) {
  std::ostringstream out;
  out << "ifs " << a.size() << "\n";
  for (int i = 0; i < a.size(); ++i)
    out << i << " : " << a.mu[i].str() << " " << a.lambda[i].str() << "\n";
  return out.str();
}

Quasigroup parse_quasigroup(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "qsg");
  const int m = parse_index(lines[0][1], 0, "order");
  if (m < 1)
    throw ParseError(lines[0][1].line, lines[0][1].column,
                     "order must be positive");

  std::size_t li = 1;
  auto read_block = [&](const char *label) {
    if (li >= lines.size())
      throw ParseError(lines.back().back().line, lines.back().back().column,
                       std::string("missing block \"") + label + "\"");
    if (lines[li].size() != 1 || lines[li][0].text != label)
      throw ParseError(lines[li][0].line, lines[li][0].column,
                       std::string("expected block label \"") + label + "\"");
    ++li;
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r, ++li) {
      if (li >= lines.size())
        throw ParseError(lines.back().back().line, lines.back().back().column,
                         std::string("truncated block \"") + label + "\"");
      const auto &toks = lines[li];
      if (static_cast<int>(toks.size()) != m)
        throw ParseError(toks[0].line, toks[0].column,
                         "expected " + std::to_string(m) + " entries");
      for (const Token &t : toks)
        table.push_back(parse_index(t, m, "table entry"));
    }
    return table;
  };

  const std::vector<int> mult = read_block("mult");
  const std::vector<int> ldiv = read_block("ldiv");
  const std::vector<int> rdiv = read_block("rdiv");
  if (li != lines.size())
    throw ParseError(lines[li][0].line, lines[li][0].column,
                     "trailing content after rdiv block");
  Quasigroup q;
  try {
    q = Quasigroup::from_mult(m, mult);
  } catch (const NotALatinSquare &e) {
    throw ParseError(lines[1][0].line, lines[1][0].column, e.what());
  }
  if (q.ldiv != ldiv || q.rdiv != rdiv)
    throw ParseError(lines[1][0].line, lines[1][0].column,
                     "division tables inconsistent with mult");
  return q;
}

std::string serialize_quasigroup(const Quasigroup &q) {
  std::ostringstream out;
  out << "qsg " << q.order << "\n";
  auto block = [&](const char *label, const std::vector<int> &t) {
    out << label << "\n";
    for (int r = 0; r < q.order; ++r) {
      for (int c = 0; c < q.order; ++c) {
        if (c) out << " ";
        out << t[r * q.order + c];
      }
      out << "\n";
    }
  };
  block("mult", q.mult);
  block("ldiv", q.ldiv);
  block("rdiv", q.rdiv);
  return out.str();
}

}  // namespace hyperq
