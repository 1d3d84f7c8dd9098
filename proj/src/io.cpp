#include "ulmkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ulmkit/error.hpp"

namespace ulmkit::io {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Line = std::vector<Token>;

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.push_back({std::string(raw.substr(start, i - start)), line_no, start + 1});
    }
    if (!line.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::uint64_t to_uint(const Token& t) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected a nonnegative integer, got '" + t.text + "'", t.line, t.column);
  return v;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(const char* what) {
    if (at_ >= lines_.size())
      throw ParseError(std::string("unexpected end of input, expected ") + what,
                       lines_.empty() ? 1 : lines_.back().front().line + 1, 1);
    return lines_[at_++];
  }

  std::uint64_t keyed_value(const char* key) {
    const Line& l = next(key);
    if (l.front().text != key)
      throw ParseError(std::string("expected '") + key + "', got '" + l.front().text + "'",
                       l.front().line, l.front().column);
    if (l.size() != 2)
      throw ParseError(std::string("'") + key + "' takes exactly one value",
                       l.front().line, l.front().column);
    return to_uint(l[1]);
  }

  const Token& keyword(const char* key) {
    const Line& l = next(key);
    if (l.front().text != key || l.size() != 1)
      throw ParseError(std::string("expected '") + key + "' on its own line",
                       l.front().line, l.front().column);
    return l.front();
  }

  std::vector<std::uint64_t> row(std::size_t width, std::uint64_t bound, const char* what) {
    const Line& l = next(what);
    if (l.size() != width)
      throw ParseError(std::string(what) + " row has " + std::to_string(l.size()) +
                           " entries, expected " + std::to_string(width),
                       l.front().line, l.front().column);
    std::vector<std::uint64_t> out;
    for (const auto& t : l) {
      auto v = to_uint(t);
      if (v >= bound)
        throw ParseError("entry " + t.text + " out of range [0, " + std::to_string(bound) + ")",
                         t.line, t.column);
      out.push_back(v);
    }
    return out;
  }

  void finish() {
    if (at_ < lines_.size())
      throw ParseError("trailing content", lines_[at_].front().line, lines_[at_].front().column);
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ZModule parse_zmod(std::string_view text) {
  Reader r(text);
  const auto ell = r.keyed_value("l");
  const auto d = r.keyed_value("dim");
  if (d > kDefaultDimensionCap)
    throw ParseError("dimension exceeds cap " + std::to_string(kDefaultDimensionCap), 0, 0);
  const Token& at = r.keyword("sigma");
  if (!linalg::is_prime(ell) || ell >= (std::uint64_t{1} << 31))
    throw ParseError("l = " + std::to_string(ell) + " is not a supported prime", 1, 1);
  FpMatrix sigma(Scalar(ell), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto row = r.row(d, ell, "sigma");
    for (std::size_t j = 0; j < d; ++j) sigma.set(i, j, std::int64_t(row[j]));
  }
  r.finish();
  try {
    return ZModule(std::move(sigma));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at.line, at.column);
  }
}

ZModule read_zmod(const std::string& path) { return parse_zmod(slurp(path)); }

std::string write_zmod(const ZModule& m) {
  std::ostringstream os;
  os << "l " << m.ell() << "\ndim " << m.dim() << "\nsigma\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m.sigma()(i, j);
    os << "\n";
  }
  return os.str();
}

group::GroupPtr parse_zgrp(std::string_view text) {
  Reader r(text);
  const auto ell = r.keyed_value("l");
  const auto n = r.keyed_value("order");
  if (n == 0 || n > group::kDefaultOrderCap)
    throw ParseError("order must be in [1, " + std::to_string(group::kDefaultOrderCap) + "]",
                     0, 0);
  const Token& at = r.keyword("cayley");
  std::vector<group::Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto v : r.row(n, n, "cayley")) table.push_back(group::Element(v));
  r.keyword("theta");
  std::vector<group::Element> theta;
  for (auto v : r.row(n, n, "theta")) theta.push_back(group::Element(v));
  r.finish();
  try {
    return std::make_shared<const group::FinZGroup>(Scalar(ell), std::move(table),
                                                    std::move(theta));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at.line, at.column);
  }
}

group::GroupPtr read_zgrp(const std::string& path) { return parse_zgrp(slurp(path)); }

std::string write_zgrp(const group::FinZGroup& g) {
  std::ostringstream os;
  const std::size_t n = g.order();
  os << "l " << g.ell() << "\norder " << n << "\ncayley\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) os << (b ? " " : "") << g.mul(group::Element(a), group::Element(b));
    os << "\n";
  }
  os << "theta\n";
  for (std::size_t a = 0; a < n; ++a) os << (a ? " " : "") << g.theta(group::Element(a));
  os << "\n";
  return os.str();
}

std::vector<std::vector<std::int64_t>> parse_rows(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::istringstream in{std::string(text.substr(pos, end - pos))};
    std::vector<std::int64_t> row;
    std::string tok;
    while (in >> tok) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad matrix entry '" + tok + "'", 1, pos + 1);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    pos = end + 1;
  }
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw ParseError("ragged matrix rows", 1, 1);
  return rows;
}

std::vector<std::uint64_t> parse_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    Token t{std::string(text.substr(pos, end - pos)), 1, pos + 1};
    out.push_back(to_uint(t));
    pos = end + 1;
  }
  return out;
}

json count(std::uint64_t n) {
  if (n <= (std::uint64_t{1} << 53)) return n;
  return std::to_string(n);
}

json matrix_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json ulm_json(const std::vector<std::size_t>& invariants) {
  return json{{"ulm", invariants}};
}

json decomposition_json(const ulm::Decomposition& d) {
  json blocks = json::array();
  for (const auto& [n, mult] : d.type()) blocks.push_back({{"n", n}, {"mult", mult}});
  json basis = json::array();
  for (const auto& chain : d.parts)
    for (const auto& v : chain.vectors) basis.push_back(v);
  return {{"blocks", blocks}, {"basis", basis}};
}

json spectrum_json(const std::vector<arith::SpectrumEntry>& entries, bool detailed) {
  json heights = json::object();
  for (const auto& e : entries) heights[std::to_string(e.height)] = count(e.witness);
  json out{{"heights", heights}};
  if (detailed) {
    json rows = json::array();
    for (const auto& e : entries)
      rows.push_back({{"k", e.k}, {"height", count(e.height)}, {"witness", count(e.witness)},
                      {"count", e.count}});
    out["entries"] = rows;
  }
  return out;
}

json global_height_json(const arith::CharacterSpec& spec, const arith::GlobalHeight& h) {
  json places = json::array();
  for (auto p : spec.ramified()) {
    const auto place = arith::make_place(p, spec.ctx(), true);
    const auto iv = arith::local_height_interval(place, spec.ctx(), spec.m());
    places.push_back({{"p", count(p)}, {"t", place.t}, {"lo", count(iv.lo)}, {"hi", count(iv.hi)}});
  }
  json out{{"l", spec.ctx().ell()}, {"m", spec.m()}, {"exact", h.exact}, {"places", places}};
  if (h.exact)
    out["height"] = count(h.range.lo);
  else
    out["height_bounds"] = {count(h.range.lo), count(h.range.hi)};
  return out;
}

json presentation_json(const present::Presentation& p) {
  json families = json::array();
  for (const auto& f : p.families)
    families.push_back({{"name", f.name},
                        {"kind", f.kind == present::FamilyKind::Cyclic ? "cyclic" : "free"},
                        {"level", f.level},
                        {"generators", f.size}});
  json relations = json::array();
  for (const auto& r : p.relations) {
    json rel{{"lhs", p.generators[r.lhs]}, {"truncated", r.truncated}};
    json rhs = json::array();
    for (auto g : r.rhs) rhs.push_back(p.generators[g]);
    rel["rhs"] = rhs;
    relations.push_back(std::move(rel));
  }
  return {{"generators", p.generators},
          {"families", families},
          {"relations", relations},
          {"metadata", p.metadata}};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace ulmkit::io
