#include "assocf/formats.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "assocf/error.hpp"

namespace assocf {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Magma parse_magma(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw FormatError("no element names", 1);
  std::vector<std::string> names = words(lines[0].text);
  std::map<std::string, Element> index;
  for (const std::string& n : names) {
    if (!index.emplace(n, static_cast<Element>(index.size())).second)
      throw FormatError("duplicate element name '" + n + "'", lines[0].number);
  }
  const std::size_t size = names.size();
  if (lines.size() - 1 < size)
    throw FormatError("expected " + std::to_string(size) + " table rows, found " +
                          std::to_string(lines.size() - 1),
                      lines.back().number);
  if (lines.size() - 1 > size)
    throw FormatError("unexpected extra row", lines[size + 1].number);
  std::vector<std::vector<Element>> table;
  for (std::size_t r = 0; r < size; ++r) {
    const Line& line = lines[r + 1];
    std::vector<std::string> row = words(line.text);
    if (row.size() != size)
      throw FormatError("row has " + std::to_string(row.size()) + " entries, expected " +
                            std::to_string(size),
                        line.number);
    std::vector<Element> out;
    for (const std::string& entry : row) {
      auto it = index.find(entry);
      if (it == index.end()) throw FormatError("unknown element '" + entry + "'", line.number);
      out.push_back(it->second);
    }
    table.push_back(std::move(out));
  }
  return Magma(std::move(names), std::move(table));
}

std::string emit_magma(const Magma& m) {
  std::size_t width = 0;
  for (const std::string& n : m.names()) width = std::max(width, n.size());
  auto cell = [&](const std::string& s, bool last) {
    return last ? s : s + std::string(width - s.size() + 1, ' ');
  };
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) out += cell(m.names()[j], j + 1 == m.size());
  out += '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      out += cell(m.name(m.op(static_cast<Element>(i), static_cast<Element>(j))), j + 1 == m.size());
    out += '\n';
  }
  return out;
}

VarietyPresentation parse_variety(std::string_view text) {
  VarietyPresentation v;
  for (const Line& line : content_lines(text)) {
    try {
      v.laws.push_back(Law::parse(line.text));
    } catch (const ParseError& e) {
      throw FormatError(e.what(), line.number);
    }
  }
  return v;
}

std::string emit_variety(const VarietyPresentation& v) {
  std::string out;
  for (const Law& law : v.laws) out += law.str() + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Magma load_magma(const std::string& path) { return parse_magma(read_file(path)); }

VarietyPresentation load_variety(const std::string& path) {
  return parse_variety(read_file(path));
}

}  // namespace assocf
