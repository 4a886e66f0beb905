#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

#include "assocf/error.hpp"
#include "assocf/zoo.hpp"

namespace assocf {

Permutation::Permutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("images do not form a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int largest = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "id") return Permutation(degree);
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',' && !cycle.empty()) {
        ++pos;
        skip();
      }
      std::size_t start = pos;
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 100000) throw ParseError("point too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a point", pos);
      if (v < 1) throw ParseError("points start at 1", start);
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw ParseError("point repeated in a cycle", start);
      cycle.push_back(v - 1);
      largest = std::max(largest, v);
    }
    cycles.push_back(std::move(cycle));
  }
  Permutation out(std::max<std::size_t>(degree, static_cast<std::size_t>(largest)));
  // Cycles compose right to left.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(out.degree());
    for (std::size_t k = 0; k < it->size(); ++k)
      c.images_[static_cast<std::size_t>((*it)[k])] = (*it)[(k + 1) % it->size()];
    out = compose(c, out);
  }
  return out;
}

Permutation Permutation::extended(std::size_t n) const {
  if (n <= degree()) return *this;
  Permutation out(n);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<bool> done(degree(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
      done[j] = true;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
      done[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  Permutation x = a.extended(n);
  Permutation y = b.extended(n);
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = x(y(static_cast<int>(i)));
  return Permutation::from_images(std::move(images));
}

GroupTable permutation_group(const std::vector<Permutation>& generators, std::size_t cap) {
  std::size_t n = 0;
  for (const Permutation& g : generators) n = std::max(n, g.degree());
  std::vector<Permutation> gens;
  for (const Permutation& g : generators) gens.push_back(g.extended(n));

  std::map<std::vector<int>, int> index;
  std::vector<Permutation> found{Permutation(n)};
  index.emplace(found[0].images(), 0);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const Permutation& g : gens) {
      Permutation next = compose(found[k], g);
      if (index.count(next.images())) continue;
      if (found.size() == cap)
        throw BudgetError("group order exceeds the cap of " + std::to_string(cap));
      index.emplace(next.images(), static_cast<int>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  index.clear();
  for (std::size_t k = 0; k < found.size(); ++k) index.emplace(found[k].images(), static_cast<int>(k));

  GroupTable g;
  g.elements = std::move(found);
  const std::size_t order = g.elements.size();
  g.table.assign(order, std::vector<int>(order));
  g.inverse.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j)
      g.table[i][j] = index.at(compose(g.elements[i], g.elements[j]).images());
    g.inverse[i] = index.at(g.elements[i].inverse().images());
  }
  g.identity = 0;
  validate_group(g);
  return g;
}

void validate_group(const GroupTable& g) {
  const std::size_t order = g.elements.size();
  if (order == 0) throw std::invalid_argument("empty group");
  if (g.table.size() != order || g.inverse.size() != order)
    throw std::invalid_argument("group table has the wrong shape");
  auto in_range = [&](int v) { return v >= 0 && static_cast<std::size_t>(v) < order; };
  if (!in_range(g.identity)) throw std::invalid_argument("identity index out of range");
  for (std::size_t i = 0; i < order; ++i) {
    if (g.table[i].size() != order) throw std::invalid_argument("group table has the wrong shape");
    for (int v : g.table[i])
      if (!in_range(v)) throw std::invalid_argument("group table is not closed");
    const auto e = static_cast<std::size_t>(g.identity);
    if (g.table[i][e] != static_cast<int>(i) || g.table[e][i] != static_cast<int>(i))
      throw std::invalid_argument("identity fails for element " + std::to_string(i));
    const int inv = g.inverse[i];
    if (!in_range(inv) || g.table[i][static_cast<std::size_t>(inv)] != g.identity ||
        g.table[static_cast<std::size_t>(inv)][i] != g.identity)
      throw std::invalid_argument("inverse fails for element " + std::to_string(i));
  }
  if (order > 60) return;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c) {
        const auto ab = static_cast<std::size_t>(g.table[a][b]);
        const auto bc = static_cast<std::size_t>(g.table[b][c]);
        if (g.table[ab][c] != g.table[a][bc])
          throw std::invalid_argument("group table is not associative");
      }
}

Magma commutator_magma(const GroupTable& g) {
  const std::size_t order = g.elements.size();
  std::vector<std::string> names;
  for (const Permutation& p : g.elements) names.push_back(p.str());
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const auto xy = static_cast<std::size_t>(g.table[x][y]);
      const auto xyx = static_cast<std::size_t>(g.table[xy][static_cast<std::size_t>(g.inverse[x])]);
      table[x][y] = g.table[xyx][static_cast<std::size_t>(g.inverse[y])];
    }
  return Magma(std::move(names), std::move(table));
}

}  // namespace assocf
