#include "assocf/zoo.hpp"

#include <array>
#include <stdexcept>

namespace assocf {

namespace {

Magma from_rows(std::vector<std::string> names, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Element>> table;
  for (const auto& row : rows) {
    std::vector<Element> out;
    for (const std::string& entry : row) {
      Element e = -1;
      for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == entry) e = static_cast<Element>(k);
      out.push_back(e);
    }
    table.push_back(std::move(out));
  }
  return Magma(std::move(names), std::move(table));
}

struct Unit {
  int sign;
  int index;
};

int conj_sign(int index) { return index == 0 ? 1 : -1; }

// Cayley-Dickson doubling (a,b)(c,d) = (ac - d*b, da + bc*) restricted to
// signed basis units of dimension 2^level.
Unit unit_product(int level, int a, int b) {
  if (level == 0) return {1, 0};
  const int high = 1 << (level - 1);
  const int x = a & ~high;
  const int y = b & ~high;
  const bool ah = (a & high) != 0;
  const bool bh = (b & high) != 0;
  Unit r{};
  if (!ah && !bh) {
    r = unit_product(level - 1, x, y);
  } else if (!ah && bh) {
    r = unit_product(level - 1, y, x);
    r.index |= high;
  } else if (ah && !bh) {
    r = unit_product(level - 1, x, y);
    r.sign *= conj_sign(y);
    r.index |= high;
  } else {
    r = unit_product(level - 1, y, x);
    r.sign *= -conj_sign(y);
  }
  return r;
}

}  // namespace

Magma pre_sl2() {
  return from_rows({"0", "a", "b", "c"}, {{"0", "0", "0", "0"},
                                          {"0", "0", "a", "b"},
                                          {"0", "a", "0", "c"},
                                          {"0", "b", "c", "0"}});
}

Magma s4_example() {
  return from_rows({"1", "a", "b", "c"}, {{"1", "b", "c", "c"},
                                          {"a", "b", "c", "c"},
                                          {"b", "b", "c", "c"},
                                          {"c", "b", "c", "c"}});
}

Magma octonion_unit_loop() {
  std::vector<std::string> names;
  for (int neg = 0; neg < 2; ++neg)
    for (int i = 0; i < 8; ++i) names.push_back((neg ? "-e" : "e") + std::to_string(i));
  std::vector<std::vector<Element>> table(16, std::vector<Element>(16));
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      Unit u = unit_product(3, a % 8, b % 8);
      int sign = u.sign * (a < 8 ? 1 : -1) * (b < 8 ? 1 : -1);
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = u.index + (sign < 0 ? 8 : 0);
    }
  return Magma(std::move(names), std::move(table));
}

namespace {

// Basis order e_{-1}, e_0, e_1; bracket [e_i, e_j] = coeff * e_{target}.
struct Bracket {
  int coeff;
  int target;
};

constexpr std::array<std::array<Bracket, 3>, 3> kSl2{{
    {{{0, 0}, {-1, 0}, {-2, 1}}},
    {{{1, 0}, {0, 0}, {-1, 2}}},
    {{{2, 1}, {1, 2}, {0, 0}}},
}};

constexpr int kScalars[4] = {1, 4, 2, 3};  // 1, -1, 2, -2 mod 5
const char* const kScalarNames[4] = {"", "-", "2", "-2"};
const char* const kBasisNames[3] = {"e-1", "e0", "e1"};

int scalar_slot(int c) {
  c = ((c % 5) + 5) % 5;
  for (int k = 0; k < 4; ++k)
    if (kScalars[k] == c) return k;
  return -1;
}

}  // namespace

Magma sl2_table() {
  std::vector<std::string> names{"0"};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 4; ++k) names.push_back(std::string(kScalarNames[k]) + kBasisNames[i]);
  auto index = [](int basis, int slot) { return 1 + 4 * basis + slot; };
  std::vector<std::vector<Element>> table(13, std::vector<Element>(13, 0));
  for (int i = 0; i < 3; ++i)
    for (int s = 0; s < 4; ++s)
      for (int j = 0; j < 3; ++j)
        for (int t = 0; t < 4; ++t) {
          const Bracket& br = kSl2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (br.coeff == 0) continue;
          int slot = scalar_slot(kScalars[s] * kScalars[t] * br.coeff);
          table[static_cast<std::size_t>(index(i, s))][static_cast<std::size_t>(index(j, t))] =
              index(br.target, slot);
        }
  return Magma(std::move(names), std::move(table));
}

std::vector<Element> sl2_to_pre_sl2() {
  std::vector<Element> out{0};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 4; ++k) out.push_back(1 + i);
  return out;
}

Magma z4() {
  std::vector<std::string> names{"0", "1", "2", "3"};
  std::vector<std::vector<Element>> table(4, std::vector<Element>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % 4;
  return Magma(std::move(names), std::move(table));
}

Magma trivial_magma() { return Magma({"0"}, {{0}}); }

GroupTable s3_group() {
  return permutation_group({Permutation::parse("(1 2)"), Permutation::parse("(1 2 3)")});
}

GroupTable a5_group() {
  return permutation_group({Permutation::parse("(1 2 3 4 5)"), Permutation::parse("(1 2 3)")});
}

const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> entries{
      {"pre_sl2", "four-element quotient of an sl2 bracket subalgebra", pre_sl2},
      {"s4_example", "S(4): right identity 1, columns a,b,c constant", s4_example},
      {"s3_commutator", "commutator bracket on S3", [] { return commutator_magma(s3_group()); }},
      {"a5_commutator", "commutator bracket on A5", [] { return commutator_magma(a5_group()); }},
      {"octonion_unit_loop", "the 16 signed octonion basis units", octonion_unit_loop},
      {"sl2_mod5", "sl2 basis brackets with coefficients mod 5", sl2_table},
      {"z4", "addition mod 4", z4},
      {"trivial", "one element", trivial_magma},
  };
  return entries;
}

Magma zoo_magma(std::string_view name) {
  for (const ZooEntry& e : zoo())
    if (e.name == name) return e.build();
  throw std::out_of_range("unknown zoo magma '" + std::string(name) + "'");
}

}  // namespace assocf
