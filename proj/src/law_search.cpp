#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "assocf/magma.hpp"
#include "sweep.hpp"

namespace assocf {

namespace {

constexpr std::uint64_t kMix = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + kMix + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

// One value per tree summarizing its operation on a fixed set of tuples.
template <class Fill>
std::vector<std::uint64_t> fingerprints(const Magma& m, const std::vector<BinaryTree>& trees,
                                        unsigned threads, Fill fill_tuples) {
  std::vector<std::uint64_t> out(trees.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < trees.size();) {
      detail::TreeProgram program(trees[k]);
      std::uint64_t h = 0;
      fill_tuples([&](const Element* t) { h = mix(h, static_cast<std::uint64_t>(program.run(m, t))); });
      out[k] = h;
    }
  };
  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trees.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace

std::size_t default_arity_cap(std::size_t size) {
  if (size <= 4) return 6;
  if (size <= 60) return 4;
  return 3;
}

std::vector<Law> search_laws(const Magma& m, std::size_t n, const LawSearchOptions& opts) {
  const std::vector<BinaryTree> trees = enumerate_trees(n);
  if (trees.size() < 2) return {};
  const std::size_t base = m.size();
  const std::uint64_t total = detail::tuple_count(base, n, opts.sweep.cost_guard);

  std::vector<std::uint64_t> prints;
  if (total <= opts.exact_limit) {
    prints = fingerprints(m, trees, opts.sweep.threads, [&](auto&& visit) {
      std::vector<Element> t(n, 0);
      for (std::uint64_t i = 0; i < total; ++i, detail::next_tuple(base, t)) visit(t.data());
    });
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(base) - 1);
    std::vector<Element> sample(opts.samples * n);
    for (Element& e : sample) e = pick(rng);
    prints = fingerprints(m, trees, opts.sweep.threads, [&](auto&& visit) {
      for (std::size_t s = 0; s < opts.samples; ++s) visit(sample.data() + s * n);
    });
  }

  // Only trees sharing a fingerprint can satisfy a common law; confirm each
  // candidate pair exhaustively.
  std::map<std::uint64_t, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < trees.size(); ++k) classes[prints[k]].push_back(k);
  std::vector<std::pair<std::size_t, std::size_t>> found;
  for (const auto& [print, members] : classes) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        Law law(trees[members[a]], trees[members[b]]);
        if (satisfies(m, law, opts.sweep).holds) found.emplace_back(members[a], members[b]);
      }
  }
  std::sort(found.begin(), found.end());
  std::vector<Law> laws;
  for (auto [a, b] : found) laws.emplace_back(trees[a], trees[b]);
  return laws;
}

}  // namespace assocf
