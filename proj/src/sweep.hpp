#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "assocf/error.hpp"
#include "assocf/magma.hpp"

namespace assocf::detail {

// Evaluates a tree operation by scanning the preorder code from the right:
// leaves push arguments (last first), interior vertices pop their two
// children, left child on top.
class TreeProgram {
 public:
  explicit TreeProgram(const BinaryTree& t) : code_(t.code()), arity_(t.leaf_count()) {}

  std::size_t arity() const { return arity_; }

  Element run(const Magma& m, const Element* args) const {
    Element local[64] = {};
    std::vector<Element> heap;
    Element* stack = local;
    if (arity_ > 64) {
      heap.resize(arity_);
      stack = heap.data();
    }
    int top = 0;
    std::size_t next = arity_;
    for (std::size_t k = code_.size(); k-- > 0;) {
      if (code_[k] == '0') {
        stack[top++] = args[--next];
      } else {
        Element l = stack[--top];
        Element r = stack[top - 1];
        stack[top - 1] = m.op(l, r);
      }
    }
    return stack[0];
  }

 private:
  std::string code_;
  std::size_t arity_;
};

inline std::uint64_t tuple_count(std::size_t base, std::size_t n, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(base), &total) || total > guard)
      throw BudgetError("tuple space " + std::to_string(base) + "^" + std::to_string(n) +
                        " exceeds the cost guard");
  }
  return total;
}

inline void decode_tuple(std::uint64_t index, std::size_t base, std::vector<Element>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<Element>(index % base);
    index /= base;
  }
}

// Odometer step, last position fastest.
inline void next_tuple(std::size_t base, std::vector<Element>& t) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (static_cast<std::size_t>(++t[k]) < base) return;
    t[k] = 0;
  }
}

// Smallest tuple index in [0,total) where pred fails, or total. Workers take
// fixed chunks in order and stop once a smaller failure is known, so the
// answer does not depend on the thread count.
template <class Pred>
std::uint64_t first_failure(std::size_t base, std::size_t n, std::uint64_t total,
                            unsigned threads, Pred pred) {
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> next_chunk{0};
  auto worker = [&] {
    std::vector<Element> t(n);
    while (true) {
      std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      std::uint64_t start = c * kChunk;
      if (start >= best.load(std::memory_order_relaxed)) return;
      std::uint64_t stop = std::min(total, start + kChunk);
      decode_tuple(start, base, t);
      for (std::uint64_t i = start; i < stop; ++i, next_tuple(base, t)) {
        if (!pred(t.data())) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  unsigned workers = std::max(1u, threads);
  if (workers == 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::uint64_t>(workers, chunks); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return best.load();
}

}  // namespace assocf::detail
