#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bucl/errors.hpp"
#include "bucl/graph.hpp"

namespace bucl {

using Rng = std::mt19937_64;

/// Set of distinct unordered pairs probed so far. Re-probing is free.
class QueryLedger {
 public:
  explicit QueryLedger(std::size_t n = 0) : n_(n), bits_((pair_count(n) + 63) / 64, 0) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t distinct_count() const noexcept { return distinct_; }

  /// Precondition: u != v, both below vertex_count(). Returns true if new.
  bool record(Vertex u, Vertex v) noexcept {
    const std::size_t i = pair_index(u, v);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    std::uint64_t& word = bits_[i >> 6];
    if (word & mask) return false;
    word |= mask;
    ++distinct_;
    return true;
  }

  bool contains(Vertex u, Vertex v) const noexcept {
    if (u == v) return false;
    const std::size_t i = pair_index(u, v);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }

  /// Union with another ledger over the same vertex count.
  void merge(const QueryLedger& other);

  std::vector<Edge> pairs() const;
  /// FNV-1a over the vertex count and the packed pair bits.
  std::uint64_t digest() const;

  friend bool operator==(const QueryLedger& a, const QueryLedger& b) {
    return a.n_ == b.n_ && a.distinct_ == b.distinct_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_;
  std::size_t distinct_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Uniform draws with replacement, deduplicated and sorted. A request of at
/// least n returns all of [0, n).
std::vector<Vertex> sample_vertices(Rng& rng, std::size_t n, std::size_t k);

inline Vertex uniform_vertex(Rng& rng, std::size_t n) {
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

/// Adaptive access: each probe may depend on every earlier answer.
///
/// Holds a pointer to the hidden graph, which must outlive the session.
class AdaptiveSession {
 public:
  AdaptiveSession(const Graph& G, std::uint64_t seed) : graph_(&G), ledger_(G.size()), rng_(seed), seed_(seed) {}

  AdaptiveSession(const AdaptiveSession&) = delete;
  AdaptiveSession& operator=(const AdaptiveSession&) = delete;
  AdaptiveSession(AdaptiveSession&&) = default;
  AdaptiveSession& operator=(AdaptiveSession&&) = default;

  std::size_t vertex_count() const noexcept { return graph_->size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  Rng& rng() noexcept { return rng_; }

  /// Throws ArgumentError on diagonal or out-of-range pairs.
  bool probe(Vertex u, Vertex v) {
    if (u == v || u >= graph_->size() || v >= graph_->size()) throw_bad_pair(u, v);
    ledger_.record(u, v);
    return graph_->adjacent(u, v);
  }

  const QueryLedger& ledger() const noexcept { return ledger_; }
  QueryLedger take_ledger() && { return std::move(ledger_); }

 private:
  [[noreturn]] void throw_bad_pair(Vertex u, Vertex v) const;

  const Graph* graph_;
  QueryLedger ledger_;
  Rng rng_;
  std::uint64_t seed_;
};

AdaptiveSession open_adaptive(const Graph& G, std::uint64_t seed);

/// Reading an unsealed plan, extending a sealed one, or reading a pair that
/// was never committed.
class PlanStateError : public Error {
 public:
  using Error::Error;
};

/// Non-adaptive access: all pairs are committed before any answer is read.
///
/// The ledger fills while pairs are added (it only names pairs, never
/// answers). After seal() no pair can be added; before seal() no answer can be
/// read. Attempted early reads are counted so tests can assert they never
/// happen.
class NonAdaptivePlan {
 public:
  NonAdaptivePlan(const Graph& G, std::uint64_t seed) : graph_(&G), ledger_(G.size()), rng_(seed), seed_(seed) {}

  NonAdaptivePlan(const NonAdaptivePlan&) = delete;
  NonAdaptivePlan& operator=(const NonAdaptivePlan&) = delete;
  NonAdaptivePlan(NonAdaptivePlan&&) = default;
  NonAdaptivePlan& operator=(NonAdaptivePlan&&) = default;

  std::size_t vertex_count() const noexcept { return graph_->size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  Rng& rng() noexcept { return rng_; }

  void add_pair(Vertex u, Vertex v);
  /// Every {a, b} with a in A, b in B, a != b.
  void add_product(std::span<const Vertex> A, std::span<const Vertex> B);
  /// Every pair inside S.
  void add_square(std::span<const Vertex> S);

  void seal() noexcept { sealed_ = true; }
  bool sealed() const noexcept { return sealed_; }

  bool answer(Vertex u, Vertex v) const {
    if (!sealed_) {
      ++pre_seal_reads_;
      throw PlanStateError("plan must be sealed before answers are read");
    }
    if (!ledger_.contains(u, v)) throw_uncommitted(u, v);
    return graph_->adjacent(u, v);
  }

  std::size_t pre_seal_reads() const noexcept { return pre_seal_reads_; }
  const QueryLedger& ledger() const noexcept { return ledger_; }
  QueryLedger take_ledger() && { return std::move(ledger_); }

 private:
  void check_open() const;
  void check_vertices(std::span<const Vertex> S) const;
  [[noreturn]] void throw_uncommitted(Vertex u, Vertex v) const;

  const Graph* graph_;
  QueryLedger ledger_;
  Rng rng_;
  std::uint64_t seed_;
  bool sealed_ = false;
  mutable std::size_t pre_seal_reads_ = 0;
};

struct CommittedAnswers {
  std::vector<std::uint8_t> answers;  // aligned with the input pairs
  QueryLedger ledger;
};

/// One-shot plan over an explicit pair list. Invalid pairs raise
/// ArgumentError before any answer is produced.
CommittedAnswers commit_plan(const Graph& G, std::span<const Edge> pairs);

}  // namespace bucl
