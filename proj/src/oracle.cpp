#include "bucl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace bucl {

void QueryLedger::merge(const QueryLedger& other) {
  if (other.n_ != n_) throw ArgumentError("cannot merge ledgers over different vertex counts");
  distinct_ = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] |= other.bits_[i];
    distinct_ += static_cast<std::size_t>(std::popcount(bits_[i]));
  }
}

std::vector<Edge> QueryLedger::pairs() const {
  std::vector<Edge> out;
  out.reserve(distinct_);
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (contains(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

std::uint64_t QueryLedger::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(n_);
  for (auto w : bits_) mix(w);
  return h;
}

std::vector<Vertex> sample_vertices(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> out;
  if (k >= n) {
    out.resize(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
  }
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(uniform_vertex(rng, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void AdaptiveSession::throw_bad_pair(Vertex u, Vertex v) const {
  if (u == v) throw ArgumentError("probe on the diagonal pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  throw ArgumentError("probe (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for N=" +
                      std::to_string(graph_->size()));
}

AdaptiveSession open_adaptive(const Graph& G, std::uint64_t seed) { return AdaptiveSession(G, seed); }

void NonAdaptivePlan::check_open() const {
  if (sealed_) throw PlanStateError("plan is sealed; no further pairs can be committed");
}

void NonAdaptivePlan::check_vertices(std::span<const Vertex> S) const {
  for (auto v : S) {
    if (v >= graph_->size()) {
      throw ArgumentError("plan vertex " + std::to_string(v) + " out of range for N=" + std::to_string(graph_->size()));
    }
  }
}

void NonAdaptivePlan::throw_uncommitted(Vertex u, Vertex v) const {
  throw PlanStateError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") was not committed to the plan");
}

void NonAdaptivePlan::add_pair(Vertex u, Vertex v) {
  check_open();
  if (u == v) throw ArgumentError("plan pair on the diagonal (" + std::to_string(u) + ")");
  const Vertex uv[2] = {u, v};
  check_vertices(uv);
  ledger_.record(u, v);
}

void NonAdaptivePlan::add_product(std::span<const Vertex> A, std::span<const Vertex> B) {
  check_open();
  check_vertices(A);
  check_vertices(B);
  for (auto a : A) {
    for (auto b : B) {
      if (a != b) ledger_.record(a, b);
    }
  }
}

void NonAdaptivePlan::add_square(std::span<const Vertex> S) {
  check_open();
  check_vertices(S);
  for (std::size_t j = 1; j < S.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (S[i] != S[j]) ledger_.record(S[i], S[j]);
    }
  }
}

CommittedAnswers commit_plan(const Graph& G, std::span<const Edge> pairs) {
  for (const auto& p : pairs) {
    if (p.u == p.v || p.u >= G.size() || p.v >= G.size()) {
      throw ArgumentError("invalid plan pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ")");
    }
  }
  NonAdaptivePlan plan(G, 0);
  for (const auto& p : pairs) plan.add_pair(p.u, p.v);
  plan.seal();
  CommittedAnswers out;
  out.answers.reserve(pairs.size());
  for (const auto& p : pairs) out.answers.push_back(plan.answer(p.u, p.v) ? 1 : 0);
  out.ledger = std::move(plan).take_ledger();
  return out;
}

}  // namespace bucl
