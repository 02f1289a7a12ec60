#pragma once

#include <cstddef>
#include <deque>
#include <numeric>
#include <span>
#include <tuple>
#include <vector>

#include "limitgrp/word.hpp"

namespace limitgrp {

/// Stallings graph of a finitely generated subgroup of F_n, built by folding the
/// wedge of loops spelling the generating words.
class StallingsGraph {
 public:
  StallingsGraph(std::size_t rank, std::span<const Word> words) : rank_(rank) {
    add_vertex();  // base
    for (const Word& w : words) {
      if (w.rank() != rank) throw RankMismatch(rank, w.rank());
      add_loop(w);
    }
    fold();
    prune();
  }

  std::size_t rank() const noexcept { return rank_; }

  /// Number of vertices of the core graph (relative to the base vertex).
  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (std::size_t v = 0; v < parent_.size(); ++v) n += (is_live(v) ? 1 : 0);
    return n;
  }

  /// Every vertex has an outgoing edge for every label x_i^{+-1}.
  bool is_covering() const {
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (!is_live(v)) continue;
      for (std::size_t l = 0; l < 2 * rank_; ++l) {
        if (adj_[v][l] < 0) return false;
      }
    }
    return true;
  }

  /// Subgroup is all of F_n iff the core is the one-vertex rose covering F_n.
  bool is_whole_group() const { return vertex_count() == 1 && is_covering(); }

 private:
  std::size_t add_vertex() {
    parent_.push_back(parent_.size());
    adj_.emplace_back(2 * rank_, -1);
    removed_.push_back(false);
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }
  std::size_t find(std::size_t v) {
    std::size_t root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      std::size_t next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  bool is_live(std::size_t v) const { return parent_[v] == v && !removed_[v]; }

  void add_loop(const Word& w) {
    if (w.empty()) return;
    std::size_t cur = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::size_t next = (k + 1 == w.size()) ? 0 : add_vertex();
      pending_.emplace_back(cur, w[k].label(), next);
      cur = next;
    }
  }

  static std::size_t flip(std::size_t label) { return label ^ 1u; }

  void fold() {
    while (!pending_.empty()) {
      auto [u, l, v] = pending_.front();
      pending_.pop_front();
      u = find(u);
      v = find(v);
      long w = adj_[u][l];
      if (w < 0) {
        adj_[u][l] = static_cast<long>(v);
        // the reverse slot may already hold a different vertex: that is a fold too
        long back = adj_[v][flip(l)];
        if (back < 0) {
          adj_[v][flip(l)] = static_cast<long>(u);
        } else if (find(static_cast<std::size_t>(back)) != u) {
          merge(find(static_cast<std::size_t>(back)), u);
        }
        continue;
      }
      std::size_t wr = find(static_cast<std::size_t>(w));
      if (wr == v) continue;
      merge(wr, v);
    }
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (parent_[v] != v) continue;
      for (auto& a : adj_[v]) {
        if (a >= 0) a = static_cast<long>(find(static_cast<std::size_t>(a)));
      }
    }
  }

  void merge(std::size_t keep, std::size_t drop) {
    keep = find(keep);
    drop = find(drop);
    if (keep == drop) return;
    if (drop == 0) std::swap(keep, drop);  // base vertex stays a root
    parent_[drop] = keep;
    for (std::size_t l = 0; l < 2 * rank_; ++l) {
      if (adj_[drop][l] >= 0) {
        pending_.emplace_back(keep, l, static_cast<std::size_t>(adj_[drop][l]));
        adj_[drop][l] = -1;
      }
    }
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (long a : adj_[v]) d += (a >= 0 ? 1 : 0);
    return d;
  }

  void prune() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 1; v < parent_.size(); ++v) {
        if (!is_live(v) || degree(v) > 1) continue;
        for (std::size_t l = 0; l < 2 * rank_; ++l) {
          if (adj_[v][l] >= 0) {
            adj_[static_cast<std::size_t>(adj_[v][l])][flip(l)] = -1;
            adj_[v][l] = -1;
          }
        }
        removed_[v] = true;
        changed = true;
      }
    }
  }

  std::size_t rank_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<long>> adj_;
  std::vector<bool> removed_;
  std::deque<std::tuple<std::size_t, std::size_t, std::size_t>> pending_;
};

/// True iff `words` generate the free group of rank n.
inline bool generates_free_group(std::span<const Word> words, std::size_t rank) {
  return StallingsGraph(rank, words).is_whole_group();
}

}  // namespace limitgrp
