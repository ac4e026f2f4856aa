#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "adm/analysis.hpp"

namespace adm {

struct OptimalResult {
  std::vector<BitSequence> codewords;  // leaf set of the best tree, sorted
  std::vector<std::pair<BitSequence, BitSequence>> assignment;  // source -> codeword
  double kl_bits = 0;
};

namespace detail {

// A full binary tree's leaf multiset, reduced to (zeros, ones) path counts.
// Two trees with the same multiset give the same minimal divergence, so the
// search deduplicates on it and keeps one witness tree for reconstruction.
using LeafShape = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

struct ShapeNode {
  LeafShape shape;
  int split = 0;  // leaves in the left subtree; 0 marks a leaf
  int left = -1;
  int right = -1;
};

inline std::vector<std::vector<ShapeNode>> build_shape_table(int leaves) {
  std::vector<std::vector<ShapeNode>> table(leaves + 1);
  table[1].push_back(ShapeNode{LeafShape{{0, 0}}, 0, -1, -1});
  for (int m = 2; m <= leaves; ++m) {
    std::map<LeafShape, bool> seen;
    for (int k = 1; k < m; ++k) {
      for (int li = 0; li < static_cast<int>(table[k].size()); ++li) {
        for (int ri = 0; ri < static_cast<int>(table[m - k].size()); ++ri) {
          LeafShape merged;
          merged.reserve(m);
          for (auto [a, b] : table[k][li].shape) {
            merged.emplace_back(static_cast<std::uint8_t>(a + 1), b);
          }
          for (auto [a, b] : table[m - k][ri].shape) {
            merged.emplace_back(a, static_cast<std::uint8_t>(b + 1));
          }
          std::sort(merged.begin(), merged.end());
          if (seen.emplace(merged, true).second) {
            table[m].push_back(ShapeNode{std::move(merged), k, li, ri});
          }
        }
      }
    }
  }
  return table;
}

inline void collect_leaves(const std::vector<std::vector<ShapeNode>>& table, int m,
                           int index, BitSequence prefix, std::vector<BitSequence>& out) {
  const ShapeNode& node = table[m][index];
  if (node.split == 0) {
    out.push_back(std::move(prefix));
    return;
  }
  BitSequence left = prefix;
  left.push_back(0);
  collect_leaves(table, node.split, node.left, std::move(left), out);
  prefix.push_back(1);
  collect_leaves(table, m - node.split, node.right, std::move(prefix), out);
}

}  // namespace detail

// Exhaustive minimum-divergence f2v code over all full binary trees with 2^n
// leaves; source words and leaf probabilities are paired in sorted order.
inline OptimalResult optimal_codebook_bruteforce(unsigned n, const Prob& p_src,
                                                 const Prob& p_code) {
  if (n > 4) throw DomainError("optimal oracle is capped at n <= 4");
  const int leaves = 1 << n;
  const double lp = log2_rational(p_code.value());
  const double lq = log2_rational(p_code.complement());

  // Source word probabilities, descending (ties broken by word order).
  std::vector<std::pair<double, BitSequence>> sources;
  for (int word = 0; word < leaves; ++word) {
    BitSequence s;
    Rational prob(1);
    for (unsigned i = 0; i < n; ++i) {
      int bit = (word >> (n - 1 - i)) & 1;
      s.push_back(bit);
      prob *= bit == 0 ? p_src.value() : p_src.complement();
    }
    sources.emplace_back(static_cast<double>(BigFloat(prob)), std::move(s));
  }
  std::stable_sort(sources.begin(), sources.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  auto table = detail::build_shape_table(leaves);

  double best = 0;
  int best_index = -1;
  std::vector<double> logq(leaves);
  for (int idx = 0; idx < static_cast<int>(table[leaves].size()); ++idx) {
    const auto& shape = table[leaves][idx].shape;
    for (int i = 0; i < leaves; ++i) {
      logq[i] = shape[i].first * lp + shape[i].second * lq;
    }
    std::sort(logq.begin(), logq.end(), std::greater<>());
    double d = 0;
    for (int i = 0; i < leaves; ++i) {
      d += sources[i].first * (std::log2(sources[i].first) - logq[i]);
    }
    if (best_index < 0 || d < best) {
      best = d;
      best_index = idx;
    }
  }

  OptimalResult result;
  result.kl_bits = best;
  detail::collect_leaves(table, leaves, best_index, BitSequence{}, result.codewords);
  std::sort(result.codewords.begin(), result.codewords.end());

  std::vector<std::pair<double, BitSequence>> leaves_by_prob;
  for (const auto& cw : result.codewords) {
    double zeros = 0, ones = 0;
    for (int bit : cw) (bit == 0 ? zeros : ones) += 1;
    leaves_by_prob.emplace_back(zeros * lp + ones * lq, cw);
  }
  std::stable_sort(leaves_by_prob.begin(), leaves_by_prob.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int i = 0; i < leaves; ++i) {
    result.assignment.emplace_back(sources[i].second, leaves_by_prob[i].second);
  }
  std::sort(result.assignment.begin(), result.assignment.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace adm
