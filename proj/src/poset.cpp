#include "hsl/poset.hpp"

#include <algorithm>
#include <map>

namespace hsl {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> le)
    : labels_(std::move(labels)), le_(std::move(le)) {
  size_t n = labels_.size();
  if (le_.size() != n)
    throw std::invalid_argument("Poset: relation size mismatch");
  for (const auto& row : le_)
    if (row.size() != n)
      throw std::invalid_argument("Poset: relation size mismatch");
  for (size_t i = 0; i < n; ++i)
    if (!le_[i][i]) throw std::invalid_argument("Poset: not reflexive");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i != j && le_[i][j] && le_[j][i])
        throw std::invalid_argument("Poset: not antisymmetric");
      if (!le_[i][j]) continue;
      for (size_t k = 0; k < n; ++k)
        if (le_[j][k] && !le_[i][k])
          throw std::invalid_argument("Poset: not transitive");
    }
}

namespace {

// Iterated signature refinement: start from (|down|, |up|), then fold in the
// sorted signatures of the strict down- and up-sets until stable. Ids are
// assigned by sorted key order so that signatures are comparable across two
// independently refined posets.
std::vector<int> refine_signatures(const Poset& p) {
  size_t n = p.size();
  std::vector<int> sig(n, 0);
  for (size_t round = 0; round <= n; ++round) {
    std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> key(n);
    for (size_t i = 0; i < n; ++i) {
      std::vector<int> down, up;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (p.le(j, i)) down.push_back(sig[j]);
        if (p.le(i, j)) up.push_back(sig[j]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      key[i] = {sig[i], std::move(down), std::move(up)};
    }
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    for (size_t i = 0; i < n; ++i) ids.emplace(key[i], 0);
    int next_id = 0;
    for (auto& [k, id] : ids) id = next_id++;
    std::vector<int> next(n);
    for (size_t i = 0; i < n; ++i) next[i] = ids.at(key[i]);
    if (next == sig) break;
    sig = std::move(next);
  }
  return sig;
}

struct Backtracker {
  const Poset& p;
  const Poset& q;
  std::vector<std::vector<size_t>> candidates;  // per p-element, by signature
  std::vector<int> image;                       // p index -> q index or -1
  std::vector<bool> used;
  size_t nodes = 0;
  size_t budget;

  bool extend(size_t k, const std::vector<size_t>& order) {
    if (++nodes > budget)
      throw DeskScaleExceededError("poset isomorphism search budget");
    if (k == order.size()) return true;
    size_t i = order[k];
    for (size_t j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (size_t kk = 0; kk < k && ok; ++kk) {
        size_t i2 = order[kk];
        size_t j2 = image[i2];
        ok = (p.le(i, i2) == q.le(j, j2)) && (p.le(i2, i) == q.le(j2, j));
      }
      if (!ok) continue;
      image[i] = static_cast<int>(j);
      used[j] = true;
      if (extend(k + 1, order)) return true;
      used[j] = false;
      image[i] = -1;
    }
    return false;
  }
};

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q, IsoOptions opts) {
  if (p.size() != q.size()) return false;
  if (p.size() > opts.max_elements || q.size() > opts.max_elements)
    throw DeskScaleExceededError("poset larger than element limit");
  if (p == q) return true;

  size_t n = p.size();
  std::vector<int> sp = refine_signatures(p);
  std::vector<int> sq = refine_signatures(q);
  std::vector<int> hp = sp, hq = sq;
  std::sort(hp.begin(), hp.end());
  std::sort(hq.begin(), hq.end());
  if (hp != hq) return false;

  Backtracker bt{p, q, {}, std::vector<int>(n, -1),
                 std::vector<bool>(n, false), 0, opts.node_budget};
  bt.candidates.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (sp[i] == sq[j]) bt.candidates[i].push_back(j);
  // Most-constrained elements first.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (bt.candidates[x].size() != bt.candidates[y].size())
      return bt.candidates[x].size() < bt.candidates[y].size();
    return x < y;
  });
  return bt.extend(0, order);
}

}  // namespace hsl
