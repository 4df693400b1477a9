#include "cospec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "canonical_search.hpp"

namespace cospec {
namespace detail {

void CanonicalSearch::run(int n, int words, const std::uint64_t* rows) {
  n_ = n;
  words_ = words;
  rows_ = rows;
  have_leaf_ = false;
  automorphisms_.clear();
  mask_.assign(words, 0);
  counts_.assign(n, 0);
  uf_.resize(n);
  root_cell_.assign(n, 0);

  Partition root;
  root.lab.resize(n);
  std::iota(root.lab.begin(), root.lab.end(), 0);
  root.cell_end.assign(n, n);
  refine(root);
  for (int s = 0; s < n; s = root.cell_end[s])
    for (int i = s; i < root.cell_end[s]; ++i) root_cell_[root.lab[i]] = s;

  std::vector<int> fixed;
  search(std::move(root), fixed);
  if (!have_leaf_) {  // n == 0
    best_lab_.clear();
    best_code_.clear();
  }
}

void CanonicalSearch::refine(Partition& p) {
  const int n = n_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n && !changed; s = p.cell_end[s]) {
      const int se = p.cell_end[s];
      std::fill(mask_.begin(), mask_.end(), 0);
      for (int i = s; i < se; ++i) mask_[p.lab[i] / 64] |= std::uint64_t{1} << (p.lab[i] % 64);
      for (int c = 0; c < n; c = p.cell_end[c]) {
        const int ce = p.cell_end[c];
        if (ce - c == 1) continue;
        bool uniform = true;
        for (int i = c; i < ce; ++i) {
          const int v = p.lab[i];
          const std::uint64_t* r = rows_ + static_cast<std::size_t>(v) * words_;
          int cnt = 0;
          for (int w = 0; w < words_; ++w) cnt += std::popcount(r[w] & mask_[w]);
          counts_[v] = cnt;
          if (cnt != counts_[p.lab[c]]) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(p.lab.begin() + c, p.lab.begin() + ce,
                         [this](int a, int b) { return counts_[a] < counts_[b]; });
        for (int i = c; i < ce;) {
          int j = i;
          while (j < ce && counts_[p.lab[j]] == counts_[p.lab[i]]) ++j;
          p.cell_end[i] = j;
          i = j;
        }
        changed = true;
        break;
      }
    }
  }
}

void CanonicalSearch::search(Partition p, std::vector<int>& fixed) {
  refine(p);
  int target = -1, target_size = n_ + 1;
  for (int s = 0; s < n_; s = p.cell_end[s]) {
    const int size = p.cell_end[s] - s;
    if (size > 1 && size < target_size) {
      target = s;
      target_size = size;
    }
  }
  if (target < 0) {
    leaf(p.lab);
    return;
  }
  const int end = p.cell_end[target];
  std::vector<int> candidates(p.lab.begin() + target, p.lab.begin() + end);
  std::sort(candidates.begin(), candidates.end());
  std::vector<int> explored;
  for (int v : candidates) {
    if (!explored.empty() && pruned(v, explored, fixed)) continue;
    explored.push_back(v);
    Partition child = p;
    auto it = std::find(child.lab.begin() + target, child.lab.begin() + end, v);
    std::iter_swap(child.lab.begin() + target, it);
    child.cell_end[target] = target + 1;
    child.cell_end[target + 1] = end;
    fixed.push_back(v);
    search(std::move(child), fixed);
    fixed.pop_back();
  }
}

bool CanonicalSearch::pruned(int v, const std::vector<int>& explored, const std::vector<int>& fixed) {
  std::iota(uf_.begin(), uf_.end(), 0);
  auto find = [this](int x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  };
  bool any = false;
  for (const auto& gamma : automorphisms_) {
    if (!std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; })) continue;
    any = true;
    for (int x = 0; x < n_; ++x) {
      const int a = find(x), b = find(gamma[x]);
      if (a != b) uf_[a] = b;
    }
  }
  if (!any) return false;
  const int root = find(v);
  return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
}

void CanonicalSearch::leaf_code(const std::vector<int>& lab, std::vector<std::uint64_t>& out) const {
  out.assign(code_words(n_), 0);
  long k = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (adjacent(lab[i], lab[j])) out[k / 64] |= std::uint64_t{1} << (63 - k % 64);
}

void CanonicalSearch::leaf(const std::vector<int>& lab) {
  leaf_code(lab, scratch_code_);
  if (!have_leaf_) {
    have_leaf_ = true;
    first_lab_ = best_lab_ = lab;
    first_code_ = best_code_ = scratch_code_;
    return;
  }
  auto record = [&](const std::vector<int>& from) {
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = lab[i];
      identity = identity && from[i] == lab[i];
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  };
  if (scratch_code_ == first_code_) {
    record(first_lab_);
  } else if (scratch_code_ == best_code_) {
    record(best_lab_);
  } else if (scratch_code_ < best_code_) {
    best_lab_ = lab;
    best_code_ = scratch_code_;
  }
}

}  // namespace detail

std::size_t AdjacencyCodeHash::operator()(const AdjacencyCode& c) const noexcept {
  std::size_t h = std::hash<int>{}(c.n);
  for (std::uint64_t w : c.words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

AdjacencyCode adjacency_code(const Graph& g) {
  AdjacencyCode code{g.order(), std::vector<std::uint64_t>(detail::code_words(g.order()), 0)};
  long k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) code.words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  return code;
}

Graph graph_from_code(const AdjacencyCode& code) {
  GraphBuilder b(code.n);
  long k = 0;
  for (int j = 1; j < code.n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code.words[k / 64] >> (63 - k % 64)) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

CanonicalForm canonical_form(const Graph& g) {
  detail::CanonicalSearch search;
  const int n = g.order();
  search.run(n, g.row_words(), n > 0 ? g.row(0).data() : nullptr);
  CanonicalForm form;
  form.perm.assign(n, 0);
  for (int i = 0; i < n; ++i) form.perm[search.best_lab()[i]] = i;
  form.code = AdjacencyCode{n, search.best_code()};
  return form;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_form(g).perm); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g).code == canonical_form(h).code;
}

}  // namespace cospec
