#pragma once

#include <cstdint>
#include <vector>

namespace cospec::detail {

/// Canonical labelling on raw bit-set rows (n rows of `words` words each).
/// Reusable across calls so hot loops avoid reallocating the scratch space.
class CanonicalSearch {
 public:
  void run(int n, int words, const std::uint64_t* rows);

  /// best_lab()[i] is the vertex placed at canonical position i.
  const std::vector<int>& best_lab() const { return best_lab_; }
  const std::vector<std::uint64_t>& best_code() const { return best_code_; }
  /// Start position of the cell holding v in the refined root partition.
  int root_cell(int v) const { return root_cell_[v]; }

 private:
  struct Partition {
    std::vector<int> lab;
    std::vector<int> cell_end;  // valid at cell start positions
  };

  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void refine(Partition& p);
  void search(Partition p, std::vector<int>& fixed);
  void leaf(const std::vector<int>& lab);
  void leaf_code(const std::vector<int>& lab, std::vector<std::uint64_t>& out) const;
  bool pruned(int v, const std::vector<int>& explored, const std::vector<int>& fixed);

  int n_ = 0;
  int words_ = 0;
  const std::uint64_t* rows_ = nullptr;
  bool have_leaf_ = false;
  std::vector<int> first_lab_, best_lab_, root_cell_;
  std::vector<std::uint64_t> first_code_, best_code_, scratch_code_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> counts_, order_, uf_;
};

inline int code_words(int n) {
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  return static_cast<int>((bits + 63) / 64);
}

}  // namespace cospec::detail
