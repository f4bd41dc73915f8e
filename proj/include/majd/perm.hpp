#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace majd {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // must be a bijection on 1..n

  // "3142" (n <= 9) or "3,1,4,2".
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int at(int i) const { return images_[i - 1]; }  // 1-indexed position
  const std::vector<int>& images() const { return images_; }
  std::string to_text() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

// Position pairs (i,j), i<j, with sigma_i > sigma_j.
std::vector<std::pair<int, int>> inversion_set(const Permutation& p);
int inv(const Permutation& p);

// Sum of descent positions.
int maj(const Permutation& p);

// Strictly upper triangular weights, 1-indexed.
class WeightMatrix {
 public:
  explicit WeightMatrix(int n);
  static WeightMatrix ones(int n);
  // w(i,j) = 0 if j-i > d, i if j-i = d, 1 if 0 < j-i < d.
  static WeightMatrix kadell(int n, int d);

  int size() const { return n_; }
  long long at(int i, int j) const;  // 0 unless 1 <= i < j <= n
  void set(int i, int j, long long w);

 private:
  int n_ = 0;
  std::vector<long long> w_;  // row-major strict upper triangle
};

long long inv_w(const Permutation& p, const WeightMatrix& w);

// inv_{W^(d)}; collapses to maj at d = 1 and to inv once d >= n.
long long maj_d_perm(const Permutation& p, int d);

// maj(foata(p)) == inv(p).
Permutation foata(const Permutation& p);

// Inverse of foata: the iterative prefix-factorization construction,
// inv(inverse_foata(p)) == maj(p).
Permutation inverse_foata(const Permutation& p);

}  // namespace majd
