#include "majd/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace majd {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok =
          text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad permutation entry: '" + std::string(tok) + "'");
      images.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("one-line permutation words use digits 1-9");
      images.push_back(ch - '0');
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::string Permutation::to_text() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (i && !compact) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) out.emplace_back(i, j);
  return out;
}

int inv(const Permutation& p) {
  int count = 0;
  for (int i = 1; i < p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) ++count;
  return count;
}

int maj(const Permutation& p) {
  int total = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) total += i;
  return total;
}

WeightMatrix::WeightMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("WeightMatrix: n must be positive");
  w_.assign(static_cast<std::size_t>(n) * n, 0);
}

WeightMatrix WeightMatrix::ones(int n) {
  WeightMatrix m(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, 1);
  return m;
}

WeightMatrix WeightMatrix::kadell(int n, int d) {
  if (d < 1) throw std::invalid_argument("kadell: d must be positive");
  WeightMatrix m(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j - i > d) continue;
      m.set(i, j, j - i == d ? i : 1);
    }
  }
  return m;
}

long long WeightMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i >= j || j > n_) return 0;
  return w_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void WeightMatrix::set(int i, int j, long long w) {
  if (i < 1 || i >= j || j > n_)
    throw std::invalid_argument("WeightMatrix::set: need 1 <= i < j <= n");
  if (w < 0) throw std::invalid_argument("weights must be nonnegative");
  w_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = w;
}

long long inv_w(const Permutation& p, const WeightMatrix& w) {
  if (p.size() != w.size()) throw std::invalid_argument("inv_w: size mismatch");
  long long total = 0;
  for (int i = 1; i < p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p.at(i) > p.at(j)) total += w.at(i, j);
  return total;
}

long long maj_d_perm(const Permutation& p, int d) {
  return inv_w(p, WeightMatrix::kadell(p.size(), d));
}

Permutation inverse_foata(const Permutation& p) {
  std::vector<int> w;
  w.reserve(p.size());
  for (int x : p.images()) {
    if (!w.empty()) {
      // Split after each letter on x's side of the comparison, then cycle
      // each factor by moving its last letter to the front.
      const bool after_small = w.back() < x;
      std::vector<int> next;
      next.reserve(w.size());
      std::size_t start = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const bool boundary = after_small ? (w[i] < x) : (w[i] > x);
        if (boundary) {
          next.push_back(w[i]);
          next.insert(next.end(), w.begin() + start, w.begin() + i);
          start = i + 1;
        }
      }
      w = std::move(next);
    }
    w.push_back(x);
  }
  return Permutation(std::move(w));
}

Permutation foata(const Permutation& p) {
  std::vector<int> v = p.images();
  std::vector<int> out(v.size());
  for (int idx = static_cast<int>(v.size()) - 1; idx >= 0; --idx) {
    const int x = v.back();
    v.pop_back();
    out[idx] = x;
    if (v.empty()) continue;
    // Undo one factor-cycling round: factors start at letters on the same
    // side of x as the first letter; move each factor's first letter to its end.
    const bool start_small = v.front() < x;
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const bool boundary = start_small ? (v[i] < x) : (v[i] > x);
      if (boundary) starts.push_back(i);
    }
    starts.push_back(v.size());
    std::vector<int> next;
    next.reserve(v.size());
    for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
      next.insert(next.end(), v.begin() + starts[f] + 1, v.begin() + starts[f + 1]);
      next.push_back(v[starts[f]]);
    }
    v = std::move(next);
  }
  return Permutation(std::move(out));
}

}  // namespace majd
