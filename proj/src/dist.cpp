#include "majd/dist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace majd {

void DistPolynomial::add_value(long long value, std::uint64_t count) {
  if (value < 0) throw std::invalid_argument("negative statistic value");
  if (static_cast<std::size_t>(value) >= coeffs.size()) coeffs.resize(value + 1, 0);
  coeffs[value] += count;
}

void DistPolynomial::merge(const DistPolynomial& other) {
  if (other.coeffs.size() > coeffs.size()) coeffs.resize(other.coeffs.size(), 0);
  for (std::size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
}

void DistPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::uint64_t DistPolynomial::total() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0});
}

std::string DistPolynomial::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

namespace {

constexpr int kMaxPermN = 10;  // 10! ranks still enumerate quickly and exactly

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lexicographic unranking via the factorial number system.
Permutation unrank(int n, std::uint64_t rank) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  std::uint64_t f = factorial(n);
  for (int i = n; i >= 1; --i) {
    f /= static_cast<std::uint64_t>(i);
    const auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(avail[digit]);
    avail.erase(avail.begin() + digit);
  }
  return Permutation(std::move(images));
}

long long eval_perm(const Permutation& p, PermStat stat, int d) {
  switch (stat) {
    case PermStat::Inv: return inv(p);
    case PermStat::Maj: return maj(p);
    case PermStat::MajD: return maj_d_perm(p, d);
  }
  throw std::logic_error("unknown permutation statistic");
}

long long eval_tab(const StandardTableau& t, TabStat stat, int d) {
  switch (stat) {
    case TabStat::MajTab: return maj_tab(t);
    case TabStat::MajDTab: return maj_d_transform(t, d);
    case TabStat::InvHS: return inv_hs(t);
    case TabStat::Naive: return naive_weighted(t, d);
  }
  throw std::logic_error("unknown tableau statistic");
}

template <typename Eval>
DistPolynomial chunked_fold(std::uint64_t count, int jobs, Eval eval) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2 * static_cast<std::uint64_t>(jobs)) {
    DistPolynomial dist;
    for (std::uint64_t i = 0; i < count; ++i) eval(i, dist);
    dist.trim();
    return dist;
  }
  std::vector<DistPolynomial> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      const std::uint64_t lo = count * w / jobs;
      const std::uint64_t hi = count * (w + 1) / jobs;
      for (std::uint64_t i = lo; i < hi; ++i) eval(i, partial[w]);
    });
  }
  for (auto& worker : workers) worker.join();
  DistPolynomial dist;
  for (const auto& p : partial) dist.merge(p);
  dist.trim();
  return dist;
}

}  // namespace

DistPolynomial perm_distribution(int n, PermStat stat, int d, int jobs) {
  if (n < 1) throw std::invalid_argument("perm_distribution: n must be positive");
  if (n > kMaxPermN)
    throw std::domain_error("perm_distribution: n exceeds the factorial guard (n <= 10)");
  if (stat == PermStat::MajD && d < 1)
    throw std::invalid_argument("perm_distribution: maj_d requires d >= 1");
  const std::uint64_t count = factorial(n);
  return chunked_fold(count, jobs, [&](std::uint64_t rank, DistPolynomial& dist) {
    dist.add_value(eval_perm(unrank(n, rank), stat, d));
  });
}

DistPolynomial tab_distribution(const Partition& shape, TabStat stat, int d, int jobs) {
  if ((stat == TabStat::MajDTab || stat == TabStat::Naive) && d < 1)
    throw std::invalid_argument("tab_distribution: this statistic requires d >= 1");
  const std::vector<StandardTableau> family = enumerate_syt(shape);
  return chunked_fold(family.size(), jobs, [&](std::uint64_t i, DistPolynomial& dist) {
    dist.add_value(eval_tab(family[i], stat, d));
  });
}

}  // namespace majd
