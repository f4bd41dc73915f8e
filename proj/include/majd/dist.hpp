#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majd/perm.hpp"
#include "majd/stats.hpp"

namespace majd {

// Coefficient vector of a generating function sum_objects q^stat.
struct DistPolynomial {
  std::vector<std::uint64_t> coeffs;

  void add_value(long long value, std::uint64_t count = 1);
  void merge(const DistPolynomial& other);
  void trim();  // drop trailing zeros
  std::uint64_t total() const;
  std::string to_text() const;  // "[1,2,2,1]"

  friend bool operator==(const DistPolynomial&, const DistPolynomial&) = default;
};

enum class PermStat { Inv, Maj, MajD };
enum class TabStat { MajTab, MajDTab, InvHS, Naive };

// Distribution over S_n; jobs > 1 splits the rank range across threads and
// merges by coefficient-wise addition.
DistPolynomial perm_distribution(int n, PermStat stat, int d = 0, int jobs = 1);

// Distribution over SYT(shape).
DistPolynomial tab_distribution(const Partition& shape, TabStat stat, int d = 0, int jobs = 1);

}  // namespace majd
