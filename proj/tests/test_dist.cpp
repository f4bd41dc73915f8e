#include <stdexcept>

#include "doctest.h"
#include "majd/dist.hpp"

using namespace majd;

TEST_CASE("polynomial plumbing") {
  DistPolynomial p;
  p.add_value(2);
  p.add_value(4);
  p.add_value(2);
  CHECK(p.to_text() == "[0,0,2,0,1]");
  CHECK(p.total() == 3);
  DistPolynomial q;
  q.add_value(0);
  q.merge(p);
  CHECK(q.to_text() == "[1,0,2,0,1]");
}

TEST_CASE("inv over S_3") {
  CHECK(perm_distribution(3, PermStat::Inv).to_text() == "[1,2,2,1]");
  CHECK(perm_distribution(4, PermStat::Inv).total() == 24);
}

TEST_CASE("maj_d matches inv for every d on small symmetric groups") {
  for (int n = 1; n <= 6; ++n) {
    const DistPolynomial inv_dist = perm_distribution(n, PermStat::Inv);
    CHECK(perm_distribution(n, PermStat::Maj) == inv_dist);
    for (int d = 1; d <= n; ++d)
      CHECK(perm_distribution(n, PermStat::MajD, d) == inv_dist);
  }
}

TEST_CASE("parallel fold is deterministic") {
  const DistPolynomial serial = perm_distribution(6, PermStat::MajD, 3, 1);
  CHECK(perm_distribution(6, PermStat::MajD, 3, 4) == serial);
  CHECK(perm_distribution(6, PermStat::MajD, 3, 7) == serial);
}

TEST_CASE("tableau distributions") {
  CHECK(tab_distribution(Partition::parse("2,2"), TabStat::MajTab).to_text() ==
        "[0,0,1,0,1]");
  CHECK(tab_distribution(Partition::parse("2,2"), TabStat::MajDTab, 3) ==
        tab_distribution(Partition::parse("2,2"), TabStat::MajTab));
  for (const Partition& shape : partitions_of(5)) {
    const DistPolynomial maj_dist = tab_distribution(shape, TabStat::MajTab);
    for (int d = 1; d <= 5; ++d)
      CHECK(tab_distribution(shape, TabStat::MajDTab, d) == maj_dist);
    CHECK(maj_dist.total() == count_syt(shape));
  }
}

TEST_CASE("distribution bounds are enforced") {
  CHECK_THROWS_AS(perm_distribution(11, PermStat::Inv), std::domain_error);
}
