#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "majd/perm.hpp"

using namespace majd;

namespace {

template <typename Fn>
void for_each_perm(int n, Fn fn) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

TEST_CASE("permutation parsing accepts both encodings") {
  CHECK(Permutation::parse("3142") == Permutation::parse("3,1,4,2"));
  CHECK(Permutation::parse("3142").to_text() == "3142");
  CHECK(Permutation::identity(4).to_text() == "1234");
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK_THROWS_AS(Permutation::parse("1123"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("135"), std::invalid_argument);
  CHECK(Permutation::parse("").size() == 0);
}

TEST_CASE("inv and maj basics") {
  const Permutation p = Permutation::parse("3142");
  CHECK(inv(p) == 3);
  CHECK(maj(p) == 4);
  CHECK(inversion_set(p) ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {3, 4}});
  CHECK(inv(Permutation::identity(5)) == 0);
  CHECK(maj(Permutation::parse("4321")) == 6);
}

TEST_CASE("kadell weight matrix") {
  const WeightMatrix w = WeightMatrix::kadell(6, 3);
  CHECK(w.at(2, 5) == 2);   // j - i = d
  CHECK(w.at(1, 3) == 1);   // inside the band
  CHECK(w.at(1, 6) == 0);   // beyond the band
  CHECK(w.at(4, 4) == 0);   // diagonal and below are empty
  CHECK(inv_w(Permutation::parse("321"), WeightMatrix::ones(3)) ==
        inv(Permutation::parse("321")));
}

TEST_CASE("maj_d collapses to maj at d=1 and inv for d >= n") {
  for_each_perm(5, [](const Permutation& p) {
    CHECK(maj_d_perm(p, 1) == maj(p));
    CHECK(maj_d_perm(p, 5) == inv(p));
    CHECK(maj_d_perm(p, 7) == inv(p));
  });
}

TEST_CASE("foata carries inv to maj and round-trips") {
  for (int n = 1; n <= 6; ++n) {
    for_each_perm(n, [](const Permutation& p) {
      const Permutation f = foata(p);
      CHECK(maj(f) == inv(p));
      CHECK(inverse_foata(f) == p);
      CHECK(foata(inverse_foata(p)) == p);
    });
  }
}
