#include <stdexcept>

#include "doctest.h"
#include "majd/tableau.hpp"

using namespace majd;

TEST_CASE("partition parsing and geometry") {
  const Partition p = Partition::parse("3,3,2");
  CHECK(p.size() == 8);
  CHECK(p.row_count() == 3);
  CHECK(p.col_count() == 3);
  CHECK(p.row_length(1) == 3);
  CHECK(p.row_length(3) == 2);
  CHECK(p.row_length(4) == 0);
  CHECK(p.col_length(1) == 3);
  CHECK(p.col_length(3) == 2);
  CHECK(p.contains(Cell{2, 3}));
  CHECK_FALSE(p.contains(Cell{3, 3}));
  CHECK(p.to_text() == "3,3,2");
  CHECK(Partition::parse("").size() == 0);
  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates in descending lex order") {
  const auto parts = partitions_of(4);
  REQUIRE(parts.size() == 5);
  CHECK(parts.front().to_text() == "4");
  CHECK(parts[1].to_text() == "3,1");
  CHECK(parts.back().to_text() == "1,1,1,1");
}

TEST_CASE("tableau parse, serialize, and index") {
  const StandardTableau t = StandardTableau::parse("1,2,5/3,6,7/4,8,9");
  CHECK(t.size() == 9);
  CHECK(t.to_text() == "1,2,5/3,6,7/4,8,9");
  CHECK(t.at(Cell{3, 1}) == 5);
  CHECK(t.cell_of(8) == Cell{2, 3});
  CHECK(t.reading_word() == std::vector<int>{1, 2, 5, 3, 6, 7, 4, 8, 9});
}

TEST_CASE("non-standard fillings are rejected") {
  CHECK_THROWS_AS(StandardTableau::parse("2,1/3,4"), std::invalid_argument);  // row
  CHECK_THROWS_AS(StandardTableau::parse("1,3/2,2"), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(StandardTableau::parse("1,4/2,3"), std::invalid_argument);  // column
  CHECK_THROWS_AS(StandardTableau::parse("1,2/3,4,5"), std::invalid_argument);
}

TEST_CASE("delete_max removes the outer corner holding n") {
  const StandardTableau t = StandardTableau::parse("1,2,5/3,6,7/4,8,9");
  CHECK(delete_max(t).to_text() == "1,2,5/3,6,7/4,8");
  CHECK(delete_max(StandardTableau::parse("1")).size() == 0);
}

TEST_CASE("enumeration matches hook counts and is reading-word sorted") {
  const Partition shape = Partition::parse("3,2");
  const auto family = enumerate_syt(shape);
  REQUIRE(family.size() == 5);
  CHECK(family.size() == count_syt(shape));
  for (std::size_t i = 1; i < family.size(); ++i)
    CHECK(family[i - 1].reading_word() < family[i].reading_word());
  CHECK(count_syt(Partition::parse("3,3,3")) == 42);
  CHECK(enumerate_syt(Partition::parse("1")).front().to_text() == "1");
}

TEST_CASE("size bounds are enforced") {
  std::vector<int> big(10, 1);
  CHECK_THROWS_AS(enumerate_syt(Partition(big)), std::domain_error);
  std::vector<int> huge(21, 1);
  CHECK_THROWS_AS(count_syt(Partition(huge)), std::domain_error);
  CHECK(count_syt(Partition(std::vector<int>(20, 1))) == 1);
}
