#include <doctest.h>

#include <set>
#include <stdexcept>

#include "coinv/combinat.hpp"

using namespace coinv;

TEST_CASE("partitions validate and print") {
  CHECK(Partition({2, 1}).to_string() == "2,1");
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition().size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK(Partition::hook(5, 2) == Partition({3, 1, 1}));
  CHECK(Partition::hook(3, 0) == Partition({1, 1, 1}));
  CHECK_THROWS_AS(Partition::hook(3, 3), std::invalid_argument);
}

TEST_CASE("partitions come in reverse lexicographic order") {
  const std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                        Partition({1, 1, 1, 1})};
  CHECK(enumerate_partitions(4) == expected);
}

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(static_cast<int>(all.size()) == p[n]);
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (const auto& lambda : all) CHECK(lambda.size() == n);
  }
}

TEST_CASE("subsets and compositions correspond") {
  for (int n = 1; n <= 7; ++n) {
    const auto subsets = enumerate_subsets(n);
    CHECK(subsets.size() == (1U << (n - 1)));
    for (const auto& s : subsets) {
      const Composition c = comp_of_set(s);
      CHECK(c.size() == n);
      CHECK(set_of_comp(c) == s);
    }
    CHECK(enumerate_compositions(n).size() == subsets.size());
  }
  CHECK(comp_of_set(IndexSubset::from_elements(5, {2, 3})) == Composition({2, 1, 2}));
  CHECK(set_of_comp(Composition({1, 3})) == IndexSubset::from_elements(4, {1}));
}

TEST_CASE("index subsets") {
  const IndexSubset s = IndexSubset::from_elements(5, {2, 3});
  CHECK(s.to_string() == "{2,3}/n=5");
  CHECK(s.to_brace_string() == "{2,3}");
  CHECK(IndexSubset(4, 0).to_brace_string() == "{}");
  CHECK(IndexSubset::parse("{2,3}/n=5") == s);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));
  CHECK(s.count() == 2);
  CHECK(s.is_subset_of(IndexSubset::interval_to_end(5, 2)));
  CHECK(IndexSubset::interval_to_end(5, 5).count() == 0);
  CHECK_THROWS_AS(IndexSubset::from_elements(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSubset::from_elements(3, {0}), std::invalid_argument);
}

TEST_CASE("compositions") {
  CHECK(Composition({2, 1}).is_partition());
  CHECK_FALSE(Composition({1, 2}).is_partition());
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
}
