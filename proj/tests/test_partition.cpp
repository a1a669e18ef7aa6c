#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permfact/partition.hpp"

#include <set>
#include <sstream>

using namespace permfact;

TEST_CASE("parse accepts both notations") {
  CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
  CHECK(Partition::parse("1^2,3") == Partition{3, 1, 1});
  CHECK(Partition::parse("2^3") == Partition{2, 2, 2});
  CHECK(Partition::parse(" 4 , 1 ") == Partition{4, 1});
  CHECK(Partition::parse("()").empty());
  CHECK(Partition::parse("").empty());
}

TEST_CASE("parse rejects malformed input and names the token") {
  CHECK_THROWS_AS(Partition::parse("0"), ParseError);
  CHECK_THROWS_AS(Partition::parse("-2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2^0"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), ParseError);
  try {
    Partition::parse("3,x7");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("x7") != std::string::npos);
  }
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("format and parse round-trip") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : all_partitions(n)) {
      CHECK(Partition::parse(p.to_string()) == p);
      std::ostringstream os;
      os << p;
      CHECK(os.str() == p.to_string());
    }
  }
}

TEST_CASE("basic accessors") {
  const Partition p{1, 3, 1};
  CHECK(p.part_vector() == std::vector<int>{3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.length() == 3);
  CHECK(p.largest() == 3);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.multiplicities() == std::map<int, int>{{1, 2}, {3, 1}});
  CHECK(p.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
}

TEST_CASE("enumeration counts") {
  CHECK(all_partitions(0).size() == 1);
  CHECK(all_partitions(0).front().empty());
  CHECK(all_partitions(4).size() == 5);
  CHECK(all_partitions(6).size() == 11);
  CHECK(all_partitions(10).size() == 42);
  const auto four = all_partitions(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int d = 1; d <= n; ++d) {
      for (const auto& p : partitions_with_length(n, d)) {
        CHECK(p.length() == d);
        CHECK(p.size() == n);
      }
      total += partitions_with_length(n, d).size();
    }
    CHECK(total == all_partitions(n).size());
    const auto parts = all_partitions(n);
    CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
  }
}

TEST_CASE("centralizer and class sizes") {
  CHECK(z_lambda(Partition{2, 2, 2}) == 48);
  CHECK(z_lambda(Partition{5}) == 5);
  CHECK(z_lambda(Partition{2, 1}) == 2);
  CHECK(class_size(Partition{2, 1}) == 3);
  CHECK(class_size(Partition{4}) == 6);
  CHECK(class_size(Partition{2, 2, 2}) == 15);
  CHECK(aut_lambda(Partition{2, 2, 2}) == 6);
  CHECK(aut_lambda(Partition{3, 1, 1}) == 2);
  CHECK(aut_lambda(Partition{4}) == 1);
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 0; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& p : all_partitions(n)) total += class_size(p);
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("part surgery") {
  CHECK(remove_part(Partition{2, 2}, 2) == Partition{2});
  CHECK(remove_part(Partition{3, 1, 1}, 1) == Partition{3, 1});
  CHECK_THROWS_AS(remove_part(Partition{3, 1, 1}, 2), std::invalid_argument);
  CHECK(add_part(Partition{3, 1}, 2) == Partition{3, 2, 1});
  CHECK(hook_shape(4, 0) == Partition{4});
  CHECK(hook_shape(4, 2) == Partition{2, 1, 1});
  CHECK(hook_shape(4, 3) == Partition{1, 1, 1, 1});
}

TEST_CASE("hash is consistent with equality") {
  PartitionHash h;
  CHECK(h(Partition{3, 1, 1}) == h(Partition::parse("1^2,3")));
}
