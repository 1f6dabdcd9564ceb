#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <random>

#include "bklrot/oracle.hpp"
#include "test_util.hpp"

using bkl::Word;
using testutil::W;

namespace {

bool contains(const std::vector<Word>& ws, const Word& w) {
  for (const Word& x : ws)
    if (x == w) return true;
  return false;
}

}  // namespace

TEST_CASE("relation rewrites") {
  auto r1 = bkl::relation_rewrites(3, W(3, "1.2 2.3"));
  CHECK(r1.size() == 2);
  CHECK(contains(r1, W(3, "2.3 1.3")));
  CHECK(contains(r1, W(3, "1.3 1.2")));

  // rewrites preserve length
  testutil::each_word_up_to(4, 3, [](const Word& w) {
    for (const Word& r : bkl::relation_rewrites(4, w)) CHECK(r.size() == w.size());
  });

  auto r2 = bkl::relation_rewrites(4, W(4, "1.2 3.4"));
  CHECK(r2.size() == 1);
  CHECK(contains(r2, W(4, "3.4 1.2")));

  CHECK(bkl::relation_rewrites(3, W(3, "1.2")).empty());
  CHECK_THROWS_AS(bkl::relation_rewrites(3, W(3, "1.2!")),
                  std::invalid_argument);
}

TEST_CASE("equivalence classes") {
  auto c = bkl::equivalence_class(3, W(3, "1.2 2.3"));
  CHECK(c.words.size() == 3);
  CHECK(contains(c.words, W(3, "1.2 2.3")));
  CHECK(contains(c.words, W(3, "2.3 1.3")));
  CHECK(contains(c.words, W(3, "1.3 1.2")));

  CHECK(bkl::equivalence_class(3, W(3, "1.2 1.3")).words ==
        std::vector<Word>{W(3, "1.2 1.3")});
  CHECK(bkl::equivalence_class(4, W(4, "")).words ==
        std::vector<Word>{W(4, "")});

  // canonical representative is the least member
  CHECK(bkl::canonical_representative(3, W(3, "2.3 1.3")) == W(3, "1.2 2.3"));
}

TEST_CASE("are_equivalent") {
  CHECK(bkl::are_equivalent(3, W(3, "1.2 2.3"), W(3, "1.3 1.2")));
  CHECK_FALSE(bkl::are_equivalent(3, W(3, "1.2 2.3"), W(3, "2.3 1.2")));
  CHECK(bkl::are_equivalent(3, W(3, "1.2 1.3"), W(3, "1.2 1.3")));
  CHECK_FALSE(bkl::are_equivalent(3, W(3, "1.2"), W(3, "1.2 1.2")));

  // symmetry on random pairs
  std::mt19937 rng(4);
  for (int i = 0; i < 60; ++i) {
    Word u = testutil::random_positive_word(rng, 4, 4);
    Word v = testutil::random_positive_word(rng, 4, 4);
    CHECK(bkl::are_equivalent(4, u, v) == bkl::are_equivalent(4, v, u));
  }
}

TEST_CASE("count_classes") {
  CHECK(bkl::count_classes(3, 0) == 1);
  CHECK(bkl::count_classes(3, 1) == 3);
  CHECK(bkl::count_classes(3, 2) == 7);
  CHECK(bkl::count_classes(4, 0) == 1);

  // class sizes at each length sum to (#generators)^l
  for (int l = 0; l <= 6; ++l) {
    std::uint64_t sum = 0;
    std::uint64_t classes = 0;
    std::vector<Word> seen_reps;
    testutil::each_word(3, l, [&](const Word& w) {
      Word rep = bkl::canonical_representative(3, w);
      if (rep == w) {
        ++classes;
        sum += bkl::equivalence_class(3, w).words.size();
      }
    });
    std::uint64_t total = 1;
    for (int i = 0; i < l; ++i) total *= 3;
    CHECK(sum == total);
    CHECK(classes == bkl::count_classes(3, l));
  }
}

TEST_CASE("oracle budget guard") {
  CHECK_THROWS_AS(bkl::count_classes(3, 3, /*budget=*/5), std::runtime_error);
  CHECK_THROWS_AS(bkl::equivalence_class(4, W(4, "1.2 2.3 3.4 1.2 2.3 3.4"),
                                         /*budget=*/2),
                  std::runtime_error);
}
