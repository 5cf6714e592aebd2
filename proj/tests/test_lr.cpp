#include <filesystem>

#include "doctest.h"
#include "holocone/lr.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace holocone;
using testing_support::small_partitions;
using testing_support::uniform;

namespace {
GLWeight star(const GLWeight& w) {
  GLWeight out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}
}  // namespace

TEST_SUITE("lr") {
  TEST_CASE("coefficient examples") {
    CHECK(lr_coefficient({1, 0}, {1, 0}, {1, 1}) == 1);
    CHECK(lr_coefficient({3, 1}, {0, 0}, {3, 1}) == 1);
    CHECK(lr_coefficient({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient({1, 0}, {1, 0}, {3, 0}) == 0);
    CHECK_THROWS(lr_coefficient({1, 0}, {1, 0, 0}, {2, 0}));
  }

  TEST_CASE("tensor_expand") {
    CHECK(tensor_expand({1, 0}, {1, 0}) == std::map<GLWeight, Multiplicity>{{{2, 0}, 1}, {{1, 1}, 1}});
    CHECK(tensor_expand({2, -1}, {0, 0}) == std::map<GLWeight, Multiplicity>{{{2, -1}, 1}});
    CHECK(tensor_expand({1, 1}, {1, 0}) == std::map<GLWeight, Multiplicity>{{{2, 1}, 1}});
    for (const auto& l : small_partitions(3, 4))
      for (const auto& m : small_partitions(3, 3)) {
        std::int64_t total = 0;
        for (const auto& [nu, c] : tensor_expand(l, m)) total += c * weyl_dim(nu);
        CHECK(total == weyl_dim(l) * weyl_dim(m));
      }
  }

  TEST_CASE("triple multiplicity") {
    CHECK(triple_multiplicity({2, 1}, {1, 0}, {0, 0}, {3, 1}) == lr_coefficient({2, 1}, {1, 0}, {3, 1}));
    CHECK(triple_multiplicity({1, 0}, {1, 0}, {1, 0}, {2, 1}) == 2);
    CHECK(triple_multiplicity({1, 0}, {1, 0}, {1, 0}, {2, 0}) == 0);
    // Contraction order does not matter.
    for (int i = 0; i < 60; ++i) {
      const auto a = testing_support::random_dominant_block(3, -2, 2), b = testing_support::random_dominant_block(3, -2, 2),
                 d = testing_support::random_dominant_block(3, 0, 2), n = testing_support::random_dominant_block(3, -3, 4);
      CHECK(triple_multiplicity(a, b, d, n) == triple_multiplicity(d, b, a, n));
      CHECK(triple_multiplicity(a, b, d, n) == triple_multiplicity(b, d, a, n));
    }
  }

  TEST_CASE("Weyl dimension against tableau counts") {
    CHECK(weyl_dim({0, 0}) == 1);
    CHECK(weyl_dim({1, 0}) == 2);
    CHECK(weyl_dim({1, 1, 0}) == 3);
    for (int n = 1; n <= 4; ++n)
      for (const auto& l : small_partitions(n, 6)) {
        CHECK(weyl_dim(l) == oracle::ssyt_count(l, n));
        CHECK(weyl_dim(shifted(l, -3)) == weyl_dim(l));
      }
    CHECK_THROWS(weyl_dim({0, 1}));
  }

  TEST_CASE("symmetry, shift invariance and duality") {
    for (int i = 0; i < 300; ++i) {
      const int n = static_cast<int>(uniform(1, 3));
      const auto l = testing_support::random_dominant_block(n, -2, 3);
      const auto m = testing_support::random_dominant_block(n, -2, 3);
      const auto v = testing_support::random_dominant_block(n, -4, 6);
      const auto c = lr_coefficient(l, m, v);
      CHECK(c == lr_coefficient(m, l, v));
      const long a = uniform(-3, 3), b = uniform(-3, 3);
      CHECK(c == lr_coefficient(shifted(l, a), shifted(m, b), shifted(v, a + b)));
      CHECK(c == lr_coefficient(star(l), star(m), star(v)));
    }
  }

  TEST_CASE("agrees with Schur polynomial products") {
    for (int n = 1; n <= 3; ++n) {
      const auto parts = small_partitions(n, 4);
      for (const auto& l : parts)
        for (const auto& m : parts) {
          const auto expected = oracle::decompose(oracle::multiply(oracle::gl_character(l), oracle::gl_character(m)), {n});
          std::map<GLWeight, Multiplicity> want(expected.begin(), expected.end());
          CHECK(tensor_expand(l, m) == want);
        }
    }
  }

  TEST_CASE("cache persistence is advisory") {
    LrCache cache;
    const auto c = lr_coefficient({3, 1, 0}, {2, 1, 0}, {4, 2, 1}, cache);
    CHECK(cache.size() >= 1);
    const auto file = std::filesystem::temp_directory_path() / "holocone-lr-cache-test.txt";
    cache.save(file);
    LrCache loaded;
    CHECK(loaded.load(file));
    CHECK(loaded.size() == cache.size());
    CHECK(lr_coefficient({3, 1, 0}, {2, 1, 0}, {4, 2, 1}, loaded) == c);
    CHECK(loaded.hits() >= 1);
    std::filesystem::remove(file);
    LrCache missing;
    CHECK_FALSE(missing.load(file));
    CHECK(lr_coefficient({3, 1, 0}, {2, 1, 0}, {4, 2, 1}, missing) == c);
  }
}
