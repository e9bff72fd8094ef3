#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "serex/factor.hpp"

using namespace serex;

namespace {

Int product(const std::map<Int, int>& factors) {
  Int acc(1);
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) acc *= p;
  }
  return acc;
}

}  // namespace

TEST_CASE("primality on small and structured inputs") {
  CHECK_FALSE(is_probable_prime(Int(0)));
  CHECK_FALSE(is_probable_prime(Int(1)));
  CHECK(is_probable_prime(Int(2)));
  CHECK(is_probable_prime(Int(3)));
  CHECK_FALSE(is_probable_prime(Int(4)));
  CHECK(is_probable_prime(Int(97)));
  CHECK_FALSE(is_probable_prime(Int(561)));    // Carmichael
  CHECK_FALSE(is_probable_prime(Int(341)));    // 2-pseudoprime
  CHECK(is_probable_prime(Int(1'000'000'007)));
  CHECK(is_probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_probable_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("factorize on known decompositions") {
  CHECK(factorize(Int(1)).empty());
  CHECK(factorize(Int(2)) == std::map<Int, int>{{Int(2), 1}});
  CHECK(factorize(Int(12)) == std::map<Int, int>{{Int(2), 2}, {Int(3), 1}});
  CHECK(factorize(Int(97)) == std::map<Int, int>{{Int(97), 1}});
  CHECK(factorize(Int(1024)) == std::map<Int, int>{{Int(2), 10}});
  CHECK(factorize(Int(600851475143)) ==
        std::map<Int, int>{{Int(71), 1}, {Int(839), 1}, {Int(1471), 1}, {Int(6857), 1}});
  // Semiprime past the trial-division bound exercises the rho stage.
  CHECK(factorize(Int(1000003) * Int(1000033)) ==
        std::map<Int, int>{{Int(1000003), 1}, {Int(1000033), 1}});
  CHECK_THROWS(factorize(Int(0)));
  CHECK_THROWS(factorize(Int(-6)));
}

TEST_CASE("factorization multiplies back and has prime parts") {
  for (long long v = 2; v <= 3000; ++v) {
    auto f = factorize(Int(v));
    CHECK(product(f) == v);
    for (const auto& [p, e] : f) {
      CHECK(is_probable_prime(p));
      CHECK(e >= 1);
    }
  }
}

TEST_CASE("factorize is deterministic across calls") {
  Int hard = Int(87178291199) * Int(79);  // large prime cofactor lands in the rho stage
  auto a = factorize(hard);
  auto b = factorize(hard);
  CHECK(a == b);
  CHECK(product(a) == hard);
  CHECK(a.count(Int(87178291199)) == 1);
}
