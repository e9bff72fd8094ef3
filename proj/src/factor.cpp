#include "serex/factor.hpp"

#include <random>
#include <stdexcept>

namespace serex {
namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

bool miller_rabin_witness(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  Int x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Floyd-cycle Pollard rho; n must be odd and composite.
Int pollard_rho(const Int& n, std::mt19937_64& rng) {
  for (;;) {
    Int c = Int(rng() % 1024) + 1;
    Int x = Int(rng() % 1024) + 2;
    Int y = x, d = 1;
    do {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = n;  // cycle without a factor; retry with a new polynomial
        break;
      }
      d = gcd(diff, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // This witness set is exact below 3.3e24.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, Int(a))) return false;
  }
  return true;
}

std::map<Int, int> factorize(const Int& value) {
  if (value < 1) throw std::domain_error("factorize requires a positive integer");
  std::map<Int, int> out;
  Int n = value;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  for (Int p = 17; p * p <= n && p < 100000; p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    std::mt19937_64 rng(0x5e7ec0de5eedULL);
    factor_into(n, out, rng);
  }
  return out;
}

}  // namespace serex
