#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubix {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class errc {
  imprimitive,
  degenerate_form,
  not_maximal,
  not_unimodular,
  oracle_bound,
  unsupported_reduction,
  unsupported_family,
  not_normalized,
  type_mismatch,
  precision_exhausted,
  empty_region,
  range_too_large,
  bad_argument,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline int sign(const Int& n) { return n.sign(); }
inline Int iabs(const Int& n) { return abs(n); }

inline Int igcd(Int a, Int b) { return gcd(a, b); }

// cpp_rational rejects negative denominators; normalize the sign here
inline Rat rat(const Int& num, const Int& den) {
  if (den < 0) return Rat(-num, -den);
  return Rat(num, den);
}

// p-adic valuation of n != 0.
inline int valuation(Int n, const Int& p) {
  if (n == 0) throw error(errc::bad_argument, "valuation of 0");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> tab = primes_up_to(1000000);
  return tab;
}

inline bool is_prime_u64(std::uint64_t n);

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod_u64(x, x, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) { d = n; break; }
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

inline void factor_u64(std::uint64_t n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[Int(n)];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit n.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Trial division up to 10^6, then Pollard rho on the 64-bit cofactor.
// Inputs in this artifact stay well below 10^15 in practice.
inline std::map<Int, int> factor(Int n) {
  if (n == 0) throw error(errc::bad_argument, "factor(0)");
  n = iabs(n);
  std::map<Int, int> out;
  for (std::int64_t p : small_primes()) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++out[Int(p)];
    }
  }
  if (n > 1) {
    if (n <= Int(std::numeric_limits<std::uint64_t>::max())) {
      detail::factor_u64(static_cast<std::uint64_t>(n), out);
    } else {
      // cofactor with all prime factors > 10^6 and magnitude > 2^64: out of the
      // supported desk-scale range
      throw error(errc::range_too_large, "factor: cofactor exceeds 64 bits");
    }
  }
  return out;
}

inline std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw error(errc::bad_argument, "isqrt of negative");
  return sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += iabs(m);
  return r;
}

inline std::int64_t mod_floor64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

inline std::int64_t to_i64(const Int& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw error(errc::range_too_large, "value exceeds 64 bits");
  return static_cast<std::int64_t>(n);
}

inline double to_double(const Rat& q) {
  return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

// Round half away from zero at 3 decimals, rendered as a string; the
// convention that prints 45/14 as "3.214".
inline std::string render3(const Rat& x) {
  bool neg = x < 0;
  Rat ax = neg ? Rat(-x) : x;
  Int n = numerator(ax) * 1000;
  Int d = denominator(ax);
  Int milli = (2 * n + d) / (2 * d);  // round half up on |x|
  std::string frac = Int(milli % 1000).str();
  frac.insert(0, 3 - frac.size(), '0');
  return (neg ? "-" : "") + Int(milli / 1000).str() + "." + frac;
}

}  // namespace cubix
