#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace facelab {

/** Raised when a field description cannot be realized. */
struct InvalidField : std::runtime_error {
  explicit InvalidField(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Description of a finite coefficient field.
 *
 * Prime fields GF(p) are supported for any prime p < 2^31.  Extensions are
 * supported in characteristic 2 up to GF(2^16); the modulus for GF(2^16) is
 * x^16 + x^5 + x^3 + x + 1.
 */
struct FieldSpec {
  long long characteristic = 32003;
  int extension_degree = 1;

  bool operator==(const FieldSpec& o) const {
    return characteristic == o.characteristic && extension_degree == o.extension_degree;
  }
  std::string to_string() const {
    std::string s = std::to_string(characteristic);
    if (extension_degree > 1) s += ":" + std::to_string(extension_degree);
    return s;
  }
};

/** Parses "P" or "P:K" into a FieldSpec.  Throws InvalidField on bad syntax. */
inline FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    spec.characteristic = std::stoll(text.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? text.size() : colon)) throw std::invalid_argument(text);
    if (colon != std::string::npos) {
      spec.extension_degree = std::stoi(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw InvalidField("cannot parse field description '" + text + "' (expected P or P:K)");
  }
  return spec;
}

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible moduli over GF(2), degree 2..16, verified by factor search.
// Index k-2 holds the modulus for GF(2^k); bit i is the coefficient of x^i.
inline constexpr std::uint32_t kBinaryModulus[15] = {
    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,    0x11B,  0x203,
    0x409,  0x805,  0x1009, 0x201B, 0x4021, 0x8003,  0x1002B};

}  // namespace detail

/**
 * Arithmetic in a fixed finite field.  Elements are raw machine words:
 * residues for GF(p), polynomial bit masks for GF(2^k).  Binary extensions
 * use discrete-log tables, so construction costs O(q) once.
 */
class Gf {
 public:
  explicit Gf(FieldSpec spec) : spec_(spec) {
    const long long p = spec.characteristic;
    const int k = spec.extension_degree;
    if (p < 2 || p >= (1LL << 31) || !detail::is_prime_u64(static_cast<std::uint64_t>(p)))
      throw InvalidField("characteristic must be a prime < 2^31, got " + std::to_string(p));
    if (k < 1) throw InvalidField("extension degree must be >= 1");
    if (k > 1 && p != 2)
      throw InvalidField("extensions are only supported in characteristic 2");
    if (k > 16) throw InvalidField("binary extensions supported up to GF(2^16)");
    p_ = static_cast<std::uint64_t>(p);
    if (p == 2 && k >= 2) {
      binary_ = true;
      q_ = 1ull << k;
      modulus_ = detail::kBinaryModulus[k - 2];
      build_tables(k);
    } else {
      binary_ = false;
      q_ = p_;
    }
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t order() const { return q_; }
  long long characteristic() const { return spec_.characteristic; }
  bool is_prime_field() const { return !binary_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (binary_) return a ^ b;
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (binary_) return a ^ b;
    return a >= b ? a - b : static_cast<std::uint32_t>(a + q_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (binary_) return a;
    return a == 0 ? 0 : static_cast<std::uint32_t>(q_ - a);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (binary_) return exp_[log_[a] + log_[b]];
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (binary_) return exp_[q_ - 1 - log_[a]];
    // Fermat: a^(p-2) mod p.
    std::uint64_t base = a, acc = 1, e = q_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  /** Canonical image of a signed integer (used for boundary-map signs). */
  std::uint32_t from_int(long long v) const {
    long long m = static_cast<long long>(characteristic());
    long long r = v % m;
    if (r < 0) r += m;
    if (!binary_) return static_cast<std::uint32_t>(r);
    return r ? 1u : 0u;  // prime subfield of GF(2^k)
  }

  /** Deterministic uniform draw; reproducible across platforms. */
  std::uint32_t sample(std::mt19937_64& rng) const {
    return static_cast<std::uint32_t>(rng() % q_);
  }

 private:
  void build_tables(int k) {
    const std::uint64_t order = q_ - 1;
    // Factor q-1 for order tests.
    std::vector<std::uint64_t> primes;
    std::uint64_t m = order;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
    // Find a multiplicative generator by direct order tests.
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (std::uint64_t f : primes)
        if (pow_slow(cand, order / f, k) == 1) { ok = false; break; }
      if (ok) { g = cand; break; }
    }
    if (g == 0) throw InvalidField("no generator found (internal)");
    exp_.assign(2 * q_, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, g, k);
    }
    for (std::uint64_t i = order; i < 2 * q_; ++i) exp_[i] = exp_[i - order];
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b, int k) const {
    std::uint64_t r = 0, aa = a;
    while (b) {
      if (b & 1) r ^= aa;
      aa <<= 1;
      b >>= 1;
    }
    for (int bit = 2 * k - 2; bit >= k; --bit)
      if (r >> bit & 1) r ^= static_cast<std::uint64_t>(modulus_) << (bit - k);
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e, int k) const {
    std::uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = mul_slow(acc, a, k);
      a = mul_slow(a, a, k);
      e >>= 1;
    }
    return acc;
  }

  FieldSpec spec_;
  std::uint64_t p_ = 2, q_ = 2;
  bool binary_ = false;
  std::uint32_t modulus_ = 0;
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace facelab
