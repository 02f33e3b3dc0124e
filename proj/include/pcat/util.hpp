#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction would exceed the configured SizeGuard.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(std::string what, std::uint64_t estimate, std::uint64_t limit)
      : Error(what + ": estimated " + std::to_string(estimate) + " exceeds limit " +
              std::to_string(limit)),
        estimate_(estimate),
        limit_(limit) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

inline std::uint64_t sat_pow2(std::size_t n) { return n >= 64 ? kSaturated : (std::uint64_t{1} << n); }

/// Bounds on generated power constructions. Power iterates grow doubly
/// exponentially, so every enumeration is checked against these limits first.
struct SizeGuard {
  std::uint64_t max_objects = 1'000'000;
  std::uint64_t max_morphisms = 1'000'000;
  /// Composable pairs stored when a composition table is materialized.
  std::uint64_t max_composites = 20'000'000;

  /// Default guard, with PCAT_MAX_ELEMENTS overriding the object and morphism bounds.
  static SizeGuard from_env() {
    SizeGuard g;
    if (const char* env = std::getenv("PCAT_MAX_ELEMENTS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) {
        g.max_objects = v;
        g.max_morphisms = v;
        g.max_composites = std::max<std::uint64_t>(g.max_composites, sat_mul(v, 20));
      }
    }
    return g;
  }

  void require_objects(std::uint64_t n, const std::string& what) const {
    if (n > max_objects) throw SizeGuardExceeded(what + " (objects)", n, max_objects);
  }
  void require_morphisms(std::uint64_t n, const std::string& what) const {
    if (n > max_morphisms) throw SizeGuardExceeded(what + " (morphisms)", n, max_morphisms);
  }
  void require_composites(std::uint64_t n, const std::string& what) const {
    if (n > max_composites) throw SizeGuardExceeded(what + " (composable pairs)", n, max_composites);
  }
};

/// Dynamically sized bitset with value semantics and a total order, used for
/// subsets of small finite carriers.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = kSaturated - kSaturated % n;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::string join(const std::vector<std::string>& parts, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string braces(const std::vector<std::string>& parts) { return "{" + join(parts) + "}"; }

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace pcat
