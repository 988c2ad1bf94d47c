#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace domlocal {

// Error taxonomy. Anything thrown from the library derives from error so
// callers can distinguish our failures from stdlib ones.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input (files, JSON, CLI-supplied params).
struct parse_error : error {
  using error::error;
};

// A documented pre/postcondition was violated. Indicates a bug or a
// misclassified input; never swallowed.
struct contract_error : error {
  using error::error;
};

// A node program looked outside its ball.
struct locality_error : error {
  using error::error;
};

// A bounded search hit its resource cap. The result is unknown, not wrong.
struct search_aborted : error {
  using error::error;
};

// Deterministic RNG. mt19937_64 has a standard-mandated output sequence and
// all sampling below avoids std::uniform_*_distribution (whose mapping is
// implementation-defined), so streams are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw contract_error("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double real() {  // [0, 1) with 53 bits
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return real() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace domlocal
