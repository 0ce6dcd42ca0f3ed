#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pat {

inline constexpr const char* kVersion = "0.1.0";

using cplx = std::complex<double>;

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed config files, bad keys, unparsable values. CLI maps these to exit 1.
struct ConfigError : Error {
  using Error::Error;
};

// File system / format errors. CLI maps these to exit 1.
struct IoError : Error {
  using Error::Error;
};

// Numerical failures (non-convergence, singular geometry, non-finite data).
// CLI maps these to exit 2.
struct NumericalError : Error {
  using Error::Error;
};

// FNV-1a, used for geometry/config fingerprints in file sidecars and manifests.
class Fnv64 {
 public:
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= 0x100000001b3ull;
    }
  }
  void update(const std::string& s) { update(s.data(), s.size()); }
  void update(double v) { update(&v, sizeof v); }
  void update(std::uint64_t v) { update(&v, sizeof v); }
  std::uint64_t digest() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

}  // namespace pat
