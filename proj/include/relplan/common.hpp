#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relplan {

inline constexpr const char* kToolVersion = "relplan 1.0.0";

// ---- error types ------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlacementExhausted : Error { using Error::Error; };
struct UnknownObject : Error { using Error::Error; };
struct InapplicableAction : Error { using Error::Error; };
struct SubjectNotAllowed : Error { using Error::Error; };
struct NonFiniteResidual : Error { using Error::Error; };
struct InfeasibleResult : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NonFiniteActivation : Error { using Error::Error; };
struct NonFiniteGradient : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };
struct MalformedRecord : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct ModelPredicateMissing : Error { using Error::Error; };

// ---- deterministic rng --------------------------------------------------------

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a(std::string_view s);

// mt19937_64 is fully specified by the standard, and all floating-point draws
// below are derived from raw engine words, so streams are bit-identical across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

  uint64_t next_u64() { return eng_(); }

  // uniform double in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n)
  uint64_t below(uint64_t n) { return eng_() % n; }

  // standard normal via Box-Muller (no std::normal_distribution: its output is
  // implementation-defined)
  double normal();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// round to 6 decimal places; canonical precision for serialized geometry
double round6(double v);

// ---- base64 -------------------------------------------------------------------

std::string base64_encode(const unsigned char* data, size_t n);
std::vector<unsigned char> base64_decode(std::string_view s);

// encoded length for n input bytes (padded form)
inline size_t base64_length(size_t n) { return ((n + 2) / 3) * 4; }

// ---- fixed-chunk parallel loop --------------------------------------------------

// Splits [0, n) into chunks of `chunk_size` and runs fn(chunk_index, begin, end)
// across up to `threads` workers. Chunk boundaries depend only on n and
// chunk_size, so per-chunk results merge in a fixed order for any thread count.
void parallel_chunks(size_t n, size_t chunk_size, int threads,
                     const std::function<void(size_t, size_t, size_t)>& fn);

}  // namespace relplan
