#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace stylekit {

std::uint64_t Fnv1a64(std::string_view data);
std::uint64_t SplitMix64(std::uint64_t x);

// Seed for one draw of a named pipeline stage. Each stage owns a substream
// derived from the stage name, so adding a stage leaves the others' draws
// unchanged.
std::uint64_t StageSeed(std::uint64_t global_seed, std::string_view stage,
                        std::string_view item_key = {});

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);

// mt19937_64 plus portable index draws (the standard distributions are not
// specified bit-for-bit across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). n must be positive.
  std::uint64_t Index(std::uint64_t n);

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stylekit
