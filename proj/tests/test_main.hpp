#ifndef INVCONJ_TEST_MAIN_HPP_
#define INVCONJ_TEST_MAIN_HPP_

// Shared doctest main: strips --seed N from the command line so randomized
// property tests are reproducible, then hands the rest to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

inline std::uint64_t& seed_slot() {
  static std::uint64_t seed = 20240817;
  return seed;
}

inline std::uint64_t seed() { return seed_slot(); }

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(seed() + salt);
}

}  // namespace testsupport

int main(int argc, char** argv) {
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    if (std::string(argv[i]) == "--seed" && i + 1 < argc) {
      testsupport::seed_slot() = std::strtoull(argv[i + 1], nullptr, 10);
      ++i;
      continue;
    }
    args.push_back(argv[i]);
  }
  doctest::Context context(static_cast<int>(args.size()), args.data());
  return context.run();
}

#endif  // INVCONJ_TEST_MAIN_HPP_
