#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fza {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent reproducible substream keyed by (seed, stream ids).
class SeededRng {
public:
  SeededRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream)
      : engine_(derive(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  bool coin() { return (engine_() >> 63) != 0; }

private:
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
    auto h = splitmix64(seed);
    for (auto s : stream) {
      h = splitmix64(h ^ splitmix64(s + 0x632be59bd9b4e019ULL));
    }
    return h;
  }

  std::mt19937_64 engine_;
};

}  // namespace fza
