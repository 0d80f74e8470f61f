// Concurrent memo cache for Green-tensor evaluations keyed by quantized
// (x1-y1, x2, y2) triplets.  Keys quantize to ~1e-12 relative (the low 12
// mantissa bits are cleared), values are whatever the wrapped evaluator
// produced first; evaluators are pure, so results are independent of thread
// interleaving.
#ifndef HSRTM_GREEN_CACHE_HPP
#define HSRTM_GREEN_CACHE_HPP

#include <cstdint>
#include <cstring>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "hsrtm/tensor.hpp"

namespace hsrtm {

class GreenCache {
 public:
  explicit GreenCache(std::size_t shards = 64) : shards_(shards) {}

  template <class F>
  Tensor2C get_or_compute(double d, double x2, double y2, F&& compute) {
    const Key k{quantize(d), quantize(x2), quantize(y2)};
    Shard& s = shards_[hash(k) % shards_.size()];
    {
      std::shared_lock lock(s.mutex);
      auto it = s.map.find(k);
      if (it != s.map.end()) return it->second;
    }
    const Tensor2C v = compute();
    std::unique_lock lock(s.mutex);
    return s.map.try_emplace(k, v).first->second;  // first insert wins
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : shards_) {
      std::shared_lock lock(s.mutex);
      n += s.map.size();
    }
    return n;
  }

  static std::uint64_t quantize(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    return bits & ~std::uint64_t{0xFFF};
  }

 private:
  struct Key {
    std::uint64_t a, b, c;
    bool operator==(const Key&) const = default;
  };
  static std::size_t hash(const Key& k) {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::uint64_t v : {k.a, k.b, k.c}) {
      h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xFF51AFD7ED558CCDull;
    }
    return static_cast<std::size_t>(h);
  }
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return hash(k); }
  };
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<Key, Tensor2C, KeyHash> map;
  };
  mutable std::vector<Shard> shards_;
};

}  // namespace hsrtm

#endif
