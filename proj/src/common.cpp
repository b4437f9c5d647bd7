#include "relplan/common.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace relplan {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

static const char kB64Alpha[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const unsigned char* data, size_t n) {
  std::string out;
  out.reserve(base64_length(n));
  size_t i = 0;
  for (; i + 3 <= n; i += 3) {
    uint32_t v = (uint32_t(data[i]) << 16) | (uint32_t(data[i + 1]) << 8) | data[i + 2];
    out.push_back(kB64Alpha[(v >> 18) & 63]);
    out.push_back(kB64Alpha[(v >> 12) & 63]);
    out.push_back(kB64Alpha[(v >> 6) & 63]);
    out.push_back(kB64Alpha[v & 63]);
  }
  size_t rem = n - i;
  if (rem == 1) {
    uint32_t v = uint32_t(data[i]) << 16;
    out.push_back(kB64Alpha[(v >> 18) & 63]);
    out.push_back(kB64Alpha[(v >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rem == 2) {
    uint32_t v = (uint32_t(data[i]) << 16) | (uint32_t(data[i + 1]) << 8);
    out.push_back(kB64Alpha[(v >> 18) & 63]);
    out.push_back(kB64Alpha[(v >> 12) & 63]);
    out.push_back(kB64Alpha[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(std::string_view s) {
  static int8_t table[256];
  static bool init = false;
  if (!init) {
    std::memset(table, -1, sizeof(table));
    for (int i = 0; i < 64; ++i) table[uint8_t(kB64Alpha[i])] = int8_t(i);
    init = true;
  }
  if (s.size() % 4 != 0) throw MalformedRecord("base64 length not a multiple of 4");
  std::vector<unsigned char> out;
  out.reserve(s.size() / 4 * 3);
  for (size_t i = 0; i < s.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      char c = s[i + k];
      if (c == '=') {
        if (i + 4 != s.size() || k < 2) throw MalformedRecord("base64 stray padding");
        vals[k] = 0;
        ++pad;
      } else {
        int8_t v = table[uint8_t(c)];
        if (v < 0 || pad > 0) throw MalformedRecord("base64 bad character");
        vals[k] = v;
      }
    }
    uint32_t v = (uint32_t(vals[0]) << 18) | (uint32_t(vals[1]) << 12) |
                 (uint32_t(vals[2]) << 6) | uint32_t(vals[3]);
    out.push_back((v >> 16) & 0xff);
    if (pad < 2) out.push_back((v >> 8) & 0xff);
    if (pad < 1) out.push_back(v & 0xff);
  }
  return out;
}

void parallel_chunks(size_t n, size_t chunk_size, int threads,
                     const std::function<void(size_t, size_t, size_t)>& fn) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  auto run_chunk = [&](size_t ci) {
    size_t b = ci * chunk_size;
    size_t e = std::min(n, b + chunk_size);
    fn(ci, b, e);
  };
  if (threads <= 1 || n_chunks == 1) {
    for (size_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
    return;
  }
  std::atomic<size_t> next{0};
  size_t n_workers = std::min<size_t>(size_t(threads), n_chunks);
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t ci = next.fetch_add(1);
        if (ci >= n_chunks) return;
        run_chunk(ci);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace relplan
