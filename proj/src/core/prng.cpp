// Copyright 2026 The qcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prng.hpp"

#include <cmath>

namespace qcp {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<uint32_t, 4>& c,
                         const std::array<uint32_t, 2>& k) {
  const uint64_t p0 = uint64_t(kPhiloxM0) * c[0];
  const uint64_t p1 = uint64_t(kPhiloxM1) * c[2];
  const uint32_t hi0 = uint32_t(p0 >> 32), lo0 = uint32_t(p0);
  const uint32_t hi1 = uint64_t(p1) >> 32, lo1 = uint32_t(p1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> c = counter;
  std::array<uint32_t, 2> k = key;
  philox_round(c, k);
  for (int r = 1; r < 10; ++r) {
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
    philox_round(c, k);
  }
  return c;
}

namespace {

// 53-bit mantissa uniform in [0, 1).
inline double u64_to_unit(uint64_t x) {
  return double(x >> 11) * 0x1.0p-53;
}

}  // namespace

std::array<double, 2> normal_pair(uint64_t key, uint64_t ctr_lo,
                                  uint64_t ctr_hi) {
  const std::array<uint32_t, 4> ctr = {
      uint32_t(ctr_lo), uint32_t(ctr_lo >> 32), uint32_t(ctr_hi),
      uint32_t(ctr_hi >> 32)};
  const std::array<uint32_t, 2> k = {uint32_t(key), uint32_t(key >> 32)};
  const auto out = philox4x32(ctr, k);
  const uint64_t w0 = (uint64_t(out[1]) << 32) | out[0];
  const uint64_t w1 = (uint64_t(out[3]) << 32) | out[2];
  // u1 in (0, 1] so the log is finite.
  const double u1 = 1.0 - u64_to_unit(w0);
  const double u2 = u64_to_unit(w1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

uint64_t Prng::next_u64() {
  const std::array<uint32_t, 4> ctr = {
      uint32_t(index_), uint32_t(index_ >> 32), uint32_t(stream_),
      uint32_t(stream_ >> 32)};
  const std::array<uint32_t, 2> k = {uint32_t(key_), uint32_t(key_ >> 32)};
  const auto out = philox4x32(ctr, k);
  ++index_;
  return (uint64_t(out[1]) << 32) | out[0];
}

double Prng::uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Prng::normal() {
  if (have_normal_) {
    have_normal_ = false;
    return spare_normal_;
  }
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(theta);
  have_normal_ = true;
  return r * std::cos(theta);
}

uint64_t Prng::uniform_int(uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and portable.
  const uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t tag) {
  return mix64(master ^ mix64(tag));
}

}  // namespace qcp
