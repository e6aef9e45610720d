#include "bracelet/shape.hpp"

#include <algorithm>

namespace bracelet::poly {

std::vector<BigInt> logconcave_step(std::span<const BigInt> a) {
  std::vector<BigInt> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    out[n] = a[n] * a[n];
    if (n > 0 && n + 1 < a.size()) out[n] -= a[n - 1] * a[n + 1];
  }
  return out;
}

bool is_unimodal(std::span<const BigInt> a) {
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  return i >= a.size();
}

bool is_logconcave(std::span<const BigInt> a) {
  for (std::size_t n = 1; n + 1 < a.size(); ++n) {
    if (a[n] * a[n] < a[n - 1] * a[n + 1]) return false;
  }
  return true;
}

int logconcave_depth(std::span<const BigInt> a, int maxdepth) {
  std::vector<BigInt> cur(a.begin(), a.end());
  for (int j = 1; j <= maxdepth; ++j) {
    cur = logconcave_step(cur);
    if (std::any_of(cur.begin(), cur.end(), [](const BigInt& v) { return v < 0; })) return j - 1;
  }
  return maxdepth;
}

}  // namespace bracelet::poly
