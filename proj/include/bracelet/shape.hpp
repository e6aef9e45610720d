#pragma once

#include <span>
#include <vector>

#include "bracelet/bigint.hpp"

namespace bracelet::poly {

/// One application of the log-concavity operator: b_n = a_n^2 - a_{n-1} a_{n+1},
/// with a_{-1} = a_{len} = 0 at the ends.
std::vector<BigInt> logconcave_step(std::span<const BigInt> a);

/// Weakly increasing then weakly decreasing. Empty input is unimodal.
bool is_unimodal(std::span<const BigInt> a);

/// a_n^2 >= a_{n-1} a_{n+1} for every interior n.
bool is_logconcave(std::span<const BigInt> a);

/// Largest j <= maxdepth such that the first j iterates of the operator are all
/// non-negative (the input itself is assumed non-negative).
int logconcave_depth(std::span<const BigInt> a, int maxdepth);

}  // namespace bracelet::poly
