#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace permtest {

/// The engine behind every randomized routine.
using Rng = std::mt19937_64;

/// Name and version recorded in every verdict.
inline constexpr std::string_view kRngFamily = "mt19937_64+splitmix64/1";

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent per-trial seed derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

Rng make_rng(std::uint64_t seed);

}  // namespace permtest
