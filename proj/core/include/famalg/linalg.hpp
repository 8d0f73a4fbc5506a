#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "famalg/matrix.hpp"

namespace famalg {

/// Exact rank of a rational matrix.
///
/// Rows are scaled to integers and reduced with Bareiss' fraction-free
/// elimination, so no intermediate rational arithmetic is performed.
std::size_t exact_rank(const RationalMatrix &a);

/// Rank of an integer matrix over Z/pZ (entries already reduced mod p).
std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

/// Solves a·x = b exactly. Returns nullopt if the system is inconsistent;
/// free variables (if any) are set to zero.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix &a,
                                                 const std::vector<Rational> &b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

} // namespace famalg
