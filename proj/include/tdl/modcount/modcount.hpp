#pragma once

#include <cstdint>
#include <vector>

#include "tdl/tdalg/tdalg.hpp"

namespace tdl {

// Below this many vertices count_ds_lowspace defers to count_ds_exact.
inline constexpr int kLowspaceMinVertices = 21;

// Primes p with lo < p < hi, ascending, by trial division.
std::vector<std::uint64_t> primes_in_open_interval(std::uint64_t lo, std::uint64_t hi);

// Primes p with n+1 < p < 2(n+1). Throws for n < 1.
std::vector<std::uint64_t> primes_between(std::uint64_t n);

// Smallest generator of F_p^*. Throws std::invalid_argument if p is not prime.
std::uint64_t primitive_root(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p);

struct ResidueTable {
  std::uint64_t p = 0;
  std::uint64_t alpha = 0;
  std::vector<std::uint64_t> evals;  // P(alpha^i) mod p, i = 0..p-2
};

// -sum_i P(alpha^i) alpha^(-ik) mod p. Throws std::out_of_range unless 0 <= k <= p-2.
std::uint64_t coefficient_from_evals(const ResidueTable& t, int k);

struct CrtWitness {
  std::vector<std::uint64_t> moduli;
  std::vector<std::uint64_t> residues;
  BigInt value;
};

// Throws std::invalid_argument on non-coprime moduli or mismatched lengths.
CrtWitness crt_reconstruct(const std::vector<std::uint64_t>& moduli, const std::vector<std::uint64_t>& residues);

struct LowspaceTrace {
  bool fallback = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_alpha;
  long long evaluations = 0;
  SpaceMeter meter;  // worst single evaluation
};

// threads = 0 picks the hardware concurrency.
DominationPolynomial count_ds_lowspace(const Graph& g, const TreedepthDecomposition& d, LowspaceTrace* trace = nullptr,
                                       unsigned threads = 0);

}  // namespace tdl
