#include "tdl/modcount/modcount.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tdl {

std::vector<std::uint64_t> primes_in_open_interval(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = lo + 1; p < hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("primes_between needs n >= 1");
  return primes_in_open_interval(n + 1, 2 * (n + 1));
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1 % p, x = b % p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t x = 1;
    bool gen = true;
    for (std::uint64_t i = 1; i <= p - 2; ++i) {
      x = x * a % p;
      if (x == 1) {
        gen = false;
        break;
      }
    }
    if (gen) return a;
  }
  throw std::logic_error("no primitive root found");
}

std::uint64_t coefficient_from_evals(const ResidueTable& t, int k) {
  const std::uint64_t p = t.p;
  if (p < 3 || t.evals.size() != p - 1) throw std::invalid_argument("residue table needs p-1 evaluations");
  if (k < 0 || static_cast<std::uint64_t>(k) > p - 2) throw std::out_of_range("coefficient index out of range");
  const std::uint64_t step = pow_mod(pow_mod(t.alpha, p - 2, p), static_cast<std::uint64_t>(k), p);  // alpha^(-k)
  std::uint64_t w = 1, sum = 0;
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    sum = (sum + t.evals[i] % p * w) % p;
    w = w * step % p;
  }
  return (p - sum) % p;
}

CrtWitness crt_reconstruct(const std::vector<std::uint64_t>& moduli, const std::vector<std::uint64_t>& residues) {
  if (moduli.size() != residues.size() || moduli.empty()) throw std::invalid_argument("moduli/residues mismatch");
  CrtWitness w{moduli, residues, 0};
  BigInt m = 1;
  for (size_t i = 0; i < moduli.size(); ++i) {
    const std::uint64_t p = moduli[i];
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    const std::uint64_t mp = static_cast<std::uint64_t>(m % p);
    if (std::gcd(mp, p) != 1) throw std::invalid_argument("moduli are not pairwise coprime");
    // x = value + m * t with t = (r - value) * m^-1 mod p
    const std::uint64_t cur = static_cast<std::uint64_t>(w.value % p);
    const std::uint64_t r = residues[i] % p;
    // inverse of mp mod p by extended Euclid (p need not be prime)
    long long a = static_cast<long long>(mp), b = static_cast<long long>(p), x0 = 1, x1 = 0;
    while (b) {
      long long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    const std::uint64_t inv = static_cast<std::uint64_t>((x0 % static_cast<long long>(p) + static_cast<long long>(p)) %
                                                         static_cast<long long>(p));
    const std::uint64_t t = static_cast<std::uint64_t>(static_cast<unsigned __int128>((r + p - cur) % p) * inv % p);
    w.value += m * t;
    m *= p;
  }
  return w;
}

DominationPolynomial count_ds_lowspace(const Graph& g, const TreedepthDecomposition& d, LowspaceTrace* trace,
                                       unsigned threads) {
  LowspaceTrace local;
  LowspaceTrace& tr = trace ? *trace : local;
  tr = {};
  const int n = g.n();
  if (n < kLowspaceMinVertices) {
    tr.fallback = true;
    return count_ds_exact(g, d, &tr.meter);
  }
  auto v = validate_tdd(g, d);
  if (!v.valid) throw std::invalid_argument("invalid decomposition: " + v.witness);
  const auto primes = primes_between(static_cast<std::uint64_t>(n));
  BigInt prod = 1;
  for (auto p : primes) prod *= p;
  if (prod <= (BigInt(1) << n)) throw std::logic_error("prime product does not exceed 2^n");

  // work items in canonical order: prime index major, exponent minor
  struct Item {
    size_t prime;
    std::uint64_t point;
  };
  std::vector<ResidueTable> tables;
  std::vector<Item> items;
  std::vector<size_t> offset;
  for (size_t j = 0; j < primes.size(); ++j) {
    const auto p = primes[j];
    ResidueTable t{p, primitive_root(p), std::vector<std::uint64_t>(p - 1, 0)};
    tr.prime_alpha.emplace_back(p, t.alpha);
    offset.push_back(items.size());
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
      items.push_back({j, x});
      x = x * t.alpha % p;
    }
    tables.push_back(std::move(t));
  }
  std::vector<std::uint64_t> results(items.size());
  std::vector<SpaceMeter> meters(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < items.size();)
      results[i] = eval_ds_mod(g, d, primes[items[i].prime], items[i].point, &meters[i]);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, items.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  tr.evaluations = static_cast<long long>(items.size());
  for (const auto& m : meters) {
    tr.meter.peak_frames = std::max(tr.meter.peak_frames, m.peak_frames);
    tr.meter.peak_aux_cells = std::max(tr.meter.peak_aux_cells, m.peak_aux_cells);
  }
  for (size_t j = 0; j < tables.size(); ++j)
    std::copy(results.begin() + static_cast<long>(offset[j]),
              results.begin() + static_cast<long>(offset[j] + tables[j].evals.size()), tables[j].evals.begin());

  DominationPolynomial q(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::uint64_t> res;
    bool nonzero = false;
    for (const auto& t : tables) {
      res.push_back(coefficient_from_evals(t, k));
      nonzero = nonzero || res.back() != 0;
    }
    if (nonzero) q[k] = crt_reconstruct(primes, res).value;
  }
  return q;
}

}  // namespace tdl
