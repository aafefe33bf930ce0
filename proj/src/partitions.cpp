#include "goldbach/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace goldbach {

AdmissiblePair::AdmissiblePair(std::uint64_t a, std::uint64_t b, std::uint64_t m) : a_(a), b_(b), m_(m) {
  require_even_modulus(m);
  if (a == 0 || a >= m || b == 0 || b >= m) {
    throw ContractViolation("residues must satisfy 0 < a, b < m; got " + to_string());
  }
  if (gcd(a, m) != 1 || gcd(b, m) != 1) {
    throw ContractViolation("pair " + to_string() + " is not admissible: a and b must be coprime to m");
  }
}

std::uint64_t AdmissiblePair::first_candidate() const {
  const std::uint64_t r = (a_ + b_) % m_;
  return r == 0 ? m_ : r;
}

std::string AdmissiblePair::to_string() const {
  return "(a=" + std::to_string(a_) + ", b=" + std::to_string(b_) + ", m=" + std::to_string(m_) + ")";
}

void require_even_modulus(std::uint64_t m) {
  if (m < 2 || m % 2 != 0) {
    throw ContractViolation("modulus must be even and >= 2, got " + std::to_string(m) +
                            "; for odd m use 2m, which has the same admissible classes of even n");
  }
}

std::uint64_t default_stage1_bound(std::uint64_t m) {
  const double lg = std::log(static_cast<double>(std::max<std::uint64_t>(m, 3)));
  const auto adaptive = static_cast<std::uint64_t>(std::ceil(50.0 * static_cast<double>(m) * lg * lg));
  return std::max<std::uint64_t>(10000, adaptive);
}

std::uint64_t resolve_stage1_bound(std::uint64_t m, std::uint64_t limit, const SearchConfig& config) {
  if (config.stage1_bound) {
    if (*config.stage1_bound > limit) {
      throw ContractViolation("stage-1 bound M=" + std::to_string(*config.stage1_bound) +
                              " exceeds search limit N=" + std::to_string(limit));
    }
    return *config.stage1_bound;
  }
  return std::min(default_stage1_bound(m), limit);
}

namespace detail {
void check_witness_request(std::uint64_t n, const AdmissiblePair& pair) {
  if (n < 2 || n % 2 != 0) {
    throw ContractViolation("find_witness: n must be even and >= 2, got " + std::to_string(n));
  }
  if (n % pair.m() != (pair.a() + pair.b()) % pair.m()) {
    throw ContractViolation("find_witness: n=" + std::to_string(n) + " is not = a + b mod m for " +
                            pair.to_string());
  }
}
}  // namespace detail

std::optional<PartitionWitness> find_witness(std::uint64_t n, const AdmissiblePair& pair) {
  return find_witness(n, pair, [](std::uint64_t x) { return is_prime(x); });
}

namespace {

class BitVector {
 public:
  explicit BitVector(std::uint64_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::uint64_t size() const { return bits_; }

  // *this |= (src << shift), truncated to size()
  void or_shifted(const BitVector& src, std::uint64_t shift) {
    if (shift >= bits_) return;
    const std::uint64_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::uint64_t n = words_.size();
    const std::uint64_t src_words = src.words_.size();
    for (std::uint64_t k = word_shift; k < n; ++k) {
      const std::uint64_t s = k - word_shift;
      std::uint64_t v = s < src_words ? src.words_[s] << bit_shift : 0;
      if (bit_shift != 0 && s >= 1 && s - 1 < src_words) v |= src.words_[s - 1] >> (64 - bit_shift);
      words_[k] |= v;
    }
    trim();
  }

 private:
  void trim() {
    if (bits_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::uint64_t bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

ExceptionalSet exceptional_set(const PrimeTable& table, const AdmissiblePair& pair, std::uint64_t limit,
                               const SearchConfig& config) {
  if (limit < 2) throw ContractViolation("exceptional_set: N must be >= 2, got " + std::to_string(limit));
  if (table.limit() < limit) {
    throw ContractViolation("exceptional_set: prime table covers " + std::to_string(table.limit()) +
                            " but N=" + std::to_string(limit));
  }
  const std::uint64_t bound = resolve_stage1_bound(pair.m(), limit, config);
  const std::uint64_t m = pair.m();
  const std::uint64_t a = pair.a();
  const std::uint64_t b = pair.b();

  ExceptionalSet out{pair, limit, bound, {}, 0, {}, true};

  const std::uint64_t first = pair.first_candidate();
  if (first > limit) return out;
  // candidate t <=> n = first + t*m
  const std::uint64_t candidates = (limit - first) / m + 1;
  // p = a + i m, q = b + j m  =>  n = first + (i + j + offset) m
  const std::uint64_t offset = (a + b - first) / m;

  BitVector q_bits(candidates);
  for (std::uint64_t q = b, j = 0; q <= limit && j < candidates; q += m, ++j) {
    if (table.contains(q)) q_bits.set(j);
  }
  BitVector marked(candidates);
  for (std::uint64_t p = a, i = 0; p <= bound; p += m, ++i) {
    if (table.contains(p)) marked.or_shifted(q_bits, i + offset);
  }

  auto oracle = [](std::uint64_t x) { return is_prime(x); };
  for (std::uint64_t t = 0; t < candidates; ++t) {
    if (marked.test(t)) continue;
    const std::uint64_t n = first + t * m;
    // every p <= n - 2 was already tried in stage 1
    if (n - 2 <= bound || !find_witness_from(n, pair, oracle, bound + 1)) {
      out.elements.push_back(n);
    } else {
      out.survivor_values.push_back(n);
    }
  }
  out.stage1_survivors = out.survivor_values.size();
  return out;
}

ExceptionalSet exceptional_set(const AdmissiblePair& pair, std::uint64_t limit, const SearchConfig& config) {
  if (limit < 2) throw ContractViolation("exceptional_set: N must be >= 2, got " + std::to_string(limit));
  return exceptional_set(sieve_primes(limit), pair, limit, config);
}

ExceptionalSetMap exceptional_sets_for_modulus(const PrimeTable& table, std::uint64_t m, std::uint64_t limit,
                                               const SearchConfig& config) {
  require_even_modulus(m);
  const std::vector<std::uint64_t> units = unit_residues(m);

  std::vector<AdmissiblePair> unordered;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = i; j < units.size(); ++j) unordered.emplace_back(units[i], units[j], m);
  }

  std::vector<std::optional<ExceptionalSet>> results(unordered.size());
  parallel_for(unordered.size(), config.threads,
               [&](std::size_t i) { results[i] = exceptional_set(table, unordered[i], limit, config); });

  ExceptionalSetMap out;
  for (auto& slot : results) {
    ExceptionalSet& set = *slot;
    if (set.pair.a() != set.pair.b()) {
      ExceptionalSet mirror = set;
      mirror.pair = set.pair.swapped();
      out.emplace(mirror.pair, std::move(mirror));
    }
    out.emplace(set.pair, std::move(set));
  }
  return out;
}

SurvivorCensus stage1_survivor_census(const PrimeTable& table, std::uint64_t m, std::uint64_t limit,
                                      const SearchConfig& config) {
  require_even_modulus(m);
  const std::vector<std::uint64_t> units = unit_residues(m);
  std::vector<AdmissiblePair> ordered;
  for (auto a : units) {
    for (auto b : units) ordered.emplace_back(a, b, m);
  }
  std::vector<std::vector<std::uint64_t>> survivors(ordered.size());
  parallel_for(ordered.size(), config.threads, [&](std::size_t i) {
    survivors[i] = exceptional_set(table, ordered[i], limit, config).survivor_values;
  });

  SurvivorCensus census{m, limit, resolve_stage1_bound(m, limit, config), 0, 0, 0};
  std::vector<std::uint64_t> all;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    census.ordered_incidents += survivors[i].size();
    if (ordered[i].a() <= ordered[i].b()) census.unordered_incidents += survivors[i].size();
    all.insert(all.end(), survivors[i].begin(), survivors[i].end());
  }
  std::sort(all.begin(), all.end());
  census.distinct_n = static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
  return census;
}

ExceptionalSetMap exceptional_sets_for_modulus(std::uint64_t m, std::uint64_t limit, const SearchConfig& config) {
  require_even_modulus(m);
  if (limit < 2) throw ContractViolation("exceptional_sets_for_modulus: N must be >= 2");
  return exceptional_sets_for_modulus(sieve_primes(limit), m, limit, config);
}

}  // namespace goldbach
