#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

/// Representability question "n = p + q with p = p_residue (mod modulus) and,
/// when q_residue is set, q = q_residue (mod modulus)" asked of every
/// n >= min_n with n = n_residue (mod n_step). p and q range over all primes,
/// including 2, so odd moduli are fine.
struct ProgressionQuestion {
  std::uint64_t modulus = 0;
  std::uint64_t p_residue = 0;
  std::optional<std::uint64_t> q_residue;
  std::uint64_t n_step = 2;
  std::uint64_t n_residue = 0;
  std::uint64_t min_n = 2;
};

/// Every n <= limit in the question's domain with no representation.
/// Checked directly against the sieve; `table` must cover limit.
std::vector<std::uint64_t> progression_violations(const PrimeTable& table, const ProgressionQuestion& question,
                                                  std::uint64_t limit);

enum class Mod4Case { i, ii, iii, iv };

/// Parses "i" .. "iv" (parentheses optional); throws ContractViolation otherwise.
Mod4Case parse_mod4_case(std::string_view label);
std::string_view to_string(Mod4Case c);

/// Exceptions listed for each case in the original conjecture statement.
std::vector<std::uint64_t> stated_mod4_exceptions(Mod4Case c);

/// Violations of the mod-4 refinement up to limit. Case (i) (p = 3 mod 4, q any
/// prime, even n > 4) is checked directly; cases (ii)-(iv) are the exceptional
/// sets E_{1,3,4}, E_{3,3,4} and E_{1,1,4}.
std::vector<std::uint64_t> verify_conjecture_mod4(Mod4Case c, std::uint64_t limit);
std::vector<std::uint64_t> verify_conjecture_mod4(const PrimeTable& table, Mod4Case c, std::uint64_t limit);

/// One sample claim "every positive even n = 0 (mod modulus) is p + q with
/// p = -q = residue (mod modulus)", with its stated exceptions.
struct SampleClaim {
  std::string label;  // "i", "ii-a", "ii-b", "iii", ..., "vii"
  std::uint64_t modulus = 0;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> stated_exceptions;
};

/// The eight claims: (i), both halves of (ii), (iii)-(vi), and (vii) for the
/// given residue. Throws if residue_vii is not coprime to 60 or is +-1, +-11 mod 60.
std::vector<SampleClaim> sample_claims(std::uint64_t residue_vii = 7);

/// Throws ContractViolation for unknown labels or a bad residue for (vii).
SampleClaim sample_claim(std::string_view label, std::uint64_t residue_vii = 7);

std::vector<std::uint64_t> verify_conjecture_samples(const SampleClaim& claim, std::uint64_t limit);
std::vector<std::uint64_t> verify_conjecture_samples(const PrimeTable& table, const SampleClaim& claim,
                                                     std::uint64_t limit);

struct TernaryWitness {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
};

/// Odd n > 5 as p + q + r with p = q = 2 (mod 3). Tries r in {3, 5, 7} first,
/// then every prime r. `table` must cover n.
std::optional<TernaryWitness> ternary_witness(const PrimeTable& table, std::uint64_t n);

/// Odd n with 5 < n <= limit lacking a ternary witness. limit >= 7.
std::vector<std::uint64_t> verify_ternary(std::uint64_t limit);
std::vector<std::uint64_t> verify_ternary(const PrimeTable& table, std::uint64_t limit);

}  // namespace goldbach
