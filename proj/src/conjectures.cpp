#include "goldbach/conjectures.hpp"

#include <algorithm>
#include <string>

namespace goldbach {

namespace {

void require_table(const PrimeTable& table, std::uint64_t limit, const char* who) {
  if (table.limit() < limit) {
    throw ContractViolation(std::string(who) + ": prime table covers " + std::to_string(table.limit()) +
                            " but limit is " + std::to_string(limit));
  }
}

// Smallest prime p = residue (mod modulus) with s - p prime (and = q_residue).
std::optional<std::uint64_t> split(const PrimeTable& table, std::uint64_t s, std::uint64_t modulus,
                                   std::uint64_t p_residue, std::optional<std::uint64_t> q_residue) {
  std::uint64_t p = p_residue == 0 ? modulus : p_residue;
  for (; p + 2 <= s; p += modulus) {
    if (!table.contains(p)) continue;
    const std::uint64_t q = s - p;
    if (q_residue && q % modulus != *q_residue) continue;
    if (table.contains(q)) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> progression_violations(const PrimeTable& table, const ProgressionQuestion& question,
                                                  std::uint64_t limit) {
  if (question.modulus == 0 || question.p_residue >= question.modulus ||
      (question.q_residue && *question.q_residue >= question.modulus) || question.n_step == 0) {
    throw ContractViolation("progression_violations: malformed question");
  }
  require_table(table, limit, "progression_violations");

  std::uint64_t n = question.n_residue % question.n_step;
  if (n < question.min_n) n += (question.min_n - n + question.n_step - 1) / question.n_step * question.n_step;

  std::vector<std::uint64_t> out;
  for (; n <= limit; n += question.n_step) {
    if (!split(table, n, question.modulus, question.p_residue, question.q_residue)) out.push_back(n);
  }
  return out;
}

Mod4Case parse_mod4_case(std::string_view label) {
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')') label = label.substr(1, label.size() - 2);
  if (label == "i") return Mod4Case::i;
  if (label == "ii") return Mod4Case::ii;
  if (label == "iii") return Mod4Case::iii;
  if (label == "iv") return Mod4Case::iv;
  throw ContractViolation("unknown mod-4 case '" + std::string(label) + "' (expected i, ii, iii or iv)");
}

std::string_view to_string(Mod4Case c) {
  switch (c) {
    case Mod4Case::i: return "i";
    case Mod4Case::ii: return "ii";
    case Mod4Case::iii: return "iii";
    case Mod4Case::iv: return "iv";
  }
  return "?";
}

std::vector<std::uint64_t> stated_mod4_exceptions(Mod4Case c) {
  switch (c) {
    case Mod4Case::i: return {};
    case Mod4Case::ii: return {4};
    case Mod4Case::iii: return {2};
    // As printed. The computed set E_{1,1,4} has 38 where this list has 18
    // (18 = 5 + 13), so case (iv) reports FAIL against it.
    case Mod4Case::iv: return {2, 6, 14, 18, 62};
  }
  return {};
}

std::vector<std::uint64_t> verify_conjecture_mod4(const PrimeTable& table, Mod4Case c, std::uint64_t limit) {
  if (limit < 2) throw ContractViolation("verify_conjecture_mod4: limit must be >= 2");
  require_table(table, limit, "verify_conjecture_mod4");
  switch (c) {
    case Mod4Case::i:
      return progression_violations(table, {.modulus = 4, .p_residue = 3, .q_residue = std::nullopt,
                                            .n_step = 2, .n_residue = 0, .min_n = 6},
                                    limit);
    case Mod4Case::ii: return exceptional_set(table, AdmissiblePair(1, 3, 4), limit).elements;
    case Mod4Case::iii: return exceptional_set(table, AdmissiblePair(3, 3, 4), limit).elements;
    case Mod4Case::iv: return exceptional_set(table, AdmissiblePair(1, 1, 4), limit).elements;
  }
  return {};
}

std::vector<std::uint64_t> verify_conjecture_mod4(Mod4Case c, std::uint64_t limit) {
  if (limit < 2) throw ContractViolation("verify_conjecture_mod4: limit must be >= 2");
  return verify_conjecture_mod4(sieve_primes(limit), c, limit);
}

std::vector<SampleClaim> sample_claims(std::uint64_t residue_vii) {
  const std::uint64_t r = residue_vii % 60;
  if (gcd(r, 60) != 1) {
    throw ContractViolation("claim (vii): residue " + std::to_string(residue_vii) + " is not coprime to 60");
  }
  if (r == 1 || r == 59 || r == 11 || r == 49) {
    throw ContractViolation("claim (vii): residue " + std::to_string(residue_vii) +
                            " is +-1 or +-11 mod 60, which the claim excludes");
  }
  return {
      {"i", 3, 1, {6}},
      {"ii-a", 5, 2, {}},
      {"ii-b", 5, 1, {10, 20}},
      {"iii", 7, 3, {}},
      {"iv", 11, 3, {}},
      {"v", 8, 3, {}},
      {"vi", 16, 3, {}},
      {"vii", 60, r, {}},
  };
}

SampleClaim sample_claim(std::string_view label, std::uint64_t residue_vii) {
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')') label = label.substr(1, label.size() - 2);
  for (auto& claim : sample_claims(residue_vii)) {
    if (claim.label == label) return claim;
  }
  throw ContractViolation("unknown sample claim '" + std::string(label) +
                          "' (expected i, ii-a, ii-b, iii, iv, v, vi or vii)");
}

std::vector<std::uint64_t> verify_conjecture_samples(const PrimeTable& table, const SampleClaim& claim,
                                                     std::uint64_t limit) {
  if (limit < 2) throw ContractViolation("verify_conjecture_samples: limit must be >= 2");
  // even multiples of the modulus
  const std::uint64_t step = claim.modulus % 2 == 0 ? claim.modulus : 2 * claim.modulus;
  const ProgressionQuestion question{.modulus = claim.modulus,
                                     .p_residue = claim.residue % claim.modulus,
                                     .q_residue = (claim.modulus - claim.residue % claim.modulus) % claim.modulus,
                                     .n_step = step,
                                     .n_residue = 0,
                                     .min_n = step};
  return progression_violations(table, question, limit);
}

std::vector<std::uint64_t> verify_conjecture_samples(const SampleClaim& claim, std::uint64_t limit) {
  if (limit < 2) throw ContractViolation("verify_conjecture_samples: limit must be >= 2");
  return verify_conjecture_samples(sieve_primes(limit), claim, limit);
}

std::optional<TernaryWitness> ternary_witness(const PrimeTable& table, std::uint64_t n) {
  if (n % 2 == 0 || n <= 5) {
    throw ContractViolation("ternary_witness: n must be odd and > 5, got " + std::to_string(n));
  }
  require_table(table, n, "ternary_witness");
  auto attempt = [&](std::uint64_t r) -> std::optional<TernaryWitness> {
    if (r + 4 > n || !table.contains(r)) return std::nullopt;
    const std::uint64_t s = n - r;
    if (auto p = split(table, s, 3, 2, 2)) return TernaryWitness{*p, s - *p, r};
    return std::nullopt;
  };
  for (std::uint64_t r : {3, 5, 7}) {
    if (auto w = attempt(r)) return w;
  }
  for (std::uint64_t r = 2; r + 4 <= n; ++r) {
    if (auto w = attempt(r)) return w;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> verify_ternary(const PrimeTable& table, std::uint64_t limit) {
  if (limit < 7) throw ContractViolation("verify_ternary: limit must be >= 7, got " + std::to_string(limit));
  require_table(table, limit, "verify_ternary");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 7; n <= limit; n += 2) {
    if (!ternary_witness(table, n)) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> verify_ternary(std::uint64_t limit) {
  if (limit < 7) throw ContractViolation("verify_ternary: limit must be >= 7, got " + std::to_string(limit));
  return verify_ternary(sieve_primes(limit), limit);
}

}  // namespace goldbach
