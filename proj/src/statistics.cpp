#include "goldbach/statistics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace goldbach {

namespace {

FamilyStats aggregate(const std::vector<const ExceptionalSet*>& family) {
  FamilyStats s;
  s.pairs = family.size();
  s.min_length = std::numeric_limits<std::uint64_t>::max();
  std::set<std::uint64_t> distinct;
  for (const ExceptionalSet* set : family) {
    const std::uint64_t len = set->elements.size();
    s.min_length = std::min(s.min_length, len);
    s.max_length = std::max(s.max_length, len);
    s.total += len;
    if (!set->elements.empty()) s.largest = std::max(s.largest, set->elements.back());
    distinct.insert(set->elements.begin(), set->elements.end());
  }
  if (family.empty()) s.min_length = 0;
  s.distinct = distinct.size();
  return s;
}

std::string format_curve(double v) { return fmt::format("{:.6f}", v); }

}  // namespace

void require_complete(const ExceptionalSetMap& sets, std::uint64_t m) {
  require_even_modulus(m);
  const auto units = unit_residues(m);
  std::vector<std::string> missing;
  std::uint64_t limit = 0;
  bool first = true;
  for (auto a : units) {
    for (auto b : units) {
      auto it = sets.find(AdmissiblePair(a, b, m));
      if (it == sets.end()) {
        missing.push_back(fmt::format("({},{})", a, b));
        continue;
      }
      if (first) {
        limit = it->second.search_limit;
        first = false;
      } else if (it->second.search_limit != limit) {
        throw ContractViolation(fmt::format("exceptional sets for m={} mix search limits {} and {}", m, limit,
                                            it->second.search_limit));
      }
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) list += (i ? " " : "") + missing[i];
    if (missing.size() > 20) list += fmt::format(" ... ({} total)", missing.size());
    throw ContractViolation(fmt::format("exceptional sets for m={} are missing pairs: {}", m, list));
  }
}

ModulusSummary summarize_modulus(const ExceptionalSetMap& sets, std::uint64_t m) {
  require_complete(sets, m);
  const auto units = unit_residues(m);
  std::vector<const ExceptionalSet*> all;
  std::vector<const ExceptionalSet*> restricted;
  for (auto a : units) {
    for (auto b : units) {
      const ExceptionalSet* set = &sets.at(AdmissiblePair(a, b, m));
      all.push_back(set);
      if ((a + b) % m == 0) restricted.push_back(set);
    }
  }
  return ModulusSummary{m, aggregate(restricted), aggregate(all)};
}

EmptyPairCount count_empty_pairs(const ExceptionalSetMap& sets, std::uint64_t m) {
  require_complete(sets, m);
  const auto units = unit_residues(m);
  EmptyPairCount out{m, 0, units.size() * units.size()};
  for (auto a : units) {
    for (auto b : units) {
      if (sets.at(AdmissiblePair(a, b, m)).elements.empty()) ++out.empty_pairs;
    }
  }
  return out;
}

GrowthSeries growth_series(const std::vector<ModulusSummary>& summaries) {
  GrowthSeries out;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    if (i > 0 && summaries[i].m <= summaries[i - 1].m) {
      throw ContractViolation("growth_series: summaries must be sorted by strictly increasing m");
    }
    const std::uint64_t m = summaries[i].m;
    const double m2 = static_cast<double>(m * m);
    const double lg = std::log(static_cast<double>(m));
    out.push_back(GrowthRow{m, summaries[i].all.largest, totient(m), 8 * m * m, 16 * m * m, 2 * m2 * lg, 4 * m2 * lg});
  }
  return out;
}

std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator, int decimals, bool trim) {
  if (denominator == 0) throw ContractViolation("format_ratio: zero denominator");
  using u128 = unsigned __int128;
  u128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const u128 scaled = static_cast<u128>(numerator) * scale;
  u128 q = scaled / denominator;
  const u128 rem = scaled % denominator;
  if (2 * rem >= denominator) ++q;  // half away from zero (values are nonnegative)

  const auto whole = static_cast<std::uint64_t>(q / scale);
  std::string frac = decimals > 0 ? fmt::format("{:0{}}", static_cast<std::uint64_t>(q % scale), decimals) : "";
  if (trim) {
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  }
  return frac.empty() ? fmt::format("{}", whole) : fmt::format("{}.{}", whole, frac);
}

std::string summary_csv_header() {
  return "m,L0_min,L0_avg,L0_max,E0_max,e0_m,e0_tilde_m,L_min,L_avg,L_max,E_max,e_m,e_tilde_m";
}

std::string summary_csv_row(const ModulusSummary& s) {
  auto family = [](const FamilyStats& f) {
    return fmt::format("{},{},{},{},{},{}", f.min_length, format_ratio(f.total, std::max<std::uint64_t>(f.pairs, 1), 3, true),
                       f.max_length, f.largest, f.distinct, f.total);
  };
  return fmt::format("{},{},{}", s.m, family(s.restricted), family(s.all));
}

std::string empty_count_csv_header() { return "m,count,percent"; }

std::string empty_count_csv_row(const EmptyPairCount& c) {
  return fmt::format("{},{},{}", c.m, c.empty_pairs,
                     format_ratio(100 * c.empty_pairs, std::max<std::uint64_t>(c.total_pairs, 1), 1, false));
}

std::string growth_csv_header() { return "m,E_max,phi,8m2,16m2,2m2_ln_m,4m2_ln_m"; }

std::string growth_csv_row(const GrowthRow& r) {
  return fmt::format("{},{},{},{},{},{},{}", r.m, r.largest_exception, r.phi, r.eight_m2,
                     r.sixteen_m2, format_curve(r.two_m2_log_m), format_curve(r.four_m2_log_m));
}

}  // namespace goldbach
