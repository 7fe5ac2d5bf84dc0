#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensordeg/coset_enum.hpp"
#include "tensordeg/degrees.hpp"
#include "tensordeg/group.hpp"
#include "tensordeg/rational.hpp"

namespace tdeg {

enum class PairPolicy { diagonal, hk_covering, all_normal_pairs };
enum class OutputFormat { csv, json };

/// Normal subgroups of G, sorted by (order, element list).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

std::vector<std::pair<Subgroup, Subgroup>> enumerate_normal_pairs(const GroupPtr& g, PairPolicy policy);

/**
 * Outcome of comparing a chain of exact rationals.
 *
 * Asserted checks are pass/FAIL; checks whose hypotheses do not hold are
 * recorded as holds/violated without affecting the exit status.
 */
struct Check {
  enum class Status { pass, fail, holds, violated, skipped };

  Status status = Status::skipped;
  std::vector<Rational> terms;
  std::vector<std::string> ops;  // "<=" or "=" between consecutive terms

  bool asserted() const { return status == Status::pass || status == Status::fail; }
  bool failed() const { return status == Status::fail; }

  /// E.g. "pass 3/4<=3/4"; a bare "skip" when nothing was compared.
  std::string str() const;

  /// Re-evaluates ops over terms; true when every relation holds.
  bool relations_hold() const;
};

struct CaseReport {
  std::string group;
  std::size_t group_order = 0;
  std::vector<Elem> h_gens;
  std::vector<Elem> k_gens;
  std::size_t h_order = 0;
  std::size_t k_order = 0;
  bool hk_covers_g = false;
  std::optional<std::uint64_t> p;
  std::optional<DegreeBundle> bundle;
  Check thm1a, thm1b, thm2, corollary;
  Check thm1a_transposed, thm1b_transposed;  // C_H(K), C(x)_H(K) in place of C_K(H), C(x)_K(H); never asserted
  Check::Status lemma_status = Check::Status::skipped;
  std::size_t lemma_holding = 0;
  std::size_t lemma_total = 0;
  bool j_trivial_equality = false;  // the |J| = 1 equality was checked on this row
  std::string status;               // "ok", "FAIL", "skipped: size", "skipped: order"

  bool failed() const { return status == "FAIL"; }
  std::string lemma_str() const;
};

/// Bounds on d_tensor, with p the smallest prime dividing |G| ((b) is skipped when |G| = 1):
///   (a) d/|J| + |C(x)_K(H)|/|H| (1 - 1/|J|) <= d_tensor
///   (b) d_tensor <= d - (1 - 1/p)(|C_K(H)| - |C(x)_K(H)|)/|H|
std::pair<Check, Check> check_degree_bounds(const DegreeBundle& b, std::size_t h_order, std::optional<std::uint64_t> p,
                                       bool asserted);

/// The same bounds with the centralizer terms taken inside H: |C(x)_H(K)| and |C_H(K)|.
std::pair<Check, Check> check_degree_bounds_transposed(const DegreeBundle& b, std::size_t h_order,
                                                  std::optional<std::uint64_t> p, bool asserted);

/// Full pipeline for one (G,H,K). Coset overflow becomes a "skipped: size" row.
CaseReport analyze_case(const Subgroup& h, const Subgroup& k, std::size_t max_cosets = kDefaultMaxCosets);

struct CensusConfig {
  std::vector<std::string> groups;
  std::vector<std::filesystem::path> group_files;
  std::size_t max_order = 32;
  PairPolicy policy = PairPolicy::hk_covering;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::csv;
  std::size_t jobs = 1;
};

struct CensusSummary {
  std::size_t rows = 0;
  std::size_t ok = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t asserted_checks = 0;
  std::size_t j_trivial_rows = 0;
  std::size_t unasserted_violations = 0;
  std::size_t transposed_violations = 0;
};

struct CensusResult {
  std::vector<CaseReport> rows;
  CensusSummary summary;
  int exit_status = 0;
};

/// Sweeps the configured groups and pairs; rows come back in (group, pair) order for any job count.
CensusResult run_census(const CensusConfig& config);

std::string format_csv(const std::vector<CaseReport>& rows);
std::string format_json(const CensusResult& result);
std::string format_summary(const CensusSummary& s);

PairPolicy parse_pair_policy(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

}  // namespace tdeg
