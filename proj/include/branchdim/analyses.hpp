#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "branchdim/bigint.hpp"
#include "branchdim/quotients.hpp"
#include "branchdim/report.hpp"

namespace branchdim {

/// Lazily built congruence quotients G_1, G_2, ... of one group, shared by
/// the verification checks. Safe for concurrent use.
class QuotientTower {
 public:
  explicit QuotientTower(GroupDefPtr def, QuotientOptions options = {});

  const GroupDefPtr& def() const noexcept { return def_; }
  const QuotientOptions& options() const noexcept { return options_; }
  const LevelQuotient& at(std::size_t n);
  /// Throws ResourceError when `n` exceeds the configured chain cap.
  void require_level(std::size_t n, const std::string& check) const;

 private:
  GroupDefPtr def_;
  QuotientOptions options_;
  std::mutex mutex_;
  std::map<std::size_t, std::unique_ptr<LevelQuotient>> levels_;
};

// Closed forms ---------------------------------------------------------------

/// log_4 |G : St_G(n)| for the second Grigorchuk group: 1, 3, then (86 * 4^(n-4) + 4) / 3.
Rational theoremA_log4(std::size_t n);
/// log_2 of the order of the n-fold iterated wreath power of C_4: 2 (4^n - 1) / 3.
BigInt ambient_log2_order(std::size_t n);
/// The level-n generators of the iterated wreath power: the rooted 4-cycle `a`
/// and, for 1 <= k < n, `a<k>` acting as the 4-cycle at vertex 1^k only.
GroupDefPtr ambient_def(std::size_t n);

/// theoremA_log4(n) / ((4^n - 1) / 3) for n = 1..max_n.
std::vector<Rational> hausdorff_series(std::size_t max_n);
/// Limit of the ratio, from the leading 4^n coefficients of numerator and denominator.
Rational hausdorff_limit();

/// Order of level_perm(g, n).
BigInt element_order_in_quotient(const Element& g, std::size_t n, std::size_t level_cap = kDefaultChainCap);

// Verification checks ---------------------------------------------------------

VerificationReport verify_order_series(QuotientTower& tower, std::size_t max_n);
VerificationReport verify_ambient_orders(std::size_t max_n, const QuotientOptions& options = {});
/// Closed-form limit, series tail, and the empirical ratio log|G_n| / log|Gamma_n|
/// from chain orders up to `empirical_level`.
VerificationReport verify_hausdorff(QuotientTower& tower, std::size_t series_n, std::size_t empirical_level);
VerificationReport verify_gamma_indices(QuotientTower& tower);
VerificationReport verify_st2_st3_index(QuotientTower& tower);
VerificationReport verify_weight_criteria(QuotientTower& tower, std::size_t samples, std::uint64_t seed = 2021);
VerificationReport verify_lemma_not_in_G(QuotientTower& tower);
VerificationReport verify_regular_branch(QuotientTower& tower);
VerificationReport verify_super_strong_fractal(QuotientTower& tower,
                                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
VerificationReport verify_saturation(QuotientTower& tower);

struct SuiteOptions {
  std::size_t order_levels = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 2021;
  std::size_t jobs = 1;
};

/// Suite names: all, orders, weights, branch, fractal, saturation, notinG.
const std::vector<std::string>& suite_names();
/// Runs the checks of one suite; the result is ordered by check name.
/// Throws DomainError for an unknown suite.
std::vector<VerificationReport> run_suite(QuotientTower& tower, const std::string& suite,
                                          const SuiteOptions& options = {});

}  // namespace branchdim
