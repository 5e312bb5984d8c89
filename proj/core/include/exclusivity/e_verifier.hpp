#pragma once

// Replays the exclusivity-principle derivations of the KCBS and CHSH limits:
// builds the twin-copy event sets, certifies pairwise exclusivity, sums the
// resulting "<= 1" inequalities exactly and solves the symmetric bound.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exclusivity/algebra.hpp"
#include "exclusivity/lp.hpp"
#include "exclusivity/scenario.hpp"
#include "exclusivity/scenario_io.hpp"

namespace excl {

/// Thrown when an uncertified inequality is used in a sum.
class UncertifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Merges an A-copy event with a B-copy event. Throws ScenarioError if an
/// observable of `a` is not in copy A or one of `b` is not in copy B.
Event twin_compound(const Event& a, const Event& b, const Scenario& twin);

/// Renames every observable starting with `from` to start with `to` ("A3" -> "B3").
Event relabel_prefix(const Event& e, char from, char to);

struct PairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string observable;  ///< empty when the pair is not exclusive
};

struct Certification {
  std::vector<PairWitness> pairs;  ///< every pair i < j in order
  std::vector<PairWitness> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// A set of compound events whose probabilities, if the events are pairwise
/// exclusive, sum to at most 1.
class EInequality {
 public:
  EInequality(std::string name, std::vector<LabeledEvent> events,
              std::shared_ptr<const Scenario> scenario);

  const std::string& name() const noexcept { return name_; }
  const std::vector<LabeledEvent>& events() const noexcept { return events_; }
  const Scenario& scenario() const noexcept { return *scenario_; }
  /// Sum of the factorized event probabilities.
  const LinearCombo& lhs() const noexcept { return lhs_; }
  bool certified() const noexcept { return certified_; }

  /// Checks every pair; the inequality becomes usable only if all pass.
  const Certification& certify();
  const std::optional<Certification>& certification() const noexcept { return cert_; }

 private:
  std::string name_;
  std::vector<LabeledEvent> events_;
  std::shared_ptr<const Scenario> scenario_;
  LinearCombo lhs_;
  std::optional<Certification> cert_;
  bool certified_ = false;
};

struct InequalitySum {
  LinearCombo lhs;
  std::int64_t bound = 0;
};

/// Throws UncertifiedError if any inequality is not certified.
InequalitySum sum_inequalities(const std::vector<EInequality>& ineqs);

/// lhs == Sum_i Sum_j P(a_i) P(b_j), every coefficient 1.
bool matches_product_expansion(const LinearCombo& lhs, std::span<const Event> sum_a,
                               std::span<const Event> sum_b);

/// A1..A5 in copy A, B1..B5 in copy B.
Scenario kcbs_twin_scenario();
/// A1..A4, B1..B4 and C11 = eq(A1,B1), C33 = eq(A3,B3), C13 = eq(A1,B3),
/// C31 = eq(A3,B1).
Scenario chsh_extended_scenario();

/// The five twin sets, certified. Set r pairs the i-th KCBS event of copy A
/// with the (3i - 2 + r)-th of copy B (1-based, mod 5), r = 0, 2, 4, 1, 3.
std::vector<EInequality> kcbs_twin_sets();

/// The sixteen nine-event CHSH sets, certified: eight table rows and their
/// images under the relabeling that swaps indices 2 and 4 and negates the
/// outcomes of A1 and B1.
std::vector<EInequality> chsh_table1_sets();

/// Builds (uncertified) inequalities from a set file.
std::vector<EInequality> inequalities_from(const SetFile& file);
/// The set file equivalent of a list of inequalities sharing one scenario.
SetFile to_set_file(const std::vector<EInequality>& ineqs);

/// Pairs of derived observables whose four joint-outcome events sum to 1.
struct NormalizationGroup {
  std::string first;
  std::string second;
};

/// If `residual` is exactly k_g times the full four-event sum of each group g
/// (and nothing else), returns Sum_g k_g; otherwise nullopt.
std::optional<std::int64_t> normalization_constant(const LinearCombo& residual,
                                                   const std::vector<NormalizationGroup>& groups);

enum class BoundKind { Kcbs, Chsh };

/// Proof that a sum of certified inequalities reads
///   a S^A S^B + b (K - S^A)(K - S^B) + c <= bound.
/// Only the identity checks below can create one.
class IdentityCertificate {
 public:
  BoundKind kind() const noexcept { return kind_; }
  std::int64_t product_coefficient() const noexcept { return a_; }
  std::int64_t complement_coefficient() const noexcept { return b_; }
  std::int64_t complement_total() const noexcept { return k_; }
  std::int64_t constant() const noexcept { return c_; }
  std::int64_t bound() const noexcept { return bound_; }

 private:
  IdentityCertificate(BoundKind kind, std::int64_t a, std::int64_t b, std::int64_t k,
                      std::int64_t c, std::int64_t bound)
      : kind_(kind), a_(a), b_(b), k_(k), c_(c), bound_(bound) {}

  friend std::optional<IdentityCertificate> check_kcbs_identity(const InequalitySum& sum);
  friend std::optional<IdentityCertificate> check_chsh_identity(const InequalitySum& sum);

  BoundKind kind_;
  std::int64_t a_, b_, k_, c_, bound_;
};

/// lhs == S^A S^B for the KCBS sums of the two copies.
std::optional<IdentityCertificate> check_kcbs_identity(const InequalitySum& sum);
/// lhs - S^A S^B - (4 - S^A)(4 - S^B) is a multiple of the C normalization sums
/// adding up to a constant.
std::optional<IdentityCertificate> check_chsh_identity(const InequalitySum& sum);

struct SymmetricBound {
  double upper = 0.0;
  double lower = 0.0;  ///< clamped at 0
};

/// Feasible interval of S under S^A = S^B = S.
SymmetricBound solve_symmetric_bound(const IdentityCertificate& cert);

struct SetTranscript {
  std::string name;
  std::vector<std::string> events;
  LinearCombo lhs;
  Certification certification;
};

struct VerificationTranscript {
  std::string kind;
  std::vector<SetTranscript> sets;
  bool all_certified = false;
  std::optional<InequalitySum> sum;
  bool identity_ok = false;
  std::string identity;  ///< human-readable form of the checked identity
  std::optional<SymmetricBound> bound;
  std::vector<std::string> assumptions;
  /// Only set for the Specker triangle.
  std::optional<Rational> kolmogorov;
  std::optional<Rational> e_bound;

  bool ok() const noexcept;
  /// First failure, e.g. "set row-3: events 2 and 5 ... are not exclusive".
  std::string failure() const;
};

/// With no file the built-in sets are used.
VerificationTranscript verify_kcbs(const SetFile* sets = nullptr);
VerificationTranscript verify_chsh(const SetFile* sets = nullptr);
VerificationTranscript verify_specker();

}  // namespace excl
