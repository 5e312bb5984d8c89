#pragma once

// Exact integer-coefficient sums of products of event probabilities.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "exclusivity/scenario.hpp"

namespace excl {

/// P(event) for an event living entirely in one copy (or only on shared
/// observables).
struct AtomicProb {
  Event event;
  Copy copy = Copy::Shared;

  friend bool operator==(const AtomicProb&, const AtomicProb&) = default;
  friend auto operator<=>(const AtomicProb&, const AtomicProb&) = default;
};

/// "P(A1+,A2+)"
std::string to_string(const AtomicProb& p);

/// Sorted factors, at most one per copy.
using Monomial = std::vector<AtomicProb>;

std::string to_string(const Monomial& m);

struct ProductTerm {
  Monomial factors;
  std::int64_t coefficient = 0;
};

class LinearCombo {
 public:
  /// Sorts the factors; throws std::invalid_argument for an empty monomial or
  /// two factors from the same copy.
  void add(Monomial factors, std::int64_t coefficient);
  void add(const LinearCombo& other, std::int64_t scale = 1);

  const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
  std::vector<ProductTerm> term_list() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// 0 if absent.
  std::int64_t coefficient(const Monomial& m) const;

  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) {
    a.add(b, -1);
    return a;
  }
  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

/// Terms joined by " + ", coefficients other than 1 written as "2*".
std::string to_string(const LinearCombo& c);

/// Probability factors of a compound event under independence of the copies.
/// Derived assignments implied by the base assignments are dropped (they do
/// not change the probability); the rest is split by copy. An event over
/// shared observables only is one shared factor. Throws ScenarioError for an
/// event that mixes non-implied shared assignments with copy observables.
Monomial factorize(const Event& e, const Scenario& scenario);

/// Sum_i Sum_j P(a_i) P(b_j) with unit coefficients; `a` is tagged copy A and
/// `b` copy B.
LinearCombo product_expansion(std::span<const Event> a, std::span<const Event> b);

}  // namespace excl
