#pragma once

// Observables, outcomes, events and the exclusivity relation between events.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace excl {

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which run of a twin experiment an observable belongs to.
enum class Copy : std::uint8_t { A, B, Shared };

std::string_view to_string(Copy copy) noexcept;

enum class Outcome : std::int8_t { Minus = -1, Plus = 1 };

constexpr Outcome operator-(Outcome o) noexcept {
  return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus;
}

constexpr char sign_char(Outcome o) noexcept { return o == Outcome::Plus ? '+' : '-'; }

constexpr int to_int(Outcome o) noexcept { return static_cast<int>(o); }

struct ObservableId {
  std::string name;
  Copy copy = Copy::Shared;

  friend bool operator==(const ObservableId&, const ObservableId&) = default;
  friend auto operator<=>(const ObservableId&, const ObservableId&) = default;
};

/// An observable whose outcome is a fixed function of two other observables.
/// The truth table is indexed by (first == Plus) * 2 + (second == Plus).
struct DerivedObservable {
  ObservableId id;
  std::string first;
  std::string second;
  std::array<Outcome, 4> table{};

  /// +1 iff the two argument outcomes agree.
  static DerivedObservable equality(std::string name, std::string first, std::string second);

  Outcome apply(Outcome a, Outcome b) const noexcept {
    return table[(a == Outcome::Plus ? 2 : 0) + (b == Outcome::Plus ? 1 : 0)];
  }
  bool is_equality() const noexcept;
};

struct Assignment {
  std::string observable;
  Outcome outcome = Outcome::Plus;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// A partial outcome assignment. Assignments are kept sorted by observable
/// name, so equality, ordering and printing are canonical.
class Event {
 public:
  Event() = default;
  explicit Event(std::vector<Assignment> assignments);
  Event(std::initializer_list<Assignment> assignments)
      : Event(std::vector<Assignment>(assignments)) {}

  std::span<const Assignment> assignments() const noexcept { return assignments_; }
  std::size_t size() const noexcept { return assignments_.size(); }
  bool empty() const noexcept { return assignments_.empty(); }

  std::optional<Outcome> value(std::string_view observable) const noexcept;
  bool assigns(std::string_view observable) const noexcept { return value(observable).has_value(); }

  /// Union of two events; throws ScenarioError if they disagree on an observable.
  Event merged(const Event& other) const;
  /// Keeps only the assignments whose observable satisfies `keep`.
  template <typename Pred>
  Event filtered(Pred keep) const {
    std::vector<Assignment> out;
    for (const auto& a : assignments_)
      if (keep(a)) out.push_back(a);
    return Event(std::move(out));
  }

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;

 private:
  std::vector<Assignment> assignments_;
};

/// "(A1+,A2-)"
std::string to_string(const Event& e);

Event negate_event(const Event& e);

struct LabeledEvent {
  std::string label;
  Event event;
};

class Scenario {
 public:
  Scenario() = default;
  explicit Scenario(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  void declare(ObservableId id);
  void declare(std::string name, Copy copy) { declare(ObservableId{std::move(name), copy}); }
  void declare_derived(DerivedObservable derived);
  /// Validates the event (declared observables, derived-rule consistency) first.
  void add_event(std::string label, Event event);

  std::span<const ObservableId> observables() const noexcept { return observables_; }
  std::span<const DerivedObservable> derived() const noexcept { return derived_; }
  std::span<const LabeledEvent> events() const noexcept { return events_; }
  std::vector<Event> event_list() const;

  const ObservableId* find(std::string_view name) const noexcept;
  bool is_declared(std::string_view name) const noexcept { return find(name) != nullptr; }
  const DerivedObservable* find_derived(std::string_view name) const noexcept;
  bool is_derived(std::string_view name) const noexcept { return find_derived(name) != nullptr; }
  /// Declared observables that are not derived, in declaration order.
  std::vector<ObservableId> base_observables() const;

  /// Throws ScenarioError if `e` names an undeclared observable or contradicts a derived rule.
  void validate(const Event& e) const;

  /// Fills in every derived value determined by the assigned arguments (to a
  /// fixpoint). Throws ScenarioError on an undeclared observable or if an
  /// explicitly assigned derived value contradicts its rule.
  Event close(const Event& e) const;

 private:
  std::string name_;
  std::vector<ObservableId> observables_;
  std::vector<DerivedObservable> derived_;
  std::vector<LabeledEvent> events_;
};

/// Two events are exclusive when, after closing both under the derived rules,
/// some observable is assigned in both with different outcomes.
bool are_exclusive(const Event& e1, const Event& e2, const Scenario& scenario);

/// The observable witnessing exclusivity, if any (first in name order).
std::optional<std::string> exclusivity_witness(const Event& e1, const Event& e2,
                                               const Scenario& scenario);

}  // namespace excl
