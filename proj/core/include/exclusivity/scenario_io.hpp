#pragma once

// Text format for scenarios, one declaration per line:
//
//   # comment
//   obs A1 copy=A
//   derived C11 = eq(A1,B1)
//   event e1: A1:+ A2:-
//
// Set files add `set <name>` lines; the events that follow belong to that set.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exclusivity/scenario.hpp"

namespace excl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// "A1:+ A2:-" (whitespace separated). Also accepts the compact "A1+ A2-".
Event parse_event(std::string_view text);

Scenario parse_scenario(std::istream& in, std::string name = {});
Scenario load_scenario(const std::filesystem::path& path);
void write_scenario(std::ostream& out, const Scenario& scenario);

struct NamedSet {
  std::string name;
  std::vector<LabeledEvent> events;
};

struct SetFile {
  Scenario scenario;  ///< declarations only
  std::vector<NamedSet> sets;
};

SetFile parse_set_file(std::istream& in);
SetFile load_set_file(const std::filesystem::path& path);
void write_set_file(std::ostream& out, const Scenario& declarations,
                    const std::vector<NamedSet>& sets);

}  // namespace excl
