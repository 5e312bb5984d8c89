#include "exclusivity/scenario_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace excl {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Assignment parse_assignment(std::string_view token) {
  std::string_view name;
  char sign = 0;
  if (token.size() >= 3 && token[token.size() - 2] == ':') {
    name = token.substr(0, token.size() - 2);
    sign = token.back();
  } else if (token.size() >= 2) {
    name = token.substr(0, token.size() - 1);
    sign = token.back();
  }
  if (name.empty() || (sign != '+' && sign != '-'))
    throw ScenarioError("malformed assignment '" + std::string(token) + "'");
  return {std::string(name), sign == '+' ? Outcome::Plus : Outcome::Minus};
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ':' || c == ',' || c == '(' || c == ')' || c == '=' || c == '#' || c == ' ' ||
        c == '\t')
      return false;
  }
  return true;
}

// Shared line parser for scenarios and set files.
class Reader {
 public:
  Reader(bool allow_sets, std::string name) : allow_sets_(allow_sets), scenario_(std::move(name)) {}

  void line(std::size_t number, std::string_view raw) {
    const std::string_view text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) return;
    try {
      dispatch(text);
    } catch (const ParseError&) {
      throw;
    } catch (const ScenarioError& e) {
      throw ParseError(number, e.what());
    }
  }

  Scenario& scenario() { return scenario_; }
  std::vector<NamedSet>& sets() { return sets_; }

 private:
  void dispatch(std::string_view text) {
    const auto space = text.find_first_of(" \t");
    const std::string_view keyword = text.substr(0, space);
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : trim(text.substr(space));
    if (keyword == "obs") return observable(rest);
    if (keyword == "derived") return derived(rest);
    if (keyword == "event") return event(rest);
    if (keyword == "set" && allow_sets_) return set(rest);
    throw ScenarioError("unknown declaration '" + std::string(keyword) + "'");
  }

  void observable(std::string_view rest) {
    const auto tokens = split_ws(rest);
    if (tokens.empty() || tokens.size() > 2 || !valid_name(tokens[0]))
      throw ScenarioError("expected: obs <name> [copy=A|B]");
    Copy copy = Copy::Shared;
    if (tokens.size() == 2) {
      if (tokens[1] == "copy=A")
        copy = Copy::A;
      else if (tokens[1] == "copy=B")
        copy = Copy::B;
      else
        throw ScenarioError("bad copy tag '" + std::string(tokens[1]) + "'");
    }
    scenario_.declare(std::string(tokens[0]), copy);
  }

  void derived(std::string_view rest) {
    const auto eq = rest.find('=');
    const auto open = rest.find('(');
    const auto comma = rest.find(',');
    const auto close = rest.find(')');
    if (eq == std::string_view::npos || open == std::string_view::npos ||
        comma == std::string_view::npos || close == std::string_view::npos ||
        !(eq < open && open < comma && comma < close) || !trim(rest.substr(close + 1)).empty())
      throw ScenarioError("expected: derived <name> = eq(<name>,<name>)");
    const auto name = trim(rest.substr(0, eq));
    const auto rule = trim(rest.substr(eq + 1, open - eq - 1));
    const auto a = trim(rest.substr(open + 1, comma - open - 1));
    const auto b = trim(rest.substr(comma + 1, close - comma - 1));
    if (rule != "eq") throw ScenarioError("unsupported rule '" + std::string(rule) + "'");
    if (!valid_name(name) || !valid_name(a) || !valid_name(b))
      throw ScenarioError("bad name in derived declaration");
    scenario_.declare_derived(
        DerivedObservable::equality(std::string(name), std::string(a), std::string(b)));
  }

  void event(std::string_view rest) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ScenarioError("expected: event <label>: ...");
    const auto label = trim(rest.substr(0, colon));
    if (!valid_name(label)) throw ScenarioError("bad event label '" + std::string(label) + "'");
    Event e = parse_event(rest.substr(colon + 1));
    if (e.empty()) throw ScenarioError("event '" + std::string(label) + "' assigns nothing");
    if (allow_sets_) {
      if (sets_.empty()) throw ScenarioError("event before any set declaration");
      scenario_.validate(e);
      sets_.back().events.push_back({std::string(label), std::move(e)});
    } else {
      scenario_.add_event(std::string(label), std::move(e));
    }
  }

  void set(std::string_view rest) {
    if (!valid_name(rest)) throw ScenarioError("expected: set <name>");
    sets_.push_back({std::string(rest), {}});
  }

  bool allow_sets_;
  Scenario scenario_;
  std::vector<NamedSet> sets_;
};

void read_lines(std::istream& in, Reader& reader) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) reader.line(++number, line);
}

void write_declarations(std::ostream& out, const Scenario& scenario) {
  for (const auto& o : scenario.observables()) {
    if (scenario.is_derived(o.name)) continue;
    out << "obs " << o.name;
    if (o.copy != Copy::Shared) out << " copy=" << to_string(o.copy);
    out << '\n';
  }
  for (const auto& d : scenario.derived()) {
    if (!d.is_equality())
      throw ScenarioError("derived observable '" + d.id.name + "' has no text form");
    out << "derived " << d.id.name << " = eq(" << d.first << ',' << d.second << ")\n";
  }
}

void write_event(std::ostream& out, const LabeledEvent& le) {
  out << "event " << le.label << ':';
  for (const auto& a : le.event.assignments()) out << ' ' << a.observable << ':' << sign_char(a.outcome);
  out << '\n';
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Event parse_event(std::string_view text) {
  std::vector<Assignment> out;
  for (auto token : split_ws(text)) out.push_back(parse_assignment(token));
  return Event(std::move(out));
}

Scenario parse_scenario(std::istream& in, std::string name) {
  Reader reader(false, std::move(name));
  read_lines(in, reader);
  return std::move(reader.scenario());
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return parse_scenario(in, path.stem().string());
}

void write_scenario(std::ostream& out, const Scenario& scenario) {
  write_declarations(out, scenario);
  for (const auto& le : scenario.events()) write_event(out, le);
}

SetFile parse_set_file(std::istream& in) {
  Reader reader(true, {});
  read_lines(in, reader);
  return {std::move(reader.scenario()), std::move(reader.sets())};
}

SetFile load_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  SetFile file = parse_set_file(in);
  file.scenario.set_name(path.stem().string());
  return file;
}

void write_set_file(std::ostream& out, const Scenario& declarations,
                    const std::vector<NamedSet>& sets) {
  write_declarations(out, declarations);
  for (const auto& s : sets) {
    out << "set " << s.name << '\n';
    for (const auto& le : s.events) write_event(out, le);
  }
}

}  // namespace excl
