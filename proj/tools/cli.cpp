#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "mixvol/error.hpp"
#include "mixvol/io.hpp"
#include "mixvol/laurent.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/newton_bkk.hpp"

namespace mixvol::cli {

namespace {

struct Settings {
  std::string output = "human";
  int precision = 60;
  std::uint64_t seed = 0;
  bool parallel = false;
  std::string input;
  std::vector<std::string> expressions;
  std::string vars;
  std::string factor = "1";
  unsigned m = 2;
  unsigned votes = 1;
};

struct Result {
  json structured;
  std::string human;
};

// ---------------------------------------------------------------- input

struct Source {
  std::string name;
  std::string text;
};

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

Source read_input(const std::string& input) {
  if (input.empty()) throw DomainError("no input given");
  if (looks_like_json(input)) return {"<inline>", input};
  std::ifstream in(input, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return {input, buf.str()};
}

json load_json(const Source& src) {
  json j = parse_json(src.text, src.name);
  // Structured output of this tool is accepted as input.
  if (j.is_object() && j.contains("result") && j.contains("command")) return j.at("result");
  return j;
}

template <typename T>
T convert(const Source& src, const std::string& where, const std::function<T()>& fn) {
  try {
    return fn();
  } catch (const CapabilityError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw DomainError(src.name + ": " + where + e.what());
  } catch (const json::exception& e) {
    throw DomainError(src.name + ": " + where + "invalid document");
  }
}

template <typename T>
std::vector<T> load_list(const Source& src, T (*element)(const json&)) {
  const json j = load_json(src);
  if (!j.is_array()) throw DomainError(src.name + ": expected a list of documents");
  if (j.empty()) throw DomainError(src.name + ": empty list");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(convert<T>(src, "item " + std::to_string(i + 1) + ": ",
                             [&] { return element(j[i]); }));
  }
  return out;
}

template <typename T>
T load_one(const Source& src, T (*element)(const json&)) {
  const json j = load_json(src);
  return convert<T>(src, "", [&] { return element(j); });
}

std::vector<std::string> split_vars(const std::string& vars) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : vars) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Polynomials from the input file (one per line, '#' comments) followed by
/// any inline expressions.
std::vector<LaurentPolynomial> load_polynomials(const Settings& s) {
  const auto vars = split_vars(s.vars);
  if (vars.empty()) throw DomainError("polynomial input needs --vars");
  std::vector<LaurentPolynomial> out;
  auto parse_at = [&](const std::string& text, const std::string& name, std::size_t line) {
    try {
      out.push_back(parse_laurent(text, vars));
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.reason(), line + e.line() - 1, e.column());
    } catch (const DomainError& e) {
      throw DomainError(name + ": line " + std::to_string(line) + ": " + e.what());
    }
  };
  if (!s.input.empty()) {
    const Source src = read_input(s.input);
    std::istringstream lines(src.text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
      ++number;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      parse_at(line, src.name, number);
    }
  }
  for (std::size_t i = 0; i < s.expressions.size(); ++i) {
    parse_at(s.expressions[i], "expression " + std::to_string(i + 1), 1);
  }
  if (out.empty()) throw DomainError("no polynomials given");
  return out;
}

bool polynomial_mode(const Settings& s) {
  if (!s.expressions.empty()) return true;
  if (s.input.empty()) return false;
  return !looks_like_json(read_input(s.input).text);
}

std::vector<PointSet> load_supports(const Settings& s) {
  if (polynomial_mode(s)) {
    std::vector<PointSet> out;
    for (const auto& f : load_polynomials(s)) out.push_back(support(f));
    return out;
  }
  return load_list(read_input(s.input), point_set_from_json);
}

// ---------------------------------------------------------------- output

std::string show_point(const RationalVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + ")";
}

std::string show(const Polytope& p) {
  std::ostringstream out;
  out << "polytope in R^" << p.ambient_dim() << ", dimension " << p.intrinsic_dim() << ", "
      << p.num_vertices() << (p.num_vertices() == 1 ? " vertex" : " vertices") << '\n';
  for (const auto& v : p.vertices()) out << "  " << show_point(v) << '\n';
  out << "volume " << to_string(p.volume());
  return out.str();
}

std::string show(const PointSet& a) {
  std::ostringstream out;
  out << a.size() << (a.size() == 1 ? " point" : " points") << " in Z^" << a.ambient_dim();
  for (const auto& p : a.points()) out << "\n  " << show_point(to_rational(p));
  return out.str();
}

std::string show(const Number& n, int digits) {
  if (const auto* q = std::get_if<Rational>(&n)) return to_string(*q);
  return std::get<Decimal>(n).to_fixed(digits);
}

std::string show(const InequalityReport& r, int digits) {
  std::ostringstream out;
  out << "holds  " << (r.holds ? "yes" : "no") << (r.exact ? " (exact)" : "") << '\n'
      << "lhs    " << show(r.lhs, digits) << '\n'
      << "rhs    " << show(r.rhs, digits) << '\n'
      << "margin " << show(r.margin, digits);
  return out.str();
}

std::string show(const DependenceWitness& w) {
  if (!w.dependent) return "independent";
  std::string s = "dependent, subset {";
  for (std::size_t i = 0; i < w.subset.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w.subset[i] + 1);
  }
  return s + "}";
}

std::string show(const RootCount& c) {
  return c.value.get_str() + " (" + to_string(c.method) + ")";
}

// ---------------------------------------------------------------- commands

Result rational_result(const Rational& q) { return {to_json(q), to_string(q)}; }

Result polytope_result(const Polytope& p) { return {to_json(p), show(p)}; }

Result cmd_hull(const Settings& s) {
  return polytope_result(load_one(read_input(s.input), polytope_from_json));
}

Result cmd_minkowski(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  return polytope_result(minkowski_sum(bodies));
}

Result cmd_dilate(const Settings& s) {
  const Rational k = parse_rational(s.factor);
  return polytope_result(dilate(load_one(read_input(s.input), polytope_from_json), k));
}

Result cmd_volume(const Settings& s) {
  return rational_result(load_one(read_input(s.input), polytope_from_json).volume());
}

Result cmd_lattice_points(const Settings& s) {
  const PointSet a = lattice_points(load_one(read_input(s.input), polytope_from_json));
  return {to_json(a), show(a)};
}

Result cmd_completion(const Settings& s) {
  const PointSet a = completion(load_one(read_input(s.input), point_set_from_json));
  return {to_json(a), show(a)};
}

EvalOptions eval(const Settings& s) { return {s.parallel}; }

Result cmd_mixed_volume(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  return rational_result(mixed_volume(bodies, eval(s)));
}

Result cmd_virtual_mv(const Settings& s) {
  const Source src = read_input(s.input);
  const json j = load_json(src);
  if (j.is_array()) {
    const auto vs = load_list(src, virtual_from_json);
    return rational_result(virtual_mixed_volume(vs));
  }
  return rational_result(virtual_volume(load_one(src, virtual_from_json)));
}

Result report_result(const InequalityReport& r, int digits) {
  return {to_json(r, digits), show(r, digits)};
}

Result cmd_check_af(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  return report_result(check_af(bodies, eval(s)), s.precision);
}

Result cmd_check_af_power(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  return report_result(check_af_power(s.m, bodies, eval(s)), s.precision);
}

Result cmd_check_bm(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  if (bodies.size() < 2) throw DomainError("check-bm needs at least two bodies");
  const std::span<const Polytope> rest(bodies.begin() + 2, bodies.end());
  return report_result(check_bm(s.m, bodies[0], bodies[1], rest, {s.precision, eval(s)}),
                       s.precision);
}

Result cmd_isoperimetric(const Settings& s) {
  const Polytope p = load_one(read_input(s.input), polytope_from_json);
  return report_result(isoperimetric_check(p, s.precision), s.precision);
}

Result cmd_criterion(const Settings& s) {
  const auto bodies = load_list(read_input(s.input), polytope_from_json);
  const DependenceWitness w = minkowski_zero_criterion(bodies);
  return {to_json(w), show(w)};
}

Result cmd_newton(const Settings& s) {
  const auto polys = load_polynomials(s);
  if (polys.size() == 1) return polytope_result(newton_polytope(polys.front()));
  json list = json::array();
  std::string human;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Polytope p = newton_polytope(polys[i]);
    list.push_back(to_json(p));
    if (i) human += "\n";
    human += show(p);
  }
  return {list, human};
}

Result count_result(const RootCount& c) { return {to_json(c), show(c)}; }

Result cmd_kushnirenko(const Settings& s) {
  if (polynomial_mode(s)) {
    const auto polys = load_polynomials(s);
    if (polys.size() != 1) throw DomainError("kushnirenko takes a single support");
    return count_result(kushnirenko_count(support(polys.front())));
  }
  return count_result(kushnirenko_count(load_one(read_input(s.input), point_set_from_json)));
}

Result cmd_bkk(const Settings& s) { return count_result(bkk_count(load_supports(s), eval(s))); }

Result cmd_no_body_index(const Settings& s) { return count_result(no_body_index(load_supports(s))); }

Result cmd_empty_intersection(const Settings& s) {
  const DependenceWitness w = generic_empty_intersection(load_supports(s));
  return {to_json(w), show(w)};
}

Result cmd_oracle_2d(const Settings& s) {
  const auto polys = load_polynomials(s);
  if (polys.size() != 2) throw DomainError("oracle-2d takes exactly two polynomials");
  if (s.votes <= 1) return count_result(oracle_count_2d(polys[0], polys[1], s.seed));
  std::vector<std::uint64_t> seeds(s.votes);
  std::iota(seeds.begin(), seeds.end(), s.seed);
  const OracleVote v = oracle_vote_2d(polys[0], polys[1], seeds, s.parallel);
  json tally = json::object();
  std::string human = v.value.get_str() + " (oracle, " + std::to_string(v.agreeing) + " of " +
                      std::to_string(s.votes) + " seeds agree";
  if (v.failed) human += ", " + std::to_string(v.failed) + " non-generic";
  human += ")";
  for (const auto& [value, n] : v.tally) tally[value.get_str()] = n;
  json j = to_json(RootCount{v.value, CountMethod::oracle});
  j["agreeing"] = v.agreeing;
  j["failed"] = v.failed;
  j["tally"] = tally;
  return {j, human};
}

// ---------------------------------------------------------------- wiring

struct Command {
  const char* name;
  const char* help;
  Result (*fn)(const Settings&);
  enum Input { geometry, polynomials } input;
};

constexpr Command kCommands[] = {
    {"hull", "convex hull of a point list", cmd_hull, Command::geometry},
    {"minkowski", "Minkowski sum of a list of polytopes", cmd_minkowski, Command::geometry},
    {"dilate", "k times a polytope (--factor)", cmd_dilate, Command::geometry},
    {"volume", "exact volume", cmd_volume, Command::geometry},
    {"lattice-points", "integer points of a polytope", cmd_lattice_points, Command::geometry},
    {"completion", "integer points of the hull of a point set", cmd_completion,
     Command::geometry},
    {"mixed-volume", "mixed volume of n polytopes in R^n", cmd_mixed_volume, Command::geometry},
    {"virtual-mv", "volume of a virtual polytope, or mixed volume of a list", cmd_virtual_mv,
     Command::geometry},
    {"check-af", "Alexandrov-Fenchel inequality", cmd_check_af, Command::geometry},
    {"check-af-power", "Alexandrov-Fenchel inequality with m-fold repetition (--m)",
     cmd_check_af_power, Command::geometry},
    {"check-bm", "Brunn-Minkowski inequality for mixed volumes (--m)", cmd_check_bm,
     Command::geometry},
    {"isoperimetric", "planar isoperimetric inequality", cmd_isoperimetric, Command::geometry},
    {"criterion", "Minkowski vanishing criterion", cmd_criterion, Command::geometry},
    {"newton", "Newton polytopes of Laurent polynomials", cmd_newton, Command::polynomials},
    {"kushnirenko", "generic root count for one shared support", cmd_kushnirenko,
     Command::polynomials},
    {"bkk", "generic root count for mixed supports", cmd_bkk, Command::polynomials},
    {"no-body-index", "root count through sumset volumes", cmd_no_body_index,
     Command::polynomials},
    {"empty-intersection", "generic empty-intersection criterion", cmd_empty_intersection,
     Command::polynomials},
    {"oracle-2d", "root count of a random 2-variable system by resultants", cmd_oracle_2d,
     Command::polynomials},
};

/// First positional argument when it names no command.
std::optional<std::string> unknown_subcommand(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--output" || a == "--precision" || a == "--seed") {
      ++i;
      continue;
    }
    if (a.starts_with("-")) continue;
    for (const auto& c : kCommands) {
      if (a == c.name) return std::nullopt;
    }
    return a;
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mixed volumes, Newton polytopes and root counts", "mixvol"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--output", s.output, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--precision", s.precision, "decimal digits for root and pi bounds")
      ->check(CLI::Range(20, 100000));
  app.add_option("--seed", s.seed, "oracle seed");
  app.add_flag("--parallel", s.parallel, "evaluate independent volumes concurrently");

  std::map<const CLI::App*, const Command*> handlers;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", s.input, "input file, or an inline JSON document");
    if (c.input == Command::polynomials) {
      sub->add_option("--vars", s.vars, "comma-separated variable names");
      sub->add_option("-e,--expr", s.expressions, "inline polynomial (repeatable)");
    }
    const std::string name = c.name;
    if (name == "dilate") sub->add_option("--factor", s.factor, "rational factor")->required();
    if (name == "check-af-power" || name == "check-bm") {
      sub->add_option("--m", s.m, "repetition count")->required();
    }
    if (name == "oracle-2d") {
      sub->add_option("--votes", s.votes, "majority vote over this many consecutive seeds")
          ->check(CLI::PositiveNumber);
    }
    handlers[sub] = &c;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    if (const auto unknown = unknown_subcommand(args)) {
      err << "usage error: unknown subcommand '" << *unknown << "'\n";
    } else {
      err << "usage error: " << e.what() << "\n";
    }
    return kExitUsageError;
  }

  const Command* cmd = handlers.at(app.get_subcommands().front());
  try {
    const Result r = cmd->fn(s);
    if (s.output == "structured") {
      out << json{{"command", cmd->name}, {"result", r.structured}}.dump(2) << "\n";
    } else {
      out << r.human << "\n";
    }
    return kExitSuccess;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace mixvol::cli
