#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "actlab/harness.hpp"

namespace actlab {

/// Named collections the CLI works against. Acts reference their monoid by
/// name, so the monoid must be loaded first.
struct Workspace {
  std::map<std::string, MonoidPtr> monoids;
  std::map<std::string, FiniteAct> acts;

  void add_monoid(const MonoidPtr& S);
  void add_act(const FiniteAct& A);
  const MonoidPtr& monoid(const std::string& name) const;
};

/// Text format:
///   monoid <name>
///   elements <labels...>        # first label is the identity
///   table
///   <n rows of n labels>        # row x, column y holds x·y
/// `#` starts a comment; tokens are whitespace separated.
MonoidPtr parse_monoid(const std::string& text);

/// Text format:
///   act <name> over <monoid-name>
///   elements <labels...>
///   table
///   <m rows of |S| labels>      # row x, column s holds x·s
/// Columns follow the monoid's declared element order.
FiniteAct parse_act(const std::string& text, const Workspace& ws);

std::string print_monoid(const FiniteMonoid& S);
std::string print_act(const FiniteAct& A);

MonoidPtr load_monoid_file(const std::string& path);
FiniteAct load_act_file(const std::string& path, const Workspace& ws);

nlohmann::json monoid_json(const FiniteMonoid& S);
nlohmann::json act_json(const FiniteAct& A);
nlohmann::json problem_json(const ExtensionProblem& p);
nlohmann::json verdict_json(const InjectivityVerdict& v);
nlohmann::json report_json(const Report& r);

/// Rebuilds the acts of a serialized extension problem and re-runs the real
/// extension search, so counterexample witnesses can be replayed from their
/// JSON form alone.
bool replay_problem_extendable(const nlohmann::json& problem);

}  // namespace actlab
