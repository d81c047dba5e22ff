#include "actlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "actlab/errors.hpp"
#include "actlab/io.hpp"

namespace actlab {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBounded = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitGuard = 66;

std::string join_labels(const FiniteAct& A, const std::vector<Idx>& elems) {
  if (elems.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < elems.size(); ++i)
    out += (i ? " " : "") + A.label(elems[i]);
  return out;
}

std::string join_monoid_labels(const FiniteMonoid& S, const std::vector<Idx>& elems) {
  if (elems.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < elems.size(); ++i)
    out += (i ? " " : "") + S.label(elems[i]);
  return out;
}

FiniteAct load_act_with_monoid(const std::string& act_path,
                               const std::string& monoid_path) {
  Workspace ws;
  ws.add_monoid(load_monoid_file(monoid_path));
  return load_act_file(act_path, ws);
}

void print_problem(std::ostream& out, const ExtensionProblem& p) {
  out << "witness extension problem:\n";
  out << "  ambient: " << p.ambient.name() << " (size " << p.ambient.size()
      << ")\n  subact:";
  for (Idx x : p.sub) out << ' ' << p.ambient.label(x);
  out << "\n  map:";
  for (size_t i = 0; i < p.sub.size(); ++i)
    out << ' ' << p.ambient.label(p.sub[i]) << "->"
        << p.target.label(p.partial[i]);
  out << "\n  target: " << p.target.name() << " (size " << p.target.size()
      << ")\n  no extension to the ambient act exists\n";
}

int cmd_validate(const std::string& path, const std::string& monoid_path) {
  if (monoid_path.empty()) {
    MonoidPtr S = load_monoid_file(path);
    std::cout << "monoid " << S->name() << ": valid (order " << S->size()
              << ")\n";
  } else {
    FiniteAct A = load_act_with_monoid(path, monoid_path);
    std::cout << "act " << A.name() << ": valid (size " << A.size() << " over "
              << A.monoid()->name() << ")\n";
  }
  return kExitTrue;
}

int cmd_analyze_monoid(const std::string& path) {
  MonoidPtr S = load_monoid_file(path);
  std::cout << "monoid " << S->name() << " (order " << S->size() << ")\n";
  std::cout << "left reversible: " << (is_left_reversible(*S) ? "yes" : "no")
            << "\n";
  std::cout << "regular: " << (is_regular(*S) ? "yes" : "no") << "\n";
  std::cout << "left zeros: " << join_monoid_labels(*S, left_zeros(*S)) << "\n";
  std::cout << "right zeros: " << join_monoid_labels(*S, right_zeros(*S))
            << "\n";
  std::cout << "idempotents: " << join_monoid_labels(*S, idempotents(*S))
            << "\n";
  std::cout << "right ideals: " << all_right_ideals(S).size() << "\n";
  std::cout << "right congruences: " << all_right_congruences(S).size() << "\n";
  std::cout << "principal right ideal monoid: "
            << (is_principal_right_ideal_monoid(*S) ? "yes" : "no") << "\n";
  return kExitTrue;
}

int cmd_analyze_act(const std::string& path, const std::string& monoid_path) {
  FiniteAct A = load_act_with_monoid(path, monoid_path);
  Decomposition d = components(A);
  std::cout << "act " << A.name() << " over " << A.monoid()->name() << " (size "
            << A.size() << ")\n";
  std::cout << "zeros: " << join_labels(A, zeros(A)) << "\n";
  std::cout << "components: " << d.component_count << "\n";
  std::cout << "indecomposable: " << (d.component_count == 1 ? "yes" : "no")
            << "\n";
  std::cout << "subacts: " << subact_sets(A).size() << "\n";
  return kExitTrue;
}

int cmd_decompose(const std::string& path, const std::string& monoid_path,
                  bool dot) {
  FiniteAct A = load_act_with_monoid(path, monoid_path);
  Decomposition d = components(A);
  if (dot) {
    std::cout << "graph \"" << A.name() << "\" {\n";
    for (Idx x = 0; x < A.size(); ++x)
      std::cout << "  \"" << A.label(x) << "\";\n";
    std::map<std::pair<Idx, Idx>, std::string> edges;
    for (Idx x = 0; x < A.size(); ++x)
      for (Idx s = 0; s < A.monoid()->size(); ++s) {
        Idx y = A.act(x, s);
        if (y == x) continue;
        auto key = std::minmax(x, y);
        std::string& lbl = edges[{key.first, key.second}];
        if (!lbl.empty()) lbl += ",";
        lbl += A.monoid()->label(s);
      }
    for (auto& [e, lbl] : edges)
      std::cout << "  \"" << A.label(e.first) << "\" -- \"" << A.label(e.second)
                << "\" [label=\"" << lbl << "\"];\n";
    std::cout << "}\n";
    return kExitTrue;
  }
  std::cout << "act " << A.name() << " over " << A.monoid()->name() << ": "
            << d.component_count << " component"
            << (d.component_count == 1 ? "" : "s") << "\n";
  auto blocks = d.component_elems();
  for (size_t c = 0; c < blocks.size(); ++c)
    std::cout << "component " << c + 1 << ": " << join_labels(A, blocks[c])
              << "\n";
  return kExitTrue;
}

int cmd_check(const std::string& notion, const std::string& path,
              const std::string& monoid_path, int bound) {
  FiniteAct A = load_act_with_monoid(path, monoid_path);
  InjectivityVerdict v{Notion::injective, Outcome::holds, std::nullopt,
                       std::nullopt};
  if (notion == "injective") v = is_injective(A);
  else if (notion == "weak") v = is_weakly_injective(A);
  else if (notion == "inc") v = is_inc_injective(A);
  else if (notion == "ind") v = is_ind_injective(A);
  else if (notion == "pind") v = is_pind_injective(A);
  else if (notion == "cc") v = is_cc_injective(A);
  else if (notion == "quasi") v = is_quasi_injective(A);
  else if (notion == "c") v = c_injective_upto(A, bound);
  else if (notion == "pseudo") v = pseudo_injective_upto(A, bound);
  else {
    std::cerr << "unknown notion '" << notion
              << "' (use injective, weak, inc, ind, pind, c, cc, quasi, "
                 "pseudo)\n";
    return kExitUsage;
  }
  std::cout << notion_name(v.notion) << "(" << A.name()
            << ") = " << outcome_name(v.value);
  if (v.bound) std::cout << " (codomains up to size " << *v.bound << ")";
  std::cout << "\n";
  switch (v.value) {
    case Outcome::holds:
      return kExitTrue;
    case Outcome::holds_within_bounds:
      return kExitBounded;
    case Outcome::fails:
      if (v.witness) print_problem(std::cout, *v.witness);
      return kExitFalse;
  }
  return kExitFalse;
}

int cmd_enumerate_monoids(int order) {
  auto all = enumerate_monoids(order);
  std::cout << "# " << all.size() << " monoid" << (all.size() == 1 ? "" : "s")
            << " of order " << order << "\n";
  for (const MonoidPtr& S : all) std::cout << "\n" << print_monoid(*S);
  return kExitTrue;
}

int cmd_enumerate_acts(int size, const std::string& monoid_path) {
  MonoidPtr S = load_monoid_file(monoid_path);
  auto all = enumerate_acts(S, size);
  std::cout << "# " << all.size() << " act" << (all.size() == 1 ? "" : "s")
            << " of size " << size << " over " << S->name() << "\n";
  for (const FiniteAct& A : all) std::cout << "\n" << print_act(A);
  return kExitTrue;
}

int cmd_envelope(const std::string& path, const std::string& monoid_path) {
  FiniteAct A = load_act_with_monoid(path, monoid_path);
  auto [E, into] = injective_envelope(A);
  std::cout << print_act(E);
  std::cout << "embedding:";
  for (Idx a = 0; a < A.size(); ++a)
    std::cout << ' ' << A.label(a) << "->" << E.label(into.map[a]);
  std::cout << "\n";
  return kExitTrue;
}

int cmd_verify(const std::string& id, const Bounds& bounds, int jobs,
               const std::string& out_path) {
  std::vector<Report> reports;
  if (id == "all") {
    reports = verify_all(bounds, jobs);
  } else {
    reports.push_back(verify(id, bounds));
  }
  std::ostringstream nd;
  bool any_counter = false, any_partial = false;
  for (const Report& rep : reports) {
    std::cout << "CLAIM " << rep.claim << ": " << claim_status_name(rep.status)
              << " (instances=" << rep.instances << ", skipped=" << rep.skipped
              << ", elapsed=" << rep.elapsed_ms << "ms)";
    if (!rep.note.empty()) std::cout << " -- " << rep.note;
    std::cout << "\n";
    if (rep.status == ClaimStatus::counterexample) {
      any_counter = true;
      std::cout << "  witness: " << rep.witness.dump() << "\n";
    }
    if (rep.status == ClaimStatus::partial ||
        rep.status == ClaimStatus::skipped)
      any_partial = true;
    nd << report_json(rep).dump() << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << nd.str();
  }
  if (any_counter) return kExitFalse;
  if (any_partial) return kExitBounded;
  return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"finite monoid acts: decompositions, injectivity, verification"};
  app.require_subcommand(1);

  std::string path, monoid_path, notion, claim_id = "all", out_path, kind;
  int bound = 4, order = 0, size = 0, jobs = 1;
  bool dot = false;
  Bounds bounds;

  auto* validate = app.add_subcommand("validate", "parse and validate a file");
  validate->add_option("file", path)->required();
  validate->add_option("--monoid", monoid_path,
                       "monoid file (when validating an act)");

  auto* analyze = app.add_subcommand("analyze", "print structural facts");
  analyze->add_option("kind", kind, "monoid | act")->required();
  analyze->add_option("file", path)->required();
  analyze->add_option("--monoid", monoid_path);

  auto* decompose =
      app.add_subcommand("decompose", "indecomposable components of an act");
  decompose->add_option("file", path)->required();
  decompose->add_option("--monoid", monoid_path)->required();
  decompose->add_flag("--dot", dot, "emit the action graph in DOT format");

  auto* check = app.add_subcommand("check", "decide an injectivity notion");
  check->add_option("notion", notion,
                    "injective|weak|inc|ind|pind|c|cc|quasi|pseudo")
      ->required();
  check->add_option("file", path)->required();
  check->add_option("--monoid", monoid_path)->required();
  check->add_option("--bound", bound, "codomain size cap for c / pseudo");

  auto* enumerate = app.add_subcommand("enumerate", "list structures up to isomorphism");
  auto* en_mon = enumerate->add_subcommand("monoids");
  en_mon->add_option("order", order)->required();
  auto* en_act = enumerate->add_subcommand("acts");
  en_act->add_option("size", size)->required();
  en_act->add_option("--monoid", monoid_path)->required();
  enumerate->require_subcommand(1);

  auto* envelope = app.add_subcommand("envelope", "injective envelope of an act");
  envelope->add_option("file", path)->required();
  envelope->add_option("--monoid", monoid_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run claim checks");
  verify_cmd->add_option("claim", claim_id, "claim id or 'all'");
  verify_cmd->add_option("--max-monoid", bounds.max_monoid);
  verify_cmd->add_option("--max-act", bounds.max_act);
  verify_cmd->add_option("--codomain-bound", bounds.codomain);
  verify_cmd->add_option("--alphabet", bounds.alphabet);
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_option("--out", out_path, "newline-delimited JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(path, monoid_path);
    if (*analyze) {
      if (kind == "monoid") return cmd_analyze_monoid(path);
      if (kind == "act") {
        if (monoid_path.empty()) {
          std::cerr << "analyze act requires --monoid\n";
          return kExitUsage;
        }
        return cmd_analyze_act(path, monoid_path);
      }
      std::cerr << "analyze expects 'monoid' or 'act'\n";
      return kExitUsage;
    }
    if (*decompose) return cmd_decompose(path, monoid_path, dot);
    if (*check) return cmd_check(notion, path, monoid_path, bound);
    if (*enumerate) {
      if (*en_mon) return cmd_enumerate_monoids(order);
      return cmd_enumerate_acts(size, monoid_path);
    }
    if (*envelope) return cmd_envelope(path, monoid_path);
    if (*verify_cmd) return cmd_verify(claim_id, bounds, jobs, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitData;
  } catch (const UnknownMonoidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitData;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const UnknownClaimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace actlab
