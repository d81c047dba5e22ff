#include "actlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "actlab/errors.hpp"

namespace actlab {

void Workspace::add_monoid(const MonoidPtr& S) { monoids[S->name()] = S; }

void Workspace::add_act(const FiniteAct& A) { acts.insert_or_assign(A.name(), A); }

const MonoidPtr& Workspace::monoid(const std::string& name) const {
  auto it = monoids.find(name);
  if (it == monoids.end())
    throw UnknownMonoidError("monoid '" + name + "' is not loaded");
  return it->second;
}

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// Whitespace-separated tokens with positions; '#' comments run to the line end.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int tok_line = 0, tok_col = 0;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(Token{cur, tok_line, tok_col});
      cur.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      ++col;
      continue;
    }
    if (cur.empty()) {
      tok_line = line;
      tok_col = col;
    }
    cur += c;
    ++col;
  }
  flush();
  return out;
}

class TokenReader {
 public:
  explicit TokenReader(const std::string& text) : tokens_(tokenize(text)) {}

  const Token& expect(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      const Token& last = tokens_.empty()
                              ? Token{"", 1, 1}
                              : tokens_.back();
      throw ParseError("expected " + what + " but input ended", last.line,
                       last.col);
    }
    return tokens_[pos_++];
  }

  void expect_keyword(const std::string& kw) {
    const Token& t = expect("keyword '" + kw + "'");
    if (t.text != kw)
      throw ParseError("expected keyword '" + kw + "', found '" + t.text + "'",
                       t.line, t.col);
  }

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

// Labels between the current position and the next occurrence of `stop`.
std::vector<std::string> read_until_keyword(TokenReader& r, const std::string& stop) {
  std::vector<std::string> out;
  while (!r.at_end() && r.peek().text != stop) out.push_back(r.expect("label").text);
  return out;
}

Idx index_of_label(const std::vector<std::string>& labels, const Token& t) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == t.text) return static_cast<Idx>(i);
  throw ParseError("unknown element label '" + t.text + "'", t.line, t.col);
}

void check_distinct(const std::vector<std::string>& labels, const Token& at) {
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw ParseError("duplicate element label '" + labels[i] + "'", at.line,
                         at.col);
}

}  // namespace

MonoidPtr parse_monoid(const std::string& text) {
  TokenReader r(text);
  r.expect_keyword("monoid");
  std::string name = r.expect("monoid name").text;
  Token elems_kw = r.expect("keyword 'elements'");
  if (elems_kw.text != "elements")
    throw ParseError("expected keyword 'elements', found '" + elems_kw.text + "'",
                     elems_kw.line, elems_kw.col);
  std::vector<std::string> labels = read_until_keyword(r, "table");
  if (labels.empty())
    throw ParseError("monoid needs at least one element", elems_kw.line,
                     elems_kw.col);
  check_distinct(labels, elems_kw);
  r.expect_keyword("table");
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<Idx>> table(n, std::vector<Idx>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index_of_label(labels, r.expect("table entry"));
  if (!r.at_end()) {
    const Token& t = r.peek();
    throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.col);
  }
  return FiniteMonoid::validate(name, labels, table, 0);
}

FiniteAct parse_act(const std::string& text, const Workspace& ws) {
  TokenReader r(text);
  r.expect_keyword("act");
  std::string name = r.expect("act name").text;
  r.expect_keyword("over");
  std::string monoid_name = r.expect("monoid name").text;
  const MonoidPtr& S = ws.monoid(monoid_name);
  Token elems_kw = r.expect("keyword 'elements'");
  if (elems_kw.text != "elements")
    throw ParseError("expected keyword 'elements', found '" + elems_kw.text + "'",
                     elems_kw.line, elems_kw.col);
  std::vector<std::string> labels = read_until_keyword(r, "table");
  if (labels.empty())
    throw ParseError("act needs at least one element", elems_kw.line,
                     elems_kw.col);
  check_distinct(labels, elems_kw);
  r.expect_keyword("table");
  const int m = static_cast<int>(labels.size());
  const int n = S->size();
  std::vector<std::vector<Idx>> table(m, std::vector<Idx>(n));
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s)
      table[x][s] = index_of_label(labels, r.expect("table entry"));
  if (!r.at_end()) {
    const Token& t = r.peek();
    throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.col);
  }
  return FiniteAct::validate(S, name, labels, table);
}

std::string print_monoid(const FiniteMonoid& S) {
  std::ostringstream out;
  out << "monoid " << S.name() << "\nelements";
  for (const std::string& l : S.labels()) out << ' ' << l;
  out << "\ntable\n";
  for (int i = 0; i < S.size(); ++i) {
    for (int j = 0; j < S.size(); ++j)
      out << (j ? " " : "") << S.label(S.mul(i, j));
    out << '\n';
  }
  return out.str();
}

std::string print_act(const FiniteAct& A) {
  std::ostringstream out;
  out << "act " << A.name() << " over " << A.monoid()->name() << "\nelements";
  for (const std::string& l : A.labels()) out << ' ' << l;
  out << "\ntable\n";
  for (int x = 0; x < A.size(); ++x) {
    for (int s = 0; s < A.monoid()->size(); ++s)
      out << (s ? " " : "") << A.label(A.act(x, s));
    out << '\n';
  }
  return out.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

MonoidPtr load_monoid_file(const std::string& path) {
  return parse_monoid(slurp(path));
}

FiniteAct load_act_file(const std::string& path, const Workspace& ws) {
  return parse_act(slurp(path), ws);
}

nlohmann::json monoid_json(const FiniteMonoid& S) {
  nlohmann::json table = nlohmann::json::array();
  for (int i = 0; i < S.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < S.size(); ++j) row.push_back(S.label(S.mul(i, j)));
    table.push_back(std::move(row));
  }
  return {{"name", S.name()}, {"elements", S.labels()}, {"table", table}};
}

nlohmann::json act_json(const FiniteAct& A) {
  nlohmann::json table = nlohmann::json::array();
  for (int x = 0; x < A.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int s = 0; s < A.monoid()->size(); ++s)
      row.push_back(A.label(A.act(x, s)));
    table.push_back(std::move(row));
  }
  return {{"name", A.name()},
          {"over", A.monoid()->name()},
          {"elements", A.labels()},
          {"table", table}};
}

nlohmann::json problem_json(const ExtensionProblem& p) {
  nlohmann::json sub = nlohmann::json::array();
  nlohmann::json partial = nlohmann::json::object();
  for (size_t i = 0; i < p.sub.size(); ++i) {
    sub.push_back(p.ambient.label(p.sub[i]));
    partial[p.ambient.label(p.sub[i])] = p.target.label(p.partial[i]);
  }
  return {{"monoid", monoid_json(*p.ambient.monoid())},
          {"ambient", act_json(p.ambient)},
          {"sub", sub},
          {"target", act_json(p.target)},
          {"partial", partial}};
}

nlohmann::json verdict_json(const InjectivityVerdict& v) {
  nlohmann::json out = {{"notion", notion_name(v.notion)},
                        {"value", outcome_name(v.value)}};
  if (v.bound) out["bound"] = *v.bound;
  if (v.witness) out["witness"] = problem_json(*v.witness);
  return out;
}

nlohmann::json report_json(const Report& r) {
  return {{"claim", r.claim},
          {"bounds",
           {{"max_monoid", r.bounds.max_monoid},
            {"max_act", r.bounds.max_act},
            {"codomain", r.bounds.codomain},
            {"alphabet", r.bounds.alphabet}}},
          {"status", claim_status_name(r.status)},
          {"witness", r.witness},
          {"instances", r.instances},
          {"skipped", r.skipped},
          {"elapsed_ms", r.elapsed_ms},
          {"note", r.note}};
}

namespace {

FiniteAct act_from_json(const nlohmann::json& j, const MonoidPtr& S) {
  std::vector<std::string> labels =
      j.at("elements").get<std::vector<std::string>>();
  auto label_index = [&](const std::string& l) -> Idx {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<Idx>(i);
    throw Error("witness act references unknown label '" + l + "'");
  };
  std::vector<std::vector<Idx>> table;
  for (const auto& row : j.at("table")) {
    std::vector<Idx> r;
    for (const auto& entry : row) r.push_back(label_index(entry.get<std::string>()));
    table.push_back(std::move(r));
  }
  return FiniteAct::validate(S, j.at("name").get<std::string>(), labels, table);
}

}  // namespace

bool replay_problem_extendable(const nlohmann::json& problem) {
  const nlohmann::json& mj = problem.at("monoid");
  std::vector<std::string> labels =
      mj.at("elements").get<std::vector<std::string>>();
  auto label_index = [&](const std::string& l) -> Idx {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<Idx>(i);
    throw Error("witness monoid references unknown label '" + l + "'");
  };
  std::vector<std::vector<Idx>> table;
  for (const auto& row : mj.at("table")) {
    std::vector<Idx> r;
    for (const auto& entry : row) r.push_back(label_index(entry.get<std::string>()));
    table.push_back(std::move(r));
  }
  MonoidPtr S = FiniteMonoid::validate(mj.at("name").get<std::string>(), labels,
                                       table, 0);
  FiniteAct ambient = act_from_json(problem.at("ambient"), S);
  FiniteAct target = act_from_json(problem.at("target"), S);
  auto amb_index = [&](const std::string& l) -> Idx {
    for (Idx i = 0; i < ambient.size(); ++i)
      if (ambient.label(i) == l) return i;
    throw Error("witness subset references unknown label '" + l + "'");
  };
  auto tgt_index = [&](const std::string& l) -> Idx {
    for (Idx i = 0; i < target.size(); ++i)
      if (target.label(i) == l) return i;
    throw Error("witness partial map references unknown label '" + l + "'");
  };
  std::vector<Idx> sub;
  for (const auto& l : problem.at("sub")) sub.push_back(amb_index(l.get<std::string>()));
  std::sort(sub.begin(), sub.end());
  std::vector<Idx> partial;
  for (Idx x : sub)
    partial.push_back(
        tgt_index(problem.at("partial").at(ambient.label(x)).get<std::string>()));
  auto p = make_extension_problem(std::move(ambient), std::move(sub),
                                  std::move(target), std::move(partial));
  return extend_hom(p).has_value();
}

}  // namespace actlab
