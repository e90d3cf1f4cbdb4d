#include "gapkit/formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gapkit/graph.hpp"  // ParseError

namespace gapkit {

CnfFormula::CnfFormula(int var_count, std::vector<std::vector<Literal>> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  for (auto& clause : clauses_) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    std::sort(clause.begin(), clause.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].var < 0 || clause[i].var >= var_count_)
        throw std::invalid_argument("variable index out of range");
      if (i > 0 && clause[i].var == clause[i - 1].var)
        throw std::invalid_argument("repeated variable in clause");
    }
  }
}

bool CnfFormula::clause_satisfied(int c, const Assignment& a) const {
  for (const Literal& lit : clauses_[c])
    if (static_cast<bool>(a[lit.var]) == lit.positive) return true;
  return false;
}

LinSystem::LinSystem(int var_count, std::vector<Equation> equations)
    : var_count_(var_count), equations_(std::move(equations)) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  for (auto& eq : equations_) {
    int idx[3] = {eq.i, eq.j, eq.k};
    std::sort(idx, idx + 3);
    eq.i = idx[0];
    eq.j = idx[1];
    eq.k = idx[2];
    if (eq.i == eq.j || eq.j == eq.k)
      throw std::invalid_argument("repeated variable in equation");
    if (eq.i < 0 || eq.k >= var_count_)
      throw std::invalid_argument("variable index out of range");
    if (eq.rhs != 0 && eq.rhs != 1)
      throw std::invalid_argument("right-hand side must be 0 or 1");
  }
}

bool LinSystem::equation_satisfied(int e, const Assignment& a) const {
  const Equation& eq = equations_[e];
  return ((a[eq.i] ^ a[eq.j] ^ a[eq.k]) & 1) == eq.rhs;
}

int count_satisfied(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.var_count())
    throw std::invalid_argument("assignment length mismatch");
  int count = 0;
  for (int c = 0; c < f.clause_count(); ++c)
    if (f.clause_satisfied(c, a)) ++count;
  return count;
}

int count_satisfied(const LinSystem& sys, const Assignment& a) {
  if (static_cast<int>(a.size()) != sys.var_count())
    throw std::invalid_argument("assignment length mismatch");
  int count = 0;
  for (int e = 0; e < sys.equation_count(); ++e)
    if (sys.equation_satisfied(e, a)) ++count;
  return count;
}

CnfFormula parse_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  bool have_header = false;
  int n = 0;
  long m = 0;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  while (in >> token) {
    if (token == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (token == "p") {
      std::string fmt;
      if (have_header || !(in >> fmt >> n >> m) || fmt != "cnf" || n < 0 ||
          m < 0)
        throw ParseError("malformed cnf header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("literal before cnf header");
    int lit;
    try {
      lit = std::stoi(token);
    } catch (const std::exception&) {
      throw ParseError("malformed literal: " + token);
    }
    if (lit == 0) {
      if (current.empty()) throw ParseError("empty clause");
      clauses.push_back(std::move(current));
      current.clear();
    } else {
      int var = std::abs(lit) - 1;
      if (var >= n) throw ParseError("variable index out of range");
      current.push_back({var, lit > 0});
    }
  }
  if (!have_header) throw ParseError("missing cnf header");
  if (!current.empty()) throw ParseError("unterminated clause");
  if (static_cast<long>(clauses.size()) != m)
    throw ParseError("clause count does not match header");
  try {
    return CnfFormula(n, std::move(clauses));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count() << " " << f.clause_count() << "\n";
  for (const auto& clause : f.clauses()) {
    for (const Literal& lit : clause)
      out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
    out << "0\n";
  }
  return out.str();
}

LinSystem parse_lin3(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0;
  long m = 0;
  std::vector<LinSystem::Equation> eqs;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string fmt;
      if (have_header || !(ls >> fmt >> n >> m) || fmt != "lin3" || n < 0 ||
          m < 0)
        throw ParseError("malformed lin3 header: " + line);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("equation before lin3 header");
    int i, j, k, b;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("malformed equation line: " + line);
    }
    if (!(ls >> j >> k >> b))
      throw ParseError("malformed equation line: " + line);
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
      throw ParseError("variable index out of range: " + line);
    if (b != 0 && b != 1)
      throw ParseError("right-hand side must be 0 or 1: " + line);
    eqs.push_back({i - 1, j - 1, k - 1, b});
  }
  if (!have_header) throw ParseError("missing lin3 header");
  if (static_cast<long>(eqs.size()) != m)
    throw ParseError("equation count does not match header");
  try {
    return LinSystem(n, std::move(eqs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_lin3(const LinSystem& sys) {
  std::ostringstream out;
  out << "p lin3 " << sys.var_count() << " " << sys.equation_count() << "\n";
  for (const auto& eq : sys.equations())
    out << eq.i + 1 << " " << eq.j + 1 << " " << eq.k + 1 << " " << eq.rhs
        << "\n";
  return out.str();
}

}  // namespace gapkit
