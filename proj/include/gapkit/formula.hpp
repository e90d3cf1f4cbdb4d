#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapkit {

struct Literal {
  int var = 0;           // 0-indexed
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// One bit per variable.
using Assignment = std::vector<std::uint8_t>;

/// CNF formula; clauses keep their input order, literals within a clause are
/// sorted by variable index (a variable appears at most once per clause).
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int var_count, std::vector<std::vector<Literal>> clauses);

  int var_count() const { return var_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }

  bool clause_satisfied(int c, const Assignment& a) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int var_count_ = 0;
  std::vector<std::vector<Literal>> clauses_;
};

/// System of GF(2) equations x_i + x_j + x_k = b on pairwise distinct
/// variables; each equation's indices are stored sorted ascending.
class LinSystem {
 public:
  struct Equation {
    int i = 0, j = 0, k = 0;
    int rhs = 0;  // 0 or 1

    friend bool operator==(const Equation&, const Equation&) = default;
  };

  LinSystem() = default;
  LinSystem(int var_count, std::vector<Equation> equations);

  int var_count() const { return var_count_; }
  int equation_count() const { return static_cast<int>(equations_.size()); }
  const std::vector<Equation>& equations() const { return equations_; }

  bool equation_satisfied(int e, const Assignment& a) const;

  friend bool operator==(const LinSystem&, const LinSystem&) = default;

 private:
  int var_count_ = 0;
  std::vector<Equation> equations_;
};

int count_satisfied(const CnfFormula& f, const Assignment& a);
int count_satisfied(const LinSystem& sys, const Assignment& a);

/// DIMACS CNF: `p cnf n m`, clauses as 0-terminated literal runs.
CnfFormula parse_cnf(const std::string& text);
std::string emit_cnf(const CnfFormula& f);

/// `p lin3 n m` header, then `i j k b` lines with 1-indexed variables.
LinSystem parse_lin3(const std::string& text);
std::string emit_lin3(const LinSystem& sys);

}  // namespace gapkit
