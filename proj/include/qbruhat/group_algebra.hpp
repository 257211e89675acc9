#pragma once

#include <map>
#include <string>

#include "qbruhat/root_system.hpp"

namespace qbruhat {

// Element of Z[Lambda]: a finite integer combination of formal exponentials
// e^nu, nu in fundamental-weight coordinates. Zero coefficients are never
// stored; the map order gives the canonical serialization.
class GroupAlgebraElt {
 public:
  GroupAlgebraElt() = default;

  static GroupAlgebraElt zero() { return {}; }
  static GroupAlgebraElt constant(int rank, long long c);
  static GroupAlgebraElt monomial(IntVec weight, long long c = 1);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(const IntVec& weight) const;
  const std::map<IntVec, long long>& terms() const { return terms_; }

  GroupAlgebraElt& operator+=(const GroupAlgebraElt& o);
  GroupAlgebraElt& operator-=(const GroupAlgebraElt& o);
  GroupAlgebraElt operator+(const GroupAlgebraElt& o) const;
  GroupAlgebraElt operator-(const GroupAlgebraElt& o) const;
  GroupAlgebraElt operator*(const GroupAlgebraElt& o) const;  // e^mu e^nu = e^{mu+nu}
  bool operator==(const GroupAlgebraElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const GroupAlgebraElt& o) const { return terms_ != o.terms_; }

  // specialization e -> 1 (the coefficient sum)
  long long eval_at_one() const;

  // e.g. "1 + e^{-w1 - 2w2 + w3}"; "0" for the zero element
  std::string to_string() const;

 private:
  void add_term(const IntVec& weight, long long c);
  std::map<IntVec, long long> terms_;
};

std::string weight_expr(const IntVec& fw);  // "-w1 - 2w2 + w3"

}  // namespace qbruhat
