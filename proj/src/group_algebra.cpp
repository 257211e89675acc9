#include "qbruhat/group_algebra.hpp"

namespace qbruhat {

GroupAlgebraElt GroupAlgebraElt::constant(int rank, long long c) {
  return monomial(zero_vec(rank), c);
}

GroupAlgebraElt GroupAlgebraElt::monomial(IntVec weight, long long c) {
  GroupAlgebraElt e;
  e.add_term(weight, c);
  return e;
}

long long GroupAlgebraElt::coeff(const IntVec& weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? 0 : it->second;
}

void GroupAlgebraElt::add_term(const IntVec& weight, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(weight, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElt& GroupAlgebraElt::operator+=(const GroupAlgebraElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElt& GroupAlgebraElt::operator-=(const GroupAlgebraElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElt GroupAlgebraElt::operator+(const GroupAlgebraElt& o) const {
  GroupAlgebraElt r = *this;
  r += o;
  return r;
}

GroupAlgebraElt GroupAlgebraElt::operator-(const GroupAlgebraElt& o) const {
  GroupAlgebraElt r = *this;
  r -= o;
  return r;
}

GroupAlgebraElt GroupAlgebraElt::operator*(const GroupAlgebraElt& o) const {
  GroupAlgebraElt r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(add(w1, w2), c1 * c2);
  return r;
}

long long GroupAlgebraElt::eval_at_one() const {
  long long s = 0;
  for (const auto& [w, c] : terms_) {
    (void)w;
    s += c;
  }
  return s;
}

std::string weight_expr(const IntVec& fw) {
  std::string s;
  for (size_t k = 0; k < fw.size(); ++k) {
    if (fw[k] == 0) continue;
    if (s.empty()) {
      if (fw[k] < 0) s += "-";
    } else {
      s += fw[k] > 0 ? " + " : " - ";
    }
    int a = fw[k] < 0 ? -fw[k] : fw[k];
    if (a != 1) s += std::to_string(a);
    s += "w" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::string GroupAlgebraElt::to_string() const {
  if (terms_.empty()) return "0";
  // constant term first, then the exponentials in lexicographic weight order
  std::vector<std::pair<IntVec, long long>> ordered;
  for (const auto& [w, c] : terms_)
    if (qbruhat::is_zero(w)) ordered.emplace_back(w, c);
  for (const auto& [w, c] : terms_)
    if (!qbruhat::is_zero(w)) ordered.emplace_back(w, c);
  std::string s;
  for (const auto& [w, c] : ordered) {
    long long a = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c > 0 ? " + " : " - ";
    }
    if (qbruhat::is_zero(w)) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + " ";
      s += "e^{" + weight_expr(w) + "}";
    }
  }
  return s;
}

}  // namespace qbruhat
