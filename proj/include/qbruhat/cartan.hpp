#pragma once

#include <string>
#include <vector>

namespace qbruhat {

// Dynkin families, Bourbaki/Humphreys numbering of nodes (1..rank).
// In type B the last simple root is short; in type C it is long;
// in type G2 the first simple root is short.
enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

struct CartanSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
};

Family family_from_char(char c);

// Throws std::invalid_argument on an invalid family/rank combination.
void validate_spec(const CartanSpec& spec);

// Cartan matrix with the convention C[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>
// (0-based storage, 1-based node labels). Row i describes pairings against
// the i-th simple coroot; diagonal entries are 2.
std::vector<std::vector<int>> cartan_matrix(const CartanSpec& spec);

}  // namespace qbruhat
