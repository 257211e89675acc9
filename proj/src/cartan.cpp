#include "qbruhat/cartan.hpp"

#include <stdexcept>

namespace qbruhat {

std::string CartanSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default:
      throw std::invalid_argument(std::string("unknown Cartan family '") + c + "'");
  }
}

void validate_spec(const CartanSpec& spec) {
  const int n = spec.rank;
  bool ok = false;
  switch (spec.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                                std::string(1, static_cast<char>(spec.family)));
  }
}

std::vector<std::vector<int>> cartan_matrix(const CartanSpec& spec) {
  validate_spec(spec);
  const int n = spec.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // single bond between nodes i+1, j+1
    c[i][j] = -1;
    c[j][i] = -1;
  };
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) bond(i, i + 1);
  };
  switch (spec.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      chain(n);
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      chain(n - 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    case Family::F:
      chain(4);
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace qbruhat
