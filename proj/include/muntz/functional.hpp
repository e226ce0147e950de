#pragma once

#include <string>
#include <vector>

#include "muntz/polynomial.hpp"

namespace muntz {

struct Atom {
  PointT point;
  double weight;
};

// Finitely supported functional mu(f) = sum w_i f(x_i) on C[0,1].
// Total variation sum |w_i| <= 1 is enforced so that mu lies in the dual
// ball and slice sets built from it are honest slices of the unit ball.
class DiscreteFunctional {
 public:
  explicit DiscreteFunctional(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  double total_variation() const noexcept { return total_variation_; }

  double operator()(const MuntzPolynomial& f) const;

 private:
  std::vector<Atom> atoms_;
  double total_variation_ = 0.0;
};

// Atom mini-language for the CLI: "<w>@<x>[,<w>@<x>...]".
DiscreteFunctional parse_functional_spec(const std::string& spec);

}  // namespace muntz
