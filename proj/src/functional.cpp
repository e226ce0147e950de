#include "muntz/functional.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace muntz {

DiscreteFunctional::DiscreteFunctional(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  for (const Atom& atom : atoms_) {
    if (!std::isfinite(atom.weight))
      throw InvalidInput("DiscreteFunctional: non-finite weight");
    total_variation_ += std::fabs(atom.weight);
  }
  // Slack of 1e-12 so decimal weight lists like 0.3,0.3,0.4 survive rounding.
  if (total_variation_ > 1.0 + 1e-12)
    throw InvalidInput("DiscreteFunctional: sum of |weights| exceeds 1");
}

double DiscreteFunctional::operator()(const MuntzPolynomial& f) const {
  double s = 0.0;
  for (const Atom& atom : atoms_) s += atom.weight * f.eval(atom.point);
  return s;
}

DiscreteFunctional parse_functional_spec(const std::string& spec) {
  if (spec.empty()) throw InvalidInput("functional spec: empty");
  std::vector<Atom> atoms;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos)
      throw InvalidInput("functional spec: expected <weight>@<x>, got '" + item + "'");
    double weight = 0.0;
    double x = 0.0;
    std::size_t used = 0;
    try {
      weight = std::stod(item.substr(0, at), &used);
      if (used != at) throw std::invalid_argument("");
      const std::string xs = item.substr(at + 1);
      x = std::stod(xs, &used);
      if (used != xs.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidInput("functional spec: bad atom '" + item + "'");
    }
    atoms.push_back(Atom{PointT::from_x(x), weight});
  }
  return DiscreteFunctional(std::move(atoms));
}

}  // namespace muntz
