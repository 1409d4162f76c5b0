#include "keyfold/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace keyfold {

double entropy_bits(const std::vector<Rational>& atoms) {
  double h = 0.0;
  for (const Rational& q : atoms) {
    const double p = to_double(q);
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

EntropyReport make_entropy_report(std::vector<Rational> atoms) {
  EntropyReport r;
  r.value_bits = entropy_bits(atoms);
  std::sort(atoms.begin(), atoms.end());
  r.exact_atom_multiset = std::move(atoms);
  return r;
}

double binary_entropy(const Rational& lambda) {
  if (lambda < 0 || lambda > 1)
    throw std::domain_error("binary entropy argument outside [0,1]: " + format_fraction(lambda));
  if (lambda == 0 || lambda == 1) return 0.0;
  const double x = to_double(lambda);
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double conditional_mutual_information(const TripartiteDistribution& d) {
  double cmi = 0.0;
  for (const auto& [z, pz] : d.z_marginal()) {
    std::map<int, Rational> px, py;
    std::vector<Rational> pxy;
    for (const auto& [xy, p] : d.slice_conditional(z)) {
      px[xy.first] += p;
      py[xy.second] += p;
      pxy.push_back(p);
    }
    std::vector<Rational> ax, ay;
    for (const auto& [v, p] : px) ax.push_back(p);
    for (const auto& [v, p] : py) ay.push_back(p);
    cmi += to_double(pz) * (entropy_bits(ax) + entropy_bits(ay) - entropy_bits(pxy));
  }
  return cmi;
}

std::map<int, std::vector<Rational>> exact_slice_entropy_profile(const TripartiteDistribution& d) {
  std::map<int, std::vector<Rational>> profile;
  for (const auto& [z, pz] : d.z_marginal()) {
    std::vector<Rational> atoms;
    for (const auto& [xy, p] : d.slice_conditional(z)) atoms.push_back(p);
    std::sort(atoms.begin(), atoms.end());
    profile.emplace(z, std::move(atoms));
  }
  return profile;
}

}  // namespace keyfold
