#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quantlet/grid.hpp"

namespace quantlet {

enum class ElementKind { Constant, Gaussian, Beta };

// One dictionary column evaluated on the grid. Beta elements are
// standardized Beta CDFs projected onto the orthogonal complement of the
// two Gaussian bases, so their quadrature inner products with both vanish.
struct DictionaryElement {
    ElementKind kind = ElementKind::Beta;
    double a = 0.0, b = 0.0;  // Beta parameters; unused otherwise
    std::vector<double> values;
};

struct OvercompleteDictionary {
    ProbabilityGrid grid;
    double J = 0.0;
    int K0 = 0;
    std::uint64_t seed = 0;
    std::vector<DictionaryElement> elements;  // [const, gaussian, beta...]
};

// zeta1 = 1 and zeta2 = Phi^{-1}(p) on the grid (unnormalized).
std::pair<std::vector<double>, std::vector<double>> gaussian_bases(const ProbabilityGrid& grid);

// Standardized Beta(a,b) CDF with the Gaussian components projected out:
//   g = (F - mu)/sigma,  element = g - zh1 <g,zh1> - zh2 <g,zh2>
// where mu, sigma^2 are Simpson-quadrature moments of F over [0,1] and
// zh1, zh2 are the unit-quadrature-norm Gaussian bases on the trimmed grid.
DictionaryElement beta_element(double a, double b, const ProbabilityGrid& grid);

// K0 Beta elements with parameters sampled i.i.d. uniform on (0,J)^2 from
// the seeded generator, prefixed by the two Gaussian bases. Deterministic
// in (grid, K0, J, seed).
OvercompleteDictionary build_dictionary(const ProbabilityGrid& grid, int K0, double J,
                                        std::uint64_t seed);

}  // namespace quantlet
