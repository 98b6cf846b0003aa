#pragma once

#include <cstddef>
#include <vector>

namespace levykit {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(std::size_t n);

}  // namespace levykit
