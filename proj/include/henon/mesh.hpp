#pragma once

#include <vector>

namespace henon {

/// Mesh on [t_min, 1] for the singular eigenproblem: geometric with ratio
/// `grading` next to t_min, uniform next to 1 (equispaced in t + c log t).
struct GradedMesh {
    std::vector<double> nodes;
    double t_min = 1e-8;
    int n = 0;
    double grading = 1.05;

    static GradedMesh build(int n, double t_min = 1e-8, double grading = 1.05);
    std::size_t cells() const { return nodes.size() - 1; }
};

} // namespace henon
