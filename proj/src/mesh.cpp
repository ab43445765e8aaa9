#include "henon/mesh.hpp"

#include "henon/errors.hpp"
#include "henon/profile.hpp"

namespace henon {

GradedMesh GradedMesh::build(int n, double t_min, double grading)
{
    if (n < 16)
        throw InvalidArgs("spectral mesh needs at least 16 nodes");
    if (!(t_min > 0.0) || !(t_min < 1e-2))
        throw InvalidArgs("t_min must lie in (0, 1e-2)");
    GradedMesh mesh;
    std::vector<double> grid = graded_unit_grid(n + 1, grading, t_min);
    mesh.nodes.assign(grid.begin() + 1, grid.end());
    mesh.t_min = t_min;
    mesh.n = n;
    mesh.grading = grading;
    return mesh;
}

} // namespace henon
