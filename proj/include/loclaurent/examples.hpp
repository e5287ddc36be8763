#pragma once

#include "loclaurent/verification.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loclaurent {

/// Rotation of the 2-sphere with moment values -a (south) and +b (north);
/// the line bundle has degree a + b.
ManifoldData sphere(std::int64_t a, std::int64_t b);

/// Sphere cut at 0 (a, b > 0): M+ is the northern cap, whose new south pole
/// is the reduced space, a point.
CutTriple sphere_cut(std::int64_t a, std::int64_t b);

/// Sphere with moment values {0, 2}.
ManifoldData shifted_sphere();

/// A single point with trivial normal bundle and line class c.
ManifoldData point_space(const Scalar &line_class = 1);

/// CP^2 with moment triangle {x, y >= 0, x + y <= d} under the subcircle
/// (1, 2), moment map x + 2y - shift. Three isolated fixed points.
ManifoldData cp2_triangle(std::int64_t d, std::int64_t shift);

/// cp2_triangle(3, 2) with its positive cut. The reduced space is a
/// weighted projective line (the slice crosses the edge with Z/2
/// stabilizer), so its coefficient algebra carries a twisted sector.
CutTriple cp2_cut();

/// Hirzebruch-type surface: trapezoid 0 <= y <= b, 0 <= x <= a + k (b - y),
/// circle acting through y, moment map y - shift. Two fixed spheres with
/// K-theory Q[H]/(H^2).
ManifoldData dual_number_surface(std::int64_t k, std::int64_t a, std::int64_t b,
                                 std::int64_t shift);

/// dual_number_surface cut at 0 (0 < shift < b).
CutTriple dual_number_surface_cut(std::int64_t k, std::int64_t a, std::int64_t b,
                                  std::int64_t shift);

/// The bundled example records, in a fixed order.
std::vector<ExampleRecord> bundled_examples();

std::optional<ExampleRecord> find_example(const std::string &name);

} // namespace loclaurent
