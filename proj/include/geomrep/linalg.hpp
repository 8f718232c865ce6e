#pragma once

#include "geomrep/rational.hpp"

#include <optional>
#include <vector>

namespace geomrep {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, dense; sized for d <= ~6

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Rat norm_sq(const Vec& a);

Mat identity(int n);
Mat transpose(const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Rat det(Mat a);
int rank(Mat a);

/// Unique solution of a*x = b, or nullopt when a is singular.
std::optional<Vec> solve_linear(Mat a, Vec b);

/// Inverse of a nonsingular square matrix, or nullopt.
std::optional<Mat> invert(const Mat& a);

/// True when the symmetric matrix is positive definite (exact, via leading minors).
bool positive_definite(const Mat& q);

}  // namespace geomrep
