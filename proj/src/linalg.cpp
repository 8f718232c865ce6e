#include "geomrep/linalg.hpp"

#include <stdexcept>

namespace geomrep {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Vec& a, const Rat& s) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

Mat identity(int n) {
    Mat m(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat r(a.size(), Vec(b[0].size(), Rat(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
    Vec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

Rat det(Mat a) {
    size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det: not square");
    Rat result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return result;
}

int rank(Mat a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    int rk = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rk;
    }
    return rk;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
    size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n)
        throw std::invalid_argument("solve_linear: wants square system");
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<Mat> invert(const Mat& a) {
    size_t n = a.size();
    Mat work = a;
    Mat inv = identity(static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        Rat d = work[col][col];
        for (size_t c = 0; c < n; ++c) {
            work[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || work[r][col] == 0) continue;
            Rat f = work[r][col];
            for (size_t c = 0; c < n; ++c) {
                work[r][c] -= f * work[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

bool positive_definite(const Mat& q) {
    size_t n = q.size();
    for (size_t i = 0; i < n; ++i) {
        if (q[i].size() != n) return false;
        for (size_t j = 0; j < n; ++j)
            if (q[i][j] != q[j][i]) return false;
    }
    for (size_t k = 1; k <= n; ++k) {
        Mat minor(k, Vec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = q[i][j];
        if (det(minor) <= 0) return false;
    }
    return true;
}

}  // namespace geomrep
