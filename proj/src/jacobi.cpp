#include "qsteer/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsteer {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* eigenvectors) {
    if (n <= 0 || static_cast<size_t>(n) * n != a.size())
        throw std::invalid_argument("jacobi_eigenvalues: matrix size does not match n");
    for (double v : a)
        if (!std::isfinite(v)) throw std::invalid_argument("jacobi_eigenvalues: non-finite entry");

    // mirror the upper triangle so rotations can touch both halves
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a[j * n + i] = a[i * n + j];

    std::vector<double> v;
    if (eigenvectors) {
        v.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    const double scale = std::max(frobenius_norm(a), 1e-300);
    const double stop = 1e-15 * scale;
    const int max_sweeps = 64;

    int sweep = 0;
    for (; sweep < max_sweeps && off_diagonal_norm(a, n) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-18 * scale) {
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = 0.5 * (aqq - app) / apq;
                // smaller root of t^2 + 2 theta t - 1 = 0, stable form
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                a[p * n + p] = app - h;
                a[q * n + q] = aqq + h;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = a[p * n + i] = aip - s * (aiq + tau * aip);
                    a[i * n + q] = a[q * n + i] = aiq + s * (aip - tau * aiq);
                }
                if (eigenvectors) {
                    for (int i = 0; i < n; ++i) {
                        const double vip = v[i * n + p];
                        const double viq = v[i * n + q];
                        v[i * n + p] = vip - s * (viq + tau * vip);
                        v[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
    if (sweep == max_sweeps && off_diagonal_norm(a, n) > stop)
        throw std::runtime_error("jacobi_eigenvalues: did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

    std::vector<double> eig(n);
    for (int k = 0; k < n; ++k) eig[k] = a[order[k] * n + order[k]];
    if (eigenvectors) {
        eigenvectors->assign(static_cast<size_t>(n) * n, 0.0);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) (*eigenvectors)[i * n + k] = v[i * n + order[k]];
    }
    return eig;
}

} // namespace qsteer
