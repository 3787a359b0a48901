#pragma once

// Independent reference computations built on Eigen; nothing here calls the
// library's own spectral code.

#include "seidelframes/frames.hpp"
#include "seidelframes/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline Eigen::MatrixXd to_eigen(const sf::Matrix& m)
{
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            e(i, j) = m(i, j);
    return e;
}

inline Eigen::MatrixXd grammian_of_signature(const sf::SignatureMatrix& q, int k)
{
    const int n = q.order();
    const double c = std::sqrt(double(k) * (n - k) / (double(n) * n * (n - 1)));
    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i, j) = i == j ? double(k) / n : c * q(i, j);
    return p;
}

inline double top_eig(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

inline void for_each_subset(int n, int m, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> s(m);
    for (int i = 0; i < m; ++i)
        s[i] = i;
    while (true) {
        f(s);
        int i = m - 1;
        while (i >= 0 && s[i] == n - m + i)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < m; ++j)
            s[j] = s[j - 1] + 1;
    }
}

inline double compression_top(const Eigen::MatrixXd& p, const std::vector<int>& s)
{
    Eigen::MatrixXd sub(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            sub(i, j) = p(s[i], s[j]);
    return top_eig(sub);
}

struct Brute {
    double max = 0;
    double mean_power = 0; // (mean of top^p)^(1/p)
    long long count_at_max = 0;
};

inline Brute brute_erasures(const Eigen::MatrixXd& p, int m, double power)
{
    std::vector<double> tops;
    for_each_subset(static_cast<int>(p.rows()), m, [&](const std::vector<int>& s) { tops.push_back(compression_top(p, s)); });
    Brute b;
    b.max = *std::max_element(tops.begin(), tops.end());
    long double acc = 0;
    for (double t : tops) {
        acc += std::pow(static_cast<long double>(t), static_cast<long double>(power));
        if (t >= b.max - 1e-9)
            ++b.count_at_max;
    }
    b.mean_power = static_cast<double>(std::pow(acc / tops.size(), 1.0L / power));
    return b;
}

} // namespace oracle
