#ifndef STEGO_METRICS_HPP_INCLUDED
#define STEGO_METRICS_HPP_INCLUDED

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

#include <stego/matrix.hpp>

namespace stego
{
    /// Mean squared error over all cells, in double precision.
    template <typename T, typename U>
    double mse(const matrix<T>& a, const matrix<U>& b)
    {
        require_same_size(a, b, "mse");
        if (a.empty())
            throw std::invalid_argument("mse: empty input");

        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            const double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
            sum += diff * diff;
        }
        return sum / static_cast<double>(a.size());
    }

    /// 10*log10(i_max^2 / mse), in dB. Identical inputs give +infinity.
    template <typename T, typename U>
    double psnr(const matrix<T>& a, const matrix<U>& b, double i_max = 255.0)
    {
        const double err = mse(a, b);
        if (err == 0.0)
            return std::numeric_limits<double>::infinity();
        return 10.0 * std::log10(i_max * i_max / err);
    }

    template <typename T>
    std::array<std::uint64_t, 256> histogram(const matrix<T>& img)
    {
        std::array<std::uint64_t, 256> bins{};
        for (const T& value : img.cells())
            ++bins[static_cast<std::uint8_t>(value)];
        return bins;
    }

    /// Pearson correlation coefficient over all cells. Returns nullopt
    /// when either input has zero variance.
    template <typename T, typename U>
    std::optional<double> correlation(const matrix<T>& a, const matrix<U>& b)
    {
        require_same_size(a, b, "correlation");
        if (a.size() < 2)
            throw std::invalid_argument("correlation: need at least 2 cells");

        const double n = static_cast<double>(a.size());
        double mean_a = 0.0, mean_b = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            mean_a += static_cast<double>(a[i]);
            mean_b += static_cast<double>(b[i]);
        }
        mean_a /= n;
        mean_b /= n;

        double cov = 0.0, var_a = 0.0, var_b = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            const double da = static_cast<double>(a[i]) - mean_a;
            const double db = static_cast<double>(b[i]) - mean_b;
            cov += da * db;
            var_a += da * da;
            var_b += db * db;
        }
        if (var_a == 0.0 || var_b == 0.0)
            return std::nullopt;
        return cov / std::sqrt(var_a * var_b);
    }

    /// |r| < 0.7 counts as a weak linear relationship.
    inline bool is_weak_correlation(double r)
    {
        return std::abs(r) < 0.7;
    }

    struct metric_report
    {
        double mse = 0.0;
        double psnr_db = 0.0;
        std::optional<double> correlation;
    };

    template <typename T, typename U>
    metric_report compute_metrics(const matrix<T>& a, const matrix<U>& b, double i_max = 255.0)
    {
        metric_report report;
        report.mse = mse(a, b);
        report.psnr_db = report.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                           : 10.0 * std::log10(i_max * i_max / report.mse);
        report.correlation = a.size() < 2 ? std::nullopt : correlation(a, b);
        return report;
    }
} // namespace stego

#endif // STEGO_METRICS_HPP_INCLUDED
