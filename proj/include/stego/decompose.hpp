#ifndef STEGO_DECOMPOSE_HPP_INCLUDED
#define STEGO_DECOMPOSE_HPP_INCLUDED

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <stego/counters.hpp>
#include <stego/matrix.hpp>

namespace stego
{
    /// Frequency matrix: each cell holds the occurrence count of that
    /// cell's grayscale across the whole payload. Counts range in
    /// [1, m*n], which can exceed 255, hence the 32-bit cell type.
    using frequency_matrix = matrix<std::uint32_t>;

    /// Down-scaled frequency matrix, cells in [0, mu-1] (fits 8 bits).
    using dsf_matrix = matrix<std::uint8_t>;

    /// Per-cell |g - d| magnitudes.
    using error_matrix = matrix<std::uint8_t>;

    /// Binary matrix: 0 where g >= d, 1 where g < d.
    using sign_matrix = matrix<std::uint8_t>;

    /// Frequency down-scaling parameters: mu = 2^eta, eta in {1,...,8}.
    class mapping_params
    {
    public:
        explicit mapping_params(unsigned eta) : eta_(eta)
        {
            if (eta < 1 || eta > 8)
                throw std::domain_error("mapping_params: eta must be in [1,8], got "
                                        + std::to_string(eta));
        }

        unsigned eta() const noexcept { return eta_; }
        std::uint32_t mu() const noexcept { return 1u << eta_; }

    private:
        unsigned eta_;
    };

    /// The half-open frequency band [lb, ub) of width mu that contains
    /// a given frequency, with its down-scaling divisor level = k + 1.
    struct band_params
    {
        std::uint64_t k = 0;
        std::uint64_t lb = 0;
        std::uint64_t ub = 0;
        std::uint64_t level = 1;

        friend bool operator==(const band_params&, const band_params&) = default;
    };

    struct decomposition_set
    {
        dsf_matrix dsf;
        error_matrix err;
        sign_matrix sign;
        mapping_params params;
    };

    /// Band lookup in O(1): bands tile [0, inf) as [k*mu, (k+1)*mu), so
    /// k = floor(f / mu). A frequency equal to a band boundary belongs
    /// to the band whose lb equals it.
    inline band_params band_for(std::uint64_t f, const mapping_params& params)
    {
        if (f < 1)
            throw std::domain_error("band_for: frequency must be >= 1");
        const std::uint64_t mu = params.mu();
        const std::uint64_t k = f / mu;
        return band_params{k, k * mu, (k + 1) * mu, k + 1};
    }

    /// One histogram pass, then one substitution pass.
    inline frequency_matrix count_frequencies(const gray_image& payload,
                                              op_counters* counters = nullptr)
    {
        if (payload.empty())
            throw std::invalid_argument("count_frequencies: empty payload");

        std::array<std::uint32_t, 256> histogram{};
        for (std::uint8_t g : payload.cells())
            ++histogram[g];

        frequency_matrix freq(payload.height(), payload.width());
        for (std::size_t i = 0; i < payload.size(); ++i)
            freq[i] = histogram[payload[i]];

        if (counters)
            counters->comparisons += 2 * static_cast<std::uint64_t>(payload.size());
        return freq;
    }

    /// d = floor(f / level) with level taken from the band of f.
    /// Always <= mu - 1 since f < (k+1)*mu and level = k + 1.
    inline dsf_matrix downscale(const frequency_matrix& freq, const mapping_params& params,
                                op_counters* counters = nullptr)
    {
        dsf_matrix dsf(freq.height(), freq.width());
        for (std::size_t i = 0; i < freq.size(); ++i)
        {
            const band_params band = band_for(freq[i], params);
            dsf[i] = static_cast<std::uint8_t>(freq[i] / band.level);
        }
        if (counters)
            counters->division_steps += static_cast<std::uint64_t>(freq.size());
        return dsf;
    }

    inline std::pair<error_matrix, sign_matrix>
    error_and_sign(const gray_image& payload, const dsf_matrix& dsf,
                   op_counters* counters = nullptr)
    {
        require_same_size(payload, dsf, "error_and_sign");

        error_matrix err(payload.height(), payload.width());
        sign_matrix sign(payload.height(), payload.width());
        for (std::size_t i = 0; i < payload.size(); ++i)
        {
            const int g = payload[i];
            const int d = dsf[i];
            if (g >= d)
            {
                err[i] = static_cast<std::uint8_t>(g - d);
                sign[i] = 0;
            }
            else
            {
                err[i] = static_cast<std::uint8_t>(d - g);
                sign[i] = 1;
            }
        }
        if (counters)
        {
            counters->comparisons += static_cast<std::uint64_t>(payload.size());
            counters->subtractions += static_cast<std::uint64_t>(payload.size());
        }
        return {std::move(err), std::move(sign)};
    }

    inline decomposition_set decompose(const gray_image& payload, const mapping_params& params,
                                       op_counters* counters = nullptr)
    {
        frequency_matrix freq = count_frequencies(payload, counters);
        dsf_matrix dsf = downscale(freq, params, counters);
        auto [err, sign] = error_and_sign(payload, dsf, counters);
        return decomposition_set{std::move(dsf), std::move(err), std::move(sign), params};
    }

    /// r = d + e where s = 0, r = d - e where s = 1. A result outside
    /// [0,255] means the carriers were tampered with or mismatched.
    /// Recovery needs only the three matrices, never eta.
    inline gray_image reconstruct(const dsf_matrix& dsf, const error_matrix& err,
                                  const sign_matrix& sign, op_counters* counters = nullptr)
    {
        require_same_size(dsf, err, "reconstruct");
        require_same_size(dsf, sign, "reconstruct");

        gray_image recovered(dsf.height(), dsf.width());
        for (std::size_t i = 0; i < recovered.size(); ++i)
        {
            const int d = dsf[i];
            const int e = err[i];
            const int r = sign[i] == 0 ? d + e : d - e;
            if (r < 0 || r > 255)
                throw corruption_error("reconstruct: value " + std::to_string(r)
                                       + " out of range at cell "
                                       + std::to_string(i / recovered.width()) + ","
                                       + std::to_string(i % recovered.width()));
            recovered[i] = static_cast<std::uint8_t>(r);
        }
        if (counters)
        {
            counters->comparisons += static_cast<std::uint64_t>(recovered.size());
            counters->subtractions += static_cast<std::uint64_t>(recovered.size());
        }
        return recovered;
    }

    inline gray_image reconstruct(const decomposition_set& set, op_counters* counters = nullptr)
    {
        return reconstruct(set.dsf, set.err, set.sign, counters);
    }
} // namespace stego

#endif // STEGO_DECOMPOSE_HPP_INCLUDED
