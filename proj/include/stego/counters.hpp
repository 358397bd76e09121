#ifndef STEGO_COUNTERS_HPP_INCLUDED
#define STEGO_COUNTERS_HPP_INCLUDED

#include <cstdint>

namespace stego
{
    /// Deterministic operation counters for the decomposition and
    /// recovery kernels. Monotone within a run; reset per run.
    struct op_counters
    {
        std::uint64_t comparisons = 0;
        std::uint64_t division_steps = 0;
        std::uint64_t subtractions = 0;

        std::uint64_t total() const noexcept
        {
            return comparisons + division_steps + subtractions;
        }

        void reset() noexcept { *this = op_counters{}; }
    };
} // namespace stego

#endif // STEGO_COUNTERS_HPP_INCLUDED
