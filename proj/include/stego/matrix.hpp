#ifndef STEGO_MATRIX_HPP_INCLUDED
#define STEGO_MATRIX_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stego
{
    /// Row-major dense matrix over a scalar cell type.
    ///
    /// Dimensions are fixed at construction; cells are value-initialized
    /// unless a fill value is given.
    template <typename T>
    class matrix
    {
    public:
        matrix() = default;

        matrix(std::size_t height, std::size_t width)
            : height_(height), width_(width), cells_(height * width)
        {
            check_dims(height, width);
        }

        matrix(std::size_t height, std::size_t width, T fill)
            : height_(height), width_(width), cells_(height * width, fill)
        {
            check_dims(height, width);
        }

        matrix(std::size_t height, std::size_t width, std::vector<T> cells)
            : height_(height), width_(width), cells_(std::move(cells))
        {
            check_dims(height, width);
            if (cells_.size() != height_ * width_)
                throw std::invalid_argument("matrix: cell count "
                                            + std::to_string(cells_.size())
                                            + " does not match " + std::to_string(height_) + "x"
                                            + std::to_string(width_));
        }

        std::size_t height() const noexcept { return height_; }
        std::size_t width() const noexcept { return width_; }
        std::size_t size() const noexcept { return cells_.size(); }
        bool empty() const noexcept { return cells_.empty(); }

        T& operator()(std::size_t row, std::size_t col)
        {
            return cells_[row * width_ + col];
        }
        const T& operator()(std::size_t row, std::size_t col) const
        {
            return cells_[row * width_ + col];
        }

        T& operator[](std::size_t i) { return cells_[i]; }
        const T& operator[](std::size_t i) const { return cells_[i]; }

        std::vector<T>& cells() noexcept { return cells_; }
        const std::vector<T>& cells() const noexcept { return cells_; }

        template <typename U>
        bool same_size(const matrix<U>& other) const noexcept
        {
            return height_ == other.height() && width_ == other.width();
        }

        friend bool operator==(const matrix& a, const matrix& b) = default;

    private:
        static void check_dims(std::size_t height, std::size_t width)
        {
            if (height == 0 || width == 0)
                throw std::invalid_argument("matrix: dimensions must be at least 1x1");
        }

        std::size_t height_ = 0;
        std::size_t width_ = 0;
        std::vector<T> cells_;
    };

    /// 8-bit grayscale image, intensities in [0,255].
    using gray_image = matrix<std::uint8_t>;

    template <typename T, typename U>
    inline void require_same_size(const matrix<T>& a, const matrix<U>& b, const char* what)
    {
        if (!a.same_size(b))
            throw std::invalid_argument(std::string(what) + ": dimension mismatch ("
                                        + std::to_string(a.height()) + "x"
                                        + std::to_string(a.width()) + " vs "
                                        + std::to_string(b.height()) + "x"
                                        + std::to_string(b.width()) + ")");
    }

    /// Thrown when extracted matrices cannot form a valid payload, e.g.
    /// a reconstructed intensity falls outside [0,255].
    class corruption_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
} // namespace stego

#endif // STEGO_MATRIX_HPP_INCLUDED
