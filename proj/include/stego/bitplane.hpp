#ifndef STEGO_BITPLANE_HPP_INCLUDED
#define STEGO_BITPLANE_HPP_INCLUDED

#include <array>
#include <cstdint>
#include <stdexcept>

#include <stego/matrix.hpp>

namespace stego
{
    /// Binary matrix holding one bit level of an 8-bit matrix.
    using bit_plane = matrix<std::uint8_t>;

    /// Plane 0 is the least significant bit, plane 7 the most.
    inline std::array<bit_plane, 8> split_planes(const matrix<std::uint8_t>& img)
    {
        std::array<bit_plane, 8> planes;
        for (unsigned j = 0; j < 8; ++j)
        {
            planes[j] = bit_plane(img.height(), img.width());
            for (std::size_t i = 0; i < img.size(); ++i)
                planes[j][i] = (img[i] >> j) & 1u;
        }
        return planes;
    }

    inline matrix<std::uint8_t> join_planes(const std::array<bit_plane, 8>& planes)
    {
        for (unsigned j = 1; j < 8; ++j)
            require_same_size(planes[0], planes[j], "join_planes");

        matrix<std::uint8_t> img(planes[0].height(), planes[0].width());
        for (std::size_t i = 0; i < img.size(); ++i)
        {
            unsigned value = 0;
            for (unsigned j = 0; j < 8; ++j)
                value |= (planes[j][i] & 1u) << j;
            img[i] = static_cast<std::uint8_t>(value);
        }
        return img;
    }

    /// Stego LSB = cover second-LSB XOR plane bit; bits 1-7 of every
    /// stego pixel equal the cover's.
    inline gray_image embed_plane(const gray_image& cover, const bit_plane& payload_plane)
    {
        require_same_size(cover, payload_plane, "embed_plane");

        gray_image stego(cover.height(), cover.width());
        for (std::size_t i = 0; i < cover.size(); ++i)
        {
            const std::uint8_t second_lsb = (cover[i] >> 1) & 1u;
            const std::uint8_t new_lsb = second_lsb ^ (payload_plane[i] & 1u);
            stego[i] = static_cast<std::uint8_t>((cover[i] & 0xFEu) | new_lsb);
        }
        return stego;
    }

    /// Inverse of embed_plane: bit = LSB XOR second-LSB of the stego
    /// pixel. Applied to an image that never went through embed_plane
    /// this yields garbage, which is why recovery needs the manifest to
    /// identify true stegos.
    inline bit_plane extract_plane(const gray_image& stego)
    {
        bit_plane plane(stego.height(), stego.width());
        for (std::size_t i = 0; i < stego.size(); ++i)
            plane[i] = (stego[i] & 1u) ^ ((stego[i] >> 1) & 1u);
        return plane;
    }
} // namespace stego

#endif // STEGO_BITPLANE_HPP_INCLUDED
