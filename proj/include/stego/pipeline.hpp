#ifndef STEGO_PIPELINE_HPP_INCLUDED
#define STEGO_PIPELINE_HPP_INCLUDED

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <stego/bitplane.hpp>
#include <stego/decompose.hpp>
#include <stego/matrix.hpp>

namespace stego
{
    /// Seventeen carriers are needed: eight DSF planes, eight error
    /// planes, one sign plane.
    inline constexpr std::size_t carrier_count = 17;

    enum class matrix_kind : std::uint8_t
    {
        dsf,
        error,
        sign
    };

    inline const char* to_string(matrix_kind kind)
    {
        switch (kind)
        {
        case matrix_kind::dsf:
            return "DSF";
        case matrix_kind::error:
            return "ERROR";
        case matrix_kind::sign:
            return "SIGN";
        }
        throw std::invalid_argument("to_string: bad matrix_kind");
    }

    /// Which matrix and which of its bit planes one carrier holds.
    /// plane_index is 0-7 for DSF/ERROR and fixed 0 for SIGN.
    struct carrier_role
    {
        matrix_kind kind = matrix_kind::dsf;
        unsigned plane_index = 0;

        friend bool operator==(const carrier_role&, const carrier_role&) = default;
    };

    /// Canonical carrier order: DSF planes 0..7 (LSB first), then
    /// ERROR planes 0..7, then SIGN.
    inline std::array<carrier_role, carrier_count> canonical_roles()
    {
        std::array<carrier_role, carrier_count> roles;
        for (unsigned j = 0; j < 8; ++j)
            roles[j] = {matrix_kind::dsf, j};
        for (unsigned j = 0; j < 8; ++j)
            roles[8 + j] = {matrix_kind::error, j};
        roles[16] = {matrix_kind::sign, 0};
        return roles;
    }

    struct manifest_entry
    {
        carrier_role role;
        std::string stego_id;

        friend bool operator==(const manifest_entry&, const manifest_entry&) = default;
    };

    /// The recovery recipe: payload dimensions, eta used at share time,
    /// and the role of each of the seventeen stego images.
    struct carrier_manifest
    {
        static constexpr int current_version = 1;

        int format_version = current_version;
        std::size_t payload_width = 0;
        std::size_t payload_height = 0;
        unsigned eta = 0;
        std::vector<manifest_entry> entries;

        friend bool operator==(const carrier_manifest&, const carrier_manifest&) = default;
    };

    inline void validate_manifest(const carrier_manifest& manifest)
    {
        if (manifest.entries.size() != carrier_count)
            throw std::invalid_argument("manifest: expected " + std::to_string(carrier_count)
                                        + " entries, got "
                                        + std::to_string(manifest.entries.size()));
        const auto roles = canonical_roles();
        for (const carrier_role& role : roles)
        {
            std::size_t hits = 0;
            for (const manifest_entry& entry : manifest.entries)
                if (entry.role == role)
                    ++hits;
            if (hits != 1)
                throw std::invalid_argument(std::string("manifest: role ") + to_string(role.kind)
                                            + " plane " + std::to_string(role.plane_index)
                                            + " appears " + std::to_string(hits) + " times");
        }
        if (manifest.payload_width == 0 || manifest.payload_height == 0)
            throw std::invalid_argument("manifest: zero payload dimension");
    }

    namespace detail
    {
        inline const bit_plane& plane_for_role(const carrier_role& role,
                                               const std::array<bit_plane, 8>& dsf_planes,
                                               const std::array<bit_plane, 8>& err_planes,
                                               const bit_plane& sign_plane)
        {
            switch (role.kind)
            {
            case matrix_kind::dsf:
                return dsf_planes[role.plane_index];
            case matrix_kind::error:
                return err_planes[role.plane_index];
            case matrix_kind::sign:
                return sign_plane;
            }
            throw std::invalid_argument("plane_for_role: bad matrix_kind");
        }
    } // namespace detail

    struct share_result
    {
        std::vector<gray_image> stegos;
        carrier_manifest manifest;
    };

    /// Decompose the payload and embed its seventeen planes into the
    /// seventeen covers in canonical role order. Every cover must match
    /// the payload's dimensions exactly.
    inline share_result share(const gray_image& payload, const std::vector<gray_image>& covers,
                              const mapping_params& params)
    {
        if (covers.size() != carrier_count)
            throw std::invalid_argument("share: expected " + std::to_string(carrier_count)
                                        + " covers, got " + std::to_string(covers.size()));
        for (std::size_t i = 0; i < covers.size(); ++i)
            if (!covers[i].same_size(payload))
                throw std::invalid_argument(
                    "share: cover " + std::to_string(i) + " is "
                    + std::to_string(covers[i].height()) + "x" + std::to_string(covers[i].width())
                    + ", payload is " + std::to_string(payload.height()) + "x"
                    + std::to_string(payload.width()));

        const decomposition_set set = decompose(payload, params);
        const auto dsf_planes = split_planes(set.dsf);
        const auto err_planes = split_planes(set.err);
        // The sign matrix is binary already; it is a single plane.
        const bit_plane& sign_plane = set.sign;

        share_result result;
        result.manifest.payload_width = payload.width();
        result.manifest.payload_height = payload.height();
        result.manifest.eta = params.eta();

        const auto roles = canonical_roles();
        result.stegos.reserve(carrier_count);
        for (std::size_t i = 0; i < carrier_count; ++i)
        {
            const bit_plane& plane =
                detail::plane_for_role(roles[i], dsf_planes, err_planes, sign_plane);
            result.stegos.push_back(embed_plane(covers[i], plane));
            result.manifest.entries.push_back(
                {roles[i], "stego_" + std::to_string(i)});
        }
        return result;
    }

    /// Extract all seventeen planes per the manifest, reassemble the
    /// DSF, error and sign matrices and reconstruct the payload.
    /// Recovery never needs eta: reconstruction uses only d, e and s.
    inline gray_image recover(const std::vector<gray_image>& stegos,
                              const carrier_manifest& manifest)
    {
        validate_manifest(manifest);
        if (stegos.size() != manifest.entries.size())
            throw std::invalid_argument("recover: expected "
                                        + std::to_string(manifest.entries.size())
                                        + " stegos, got " + std::to_string(stegos.size()));

        std::array<bit_plane, 8> dsf_planes;
        std::array<bit_plane, 8> err_planes;
        bit_plane sign_plane;
        for (std::size_t i = 0; i < stegos.size(); ++i)
        {
            if (stegos[i].height() != manifest.payload_height
                || stegos[i].width() != manifest.payload_width)
                throw std::invalid_argument("recover: stego " + std::to_string(i)
                                            + " does not match manifest dimensions");
            const carrier_role& role = manifest.entries[i].role;
            bit_plane plane = extract_plane(stegos[i]);
            switch (role.kind)
            {
            case matrix_kind::dsf:
                dsf_planes[role.plane_index] = std::move(plane);
                break;
            case matrix_kind::error:
                err_planes[role.plane_index] = std::move(plane);
                break;
            case matrix_kind::sign:
                sign_plane = std::move(plane);
                break;
            }
        }

        return reconstruct(join_planes(dsf_planes), join_planes(err_planes), sign_plane);
    }

    /// Re-export of the core decomposition for matrix inspection.
    inline decomposition_set decompose_to_files(const gray_image& payload,
                                                const mapping_params& params)
    {
        return decompose(payload, params);
    }
} // namespace stego

#endif // STEGO_PIPELINE_HPP_INCLUDED
