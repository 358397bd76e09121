#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <stego/pipeline.hpp>

using namespace stego;

namespace
{
    gray_image random_image(std::mt19937& rng, std::size_t height, std::size_t width)
    {
        std::uniform_int_distribution<int> pixel(0, 255);
        gray_image img(height, width);
        for (auto& g : img.cells())
            g = static_cast<std::uint8_t>(pixel(rng));
        return img;
    }

    std::vector<gray_image> random_covers(std::mt19937& rng, std::size_t height,
                                          std::size_t width)
    {
        std::vector<gray_image> covers;
        covers.reserve(carrier_count);
        for (std::size_t i = 0; i < carrier_count; ++i)
            covers.push_back(random_image(rng, height, width));
        return covers;
    }
} // namespace

TEST_CASE("canonical role order: 8 DSF, 8 ERROR, 1 SIGN")
{
    const auto roles = canonical_roles();
    REQUIRE(roles.size() == 17);
    for (unsigned j = 0; j < 8; ++j)
    {
        CHECK(roles[j] == carrier_role{matrix_kind::dsf, j});
        CHECK(roles[8 + j] == carrier_role{matrix_kind::error, j});
    }
    CHECK(roles[16] == carrier_role{matrix_kind::sign, 0});
}

TEST_CASE("share: wrong cover count is an arity error")
{
    std::mt19937 rng(2);
    const gray_image payload = random_image(rng, 4, 4);
    auto covers = random_covers(rng, 4, 4);
    covers.pop_back();
    CHECK_THROWS_AS(share(payload, covers, mapping_params(8)), std::invalid_argument);
}

TEST_CASE("share: dimension mismatch names the offending cover")
{
    std::mt19937 rng(3);
    const gray_image payload = random_image(rng, 4, 4);
    auto covers = random_covers(rng, 4, 4);
    covers[5] = random_image(rng, 4, 5);
    CHECK_THROWS_WITH(share(payload, covers, mapping_params(8)),
                      Catch::Matchers::ContainsSubstring("cover 5"));
}

TEST_CASE("share/recover roundtrip is bit-exact")
{
    std::mt19937 rng(5);
    for (unsigned eta : {1u, 4u, 8u})
    {
        const gray_image payload = random_image(rng, 12, 10);
        const auto covers = random_covers(rng, 12, 10);
        const share_result result = share(payload, covers, mapping_params(eta));
        CHECK(recover(result.stegos, result.manifest) == payload);
    }
}

TEST_CASE("stego/cover delta: at most 1 intensity step, only in plane 0")
{
    std::mt19937 rng(7);
    const gray_image payload = random_image(rng, 8, 8);
    const auto covers = random_covers(rng, 8, 8);
    const share_result result = share(payload, covers, mapping_params(8));
    for (std::size_t i = 0; i < carrier_count; ++i)
        for (std::size_t p = 0; p < payload.size(); ++p)
        {
            const int delta = int(result.stegos[i][p]) - int(covers[i][p]);
            CHECK(std::abs(delta) <= 1);
            CHECK((result.stegos[i][p] & 0xFE) == (covers[i][p] & 0xFE));
        }
}

TEST_CASE("cover independence: recovery ignores cover content")
{
    std::mt19937 rng(11);
    const gray_image payload = random_image(rng, 9, 9);
    const share_result a = share(payload, random_covers(rng, 9, 9), mapping_params(8));
    const share_result b = share(payload, random_covers(rng, 9, 9), mapping_params(8));
    CHECK(recover(a.stegos, a.manifest) == payload);
    CHECK(recover(b.stegos, b.manifest) == payload);
}

TEST_CASE("duplicate covers still recover exactly")
{
    std::mt19937 rng(13);
    const gray_image payload = random_image(rng, 6, 6);
    const gray_image one_cover = random_image(rng, 6, 6);
    std::vector<gray_image> covers(carrier_count, one_cover);
    const share_result result = share(payload, covers, mapping_params(8));
    CHECK(recover(result.stegos, result.manifest) == payload);
}

TEST_CASE("single flipped stego bit corrupts recovery")
{
    std::mt19937 rng(17);
    const gray_image payload = random_image(rng, 16, 16);
    share_result result = share(payload, random_covers(rng, 16, 16), mapping_params(8));

    // Flip the LSB of one pixel of the DSF plane-7 carrier: d changes
    // by 128 at that cell, so the result differs or leaves [0,255].
    result.stegos[7][40] ^= 1;
    bool corrupted = false;
    try
    {
        corrupted = recover(result.stegos, result.manifest) != payload;
    }
    catch (const corruption_error&)
    {
        corrupted = true; // flip pushed the reconstructed value out of range
    }
    CHECK(corrupted);
}

TEST_CASE("permuted DSF roles in the manifest break recovery")
{
    std::mt19937 rng(19);
    const gray_image payload = random_image(rng, 16, 16);
    share_result result = share(payload, random_covers(rng, 16, 16), mapping_params(8));

    std::swap(result.manifest.entries[0].role, result.manifest.entries[7].role);
    bool corrupted = false;
    try
    {
        corrupted = recover(result.stegos, result.manifest) != payload;
    }
    catch (const corruption_error&)
    {
        corrupted = true; // permutation produced out-of-range values
    }
    CHECK(corrupted);
}

TEST_CASE("recover: fewer than 17 stegos is an error")
{
    std::mt19937 rng(23);
    const gray_image payload = random_image(rng, 4, 4);
    share_result result = share(payload, random_covers(rng, 4, 4), mapping_params(8));
    result.stegos.pop_back();
    CHECK_THROWS_AS(recover(result.stegos, result.manifest), std::invalid_argument);
}

TEST_CASE("recover: manifest with duplicate role rejected")
{
    std::mt19937 rng(29);
    const gray_image payload = random_image(rng, 4, 4);
    share_result result = share(payload, random_covers(rng, 4, 4), mapping_params(8));
    result.manifest.entries[1].role = result.manifest.entries[0].role;
    CHECK_THROWS_AS(recover(result.stegos, result.manifest), std::invalid_argument);
}

TEST_CASE("decompose_to_files: constant payload, binary sign, bounded DSF")
{
    const gray_image constant(5, 5, 77);
    const decomposition_set flat = decompose_to_files(constant, mapping_params(8));
    for (std::size_t i = 1; i < flat.dsf.size(); ++i)
    {
        CHECK(flat.dsf[i] == flat.dsf[0]);
        CHECK(flat.err[i] == flat.err[0]);
        CHECK(flat.sign[i] == flat.sign[0]);
    }

    std::mt19937 rng(31);
    const gray_image payload = random_image(rng, 10, 10);
    const decomposition_set set = decompose_to_files(payload, mapping_params(8));
    for (std::size_t i = 0; i < set.sign.size(); ++i)
    {
        CHECK(set.sign[i] <= 1);
        CHECK(set.dsf[i] <= 255);
    }
}
