#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include <stego/manifest_io.hpp>
#include <stego/pgm.hpp>
#include <stego/pipeline.hpp>

using namespace stego;

TEST_CASE("pgm: write then read is byte-identical")
{
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> pixel(0, 255);
    gray_image img(11, 17);
    for (auto& g : img.cells())
        g = static_cast<std::uint8_t>(pixel(rng));

    std::ostringstream first;
    write_pgm(first, img);
    std::istringstream in(first.str());
    const gray_image back = read_pgm(in);
    CHECK(back == img);

    std::ostringstream second;
    write_pgm(second, back);
    CHECK(second.str() == first.str());
}

TEST_CASE("pgm: header comments are skipped")
{
    const std::string data = "P5\n# a comment\n2 1\n255\n\x07\x08";
    std::istringstream in(data);
    const gray_image img = read_pgm(in);
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(img[0] == 7);
    CHECK(img[1] == 8);
}

TEST_CASE("pgm: malformed inputs rejected")
{
    auto rejects = [](const std::string& data) {
        std::istringstream in(data);
        CHECK_THROWS_AS(read_pgm(in), pgm_error);
    };
    rejects("P6\n2 2\n255\nXXXX");          // wrong magic
    rejects("P5\n2 2\n65535\n");            // unsupported maxval
    rejects("P5\n2 2\n255\nXX");            // truncated raster
    rejects("P5\nab 2\n255\n");             // non-numeric header
}

TEST_CASE("manifest: write then read roundtrips")
{
    carrier_manifest manifest;
    manifest.payload_width = 64;
    manifest.payload_height = 48;
    manifest.eta = 8;
    const auto roles = canonical_roles();
    for (std::size_t i = 0; i < roles.size(); ++i)
        manifest.entries.push_back({roles[i], "stego_" + std::to_string(i) + ".pgm"});

    std::ostringstream out;
    write_manifest(out, manifest);
    std::istringstream in(out.str());
    CHECK(read_manifest(in) == manifest);
}

TEST_CASE("manifest: serialized form is line oriented")
{
    carrier_manifest manifest;
    manifest.payload_width = 4;
    manifest.payload_height = 4;
    manifest.eta = 1;
    for (const carrier_role& role : canonical_roles())
        manifest.entries.push_back({role, "x.pgm"});

    std::ostringstream out;
    write_manifest(out, manifest);
    const std::string text = out.str();
    CHECK(text.starts_with("version 1\nwidth 4\nheight 4\neta 1\nDSF 0 x.pgm\n"));
    CHECK(text.find("SIGN 0 x.pgm\n") != std::string::npos);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("manifest: malformed inputs rejected")
{
    auto rejects = [](const std::string& data) {
        std::istringstream in(data);
        CHECK_THROWS_AS(read_manifest(in), manifest_error);
    };
    rejects("");                                           // missing header
    rejects("version 2\nwidth 4\nheight 4\neta 8\n");      // unknown version
    rejects("version 1\nwidth 4\nheight 4\neta 8\nBOGUS 0 f\n");

    auto rejects_invalid = [](const std::string& data) {
        std::istringstream in(data);
        CHECK_THROWS_AS(read_manifest(in), std::invalid_argument);
    };
    rejects_invalid("version 1\nwidth 4\nheight 4\neta 8\n"); // no entries

    // 17 entries but a duplicated role.
    std::ostringstream bad;
    bad << "version 1\nwidth 4\nheight 4\neta 8\n";
    for (int i = 0; i < 17; ++i)
        bad << "DSF 0 f" << i << "\n";
    rejects_invalid(bad.str());
}

TEST_CASE("manifest: validate_manifest enforces arity")
{
    carrier_manifest manifest;
    manifest.payload_width = 4;
    manifest.payload_height = 4;
    manifest.eta = 8;
    manifest.entries.push_back({{matrix_kind::sign, 0}, "only.pgm"});
    CHECK_THROWS_AS(validate_manifest(manifest), std::invalid_argument);
}
