// Command line front end: decompose/reconstruct, share/recover across
// seventeen carriers, distortion metrics and the instrumented benchmark.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <png.h>

#include <stego/stego.hpp>

namespace fs = std::filesystem;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_usage = 1;
    constexpr int exit_data = 2;
    constexpr int exit_corrupt = 3;

    // 8-bit grayscale PNG input; everything else must be PGM.
    stego::gray_image read_png_gray(const fs::path& path)
    {
        std::FILE* fp = std::fopen(path.string().c_str(), "rb");
        if (!fp)
            throw stego::pgm_error("png: cannot open: " + path.string());

        png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        png_infop info = png ? png_create_info_struct(png) : nullptr;
        if (!png || !info)
        {
            if (png)
                png_destroy_read_struct(&png, &info, nullptr);
            std::fclose(fp);
            throw stego::pgm_error("png: libpng init failed");
        }
        if (setjmp(png_jmpbuf(png)))
        {
            png_destroy_read_struct(&png, &info, nullptr);
            std::fclose(fp);
            throw stego::pgm_error("png: decode failed: " + path.string());
        }

        png_init_io(png, fp);
        png_read_info(png, info);
        png_set_strip_16(png);
        png_set_strip_alpha(png);
        if (png_get_color_type(png, info) == PNG_COLOR_TYPE_PALETTE)
            png_set_palette_to_rgb(png);
        if (png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY
            && png_get_bit_depth(png, info) < 8)
            png_set_expand_gray_1_2_4_to_8(png);
        if (png_get_color_type(png, info) & PNG_COLOR_MASK_COLOR)
            png_set_rgb_to_gray_fixed(png, 1, -1, -1);
        png_read_update_info(png, info);

        const std::size_t width = png_get_image_width(png, info);
        const std::size_t height = png_get_image_height(png, info);
        stego::gray_image img(height, width);
        std::vector<png_bytep> rows(height);
        for (std::size_t r = 0; r < height; ++r)
            rows[r] = img.cells().data() + r * width;
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        return img;
    }

    stego::gray_image read_image(const fs::path& path)
    {
        if (path.extension() == ".png")
            return read_png_gray(path);
        return stego::read_pgm(path);
    }

    void print_histogram(const char* key, const std::array<std::uint64_t, 256>& bins)
    {
        std::cout << key << ":";
        for (std::uint64_t count : bins)
            std::cout << " " << count;
        std::cout << "\n";
    }

    int run_decompose(const std::string& payload_path, unsigned eta, const std::string& out_dir)
    {
        const stego::gray_image payload = read_image(payload_path);
        const stego::mapping_params params(eta);
        const stego::decomposition_set set = stego::decompose_to_files(payload, params);

        fs::create_directories(out_dir);
        stego::write_pgm(fs::path(out_dir) / "dsf.pgm", set.dsf);
        stego::write_pgm(fs::path(out_dir) / "error.pgm", set.err);
        stego::write_pgm(fs::path(out_dir) / "sign.pgm", set.sign);

        std::ofstream rec(fs::path(out_dir) / "params.txt", std::ios::binary);
        rec << "eta " << params.eta() << "\n"
            << "mu " << params.mu() << "\n"
            << "width " << payload.width() << "\n"
            << "height " << payload.height() << "\n";
        if (!rec)
            throw stego::pgm_error("decompose: cannot write params.txt");
        return exit_ok;
    }

    int run_reconstruct(const std::string& dsf_path, const std::string& err_path,
                        const std::string& sign_path, const std::string& out_path)
    {
        const stego::gray_image recovered =
            stego::reconstruct(read_image(dsf_path), read_image(err_path), read_image(sign_path));
        stego::write_pgm(out_path, recovered);
        return exit_ok;
    }

    int run_share(const std::string& payload_path, const std::vector<std::string>& cover_paths,
                  unsigned eta, const std::string& out_dir)
    {
        const stego::gray_image payload = read_image(payload_path);
        std::vector<stego::gray_image> covers;
        covers.reserve(cover_paths.size());
        for (const std::string& p : cover_paths)
            covers.push_back(read_image(p));

        bool duplicate_found = false;
        for (std::size_t i = 0; i < covers.size() && !duplicate_found; ++i)
            for (std::size_t j = i + 1; j < covers.size() && !duplicate_found; ++j)
                if (covers[i] == covers[j])
                {
                    std::cerr << "warning: covers " << i << " and " << j
                              << " are identical; reusing a cover weakens concealment\n";
                    duplicate_found = true;
                }

        stego::share_result result = stego::share(payload, covers, stego::mapping_params(eta));

        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < result.stegos.size(); ++i)
        {
            char name[32];
            std::snprintf(name, sizeof name, "stego_%02zu.pgm", i);
            stego::write_pgm(fs::path(out_dir) / name, result.stegos[i]);
            result.manifest.entries[i].stego_id = name;
        }
        stego::write_manifest(fs::path(out_dir) / "manifest.txt", result.manifest);
        return exit_ok;
    }

    int run_recover(const std::string& manifest_path, const std::string& out_path)
    {
        const stego::carrier_manifest manifest = stego::read_manifest(manifest_path);
        const fs::path base = fs::path(manifest_path).parent_path();

        std::vector<stego::gray_image> stegos;
        stegos.reserve(manifest.entries.size());
        for (const stego::manifest_entry& entry : manifest.entries)
        {
            const fs::path stego_path = base / entry.stego_id;
            if (!fs::exists(stego_path))
                throw stego::pgm_error("recover: missing stego file: " + entry.stego_id);
            stegos.push_back(read_image(stego_path));
        }

        stego::write_pgm(out_path, stego::recover(stegos, manifest));
        return exit_ok;
    }

    int run_metrics(const std::string& a_path, const std::string& b_path)
    {
        const stego::gray_image a = read_image(a_path);
        const stego::gray_image b = read_image(b_path);
        const stego::metric_report report = stego::compute_metrics(a, b);

        std::cout << "mse: " << report.mse << "\n";
        if (std::isinf(report.psnr_db))
            std::cout << "psnr_db: inf\n";
        else
            std::cout << "psnr_db: " << report.psnr_db << "\n";
        if (report.correlation)
            std::cout << "correlation: " << *report.correlation << "\n"
                      << "correlation_strength: "
                      << (stego::is_weak_correlation(*report.correlation) ? "weak" : "strong")
                      << "\n";
        else
            std::cout << "correlation: undefined\n";
        print_histogram("histogram_a", stego::histogram(a));
        print_histogram("histogram_b", stego::histogram(b));
        return exit_ok;
    }

    int run_bench(const std::vector<std::size_t>& sizes, unsigned trials, unsigned eta)
    {
        using clock = std::chrono::steady_clock;
        const stego::mapping_params params(eta);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pixel(0, 255);

        bool all_within_bound = true;
        for (std::size_t n : sizes)
        {
            stego::gray_image payload(n, n);
            for (auto& g : payload.cells())
                g = static_cast<std::uint8_t>(pixel(rng));

            double decompose_seconds = 0.0;
            double recover_seconds = 0.0;
            stego::op_counters decompose_counters;
            stego::op_counters recover_counters;
            for (unsigned t = 0; t < trials; ++t)
            {
                decompose_counters.reset();
                recover_counters.reset();

                const auto t0 = clock::now();
                const stego::decomposition_set set =
                    stego::decompose(payload, params, &decompose_counters);
                const auto t1 = clock::now();
                const stego::gray_image recovered = stego::reconstruct(set, &recover_counters);
                const auto t2 = clock::now();
                if (recovered != payload)
                    throw stego::corruption_error("bench: roundtrip mismatch");

                decompose_seconds += std::chrono::duration<double>(t1 - t0).count();
                recover_seconds += std::chrono::duration<double>(t2 - t1).count();
            }

            const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
            const std::uint64_t bound = (256 + params.mu() + 2) * cells;
            const bool within = decompose_counters.total() <= bound
                                && recover_counters.total() <= 2 * cells;
            all_within_bound = all_within_bound && within;

            std::cout << "size: " << n << "x" << n << "\n"
                      << "decompose_mean_s: " << decompose_seconds / trials << "\n"
                      << "recover_mean_s: " << recover_seconds / trials << "\n"
                      << "decompose_comparisons: " << decompose_counters.comparisons << "\n"
                      << "decompose_division_steps: " << decompose_counters.division_steps << "\n"
                      << "decompose_subtractions: " << decompose_counters.subtractions << "\n"
                      << "decompose_total: " << decompose_counters.total() << "\n"
                      << "decompose_bound: " << bound << "\n"
                      << "recover_total: " << recover_counters.total() << "\n"
                      << "recover_bound: " << 2 * cells << "\n"
                      << "within_bound: " << (within ? "yes" : "no") << "\n";
        }
        return all_within_bound ? exit_ok : exit_data;
    }
} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grayscale secret image sharing via payload decomposition "
                 "and bit-plane XOR steganography"};
    app.require_subcommand(1);

    std::string payload_path, out_path, manifest_path, a_path, b_path;
    std::string dsf_path, err_path, sign_path;
    std::vector<std::string> cover_paths;
    std::vector<std::size_t> sizes{64, 128, 256};
    unsigned eta = 8;
    unsigned trials = 3;

    auto* dec = app.add_subcommand("decompose", "Split a payload into DSF, error and sign images");
    dec->add_option("--payload", payload_path, "Payload image (PGM or 8-bit grayscale PNG)")
        ->required();
    dec->add_option("--eta", eta, "Mapping exponent, mu = 2^eta")->check(CLI::Range(1, 8));
    dec->add_option("--out", out_path, "Output directory")->required();

    auto* rec = app.add_subcommand("reconstruct", "Rebuild a payload from its three matrices");
    rec->add_option("--dsf", dsf_path, "DSF matrix image")->required();
    rec->add_option("--error", err_path, "Error matrix image")->required();
    rec->add_option("--sign", sign_path, "Sign matrix image")->required();
    rec->add_option("--out", out_path, "Recovered payload path (PGM)")->required();

    auto* sh = app.add_subcommand("share", "Embed a payload into seventeen cover images");
    sh->add_option("--payload", payload_path, "Payload image")->required();
    sh->add_option("--covers", cover_paths, "Seventeen cover images")
        ->required()
        ->expected(static_cast<int>(stego::carrier_count));
    sh->add_option("--eta", eta, "Mapping exponent, mu = 2^eta")->check(CLI::Range(1, 8));
    sh->add_option("--out", out_path, "Output directory for stegos and manifest")->required();

    auto* rc = app.add_subcommand("recover", "Recover a payload from stego images");
    rc->add_option("--manifest", manifest_path, "Manifest file written by share")->required();
    rc->add_option("--out", out_path, "Recovered payload path (PGM)")->required();

    auto* met = app.add_subcommand("metrics", "MSE, PSNR, correlation and histograms");
    met->add_option("--a", a_path, "First image")->required();
    met->add_option("--b", b_path, "Second image")->required();

    auto* bench = app.add_subcommand("bench", "Instrumented complexity and timing benchmark");
    bench->add_option("--sizes", sizes, "Square payload side lengths")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--trials", trials, "Trials per size")->check(CLI::PositiveNumber);
    bench->add_option("--eta", eta, "Mapping exponent, mu = 2^eta")->check(CLI::Range(1, 8));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (dec->parsed())
            return run_decompose(payload_path, eta, out_path);
        if (rec->parsed())
            return run_reconstruct(dsf_path, err_path, sign_path, out_path);
        if (sh->parsed())
            return run_share(payload_path, cover_paths, eta, out_path);
        if (rc->parsed())
            return run_recover(manifest_path, out_path);
        if (met->parsed())
            return run_metrics(a_path, b_path);
        if (bench->parsed())
            return run_bench(sizes, trials, eta);
    }
    catch (const stego::corruption_error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_corrupt;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}
