#ifndef STEGO_PGM_HPP_INCLUDED
#define STEGO_PGM_HPP_INCLUDED

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include <stego/matrix.hpp>

namespace stego
{
    class pgm_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    namespace detail
    {
        // Skips whitespace and '#' comment lines between header tokens.
        inline unsigned long read_pgm_token(std::istream& in, const char* what)
        {
            int c = in.peek();
            while (c == '#' || (c != std::char_traits<char>::eof() && std::isspace(c)))
            {
                if (c == '#')
                    in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
                else
                    in.get();
                c = in.peek();
            }
            unsigned long value = 0;
            if (!(in >> value))
                throw pgm_error(std::string("pgm: malformed header, expected ") + what);
            return value;
        }
    } // namespace detail

    /// Binary PGM (P5, maxval 255): header then raw bytes row-major.
    inline void write_pgm(std::ostream& out, const gray_image& img)
    {
        out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
        out.write(reinterpret_cast<const char*>(img.cells().data()),
                  static_cast<std::streamsize>(img.size()));
        if (!out)
            throw pgm_error("pgm: write failed");
    }

    inline void write_pgm(const std::filesystem::path& path, const gray_image& img)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw pgm_error("pgm: cannot open for writing: " + path.string());
        write_pgm(out, img);
    }

    inline gray_image read_pgm(std::istream& in)
    {
        char magic[2] = {0, 0};
        in.read(magic, 2);
        if (!in || magic[0] != 'P' || magic[1] != '5')
            throw pgm_error("pgm: not a binary PGM (P5) stream");

        const unsigned long width = detail::read_pgm_token(in, "width");
        const unsigned long height = detail::read_pgm_token(in, "height");
        const unsigned long maxval = detail::read_pgm_token(in, "maxval");
        if (width == 0 || height == 0)
            throw pgm_error("pgm: zero dimension");
        if (maxval != 255)
            throw pgm_error("pgm: only maxval 255 supported, got " + std::to_string(maxval));
        in.get(); // single whitespace byte before the raster

        gray_image img(height, width);
        in.read(reinterpret_cast<char*>(img.cells().data()),
                static_cast<std::streamsize>(img.size()));
        if (static_cast<std::size_t>(in.gcount()) != img.size())
            throw pgm_error("pgm: truncated raster");
        return img;
    }

    inline gray_image read_pgm(const std::filesystem::path& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw pgm_error("pgm: cannot open: " + path.string());
        return read_pgm(in);
    }
} // namespace stego

#endif // STEGO_PGM_HPP_INCLUDED
