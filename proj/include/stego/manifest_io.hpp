#ifndef STEGO_MANIFEST_IO_HPP_INCLUDED
#define STEGO_MANIFEST_IO_HPP_INCLUDED

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <stego/pipeline.hpp>

namespace stego
{
    class manifest_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Line-oriented text format, UTF-8, LF endings:
    ///   version 1
    ///   width W
    ///   height H
    ///   eta E
    ///   ROLE plane_index filename   (x17)
    inline void write_manifest(std::ostream& out, const carrier_manifest& manifest)
    {
        validate_manifest(manifest);
        out << "version " << manifest.format_version << "\n";
        out << "width " << manifest.payload_width << "\n";
        out << "height " << manifest.payload_height << "\n";
        out << "eta " << manifest.eta << "\n";
        for (const manifest_entry& entry : manifest.entries)
            out << to_string(entry.role.kind) << " " << entry.role.plane_index << " "
                << entry.stego_id << "\n";
        if (!out)
            throw manifest_error("manifest: write failed");
    }

    inline void write_manifest(const std::filesystem::path& path, const carrier_manifest& manifest)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw manifest_error("manifest: cannot open for writing: " + path.string());
        write_manifest(out, manifest);
    }

    namespace detail
    {
        inline std::string expect_keyword_line(std::istream& in, const std::string& keyword)
        {
            std::string line;
            if (!std::getline(in, line))
                throw manifest_error("manifest: missing '" + keyword + "' line");
            std::istringstream fields(line);
            std::string key, value;
            if (!(fields >> key >> value) || key != keyword)
                throw manifest_error("manifest: expected '" + keyword + "', got '" + line + "'");
            return value;
        }

        inline matrix_kind parse_kind(const std::string& word)
        {
            if (word == "DSF")
                return matrix_kind::dsf;
            if (word == "ERROR")
                return matrix_kind::error;
            if (word == "SIGN")
                return matrix_kind::sign;
            throw manifest_error("manifest: unknown role '" + word + "'");
        }
    } // namespace detail

    inline carrier_manifest read_manifest(std::istream& in)
    {
        carrier_manifest manifest;
        try
        {
            manifest.format_version = std::stoi(detail::expect_keyword_line(in, "version"));
            manifest.payload_width = std::stoul(detail::expect_keyword_line(in, "width"));
            manifest.payload_height = std::stoul(detail::expect_keyword_line(in, "height"));
            manifest.eta = static_cast<unsigned>(
                std::stoul(detail::expect_keyword_line(in, "eta")));
        }
        catch (const std::logic_error&)
        {
            throw manifest_error("manifest: non-numeric header value");
        }
        if (manifest.format_version != carrier_manifest::current_version)
            throw manifest_error("manifest: unsupported version "
                                 + std::to_string(manifest.format_version));

        std::string line;
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            std::istringstream fields(line);
            std::string kind_word, id;
            unsigned plane_index = 0;
            if (!(fields >> kind_word >> plane_index >> id))
                throw manifest_error("manifest: malformed entry '" + line + "'");
            manifest.entries.push_back({{detail::parse_kind(kind_word), plane_index}, id});
        }
        validate_manifest(manifest);
        return manifest;
    }

    inline carrier_manifest read_manifest(const std::filesystem::path& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw manifest_error("manifest: cannot open: " + path.string());
        return read_manifest(in);
    }
} // namespace stego

#endif // STEGO_MANIFEST_IO_HPP_INCLUDED
