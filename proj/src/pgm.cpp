#include "sketchmatch/pgm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include "sketchmatch/error.hpp"

namespace sketchmatch {
namespace {

struct Cursor {
    std::span<const std::uint8_t> bytes;
    size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    int peek() const { return eof() ? -1 : bytes[pos]; }
    int get() { return eof() ? -1 : bytes[pos++]; }
};

// PGM header whitespace: blanks plus '#' comments running to end of line.
void skip_space_and_comments(Cursor& c) {
    while (!c.eof()) {
        int ch = c.peek();
        if (std::isspace(ch)) {
            c.get();
        } else if (ch == '#') {
            while (!c.eof() && c.get() != '\n') {
            }
        } else {
            break;
        }
    }
}

long parse_header_int(Cursor& c, const char* what) {
    skip_space_and_comments(c);
    if (c.eof() || !std::isdigit(c.peek()))
        throw DataError(std::string("PGM header: expected ") + what);
    long value = 0;
    while (!c.eof() && std::isdigit(c.peek())) {
        value = value * 10 + (c.get() - '0');
        if (value > 1'000'000'000)
            throw DataError(std::string("PGM header: ") + what + " out of range");
    }
    return value;
}

} // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    Cursor c{bytes};
    if (c.get() != 'P' || c.get() != '5')
        throw DataError("PGM: unsupported magic number (binary P5 required)");
    const long width = parse_header_int(c, "width");
    const long height = parse_header_int(c, "height");
    if (width < 1 || height < 1)
        throw DataError("PGM: non-positive dimensions");
    const long maxval = parse_header_int(c, "maxval");
    if (maxval < 1)
        throw DataError("PGM: maxval must be positive");
    if (maxval > 255)
        throw DataError("PGM: maxval > 255 unsupported");
    // exactly one whitespace byte separates header and payload
    if (c.eof() || !std::isspace(c.peek()))
        throw DataError("PGM header: missing separator before pixel data");
    c.get();

    const size_t count = static_cast<size_t>(width) * static_cast<size_t>(height);
    if (bytes.size() - c.pos < count)
        throw DataError("PGM: truncated pixel payload");
    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    for (size_t i = 0; i < count; ++i)
        img.pixels[i] = static_cast<double>(bytes[c.pos + i]);
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    img.check_valid();
    std::string header = "P5\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + img.pixel_count());
    for (double v : img.pixels) {
        double q = std::round(v); // half away from zero
        if (q < 0.0) q = 0.0;
        if (q > 255.0) q = 255.0;
        out.push_back(static_cast<std::uint8_t>(q));
    }
    return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open file: " + path.string());
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    try {
        return read_pgm(bytes);
    } catch (const DataError& e) {
        throw DataError(std::string(e.what()) + " [" + path.string() + "]");
    }
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    const auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw DataError("write failed: " + path.string());
}

} // namespace sketchmatch
