#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "veinseg/image.hpp"

namespace veinseg {

/// Decode a P2 (ASCII) or P5 (binary) PGM. Samples are divided by maxval so
/// the result lies in [0,1]. 16-bit P5 payloads are big-endian.
/// Throws FormatError naming the offending header field.
Image load_pgm(std::span<const std::uint8_t> bytes);

/// Encode as "P5\n<w> <h>\n<maxval>\n" + payload, or P2 with one row of
/// ASCII samples per line. Samples are round(v * maxval), ties away from zero.
/// Throws DomainError if maxval is outside [1, 65535] or a sample is outside [0,1].
std::vector<std::uint8_t> save_pgm(const Image& img, int maxval = 255, bool binary = true);

/// Decode a P3 or P6 PPM into [0,1] channel triples.
RgbImage load_ppm(std::span<const std::uint8_t> bytes);

/// Load any supported Netpbm grayscale or color file as a grayscale image;
/// color input goes through rgb_to_gray.
Image load_grayscale(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace veinseg
