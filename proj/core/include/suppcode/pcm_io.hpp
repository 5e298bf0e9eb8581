#ifndef SUPPCODE_PCM_IO_HPP
#define SUPPCODE_PCM_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "suppcode/matrix.hpp"

namespace suppcode {

/// Text format for parity-check matrices, UTF-8 with LF line endings:
///
///   q m n      (prime field)
///   p e m n    (prime-power field; elements are base-p digit codes)
///
/// followed by m lines of n whitespace-separated element codes in 0..q-1.
/// write/read/write is the identity.

std::string write_pcm(const Matrix& m);
Matrix read_pcm(std::string_view text);

Matrix read_pcm_file(const std::string& path);
void write_pcm_file(const Matrix& m, const std::string& path);

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace suppcode

#endif
