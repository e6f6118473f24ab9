#ifndef CRITATLAS_SHA256_HPP
#define CRITATLAS_SHA256_HPP

#include <array>
#include <cstdint>
#include <string>

namespace critatlas {

std::array<uint8_t, 32> sha256(const void* data, size_t len);
std::string sha256_hex(const std::string& data);

}  // namespace critatlas

#endif
