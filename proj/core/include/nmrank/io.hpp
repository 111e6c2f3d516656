// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nmrank/error.hpp"

namespace nmrank {

// All binary artifact files use explicit little-endian integer widths.
// Doubles are stored as the little-endian bytes of their IEEE-754 bit pattern.

/// Appends little-endian encoded values to an in-memory byte buffer.
class BinaryWriter {
public:
    void put_u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void put_u32(std::uint32_t v) { put_le(v); }
    void put_u64(std::uint64_t v) { put_le(v); }
    void put_f64(double v) { put_le(std::bit_cast<std::uint64_t>(v)); }

    void put_string(std::string_view s) {
        put_u32(static_cast<std::uint32_t>(s.size()));
        buf_.append(s.data(), s.size());
    }

    void put_bytes(const void* data, std::size_t n) {
        buf_.append(static_cast<const char*>(data), n);
    }

    const std::string& bytes() const { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    template <typename T>
    void put_le(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
        }
    }

    std::string buf_;
};

/// Reads little-endian encoded values from a byte buffer; throws DataError on truncation.
class BinaryReader {
public:
    explicit BinaryReader(std::string_view data) : data_(data) {}

    std::uint8_t get_u8() { return static_cast<std::uint8_t>(raw(1)[0]); }
    std::uint32_t get_u32() { return get_le<std::uint32_t>(); }
    std::uint64_t get_u64() { return get_le<std::uint64_t>(); }
    double get_f64() { return std::bit_cast<double>(get_le<std::uint64_t>()); }

    std::string get_string() {
        const std::uint32_t n = get_u32();
        const char* p = raw(n);
        return std::string(p, n);
    }

    bool exhausted() const { return pos_ == data_.size(); }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    const char* raw(std::size_t n) {
        require_data(pos_ + n <= data_.size(), "binary input truncated");
        const char* p = data_.data() + pos_;
        pos_ += n;
        return p;
    }

    template <typename T>
    T get_le() {
        const char* p = raw(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            v |= static_cast<T>(static_cast<std::uint8_t>(p[i])) << (8 * i);
        }
        return v;
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

/// FNV-1a over a byte range; used as the content digest tying derived
/// artifacts (indices) to the collection they were built from.
std::uint64_t fnv1a64(std::string_view bytes);

std::string read_file_bytes(const std::string& path);
bool file_exists(const std::string& path);

/// Writes `bytes` to `path` atomically: a temp file in the same directory is
/// renamed over the target, so a failed command never leaves partial output.
void atomic_write_file(const std::string& path, std::string_view bytes);

} // namespace nmrank
