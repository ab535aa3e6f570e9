#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace tagacl {

using Bytes = std::vector<std::uint8_t>;

inline Bytes operator+(Bytes a, const Bytes& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void append(Bytes& out, const Bytes& b) { out.insert(out.end(), b.begin(), b.end()); }

inline Bytes xor_bytes(const Bytes& a, const Bytes& b) {
    if (a.size() != b.size()) throw std::invalid_argument("xor_bytes: length mismatch");
    Bytes r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
    return r;
}

inline void put_u16(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_u32(Bytes& out, std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

inline void put_u64(Bytes& out, std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

// Cursor over a byte buffer; every read checks the remaining length.
class ByteReader {
public:
    explicit ByteReader(const Bytes& b) : buf_(b) {}

    std::size_t remaining() const { return buf_.size() - pos_; }
    bool done() const { return pos_ == buf_.size(); }

    std::uint8_t u8() { return take(1)[0]; }

    std::uint16_t u16() {
        Bytes b = take(2);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }

    std::uint32_t u32() {
        Bytes b = take(4);
        std::uint32_t v = 0;
        for (auto x : b) v = (v << 8) | x;
        return v;
    }

    std::uint64_t u64() {
        Bytes b = take(8);
        std::uint64_t v = 0;
        for (auto x : b) v = (v << 8) | x;
        return v;
    }

    Bytes take(std::size_t n) {
        if (remaining() < n) throw std::out_of_range("ByteReader: short buffer");
        Bytes r(buf_.begin() + static_cast<std::ptrdiff_t>(pos_),
                buf_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
        pos_ += n;
        return r;
    }

private:
    const Bytes& buf_;
    std::size_t pos_ = 0;
};

inline std::string to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (auto x : b) {
        s.push_back(digits[x >> 4]);
        s.push_back(digits[x & 0xf]);
    }
    return s;
}

inline Bytes from_hex(const std::string& s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("from_hex: bad digit");
    };
    if (s.size() % 2) throw std::invalid_argument("from_hex: odd length");
    Bytes b(s.size() / 2);
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = static_cast<std::uint8_t>((nib(s[2 * i]) << 4) | nib(s[2 * i + 1]));
    return b;
}

// Not constant-time; this is a simulator, not a hardened implementation.
inline bool bytes_equal(const Bytes& a, const Bytes& b) { return a == b; }

} // namespace tagacl
