#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "tagacl/bytes.hpp"
#include "tagacl/rng.hpp"

namespace tagacl {

using BigInt = boost::multiprecision::cpp_int;

// Operation counter for cost accounting. Modular exponentiation dominates
// everything else in the public-key layer, so counting it is enough to show
// which party pays for what.
inline std::uint64_t& modexp_counter() {
    thread_local std::uint64_t count = 0;
    return count;
}

inline void reset_modexp_counter() { modexp_counter() = 0; }

// Prime-order subgroup of Z_p^*: q | p-1, g generates the order-q subgroup.
// All protocol arithmetic happens here. Elements serialize as fixed-width
// big-endian byte strings so ciphertexts have a stable wire size.
class Group {
public:
    Group(BigInt p, BigInt q, BigInt g)
        : p_(std::move(p)), q_(std::move(q)), g_(std::move(g)) {
        if (p_ < 3 || q_ < 2) throw std::invalid_argument("Group: bad parameters");
        if ((p_ - 1) % q_ != 0) throw std::invalid_argument("Group: q does not divide p-1");
        element_width_ = byte_width(p_);
    }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& g() const { return g_; }
    std::size_t element_width() const { return element_width_; }

    BigInt pow(const BigInt& base, const BigInt& exp) const {
        ++modexp_counter();
        return boost::multiprecision::powm(base, exp, p_);
    }

    BigInt mul(const BigInt& a, const BigInt& b) const { return (a * b) % p_; }

    // Inverse of a subgroup element: x^(q-1), since x^q = 1.
    BigInt inverse(const BigInt& x) const {
        if (!is_member(x)) throw std::invalid_argument("Group::inverse: not a member");
        return pow(x, q_ - 1);
    }

    bool is_member(const BigInt& x) const {
        if (x <= 0 || x >= p_) return false;
        return pow(x, q_) == 1;
    }

    // Uniform nonzero exponent, i.e. in [1, q-1].
    BigInt random_exponent(Rng& rng) const { return random_below(rng, q_ - 1) + 1; }

    // Uniform exponent including zero, i.e. in [0, q-1].
    BigInt random_exponent_with_zero(Rng& rng) const { return random_below(rng, q_); }

    Bytes encode(const BigInt& x) const {
        if (x < 0 || x >= p_) throw std::invalid_argument("Group::encode: out of range");
        Bytes out(element_width_, 0);
        BigInt v = x;
        for (std::size_t i = element_width_; i-- > 0 && v != 0;) {
            out[i] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
        return out;
    }

    BigInt decode(const Bytes& b) const {
        if (b.size() != element_width_) throw std::invalid_argument("Group::decode: bad width");
        BigInt v = 0;
        for (auto byte : b) v = (v << 8) | byte;
        if (v >= p_) throw std::invalid_argument("Group::decode: out of range");
        return v;
    }

private:
    static std::size_t byte_width(const BigInt& p) {
        std::size_t bits = boost::multiprecision::msb(p) + 1;
        return (bits + 7) / 8;
    }

    // Uniform in [0, bound) for arbitrary-precision bound.
    BigInt random_below(Rng& rng, const BigInt& bound) const {
        std::size_t bits = boost::multiprecision::msb(bound) + 1;
        std::size_t words = (bits + 63) / 64;
        while (true) {
            BigInt v = 0;
            for (std::size_t i = 0; i < words; ++i) v = (v << 64) | rng.next_u64();
            v >>= (words * 64 - bits);
            if (v < bound) return v;
        }
    }

    BigInt p_, q_, g_;
    std::size_t element_width_;
};

// Tiny subgroup for exhaustive tests: p = 23, q = 11, g = 2.
inline const Group& toy_group() {
    static const Group grp(23, 11, 2);
    return grp;
}

// 1024-bit MODP group with a 160-bit prime-order subgroup. Standard
// published parameters, embedded so runs need no parameter generation.
inline const Group& desk_group() {
    static const Group grp = [] {
        const char* p_hex =
            "B10B8F96A080E01DDE92DE5EAE5D54EC52C99FBCFB06A3C69A6A9DCA52D23B61"
            "6073E28675A23D189838EF1E2EE652C013ECB4AEA906112324975C3CD49B83BF"
            "ACCBDD7D90C4BD7098488E9C219A73724EFFD6FAE5644738FAA31A4FF55BCCC0"
            "A151AF5F0DC8B4BD45BF37DF365C1A65E68CFDA76D4DA708DF1FB2BC2E4A4371";
        const char* q_hex = "F518AA8781A8DF278ABA4E7D64B7CB9D49462353";
        const char* g_hex =
            "A4D1CBD5C3FD34126765A442EFB99905F8104DD258AC507FD6406CFF14266D31"
            "266FEA1E5C41564B777E690F5504F213160217B4B01B886A5E91547F9E2749F4"
            "D7FBD7D3B9A92EE1909D0D2263F80A76A6A24C087A091F531DBF0A0169B6A28A"
            "D662A4D18E73AFA32D779D5918D08BC8858F4DCEF97C2A24855E6EEB22B3B2E5";
        auto from = [](const char* hex) { return BigInt(std::string("0x") + hex); };
        return Group(from(p_hex), from(q_hex), from(g_hex));
    }();
    return grp;
}

} // namespace tagacl
