#pragma once

#include <optional>
#include <utility>

#include "tagacl/bytes.hpp"
#include "tagacl/group.hpp"
#include "tagacl/rng.hpp"

namespace tagacl {

struct KeyPair {
    BigInt sk; // exponent in [1, q-1]
    BigInt pk; // g^sk
};

inline KeyPair generate_keypair(const Group& grp, Rng& rng) {
    BigInt sk = grp.random_exponent(rng);
    return {sk, grp.pow(grp.g(), sk)};
}

// An encrypted identifier bundles the message ciphertext (u, v) with a
// ciphertext of the identity element (y, z). The second pair is what makes
// key-less re-encryption possible: anyone can re-randomize with it, and the
// key holder can detect a bundle built for a different key because then
// y != z^sk.
struct EncryptedId {
    BigInt u, v; // u = m * pk^x,  v = g^x
    BigInt y, z; // y = pk^x',     z = g^x'

    bool operator==(const EncryptedId&) const = default;
};

inline EncryptedId encrypt_id(const Group& grp, const BigInt& pk, const BigInt& m,
                              const BigInt& x, const BigInt& x_prime) {
    if (!grp.is_member(m)) throw std::invalid_argument("encrypt_id: plaintext not in group");
    return {grp.mul(m, grp.pow(pk, x)), grp.pow(grp.g(), x),
            grp.pow(pk, x_prime), grp.pow(grp.g(), x_prime)};
}

inline EncryptedId encrypt_id(const Group& grp, const BigInt& pk, const BigInt& m, Rng& rng) {
    // Nonzero exponents: x' = 0 would emit the degenerate factor (1, 1),
    // which passes the key check under every key.
    return encrypt_id(grp, pk, m, grp.random_exponent(rng), grp.random_exponent(rng));
}

// Re-randomize without any key material. The signature deliberately takes no
// key: the whole point is that this works for anyone holding the bundle.
inline EncryptedId universal_reencrypt(const Group& grp, const EncryptedId& c,
                                       const BigInt& a, const BigInt& a_prime) {
    return {grp.mul(c.u, grp.pow(c.y, a)), grp.mul(c.v, grp.pow(c.z, a)),
            grp.pow(c.y, a_prime), grp.pow(c.z, a_prime)};
}

inline EncryptedId universal_reencrypt(const Group& grp, const EncryptedId& c, Rng& rng) {
    // a may be zero (the message pair keeps its value either way); a' must
    // not be, or the fresh factor degenerates to (1, 1).
    return universal_reencrypt(grp, c, grp.random_exponent_with_zero(rng),
                               grp.random_exponent(rng));
}

// Re-encryption with knowledge of the public key: multiplies fresh
// randomness into the message pair and replaces the factor outright, so the
// result is distributed like a fresh encryption.
inline EncryptedId keyed_reencrypt(const Group& grp, const BigInt& pk, const EncryptedId& c,
                                   Rng& rng) {
    BigInt x = grp.random_exponent(rng);
    BigInt x_prime = grp.random_exponent(rng);
    return {grp.mul(c.u, grp.pow(pk, x)), grp.mul(c.v, grp.pow(grp.g(), x)),
            grp.pow(pk, x_prime), grp.pow(grp.g(), x_prime)};
}

// Returns the plaintext only when the bundle is well-formed for this key:
// every component is a subgroup member and the factor decrypts to 1.
inline std::optional<BigInt> decrypt_id(const Group& grp, const BigInt& sk,
                                        const EncryptedId& c) {
    if (!grp.is_member(c.u) || !grp.is_member(c.v) || !grp.is_member(c.y) ||
        !grp.is_member(c.z))
        return std::nullopt;
    if (grp.mul(c.y, grp.inverse(grp.pow(c.z, sk))) != 1) return std::nullopt;
    return grp.mul(c.u, grp.inverse(grp.pow(c.v, sk)));
}

// Tag identifiers are random subgroup elements g^r, r in [1, q-1].
inline BigInt random_tag_id(const Group& grp, Rng& rng) {
    return grp.pow(grp.g(), grp.random_exponent(rng));
}

inline Bytes encode_encrypted_id(const Group& grp, const EncryptedId& c) {
    Bytes out = grp.encode(c.u);
    append(out, grp.encode(c.v));
    append(out, grp.encode(c.y));
    append(out, grp.encode(c.z));
    return out;
}

inline EncryptedId decode_encrypted_id(const Group& grp, ByteReader& r) {
    const std::size_t w = grp.element_width();
    EncryptedId c;
    c.u = grp.decode(r.take(w));
    c.v = grp.decode(r.take(w));
    c.y = grp.decode(r.take(w));
    c.z = grp.decode(r.take(w));
    return c;
}

inline EncryptedId decode_encrypted_id(const Group& grp, const Bytes& b) {
    ByteReader r(b);
    EncryptedId c = decode_encrypted_id(grp, r);
    if (!r.done()) throw std::invalid_argument("decode_encrypted_id: trailing bytes");
    return c;
}

} // namespace tagacl
