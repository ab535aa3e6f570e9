#pragma once

#include <optional>

#include "tagacl/aes.hpp"
#include "tagacl/bytes.hpp"
#include "tagacl/rng.hpp"

namespace tagacl {

// PKCS#7: always pads, so aligned input grows by a full block.
inline Bytes pkcs7_pad(Bytes msg) {
    std::uint8_t n = static_cast<std::uint8_t>(kBlockSize - msg.size() % kBlockSize);
    msg.insert(msg.end(), n, n);
    return msg;
}

inline std::optional<Bytes> pkcs7_unpad(const Bytes& padded) {
    if (padded.empty() || padded.size() % kBlockSize) return std::nullopt;
    std::uint8_t n = padded.back();
    if (n == 0 || n > kBlockSize || n > padded.size()) return std::nullopt;
    for (std::size_t i = padded.size() - n; i < padded.size(); ++i)
        if (padded[i] != n) return std::nullopt;
    return Bytes(padded.begin(), padded.end() - n);
}

// Authenticated encryption {|m|}_k: encrypt-then-MAC with a random IV.
// Layout: iv(16) | cbc body | mac(16), mac = CMAC(k, iv | body).
inline Bytes auth_encrypt(const Key& key, const Bytes& msg, Rng& rng) {
    Bytes iv = rng.bytes(kBlockSize);
    Bytes body = aes128_cbc_encrypt(key, iv, pkcs7_pad(msg));
    Bytes out = iv + body;
    append(out, cmac_aes128(key, out));
    return out;
}

// Rejects (nullopt) on short input, wrong tag, or bad padding. A reject
// reveals nothing beyond "not produced under this key".
inline std::optional<Bytes> auth_decrypt(const Key& key, const Bytes& blob) {
    if (blob.size() < 3 * kBlockSize) return std::nullopt;
    Bytes head(blob.begin(), blob.end() - static_cast<std::ptrdiff_t>(kBlockSize));
    Bytes mac(blob.end() - static_cast<std::ptrdiff_t>(kBlockSize), blob.end());
    if (cmac_aes128(key, head) != mac) return std::nullopt;
    Bytes iv(head.begin(), head.begin() + kBlockSize);
    Bytes body(head.begin() + kBlockSize, head.end());
    if (body.empty() || body.size() % kBlockSize) return std::nullopt;
    return pkcs7_unpad(aes128_cbc_decrypt(key, iv, body));
}

// Unauthenticated encryption {m}_k: iv(16) | cbc body. Used only for the
// final handshake message, whose integrity the echoed nonce already covers.
inline Bytes plain_encrypt(const Key& key, const Bytes& msg, Rng& rng) {
    Bytes iv = rng.bytes(kBlockSize);
    return iv + aes128_cbc_encrypt(key, iv, pkcs7_pad(msg));
}

// No integrity: rejects only structurally impossible input (misaligned
// length). A tampered body decrypts without error to garbage, possibly with
// its broken padding still attached; the protocol layer catches that via
// the echoed nonce and size checks.
inline std::optional<Bytes> plain_decrypt(const Key& key, const Bytes& blob) {
    if (blob.size() < 2 * kBlockSize || blob.size() % kBlockSize) return std::nullopt;
    Bytes iv(blob.begin(), blob.begin() + kBlockSize);
    Bytes body(blob.begin() + kBlockSize, blob.end());
    Bytes raw = aes128_cbc_decrypt(key, iv, body);
    if (auto m = pkcs7_unpad(raw)) return m;
    return raw;
}

// Key diversification E_k(data) for data longer than one block: CBC-MAC
// style fold with a zero IV, keeping the last block. Deterministic, so both
// sides derive the same per-tag key from the master key and the identifier.
inline Key diversify_key(const Key& master, const Bytes& data) {
    Bytes padded = pkcs7_pad(data);
    Bytes chain(kBlockSize, 0);
    for (std::size_t off = 0; off < padded.size(); off += kBlockSize) {
        Bytes block(padded.begin() + static_cast<std::ptrdiff_t>(off),
                    padded.begin() + static_cast<std::ptrdiff_t>(off + kBlockSize));
        chain = aes128_encrypt_block(master, xor_bytes(chain, block));
    }
    return chain;
}

// Permission token E_kc(f | D | delta): deterministic CBC with a zero IV so
// issuer and tag compute the identical 32-byte string. f is a 4-byte method
// id, D the 16-byte domain id, delta an 8-byte expiry time.
inline Bytes mint_token(const Key& class_key, std::uint32_t method, const Bytes& domain,
                        std::uint64_t expiry) {
    if (domain.size() != 16) throw std::invalid_argument("mint_token: bad domain id");
    Bytes msg;
    put_u32(msg, method);
    append(msg, domain);
    put_u64(msg, expiry);
    return aes128_cbc_encrypt(class_key, Bytes(kBlockSize, 0), pkcs7_pad(msg));
}

inline constexpr std::size_t kTokenSize = 32;

} // namespace tagacl
