#pragma once

#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

#include "tagacl/bytes.hpp"

namespace tagacl {

inline constexpr std::size_t kBlockSize = 16;
inline constexpr std::size_t kKeySize = 16;

using Key = Bytes; // always kKeySize bytes

namespace detail {

struct CipherCtxDeleter {
    void operator()(EVP_CIPHER_CTX* p) const { EVP_CIPHER_CTX_free(p); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

[[noreturn]] inline void crypto_fail(const char* what) {
    throw std::runtime_error(std::string("crypto backend: ") + what);
}

// Raw AES-128-CBC, padding handled by the caller. Input must be a whole
// number of blocks.
inline Bytes cbc_run(const Key& key, const Bytes& iv, const Bytes& data, bool encrypt) {
    if (key.size() != kKeySize) crypto_fail("bad key size");
    if (iv.size() != kBlockSize) crypto_fail("bad iv size");
    if (data.size() % kBlockSize) crypto_fail("input not block aligned");
    CipherCtx ctx(EVP_CIPHER_CTX_new());
    if (!ctx) crypto_fail("ctx alloc");
    if (EVP_CipherInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr, key.data(), iv.data(),
                          encrypt ? 1 : 0) != 1)
        crypto_fail("cipher init");
    EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
    Bytes out(data.size() + kBlockSize);
    int len1 = 0, len2 = 0;
    if (EVP_CipherUpdate(ctx.get(), out.data(), &len1, data.data(),
                         static_cast<int>(data.size())) != 1)
        crypto_fail("cipher update");
    if (EVP_CipherFinal_ex(ctx.get(), out.data() + len1, &len2) != 1)
        crypto_fail("cipher final");
    out.resize(static_cast<std::size_t>(len1 + len2));
    return out;
}

} // namespace detail

// Single-block AES-128 (the E_k building block).
inline Bytes aes128_encrypt_block(const Key& key, const Bytes& block) {
    if (block.size() != kBlockSize) detail::crypto_fail("bad block size");
    return detail::cbc_run(key, Bytes(kBlockSize, 0), block, true);
}

inline Bytes aes128_decrypt_block(const Key& key, const Bytes& block) {
    if (block.size() != kBlockSize) detail::crypto_fail("bad block size");
    return detail::cbc_run(key, Bytes(kBlockSize, 0), block, false);
}

inline Bytes aes128_cbc_encrypt(const Key& key, const Bytes& iv, const Bytes& padded) {
    return detail::cbc_run(key, iv, padded, true);
}

inline Bytes aes128_cbc_decrypt(const Key& key, const Bytes& iv, const Bytes& ct) {
    return detail::cbc_run(key, iv, ct, false);
}

// AES-128-CMAC over an arbitrary-length message.
inline Bytes cmac_aes128(const Key& key, const Bytes& msg) {
    if (key.size() != kKeySize) detail::crypto_fail("bad key size");
    struct MacDeleter {
        void operator()(EVP_MAC* p) const { EVP_MAC_free(p); }
    };
    struct MacCtxDeleter {
        void operator()(EVP_MAC_CTX* p) const { EVP_MAC_CTX_free(p); }
    };
    std::unique_ptr<EVP_MAC, MacDeleter> mac(EVP_MAC_fetch(nullptr, "CMAC", nullptr));
    if (!mac) detail::crypto_fail("cmac fetch");
    std::unique_ptr<EVP_MAC_CTX, MacCtxDeleter> ctx(EVP_MAC_CTX_new(mac.get()));
    if (!ctx) detail::crypto_fail("cmac ctx");
    char cipher_name[] = "AES-128-CBC";
    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_CIPHER, cipher_name, 0),
        OSSL_PARAM_construct_end(),
    };
    if (EVP_MAC_init(ctx.get(), key.data(), key.size(), params) != 1)
        detail::crypto_fail("cmac init");
    if (!msg.empty() && EVP_MAC_update(ctx.get(), msg.data(), msg.size()) != 1)
        detail::crypto_fail("cmac update");
    Bytes out(kBlockSize);
    std::size_t written = 0;
    if (EVP_MAC_final(ctx.get(), out.data(), &written, out.size()) != 1)
        detail::crypto_fail("cmac final");
    out.resize(written);
    return out;
}

} // namespace tagacl
