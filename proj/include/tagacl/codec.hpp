#pragma once

#include <optional>

#include "tagacl/bytes.hpp"
#include "tagacl/elgamal.hpp"
#include "tagacl/frame.hpp"
#include "tagacl/identifiers.hpp"
#include "tagacl/symmetric.hpp"

namespace tagacl {

// Plaintext layouts of the protocol messages. Encoders are strict; parsers
// return nullopt on any structural defect, because a malformed body under a
// valid MAC is still a protocol violation the receiver must absorb quietly.

inline constexpr std::size_t kNonceSize = 16;

struct HelloReplyBody {
    EncryptedId encid;
    Epoch epoch = 0;
    Bytes nonce; // 16-byte challenge r
};

inline Bytes encode_hello_reply(const Group& grp, const HelloReplyBody& m) {
    Bytes out = encode_encrypted_id(grp, m.encid);
    put_u32(out, m.epoch);
    append(out, m.nonce);
    return out;
}

inline std::optional<HelloReplyBody> parse_hello_reply(const Group& grp, const Bytes& b) {
    try {
        ByteReader r(b);
        HelloReplyBody m;
        m.encid = decode_encrypted_id(grp, r);
        m.epoch = r.u32();
        m.nonce = r.take(kNonceSize);
        if (!r.done()) return std::nullopt;
        return m;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct AuthRequestPlain {
    EncryptedId encid; // freshly re-encrypted id
    Epoch epoch = 0;   // epoch of the key used for the re-encryption
    Bytes nonce_echo;  // tag's r, 16 bytes
    Bytes challenge;   // reader's nonce q, 16 bytes
    Timestamp timestamp = 0;
    Bytes key_share; // s, 16 bytes
};

inline Bytes encode_auth_request(const Group& grp, const AuthRequestPlain& m) {
    Bytes out = encode_encrypted_id(grp, m.encid);
    put_u32(out, m.epoch);
    append(out, m.nonce_echo);
    append(out, m.challenge);
    put_u64(out, m.timestamp);
    append(out, m.key_share);
    return out;
}

inline std::optional<AuthRequestPlain> parse_auth_request(const Group& grp, const Bytes& b) {
    try {
        ByteReader r(b);
        AuthRequestPlain m;
        m.encid = decode_encrypted_id(grp, r);
        m.epoch = r.u32();
        m.nonce_echo = r.take(kNonceSize);
        m.challenge = r.take(kNonceSize);
        m.timestamp = r.u64();
        m.key_share = r.take(kBlockSize);
        if (!r.done()) return std::nullopt;
        return m;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct AuthReplyPlain {
    Bytes challenge_echo; // reader's q, 16 bytes
    Bytes key_share;      // s-bar, 16 bytes
};

inline Bytes encode_auth_reply(const AuthReplyPlain& m) {
    return m.challenge_echo + m.key_share;
}

inline std::optional<AuthReplyPlain> parse_auth_reply(const Bytes& b) {
    if (b.size() != kNonceSize + kBlockSize) return std::nullopt;
    AuthReplyPlain m;
    m.challenge_echo = Bytes(b.begin(), b.begin() + kNonceSize);
    m.key_share = Bytes(b.begin() + kNonceSize, b.end());
    return m;
}

struct CallHeaderPlain {
    std::uint32_t counter = 0;
    ClassId class_id{};
    MethodId method = 0;
    Timestamp token_expiry = 0;
    Bytes token; // kTokenSize bytes; all zero when the method needs none
};

inline Bytes encode_call_header(const CallHeaderPlain& m) {
    if (m.token.size() != kTokenSize)
        throw std::invalid_argument("encode_call_header: bad token size");
    Bytes out;
    put_u32(out, m.counter);
    append(out, to_bytes(m.class_id));
    put_u32(out, m.method);
    put_u64(out, m.token_expiry);
    append(out, m.token);
    return out;
}

inline std::optional<CallHeaderPlain> parse_call_header(const Bytes& b) {
    try {
        ByteReader r(b);
        CallHeaderPlain m;
        m.counter = r.u32();
        m.class_id = id_from_bytes<16>(r.take(16));
        m.method = r.u32();
        m.token_expiry = r.u64();
        m.token = r.take(kTokenSize);
        if (!r.done()) return std::nullopt;
        return m;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct CallParamsPlain {
    std::uint32_t counter = 0;
    Bytes params;
};

inline Bytes encode_call_params(const CallParamsPlain& m) {
    Bytes out;
    put_u32(out, m.counter);
    append(out, m.params);
    return out;
}

inline std::optional<CallParamsPlain> parse_call_params(const Bytes& b) {
    if (b.size() < 4) return std::nullopt;
    ByteReader r(b);
    CallParamsPlain m;
    m.counter = r.u32();
    m.params = r.take(r.remaining());
    return m;
}

inline constexpr std::uint32_t kStatusOk = 0;
inline constexpr std::uint32_t kStatusFail = 1;

struct CallResultPlain {
    std::uint32_t counter = 0;
    std::uint32_t status = kStatusOk;
    Bytes payload;
};

inline Bytes encode_call_result(const CallResultPlain& m) {
    Bytes out;
    put_u32(out, m.counter);
    put_u32(out, m.status);
    append(out, m.payload);
    return out;
}

inline std::optional<CallResultPlain> parse_call_result(const Bytes& b) {
    if (b.size() < 8) return std::nullopt;
    ByteReader r(b);
    CallResultPlain m;
    m.counter = r.u32();
    m.status = r.u32();
    m.payload = r.take(r.remaining());
    return m;
}

inline const Bytes& stop_marker() {
    static const Bytes m{'s', 't', 'o', 'p'};
    return m;
}

} // namespace tagacl
