#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tagacl/bytes.hpp"
#include "tagacl/group.hpp"

namespace tagacl {

// Everything on the air travels as: type(1) | body length(2, big endian) | body.
enum class FrameType : std::uint8_t {
    hello = 0x01,         // reader announces its domain
    hello_reply = 0x02,   // tag: encrypted id, epoch, challenge nonce
    auth_request = 0x03,  // reader: authenticated blob under the per-tag key
    auth_reply = 0x04,    // tag: plain encryption under the session key
    call_header = 0x05,   // reader: counter, class, method, token
    call_params = 0x06,   // reader: counter+1, parameters
    call_result = 0x07,   // tag: counter+2, status, payload
    stop = 0x08,          // reader ends the session
};

struct Frame {
    FrameType type;
    Bytes body;

    bool operator==(const Frame&) const = default;
};

inline Bytes encode_frame(const Frame& f) {
    if (f.body.size() > 0xffff) throw std::invalid_argument("encode_frame: body too long");
    Bytes out;
    out.push_back(static_cast<std::uint8_t>(f.type));
    put_u16(out, static_cast<std::uint16_t>(f.body.size()));
    append(out, f.body);
    return out;
}

inline std::optional<Frame> parse_frame(const Bytes& raw) {
    if (raw.size() < 3) return std::nullopt;
    std::uint8_t t = raw[0];
    if (t < 0x01 || t > 0x08) return std::nullopt;
    std::size_t len = static_cast<std::size_t>(raw[1]) << 8 | raw[2];
    if (raw.size() != 3 + len) return std::nullopt;
    return Frame{static_cast<FrameType>(t), Bytes(raw.begin() + 3, raw.end())};
}

// Structural fingerprint of a frame: type, length, and the field boundaries
// the layout dictates for that type. Two frames with equal shapes are
// indistinguishable to an observer who cannot decrypt. Boundaries are fixed
// per type once the group's element width is known; variable-length tails
// are reported as a trailing field.
inline std::string frame_shape(const Frame& f, std::size_t elem_width) {
    std::string s = "t" + std::to_string(static_cast<int>(f.type)) + ":len=" +
                    std::to_string(f.body.size()) + ":";
    auto fields = [&](std::initializer_list<std::size_t> fixed) {
        std::size_t used = 0;
        bool first = true;
        for (auto w : fixed) {
            s += (first ? "" : ",") + std::to_string(w);
            first = false;
            used += w;
        }
        if (f.body.size() > used) s += (first ? "" : ",") + std::to_string(f.body.size() - used);
    };
    switch (f.type) {
    case FrameType::hello:
        fields({16});
        break;
    case FrameType::hello_reply:
        fields({elem_width, elem_width, elem_width, elem_width, 4, 16});
        break;
    case FrameType::auth_request:
    case FrameType::call_header:
    case FrameType::call_params:
    case FrameType::call_result:
    case FrameType::stop:
        // iv | opaque cbc body | mac: only the envelope is visible
        if (f.body.size() >= 32)
            fields({16, f.body.size() - 32, 16});
        else
            fields({});
        break;
    case FrameType::auth_reply:
        if (f.body.size() >= 16)
            fields({16, f.body.size() - 16});
        else
            fields({});
        break;
    }
    return s;
}

} // namespace tagacl
