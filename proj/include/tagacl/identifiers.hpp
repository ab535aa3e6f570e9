#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tagacl/bytes.hpp"

namespace tagacl {

// Fixed-width opaque identifiers used on the wire.
using DomainId = std::array<std::uint8_t, 16>;
using ClassId = std::array<std::uint8_t, 16>;
using MethodId = std::uint32_t;
using Timestamp = std::uint64_t; // seconds on the simulated clock
using Epoch = std::uint32_t;

template <std::size_t N>
inline Bytes to_bytes(const std::array<std::uint8_t, N>& a) {
    return Bytes(a.begin(), a.end());
}

template <std::size_t N>
inline std::array<std::uint8_t, N> id_from_bytes(const Bytes& b) {
    if (b.size() != N) throw std::invalid_argument("id_from_bytes: bad length");
    std::array<std::uint8_t, N> a{};
    std::copy(b.begin(), b.end(), a.begin());
    return a;
}

// ASCII label zero-padded to 16 bytes; labels are for humans, ids for wire.
template <typename IdT = DomainId>
inline IdT labeled_id(const std::string& label) {
    if (label.size() > 16) throw std::invalid_argument("labeled_id: label too long");
    IdT a{};
    std::copy(label.begin(), label.end(), a.begin());
    return a;
}

// Same labeling convention for free-form 16-byte values (field names etc).
inline Bytes labeled_id_bytes(const std::string& label) {
    return to_bytes(labeled_id<std::array<std::uint8_t, 16>>(label));
}

// Every tag carries one built-in management object under this class id. Its
// methods cover the ownership and access lifecycle.
inline const ClassId& management_class_id() {
    static const ClassId id = labeled_id<ClassId>("tag-mgmt");
    return id;
}

// Factory-default key of the management class. Public by convention: a
// deployment replaces it via update_class_key before the tag leaves the
// trusted perimeter.
inline const Bytes& default_management_key() {
    static const Bytes k{'d', 'e', 'f', 'a', 'u', 'l', 't', '-',
                         'm', 'g', 'm', 't', '-', 'k', 'e', 'y'};
    return k;
}

// Methods of the management object.
inline constexpr MethodId kTakeOwnership = 0x0001;    // owner := caller
inline constexpr MethodId kTransferOwnership = 0x0002; // owner := handed-over party
inline constexpr MethodId kRelinquishOwnership = 0x0003;
inline constexpr MethodId kGrantAccess = 0x0004;  // stage access for a domain
inline constexpr MethodId kAcceptAccess = 0x0005; // staged domain completes
inline constexpr MethodId kRevokeAccess = 0x0006;
inline constexpr MethodId kReencryptGetIds = 0x0007;
inline constexpr MethodId kReencryptPutIds = 0x0008;
inline constexpr MethodId kInstallObject = 0x0009;
inline constexpr MethodId kDeleteObject = 0x000a;

// Methods every installed object understands.
inline constexpr MethodId kUpdateObject = 0x000b;
inline constexpr MethodId kUpdateClassKey = 0x000c;
inline constexpr MethodId kReadField = 0x000d;
inline constexpr MethodId kWriteField = 0x000e;

// Management methods below this bound need no permission token; they are
// guarded by session identity (who authenticated) instead.
inline bool method_needs_token(MethodId f) {
    return f >= kInstallObject;
}

} // namespace tagacl
