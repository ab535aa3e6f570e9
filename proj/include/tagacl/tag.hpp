#pragma once

#include <map>
#include <optional>
#include <string>

#include "tagacl/codec.hpp"
#include "tagacl/identifiers.hpp"

namespace tagacl {

// One row of the access set. A pending entry is a placeholder holding no key
// material: it marks a staged grant, or a domain suspended after a failed
// authentication. Only an active entry can open a session.
struct AccessEntry {
    EncryptedId encid;
    Epoch epoch = 0;
    Key kta;
    bool owner = false;
    bool pending = false;

    static AccessEntry make_pending() {
        AccessEntry e;
        e.pending = true;
        return e;
    }
};

enum class AccessState { absent, pending, active };

struct StoredObject {
    ClassId class_id{};
    Key class_key;
    std::map<Bytes, Bytes> fields; // 16-byte name -> 16-byte value
};

// The tag: a strictly single-threaded state machine. One frame in, at most
// one frame out. It performs no public-key operation on any honest path;
// the counter kept here exists to prove that in tests.
class Tag {
public:
    Tag(const Group& grp, Rng rng, Timestamp now = 0)
        : grp_(grp), rng_(std::move(rng)), now_(now) {
        StoredObject mgmt;
        mgmt.class_id = management_class_id();
        mgmt.class_key = default_management_key();
        objects_[mgmt.class_id] = std::move(mgmt);
    }

    // Provisioning writes state directly, modeling physical access during
    // manufacture or enrollment. Never reachable over the air.
    void provision_entry(const DomainId& d, const EncryptedId& encid, Epoch epoch,
                         const Key& kta, bool owner) {
        AccessEntry e;
        e.encid = encid;
        e.epoch = epoch;
        e.kta = kta;
        e.owner = owner;
        access_[d] = std::move(e);
    }

    void provision_object(StoredObject obj) { objects_[obj.class_id] = std::move(obj); }

    // Single wire entry point.
    std::optional<Bytes> receive(const Bytes& raw) {
        std::uint64_t before = modexp_counter();
        auto reply = handle(raw);
        pk_ops_ += modexp_counter() - before;
        return reply;
    }

    // Inspection (tests and simulator bookkeeping).
    std::optional<DomainId> owner() const {
        for (const auto& [d, e] : access_)
            if (!e.pending && e.owner) return d;
        return std::nullopt;
    }

    AccessState access_state(const DomainId& d) const {
        auto it = access_.find(d);
        if (it == access_.end()) return AccessState::absent;
        return it->second.pending ? AccessState::pending : AccessState::active;
    }

    const EncryptedId& encid_of(const DomainId& d) const { return active_entry(d).encid; }
    Epoch epoch_of(const DomainId& d) const { return active_entry(d).epoch; }
    Timestamp now() const { return now_; }
    std::uint64_t exec_count() const { return exec_count_; }
    std::uint64_t pk_ops() const { return pk_ops_; }
    bool session_open() const { return session_.caller.has_value(); }
    std::optional<DomainId> session_caller() const { return session_.caller; }
    const Key& session_key() const { return session_.key; }
    const std::string& last_note() const { return note_; }

    bool has_object(const ClassId& c) const { return objects_.count(c) > 0; }

    std::optional<Bytes> object_field(const ClassId& c, const Bytes& name) const {
        auto it = objects_.find(c);
        if (it == objects_.end()) return std::nullopt;
        auto f = it->second.fields.find(name);
        if (f == it->second.fields.end()) return std::nullopt;
        return f->second;
    }

    const Key& class_key_of(const ClassId& c) const {
        auto it = objects_.find(c);
        if (it == objects_.end()) throw std::invalid_argument("class_key_of: no such object");
        return it->second.class_key;
    }

private:
    friend struct snapshot_access;

    struct Session {
        Key key = Key(kKeySize, 0); // the well-known bottom key
        std::uint32_t m = 0;
        std::optional<DomainId> caller;
        std::optional<std::pair<DomainId, Bytes>> pending_hello; // (D, nonce r)
        std::optional<CallHeaderPlain> pending_call;
        bool token_verified = false; // header carried a valid permission token
    };

    struct ExecResult {
        std::uint32_t status = kStatusFail;
        Bytes payload;
        bool end_session = false;
    };

    const AccessEntry& active_entry(const DomainId& d) const {
        auto it = access_.find(d);
        if (it == access_.end() || it->second.pending)
            throw std::invalid_argument("no active entry for domain");
        return it->second;
    }

    void reset_session() { session_ = Session{}; }

    bool owner_session() const {
        if (!session_.caller) return false;
        auto it = access_.find(*session_.caller);
        return it != access_.end() && !it->second.pending && it->second.owner;
    }

    static bool all_zero(const Bytes& b) {
        for (auto x : b)
            if (x) return false;
        return true;
    }

    // Decoy frames: structurally identical to the honest frame of the same
    // type, content random. Group elements are sampled as real subgroup
    // members so a decoy is not detectable by a membership test either.
    Bytes decoy_hello_reply() {
        HelloReplyBody m;
        m.encid.u = random_tag_id(grp_, rng_);
        m.encid.v = random_tag_id(grp_, rng_);
        m.encid.y = random_tag_id(grp_, rng_);
        m.encid.z = random_tag_id(grp_, rng_);
        Epoch hint = 0;
        for (const auto& [d, e] : access_)
            if (!e.pending && e.epoch > hint) hint = e.epoch;
        m.epoch = static_cast<Epoch>(rng_.below(hint + 1));
        m.nonce = rng_.bytes(kNonceSize);
        return encode_frame({FrameType::hello_reply, encode_hello_reply(grp_, m)});
    }

    Bytes decoy_auth_reply() {
        // Honest: iv(16) + cbc(32 -> 48) = 64 opaque bytes.
        return encode_frame({FrameType::auth_reply, rng_.bytes(64)});
    }

    Bytes decoy_call_result() {
        // Honest fixed-width result: iv(16) + cbc(24 -> 32) + mac(16).
        return encode_frame({FrameType::call_result, rng_.bytes(64)});
    }

    std::optional<Bytes> handle(const Bytes& raw) {
        note_.clear();
        auto frame = parse_frame(raw);
        if (!frame) {
            note_ = "unparseable frame";
            return std::nullopt;
        }
        switch (frame->type) {
        case FrameType::hello:
            return on_hello(frame->body);
        case FrameType::auth_request:
            return on_auth_request(frame->body);
        case FrameType::call_header:
            return on_call_header(frame->body);
        case FrameType::call_params:
            return on_call_params(frame->body);
        case FrameType::stop:
            return on_stop(frame->body);
        case FrameType::hello_reply:
        case FrameType::auth_reply:
        case FrameType::call_result:
            note_ = "frame type never addressed to a tag";
            return std::nullopt;
        }
        return std::nullopt;
    }

    std::optional<Bytes> on_hello(const Bytes& body) {
        if (body.size() != 16) {
            note_ = "malformed hello";
            return std::nullopt;
        }
        reset_session(); // every hello opens a fresh session
        DomainId d = id_from_bytes<16>(body);
        auto it = access_.find(d);
        if (it == access_.end() || it->second.pending) {
            note_ = it == access_.end() ? "hello: unknown domain, decoy"
                                        : "hello: pending domain, decoy";
            return decoy_hello_reply();
        }
        Bytes r = rng_.bytes(kNonceSize);
        session_.pending_hello = {d, r};
        note_ = "hello: known domain";
        HelloReplyBody m{it->second.encid, it->second.epoch, r};
        return encode_frame({FrameType::hello_reply, encode_hello_reply(grp_, m)});
    }

    std::optional<Bytes> on_auth_request(const Bytes& body) {
        if (!session_.pending_hello) {
            note_ = "stray auth request, decoy";
            return decoy_auth_reply();
        }
        auto [d, r] = *session_.pending_hello;
        session_.pending_hello.reset();

        // The entry existed when the hello was answered; keep local copies
        // and suspend the entry for the duration of the verification.
        AccessEntry entry = access_.at(d);
        access_[d] = AccessEntry::make_pending();

        auto pt = auth_decrypt(entry.kta, body);
        if (!pt) {
            note_ = "auth: mac reject, domain suspended";
            return decoy_auth_reply();
        }
        auto m = parse_auth_request(grp_, *pt);
        if (!m) {
            note_ = "auth: malformed plaintext, domain suspended";
            return decoy_auth_reply();
        }
        if (m->nonce_echo != r) {
            note_ = "auth: nonce mismatch, domain suspended";
            return decoy_auth_reply();
        }
        if (!(now_ < m->timestamp)) {
            note_ = "auth: stale timestamp, domain suspended";
            return decoy_auth_reply();
        }

        // Success: restore with the fresh ciphertext and epoch, adopt the
        // asserted clock, agree on the session key.
        entry.encid = m->encid;
        entry.epoch = m->epoch;
        entry.pending = false;
        access_[d] = entry;
        now_ = m->timestamp;

        Bytes sbar = rng_.bytes(kBlockSize);
        session_.key = xor_bytes(m->key_share, sbar);
        session_.m = 0;
        session_.caller = d;
        note_ = "auth: success";
        Bytes reply = plain_encrypt(entry.kta, encode_auth_reply({m->challenge, sbar}), rng_);
        return encode_frame({FrameType::auth_reply, reply});
    }

    std::optional<Bytes> on_call_header(const Bytes& body) {
        auto pt = auth_decrypt(session_.key, body);
        if (!pt) {
            note_ = "header: mac reject, session poisoned";
            reset_session();
            return std::nullopt;
        }
        auto h = parse_call_header(*pt);
        if (!h) {
            note_ = "header: malformed, session poisoned";
            reset_session();
            return std::nullopt;
        }
        if (h->counter != session_.m) {
            note_ = "header: counter mismatch, session poisoned";
            reset_session();
            return std::nullopt;
        }
        auto obj = objects_.find(h->class_id);
        if (obj == objects_.end()) {
            note_ = "header: unknown class, session poisoned";
            reset_session();
            return std::nullopt;
        }
        session_.token_verified = false;
        if (method_needs_token(h->method)) {
            if (all_zero(h->token)) {
                // No token presented. Install and delete may fall back to
                // the owner guard; everything else requires one.
                if (h->method != kInstallObject && h->method != kDeleteObject) {
                    note_ = "header: token required, session poisoned";
                    reset_session();
                    return std::nullopt;
                }
            } else {
                if (!session_.caller) {
                    note_ = "header: token in anonymous session, poisoned";
                    reset_session();
                    return std::nullopt;
                }
                Bytes expected = mint_token(obj->second.class_key, h->method,
                                            to_bytes(*session_.caller), h->token_expiry);
                if (h->token != expected) {
                    note_ = "header: token mismatch, session poisoned";
                    reset_session();
                    return std::nullopt;
                }
                if (!(now_ < h->token_expiry)) {
                    note_ = "header: token expired, session poisoned";
                    reset_session();
                    return std::nullopt;
                }
                session_.token_verified = true;
            }
        }
        note_ = session_.pending_call ? "header: accepted (replacing stashed header)"
                                      : "header: accepted";
        session_.pending_call = *h;
        return std::nullopt;
    }

    std::optional<Bytes> on_call_params(const Bytes& body) {
        if (!session_.pending_call) {
            note_ = "stray params, decoy";
            return decoy_call_result();
        }
        auto pt = auth_decrypt(session_.key, body);
        if (!pt) {
            note_ = "params: mac reject, session poisoned";
            reset_session();
            return decoy_call_result();
        }
        auto p = parse_call_params(*pt);
        if (!p || p->counter != session_.m + 1) {
            note_ = "params: counter mismatch, session poisoned";
            reset_session();
            return decoy_call_result();
        }
        CallHeaderPlain h = *session_.pending_call;
        session_.pending_call.reset();

        ExecResult res = execute(h, p->params);
        if (res.status == kStatusOk) ++exec_count_;

        CallResultPlain out{session_.m + 2, res.status, res.payload};
        session_.m += 3;
        Bytes reply = auth_encrypt(session_.key, encode_call_result(out), rng_);
        if (res.end_session) reset_session();
        return encode_frame({FrameType::call_result, reply});
    }

    std::optional<Bytes> on_stop(const Bytes& body) {
        auto pt = auth_decrypt(session_.key, body);
        if (!pt || *pt != stop_marker()) {
            note_ = "stop: reject, ignored";
            return std::nullopt;
        }
        note_ = "stop: session closed";
        reset_session();
        return std::nullopt;
    }

    // Method dispatch. Guard failures return a failed status but leave the
    // session usable; only header-stage violations poison.
    ExecResult execute(const CallHeaderPlain& h, const Bytes& params) {
        ExecResult fail;
        fail.payload = rng_.bytes(16);
        try {
            bool mgmt_method = h.method >= kTakeOwnership && h.method <= kDeleteObject;
            if (mgmt_method && h.class_id != management_class_id()) {
                note_ += " | mgmt method on non-mgmt class";
                return fail;
            }
            switch (h.method) {
            case kTakeOwnership:
                return exec_take(params);
            case kTransferOwnership:
                return exec_transfer(params);
            case kRelinquishOwnership:
                return exec_relinquish(params);
            case kGrantAccess:
                return exec_grant(params);
            case kAcceptAccess:
                return exec_accept(params);
            case kRevokeAccess:
                return exec_revoke(params);
            case kReencryptGetIds:
                return exec_reencrypt_get(params);
            case kReencryptPutIds:
                return exec_reencrypt_put(params);
            case kInstallObject:
                return exec_install(params);
            case kDeleteObject:
                return exec_delete(params);
            case kUpdateObject:
                return exec_update_object(h.class_id, params);
            case kUpdateClassKey:
                return exec_update_class_key(h.class_id, params);
            case kReadField:
                return exec_read_field(h.class_id, params);
            case kWriteField:
                return exec_write_field(h.class_id, params);
            default:
                note_ += " | unknown method";
                return fail;
            }
        } catch (const std::exception&) {
            note_ += " | malformed params";
            return fail;
        }
    }

    ExecResult ok_void(bool end_session = false) {
        return {kStatusOk, rng_.bytes(16), end_session};
    }

    ExecResult exec_take(const Bytes& params) {
        ByteReader r(params);
        DomainId d = id_from_bytes<16>(r.take(16));
        EncryptedId encid = decode_encrypted_id(grp_, r);
        Key kta = r.take(kKeySize);
        Timestamp asserted = r.u64();
        if (!r.done()) throw std::invalid_argument("trailing");
        if (owner()) {
            note_ += " | take: already owned";
            return {kStatusFail, rng_.bytes(16), false};
        }
        AccessEntry e;
        e.encid = encid;
        e.epoch = 0;
        e.kta = kta;
        e.owner = true;
        access_[d] = e;
        session_.caller = d; // the session continues under the new identity
        now_ = std::max(now_, asserted);
        note_ += " | take: ok";
        return ok_void();
    }

    ExecResult exec_transfer(const Bytes& params) {
        if (!params.empty()) throw std::invalid_argument("params");
        if (!owner_session()) {
            note_ += " | transfer: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        access_.clear();
        note_ += " | transfer: ok, session stays open";
        return ok_void(); // deliberately keeps the session for the handoff
    }

    ExecResult exec_relinquish(const Bytes& params) {
        if (!params.empty()) throw std::invalid_argument("params");
        if (!owner_session()) {
            note_ += " | relinquish: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        access_.clear();
        note_ += " | relinquish: ok, session closed";
        return ok_void(true);
    }

    ExecResult exec_grant(const Bytes& params) {
        if (params.size() != 16) throw std::invalid_argument("params");
        if (!owner_session()) {
            note_ += " | grant: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        DomainId d = id_from_bytes<16>(params);
        access_[d] = AccessEntry::make_pending();
        note_ += " | grant: staged";
        return ok_void();
    }

    ExecResult exec_accept(const Bytes& params) {
        ByteReader r(params);
        DomainId d = id_from_bytes<16>(r.take(16));
        EncryptedId encid = decode_encrypted_id(grp_, r);
        Key kta = r.take(kKeySize);
        if (!r.done()) throw std::invalid_argument("trailing");
        auto it = access_.find(d);
        if (!session_.caller || it == access_.end() || !it->second.pending) {
            note_ += " | accept: no staged grant";
            return {kStatusFail, rng_.bytes(16), false};
        }
        AccessEntry e;
        e.encid = encid;
        e.epoch = 0;
        e.kta = kta;
        e.owner = false;
        access_[d] = e;
        note_ += " | accept: ok";
        return ok_void();
    }

    ExecResult exec_revoke(const Bytes& params) {
        if (params.size() != 16) throw std::invalid_argument("params");
        if (!owner_session()) {
            note_ += " | revoke: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        access_.erase(id_from_bytes<16>(params));
        note_ += " | revoke: ok";
        return ok_void();
    }

    ExecResult exec_reencrypt_get(const Bytes& params) {
        if (!params.empty()) throw std::invalid_argument("params");
        if (!owner_session()) {
            note_ += " | reencrypt get: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        std::uint32_t count = 0;
        Bytes body;
        for (const auto& [d, e] : access_) {
            if (e.pending) continue;
            append(body, to_bytes(d));
            put_u32(body, e.epoch);
            append(body, encode_encrypted_id(grp_, e.encid));
            ++count;
        }
        Bytes payload;
        put_u32(payload, count);
        append(payload, body);
        note_ += " | reencrypt get: ok";
        return {kStatusOk, payload, false};
    }

    ExecResult exec_reencrypt_put(const Bytes& params) {
        ByteReader r(params);
        std::uint32_t count = r.u32();
        struct Entry {
            DomainId d;
            EncryptedId encid;
        };
        std::vector<Entry> entries;
        for (std::uint32_t i = 0; i < count; ++i) {
            Entry e;
            e.d = id_from_bytes<16>(r.take(16));
            e.encid = decode_encrypted_id(grp_, r);
            entries.push_back(e);
        }
        if (!r.done()) throw std::invalid_argument("trailing");
        if (!owner_session()) {
            note_ += " | reencrypt put: not owner";
            return {kStatusFail, rng_.bytes(16), false};
        }
        std::size_t applied = 0;
        for (const auto& e : entries) {
            auto it = access_.find(e.d);
            if (it == access_.end() || it->second.pending) continue;
            if (!grp_.is_member(e.encid.u) || !grp_.is_member(e.encid.v) ||
                !grp_.is_member(e.encid.y) || !grp_.is_member(e.encid.z))
                continue;
            it->second.encid = e.encid;
            ++applied;
        }
        note_ += " | reencrypt put: applied " + std::to_string(applied);
        return ok_void();
    }

    bool install_delete_authorized() const {
        return owner_session() || session_.token_verified;
    }

    ExecResult exec_install(const Bytes& params) {
        ByteReader r(params);
        ClassId c = id_from_bytes<16>(r.take(16));
        Key k = r.take(kKeySize);
        auto fields = parse_fields(r);
        if (!r.done()) throw std::invalid_argument("trailing");
        if (!install_delete_authorized()) {
            note_ += " | install: unauthorized";
            return {kStatusFail, rng_.bytes(16), false};
        }
        if (objects_.count(c)) {
            note_ += " | install: class exists";
            return {kStatusFail, rng_.bytes(16), false};
        }
        StoredObject obj;
        obj.class_id = c;
        obj.class_key = k;
        obj.fields = std::move(fields);
        objects_[c] = std::move(obj);
        note_ += " | install: ok";
        return ok_void();
    }

    ExecResult exec_delete(const Bytes& params) {
        if (params.size() != 16) throw std::invalid_argument("params");
        ClassId c = id_from_bytes<16>(params);
        if (!install_delete_authorized()) {
            note_ += " | delete: unauthorized";
            return {kStatusFail, rng_.bytes(16), false};
        }
        if (c == management_class_id()) {
            note_ += " | delete: management object is permanent";
            return {kStatusFail, rng_.bytes(16), false};
        }
        if (!objects_.count(c)) {
            note_ += " | delete: no such object";
            return {kStatusFail, rng_.bytes(16), false};
        }
        objects_.erase(c);
        note_ += " | delete: ok";
        return ok_void();
    }

    ExecResult exec_update_object(const ClassId& c, const Bytes& params) {
        ByteReader r(params);
        auto fields = parse_fields(r);
        if (!r.done()) throw std::invalid_argument("trailing");
        objects_.at(c).fields = std::move(fields);
        note_ += " | update object: ok";
        return ok_void();
    }

    ExecResult exec_update_class_key(const ClassId& c, const Bytes& params) {
        if (params.size() != kKeySize) throw std::invalid_argument("params");
        objects_.at(c).class_key = params;
        note_ += " | update class key: ok";
        return ok_void();
    }

    ExecResult exec_read_field(const ClassId& c, const Bytes& params) {
        if (params.size() != 16) throw std::invalid_argument("params");
        const auto& fields = objects_.at(c).fields;
        auto it = fields.find(params);
        if (it == fields.end()) {
            note_ += " | read: no such field";
            return {kStatusFail, rng_.bytes(16), false};
        }
        note_ += " | read: ok";
        return {kStatusOk, it->second, false};
    }

    ExecResult exec_write_field(const ClassId& c, const Bytes& params) {
        if (params.size() != 32) throw std::invalid_argument("params");
        Bytes name(params.begin(), params.begin() + 16);
        Bytes value(params.begin() + 16, params.end());
        objects_.at(c).fields[name] = value;
        note_ += " | write: ok";
        return ok_void();
    }

    static std::map<Bytes, Bytes> parse_fields(ByteReader& r) {
        std::uint32_t count = r.u32();
        std::map<Bytes, Bytes> fields;
        for (std::uint32_t i = 0; i < count; ++i) {
            Bytes name = r.take(16);
            fields[name] = r.take(16);
        }
        return fields;
    }

    const Group& grp_;
    Rng rng_;
    Timestamp now_;
    std::map<DomainId, AccessEntry> access_;
    std::map<ClassId, StoredObject> objects_;
    Session session_;
    std::uint64_t exec_count_ = 0;
    std::uint64_t pk_ops_ = 0;
    std::string note_;
};

// Field blob encoding shared by install and update_object.
inline Bytes encode_fields(const std::map<Bytes, Bytes>& fields) {
    Bytes out;
    put_u32(out, static_cast<std::uint32_t>(fields.size()));
    for (const auto& [name, value] : fields) {
        if (name.size() != 16 || value.size() != 16)
            throw std::invalid_argument("encode_fields: entries are 16+16 bytes");
        append(out, name);
        append(out, value);
    }
    return out;
}

} // namespace tagacl
