#pragma once

#include <map>

#include "tagacl/channel.hpp"

namespace tagacl {

// What a reader carries for its domain: the key-diversification master and
// the epoch keypair history it has been issued. A reader reported stolen
// keeps a stale prefix of the list and falls behind for good.
struct ReaderCredentials {
    DomainId domain{};
    Key master_key;
    std::vector<KeyPair> epoch_keys; // index == epoch number
};

// Out-of-band enrollment material for one (domain, tag) pair: the encrypted
// id to store and the diversified pairwise key.
struct EnrollMaterial {
    DomainId domain{};
    EncryptedId encid;
    Key kta;
};

// A session exported for physical handoff (ownership transfer, grant
// completion). Whoever holds it continues the same tag-side session.
struct SessionHandoff {
    Key key;
    std::uint32_t counter = 0;
};

enum class AuthOutcome {
    ok,
    no_reply,      // a frame went unanswered
    bad_frame,     // reply would not parse
    foreign_tag,   // ciphertext failed the re-encryption factor check
    rejected,      // tag's final message did not verify
};

struct CallOutcome {
    enum class Status { ok, failed, no_result, bad_result } status = Status::no_result;
    Bytes payload;
    bool ok() const { return status == Status::ok; }
};

// The reader-side protocol driver. One session at a time; all public-key
// work in the system happens here, never on the tag.
class Reader {
public:
    Reader(const Group& grp, Rng rng, ReaderCredentials creds)
        : grp_(grp), rng_(std::move(rng)), creds_(std::move(creds)) {
        if (creds_.epoch_keys.empty())
            throw std::invalid_argument("reader needs at least one epoch key");
    }

    const DomainId& domain() const { return creds_.domain; }
    Epoch newest_epoch() const { return static_cast<Epoch>(creds_.epoch_keys.size() - 1); }

    // Issued by the back office when the domain rolls its epoch. A stolen
    // reader simply never receives this call again.
    void issue_epoch_key(const KeyPair& kp) { creds_.epoch_keys.push_back(kp); }

    bool session_open() const { return open_; }
    const Key& session_key() const { return session_; }
    const BigInt& tag_id() const { return tag_id_; }
    std::uint64_t pk_ops() const { return pk_ops_; }
    std::uint64_t calls_issued() const { return calls_issued_; }
    std::uint64_t calls_completed() const { return calls_completed_; }

    // Four-message mutual authentication. On success the session is open and
    // the tag's stored ciphertext has been refreshed to our newest epoch.
    AuthOutcome authenticate(Channel& ch, Timestamp now) {
        Ops ops(*this);
        close_local();
        auto hr_frame = ch.exchange(encode_frame({FrameType::hello, to_bytes(creds_.domain)}));
        if (!hr_frame) return AuthOutcome::no_reply;
        auto f = parse_frame(*hr_frame);
        if (!f || f->type != FrameType::hello_reply) return AuthOutcome::bad_frame;
        auto hr = parse_hello_reply(grp_, f->body);
        if (!hr) return AuthOutcome::bad_frame;

        // Decrypt with the claimed epoch's key, or our newest if the claim
        // is ahead of what we hold (the stolen-reader position).
        Epoch use = std::min(hr->epoch, newest_epoch());
        auto t = decrypt_id(grp_, creds_.epoch_keys[use].sk, hr->encid);
        if (!t) {
            // Not ours (or not reachable with our keys). Keep the airtime
            // profile of a continuing handshake before giving up.
            ch.exchange(encode_frame({FrameType::auth_request,
                                      rng_.bytes(auth_request_body_size())}));
            return AuthOutcome::foreign_tag;
        }

        Key kta = diversify_key(creds_.master_key, grp_.encode(*t));
        EncryptedId fresh = encrypt_id(grp_, creds_.epoch_keys.back().pk, *t, rng_);
        Bytes q = rng_.bytes(kNonceSize);
        Bytes s = rng_.bytes(kBlockSize);
        AuthRequestPlain m{fresh, newest_epoch(), hr->nonce, q, now, s};
        auto reply = ch.exchange(encode_frame(
            {FrameType::auth_request, auth_encrypt(kta, encode_auth_request(grp_, m), rng_)}));
        if (!reply) return AuthOutcome::no_reply;
        auto rf = parse_frame(*reply);
        if (!rf || rf->type != FrameType::auth_reply) return AuthOutcome::bad_frame;
        auto pt = plain_decrypt(kta, rf->body);
        if (!pt) return AuthOutcome::rejected;
        auto ar = parse_auth_reply(*pt);
        if (!ar || ar->challenge_echo != q) return AuthOutcome::rejected;

        session_ = xor_bytes(s, ar->key_share);
        n_ = 0;
        open_ = true;
        tag_id_ = *t;
        kta_ = kta;
        return AuthOutcome::ok;
    }

    // The two-frame method call. The header draws no reply; the result is
    // checked against the session key and the expected counter.
    CallOutcome call(Channel& ch, const ClassId& c, MethodId f, const Bytes& params,
                     Timestamp token_expiry = 0, Bytes token = Bytes(kTokenSize, 0)) {
        Ops ops(*this);
        ++calls_issued_;
        CallHeaderPlain h{n_, c, f, token_expiry, std::move(token)};
        ch.exchange(encode_frame(
            {FrameType::call_header, auth_encrypt(session_, encode_call_header(h), rng_)}));
        CallParamsPlain p{n_ + 1, params};
        auto reply = ch.exchange(encode_frame(
            {FrameType::call_params, auth_encrypt(session_, encode_call_params(p), rng_)}));
        if (!reply) {
            abandon();
            return {CallOutcome::Status::no_result, {}};
        }
        auto rf = parse_frame(*reply);
        if (!rf || rf->type != FrameType::call_result) {
            abandon();
            return {CallOutcome::Status::bad_result, {}};
        }
        auto pt = auth_decrypt(session_, rf->body);
        if (!pt) {
            abandon();
            return {CallOutcome::Status::bad_result, {}};
        }
        auto res = parse_call_result(*pt);
        if (!res || res->counter != n_ + 2) {
            abandon();
            return {CallOutcome::Status::bad_result, {}};
        }
        n_ += 3;
        if (res->status != kStatusOk) return {CallOutcome::Status::failed, res->payload};
        ++calls_completed_;
        return {CallOutcome::Status::ok, res->payload};
    }

    void stop(Channel& ch) {
        if (!open_) return;
        ch.exchange(encode_frame({FrameType::stop, auth_encrypt(session_, stop_marker(), rng_)}));
        close_local();
    }

    // The bootstrap window: a factory-fresh tag accepts calls under the
    // well-known all-zero key, which is how the first owner gets in.
    void open_bottom_session() {
        session_ = Key(kKeySize, 0);
        n_ = 0;
        open_ = true;
        tag_id_ = 0;
    }

    SessionHandoff handoff() {
        SessionHandoff h{session_, n_};
        close_local();
        return h;
    }

    void adopt_session(const SessionHandoff& h) {
        session_ = h.key;
        n_ = h.counter;
        open_ = true;
        tag_id_ = 0;
    }

    // Lifecycle wrappers.
    bool take_ownership(Channel& ch, const EnrollMaterial& m, Timestamp now) {
        Bytes p = to_bytes(m.domain);
        append(p, encode_encrypted_id(grp_, m.encid));
        append(p, m.kta);
        put_u64(p, now);
        return call(ch, management_class_id(), kTakeOwnership, p).ok();
    }

    bool grant_access(Channel& ch, const DomainId& d) {
        return call(ch, management_class_id(), kGrantAccess, to_bytes(d)).ok();
    }

    bool accept_access(Channel& ch, const EnrollMaterial& m) {
        Bytes p = to_bytes(m.domain);
        append(p, encode_encrypted_id(grp_, m.encid));
        append(p, m.kta);
        return call(ch, management_class_id(), kAcceptAccess, p).ok();
    }

    bool revoke_access(Channel& ch, const DomainId& d) {
        return call(ch, management_class_id(), kRevokeAccess, to_bytes(d)).ok();
    }

    bool transfer_ownership(Channel& ch) {
        return call(ch, management_class_id(), kTransferOwnership, {}).ok();
    }

    bool relinquish_ownership(Channel& ch) {
        bool ok = call(ch, management_class_id(), kRelinquishOwnership, {}).ok();
        if (ok) close_local(); // the tag closed its side with the result
        return ok;
    }

    bool install_object(Channel& ch, const ClassId& c, const Key& class_key,
                        const std::map<Bytes, Bytes>& fields, Timestamp token_expiry = 0,
                        Bytes token = Bytes(kTokenSize, 0)) {
        Bytes p = to_bytes(c);
        append(p, class_key);
        append(p, encode_fields(fields));
        return call(ch, management_class_id(), kInstallObject, p, token_expiry,
                    std::move(token))
            .ok();
    }

    bool delete_object(Channel& ch, const ClassId& c, Timestamp token_expiry = 0,
                       Bytes token = Bytes(kTokenSize, 0)) {
        return call(ch, management_class_id(), kDeleteObject, to_bytes(c), token_expiry,
                    std::move(token))
            .ok();
    }

    bool update_object(Channel& ch, const ClassId& c, const std::map<Bytes, Bytes>& fields,
                       Timestamp token_expiry, Bytes token) {
        return call(ch, c, kUpdateObject, encode_fields(fields), token_expiry,
                    std::move(token))
            .ok();
    }

    bool update_class_key(Channel& ch, const ClassId& c, const Key& new_key,
                          Timestamp token_expiry, Bytes token) {
        return call(ch, c, kUpdateClassKey, new_key, token_expiry, std::move(token)).ok();
    }

    std::optional<Bytes> read_field(Channel& ch, const ClassId& c, const Bytes& name,
                                    Timestamp token_expiry, Bytes token) {
        auto r = call(ch, c, kReadField, name, token_expiry, std::move(token));
        if (!r.ok()) return std::nullopt;
        return r.payload;
    }

    bool write_field(Channel& ch, const ClassId& c, const Bytes& name, const Bytes& value,
                     Timestamp token_expiry, Bytes token) {
        Bytes p = name;
        append(p, value);
        return call(ch, c, kWriteField, p, token_expiry, std::move(token)).ok();
    }

    // Owner housekeeping: pull every stored ciphertext, re-randomize each
    // without any key, push the batch back. Unlinkability maintenance.
    bool reencrypt_all(Channel& ch) {
        Ops ops(*this);
        auto table = call(ch, management_class_id(), kReencryptGetIds, {});
        if (!table.ok()) return false;
        try {
            ByteReader r(table.payload);
            std::uint32_t count = r.u32();
            Bytes put;
            put_u32(put, count);
            for (std::uint32_t i = 0; i < count; ++i) {
                DomainId d = id_from_bytes<16>(r.take(16));
                r.u32(); // epoch: not needed, re-randomization is keyless
                EncryptedId c = decode_encrypted_id(grp_, r);
                append(put, to_bytes(d));
                append(put, encode_encrypted_id(grp_, universal_reencrypt(grp_, c, rng_)));
            }
            if (!r.done()) return false;
            return call(ch, management_class_id(), kReencryptPutIds, put).ok();
        } catch (const std::exception&) {
            return false;
        }
    }

    std::size_t auth_request_body_size() const {
        // iv + padded(encid + epoch + two nonces + timestamp + key share) + mac
        std::size_t plain = 4 * grp_.element_width() + 4 + 16 + 16 + 8 + 16;
        return 16 + (plain / 16 + 1) * 16 + 16;
    }

private:
    friend struct snapshot_access;

    // Samples the shared modexp counter across a public entry point so the
    // reader's public-key work can be attributed and bounded in tests.
    struct Ops {
        Reader& r;
        std::uint64_t before;
        explicit Ops(Reader& rd) : r(rd), before(modexp_counter()) {}
        ~Ops() { r.pk_ops_ += modexp_counter() - before; }
    };

    void close_local() {
        open_ = false;
        session_ = Key(kKeySize, 0);
        n_ = 0;
        tag_id_ = 0;
        kta_.clear();
    }

    void abandon() { close_local(); }

    const Group& grp_;
    Rng rng_;
    ReaderCredentials creds_;
    Key session_ = Key(kKeySize, 0);
    Key kta_;
    std::uint32_t n_ = 0;
    bool open_ = false;
    BigInt tag_id_ = 0;
    std::uint64_t pk_ops_ = 0;
    std::uint64_t calls_issued_ = 0;
    std::uint64_t calls_completed_ = 0;
};

} // namespace tagacl
