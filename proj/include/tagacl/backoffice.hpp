#pragma once

#include "tagacl/reader.hpp"

namespace tagacl {

// A permission grant as recorded at issuance time. The record id is a
// surrogate: tokens themselves carry no serial number, so the ledger is the
// only place a grant can be looked up later.
struct TokenRecord {
    std::uint64_t id = 0;
    ClassId cls{};
    MethodId method = 0;
    DomainId grantee{};
    Timestamp expiry = 0;
    Bytes token;
};

// The trusted back end: domain key material, epoch history, class keys, and
// the token ledger. It never touches the air interface.
class Backoffice {
public:
    Backoffice(const Group& grp, Rng rng) : grp_(grp), rng_(std::move(rng)) {}

    // Domains. Each starts at epoch 0 with a fresh keypair and master key.
    const DomainId& create_domain(const std::string& label) {
        DomainId id = labeled_id<DomainId>(label);
        if (domains_.count(id)) throw std::invalid_argument("domain exists: " + label);
        DomainState st;
        st.master = rng_.bytes(kKeySize);
        st.epoch_keys.push_back(generate_keypair(grp_, rng_));
        auto [it, _] = domains_.emplace(id, std::move(st));
        return it->first;
    }

    bool has_domain(const DomainId& d) const { return domains_.count(d) > 0; }

    Epoch current_epoch(const DomainId& d) const {
        return static_cast<Epoch>(state(d).epoch_keys.size() - 1);
    }

    const std::vector<KeyPair>& epoch_keys(const DomainId& d) const {
        return state(d).epoch_keys;
    }

    const Key& master_key(const DomainId& d) const { return state(d).master; }

    // Epoch roll: reacting to a compromised reader. The new keypair must be
    // pushed to the surviving fleet by whoever holds the readers.
    const KeyPair& roll_epoch(const DomainId& d) {
        auto& st = mutable_state(d);
        st.epoch_keys.push_back(generate_keypair(grp_, rng_));
        return st.epoch_keys.back();
    }

    // Credentials for a new reader of this domain: full history as of now.
    ReaderCredentials reader_credentials(const DomainId& d) const {
        const auto& st = state(d);
        return {d, st.master, st.epoch_keys};
    }

    // Enrollment material for one tag. Entries written through take or
    // accept always carry epoch 0; the first authentication refreshes the
    // ciphertext to the domain's current epoch.
    EnrollMaterial enrollment_material(const DomainId& d, const BigInt& t) {
        const auto& st = state(d);
        return {d, encrypt_id(grp_, st.epoch_keys.front().pk, t, rng_),
                diversify_key(st.master, grp_.encode(t))};
    }

    // Class key registry: the back office's own copy, which is the key it
    // mints tokens under. It can drift from what a tag holds after an
    // on-tag key rotation, and that drift is a feature.
    void record_class_key(const ClassId& c, Key k) { class_keys_[c] = std::move(k); }

    bool knows_class(const ClassId& c) const { return class_keys_.count(c) > 0; }

    const Key& class_key(const ClassId& c) const {
        auto it = class_keys_.find(c);
        if (it == class_keys_.end()) throw std::invalid_argument("unknown class");
        return it->second;
    }

    // Token issuance always goes through the ledger.
    const TokenRecord& issue_token(const ClassId& c, MethodId f, const DomainId& grantee,
                                   Timestamp expiry) {
        TokenRecord rec;
        rec.id = next_record_++;
        rec.cls = c;
        rec.method = f;
        rec.grantee = grantee;
        rec.expiry = expiry;
        rec.token = mint_token(class_key(c), f, to_bytes(grantee), expiry);
        ledger_.push_back(std::move(rec));
        return ledger_.back();
    }

    const std::vector<TokenRecord>& token_ledger() const { return ledger_; }

private:
    friend struct snapshot_access;

    struct DomainState {
        Key master;
        std::vector<KeyPair> epoch_keys;
    };

    const DomainState& state(const DomainId& d) const {
        auto it = domains_.find(d);
        if (it == domains_.end()) throw std::invalid_argument("unknown domain");
        return it->second;
    }

    DomainState& mutable_state(const DomainId& d) {
        auto it = domains_.find(d);
        if (it == domains_.end()) throw std::invalid_argument("unknown domain");
        return it->second;
    }

    const Group& grp_;
    Rng rng_;
    std::map<DomainId, DomainState> domains_;
    std::map<ClassId, Key> class_keys_;
    std::vector<TokenRecord> ledger_;
    std::uint64_t next_record_ = 1;
};

} // namespace tagacl
