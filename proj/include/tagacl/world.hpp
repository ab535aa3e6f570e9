#pragma once

#include <deque>

#include "tagacl/backoffice.hpp"

namespace tagacl {

// Simulated wall clock. Every observation ticks it forward, so no two
// protocol runs ever see the same instant; the handshake's strictly-ahead
// check then holds without any jitter bookkeeping.
class SimClock {
public:
    Timestamp now() { return ++t_; }
    void advance(Timestamp dt) { t_ += dt; }
    Timestamp peek() const { return t_; }

private:
    friend struct snapshot_access;
    Timestamp t_ = 0;
};

// Everything a deployment holds, wired together for simulation: the clock,
// the back office, the reader fleet, and the tag population with their
// ground-truth plaintext ids (known here, never on the air).
class World {
public:
    World(const Group& grp, std::uint64_t seed)
        : grp_(grp), rng_(seed), office_(grp, rng_.child(1)) {}

    const Group& group() const { return grp_; }
    SimClock& clock() { return clock_; }
    Backoffice& office() { return office_; }

    const DomainId& add_domain(const std::string& label) {
        return office_.create_domain(label);
    }

    std::size_t add_reader(const DomainId& d) {
        readers_.push_back({Reader(grp_, rng_.child(0x7200 + readers_.size()),
                                   office_.reader_credentials(d)),
                            d, false});
        return readers_.size() - 1;
    }

    Reader& reader(std::size_t i) { return readers_.at(i).reader; }
    const DomainId& reader_domain(std::size_t i) const { return readers_.at(i).domain; }
    bool reader_stolen(std::size_t i) const { return readers_.at(i).stolen; }
    std::size_t reader_count() const { return readers_.size(); }

    // A factory-fresh tag: management object only, no owner, bottom key.
    std::size_t add_tag() {
        BigInt t = random_tag_id(grp_, rng_);
        tags_.push_back({Tag(grp_, rng_.child(0x7a00 + tags_.size()), clock_.peek()), t});
        return tags_.size() - 1;
    }

    // A tag leaving enrollment: the domain is its owner, entry at epoch 0.
    std::size_t enroll_tag(const DomainId& d) {
        std::size_t i = add_tag();
        auto m = office_.enrollment_material(d, tags_[i].true_id);
        tags_[i].tag.provision_entry(m.domain, m.encid, 0, m.kta, true);
        return i;
    }

    Tag& tag(std::size_t i) { return tags_.at(i).tag; }
    const BigInt& tag_true_id(std::size_t i) const { return tags_.at(i).true_id; }
    std::size_t tag_count() const { return tags_.size(); }

    Channel channel(std::size_t tag_index, Policy policy = {}) {
        return Channel(tags_.at(tag_index).tag, policy);
    }

    // A reader is reported stolen: its domain rolls the epoch and the new
    // keypair goes to every reader of that domain except the stolen one,
    // which keeps serving stale keys forever.
    void report_stolen(std::size_t reader_index) {
        auto& victim = readers_.at(reader_index);
        victim.stolen = true;
        const KeyPair& kp = office_.roll_epoch(victim.domain);
        for (auto& r : readers_)
            if (!r.stolen && r.domain == victim.domain) r.reader.issue_epoch_key(kp);
    }

    Rng fork_rng(std::uint64_t salt) { return rng_.child(salt); }

private:
    friend struct snapshot_access;

    struct TagRecord {
        Tag tag;
        BigInt true_id;
    };

    struct ReaderRecord {
        Reader reader;
        DomainId domain;
        bool stolen = false;
    };

    const Group& grp_;
    Rng rng_;
    SimClock clock_;
    Backoffice office_;
    std::deque<TagRecord> tags_;     // deque: Channel holds Tag references
    std::deque<ReaderRecord> readers_;
};

} // namespace tagacl
