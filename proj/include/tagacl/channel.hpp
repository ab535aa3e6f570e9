#pragma once

#include <string>
#include <vector>

#include "tagacl/tag.hpp"

namespace tagacl {

enum class Direction { to_tag, to_reader };

// One frame crossing the air, as it actually crossed (post-tamper). Frames
// the reader never saw (dropped, surplus replies) are kept with
// delivered=false so a transcript is a complete record of the run.
struct FlightRecord {
    std::size_t index = 0;
    Direction dir = Direction::to_tag;
    Bytes frame;
    bool delivered = true;
    std::string note;
};

// A single adversarial action scheduled against one crossing. Crossings are
// numbered in the order they happen, both directions sharing one counter.
struct Policy {
    enum class Kind { passive, drop, tamper, replay, inject };
    Kind kind = Kind::passive;
    std::size_t at = 0;  // crossing index the action targets
    std::size_t bit = 0; // tamper: bit position to flip (mod frame size)
    Bytes payload;       // inject: frame slipped in before crossing `at`
};

// Half-duplex radio between one reader and one tag, with a Dolev-Yao
// adversary limited to one scheduled action per run plus direct sends.
class Channel {
public:
    explicit Channel(Tag& tag, Policy policy = {}) : tag_(tag), policy_(policy) {}

    // A full reader round: send one frame, collect the tag's reply if any.
    std::optional<Bytes> exchange(const Bytes& frame) {
        maybe_inject();

        auto tx = transmit(Direction::to_tag, frame);
        std::optional<Bytes> reply;
        if (tx.frame) {
            reply = deliver(*tx.frame);
            if (tx.duplicate) {
                record(Direction::to_tag, *tx.frame, true, "replayed copy");
                auto extra = deliver(*tx.frame);
                if (!reply)
                    reply = extra;
                else if (extra)
                    record(Direction::to_reader, *extra, false, "surplus reply, discarded");
            }
        }
        if (!reply) return std::nullopt;

        auto back = transmit(Direction::to_reader, *reply);
        if (back.duplicate && back.frame)
            record(Direction::to_reader, *back.frame, false, "replayed copy, reader moved on");
        return back.frame;
    }

    // An adversary talking to the tag directly; the reply comes back to the
    // adversary, never to the reader.
    std::optional<Bytes> adversary_send(const Bytes& frame) {
        record(Direction::to_tag, frame, true, "adversary frame");
        auto reply = deliver(frame);
        if (reply) record(Direction::to_reader, *reply, false, "reply to adversary");
        return reply;
    }

    const std::vector<FlightRecord>& transcript() const { return log_; }
    bool policy_fired() const { return fired_; }

private:
    struct Transmitted {
        std::optional<Bytes> frame;
        bool duplicate = false;
    };

    void record(Direction dir, const Bytes& frame, bool delivered, std::string note) {
        log_.push_back({next_++, dir, frame, delivered, std::move(note)});
    }

    // Runs the tag and folds its diagnostic note into the crossing record.
    std::optional<Bytes> deliver(const Bytes& frame) {
        auto reply = tag_.receive(frame);
        if (!log_.empty() && !tag_.last_note().empty()) {
            auto& note = log_.back().note;
            if (!note.empty()) note += " | ";
            note += tag_.last_note();
        }
        return reply;
    }

    void maybe_inject() {
        if (fired_ || policy_.kind != Policy::Kind::inject || policy_.at != next_) return;
        fired_ = true;
        record(Direction::to_tag, policy_.payload, true, "injected frame");
        auto reply = deliver(policy_.payload);
        if (reply) record(Direction::to_reader, *reply, false, "reply to injected frame");
    }

    Transmitted transmit(Direction dir, const Bytes& frame) {
        bool mine = !fired_ && policy_.at == next_;
        if (mine && policy_.kind == Policy::Kind::drop) {
            fired_ = true;
            record(dir, frame, false, "dropped by adversary");
            return {std::nullopt, false};
        }
        if (mine && policy_.kind == Policy::Kind::tamper) {
            fired_ = true;
            Bytes flipped = frame;
            if (!flipped.empty()) {
                std::size_t bit = policy_.bit % (flipped.size() * 8);
                flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
            }
            record(dir, flipped, true, "tampered by adversary");
            return {flipped, false};
        }
        if (mine && policy_.kind == Policy::Kind::replay) {
            fired_ = true;
            record(dir, frame, true, "delivered, replay follows");
            return {frame, true};
        }
        record(dir, frame, true, "");
        return {frame, false};
    }

    Tag& tag_;
    Policy policy_;
    bool fired_ = false;
    std::size_t next_ = 0;
    std::vector<FlightRecord> log_;
};

} // namespace tagacl
