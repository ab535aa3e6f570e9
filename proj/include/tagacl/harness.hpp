#pragma once

#include <chrono>
#include <set>

#include "tagacl/scenarios.hpp"

namespace tagacl {

// Property suites behind the acceptance gate. Each suite exercises one
// security or efficiency claim end to end and reports a single verdict with
// enough numbers in the detail string to see what was actually measured.
struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

} // namespace detail

// Small-group arithmetic, exhaustively: encrypting and decrypting is the
// identity for every message, key, and exponent choice; key-less
// re-randomization preserves the plaintext for every randomness choice; and
// a bundle built for one key never decrypts under another (nonzero factor
// exponent, distinct keys).
inline PropertyResult check_crypto_roundtrips() {
    detail::Stopwatch clock;
    const Group& grp = toy_group();
    const std::uint64_t order = grp.q().convert_to<std::uint64_t>();

    std::vector<BigInt> members;
    for (std::uint64_t i = 0; i < order; ++i) members.push_back(grp.pow(grp.g(), i));

    std::size_t cases = 0, failures = 0;

    // Round trip under every key, message, and exponent pair.
    for (std::uint64_t sk = 1; sk < order; ++sk) {
        BigInt pk = grp.pow(grp.g(), sk);
        for (const BigInt& m : members)
            for (std::uint64_t x = 0; x < order; ++x)
                for (std::uint64_t xp = 0; xp < order; ++xp) {
                    ++cases;
                    auto back = decrypt_id(grp, sk, encrypt_id(grp, pk, m, x, xp));
                    if (!back || *back != m) ++failures;
                }
    }

    // Key-less re-randomization keeps the plaintext, all exponents.
    {
        const std::uint64_t sk = 7;
        BigInt pk = grp.pow(grp.g(), sk);
        for (const BigInt& m : members)
            for (std::uint64_t x = 0; x < order; ++x)
                for (std::uint64_t a = 0; a < order; ++a)
                    for (std::uint64_t ap = 0; ap < order; ++ap) {
                        ++cases;
                        EncryptedId c = encrypt_id(grp, pk, m, x, 1);
                        auto back = decrypt_id(grp, sk, universal_reencrypt(grp, c, a, ap));
                        if (!back || *back != m) ++failures;
                    }
    }

    // Foreign keys are rejected, before and after re-randomization.
    for (std::uint64_t a = 1; a < order; ++a)
        for (std::uint64_t b = 1; b < order; ++b) {
            if (a == b) continue;
            BigInt pk = grp.pow(grp.g(), a);
            for (std::uint64_t xp = 1; xp < order; ++xp) {
                cases += 2;
                EncryptedId c = encrypt_id(grp, pk, grp.g(), 5, xp);
                if (decrypt_id(grp, b, c)) ++failures;
                if (decrypt_id(grp, b, universal_reencrypt(grp, c, 3, 4))) ++failures;
            }
        }

    double elapsed = clock.seconds();
    bool pass = failures == 0 && elapsed < 5.0;
    return {"crypto round trips (exhaustive small group)", pass,
            std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, " +
                detail::format_seconds(elapsed)};
}

// Mutual authentication agreement. Honest runs must end with both sides
// holding the same session key and the same view of who is talking to whom.
// Single-action adversaries may break a run, but must never produce a run
// where both sides accept with inconsistent views. Finally, a transcript
// recorder who tries every 16-byte window of every frame as a session key
// (the well-known bottom key included) never gets a method executed.
inline PropertyResult check_session_agreement(std::size_t honest_runs = 500,
                                              std::size_t adversarial_runs = 500,
                                              std::uint64_t seed = 0xC2) {
    const Group& grp = toy_group();
    World w(grp, seed);
    const DomainId d = w.add_domain("prover");
    std::size_t r = w.add_reader(d);
    const std::size_t tag_count = 25;
    for (std::size_t i = 0; i < tag_count; ++i) w.enroll_tag(d);

    std::size_t honest_ok = 0;
    for (std::size_t run = 0; run < honest_runs; ++run) {
        std::size_t i = run % tag_count;
        Channel ch = w.channel(i);
        bool ok = w.reader(r).authenticate(ch, w.clock().now()) == AuthOutcome::ok &&
                  w.reader(r).session_key() == w.tag(i).session_key() &&
                  w.reader(r).tag_id() == w.tag_true_id(i) &&
                  w.tag(i).session_caller() == std::optional<DomainId>(d);
        if (ok) ++honest_ok;
        w.reader(r).stop(ch);
    }

    // Fresh tags for the adversarial phase: honest-phase state stays intact.
    std::size_t mismatched_accepts = 0;
    Rng fuzz = w.fork_rng(0xAD5E);
    for (std::size_t run = 0; run < adversarial_runs; ++run) {
        std::size_t i = w.enroll_tag(d);
        Policy pol;
        switch (fuzz.next_u64() % 3) {
        case 0:
            pol = {Policy::Kind::tamper, fuzz.next_u64() % 4, fuzz.next_u64() % 2048, {}};
            break;
        case 1:
            pol = {Policy::Kind::replay, fuzz.next_u64() % 4, 0, {}};
            break;
        default:
            pol = {Policy::Kind::inject, fuzz.next_u64() % 4, 0,
                   fuzz.bytes(1 + fuzz.next_u64() % 120)};
            break;
        }
        Channel ch = w.channel(i, pol);
        bool reader_accepts = w.reader(r).authenticate(ch, w.clock().now()) == AuthOutcome::ok;
        bool tag_accepts = w.tag(i).session_open();
        if (reader_accepts && tag_accepts) {
            bool consistent = w.reader(r).session_key() == w.tag(i).session_key() &&
                              w.reader(r).tag_id() == w.tag_true_id(i) &&
                              w.tag(i).session_caller() == std::optional<DomainId>(d);
            if (!consistent) ++mismatched_accepts;
        }
        w.reader(r).stop(ch);
    }

    // Transcript-derived candidate keys. Frame sizes are fixed per type, so
    // window positions learned from one reference run apply to every run;
    // each candidate attacks a live session carrying exactly those bytes.
    std::size_t sweep_tag = w.enroll_tag(d);
    std::vector<std::size_t> frame_sizes;
    {
        Channel ch = w.channel(sweep_tag);
        if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok)
            return {"session agreement", false, "reference run for the key sweep failed"};
        for (const auto& rec : ch.transcript()) frame_sizes.push_back(rec.frame.size());
        w.reader(r).stop(ch);
    }
    std::size_t candidates = 0, executed = 0;
    Rng forge_rng = w.fork_rng(0x517E);
    auto attempt = [&](const Key& candidate) {
        ++candidates;
        Channel ch = w.channel(sweep_tag);
        if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok) {
            ++executed; // should never happen; count as failure, not silence
            return;
        }
        std::uint64_t before = w.tag(sweep_tag).exec_count();
        CallHeaderPlain h{0, management_class_id(), kGrantAccess, 0, Bytes(kTokenSize, 0)};
        ch.adversary_send(encode_frame(
            {FrameType::call_header, auth_encrypt(candidate, encode_call_header(h), forge_rng)}));
        CallParamsPlain p{1, labeled_id_bytes("intruder")};
        ch.adversary_send(encode_frame(
            {FrameType::call_params, auth_encrypt(candidate, encode_call_params(p), forge_rng)}));
        if (w.tag(sweep_tag).exec_count() != before) ++executed;
        w.reader(r).stop(ch);
    };
    attempt(Key(kKeySize, 0)); // the well-known bootstrap key
    for (std::size_t fi = 0; fi < frame_sizes.size(); ++fi) {
        if (frame_sizes[fi] < kKeySize) continue;
        for (std::size_t off = 0; off + kKeySize <= frame_sizes[fi]; ++off) {
            ++candidates;
            Channel ch = w.channel(sweep_tag);
            if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok) {
                ++executed;
                continue;
            }
            const Bytes& frame = ch.transcript().at(fi).frame;
            Key candidate(frame.begin() + static_cast<std::ptrdiff_t>(off),
                          frame.begin() + static_cast<std::ptrdiff_t>(off + kKeySize));
            std::uint64_t before = w.tag(sweep_tag).exec_count();
            CallHeaderPlain h{0, management_class_id(), kGrantAccess, 0, Bytes(kTokenSize, 0)};
            ch.adversary_send(encode_frame({FrameType::call_header,
                                            auth_encrypt(candidate, encode_call_header(h),
                                                         forge_rng)}));
            CallParamsPlain p{1, labeled_id_bytes("intruder")};
            ch.adversary_send(encode_frame({FrameType::call_params,
                                            auth_encrypt(candidate, encode_call_params(p),
                                                         forge_rng)}));
            if (w.tag(sweep_tag).exec_count() != before) ++executed;
            w.reader(r).stop(ch);
        }
    }

    bool pass = honest_ok == honest_runs && mismatched_accepts == 0 && executed == 0;
    return {"session agreement", pass,
            std::to_string(honest_ok) + "/" + std::to_string(honest_runs) +
                " honest agree, " + std::to_string(mismatched_accepts) +
                " inconsistent accepts, " + std::to_string(candidates) +
                " transcript keys executed " + std::to_string(executed) + " calls"};
}

// Identifier freshness: every authentication and every owner-run keyless
// re-randomization leaves a different stored ciphertext that still decrypts
// to the same tag identity under the entry's epoch key.
inline PropertyResult check_identifier_refresh(const Group& grp, std::size_t runs = 500,
                                               std::uint64_t seed = 0xC3) {
    World w(grp, seed);
    const DomainId d = w.add_domain("fleet");
    std::size_t r = w.add_reader(d);
    const std::size_t tag_count = 5;
    for (std::size_t i = 0; i < tag_count; ++i) w.enroll_tag(d);

    std::size_t changed = 0, decrypt_ok = 0;
    for (std::size_t run = 0; run < runs; ++run) {
        std::size_t i = run % tag_count;
        Channel ch = w.channel(i);
        Bytes before, after;
        if (run % 3 == 2) {
            // Owner maintenance path: compare around the re-randomization.
            if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok) continue;
            before = encode_encrypted_id(grp, w.tag(i).encid_of(d));
            if (!w.reader(r).reencrypt_all(ch)) continue;
            after = encode_encrypted_id(grp, w.tag(i).encid_of(d));
        } else {
            before = encode_encrypted_id(grp, w.tag(i).encid_of(d));
            if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok) continue;
            after = encode_encrypted_id(grp, w.tag(i).encid_of(d));
        }
        w.reader(r).stop(ch);
        if (after != before) ++changed;
        const KeyPair& kp = w.office().epoch_keys(d).at(w.tag(i).epoch_of(d));
        auto t = decrypt_id(grp, kp.sk, w.tag(i).encid_of(d));
        if (t && *t == w.tag_true_id(i)) ++decrypt_ok;
    }

    bool pass = changed + 1 >= runs && decrypt_ok == runs;
    return {"identifier refresh", pass,
            std::to_string(changed) + "/" + std::to_string(runs) + " changed, " +
                std::to_string(decrypt_ok) + "/" + std::to_string(runs) + " decrypt to tag id"};
}

// Stolen-reader lockout: once the domain rolls its epoch key and a live
// reader refreshes a tag, the stolen reader's decryption factor check fails
// on every attempt, so the tag is unreachable to it.
inline PropertyResult check_epoch_lockout(const Group& grp, std::size_t runs = 200,
                                          std::uint64_t seed = 0xC4) {
    World w(grp, seed);
    const DomainId d = w.add_domain("fleet");
    std::size_t live = w.add_reader(d);
    std::size_t stolen = w.add_reader(d);
    std::vector<std::size_t> tags;
    for (std::size_t i = 0; i < runs; ++i) tags.push_back(w.enroll_tag(d));

    w.report_stolen(stolen); // epoch rolls; only the live reader gets the key

    std::size_t refreshed = 0, locked_out = 0;
    for (std::size_t i : tags) {
        Channel ch = w.channel(i);
        if (w.reader(live).authenticate(ch, w.clock().now()) == AuthOutcome::ok) ++refreshed;
        w.reader(live).stop(ch);
        Channel ch2 = w.channel(i);
        if (w.reader(stolen).authenticate(ch2, w.clock().now()) == AuthOutcome::foreign_tag)
            ++locked_out;
    }

    bool pass = refreshed == runs && locked_out == runs;
    return {"stolen reader epoch lockout", pass,
            std::to_string(refreshed) + "/" + std::to_string(runs) + " refreshed, " +
                std::to_string(locked_out) + "/" + std::to_string(runs) +
                " stolen attempts factor-rejected"};
}

// Call counting under a replaying adversary: the tag's execution counter
// moves in lockstep with the reader's completed honest calls, duplicates
// never execute twice, and a token whose deadline has passed is refused on
// every single presentation.
inline PropertyResult check_call_counting(std::size_t sessions = 1000,
                                          std::uint64_t seed = 0xC5) {
    const Group& grp = toy_group();
    World w(grp, seed);
    const DomainId d = w.add_domain("operator");
    const DomainId aux = w.add_domain("aux-never-here");
    std::size_t r = w.add_reader(d);
    std::size_t clean_tag = w.enroll_tag(d); // reserved for the token leg

    std::size_t lockstep = 0, expired_refused = 0, expired_tried = 0;
    Rng fuzz = w.fork_rng(0x5EED);
    for (std::size_t s = 0; s < sessions; ++s) {
        // A fresh tag per session keeps replay fallout from leaking across runs.
        std::size_t i = w.enroll_tag(d);
        Policy pol{Policy::Kind::replay, fuzz.next_u64() % 14, 0, {}};
        Channel ch = w.channel(i, pol);
        std::uint64_t exec0 = w.tag(i).exec_count();
        std::uint64_t comp0 = w.reader(r).calls_completed();
        if (w.reader(r).authenticate(ch, w.clock().now()) == AuthOutcome::ok) {
            std::size_t calls = 1 + fuzz.next_u64() % 2;
            for (std::size_t c = 0; c < calls; ++c) {
                if (c % 2 == 0)
                    w.reader(r).grant_access(ch, aux);
                else
                    w.reader(r).revoke_access(ch, aux);
            }
        }
        w.reader(r).stop(ch);
        if (w.tag(i).exec_count() - exec0 == w.reader(r).calls_completed() - comp0) ++lockstep;

        // Expired-token leg on the never-fuzzed tag: deadline at the tag's
        // own clock, so the strict freshness check must refuse it.
        Channel ch2 = w.channel(clean_tag);
        if (w.reader(r).authenticate(ch2, w.clock().now()) == AuthOutcome::ok) {
            ++expired_tried;
            std::uint64_t before = w.tag(clean_tag).exec_count();
            Timestamp dead = w.tag(clean_tag).now();
            Bytes token = mint_token(default_management_key(), kInstallObject, to_bytes(d), dead);
            bool installed = w.reader(r).install_object(ch2, labeled_id<ClassId>("too-late"),
                                                        Key(16, 9), {}, dead, token);
            if (!installed && w.tag(clean_tag).exec_count() == before) ++expired_refused;
        }
    }

    bool pass = lockstep == sessions && expired_tried == sessions &&
                expired_refused == expired_tried;
    return {"call counting under replay", pass,
            std::to_string(lockstep) + "/" + std::to_string(sessions) + " sessions in lockstep, " +
                std::to_string(expired_refused) + "/" + std::to_string(expired_tried) +
                " expired tokens refused"};
}

// Decoy shape identity: for every frame type a tag or reader fakes on a
// failure path, the fake has exactly the structural fingerprint of the
// honest frame of that type, over a large sample of both.
inline PropertyResult check_decoy_shapes(std::size_t per_bucket = 250,
                                         std::uint64_t seed = 0xC6) {
    const Group& grp = toy_group();
    const std::size_t width = grp.element_width();
    World w(grp, seed);
    const DomainId d = w.add_domain("home");
    std::size_t r = w.add_reader(d);
    std::size_t t = w.enroll_tag(d);

    std::size_t sampled = 0;
    std::vector<std::string> problems;
    auto shape_of = [&](const Bytes& raw) {
        auto f = parse_frame(raw);
        if (!f) return std::string("unparseable");
        ++sampled;
        return frame_shape(*f, width);
    };
    auto verdict = [&](const std::string& bucket, const std::set<std::string>& shapes) {
        if (shapes.size() != 1) problems.push_back(bucket);
    };

    // Challenge replies: honest answer to a known domain vs the fake sent to
    // a stranger. The tag must answer both, identically shaped.
    {
        std::set<std::string> shapes;
        for (std::size_t i = 0; i < per_bucket; ++i) {
            auto honest = w.tag(t).receive(encode_frame({FrameType::hello, to_bytes(d)}));
            auto decoy = w.tag(t).receive(
                encode_frame({FrameType::hello, labeled_id_bytes("stranger")}));
            if (honest) shapes.insert(shape_of(*honest));
            if (decoy) shapes.insert(shape_of(*decoy));
        }
        verdict("hello replies", shapes);
    }

    // Handshake finishers: honest final message vs the fake emitted when the
    // request fails authentication (and when no challenge is outstanding).
    {
        std::set<std::string> shapes;
        Rng junk = w.fork_rng(0x6A);
        ReaderCredentials bad = w.office().reader_credentials(d);
        bad.master_key = Key(16, 0xEE); // impostor: right epochs, wrong master
        Reader impostor(grp, w.fork_rng(0x1B), bad);
        // A failed verification suspends the entry, so restore it after
        // every impostor attempt to keep the honest samples flowing.
        EnrollMaterial home = w.office().enrollment_material(d, w.tag_true_id(t));
        const std::size_t stray_size = w.reader(r).auth_request_body_size();
        for (std::size_t i = 0; i < per_bucket; ++i) {
            Channel ch = w.channel(t);
            if (w.reader(r).authenticate(ch, w.clock().now()) == AuthOutcome::ok)
                shapes.insert(shape_of(ch.transcript().at(3).frame));
            w.reader(r).stop(ch);
            if (i % 2 == 0) {
                Channel ch2 = w.channel(t);
                impostor.authenticate(ch2, w.clock().now());
                shapes.insert(shape_of(ch2.transcript().at(3).frame));
                w.tag(t).provision_entry(home.domain, home.encid, 0, home.kta, true);
            } else {
                // No outstanding challenge: the tag still answers in shape.
                auto stray = w.tag(t).receive(
                    encode_frame({FrameType::auth_request, junk.bytes(stray_size)}));
                if (stray) shapes.insert(shape_of(*stray));
            }
        }
        verdict("handshake finishers", shapes);
    }

    // Call results: honest grant/revoke results vs the fakes produced for
    // stray or MAC-failing parameter frames.
    {
        std::set<std::string> shapes;
        Rng junk = w.fork_rng(0x6B);
        for (std::size_t i = 0; i < per_bucket; ++i) {
            Channel ch = w.channel(t);
            if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok) continue;
            std::size_t before = ch.transcript().size();
            w.reader(r).grant_access(ch, labeled_id<DomainId>("friend"));
            shapes.insert(shape_of(ch.transcript().at(before + 2).frame));
            // Stray params with no header pending: fake result comes back.
            auto decoy = ch.adversary_send(encode_frame(
                {FrameType::call_params,
                 auth_encrypt(w.tag(t).session_key(), junk.bytes(20), junk)}));
            if (decoy) shapes.insert(shape_of(*decoy));
            // Params failing the integrity check: poison plus fake result.
            auto poisoned = ch.adversary_send(encode_frame({FrameType::call_params,
                                                            junk.bytes(64)}));
            if (poisoned) shapes.insert(shape_of(*poisoned));
            w.reader(r).stop(ch);
        }
        verdict("call results", shapes);
    }

    // Reader-side handshake requests: the honest third message vs the random
    // one the reader sends when the tag's ciphertext fails its key check.
    {
        std::set<std::string> shapes;
        const DomainId other = w.add_domain("elsewhere");
        std::size_t foreign = w.add_reader(other);
        for (std::size_t i = 0; i < per_bucket; ++i) {
            Channel ch = w.channel(t);
            if (w.reader(r).authenticate(ch, w.clock().now()) == AuthOutcome::ok)
                shapes.insert(shape_of(ch.transcript().at(2).frame));
            w.reader(r).stop(ch);
            Channel ch2 = w.channel(t);
            w.reader(foreign).authenticate(ch2, w.clock().now());
            if (ch2.transcript().size() > 2)
                shapes.insert(shape_of(ch2.transcript().at(2).frame));
        }
        verdict("handshake requests", shapes);
    }

    bool pass = problems.empty() && sampled >= 1000;
    std::string detail = std::to_string(sampled) + " frames sampled";
    for (const auto& p : problems) detail += ", shape split in " + p;
    return {"decoy shape identity", pass, detail};
}

// The scripted walkthroughs, across seeds, at full key size, under a time
// budget: every named claim in every story must hold.
inline PropertyResult check_scenario_scripts(const Group& grp, std::uint64_t seeds = 10,
                                             double budget_seconds = 60.0,
                                             std::uint64_t base_seed = 0) {
    detail::Stopwatch clock;
    std::size_t stories = 0, claims = 0, failed = 0;
    std::string first_failure;
    for (std::uint64_t seed = 0; seed < seeds; ++seed)
        for (const auto& name : scenario_names()) {
            ScenarioResult res = run_scenario(name, grp, base_seed + seed);
            ++stories;
            claims += res.checks.size();
            for (const auto& c : res.checks)
                if (!c.passed) {
                    ++failed;
                    if (first_failure.empty())
                        first_failure = name + " seed " + std::to_string(seed) + ": " + c.name;
                }
        }
    double elapsed = clock.seconds();
    bool pass = failed == 0 && elapsed < budget_seconds;
    std::string detail = std::to_string(stories) + " stories, " + std::to_string(claims) +
                         " claims, " + std::to_string(failed) + " failed, " +
                         detail::format_seconds(elapsed);
    if (!first_failure.empty()) detail += " (first: " + first_failure + ")";
    return {"scenario scripts", pass, detail};
}

// Work profile: the reader's public-key operation count per authentication
// is one fixed number regardless of how many tags are enrolled, and the tag
// itself performs zero public-key operations to authenticate and serve.
inline PropertyResult check_pk_op_profile(std::size_t sample_auths = 5,
                                          std::uint64_t seed = 0xC8) {
    const Group& grp = toy_group();
    std::set<std::uint64_t> per_auth_costs;
    std::uint64_t tag_side_ops = 0;
    for (std::size_t population : {10u, 100u, 1000u}) {
        World w(grp, seed + population);
        const DomainId d = w.add_domain("fleet");
        std::size_t r = w.add_reader(d);
        for (std::size_t i = 0; i < population; ++i) w.enroll_tag(d);
        for (std::size_t i = 0; i < sample_auths; ++i) {
            std::size_t pick = (i * 97) % population;
            Channel ch = w.channel(pick);
            std::uint64_t before = w.reader(r).pk_ops();
            if (w.reader(r).authenticate(ch, w.clock().now()) != AuthOutcome::ok)
                return {"constant reader work", false, "honest authentication failed"};
            w.reader(r).grant_access(ch, labeled_id<DomainId>("guest"));
            w.reader(r).stop(ch);
            per_auth_costs.insert(w.reader(r).pk_ops() - before);
            tag_side_ops += w.tag(pick).pk_ops();
        }
    }
    bool pass = per_auth_costs.size() == 1 && *per_auth_costs.begin() > 0 && tag_side_ops == 0;
    std::string costs;
    for (auto c : per_auth_costs) costs += (costs.empty() ? "" : "/") + std::to_string(c);
    return {"constant reader work", pass,
            "per-auth reader cost " + costs + " across 10/100/1000 tags, tag-side ops " +
                std::to_string(tag_side_ops)};
}

// The full gate, in criterion order.
inline std::vector<PropertyResult> run_all_properties(const Group& big_group) {
    return {
        check_crypto_roundtrips(),
        check_session_agreement(),
        check_identifier_refresh(big_group),
        check_epoch_lockout(big_group),
        check_call_counting(),
        check_decoy_shapes(),
        check_scenario_scripts(big_group),
        check_pk_op_profile(),
    };
}

} // namespace tagacl
