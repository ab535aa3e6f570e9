#include <gtest/gtest.h>

#include "tagacl/reader.hpp"

using namespace tagacl;

namespace {

struct CWorld {
    Group grp = toy_group();
    Rng tag_rng, reader_rng, setup;
    DomainId dom = labeled_id<DomainId>("acme");
    Key master = Key(16, 0x11);
    KeyPair eka0;
    BigInt t;
    Tag tag;
    Reader reader;

    explicit CWorld(std::uint64_t seed = 1)
        : tag_rng(seed),
          reader_rng(seed + 1),
          setup(seed + 2),
          eka0(generate_keypair(grp, setup)),
          t(random_tag_id(grp, setup)),
          tag(grp, tag_rng, 100),
          reader(grp, reader_rng, ReaderCredentials{dom, master, {eka0}}) {
        tag.provision_entry(dom, encrypt_id(grp, eka0.pk, t, setup), 0,
                            diversify_key(master, grp.encode(t)), true);
    }
};

TEST(channel, transcript_records_every_crossing_in_order) {
    CWorld w;
    Channel ch(w.tag);
    ASSERT_EQ(w.reader.authenticate(ch, 500), AuthOutcome::ok);
    const auto& log = ch.transcript();
    ASSERT_EQ(log.size(), 4u);
    EXPECT_EQ(log[0].dir, Direction::to_tag);
    EXPECT_EQ(log[1].dir, Direction::to_reader);
    EXPECT_EQ(log[2].dir, Direction::to_tag);
    EXPECT_EQ(log[3].dir, Direction::to_reader);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(log[i].index, i);
        EXPECT_TRUE(log[i].delivered);
    }
    EXPECT_EQ(parse_frame(log[0].frame)->type, FrameType::hello);
    EXPECT_EQ(parse_frame(log[3].frame)->type, FrameType::auth_reply);
    EXPECT_NE(log[2].note.find("auth: success"), std::string::npos);
}

TEST(channel, drop_policy_marks_frame_undelivered) {
    CWorld w;
    Policy p;
    p.kind = Policy::Kind::drop;
    p.at = 1; // the tag's hello reply
    Channel ch(w.tag, p);
    EXPECT_EQ(w.reader.authenticate(ch, 500), AuthOutcome::no_reply);
    const auto& log = ch.transcript();
    ASSERT_EQ(log.size(), 2u);
    EXPECT_TRUE(log[0].delivered);
    EXPECT_FALSE(log[1].delivered);
    EXPECT_NE(log[1].note.find("dropped"), std::string::npos);
    EXPECT_TRUE(ch.policy_fired());
}

TEST(channel, tamper_policy_flips_exactly_one_bit) {
    CWorld w;
    Policy p;
    p.kind = Policy::Kind::tamper;
    p.at = 0;
    p.bit = 19;
    Channel ch(w.tag, p);
    Bytes hello = encode_frame({FrameType::hello, to_bytes(w.dom)});
    ch.exchange(hello);
    const auto& sent = ch.transcript().at(0).frame;
    ASSERT_EQ(sent.size(), hello.size());
    std::size_t diff_bits = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        std::uint8_t x = sent[i] ^ hello[i];
        while (x) {
            diff_bits += x & 1;
            x >>= 1;
        }
    }
    EXPECT_EQ(diff_bits, 1u);
}

TEST(channel, replay_policy_adds_a_crossing_and_fires_once) {
    CWorld w;
    Policy p;
    p.kind = Policy::Kind::replay;
    p.at = 0;
    Channel ch(w.tag, p);
    Bytes hello = encode_frame({FrameType::hello, to_bytes(w.dom)});
    ch.exchange(hello); // duplicated
    ch.exchange(hello); // plain
    const auto& log = ch.transcript();
    // Run 1: hello, replayed hello, surplus reply, reply. Run 2: hello, reply.
    ASSERT_EQ(log.size(), 6u);
    EXPECT_NE(log[1].note.find("replayed"), std::string::npos);
    EXPECT_FALSE(log[2].delivered); // the second reply never reaches the reader
    EXPECT_TRUE(log[3].delivered);
    EXPECT_TRUE(log[4].delivered);
    EXPECT_TRUE(log[5].delivered);
}

TEST(channel, inject_policy_slips_a_frame_in_before_the_target) {
    CWorld w;
    Policy p;
    p.kind = Policy::Kind::inject;
    p.at = 0;
    p.payload = Bytes{0xde, 0xad};
    Channel ch(w.tag, p);
    Bytes hello = encode_frame({FrameType::hello, to_bytes(w.dom)});
    auto reply = ch.exchange(hello);
    EXPECT_TRUE(reply.has_value()); // the honest exchange still works
    const auto& log = ch.transcript();
    ASSERT_GE(log.size(), 3u);
    EXPECT_NE(log[0].note.find("injected"), std::string::npos);
    EXPECT_NE(log[0].note.find("unparseable"), std::string::npos);
    EXPECT_EQ(parse_frame(log[1].frame)->type, FrameType::hello);
}

TEST(channel, adversary_send_reply_never_reaches_the_reader) {
    CWorld w;
    Channel ch(w.tag);
    // A bogus hello from the adversary draws a decoy reply.
    auto reply = ch.adversary_send(
        encode_frame({FrameType::hello, to_bytes(labeled_id<DomainId>("evil"))}));
    ASSERT_TRUE(reply.has_value());
    const auto& log = ch.transcript();
    ASSERT_EQ(log.size(), 2u);
    EXPECT_NE(log[0].note.find("adversary"), std::string::npos);
    EXPECT_FALSE(log[1].delivered);
}

TEST(channel, decoy_frames_are_shape_identical_to_honest_ones) {
    // Honest run for reference shapes.
    CWorld honest(10);
    Channel hch(honest.tag);
    ASSERT_EQ(honest.reader.authenticate(hch, 500), AuthOutcome::ok);
    auto shape_of = [](const Group& g, const Bytes& raw) {
        auto f = parse_frame(raw);
        EXPECT_TRUE(f.has_value());
        return frame_shape(*f, g.element_width());
    };
    std::string honest_hello_reply = shape_of(honest.grp, hch.transcript()[1].frame);
    std::string honest_auth_reply = shape_of(honest.grp, hch.transcript()[3].frame);

    // Decoy hello reply: unknown domain.
    CWorld w(11);
    Channel ch(w.tag);
    auto d1 = ch.adversary_send(
        encode_frame({FrameType::hello, to_bytes(labeled_id<DomainId>("other"))}));
    ASSERT_TRUE(d1.has_value());
    EXPECT_EQ(shape_of(w.grp, *d1), honest_hello_reply);

    // Decoy handshake reply: wrong key on the third message.
    CWorld w2(12);
    Rng imp_rng(13);
    Reader impostor(w2.grp, imp_rng,
                    ReaderCredentials{w2.dom, Key(16, 0xEE), {w2.eka0}});
    Channel ch2(w2.tag);
    EXPECT_EQ(impostor.authenticate(ch2, 500), AuthOutcome::rejected);
    EXPECT_EQ(shape_of(w2.grp, ch2.transcript()[3].frame), honest_auth_reply);

    // Decoy call result: stray params with no header.
    CWorld w3(14);
    Channel ch3(w3.tag);
    ASSERT_EQ(w3.reader.authenticate(ch3, 500), AuthOutcome::ok);
    ASSERT_TRUE(w3.reader.grant_access(ch3, labeled_id<DomainId>("p")));
    std::string honest_result = shape_of(w3.grp, ch3.transcript()[6].frame);
    auto d3 = ch3.adversary_send(encode_frame({FrameType::call_params, Bytes(64, 3)}));
    ASSERT_TRUE(d3.has_value());
    EXPECT_EQ(shape_of(w3.grp, *d3), honest_result);
}

TEST(channel, policy_out_of_range_never_fires) {
    CWorld w;
    Policy p;
    p.kind = Policy::Kind::drop;
    p.at = 100;
    Channel ch(w.tag, p);
    EXPECT_EQ(w.reader.authenticate(ch, 500), AuthOutcome::ok);
    EXPECT_FALSE(ch.policy_fired());
}

} // namespace
