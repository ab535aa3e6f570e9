#include <gtest/gtest.h>

#include "tagacl/codec.hpp"
#include "tagacl/symmetric.hpp"

using namespace tagacl;

TEST(frame, encode_parse_roundtrip) {
    Frame f{FrameType::hello, Bytes(16, 0xaa)};
    Bytes raw = encode_frame(f);
    ASSERT_EQ(raw.size(), 19u);
    EXPECT_EQ(raw[0], 0x01);
    EXPECT_EQ(raw[1], 0x00);
    EXPECT_EQ(raw[2], 0x10);
    auto back = parse_frame(raw);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, f);
}

TEST(frame, parse_rejects_malformed) {
    EXPECT_FALSE(parse_frame({}).has_value());
    EXPECT_FALSE(parse_frame({0x01, 0x00}).has_value());
    EXPECT_FALSE(parse_frame({0x00, 0x00, 0x00}).has_value());      // bad type
    EXPECT_FALSE(parse_frame({0x09, 0x00, 0x00}).has_value());      // bad type
    EXPECT_FALSE(parse_frame({0x01, 0x00, 0x02, 0xaa}).has_value()); // short body
    Bytes long_body{0x01, 0x00, 0x01, 0xaa, 0xbb};                   // extra byte
    EXPECT_FALSE(parse_frame(long_body).has_value());
}

TEST(frame, shape_depends_on_type_and_length_only) {
    Rng rng(1);
    Frame a{FrameType::call_result, rng.bytes(64)};
    Frame b{FrameType::call_result, rng.bytes(64)};
    Frame c{FrameType::call_result, rng.bytes(80)};
    EXPECT_EQ(frame_shape(a, 1), frame_shape(b, 1));
    EXPECT_NE(frame_shape(a, 1), frame_shape(c, 1));
    Frame d{FrameType::auth_reply, rng.bytes(64)};
    EXPECT_NE(frame_shape(a, 1), frame_shape(d, 1));
}

TEST(codec, hello_reply_roundtrip_toy_and_desk) {
    Rng rng(2);
    for (const Group* grp : {&toy_group(), &desk_group()}) {
        KeyPair kp = generate_keypair(*grp, rng);
        HelloReplyBody m;
        m.encid = encrypt_id(*grp, kp.pk, random_tag_id(*grp, rng), rng);
        m.epoch = 7;
        m.nonce = rng.bytes(16);
        Bytes b = encode_hello_reply(*grp, m);
        EXPECT_EQ(b.size(), 4 * grp->element_width() + 4 + 16);
        auto back = parse_hello_reply(*grp, b);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(back->encid, m.encid);
        EXPECT_EQ(back->epoch, m.epoch);
        EXPECT_EQ(back->nonce, m.nonce);
        b.pop_back();
        EXPECT_FALSE(parse_hello_reply(*grp, b).has_value());
    }
}

TEST(codec, hello_reply_rejects_out_of_range_element) {
    // Width-1 toy elements make the range check reachable by tampering.
    const Group& grp = toy_group();
    Rng rng(3);
    HelloReplyBody m;
    m.encid = encrypt_id(grp, 8, 4, 5, 2);
    m.epoch = 0;
    m.nonce = rng.bytes(16);
    Bytes b = encode_hello_reply(grp, m);
    b[0] = 200; // >= p
    EXPECT_FALSE(parse_hello_reply(grp, b).has_value());
}

TEST(codec, auth_request_roundtrip) {
    const Group& grp = toy_group();
    Rng rng(4);
    AuthRequestPlain m;
    m.encid = encrypt_id(grp, 8, 4, 5, 2);
    m.epoch = 3;
    m.nonce_echo = rng.bytes(16);
    m.challenge = rng.bytes(16);
    m.timestamp = 123456789;
    m.key_share = rng.bytes(16);
    Bytes b = encode_auth_request(grp, m);
    EXPECT_EQ(b.size(), 4u + 4 + 16 + 16 + 8 + 16);
    auto back = parse_auth_request(grp, b);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->encid, m.encid);
    EXPECT_EQ(back->epoch, m.epoch);
    EXPECT_EQ(back->nonce_echo, m.nonce_echo);
    EXPECT_EQ(back->challenge, m.challenge);
    EXPECT_EQ(back->timestamp, m.timestamp);
    EXPECT_EQ(back->key_share, m.key_share);
    b.push_back(0);
    EXPECT_FALSE(parse_auth_request(grp, b).has_value());
}

TEST(codec, auth_reply_roundtrip) {
    Rng rng(5);
    AuthReplyPlain m{rng.bytes(16), rng.bytes(16)};
    Bytes b = encode_auth_reply(m);
    EXPECT_EQ(b.size(), 32u);
    auto back = parse_auth_reply(b);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->challenge_echo, m.challenge_echo);
    EXPECT_EQ(back->key_share, m.key_share);
    EXPECT_FALSE(parse_auth_reply(Bytes(31, 0)).has_value());
}

TEST(codec, call_header_roundtrip) {
    CallHeaderPlain m;
    m.counter = 9;
    m.class_id = management_class_id();
    m.method = kGrantAccess;
    m.token_expiry = 55;
    m.token = Bytes(kTokenSize, 0);
    Bytes b = encode_call_header(m);
    EXPECT_EQ(b.size(), 4u + 16 + 4 + 8 + kTokenSize);
    auto back = parse_call_header(b);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->counter, m.counter);
    EXPECT_EQ(back->class_id, m.class_id);
    EXPECT_EQ(back->method, m.method);
    EXPECT_EQ(back->token_expiry, m.token_expiry);
    EXPECT_EQ(back->token, m.token);
    m.token.pop_back();
    EXPECT_THROW(encode_call_header(m), std::invalid_argument);
    b.pop_back();
    EXPECT_FALSE(parse_call_header(b).has_value());
}

TEST(codec, call_params_and_result_roundtrip) {
    Rng rng(6);
    CallParamsPlain p{10, rng.bytes(23)};
    auto pb = encode_call_params(p);
    auto pback = parse_call_params(pb);
    ASSERT_TRUE(pback.has_value());
    EXPECT_EQ(pback->counter, 10u);
    EXPECT_EQ(pback->params, p.params);
    EXPECT_FALSE(parse_call_params(Bytes(3, 0)).has_value());

    CallResultPlain res{12, kStatusFail, rng.bytes(16)};
    auto rb = encode_call_result(res);
    auto rback = parse_call_result(rb);
    ASSERT_TRUE(rback.has_value());
    EXPECT_EQ(rback->counter, 12u);
    EXPECT_EQ(rback->status, kStatusFail);
    EXPECT_EQ(rback->payload, res.payload);
    EXPECT_FALSE(parse_call_result(Bytes(7, 0)).has_value());
}

TEST(codec, empty_params_allowed) {
    CallParamsPlain p{4, {}};
    auto back = parse_call_params(encode_call_params(p));
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(back->params.empty());
}
