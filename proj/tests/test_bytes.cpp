#include <gtest/gtest.h>

#include "tagacl/bytes.hpp"

using namespace tagacl;

TEST(bytes, hex_roundtrip) {
    Bytes b{0x00, 0x01, 0xab, 0xff};
    EXPECT_EQ(to_hex(b), "0001abff");
    EXPECT_EQ(from_hex("0001abff"), b);
    EXPECT_EQ(from_hex("0001ABFF"), b);
    EXPECT_THROW(from_hex("abc"), std::invalid_argument);
    EXPECT_THROW(from_hex("zz"), std::invalid_argument);
}

TEST(bytes, big_endian_integers) {
    Bytes out;
    put_u16(out, 0x0102);
    put_u32(out, 0x03040506);
    put_u64(out, 0x0708090a0b0c0d0eULL);
    EXPECT_EQ(to_hex(out), "010203040506" "0708090a0b0c0d0e");
    ByteReader r(out);
    EXPECT_EQ(r.u16(), 0x0102);
    EXPECT_EQ(r.u32(), 0x03040506u);
    EXPECT_EQ(r.u64(), 0x0708090a0b0c0d0eULL);
    EXPECT_TRUE(r.done());
}

TEST(bytes, reader_rejects_short_reads) {
    Bytes b{1, 2, 3};
    ByteReader r(b);
    EXPECT_EQ(r.u16(), 0x0102);
    EXPECT_THROW(r.u16(), std::out_of_range);
    EXPECT_EQ(r.u8(), 3);
    EXPECT_TRUE(r.done());
}

TEST(bytes, xor_and_concat) {
    Bytes a{0xf0, 0x0f}, b{0xff, 0xff};
    EXPECT_EQ(xor_bytes(a, b), (Bytes{0x0f, 0xf0}));
    EXPECT_THROW(xor_bytes(a, Bytes{1}), std::invalid_argument);
    EXPECT_EQ(a + b, (Bytes{0xf0, 0x0f, 0xff, 0xff}));
}
