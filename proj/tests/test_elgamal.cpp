#include <gtest/gtest.h>

#include "tagacl/elgamal.hpp"

using namespace tagacl;

// Hand-computed vectors in the toy group (p=23, q=11, g=2), sk=3, pk=8:
//   encrypt m=4 with x=5:  u = 4*8^5 = 18,  v = 2^5 = 9
//   factor with x'=2:      y = 8^2   = 18,  z = 2^2 = 4
//   decrypt: z^sk = 4^3 = 18 = y (factor ok), v^sk = 9^3 = 16, 18/16 = 4
TEST(elgamal, frozen_toy_vectors) {
    const Group& g = toy_group();
    EXPECT_EQ(g.pow(2, 3), 8); // pk for sk=3
    EncryptedId c = encrypt_id(g, 8, 4, 5, 2);
    EXPECT_EQ(c.u, 18);
    EXPECT_EQ(c.v, 9);
    EXPECT_EQ(c.y, 18);
    EXPECT_EQ(c.z, 4);
    auto m = decrypt_id(g, 3, c);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, 4);
}

TEST(elgamal, toy_roundtrip_exhaustive) {
    // Every message, every encryption exponent pair, every key.
    const Group& g = toy_group();
    for (BigInt sk = 1; sk <= 10; ++sk) {
        BigInt pk = g.pow(g.g(), sk);
        for (BigInt m = 0; m <= 10; ++m) {
            BigInt msg = g.pow(g.g(), m); // all 11 subgroup members
            for (BigInt x = 0; x <= 10; ++x) {
                for (BigInt xp = 1; xp <= 10; ++xp) {
                    auto got = decrypt_id(g, sk, encrypt_id(g, pk, msg, x, xp));
                    ASSERT_TRUE(got.has_value());
                    ASSERT_EQ(*got, msg);
                }
            }
        }
    }
}

TEST(elgamal, foreign_key_rejected_exhaustive) {
    // A bundle built for pk(sk) must fail the factor check under sk' != sk.
    // x' stays nonzero: x' = 0 gives the degenerate factor (1,1), which
    // passes under every key and is why the protocol never samples zero.
    const Group& g = toy_group();
    for (BigInt sk = 1; sk <= 10; ++sk) {
        BigInt pk = g.pow(g.g(), sk);
        for (BigInt xp = 1; xp <= 10; ++xp) {
            EncryptedId c = encrypt_id(g, pk, 4, 5, xp);
            for (BigInt other = 1; other <= 10; ++other) {
                if (other == sk) continue;
                ASSERT_FALSE(decrypt_id(g, other, c).has_value())
                    << "sk=" << sk << " other=" << other << " xp=" << xp;
            }
        }
    }
}

TEST(elgamal, degenerate_factor_passes_every_key) {
    // Documents the hazard the sampling rule avoids.
    const Group& g = toy_group();
    EncryptedId c = encrypt_id(g, 8, 4, 5, 0); // x' = 0 -> (y,z) = (1,1)
    EXPECT_EQ(c.y, 1);
    EXPECT_EQ(c.z, 1);
    for (BigInt sk = 1; sk <= 10; ++sk)
        EXPECT_TRUE(decrypt_id(g, sk, c).has_value());
}

TEST(elgamal, universal_reencrypt_preserves_plaintext_exhaustive) {
    const Group& g = toy_group();
    BigInt sk = 7, pk = g.pow(g.g(), sk);
    EncryptedId c = encrypt_id(g, pk, 9, 3, 4);
    for (BigInt a = 0; a <= 10; ++a) {
        for (BigInt ap = 1; ap <= 10; ++ap) {
            EncryptedId r = universal_reencrypt(g, c, a, ap);
            auto m = decrypt_id(g, sk, r);
            ASSERT_TRUE(m.has_value());
            ASSERT_EQ(*m, 9);
        }
    }
}

TEST(elgamal, universal_reencrypt_changes_bytes) {
    const Group& g = desk_group();
    Rng rng(99);
    KeyPair kp = generate_keypair(g, rng);
    BigInt t = random_tag_id(g, rng);
    EncryptedId c = encrypt_id(g, kp.pk, t, rng);
    int changed = 0;
    for (int i = 0; i < 50; ++i) {
        EncryptedId r = universal_reencrypt(g, c, rng);
        if (encode_encrypted_id(g, r) != encode_encrypted_id(g, c)) ++changed;
        auto m = decrypt_id(g, kp.sk, r);
        ASSERT_TRUE(m.has_value());
        ASSERT_EQ(*m, t);
        c = r;
    }
    EXPECT_EQ(changed, 50);
}

TEST(elgamal, keyed_reencrypt_fresh_and_decryptable) {
    const Group& g = toy_group();
    Rng rng(4);
    BigInt sk = 3, pk = 8;
    EncryptedId c = encrypt_id(g, pk, 4, 5, 2);
    for (int i = 0; i < 200; ++i) {
        EncryptedId r = keyed_reencrypt(g, pk, c, rng);
        auto m = decrypt_id(g, sk, r);
        ASSERT_TRUE(m.has_value());
        ASSERT_EQ(*m, 4);
    }
}

TEST(elgamal, decrypt_rejects_non_members) {
    const Group& g = toy_group();
    EncryptedId c = encrypt_id(g, 8, 4, 5, 2);
    EncryptedId bad = c;
    bad.u = 5; // 5 is not a quadratic residue mod 23
    EXPECT_FALSE(decrypt_id(g, 3, bad).has_value());
    bad = c;
    bad.z = 7;
    EXPECT_FALSE(decrypt_id(g, 3, bad).has_value());
}

TEST(elgamal, desk_roundtrip_and_foreign_reject) {
    const Group& g = desk_group();
    Rng rng(123);
    KeyPair kp = generate_keypair(g, rng);
    KeyPair other = generate_keypair(g, rng);
    ASSERT_NE(kp.sk, other.sk);
    for (int i = 0; i < 20; ++i) {
        BigInt t = random_tag_id(g, rng);
        EncryptedId c = encrypt_id(g, kp.pk, t, rng);
        auto m = decrypt_id(g, kp.sk, c);
        ASSERT_TRUE(m.has_value());
        ASSERT_EQ(*m, t);
        ASSERT_FALSE(decrypt_id(g, other.sk, c).has_value());
    }
}

TEST(elgamal, serialization_roundtrip) {
    const Group& g = desk_group();
    Rng rng(5);
    KeyPair kp = generate_keypair(g, rng);
    EncryptedId c = encrypt_id(g, kp.pk, random_tag_id(g, rng), rng);
    Bytes b = encode_encrypted_id(g, c);
    EXPECT_EQ(b.size(), 4 * 128u);
    EXPECT_EQ(decode_encrypted_id(g, b), c);
    b.push_back(0);
    EXPECT_THROW(decode_encrypted_id(g, b), std::invalid_argument);
}

TEST(elgamal, encrypt_rejects_non_member_plaintext) {
    const Group& g = toy_group();
    EXPECT_THROW(encrypt_id(g, 8, 5, 3, 4), std::invalid_argument);  // 5 not in G
    EXPECT_THROW(encrypt_id(g, 8, 0, 3, 4), std::invalid_argument);
}

TEST(elgamal, zero_randomness_structure) {
    // x = x' = 0 gives ((t, 1), (1, 1)): legal at this layer, never sampled
    // by the protocol.
    const Group& g = toy_group();
    EncryptedId c = encrypt_id(g, 8, 4, 0, 0);
    EXPECT_EQ(c.u, 4);
    EXPECT_EQ(c.v, 1);
    EXPECT_EQ(c.y, 1);
    EXPECT_EQ(c.z, 1);
    auto m = decrypt_id(g, 3, c);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(*m, 4);
}

TEST(elgamal, tag_ids_are_subgroup_members) {
    const Group& g = toy_group();
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        BigInt t = random_tag_id(g, rng);
        EXPECT_TRUE(g.is_member(t));
        EXPECT_NE(t, 0);
    }
}
