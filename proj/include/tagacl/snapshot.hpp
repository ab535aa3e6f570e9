#pragma once

#include <fstream>

#include "tagacl/world.hpp"

namespace tagacl {

// Whole-world serialization. The format is versioned and checksummed, every
// field is fixed-layout big-endian, and containers serialize in sorted
// order, so save(load(save(w))) is byte-identical to save(w).
struct snapshot_access {
    static constexpr std::uint32_t kVersion = 1;

    static const Bytes& magic() {
        static const Bytes m{'T', 'A', 'G', 'A', 'C', 'L', 'S', 'S'};
        return m;
    }

    // 64-bit FNV-1a over the payload; cheap tamper/corruption detection.
    static std::uint64_t checksum(const Bytes& b) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto x : b) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    static void put_big(Bytes& out, const BigInt& v) {
        Bytes raw;
        if (v != 0) boost::multiprecision::export_bits(v, std::back_inserter(raw), 8);
        put_u32(out, static_cast<std::uint32_t>(raw.size()));
        append(out, raw);
    }

    static BigInt get_big(ByteReader& r) {
        std::uint32_t n = r.u32();
        Bytes raw = r.take(n);
        BigInt v = 0;
        if (!raw.empty()) boost::multiprecision::import_bits(v, raw.begin(), raw.end(), 8);
        return v;
    }

    static void put_bytes(Bytes& out, const Bytes& b) {
        put_u32(out, static_cast<std::uint32_t>(b.size()));
        append(out, b);
    }

    static Bytes get_bytes(ByteReader& r) { return r.take(r.u32()); }

    template <std::size_t N>
    static void put_id(Bytes& out, const std::array<std::uint8_t, N>& id) {
        append(out, to_bytes(id));
    }

    template <std::size_t N = 16>
    static std::array<std::uint8_t, N> get_id(ByteReader& r) {
        return id_from_bytes<N>(r.take(N));
    }

    static void put_bool(Bytes& out, bool b) { out.push_back(b ? 1 : 0); }
    static bool get_bool(ByteReader& r) { return r.u8() != 0; }

    static void put_rng(Bytes& out, const Rng& rng) {
        put_u64(out, rng.seed());
        put_u64(out, rng.draws());
    }

    static Rng get_rng(ByteReader& r) {
        std::uint64_t seed = r.u64();
        std::uint64_t draws = r.u64();
        return Rng(seed, draws);
    }

    static void put_encid(Bytes& out, const EncryptedId& c) {
        put_big(out, c.u);
        put_big(out, c.v);
        put_big(out, c.y);
        put_big(out, c.z);
    }

    static EncryptedId get_encid(ByteReader& r) {
        EncryptedId c;
        c.u = get_big(r);
        c.v = get_big(r);
        c.y = get_big(r);
        c.z = get_big(r);
        return c;
    }

    static void put_keypair(Bytes& out, const KeyPair& kp) {
        put_big(out, kp.sk);
        put_big(out, kp.pk);
    }

    static KeyPair get_keypair(ByteReader& r) {
        KeyPair kp;
        kp.sk = get_big(r);
        kp.pk = get_big(r);
        return kp;
    }

    // --- tag ---

    static void put_tag(Bytes& out, const Tag& t) {
        put_u64(out, t.now_);
        put_u32(out, static_cast<std::uint32_t>(t.access_.size()));
        for (const auto& [d, e] : t.access_) {
            put_id(out, d);
            put_encid(out, e.encid);
            put_u32(out, e.epoch);
            put_bytes(out, e.kta);
            put_bool(out, e.owner);
            put_bool(out, e.pending);
        }
        put_u32(out, static_cast<std::uint32_t>(t.objects_.size()));
        for (const auto& [c, obj] : t.objects_) {
            put_id(out, c);
            put_bytes(out, obj.class_key);
            put_u32(out, static_cast<std::uint32_t>(obj.fields.size()));
            for (const auto& [name, value] : obj.fields) {
                put_bytes(out, name);
                put_bytes(out, value);
            }
        }
        put_bytes(out, t.session_.key);
        put_u32(out, t.session_.m);
        put_bool(out, t.session_.caller.has_value());
        if (t.session_.caller) put_id(out, *t.session_.caller);
        put_bool(out, t.session_.pending_hello.has_value());
        if (t.session_.pending_hello) {
            put_id(out, t.session_.pending_hello->first);
            put_bytes(out, t.session_.pending_hello->second);
        }
        put_bool(out, t.session_.pending_call.has_value());
        if (t.session_.pending_call) {
            const auto& h = *t.session_.pending_call;
            put_u32(out, h.counter);
            put_id(out, h.class_id);
            put_u32(out, h.method);
            put_u64(out, h.token_expiry);
            put_bytes(out, h.token);
        }
        put_bool(out, t.session_.token_verified);
        put_u64(out, t.exec_count_);
        put_u64(out, t.pk_ops_);
        put_rng(out, t.rng_);
    }

    static void get_tag(ByteReader& r, Tag& t) {
        t.now_ = r.u64();
        t.access_.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
            DomainId d = get_id(r);
            AccessEntry e;
            e.encid = get_encid(r);
            e.epoch = r.u32();
            e.kta = get_bytes(r);
            e.owner = get_bool(r);
            e.pending = get_bool(r);
            t.access_[d] = std::move(e);
        }
        t.objects_.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
            StoredObject obj;
            obj.class_id = get_id(r);
            obj.class_key = get_bytes(r);
            for (std::uint32_t j = 0, m = r.u32(); j < m; ++j) {
                Bytes name = get_bytes(r);
                obj.fields[name] = get_bytes(r);
            }
            t.objects_[obj.class_id] = std::move(obj);
        }
        t.session_ = Tag::Session{};
        t.session_.key = get_bytes(r);
        t.session_.m = r.u32();
        if (get_bool(r)) t.session_.caller = get_id(r);
        if (get_bool(r)) {
            DomainId d = get_id(r);
            Bytes nonce = get_bytes(r);
            t.session_.pending_hello = {d, nonce};
        }
        if (get_bool(r)) {
            CallHeaderPlain h;
            h.counter = r.u32();
            h.class_id = get_id(r);
            h.method = r.u32();
            h.token_expiry = r.u64();
            h.token = get_bytes(r);
            t.session_.pending_call = std::move(h);
        }
        t.session_.token_verified = get_bool(r);
        t.exec_count_ = r.u64();
        t.pk_ops_ = r.u64();
        t.rng_ = get_rng(r);
    }

    // --- reader ---

    static void put_reader(Bytes& out, const Reader& rd) {
        put_id(out, rd.creds_.domain);
        put_bytes(out, rd.creds_.master_key);
        put_u32(out, static_cast<std::uint32_t>(rd.creds_.epoch_keys.size()));
        for (const auto& kp : rd.creds_.epoch_keys) put_keypair(out, kp);
        put_bytes(out, rd.session_);
        put_bytes(out, rd.kta_);
        put_u32(out, rd.n_);
        put_bool(out, rd.open_);
        put_big(out, rd.tag_id_);
        put_u64(out, rd.pk_ops_);
        put_u64(out, rd.calls_issued_);
        put_u64(out, rd.calls_completed_);
        put_rng(out, rd.rng_);
    }

    static void get_reader(ByteReader& r, Reader& rd) {
        rd.creds_.domain = get_id(r);
        rd.creds_.master_key = get_bytes(r);
        rd.creds_.epoch_keys.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i)
            rd.creds_.epoch_keys.push_back(get_keypair(r));
        rd.session_ = get_bytes(r);
        rd.kta_ = get_bytes(r);
        rd.n_ = r.u32();
        rd.open_ = get_bool(r);
        rd.tag_id_ = get_big(r);
        rd.pk_ops_ = r.u64();
        rd.calls_issued_ = r.u64();
        rd.calls_completed_ = r.u64();
        rd.rng_ = get_rng(r);
    }

    // --- back office ---

    static void put_office(Bytes& out, const Backoffice& bo) {
        put_rng(out, bo.rng_);
        put_u32(out, static_cast<std::uint32_t>(bo.domains_.size()));
        for (const auto& [d, st] : bo.domains_) {
            put_id(out, d);
            put_bytes(out, st.master);
            put_u32(out, static_cast<std::uint32_t>(st.epoch_keys.size()));
            for (const auto& kp : st.epoch_keys) put_keypair(out, kp);
        }
        put_u32(out, static_cast<std::uint32_t>(bo.class_keys_.size()));
        for (const auto& [c, k] : bo.class_keys_) {
            put_id(out, c);
            put_bytes(out, k);
        }
        put_u32(out, static_cast<std::uint32_t>(bo.ledger_.size()));
        for (const auto& rec : bo.ledger_) {
            put_u64(out, rec.id);
            put_id(out, rec.cls);
            put_u32(out, rec.method);
            put_id(out, rec.grantee);
            put_u64(out, rec.expiry);
            put_bytes(out, rec.token);
        }
        put_u64(out, bo.next_record_);
    }

    static void get_office(ByteReader& r, Backoffice& bo) {
        bo.rng_ = get_rng(r);
        bo.domains_.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
            DomainId d = get_id(r);
            Backoffice::DomainState st;
            st.master = get_bytes(r);
            for (std::uint32_t j = 0, m = r.u32(); j < m; ++j)
                st.epoch_keys.push_back(get_keypair(r));
            bo.domains_.emplace(d, std::move(st));
        }
        bo.class_keys_.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
            ClassId c = get_id(r);
            bo.class_keys_[c] = get_bytes(r);
        }
        bo.ledger_.clear();
        for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
            TokenRecord rec;
            rec.id = r.u64();
            rec.cls = get_id(r);
            rec.method = r.u32();
            rec.grantee = get_id(r);
            rec.expiry = r.u64();
            rec.token = get_bytes(r);
            bo.ledger_.push_back(std::move(rec));
        }
        bo.next_record_ = r.u64();
    }

    // --- world ---

    static Bytes save(const World& w) {
        Bytes payload;
        put_big(payload, w.grp_.p());
        put_big(payload, w.grp_.q());
        put_big(payload, w.grp_.g());
        put_rng(payload, w.rng_);
        put_u64(payload, w.clock_.t_);
        put_office(payload, w.office_);
        put_u32(payload, static_cast<std::uint32_t>(w.tags_.size()));
        for (const auto& rec : w.tags_) {
            put_tag(payload, rec.tag);
            put_big(payload, rec.true_id);
        }
        put_u32(payload, static_cast<std::uint32_t>(w.readers_.size()));
        for (const auto& rec : w.readers_) {
            put_reader(payload, rec.reader);
            put_id(payload, rec.domain);
            put_bool(payload, rec.stolen);
        }

        Bytes out = magic();
        put_u32(out, kVersion);
        append(out, payload);
        put_u64(out, checksum(payload));
        return out;
    }

    static World load(const Group& grp, const Bytes& blob) {
        const std::size_t head = magic().size() + 4;
        if (blob.size() < head + 8 ||
            !std::equal(magic().begin(), magic().end(), blob.begin()))
            throw std::runtime_error("snapshot: bad magic");
        ByteReader hr(blob);
        hr.take(magic().size());
        std::uint32_t version = hr.u32();
        if (version != kVersion)
            throw std::runtime_error("snapshot: unsupported version " +
                                     std::to_string(version));
        Bytes payload(blob.begin() + static_cast<std::ptrdiff_t>(head), blob.end() - 8);
        Bytes tail(blob.end() - 8, blob.end());
        ByteReader cr(tail);
        if (checksum(payload) != cr.u64())
            throw std::runtime_error("snapshot: checksum mismatch");

        try {
            ByteReader r(payload);
            if (get_big(r) != grp.p() || get_big(r) != grp.q() || get_big(r) != grp.g())
                throw std::runtime_error("snapshot: saved under a different group");
            World w(grp, 0);
            w.rng_ = get_rng(r);
            w.clock_.t_ = r.u64();
            get_office(r, w.office_);
            w.tags_.clear();
            for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
                World::TagRecord rec{Tag(grp, Rng(0)), 0};
                get_tag(r, rec.tag);
                rec.true_id = get_big(r);
                w.tags_.push_back(std::move(rec));
            }
            w.readers_.clear();
            for (std::uint32_t i = 0, n = r.u32(); i < n; ++i) {
                KeyPair dummy;
                dummy.sk = 1;
                dummy.pk = 1;
                World::ReaderRecord rec{
                    Reader(grp, Rng(0), ReaderCredentials{{}, {}, {dummy}}), {}, false};
                get_reader(r, rec.reader);
                rec.domain = get_id(r);
                rec.stolen = get_bool(r);
                w.readers_.push_back(std::move(rec));
            }
            if (!r.done()) throw std::runtime_error("snapshot: trailing bytes");
            return w;
        } catch (const std::out_of_range&) {
            throw std::runtime_error("snapshot: truncated payload");
        }
    }
};

inline Bytes save_world(const World& w) { return snapshot_access::save(w); }

inline World load_world(const Group& grp, const Bytes& blob) {
    return snapshot_access::load(grp, blob);
}

inline void save_world_file(const World& w, const std::string& path) {
    Bytes blob = save_world(w);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(blob.data()),
            static_cast<std::streamsize>(blob.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline World load_world_file(const Group& grp, const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    Bytes blob((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return load_world(grp, blob);
}

} // namespace tagacl
