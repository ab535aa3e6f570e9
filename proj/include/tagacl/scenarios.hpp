#pragma once

#include <functional>

#include "tagacl/world.hpp"

namespace tagacl {

// Scripted end-to-end walkthroughs. Each runs a deterministic story against
// a fresh world and returns one named check per claim the story makes, so a
// harness can count exactly which step broke.
struct ScenarioCheck {
    std::string name;
    bool passed = false;
};

// Optional adversary: consulted once per channel the script opens (with the
// channel's ordinal) and returns the single action scheduled against it.
using AdversaryPlan = std::function<Policy(std::size_t channel_index)>;

struct ScenarioResult {
    std::string name;
    std::vector<ScenarioCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.passed) ++n;
        return n;
    }
};

namespace detail {

// Shared scenario plumbing: a world, a check recorder, an optional
// transcript sink fed by every channel the script opens, and an optional
// adversary plan deciding each channel's scheduled action.
struct Script {
    World w;
    ScenarioResult res;
    std::vector<FlightRecord>* sink;
    AdversaryPlan plan;
    std::size_t opened = 0;

    Script(const Group& grp, std::uint64_t seed, std::string name,
           std::vector<FlightRecord>* transcript, AdversaryPlan adversary)
        : w(grp, seed), sink(transcript), plan(std::move(adversary)) {
        res.name = std::move(name);
    }

    void check(const std::string& name, bool passed) { res.checks.push_back({name, passed}); }

    Channel open(std::size_t tag_index) {
        Policy pol = plan ? plan(opened) : Policy{};
        ++opened;
        return w.channel(tag_index, pol);
    }

    void close(Channel& ch) {
        if (!sink) return;
        for (const auto& rec : ch.transcript()) sink->push_back(rec);
    }

    Timestamp now() { return w.clock().now(); }
    Timestamp horizon() { return w.clock().peek() + 100000; }
};

} // namespace detail

// A product's life: built, sold through a retailer, serviced after the sale.
// Ownership moves twice; access outlives ownership only where granted; the
// permission token issued at build time still opens the service record for
// whoever legitimately holds it.
inline ScenarioResult run_supply_chain(const Group& grp, std::uint64_t seed,
                                       std::vector<FlightRecord>* transcript = nullptr,
                                       AdversaryPlan adversary = {}) {
    detail::Script s(grp, seed, "supply-chain", transcript, std::move(adversary));
    World& w = s.w;
    Backoffice& office = w.office();

    const DomainId maker = w.add_domain("maker");
    const DomainId retailer = w.add_domain("retailer");
    const DomainId customer = w.add_domain("customer");
    const DomainId shop = w.add_domain("repair-shop");
    std::size_t rm = w.add_reader(maker);
    std::size_t rr = w.add_reader(retailer);
    std::size_t rc = w.add_reader(customer);
    std::size_t rs = w.add_reader(shop);
    std::size_t t = w.add_tag();

    ClassId svc = labeled_id<ClassId>("service-record");
    Key svc_key(16, 0x5E);
    ClassId retail = labeled_id<ClassId>("retail-data");
    Key retail_key(16, 0x4E);

    // 01: the manufacturer claims the factory-fresh tag over the open key.
    {
        Channel ch = s.open(t);
        w.reader(rm).open_bottom_session();
        auto m = office.enrollment_material(maker, w.tag_true_id(t));
        s.check("01 manufacturer takes ownership of the fresh tag",
                w.reader(rm).take_ownership(ch, m, s.now()) &&
                    w.tag(t).owner() == std::optional<DomainId>(maker));
        s.close(ch);
    }
    // 02-04: authenticated build step: install the service record, write it.
    {
        Channel ch = s.open(t);
        s.check("02 manufacturer authenticates",
                w.reader(rm).authenticate(ch, s.now()) == AuthOutcome::ok);
        s.check("03 manufacturer installs the service record object",
                w.reader(rm).install_object(ch, svc, svc_key,
                                            {{labeled_id_bytes("built"), labeled_id_bytes("batch-7")}}));
        office.record_class_key(svc, svc_key);
        const TokenRecord wt = office.issue_token(svc, kWriteField, maker, s.horizon());
        s.check("04 manufacturer writes the inspection field under its own token",
                w.reader(rm).write_field(ch, svc, labeled_id_bytes("inspected"),
                                         labeled_id_bytes("pass"), wt.expiry, wt.token));
        w.reader(rm).stop(ch);
        s.close(ch);
    }
    // 05: a party with no standing gets nothing but decoys.
    {
        Channel ch = s.open(t);
        s.check("05 retailer cannot authenticate before the handover",
                w.reader(rr).authenticate(ch, s.now()) != AuthOutcome::ok);
        s.close(ch);
    }
    // 06: ownership handover to the retailer inside one relay session.
    {
        Channel ch = s.open(t);
        bool ok = w.reader(rm).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rm).transfer_ownership(ch);
        w.reader(rr).adopt_session(w.reader(rm).handoff());
        ok = ok &&
             w.reader(rr).take_ownership(
                 ch, office.enrollment_material(retailer, w.tag_true_id(t)), s.now()) &&
             w.tag(t).owner() == std::optional<DomainId>(retailer);
        w.reader(rr).stop(ch);
        s.check("06 ownership transfers to the retailer", ok);
        s.close(ch);
    }
    // 07-08: the retailer runs its own business on the tag.
    {
        Channel ch = s.open(t);
        s.check("07 retailer authenticates as the new owner",
                w.reader(rr).authenticate(ch, s.now()) == AuthOutcome::ok);
        office.record_class_key(retail, retail_key);
        const TokenRecord wt = office.issue_token(retail, kWriteField, retailer, s.horizon());
        s.check("08 retailer installs and fills its own object",
                w.reader(rr).install_object(ch, retail, retail_key,
                                            {{labeled_id_bytes("sku"), labeled_id_bytes("778")}}) &&
                    w.reader(rr).write_field(ch, retail, labeled_id_bytes("price"),
                                             labeled_id_bytes("1999"), wt.expiry, wt.token));
        w.reader(rr).stop(ch);
        s.close(ch);
    }
    // 09: the manufacturer is out after the transfer.
    {
        Channel ch = s.open(t);
        s.check("09 manufacturer can no longer authenticate",
                w.reader(rm).authenticate(ch, s.now()) != AuthOutcome::ok);
        s.close(ch);
    }
    // 10: the retailer re-admits the manufacturer for service duty.
    {
        Channel ch = s.open(t);
        bool ok = w.reader(rr).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rr).grant_access(ch, maker) &&
                  w.reader(rr).accept_access(
                      ch, office.enrollment_material(maker, w.tag_true_id(t)));
        w.reader(rr).stop(ch);
        s.check("10 retailer grants the manufacturer access again", ok);
        s.close(ch);
    }
    // 11-12: granted access opens exactly the granted object.
    {
        Channel ch = s.open(t);
        const TokenRecord rt = office.issue_token(svc, kReadField, maker, s.horizon());
        bool auth = w.reader(rm).authenticate(ch, s.now()) == AuthOutcome::ok;
        auto val = w.reader(rm).read_field(ch, svc, labeled_id_bytes("built"), rt.expiry,
                                           rt.token);
        s.check("11 manufacturer reads the service record it was granted",
                auth && val == std::optional<Bytes>(labeled_id_bytes("batch-7")));
        s.close(ch);
    }
    {
        Channel ch = s.open(t);
        bool auth = w.reader(rm).authenticate(ch, s.now()) == AuthOutcome::ok;
        // A token under the service key does not open the retail object.
        Timestamp exp = s.horizon();
        Bytes wrong = mint_token(svc_key, kReadField, to_bytes(maker), exp);
        auto val = w.reader(rm).read_field(ch, retail, labeled_id_bytes("sku"), exp, wrong);
        s.check("12 manufacturer's token does not open the retail object",
                auth && !val.has_value());
        s.close(ch);
    }
    // 13: sale to the customer: update, then hand over.
    {
        Channel ch = s.open(t);
        const TokenRecord ut = office.issue_token(retail, kUpdateObject, retailer, s.horizon());
        bool ok = w.reader(rr).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rr).update_object(
                      ch, retail, {{labeled_id_bytes("state"), labeled_id_bytes("sold")}},
                      ut.expiry, ut.token) &&
                  w.reader(rr).transfer_ownership(ch);
        w.reader(rc).adopt_session(w.reader(rr).handoff());
        ok = ok &&
             w.reader(rc).take_ownership(
                 ch, office.enrollment_material(customer, w.tag_true_id(t)), s.now()) &&
             w.tag(t).owner() == std::optional<DomainId>(customer);
        w.reader(rc).stop(ch);
        s.check("13 retailer closes out the sale and the customer takes over", ok);
        s.close(ch);
    }
    // 14: the customer's repair shop uses the manufacturer-keyed token.
    {
        Channel ch = s.open(t);
        bool ok = w.reader(rc).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rc).grant_access(ch, shop) &&
                  w.reader(rc).accept_access(
                      ch, office.enrollment_material(shop, w.tag_true_id(t)));
        w.reader(rc).stop(ch);
        Channel ch2 = s.open(t);
        const TokenRecord st = office.issue_token(svc, kReadField, shop, s.horizon());
        ok = ok && w.reader(rs).authenticate(ch2, s.now()) == AuthOutcome::ok;
        auto val = w.reader(rs).read_field(ch2, svc, labeled_id_bytes("inspected"),
                                           st.expiry, st.token);
        s.check("14 repair shop reads service history with a maker-keyed token",
                ok && val == std::optional<Bytes>(labeled_id_bytes("pass")));
        s.close(ch);
        s.close(ch2);
    }
    return s.res;
}

// Event tickets: the issuer locks down the factory management key before the
// ticket ships, venues act through tokens rather than ownership, and the
// holder's privacy maintenance does not break anyone's access.
inline ScenarioResult run_tickets(const Group& grp, std::uint64_t seed,
                                  std::vector<FlightRecord>* transcript = nullptr,
                                  AdversaryPlan adversary = {}) {
    detail::Script s(grp, seed, "tickets", transcript, std::move(adversary));
    World& w = s.w;
    Backoffice& office = w.office();

    const DomainId issuer = w.add_domain("issuer");
    const DomainId holder = w.add_domain("holder");
    const DomainId venue_a = w.add_domain("venue-a");
    const DomainId venue_b = w.add_domain("venue-b");
    std::size_t ri = w.add_reader(issuer);
    std::size_t rh = w.add_reader(holder);
    std::size_t ra = w.add_reader(venue_a);
    std::size_t rb = w.add_reader(venue_b);
    std::size_t t = w.add_tag();

    Key issuer_mgmt(16, 0x1C);

    // 01: issuer claims the ticket and rotates out the factory key.
    {
        Channel ch = s.open(t);
        w.reader(ri).open_bottom_session();
        bool ok = w.reader(ri).take_ownership(
            ch, office.enrollment_material(issuer, w.tag_true_id(t)), s.now());
        s.check("01 issuer takes ownership of the blank ticket", ok);
        s.close(ch);
    }
    {
        Channel ch = s.open(t);
        bool auth = w.reader(ri).authenticate(ch, s.now()) == AuthOutcome::ok;
        office.record_class_key(management_class_id(), default_management_key());
        const TokenRecord rot =
            office.issue_token(management_class_id(), kUpdateClassKey, issuer, s.horizon());
        bool ok = auth && w.reader(ri).update_class_key(ch, management_class_id(),
                                                        issuer_mgmt, rot.expiry, rot.token);
        w.reader(ri).stop(ch);
        s.check("02 issuer rotates the factory management key to its own", ok);
        s.close(ch);
        office.record_class_key(management_class_id(), issuer_mgmt);
    }
    // 03: anything still minted under the factory key bounces.
    {
        Channel ch = s.open(t);
        bool auth = w.reader(ri).authenticate(ch, s.now()) == AuthOutcome::ok;
        Timestamp exp = s.horizon();
        Bytes stale = mint_token(default_management_key(), kInstallObject, to_bytes(issuer), exp);
        bool refused = !w.reader(ri).install_object(ch, labeled_id<ClassId>("sneak"), Key(16, 1),
                                                    {}, exp, stale);
        s.check("03 factory-key tokens are dead after the rotation", auth && refused);
        s.close(ch);
    }
    // 04: the ticket goes to its holder.
    {
        Channel ch = s.open(t);
        bool ok = w.reader(ri).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(ri).transfer_ownership(ch);
        w.reader(rh).adopt_session(w.reader(ri).handoff());
        ok = ok &&
             w.reader(rh).take_ownership(
                 ch, office.enrollment_material(holder, w.tag_true_id(t)), s.now()) &&
             w.tag(t).owner() == std::optional<DomainId>(holder);
        w.reader(rh).stop(ch);
        s.check("04 ticket transfers to the holder", ok);
        s.close(ch);
    }
    // 05: the holder admits venue A, which can then authenticate.
    {
        Channel ch = s.open(t);
        bool ok = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rh).grant_access(ch, venue_a) &&
                  w.reader(rh).accept_access(
                      ch, office.enrollment_material(venue_a, w.tag_true_id(t))) &&
                  w.reader(rh).grant_access(ch, venue_b) &&
                  w.reader(rh).accept_access(
                      ch, office.enrollment_material(venue_b, w.tag_true_id(t)));
        w.reader(rh).stop(ch);
        Channel ch2 = s.open(t);
        ok = ok && w.reader(ra).authenticate(ch2, s.now()) == AuthOutcome::ok;
        w.reader(ra).stop(ch2);
        s.check("05 both venues are admitted and venue A authenticates", ok);
        s.close(ch);
        s.close(ch2);
    }
    // 06: venue A stamps the ticket with an issuer-minted install token, the
    // or-gate in action: not the owner, but carrying a valid token.
    {
        Channel ch = s.open(t);
        const TokenRecord it =
            office.issue_token(management_class_id(), kInstallObject, venue_a, s.horizon());
        bool ok = w.reader(ra).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(ra).install_object(ch, labeled_id<ClassId>("entry-stamp"),
                                              Key(16, 0xA5),
                                              {{labeled_id_bytes("gate"), labeled_id_bytes("A3")}},
                                              it.expiry, it.token);
        w.reader(ra).stop(ch);
        s.check("06 venue A installs its stamp with an issuer token", ok);
        s.close(ch);
    }
    // 07: venue B, with access but no token, cannot install.
    {
        Channel ch = s.open(t);
        bool auth = w.reader(rb).authenticate(ch, s.now()) == AuthOutcome::ok;
        bool refused = !w.reader(rb).install_object(ch, labeled_id<ClassId>("b-stamp"),
                                                    Key(16, 0xB5), {});
        s.check("07 venue B without a token cannot install", auth && refused);
        w.reader(rb).stop(ch);
        s.close(ch);
    }
    // 08: a token minted under a made-up key poisons the session.
    {
        Channel ch = s.open(t);
        bool auth = w.reader(rb).authenticate(ch, s.now()) == AuthOutcome::ok;
        Timestamp exp = s.horizon();
        Bytes forged = mint_token(Key(16, 0xFF), kInstallObject, to_bytes(venue_b), exp);
        bool refused = !w.reader(rb).install_object(ch, labeled_id<ClassId>("b-stamp"),
                                                    Key(16, 0xB5), {}, exp, forged);
        s.check("08 forged-key tokens are refused", auth && refused);
        s.close(ch);
    }
    // 09-10: privacy maintenance by the holder leaves everyone working.
    {
        Channel ch = s.open(t);
        EncryptedId before = w.tag(t).encid_of(venue_a);
        bool ok = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rh).reencrypt_all(ch);
        w.reader(rh).stop(ch);
        s.check("09 holder re-randomizes every stored ciphertext",
                ok && w.tag(t).encid_of(venue_a) != before);
        Channel ch2 = s.open(t);
        s.check("10 venue A still authenticates after the maintenance",
                w.reader(ra).authenticate(ch2, s.now()) == AuthOutcome::ok);
        s.close(ch);
        s.close(ch2);
    }
    return s.res;
}

// Hospital equipment: per-tag class keys mean a vendor's key rotation on one
// device does not touch its siblings, and delegated read tokens die with
// either the key rotation or their own expiry.
inline ScenarioResult run_hospital(const Group& grp, std::uint64_t seed,
                                   std::vector<FlightRecord>* transcript = nullptr,
                                   AdversaryPlan adversary = {}) {
    detail::Script s(grp, seed, "hospital", transcript, std::move(adversary));
    World& w = s.w;
    Backoffice& office = w.office();

    const DomainId hospital = w.add_domain("hospital");
    const DomainId vendor = w.add_domain("vendor");
    const DomainId nurses = w.add_domain("nurse-station");
    std::size_t rh = w.add_reader(hospital);
    std::size_t rv = w.add_reader(vendor);
    std::size_t rn = w.add_reader(nurses);
    std::size_t t1 = w.enroll_tag(hospital);
    std::size_t t2 = w.enroll_tag(hospital);
    std::size_t t3 = w.enroll_tag(hospital);

    ClassId mon = labeled_id<ClassId>("monitor");
    Key k_mon(16, 0x3A);
    Key k_vendor(16, 0x3B);

    // 01: the monitor object goes onto all three devices.
    {
        bool ok = true;
        for (std::size_t t : {t1, t2, t3}) {
            Channel ch = s.open(t);
            ok = ok && w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                 w.reader(rh).install_object(
                     ch, mon, k_mon, {{labeled_id_bytes("status"), labeled_id_bytes("ok")}});
            w.reader(rh).stop(ch);
            s.close(ch);
        }
        office.record_class_key(mon, k_mon);
        s.check("01 hospital installs the monitor object on all three devices", ok);
    }
    // 02: the hospital reads its own telemetry.
    const TokenRecord hosp_read = office.issue_token(mon, kReadField, hospital, s.horizon());
    {
        Channel ch = s.open(t1);
        bool auth = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok;
        auto val = w.reader(rh).read_field(ch, mon, labeled_id_bytes("status"),
                                           hosp_read.expiry, hosp_read.token);
        w.reader(rh).stop(ch);
        s.check("02 hospital reads telemetry with its own token",
                auth && val == std::optional<Bytes>(labeled_id_bytes("ok")));
        s.close(ch);
    }
    // 03: the vendor is granted access to device one only.
    {
        Channel ch = s.open(t1);
        bool ok = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rh).grant_access(ch, vendor) &&
                  w.reader(rh).accept_access(
                      ch, office.enrollment_material(vendor, w.tag_true_id(t1)));
        w.reader(rh).stop(ch);
        Channel ch2 = s.open(t1);
        ok = ok && w.reader(rv).authenticate(ch2, s.now()) == AuthOutcome::ok;
        w.reader(rv).stop(ch2);
        s.check("03 vendor is granted device one and authenticates", ok);
        s.close(ch);
        s.close(ch2);
    }
    // 04: vendor rotates device one's class key for a maintenance window.
    {
        Channel ch = s.open(t1);
        const TokenRecord rot = office.issue_token(mon, kUpdateClassKey, vendor, s.horizon());
        bool ok = w.reader(rv).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rv).update_class_key(ch, mon, k_vendor, rot.expiry, rot.token);
        w.reader(rv).stop(ch);
        s.check("04 vendor rotates the monitor key on device one", ok);
        s.close(ch);
    }
    // 05-06: the hospital's token is dead on device one, alive on device two.
    {
        Channel ch = s.open(t1);
        bool auth = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok;
        auto val = w.reader(rh).read_field(ch, mon, labeled_id_bytes("status"),
                                           hosp_read.expiry, hosp_read.token);
        s.check("05 hospital token no longer opens device one", auth && !val.has_value());
        s.close(ch);
    }
    {
        Channel ch = s.open(t2);
        bool auth = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok;
        auto val = w.reader(rh).read_field(ch, mon, labeled_id_bytes("status"),
                                           hosp_read.expiry, hosp_read.token);
        w.reader(rh).stop(ch);
        s.check("06 same token still opens device two: keys are per tag",
                auth && val == std::optional<Bytes>(labeled_id_bytes("ok")));
        s.close(ch);
    }
    // 07: the vendor delegates a read to the nurse station under its key.
    {
        Channel ch = s.open(t1);
        bool ok = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rh).grant_access(ch, nurses) &&
                  w.reader(rh).accept_access(
                      ch, office.enrollment_material(nurses, w.tag_true_id(t1)));
        w.reader(rh).stop(ch);
        office.record_class_key(mon, k_vendor); // the key the vendor now uses
        const TokenRecord nt = office.issue_token(mon, kReadField, nurses, s.horizon());
        Channel ch2 = s.open(t1);
        bool auth = w.reader(rn).authenticate(ch2, s.now()) == AuthOutcome::ok;
        auto val =
            w.reader(rn).read_field(ch2, mon, labeled_id_bytes("status"), nt.expiry, nt.token);
        w.reader(rn).stop(ch2);
        s.check("07 nurse station reads device one via the vendor-keyed token",
                ok && auth && val == std::optional<Bytes>(labeled_id_bytes("ok")));
        s.close(ch);
        s.close(ch2);
    }
    // 08-09: rotation back to the hospital key kills the delegated token.
    {
        Channel ch = s.open(t1);
        Timestamp exp = s.horizon();
        Bytes rot = mint_token(k_vendor, kUpdateClassKey, to_bytes(vendor), exp);
        bool ok = w.reader(rv).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rv).update_class_key(ch, mon, k_mon, exp, rot);
        w.reader(rv).stop(ch);
        office.record_class_key(mon, k_mon);
        s.check("08 vendor hands the key back after maintenance", ok);
        s.close(ch);
    }
    {
        Channel ch = s.open(t1);
        bool auth = w.reader(rn).authenticate(ch, s.now()) == AuthOutcome::ok;
        Timestamp exp = s.horizon();
        Bytes stale = mint_token(k_vendor, kReadField, to_bytes(nurses), exp);
        auto val = w.reader(rn).read_field(ch, mon, labeled_id_bytes("status"), exp, stale);
        s.check("09 the vendor-keyed nurse token is dead after the rollback",
                auth && !val.has_value());
        s.close(ch);
    }
    // 10-11: a short-lived token on device three works, then expires.
    Timestamp short_expiry = w.clock().peek() + 40;
    const TokenRecord st = office.issue_token(mon, kReadField, nurses, short_expiry);
    {
        Channel ch = s.open(t3);
        bool ok = w.reader(rh).authenticate(ch, s.now()) == AuthOutcome::ok &&
                  w.reader(rh).grant_access(ch, nurses) &&
                  w.reader(rh).accept_access(
                      ch, office.enrollment_material(nurses, w.tag_true_id(t3)));
        w.reader(rh).stop(ch);
        Channel ch2 = s.open(t3);
        bool auth = w.reader(rn).authenticate(ch2, s.now()) == AuthOutcome::ok;
        auto val =
            w.reader(rn).read_field(ch2, mon, labeled_id_bytes("status"), st.expiry, st.token);
        w.reader(rn).stop(ch2);
        s.check("10 short-lived token reads device three before its deadline",
                ok && auth && val == std::optional<Bytes>(labeled_id_bytes("ok")));
        s.close(ch);
        s.close(ch2);
    }
    {
        w.clock().advance(1000); // past the token deadline
        Channel ch = s.open(t3);
        bool auth = w.reader(rn).authenticate(ch, s.now()) == AuthOutcome::ok;
        auto val =
            w.reader(rn).read_field(ch, mon, labeled_id_bytes("status"), st.expiry, st.token);
        s.check("11 the same token is refused once the clock passes its deadline",
                auth && !val.has_value());
        s.close(ch);
    }
    return s.res;
}

inline std::vector<std::string> scenario_names() {
    return {"supply-chain", "tickets", "hospital"};
}

inline ScenarioResult run_scenario(const std::string& name, const Group& grp,
                                   std::uint64_t seed,
                                   std::vector<FlightRecord>* transcript = nullptr,
                                   AdversaryPlan adversary = {}) {
    if (name == "supply-chain") return run_supply_chain(grp, seed, transcript, std::move(adversary));
    if (name == "tickets") return run_tickets(grp, seed, transcript, std::move(adversary));
    if (name == "hospital") return run_hospital(grp, seed, transcript, std::move(adversary));
    throw std::invalid_argument("unknown scenario: " + name);
}

} // namespace tagacl
