#include <doctest.h>

#include <set>

#include "starfree/starfree.hpp"

using namespace starfree;

namespace {
ClaimParams params(std::optional<std::size_t> m, std::optional<std::size_t> n) {
    ClaimParams p;
    p.m = m;
    p.n = n;
    return p;
}
}  // namespace

TEST_SUITE("verify-harness") {

TEST_CASE("claim ids") {
    CHECK(all_claim_ids().size() == 16);
    for (auto id : all_claim_ids()) {
        CHECK(parse_claim_id(to_string(id)) == id);
    }
    CHECK(parse_claim_id("thm6_star") == ClaimId::Thm6Star);
    CHECK_FALSE(parse_claim_id("thm7").has_value());
}

TEST_CASE("documented examples") {
    const auto thm2 = verify_claim(ClaimId::Thm2, params(4, 5));
    CHECK(thm2.expected == 112);
    CHECK(thm2.computed == 112);
    CHECK(thm2.status == Status::Pass);

    ClaimParams boolean = params(5, 7);
    boolean.op = Operation::Union;
    CHECK(verify_claim(ClaimId::Thm6Boolean, boolean).status == Status::Pass);

    const auto lemma = verify_claim(ClaimId::Lemma1, params(std::nullopt, 6));
    CHECK(lemma.expected == 39);
    CHECK(lemma.status == Status::Pass);

    const auto trivial = verify_claim(ClaimId::Thm1, params(1, 1));
    CHECK(trivial.computed == 1);
    CHECK(trivial.status == Status::Pass);
}

TEST_CASE("search claims") {
    const auto m2n2 = verify_claim(ClaimId::M2N2Product);
    CHECK(m2n2.status == Status::Pass);
    CHECK(m2n2.search_space.has_value());
    CHECK(verify_claim(ClaimId::Thm3M2Gap).computed == 4);
    CHECK(verify_claim(ClaimId::Thm5N2Cap).status == Status::Pass);
    ClaimParams t4 = params(std::nullopt, 3);
    for (std::size_t k = 2; k <= 4; ++k) {
        t4.letters = k;
        CHECK(verify_claim(ClaimId::Thm4, t4).status == Status::Pass);
    }
}

TEST_CASE("budget exhaustion is reported") {
    const auto r = verify_claim(ClaimId::M2N2Product, {}, 10);
    CHECK(r.status == Status::Skipped);
    CHECK(r.note.find("skipped: budget") != std::string::npos);
}

TEST_CASE("out of range parameters") {
    CHECK_THROWS_AS(verify_claim(ClaimId::Thm2, params(2, 2)), ConfigError);
    CHECK_THROWS_AS(verify_claim(ClaimId::Thm3, params(1, std::nullopt)), ConfigError);
    CHECK_THROWS_AS(verify_claim(ClaimId::Lemma1, params(std::nullopt, 2)), ConfigError);
}

TEST_CASE("reports are deterministic") {
    auto a = verify_claim(ClaimId::Table1, params(1, 3));
    auto b = verify_claim(ClaimId::Table1, params(1, 3));
    a.elapsed_ms = b.elapsed_ms = 0;
    CHECK(format_report(a) == format_report(b));
    CHECK(to_csv_row(a) == to_csv_row(b));
}

TEST_CASE("quick runs cover every claim and pass") {
    const auto runs = claim_runs(true);
    std::set<ClaimId> covered;
    for (const auto& [id, p] : runs) {
        covered.insert(id);
        CHECK(verify_claim(id, p).status == Status::Pass);
    }
    CHECK(covered.size() == all_claim_ids().size());
}

TEST_CASE("star table bounds") {
    CHECK(star_bound(1, 7) == 13);
    CHECK(star_bound(2, 4) == 9);
    CHECK(star_bound(4, 8) == 192);
    CHECK_FALSE(star_bound(2, 1).has_value());
    CHECK_FALSE(star_bound(4, 2).has_value());
    CHECK(star_bound_proven_tight(4, 6));
    CHECK_FALSE(star_bound_proven_tight(3, 5));

    const auto table = star_table(5, 8, false);
    const std::size_t row4[] = {24, 48, 96, 192};
    for (std::size_t n = 5; n <= 8; ++n) {
        const auto* cell = table.find(4, n);
        REQUIRE(cell != nullptr);
        CHECK(cell->achieved == row4[n - 5]);
    }
    CHECK(table.find(1, 7)->achieved == 13);
    CHECK(table.find(3, 6)->status() == "achieved, tightness unproven");
}

TEST_CASE("csv") {
    CHECK(csv_header() == "claim,params,expected,computed,status,elapsed_ms");
    const auto row = to_csv_row(verify_claim(ClaimId::Thm2, params(1, 3)));
    CHECK(row.rfind("thm2,m=1;n=3,4,4,pass,", 0) == 0);
}

}
