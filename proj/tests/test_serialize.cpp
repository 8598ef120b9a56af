#include <doctest.h>

#include "cylschur/serialize.hpp"

using namespace cylschur;

TEST_CASE("partition json round trip") {
    Partition p({4, 3, 2});
    CHECK(to_json(p).dump() == "[4,3,2]");
    CHECK(to_json(Partition()).dump() == "[]");
    CHECK(partition_from_json(to_json(p)) == p);
}

TEST_CASE("epoly serialization is deterministic and graded") {
    EPoly p = f_kernel(2, 0);  // 1 + e_1^2 + e_2^2
    json j = to_json(p);
    CHECK(j["n"] == 2);
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["c"] == "1");
    CHECK(j["terms"][0]["e"] == json({0, 0}));
    CHECK(j["terms"][1]["e"] == json({2, 0}));
    CHECK(j["terms"][2]["e"] == json({0, 2}));
    CHECK(to_json(p).dump() == to_json(p).dump());
}

TEST_CASE("matching and tableau round trips") {
    Matching m(5, {{1, 4}, {2, 3}});
    CHECK(matching_from_json(to_json(m)) == m);
    CHECK(to_json(m)["arcs"].dump() == "[[1,4],[2,3]]");

    Tableau t({{1, 1, 3}, {2, 2}});
    CHECK(tableau_from_json(to_json(t)) == t);
}

TEST_CASE("report serialization omits timing by default") {
    VerificationReport r = verify_identity(IdentityId::abl_odd, 1, 1, 1, 4);
    json j = to_json(r);
    CHECK(j["identity"] == "abl-odd");
    CHECK(j["equal"] == true);
    CHECK(j["discrepancy"].is_null());
    CHECK_FALSE(j.contains("ms"));
    CHECK(to_json(r, true).contains("ms"));

    VerificationReport bad = verify_identity(IdentityId::d1, 1, 1, 2, 4);
    json jb = to_json(bad);
    CHECK(jb["equal"] == false);
    CHECK(jb["discrepancy"].contains("e"));
    CHECK(jb["discrepancy"].contains("lhs"));
}

TEST_CASE("chain serialization") {
    std::vector<Partition> chain{Partition(), Partition({1}), Partition()};
    CHECK(chain_from_json(to_json(chain)) == chain);
    CHECK(to_json(chain).dump() == "[[],[1],[]]");
}
