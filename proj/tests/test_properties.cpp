// Standalone randomized property suite; each law runs at least 1,000 cases.

#include <catch2/catch_amalgamated.hpp>

#include "property_checks.hpp"

using testutil::PropertyResult;

namespace {

void report(const PropertyResult& result) {
  INFO(result.first_failure);
  CHECK(result.failures == 0);
  CHECK(result.cases >= 1000);
}

}  // namespace

TEST_CASE("orbit partition laws") { report(testutil::orbit_partition_laws(101, 1000)); }

TEST_CASE("identity word law") { report(testutil::identity_word_law(102, 1000)); }

TEST_CASE("minimize idempotence") { report(testutil::minimize_idempotence(103, 1000)); }

TEST_CASE("parse/serialize round trip") { report(testutil::roundtrip_property(104, 1000)); }
